#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abelcycles/group.hpp"
#include "abelcycles/report.hpp"

namespace abelcycles {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

/// One executable check of a proven statement against one group.
/// Ids: T1 dmin, T2 dmax, T3 drnd, T4 smin, T5 cyclic smin, T6 smax,
/// T7 srnd, C1 chain-cycle count, L-S2 two-element connection sets,
/// P-conn connectivity criterion.
struct VerificationRecord {
  std::string id;
  GroupSpec group;
  std::string predicted;
  std::string measured;
  Verdict verdict = Verdict::inconclusive;
};

struct VerifyOptions {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  /// Largest order that is exhaustively enumerated.
  std::int64_t cap = 12;
  /// Largest order for the chain-cycle check (filtered enumeration).
  std::int64_t chain_cap = 8;
};

std::vector<VerificationRecord> verify_group(const GroupSpec &g, const VerifyOptions &opts = {});

/// True when G is the direct sum of an odd-order group and a non-cyclic
/// group of order 8, where the dmax bound need not be attained.
bool dmax_exceptional(const GroupSpec &g);

/// Three-case smax value.
std::int64_t smax_formula(const GroupSpec &g);
/// dmax bound: |G| - 1 if Sigma(G) != 0, else |G| - 2.
std::int64_t dmax_bound(const GroupSpec &g);

Json record_to_json(const VerificationRecord &r);
std::string record_csv_header();
std::string record_csv_row(const VerificationRecord &r);

/// fail beats inconclusive beats pass.
Verdict combine(const std::vector<VerificationRecord> &records);

} // namespace abelcycles
