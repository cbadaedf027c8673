#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelcycles/group.hpp"
#include "abelcycles/rational.hpp"
#include "abelcycles/trail.hpp"

namespace abelcycles {

/// Outcome of a bounded search. `nonexistent` is only reported after the
/// whole search space was exhausted; running out of nodes is `exhausted`.
enum class SearchStatus { found, nonexistent, exhausted };

std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Trail> witness;
  std::uint64_t nodes = 0;
};

inline constexpr std::int64_t default_enumeration_cap = 12;

/// Vertex-index cycles (anchored at 0) handed to enumeration visitors.
using CycleVisitor = std::function<void(std::span<const std::uint32_t>)>;

/// Visits every directed Hamiltonian cycle of the complete digraph on G
/// exactly once, anchored at vertex 0, in lexicographic order of the
/// remaining permutation. With `second` set, only the shard whose second
/// vertex is `second` is visited. Throws std::invalid_argument when
/// |G| < 2 or |G| > cap.
void for_each_cycle(const IndexedGroup &g, const CycleVisitor &visit,
                    std::optional<std::uint32_t> second = std::nullopt,
                    std::int64_t cap = default_enumeration_cap);

/// Materialised enumeration; intended for small groups only.
std::vector<Trail> enumerate_cycles(const GroupSpec &g,
                                    std::int64_t cap = default_enumeration_cap);

Trail trail_from_indices(const IndexedGroup &g, std::span<const std::uint32_t> vertices,
                         TrailKind kind);

struct ExtremalReport {
  GroupSpec group;
  std::size_t dmin = 0, dmax = 0, smin = 0, smax = 0;
  /// Keys "dmin", "dmax", "smin", "smax"; each is the first cycle in
  /// enumeration order attaining the value.
  std::map<std::string, Trail> witnesses;
  std::uint64_t cycle_count = 0;
  Rational avg_distinct_diffs;
  Rational avg_distinct_sums;
};

struct ScanOptions {
  std::int64_t cap = default_enumeration_cap;
  unsigned threads = 1;
};

/// Exhaustive scan over all (n-1)! cycles. Results do not depend on the
/// thread count.
ExtremalReport extremal_scan(const GroupSpec &g, const ScanOptions &opts = {});

/// Backtracking for a rainbow-difference Hamiltonian path (anchored at 0;
/// differences are translation invariant).
SearchResult find_rd_path(const GroupSpec &g, std::uint64_t budget);
/// Backtracking for a rainbow-sum Hamiltonian cycle.
SearchResult find_rs_cycle(const GroupSpec &g, std::uint64_t budget);
/// Backtracking for a rainbow-difference cycle on the non-zero elements.
SearchResult find_rd_cycle_nonzero(const GroupSpec &g, std::uint64_t budget);

} // namespace abelcycles
