#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "abelcycles/group.hpp"
#include "abelcycles/search.hpp"
#include "abelcycles/trail.hpp"

namespace abelcycles {

/// Addition Cayley graph Cay+(G, S): g ~ h (g != h) iff g + h is in S.
/// Vertices are element indices (see element_at).
struct CayleyGraph {
  GroupSpec group;
  std::set<Element> connection_set;
  std::vector<std::vector<std::uint32_t>> adjacency; // sorted
  std::vector<std::uint32_t> loops;                  // vertices with 2g in S

  bool adjacent(std::uint32_t a, std::uint32_t b) const;
  std::size_t edge_count() const;
};

CayleyGraph build_cayley(const GroupSpec &g, const std::set<Element> &s);

/// Connectivity from the subgroup H generated by S - S: connected iff
/// H = G, or H has index 2 and S avoids H.
bool is_connected_cayley_structural(const GroupSpec &g, const std::set<Element> &s);
/// Connectivity by breadth-first search from 0.
bool is_connected_cayley_bfs(const GroupSpec &g, const std::set<Element> &s);

/// Subgroup generated by a set of elements, as a sorted index list.
std::vector<std::uint32_t> generated_subgroup(const IndexedGroup &g,
                                              const std::vector<std::uint32_t> &gens);

enum class HamiltonVerdict { hamiltonian, not_hamiltonian, exhausted };

struct HamiltonResult {
  HamiltonVerdict verdict = HamiltonVerdict::exhausted;
  std::optional<Trail> witness; // cycle C with S(C) inside S
  std::uint64_t nodes = 0;
};

struct HamiltonOptions {
  /// Bitmask dynamic programming is used up to this many vertices.
  std::uint32_t dp_gate = 24;
  /// Node budget for the backtracking path (ignored by the DP path).
  std::uint64_t budget = 100'000'000;
};

/// Exact Hamiltonicity of Cay+(G, S). Two vertices joined by an edge count
/// as a Hamiltonian 2-cycle.
HamiltonResult is_hamiltonian_cayley(const GroupSpec &g, const std::set<Element> &s,
                                     const HamiltonOptions &opts = {});

/// Closed-form decision for |S| <= 2 and |G| >= 3: Hamiltonian iff |S| = 2,
/// s2 - s1 has order |G|/2 and <s2 - s1> misses S.
bool classify_small_connection_set(const GroupSpec &g, const std::set<Element> &s);

struct SminOptions {
  std::uint64_t budget = 100'000'000;
  std::uint32_t dp_gate = 24;
  /// Start at k = 1 instead of the proven lower bound.
  bool from_one = false;
};

struct SminResult {
  bool exact = false;
  std::size_t value = 0; // meaningful when exact
  std::size_t lower = 0, upper = 0;
  std::set<Element> witness_set;
  std::optional<Trail> witness_cycle;
  std::uint64_t nodes = 0;
  std::uint64_t sets_tested = 0;
};

/// Proven bounds: lower rk(G) (rk(G)+1 when m_1 > 2, and at least 2 once
/// |G| >= 3); upper from the explicit constructions.
std::pair<std::size_t, std::size_t> smin_bounds(const GroupSpec &g);

/// Least |S| with Cay+(G, S) Hamiltonian, searching k-subsets upwards from
/// the lower bound modulo the translation S -> S + 2t. On budget exhaustion
/// `exact` is false and [lower, upper] brackets the value.
SminResult smin_exact(const GroupSpec &g, const SminOptions &opts = {});

} // namespace abelcycles
