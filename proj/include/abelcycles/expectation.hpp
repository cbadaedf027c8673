#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "abelcycles/group.hpp"
#include "abelcycles/rational.hpp"

namespace abelcycles {

enum class LabelMode { sum, diff };

std::string to_string(LabelMode m);
/// "sum" / "diff"; throws std::invalid_argument otherwise.
LabelMode parse_label_mode(std::string_view text);

/// Number of j-subsets of a group of order n that contain no coset of a
/// cyclic subgroup of order d. Throws when d does not divide n or d < 2.
BigInt n_j_diff(std::int64_t n, std::int64_t d, std::int64_t j);

/// |{C : g in D(C)}| over all (n-1)! Hamiltonian cycles, by inclusion-exclusion.
BigInt count_cycles_with_diff(const GroupSpec &g, const Element &x);

/// Expected |D(C)| for a uniformly random Hamiltonian cycle.
Rational drnd_exact(const GroupSpec &g);

/// Number of j-subsets A containing no pair a' != a'' with a' + a'' = x and
/// no a with 2a = x, where x lies in 2G or not as flagged. n0 is |{y : 2y = 0}|.
BigInt n_j_sum(std::int64_t n, std::int64_t n0, std::int64_t j, bool in_2g);

/// |{C : x in S(C)}|.
BigInt count_cycles_with_sum(const GroupSpec &g, const Element &x);

/// Expected |S(C)| for a uniformly random Hamiltonian cycle.
Rational srnd_exact(const GroupSpec &g);

inline Rational expectation_exact(const GroupSpec &g, LabelMode m) {
  return m == LabelMode::sum ? srnd_exact(g) : drnd_exact(g);
}

/// Number of Hamiltonian cycles in which every a in A is followed by a + x.
BigInt count_chain_cycles(const GroupSpec &g, const Element &x, const std::set<Element> &a);

/// 1/e truncated after enough series terms to be exact at 30 digits.
Rational inverse_e_approx();

struct Residual {
  Rational exact;       // the expectation
  Rational approx;      // exact - (1 - 1/e) n with 1/e from inverse_e_approx
  std::string decimal;  // approx rounded to `digits` places
};

Residual asymptotic_residual(const GroupSpec &g, LabelMode m, int digits = 12);

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Rational mean_exact;     // sample total / trials
  Rational var_of_mean;    // unbiased sample variance / trials; std_error is its root
};

/// Trials per independently seeded shard.
inline constexpr std::uint64_t mc_shard_size = 4096;

/// Samples cycles (0, pi(G \ {0})) with pi a uniform shuffle. The result
/// depends only on (G, mode, trials, seed), not on `threads`.
McEstimate monte_carlo(const GroupSpec &g, LabelMode m, std::uint64_t trials,
                       std::uint64_t seed, unsigned threads = 1);

/// SplitMix64 step; the Monte Carlo generator and the shard seed derivation.
std::uint64_t splitmix64(std::uint64_t &state);

} // namespace abelcycles
