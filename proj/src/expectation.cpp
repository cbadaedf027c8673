#include "abelcycles/expectation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace abelcycles {

std::string to_string(LabelMode m) { return m == LabelMode::sum ? "sum" : "diff"; }

LabelMode parse_label_mode(std::string_view text) {
  if (text == "sum")
    return LabelMode::sum;
  if (text == "diff")
    return LabelMode::diff;
  throw std::invalid_argument("mode must be 'sum' or 'diff', got '" + std::string(text) + "'");
}

namespace {

std::vector<BigInt> factorials(std::int64_t n) {
  std::vector<BigInt> f(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)) + 1);
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i)
    f[i] = f[i - 1] * static_cast<unsigned long>(i);
  return f;
}

BigInt pow2(std::int64_t j) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(j));
  return r;
}

// Sum_{j=1}^{n-1} (-1)^{j+1} (n-j-1)! N_j + (-1)^{n+1} tau, with N_j for order d.
BigInt diff_count_for_order(std::int64_t n, std::int64_t d, const std::vector<BigInt> &fact) {
  BigInt total = 0;
  for (std::int64_t j = 1; j <= n - 1; ++j) {
    BigInt term = fact[static_cast<std::size_t>(n - j - 1)] * n_j_diff(n, d, j);
    if (j % 2 == 1)
      total += term;
    else
      total -= term;
  }
  if (d == n)
    total += (n % 2 == 1) ? 1 : -1;
  return total;
}

// Sum_{j>=1} (-1)^{j+1} (n-j-1)! C(m, j) 2^j
BigInt sum_alternating(std::int64_t n, std::int64_t m, const std::vector<BigInt> &fact) {
  BigInt total = 0;
  for (std::int64_t j = 1; j <= m && j <= n - 1; ++j) {
    BigInt term = fact[static_cast<std::size_t>(n - j - 1)] * binomial(m, j) * pow2(j);
    if (j % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

bool in_doubled_subgroup(const GroupSpec &g, const Element &x) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.factor(i) % 2 == 0 && x[i] % 2 != 0)
      return false;
  return true;
}

void require_member(const GroupSpec &g, const Element &x) {
  if (!contains(g, x))
    throw std::invalid_argument(to_string(x) + " is not an element of " + g.to_string());
}

} // namespace

BigInt n_j_diff(std::int64_t n, std::int64_t d, std::int64_t j) {
  if (d < 2 || n < 1 || n % d != 0)
    throw std::invalid_argument("n_j_diff: d = " + std::to_string(d) + " must divide n = " +
                                std::to_string(n) + " and be at least 2");
  BigInt total = 0;
  for (std::int64_t i = 0; i * d <= j; ++i) {
    BigInt term = binomial(n / d, i) * binomial(n - i * d, j - i * d);
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt count_cycles_with_diff(const GroupSpec &g, const Element &x) {
  require_member(g, x);
  if (x == zero(g))
    throw std::invalid_argument("count_cycles_with_diff: the label must be non-zero");
  const std::int64_t n = g.order();
  return diff_count_for_order(n, element_order(g, x), factorials(n));
}

Rational drnd_exact(const GroupSpec &g) {
  const std::int64_t n = g.order();
  if (n < 2)
    throw std::invalid_argument("drnd needs |G| >= 2");
  if (n == 2)
    return 1;
  auto fact = factorials(n);
  BigInt total = 0;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0)
      continue;
    std::int64_t k = count_by_order(g, d);
    if (k != 0)
      total += BigInt(static_cast<long>(k)) * diff_count_for_order(n, d, fact);
  }
  Rational r(total, fact[static_cast<std::size_t>(n - 1)]);
  r.canonicalize();
  return r;
}

BigInt n_j_sum(std::int64_t n, std::int64_t n0, std::int64_t j, bool in_2g) {
  if (n < 3 || n0 < 1 || n % n0 != 0)
    throw std::invalid_argument("n_j_sum: need n >= 3 and n0 dividing n");
  if (!in_2g && n % 2 != 0)
    throw std::invalid_argument("n_j_sum: every element lies in 2G when n is odd");
  if (n % 2 != 0 && n0 != 1)
    throw std::invalid_argument("n_j_sum: odd n has n0 = 1");
  const std::int64_t m = in_2g ? (n - n0) / 2 : n / 2;
  if (j < 0 || j > m)
    return 0;
  return binomial(m, j) * pow2(j);
}

BigInt count_cycles_with_sum(const GroupSpec &g, const Element &x) {
  require_member(g, x);
  const std::int64_t n = g.order();
  if (n < 2)
    throw std::invalid_argument("count_cycles_with_sum needs |G| >= 2");
  if (n == 2)
    return x[0] == 1 ? 1 : 0;
  const std::int64_t n0 = two_torsion_count(g);
  const bool in2g = in_doubled_subgroup(g, x);
  return sum_alternating(n, in2g ? (n - n0) / 2 : n / 2, factorials(n));
}

Rational srnd_exact(const GroupSpec &g) {
  const std::int64_t n = g.order();
  if (n < 2)
    throw std::invalid_argument("srnd needs |G| >= 2");
  if (n == 2)
    return 1;
  auto fact = factorials(n);
  const std::int64_t n0 = two_torsion_count(g);
  BigInt total = BigInt(static_cast<long>(n / n0)) * sum_alternating(n, (n - n0) / 2, fact);
  if (n % 2 == 0)
    total += BigInt(static_cast<long>(n - n / n0)) * sum_alternating(n, n / 2, fact);
  Rational r(total, fact[static_cast<std::size_t>(n - 1)]);
  r.canonicalize();
  return r;
}

BigInt count_chain_cycles(const GroupSpec &g, const Element &x, const std::set<Element> &a) {
  require_member(g, x);
  for (const Element &e : a)
    require_member(g, e);
  if (x == zero(g))
    throw std::invalid_argument("count_chain_cycles: the label must be non-zero");
  const std::int64_t n = g.order();
  const std::int64_t d = element_order(g, x);
  if (static_cast<std::int64_t>(a.size()) == n && d == n)
    return 1;
  for (const Element &e : a) {
    Element y = e;
    bool whole_coset = true;
    for (std::int64_t k = 1; k < d && whole_coset; ++k) {
      y = add(g, y, x);
      whole_coset = a.count(y) != 0;
    }
    if (whole_coset)
      return 0;
  }
  return factorial(n - static_cast<std::int64_t>(a.size()) - 1);
}

Rational inverse_e_approx() {
  Rational r = 0;
  BigInt f = 1;
  for (int k = 0; k <= 40; ++k) {
    if (k > 0)
      f *= k;
    Rational term(1, f);
    term.canonicalize();
    if (k % 2 == 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

Residual asymptotic_residual(const GroupSpec &g, LabelMode m, int digits) {
  if (g.order() < 3)
    throw std::invalid_argument("asymptotic_residual needs |G| >= 3");
  Residual r;
  r.exact = expectation_exact(g, m);
  r.approx = r.exact - (Rational(1) - inverse_e_approx()) * Rational(static_cast<long>(g.order()));
  r.decimal = to_decimal(r.approx, digits);
  return r;
}

std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Lemire's multiply-and-reject bounded integer in [0, bound).
std::uint64_t bounded(std::uint64_t &state, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(splitmix64(state)) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(splitmix64(state)) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

struct McShard {
  std::uint64_t sum = 0, sumsq = 0;
};

McShard run_shard(const IndexedGroup &ig, LabelMode mode, std::uint64_t seed,
                  std::uint64_t shard, std::uint64_t count) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (shard + 1));
  state = splitmix64(state);
  const std::uint32_t n = ig.size();
  std::vector<std::uint32_t> perm(n - 1);
  for (std::uint32_t i = 0; i + 1 < n; ++i)
    perm[i] = i + 1;
  std::vector<std::uint64_t> stamp(n, 0);
  McShard out;
  for (std::uint64_t t = 1; t <= count; ++t) {
    for (std::size_t i = perm.size() - 1; i > 0; --i)
      std::swap(perm[i], perm[bounded(state, i + 1)]);
    std::uint64_t distinct = 0;
    std::uint32_t prev = 0;
    auto mark = [&](std::uint32_t a, std::uint32_t b) {
      const std::uint32_t l = mode == LabelMode::sum ? ig.add(a, b) : ig.sub(b, a);
      if (stamp[l] != t) {
        stamp[l] = t;
        ++distinct;
      }
    };
    for (std::uint32_t v : perm) {
      mark(prev, v);
      prev = v;
    }
    mark(prev, 0);
    out.sum += distinct;
    out.sumsq += distinct * distinct;
  }
  return out;
}

} // namespace

McEstimate monte_carlo(const GroupSpec &g, LabelMode m, std::uint64_t trials, std::uint64_t seed,
                       unsigned threads) {
  if (trials < 1)
    throw std::invalid_argument("monte_carlo needs at least one trial");
  if (g.order() < 3)
    throw std::invalid_argument("monte_carlo needs |G| >= 3");
  IndexedGroup ig(g);
  const std::uint64_t shards = (trials + mc_shard_size - 1) / mc_shard_size;
  std::vector<McShard> results(shards);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t s; (s = next.fetch_add(1)) < shards;) {
      const std::uint64_t count = std::min(mc_shard_size, trials - s * mc_shard_size);
      results[s] = run_shard(ig, m, seed, s, count);
    }
  };
  const auto nthreads = static_cast<unsigned>(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(threads, shards)));
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back(work);
  }

  BigInt sum = 0, sumsq = 0;
  for (const McShard &r : results) {
    sum += BigInt(std::to_string(r.sum));
    sumsq += BigInt(std::to_string(r.sumsq));
  }
  const BigInt t(std::to_string(trials));
  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.mean_exact = Rational(sum, t);
  est.mean_exact.canonicalize();
  est.mean = est.mean_exact.get_d();
  if (trials > 1) {
    Rational var = (Rational(sumsq) - Rational(sum * sum, t)) / Rational(t - 1);
    est.var_of_mean = var / Rational(t);
    est.var_of_mean.canonicalize();
  } else {
    est.var_of_mean = 0;
  }
  est.std_error = std::sqrt(est.var_of_mean.get_d());
  return est;
}

} // namespace abelcycles
