// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "abelcycles/cayley.hpp"
#include "abelcycles/constructions.hpp"
#include "abelcycles/expectation.hpp"
#include "abelcycles/report.hpp"
#include "abelcycles/search.hpp"
#include "abelcycles/verify.hpp"

using namespace abelcycles;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string &what) {
    if (!cond) {
      if (ok)
        detail << "first failure: " << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &title, const std::function<void(Check &)> &body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception &e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %d: %s [%.2fs] %s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              c.detail.str().c_str());
  std::fflush(stdout);
  failures += !c.ok;
}

std::map<GroupSpec, ExtremalReport> scans;

const ExtremalReport &scan(const GroupSpec &g) {
  auto it = scans.find(g);
  if (it == scans.end())
    it = scans.emplace(g, extremal_scan(g, {10, 1})).first;
  return it->second;
}

} // namespace

int main() {
  const auto small = enumerate_abelian_groups(3, 10);

  criterion(1, "dmin = rk(G) on orders 3-10; min_diff_cycle |D| = rk(G) up to order 512",
            [&](Check &c) {
              c.require(small.size() == 12, "expected 12 groups of order 3-10");
              for (const auto &g : small)
                c.require(scan(g).dmin == g.rank(), "scan dmin on " + g.to_string());
              std::size_t built = 0;
              for (const auto &g : enumerate_abelian_groups(2, 512)) {
                c.require(diff_labels(min_diff_cycle(g)).distinct_count() == g.rank(),
                          "construction on " + g.to_string());
                ++built;
              }
              c.detail << "12 scans, " << built << " constructions";
            });

  criterion(2, "dmax equals the bound off the exceptional family, at most the bound on it",
            [&](Check &c) {
              for (const auto &g : small) {
                const auto m = static_cast<std::int64_t>(scan(g).dmax);
                if (dmax_exceptional(g)) {
                  c.require(m <= dmax_bound(g), "upper bound on " + g.to_string());
                  c.detail << g.to_string() << " dmax=" << m << " (bound " << dmax_bound(g)
                           << ") ";
                } else {
                  c.require(m == dmax_bound(g), "equality on " + g.to_string());
                }
              }
            });

  criterion(3, "smax matches the three-case formula on orders 3-10", [&](Check &c) {
    for (const auto &g : small)
      c.require(static_cast<std::int64_t>(scan(g).smax) == smax_formula(g),
                "smax on " + g.to_string());
  });

  criterion(4, "smin closed form for even groups, 3 for odd cyclic, (3,3) in [3,5]",
            [&](Check &c) {
              std::size_t even = 0;
              for (const auto &g : enumerate_abelian_groups(4, 16)) {
                if (g.order() % 2)
                  continue;
                auto r = smin_exact(g);
                const std::size_t want = g.factor(0) == 2 ? g.rank() : g.rank() + 1;
                c.require(r.exact && r.value == want, "even closed form on " + g.to_string());
                ++even;
              }
              for (std::int64_t n : {4, 6, 8, 10}) {
                auto r = smin_exact(GroupSpec({n}));
                c.require(r.exact && r.value == 2, "value 2 on Z" + std::to_string(n));
              }
              for (std::int64_t n : {3, 5, 7, 9}) {
                auto r = smin_exact(GroupSpec({n}));
                c.require(r.exact && r.value == 3, "value 3 on Z" + std::to_string(n));
              }
              auto r = smin_exact(GroupSpec({3, 3}));
              c.require(r.exact && r.value >= 3 && r.value <= 5, "(3,3) in [3,5]");
              c.detail << even << " even groups; (3,3) smin = " << r.value;
            });

  criterion(5, "drnd and srnd equal the enumeration averages on orders 3-10", [&](Check &c) {
    for (const auto &g : small) {
      c.require(drnd_exact(g) == scan(g).avg_distinct_diffs, "drnd on " + g.to_string());
      c.require(srnd_exact(g) == scan(g).avg_distinct_sums, "srnd on " + g.to_string());
    }
    c.detail << "Z4: " << to_string(drnd_exact(GroupSpec({4}))) << ", "
             << to_string(srnd_exact(GroupSpec({4})));
  });

  criterion(6, "|exact - (1 - 1/e) n| <= 2.0 for both modes on orders 3-32", [&](Check &c) {
    Rational worst = 0;
    std::string where;
    for (const auto &g : enumerate_abelian_groups(3, 32))
      for (LabelMode m : {LabelMode::sum, LabelMode::diff}) {
        Rational a = abs(asymptotic_residual(g, m).approx);
        c.require(a <= 2, "residual on " + g.to_string() + " " + to_string(m));
        if (a > worst) {
          worst = a;
          where = g.to_string() + " " + to_string(m);
        }
      }
    c.detail << "largest |residual| " << to_decimal(worst, 6) << " at " << where;
  });

  criterion(7, "chain-cycle closed form equals filtered enumeration, |A| <= 3, order <= 7",
            [&](Check &c) {
              std::size_t cases = 0;
              for (const auto &g : enumerate_abelian_groups(2, 7)) {
                IndexedGroup ig(g);
                const std::uint32_t n = ig.size();
                std::vector<std::vector<std::uint32_t>> sets{{}};
                for (std::uint32_t a = 0; a < n; ++a) {
                  sets.push_back({a});
                  for (std::uint32_t b = a + 1; b < n; ++b) {
                    sets.push_back({a, b});
                    for (std::uint32_t d = b + 1; d < n; ++d)
                      sets.push_back({a, b, d});
                  }
                }
                for (std::uint32_t x = 1; x < n; ++x) {
                  std::vector<std::uint64_t> seen(sets.size(), 0);
                  std::vector<std::uint32_t> next(n);
                  for_each_cycle(
                      ig,
                      [&](std::span<const std::uint32_t> cyc) {
                        for (std::size_t i = 0; i < cyc.size(); ++i)
                          next[cyc[i]] = cyc[(i + 1) % cyc.size()];
                        for (std::size_t k = 0; k < sets.size(); ++k) {
                          bool ok = true;
                          for (std::uint32_t v : sets[k])
                            ok = ok && next[v] == ig.add(v, x);
                          seen[k] += ok;
                        }
                      },
                      std::nullopt, 7);
                  for (std::size_t k = 0; k < sets.size(); ++k) {
                    std::set<Element> a;
                    for (std::uint32_t v : sets[k])
                      a.insert(ig.element(v));
                    c.require(count_chain_cycles(g, ig.element(x), a) ==
                                  BigInt(std::to_string(seen[k])),
                              "chain count on " + g.to_string());
                    ++cases;
                  }
                }
              }
              c.detail << cases << " (g, A) cases";
            });

  criterion(8, "two-element classification agrees with exact Hamiltonicity on orders 3-12",
            [&](Check &c) {
              std::size_t sets = 0;
              for (const auto &g : enumerate_abelian_groups(3, 12)) {
                auto all = elements(g);
                for (std::size_t i = 0; i < all.size(); ++i)
                  for (std::size_t j = i; j < all.size(); ++j) {
                    std::set<Element> s{all[i], all[j]};
                    auto h = is_hamiltonian_cayley(g, s);
                    c.require(h.verdict != HamiltonVerdict::exhausted, "exhausted");
                    c.require(classify_small_connection_set(g, s) ==
                                  (h.verdict == HamiltonVerdict::hamiltonian),
                              "classification on " + g.to_string());
                    ++sets;
                  }
              }
              for (std::int64_t n = 3; n <= 11; n += 4) {
                GroupSpec g({n});
                std::set<Element> s{Element{0}, Element{1 % n}, Element{3 % n}};
                c.require(is_hamiltonian_cayley(g, s).verdict == HamiltonVerdict::not_hamiltonian,
                          "{0,1,3} on Z" + std::to_string(n));
              }
              for (std::int64_t n = 3; n <= 12; ++n)
                for (std::int64_t a = 0; a < n; ++a)
                  for (std::int64_t b = a + 1; b < n; ++b)
                    if (std::gcd(b - a, n) == 1) {
                      std::set<Element> s{Element{a}, Element{b}};
                      c.require(is_hamiltonian_cayley(GroupSpec({n}), s).verdict ==
                                    HamiltonVerdict::not_hamiltonian,
                                "coprime difference on Z" + std::to_string(n));
                    }
              c.detail << sets << " connection sets";
            });

  criterion(9, "rs_path, odd_smin_cycle and elementary8_cycle self-verify up to order 512",
            [&](Check &c) {
              std::size_t paths = 0, odd = 0;
              for (const auto &g : enumerate_abelian_groups(2, 512)) {
                if (sigma(g) != zero(g)) {
                  Trail p = rs_path(g);
                  c.require(p.is_hamiltonian() && is_rs_path(p), "rs_path on " + g.to_string());
                  ++paths;
                }
                if (g.order() % 2 == 1) {
                  Trail t = odd_smin_cycle(g);
                  c.require(t.is_hamiltonian() &&
                                sum_labels(t).distinct_count() <= 2 * g.rank() + 1,
                            "odd_smin_cycle on " + g.to_string());
                  ++odd;
                }
              }
              c.require(sum_labels(elementary8_cycle(GroupSpec({2, 2, 2}))).distinct_count() == 6,
                        "six sums on Z2^3");
              c.detail << paths << " paths, " << odd << " odd cycles";
            });

  criterion(10, "Monte Carlo within 4 standard errors on orders 8, 12, 16; seeds reproducible",
            [&](Check &c) {
              double worst = 0;
              std::size_t runs = 0;
              for (std::int64_t n : {8, 12, 16})
                for (const auto &g : enumerate_abelian_groups(n))
                  for (LabelMode m : {LabelMode::sum, LabelMode::diff}) {
                    const double exact = expectation_exact(g, m).get_d();
                    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
                      auto est = monte_carlo(g, m, 100000, seed);
                      const double z = std::abs(est.mean - exact) / est.std_error;
                      worst = std::max(worst, z);
                      c.require(z <= 4.0, "estimate on " + g.to_string());
                      ++runs;
                    }
                    auto a = mc_to_json(monte_carlo(g, m, 100000, 7)).dump();
                    auto b = mc_to_json(monte_carlo(g, m, 100000, 7, 2)).dump();
                    c.require(a == b, "reproducibility on " + g.to_string());
                  }
              char buf[64];
              std::snprintf(buf, sizeof buf, "%zu runs, largest |z| %.3f", runs, worst);
              c.detail << buf;
            });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
