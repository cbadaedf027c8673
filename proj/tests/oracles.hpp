#pragma once

// Brute-force reference computations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "abelcycles/group.hpp"
#include "abelcycles/trail.hpp"

namespace oracle {

using namespace abelcycles;

/// Every directed Hamiltonian cycle starting at 0, via std::next_permutation.
inline void each_cycle(const GroupSpec &g, const std::function<void(const std::vector<Element> &)> &f) {
  auto all = elements(g);
  std::vector<Element> rest(all.begin() + 1, all.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<Element> c{all[0]};
    c.insert(c.end(), rest.begin(), rest.end());
    f(c);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

inline std::set<Element> sums(const GroupSpec &g, const std::vector<Element> &c) {
  std::set<Element> s;
  for (std::size_t i = 0; i < c.size(); ++i)
    s.insert(add(g, c[i], c[(i + 1) % c.size()]));
  return s;
}

inline std::set<Element> diffs(const GroupSpec &g, const std::vector<Element> &c) {
  std::set<Element> s;
  for (std::size_t i = 0; i < c.size(); ++i)
    s.insert(sub(g, c[(i + 1) % c.size()], c[i]));
  return s;
}

inline std::int64_t order_of(const GroupSpec &g, const Element &x) {
  std::int64_t k = 1;
  Element y = x;
  while (y != zero(g)) {
    y = add(g, y, x);
    ++k;
  }
  return k;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

} // namespace oracle
