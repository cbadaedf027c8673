#include "abelcycles/constructions.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <string>

namespace abelcycles {

namespace {

using Tuple = std::vector<std::int64_t>;

void ensure(bool ok, const std::string &what, const GroupSpec &g) {
  if (!ok)
    throw ConstructionError(what + " failed its postcondition on " + g.to_string());
}

std::vector<Element> as_elements(std::vector<Tuple> tuples) {
  std::vector<Element> out;
  out.reserve(tuples.size());
  for (auto &t : tuples)
    out.emplace_back(std::move(t));
  return out;
}

// Cycle on Z/m_0 + ... + Z/m_{k-1} (any factor list, not necessarily an
// invariant-factor chain) with one distinct difference per factor.
std::vector<Tuple> min_diff_tuples(std::span<const std::int64_t> mods) {
  if (mods.empty())
    return {Tuple{}};
  std::vector<Tuple> seq;
  for (std::int64_t i = 0; i < mods.back(); ++i)
    seq.push_back(Tuple{i});
  for (std::size_t k = mods.size() - 1; k-- > 0;) {
    const std::int64_t m = mods[k];
    const std::size_t n = seq.size();
    // When |H| divides m, layer j is C rotated back by j steps and every
    // layer change (wrap included) is the new generator. Otherwise layers
    // repeat C and all changes share the single label (h_1 - h_n) + e.
    const bool rotate = static_cast<std::int64_t>(n) <= m && m % static_cast<std::int64_t>(n) == 0;
    std::vector<Tuple> next;
    next.reserve(n * static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
      std::size_t start = rotate ? (n - static_cast<std::size_t>(j) % n) % n : 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Tuple &h = seq[(start + i) % n];
        Tuple t;
        t.reserve(h.size() + 1);
        t.push_back(j);
        t.insert(t.end(), h.begin(), h.end());
        next.push_back(std::move(t));
      }
    }
    seq = std::move(next);
  }
  return seq;
}

// Odd-order cycle with few sums: zigzag on Z/(2n+1), then n+1 paths per
// added cyclic factor (the added factor becomes coordinate 0).
std::vector<Tuple> odd_smin_tuples(std::span<const std::int64_t> mods) {
  const std::int64_t f = mods.front();
  const std::int64_t n = (f - 1) / 2;
  if (mods.size() == 1) {
    std::vector<Tuple> seq{Tuple{0}};
    for (std::int64_t k = 1; k <= n; ++k) {
      seq.push_back(Tuple{k});
      seq.push_back(Tuple{f - k});
    }
    return seq;
  }
  std::vector<Tuple> ch = odd_smin_tuples(mods.subspan(1));
  auto lift = [](std::int64_t x, const Tuple &h) {
    Tuple t;
    t.reserve(h.size() + 1);
    t.push_back(x);
    t.insert(t.end(), h.begin(), h.end());
    return t;
  };
  std::vector<Tuple> seq;
  seq.reserve(ch.size() * static_cast<std::size_t>(f));
  for (const Tuple &h : ch)
    seq.push_back(lift(0, h));
  for (std::int64_t k = 1; k <= n; ++k) {
    // h_i gets +k for odd (1-based) i in the first half, -k in the second
    for (int half = 0; half < 2; ++half)
      for (std::size_t i = 0; i < ch.size(); ++i) {
        bool plus = (i % 2 == 0) == (half == 0);
        seq.push_back(lift(plus ? k : f - k, ch[i]));
      }
  }
  return seq;
}

} // namespace

std::size_t even_smin_value(const GroupSpec &g) {
  if (g.order() % 2 != 0)
    throw std::invalid_argument("even_smin_value: odd order");
  if (g.order() == 2)
    return 1;
  return g.factor(0) == 2 ? g.rank() : g.rank() + 1;
}

Trail min_diff_cycle(const GroupSpec &g) {
  if (g.order() < 2)
    throw std::invalid_argument("min_diff_cycle: trivial group has no cycles");
  Trail t(g, as_elements(min_diff_tuples(g.factors())), TrailKind::cyclic);
  ensure(t.is_hamiltonian() && diff_labels(t).distinct_count() == g.rank(), "min_diff_cycle", g);
  return t;
}

Trail interleaved_even_cycle(const GroupSpec &g) {
  if (g.order() % 2 != 0)
    throw std::invalid_argument("interleaved_even_cycle: " + g.to_string() + " has odd order");
  if (g.order() == 2)
    return Trail(g, {Element{0}, Element{1}}, TrailKind::cyclic);

  const std::size_t r = g.rank();
  std::vector<std::int64_t> hmods;
  Element s = zero(g);
  std::function<Element(const Tuple &)> embed;
  if (g.factor(0) == 2) {
    // H = {x : x_0 = 0}, rank r - 1
    hmods.assign(g.factors().begin() + 1, g.factors().end());
    embed = [](const Tuple &c) {
      Tuple t{0};
      t.insert(t.end(), c.begin(), c.end());
      return Element(std::move(t));
    };
    s[0] = 1;
  } else {
    // H = {x : x_{r-1} even}, isomorphic to (m_1, ..., m_{r-1}, m_r / 2), rank r
    hmods.assign(g.factors().begin(), g.factors().end());
    hmods.back() /= 2;
    embed = [](const Tuple &c) {
      Tuple t = c;
      t.back() *= 2;
      return Element(std::move(t));
    };
    s[r - 1] = 1;
  }
  std::vector<Element> v;
  v.reserve(static_cast<std::size_t>(g.order()));
  for (const Tuple &c : min_diff_tuples(hmods)) {
    Element h = embed(c);
    v.push_back(h);
    v.push_back(sub(g, s, h));
  }
  Trail t(g, std::move(v), TrailKind::cyclic);
  ensure(t.is_hamiltonian() && sum_labels(t).distinct_count() == even_smin_value(g),
         "interleaved_even_cycle", g);
  return t;
}

Trail odd_smin_cycle(const GroupSpec &g) {
  if (g.order() % 2 == 0)
    throw std::invalid_argument("odd_smin_cycle: " + g.to_string() + " has even order");
  if (g.order() < 3)
    throw std::invalid_argument("odd_smin_cycle: trivial group");
  Trail t(g, as_elements(odd_smin_tuples(g.factors())), TrailKind::cyclic);
  const std::size_t s = sum_labels(t).distinct_count();
  ensure(t.is_hamiltonian() && s <= 2 * g.rank() + 1 && (g.rank() > 1 || s == 3),
         "odd_smin_cycle", g);
  return t;
}

Trail rs_cycle_odd(const GroupSpec &g) {
  if (g.order() % 2 == 0)
    throw std::invalid_argument("rs_cycle_odd: " + g.to_string() + " has even order");
  if (g.order() < 3)
    throw std::invalid_argument("rs_cycle_odd: trivial group");
  // Lexicographic order: for Z/n it is (0, 1, ..., n-1) with sums 2i+1;
  // each added factor repeats the previous cycle per residue, and since 2 is
  // invertible the layer sums (s, 2j) and the single crossing label
  // h_n + h_1 with residues 2j+1, j < m-1, and m-1 never collide.
  Trail t(g, elements(g), TrailKind::cyclic);
  ensure(is_rs_cycle(t), "rs_cycle_odd", g);
  return t;
}

Trail rs_path(const GroupSpec &g) {
  if (g.order() < 2)
    throw std::invalid_argument("rs_path: trivial group");
  EvenSplit split = decompose_even(g);
  const std::int64_t c = split.cyclic_order();
  const std::int64_t m = c / 2;

  std::vector<Element> hs;
  if (split.odd_part().order() == 1)
    hs.push_back(zero(split.odd_part()));
  else
    hs = rs_cycle_odd(split.odd_part()).vertices();

  // P' = (0, m, 1, m+1, ..., m-1, 2m-1) and P'' = (m, 0, m+1, 1, ...)
  std::vector<std::int64_t> p1, p2;
  for (std::int64_t i = 0; i < m; ++i) {
    p1.push_back(i);
    p1.push_back(m + i);
    p2.push_back(m + i);
    p2.push_back(i);
  }
  std::vector<Element> v;
  v.reserve(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::int64_t p : (i % 2 == 0 ? p1 : p2))
      v.push_back(split.combine(hs[i], p));
  Trail t(g, std::move(v), TrailKind::open);
  ensure(t.is_hamiltonian() && is_rs_path(t), "rs_path", g);
  return t;
}

Trail elementary8_cycle(const GroupSpec &g) {
  if (g != GroupSpec({2, 2, 2}))
    throw std::invalid_argument("elementary8_cycle: needs Z2 x Z2 x Z2, got " + g.to_string());
  const Element g1{1, 0, 0}, g2{0, 1, 0}, g3{0, 0, 1};
  std::vector<Element> v{zero(g),
                         g1,
                         g2,
                         g3,
                         add(g, g1, g2),
                         add(g, add(g, g1, g2), g3),
                         add(g, g1, g3),
                         add(g, g2, g3)};
  Trail t(g, std::move(v), TrailKind::cyclic);
  ensure(t.is_hamiltonian() && sum_labels(t).distinct_count() == 6, "elementary8_cycle", g);
  return t;
}

Trail zigzag_rd_path_cyclic_even(const GroupSpec &g) {
  if (!g.is_cyclic() || g.order() % 2 != 0 || g.order() < 2)
    throw std::invalid_argument("zigzag_rd_path_cyclic_even: needs cyclic even order, got " +
                                g.to_string());
  const std::int64_t n = g.order();
  std::vector<Element> v{Element{0}};
  for (std::int64_t k = 1; static_cast<std::int64_t>(v.size()) < n; ++k) {
    v.push_back(Element{k});
    if (static_cast<std::int64_t>(v.size()) < n)
      v.push_back(Element{n - k});
  }
  Trail t(g, std::move(v), TrailKind::open);
  ensure(t.is_hamiltonian() && is_rd_path(t), "zigzag_rd_path_cyclic_even", g);
  return t;
}

} // namespace abelcycles
