#include "abelcycles/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abelcycles {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
    throw std::overflow_error("group order overflows 64 bits");
  return a * b;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

void check_member(const GroupSpec &g, const Element &e) {
  if (e.size() != g.rank())
    throw std::invalid_argument("element " + to_string(e) +
                                " has wrong length for " + g.to_string());
}

// Partitions of a into non-increasing parts, in reverse lexicographic order.
void partitions(int a, int max_part, std::vector<int> &cur,
                std::vector<std::vector<int>> &out) {
  if (a == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(a, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(a - p, p, cur, out);
    cur.pop_back();
  }
}

} // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  order_ = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    order_ = checked_mul(order_, factors_[i]);
  }
}

bool GroupSpec::is_elementary_2group() const {
  return !factors_.empty() &&
         std::all_of(factors_.begin(), factors_.end(),
                     [](std::int64_t m) { return m == 2; });
}

std::string GroupSpec::to_string() const {
  if (factors_.empty())
    return "Z1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i)
      s += " x ";
    s += "Z" + std::to_string(factors_[i]);
  }
  return s;
}

std::string to_string(const Element &e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

GroupSpec canonical_group(std::span<const std::int64_t> cyclic_orders) {
  // prime -> exponents, one per cyclic summand
  std::map<std::int64_t, std::vector<int>> powers;
  for (std::int64_t m : cyclic_orders) {
    if (m < 1)
      throw std::invalid_argument("cyclic factor orders must be positive");
    for (auto [p, e] : factorize(m))
      powers[p].push_back(e);
  }
  std::size_t rank = 0;
  for (auto &[p, es] : powers) {
    std::sort(es.begin(), es.end(), std::greater<>());
    rank = std::max(rank, es.size());
  }
  // m_r collects the largest prime powers, m_{r-1} the next, ...
  std::vector<std::int64_t> inv(rank, 1);
  for (const auto &[p, es] : powers) {
    for (std::size_t k = 0; k < es.size(); ++k) {
      std::int64_t pk = 1;
      for (int t = 0; t < es[k]; ++t)
        pk = checked_mul(pk, p);
      inv[rank - 1 - k] = checked_mul(inv[rank - 1 - k], pk);
    }
  }
  return GroupSpec(std::move(inv));
}

GroupSpec parse_group_spec(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  if (s.empty())
    throw std::invalid_argument("empty group descriptor");

  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find_first_of("x,X", pos);
    std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (!tok.empty() && (tok[0] == 'Z' || tok[0] == 'C' || tok[0] == 'z' || tok[0] == 'c'))
      tok.erase(0, 1);
    if (!tok.empty() && tok[0] == '-')
      throw std::invalid_argument("negative factor in group descriptor '" +
                                  std::string(text) + "'");
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw std::invalid_argument("malformed group descriptor '" + std::string(text) + "'");
    if (tok.size() > 18)
      throw std::invalid_argument("factor too large in '" + std::string(text) + "'");
    std::int64_t m = std::stoll(tok);
    if (m == 0)
      throw std::invalid_argument("zero factor in group descriptor '" +
                                  std::string(text) + "'");
    orders.push_back(m);
    if (end == std::string::npos)
      break;
    pos = end + 1;
  }
  return canonical_group(orders);
}

std::int64_t index_of(const GroupSpec &g, const Element &e) {
  if (!contains(g, e))
    throw std::invalid_argument("element " + to_string(e) + " is not in " + g.to_string());
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < g.rank(); ++i)
    idx = idx * g.factor(i) + e[i];
  return idx;
}

Element element_at(const GroupSpec &g, std::int64_t index) {
  Element e(std::vector<std::int64_t>(g.rank(), 0));
  for (std::size_t i = g.rank(); i-- > 0;) {
    e[i] = index % g.factor(i);
    index /= g.factor(i);
  }
  return e;
}

std::vector<Element> elements(const GroupSpec &g) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i)
    out.push_back(element_at(g, i));
  return out;
}

bool contains(const GroupSpec &g, const Element &e) {
  if (e.size() != g.rank())
    return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= g.factor(i))
      return false;
  return true;
}

Element zero(const GroupSpec &g) {
  return Element(std::vector<std::int64_t>(g.rank(), 0));
}

Element add(const GroupSpec &g, const Element &a, const Element &b) {
  check_member(g, a);
  check_member(g, b);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mod(a[i] + b[i], g.factor(i));
  return r;
}

Element sub(const GroupSpec &g, const Element &a, const Element &b) {
  check_member(g, a);
  check_member(g, b);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mod(a[i] - b[i], g.factor(i));
  return r;
}

Element neg(const GroupSpec &g, const Element &a) {
  check_member(g, a);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mod(-a[i], g.factor(i));
  return r;
}

Element scalar_mul(const GroupSpec &g, std::int64_t k, const Element &a) {
  check_member(g, a);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t m = g.factor(i);
    // (k mod m) * a_i stays below m^2, safe for the orders handled here
    r[i] = mod(mod(k, m) * a[i], m);
  }
  return r;
}

Element sigma(const GroupSpec &g) {
  // Coordinate i sums to (|G|/m_i) * m_i(m_i-1)/2 mod m_i: that is m_i/2
  // when m_i is the only even factor, 0 otherwise.
  Element s = zero(g);
  if (even_factor_count(g) != 1)
    return s;
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.factor(i) % 2 == 0)
      s[i] = g.factor(i) / 2;
  return s;
}

std::int64_t element_order(const GroupSpec &g, const Element &e) {
  check_member(g, e);
  std::int64_t d = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::int64_t m = g.factor(i);
    std::int64_t oi = m / std::gcd(m, e[i]);
    d = std::lcm(d, oi);
  }
  return d;
}

std::int64_t count_by_order(const GroupSpec &g, std::int64_t d) {
  if (d < 1 || g.order() % d != 0)
    return 0;
  // |{x : dx = 0}| = prod gcd(d, m_i); Moebius inversion over divisors of d.
  auto killed_by = [&](std::int64_t k) {
    std::int64_t c = 1;
    for (std::int64_t m : g.factors())
      c *= std::gcd(k, m);
    return c;
  };
  std::int64_t total = 0;
  auto primes = factorize(d);
  std::size_t np = primes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << np); ++mask) {
    std::int64_t k = d;
    int sign = 1;
    for (std::size_t t = 0; t < np; ++t)
      if (mask & (std::size_t{1} << t)) {
        k /= primes[t].first;
        sign = -sign;
      }
    total += sign * killed_by(k);
  }
  return total;
}

std::size_t even_factor_count(const GroupSpec &g) {
  return static_cast<std::size_t>(std::count_if(
      g.factors().begin(), g.factors().end(), [](std::int64_t m) { return m % 2 == 0; }));
}

std::int64_t two_torsion_count(const GroupSpec &g) {
  return std::int64_t{1} << even_factor_count(g);
}

Element EvenSplit::combine(const Element &h, std::int64_t z) const {
  if (h.size() != odd_.rank())
    throw std::invalid_argument("odd-part element has wrong length");
  Element out = zero(whole_);
  std::size_t r = whole_.rank();
  // leading factors of G are shared with H verbatim
  for (std::size_t i = 0; i + 1 < r; ++i)
    out[i] = h[i];
  std::int64_t hl = (odd_.rank() == r) ? h[r - 1] : 0;
  // CRT: x = hl (mod odd_last_), x = z (mod cyclic_)
  std::int64_t m = whole_.factor(r - 1);
  std::int64_t zz = ((z % cyclic_) + cyclic_) % cyclic_;
  for (std::int64_t x = zz; x < m; x += cyclic_)
    if (x % odd_last_ == hl) {
      out[r - 1] = x;
      return out;
    }
  throw std::logic_error("CRT recombination failed");
}

std::pair<Element, std::int64_t> EvenSplit::split(const Element &g) const {
  check_member(whole_, g);
  std::size_t r = whole_.rank();
  Element h = zero(odd_);
  for (std::size_t i = 0; i + 1 < r; ++i)
    h[i] = g[i];
  if (odd_.rank() == r)
    h[r - 1] = g[r - 1] % odd_last_;
  return {h, g[r - 1] % cyclic_};
}

EvenSplit decompose_even(const GroupSpec &g) {
  if (g.order() % 2 != 0)
    throw std::invalid_argument("decompose_even: " + g.to_string() + " has odd order");
  if (even_factor_count(g) != 1)
    throw std::invalid_argument("decompose_even: " + g.to_string() +
                                " has more than one even invariant factor (Sigma(G) = 0)");
  EvenSplit s;
  s.whole_ = g;
  std::int64_t last = g.factors().back();
  s.cyclic_ = 1;
  while (last % 2 == 0) {
    last /= 2;
    s.cyclic_ *= 2;
  }
  s.odd_last_ = last;
  std::vector<std::int64_t> hf(g.factors().begin(), g.factors().end() - 1);
  if (last > 1)
    hf.push_back(last);
  // leading factors are odd and divide m_r, hence divide its odd part
  s.odd_ = GroupSpec(std::move(hf));
  return s;
}

std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t order) {
  if (order < 1)
    throw std::invalid_argument("group order must be >= 1");
  auto primes = factorize(order);
  std::vector<std::vector<std::vector<int>>> choices;
  for (auto [p, e] : primes) {
    std::vector<int> cur;
    std::vector<std::vector<int>> parts;
    partitions(e, e, cur, parts);
    choices.push_back(std::move(parts));
  }
  std::vector<GroupSpec> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<std::int64_t> cyclic;
    for (std::size_t t = 0; t < choices.size(); ++t)
      for (int e : choices[t][pick[t]]) {
        std::int64_t pk = 1;
        for (int k = 0; k < e; ++k)
          pk *= primes[t].first;
        cyclic.push_back(pk);
      }
    out.push_back(canonical_group(cyclic));
    // odometer, last prime fastest
    std::size_t t = choices.size();
    while (t > 0) {
      --t;
      if (++pick[t] < choices[t].size())
        break;
      pick[t] = 0;
      if (t == 0)
        return out;
    }
    if (choices.empty())
      return out;
  }
}

std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t lo, std::int64_t hi) {
  std::vector<GroupSpec> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    auto gs = enumerate_abelian_groups(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

IndexedGroup::IndexedGroup(const GroupSpec &g) : spec_(g) {
  if (g.order() > max_order)
    throw std::invalid_argument("IndexedGroup: order " + std::to_string(g.order()) +
                                " exceeds " + std::to_string(max_order));
  n_ = static_cast<std::uint32_t>(g.order());
  const std::size_t r = g.rank();
  std::vector<std::int64_t> coords(static_cast<std::size_t>(n_) * r);
  for (std::uint32_t a = 0; a < n_; ++a) {
    Element e = element_at(g, a);
    std::copy(e.coords.begin(), e.coords.end(), coords.begin() + a * r);
  }
  add_.resize(static_cast<std::size_t>(n_) * n_);
  neg_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    const std::int64_t *ca = &coords[a * r];
    std::int64_t ni = 0;
    for (std::size_t i = 0; i < r; ++i)
      ni = ni * g.factor(i) + (ca[i] == 0 ? 0 : g.factor(i) - ca[i]);
    neg_[a] = static_cast<std::uint32_t>(ni);
    for (std::uint32_t b = 0; b < n_; ++b) {
      const std::int64_t *cb = &coords[b * r];
      std::int64_t idx = 0;
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t v = ca[i] + cb[i];
        if (v >= g.factor(i))
          v -= g.factor(i);
        idx = idx * g.factor(i) + v;
      }
      add_[static_cast<std::size_t>(a) * n_ + b] = static_cast<std::uint32_t>(idx);
    }
  }
}

} // namespace abelcycles
