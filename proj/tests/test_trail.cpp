#include <doctest.h>

#include <map>

#include "abelcycles/trail.hpp"
#include "oracles.hpp"

using namespace abelcycles;

namespace {

std::set<Element> keys(const LabelSet &l) {
  std::set<Element> s;
  for (const auto &[e, m] : l.labels)
    s.insert(e);
  return s;
}

std::set<Element> shift(const GroupSpec &g, const std::set<Element> &s, const Element &by) {
  std::set<Element> out;
  for (const Element &e : s)
    out.insert(add(g, e, by));
  return out;
}

std::set<Element> negate(const GroupSpec &g, const std::set<Element> &s) {
  std::set<Element> out;
  for (const Element &e : s)
    out.insert(neg(g, e));
  return out;
}

} // namespace

TEST_CASE("trail validation") {
  GroupSpec g({4});
  CHECK_THROWS_AS(Trail(g, {Element{0}, Element{0}}, TrailKind::cyclic), std::invalid_argument);
  CHECK_THROWS_AS(Trail(g, {Element{0}, Element{4}}, TrailKind::open), std::invalid_argument);
  CHECK_THROWS_AS(Trail(g, {Element{0}, Element{1, 0}}, TrailKind::open), std::invalid_argument);
  Trail t(g, {Element{0}, Element{1}, Element{2}}, TrailKind::open);
  CHECK(t.edge_count() == 2);
  CHECK_FALSE(t.is_hamiltonian());
  Trail c(g, {Element{0}, Element{1}, Element{2}, Element{3}}, TrailKind::cyclic);
  CHECK(c.edge_count() == 4);
  CHECK(c.is_hamiltonian());
  CHECK_THROWS_AS(sum_labels(Trail(g, {Element{0}}, TrailKind::open)), std::invalid_argument);
}

TEST_CASE("labels of the natural cycle on Z4") {
  GroupSpec g({4});
  Trail c(g, {Element{0}, Element{1}, Element{2}, Element{3}}, TrailKind::cyclic);
  auto s = sum_labels(c);
  auto d = diff_labels(c);
  CHECK(s.distinct_count() == 2);
  CHECK(s.multiplicity(Element{1}) == 2);
  CHECK(s.multiplicity(Element{3}) == 2);
  CHECK(s.total() == 4);
  CHECK(d.distinct_count() == 1);
  CHECK(d.multiplicity(Element{1}) == 4);
  CHECK_FALSE(is_rd_cycle(c));
  CHECK_FALSE(is_rs_cycle(c));

  Trail p(g, {Element{0}, Element{1}, Element{3}, Element{2}}, TrailKind::open);
  CHECK(is_rd_path(p)); // differences 1, 2, 3
  CHECK(diff_labels(p).total() == 3);
  CHECK_THROWS_AS(is_rd_cycle(p), std::logic_error);
  CHECK_THROWS_AS(is_rs_path(c), std::logic_error);
}

TEST_CASE("translation, negation and reversal act on labels") {
  for (const auto &g : enumerate_abelian_groups(2, 6)) {
    CAPTURE(g.to_string());
    auto all = elements(g);
    oracle::each_cycle(g, [&](const std::vector<Element> &v) {
      Trail c(g, v, TrailKind::cyclic);
      const auto s = keys(sum_labels(c)), d = keys(diff_labels(c));
      CHECK(s == oracle::sums(g, v));
      CHECK(d == oracle::diffs(g, v));
      for (const Element &t : all) {
        Trail ct = translated(c, t);
        CHECK(keys(diff_labels(ct)) == d);
        CHECK(keys(sum_labels(ct)) == shift(g, s, add(g, t, t)));
      }
      CHECK(keys(diff_labels(negated(c))) == negate(g, d));
      CHECK(keys(sum_labels(negated(c))) == negate(g, s));
      CHECK(keys(diff_labels(reversed(c))) == negate(g, d));
      CHECK(keys(sum_labels(reversed(c))) == s);
      // the weighted sums telescope
      CHECK(weighted_sum(g, diff_labels(c)) == zero(g));
      CHECK(weighted_sum(g, sum_labels(c)) == add(g, sigma(g), sigma(g)));
    });
  }
}

TEST_CASE("canonical keys partition all vertex orders into rotation classes") {
  for (const auto &g : enumerate_abelian_groups(2, 6)) {
    CAPTURE(g.to_string());
    auto perm = elements(g);
    std::map<std::vector<Element>, int> classes;
    do {
      Trail c(g, perm, TrailKind::cyclic);
      auto k = canonical_cycle_key(c);
      CHECK(k.front() == zero(g));
      CHECK(canonical_rotation(c).vertices() == k);
      ++classes[k];
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto n = static_cast<int>(g.order());
    CHECK(classes.size() == oracle::factorial(n - 1));
    for (const auto &[k, count] : classes)
      CHECK(count == n);
  }
  GroupSpec z4({4});
  CHECK_THROWS_AS(canonical_cycle_key(Trail(z4, {Element{1}, Element{0}}, TrailKind::open)),
                  std::logic_error);
}
