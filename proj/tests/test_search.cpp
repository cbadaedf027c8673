#include <doctest.h>

#include "abelcycles/report.hpp"
#include "abelcycles/search.hpp"
#include "oracles.hpp"

using namespace abelcycles;

TEST_CASE("enumeration counts and order") {
  GroupSpec z3({3});
  auto cycles = enumerate_cycles(z3);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].vertices() == std::vector<Element>{Element{0}, Element{1}, Element{2}});
  CHECK(cycles[1].vertices() == std::vector<Element>{Element{0}, Element{2}, Element{1}});
  CHECK(enumerate_cycles(GroupSpec({2})).size() == 1);
  CHECK(enumerate_cycles(GroupSpec({4})).size() == 6);
  for (const auto &g : enumerate_abelian_groups(2, 9)) {
    IndexedGroup ig(g);
    std::uint64_t count = 0;
    for_each_cycle(ig, [&](std::span<const std::uint32_t>) { ++count; });
    CHECK(count == oracle::factorial(static_cast<int>(g.order()) - 1));
    std::uint64_t sharded = 0;
    for (std::uint32_t s = 1; s < ig.size(); ++s)
      for_each_cycle(ig, [&](std::span<const std::uint32_t> p) {
        CHECK(p[1] == s);
        ++sharded;
      }, s);
    CHECK(sharded == count);
  }
  CHECK_THROWS_AS(enumerate_cycles(GroupSpec({13})), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cycles(GroupSpec({5}), 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cycles(GroupSpec()), std::invalid_argument);
}

TEST_CASE("extremal scan examples") {
  auto z4 = extremal_scan(GroupSpec({4}));
  CHECK(z4.dmin == 1);
  CHECK(z4.dmax == 3);
  CHECK(z4.smin == 2);
  CHECK(z4.smax == 3);
  CHECK(to_string(z4.avg_distinct_diffs) == "7/3");
  CHECK(to_string(z4.avg_distinct_sums) == "8/3");
  CHECK(z4.cycle_count == 6);
  auto z3 = extremal_scan(GroupSpec({3}));
  CHECK(z3.dmin == 1);
  CHECK(z3.dmax == 1);
  CHECK(z3.smin == 3);
  CHECK(z3.smax == 3);
  CHECK(extremal_scan(GroupSpec({2, 2})).smax == 2);
}

TEST_CASE("scan agrees with a naive enumeration oracle") {
  for (const auto &g : enumerate_abelian_groups(2, 8)) {
    CAPTURE(g.to_string());
    std::size_t dmin = 1000, dmax = 0, smin = 1000, smax = 0;
    std::uint64_t count = 0, td = 0, ts = 0;
    oracle::each_cycle(g, [&](const std::vector<Element> &c) {
      const auto d = oracle::diffs(g, c).size(), s = oracle::sums(g, c).size();
      ++count;
      td += d;
      ts += s;
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    });
    auto r = extremal_scan(g);
    CHECK(r.cycle_count == count);
    CHECK(r.dmin == dmin);
    CHECK(r.dmax == dmax);
    CHECK(r.smin == smin);
    CHECK(r.smax == smax);
    Rational ad(static_cast<long>(td), static_cast<unsigned long>(count));
    Rational as(static_cast<long>(ts), static_cast<unsigned long>(count));
    ad.canonicalize();
    as.canonicalize();
    CHECK(r.avg_distinct_diffs == ad);
    CHECK(r.avg_distinct_sums == as);
  }
}

TEST_CASE("scan invariants and witnesses for orders 3 to 10") {
  for (const auto &g : enumerate_abelian_groups(3, 10)) {
    CAPTURE(g.to_string());
    auto r = extremal_scan(g);
    CHECK(r.cycle_count == oracle::factorial(static_cast<int>(g.order()) - 1));
    CHECK(r.dmin <= r.dmax);
    CHECK(r.smin <= r.smax);
    CHECK(r.dmin == g.rank());
    CHECK(diff_labels(r.witnesses.at("dmin")).distinct_count() == r.dmin);
    CHECK(diff_labels(r.witnesses.at("dmax")).distinct_count() == r.dmax);
    CHECK(sum_labels(r.witnesses.at("smin")).distinct_count() == r.smin);
    CHECK(sum_labels(r.witnesses.at("smax")).distinct_count() == r.smax);
    for (const auto &[k, w] : r.witnesses) {
      CHECK(w.is_hamiltonian());
      CHECK(w.is_cyclic());
    }
  }
}

TEST_CASE("scan output does not depend on the thread count") {
  for (const char *name : {"8", "2x4", "3x3", "10"}) {
    GroupSpec g = parse_group_spec(name);
    auto one = extremal_to_json(extremal_scan(g, {12, 1})).dump();
    auto four = extremal_to_json(extremal_scan(g, {12, 4})).dump();
    CHECK(one == four);
  }
}

TEST_CASE("rainbow witness searches") {
  auto rd = find_rd_path(GroupSpec({4}), 1'000'000);
  REQUIRE(rd.status == SearchStatus::found);
  CHECK(rd.witness->is_hamiltonian());
  CHECK(is_rd_path(*rd.witness));

  auto rs = find_rs_cycle(GroupSpec({2, 2}), 1'000'000);
  CHECK(rs.status == SearchStatus::nonexistent);
  CHECK_FALSE(rs.witness);

  auto rc = find_rd_cycle_nonzero(GroupSpec({5}), 1'000'000);
  REQUIRE(rc.status == SearchStatus::found);
  CHECK(rc.witness->size() == 4);
  CHECK(is_rd_cycle(*rc.witness));
  for (const Element &e : rc.witness->vertices())
    CHECK(e != Element{0});

  auto out = find_rs_cycle(GroupSpec({4, 4}), 1);
  CHECK(out.status == SearchStatus::exhausted);
  CHECK(to_string(SearchStatus::exhausted) == "exhausted");

  // an odd group has a rainbow-sum cycle; an even one with sigma != 0 has none
  CHECK(find_rs_cycle(GroupSpec({7}), 1'000'000).status == SearchStatus::found);
  CHECK(find_rs_cycle(GroupSpec({6}), 10'000'000).status == SearchStatus::nonexistent);
  CHECK(find_rs_cycle(GroupSpec({2, 4}), 10'000'000).status == SearchStatus::found);
  CHECK(find_rd_path(GroupSpec({2, 2}), 1'000'000).status == SearchStatus::nonexistent);
  CHECK_THROWS_AS(find_rd_cycle_nonzero(GroupSpec({2}), 10), std::invalid_argument);
}
