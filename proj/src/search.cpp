#include "abelcycles/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace abelcycles {

std::string to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::found:
    return "found";
  case SearchStatus::nonexistent:
    return "nonexistent";
  case SearchStatus::exhausted:
    return "exhausted";
  }
  return "?";
}

namespace {

void check_enumerable(const GroupSpec &g, std::int64_t cap) {
  if (g.order() < 2)
    throw std::invalid_argument("cycle enumeration needs |G| >= 2");
  if (g.order() > cap)
    throw std::invalid_argument("cycle enumeration: |G| = " + std::to_string(g.order()) +
                                " exceeds cap " + std::to_string(cap));
  if (g.order() > 63)
    throw std::invalid_argument("cycle enumeration: order above 63 unsupported");
}

struct ShardStats {
  std::uint64_t cycles = 0;
  std::uint64_t total_d = 0, total_s = 0;
  std::size_t dmin = std::numeric_limits<std::size_t>::max(), dmax = 0;
  std::size_t smin = std::numeric_limits<std::size_t>::max(), smax = 0;
  std::vector<std::uint32_t> w_dmin, w_dmax, w_smin, w_smax;
};

class ScanWorker {
public:
  explicit ScanWorker(const IndexedGroup &g)
      : g_(g), n_(g.size()), path_(n_), dcount_(n_, 0), scount_(n_, 0) {}

  ShardStats run(std::uint32_t second) {
    stats_ = ShardStats{};
    std::fill(dcount_.begin(), dcount_.end(), 0);
    std::fill(scount_.begin(), scount_.end(), 0);
    dd_ = ds_ = 0;
    path_[0] = 0;
    used_ = 1;
    path_[1] = second;
    used_ |= std::uint64_t{1} << second;
    push(0, second);
    dfs(2);
    return std::move(stats_);
  }

private:
  void push(std::uint32_t last, std::uint32_t w) {
    if (dcount_[g_.sub(w, last)]++ == 0)
      ++dd_;
    if (scount_[g_.add(w, last)]++ == 0)
      ++ds_;
  }
  void pop(std::uint32_t last, std::uint32_t w) {
    if (--dcount_[g_.sub(w, last)] == 0)
      --dd_;
    if (--scount_[g_.add(w, last)] == 0)
      --ds_;
  }

  void dfs(std::uint32_t depth) {
    const std::uint32_t last = path_[depth - 1];
    if (depth == n_) {
      push(last, 0);
      record();
      pop(last, 0);
      return;
    }
    for (std::uint32_t w = 1; w < n_; ++w) {
      if (used_ & (std::uint64_t{1} << w))
        continue;
      path_[depth] = w;
      used_ |= std::uint64_t{1} << w;
      push(last, w);
      dfs(depth + 1);
      pop(last, w);
      used_ &= ~(std::uint64_t{1} << w);
    }
  }

  void record() {
    ++stats_.cycles;
    stats_.total_d += dd_;
    stats_.total_s += ds_;
    if (dd_ < stats_.dmin) {
      stats_.dmin = dd_;
      stats_.w_dmin = path_;
    }
    if (dd_ > stats_.dmax) {
      stats_.dmax = dd_;
      stats_.w_dmax = path_;
    }
    if (ds_ < stats_.smin) {
      stats_.smin = ds_;
      stats_.w_smin = path_;
    }
    if (ds_ > stats_.smax) {
      stats_.smax = ds_;
      stats_.w_smax = path_;
    }
  }

  const IndexedGroup &g_;
  std::uint32_t n_;
  std::vector<std::uint32_t> path_;
  std::vector<std::uint32_t> dcount_, scount_;
  std::size_t dd_ = 0, ds_ = 0;
  std::uint64_t used_ = 0;
  ShardStats stats_;
};

SearchResult rainbow_search(const IndexedGroup &g, const std::vector<std::uint32_t> &verts,
                            bool sums, bool cyclic, std::uint64_t budget) {
  SearchResult res;
  const std::size_t k = verts.size();
  std::vector<std::uint32_t> path(k);
  std::vector<char> used_vertex(g.size(), 0), used_label(g.size(), 0);
  auto label = [&](std::uint32_t a, std::uint32_t b) {
    return sums ? g.add(a, b) : g.sub(b, a);
  };
  bool out_of_budget = false;

  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    const std::uint32_t last = path[depth - 1];
    if (depth == k) {
      if (!cyclic)
        return true;
      return !used_label[label(last, path[0])];
    }
    for (std::uint32_t w : verts) {
      if (used_vertex[w])
        continue;
      const std::uint32_t l = label(last, w);
      if (used_label[l])
        continue;
      if (++res.nodes > budget) {
        out_of_budget = true;
        return false;
      }
      path[depth] = w;
      used_vertex[w] = 1;
      used_label[l] = 1;
      if (dfs(depth + 1))
        return true;
      used_vertex[w] = 0;
      used_label[l] = 0;
      if (out_of_budget)
        return false;
    }
    return false;
  };

  path[0] = verts[0];
  used_vertex[verts[0]] = 1;
  bool ok = k == 1 ? !cyclic : dfs(1);
  if (ok) {
    res.status = SearchStatus::found;
    res.witness = trail_from_indices(g, path, cyclic ? TrailKind::cyclic : TrailKind::open);
  } else {
    res.status = out_of_budget ? SearchStatus::exhausted : SearchStatus::nonexistent;
  }
  return res;
}

} // namespace

Trail trail_from_indices(const IndexedGroup &g, std::span<const std::uint32_t> vertices,
                         TrailKind kind) {
  std::vector<Element> v;
  v.reserve(vertices.size());
  for (std::uint32_t i : vertices)
    v.push_back(g.element(i));
  return Trail(g.spec(), std::move(v), kind);
}

void for_each_cycle(const IndexedGroup &g, const CycleVisitor &visit,
                    std::optional<std::uint32_t> second, std::int64_t cap) {
  check_enumerable(g.spec(), cap);
  const std::uint32_t n = g.size();
  if (second && (*second == 0 || *second >= n))
    throw std::invalid_argument("for_each_cycle: shard vertex out of range");
  std::vector<std::uint32_t> path(n);
  std::uint64_t used = 1;
  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t depth) {
    if (depth == n) {
      visit(path);
      return;
    }
    for (std::uint32_t w = 1; w < n; ++w) {
      if (used & (std::uint64_t{1} << w))
        continue;
      if (depth == 1 && second && w != *second)
        continue;
      path[depth] = w;
      used |= std::uint64_t{1} << w;
      dfs(depth + 1);
      used &= ~(std::uint64_t{1} << w);
    }
  };
  path[0] = 0;
  dfs(1);
}

std::vector<Trail> enumerate_cycles(const GroupSpec &g, std::int64_t cap) {
  check_enumerable(g, cap);
  IndexedGroup ig(g);
  std::vector<Trail> out;
  for_each_cycle(
      ig, [&](std::span<const std::uint32_t> p) {
        out.push_back(trail_from_indices(ig, p, TrailKind::cyclic));
      },
      std::nullopt, cap);
  return out;
}

ExtremalReport extremal_scan(const GroupSpec &g, const ScanOptions &opts) {
  check_enumerable(g, opts.cap);
  IndexedGroup ig(g);
  const std::uint32_t n = ig.size();
  const std::uint32_t shards = n - 1;
  std::vector<ShardStats> results(shards);

  std::atomic<std::uint32_t> next{0};
  auto work = [&] {
    ScanWorker worker(ig);
    for (std::uint32_t s; (s = next.fetch_add(1)) < shards;)
      results[s] = worker.run(s + 1);
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(opts.threads, shards));
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back(work);
  }

  // merge in shard order so witnesses are the first in enumeration order
  ShardStats all;
  for (auto &r : results) {
    all.cycles += r.cycles;
    all.total_d += r.total_d;
    all.total_s += r.total_s;
    if (r.dmin < all.dmin) {
      all.dmin = r.dmin;
      all.w_dmin = r.w_dmin;
    }
    if (r.dmax > all.dmax) {
      all.dmax = r.dmax;
      all.w_dmax = r.w_dmax;
    }
    if (r.smin < all.smin) {
      all.smin = r.smin;
      all.w_smin = r.w_smin;
    }
    if (r.smax > all.smax) {
      all.smax = r.smax;
      all.w_smax = r.w_smax;
    }
  }

  ExtremalReport rep;
  rep.group = g;
  rep.dmin = all.dmin;
  rep.dmax = all.dmax;
  rep.smin = all.smin;
  rep.smax = all.smax;
  rep.cycle_count = all.cycles;
  rep.witnesses.emplace("dmin", trail_from_indices(ig, all.w_dmin, TrailKind::cyclic));
  rep.witnesses.emplace("dmax", trail_from_indices(ig, all.w_dmax, TrailKind::cyclic));
  rep.witnesses.emplace("smin", trail_from_indices(ig, all.w_smin, TrailKind::cyclic));
  rep.witnesses.emplace("smax", trail_from_indices(ig, all.w_smax, TrailKind::cyclic));
  rep.avg_distinct_diffs = Rational(BigInt(std::to_string(all.total_d)), BigInt(std::to_string(all.cycles)));
  rep.avg_distinct_diffs.canonicalize();
  rep.avg_distinct_sums = Rational(BigInt(std::to_string(all.total_s)), BigInt(std::to_string(all.cycles)));
  rep.avg_distinct_sums.canonicalize();
  return rep;
}

SearchResult find_rd_path(const GroupSpec &g, std::uint64_t budget) {
  if (g.order() < 2)
    throw std::invalid_argument("find_rd_path needs |G| >= 2");
  IndexedGroup ig(g);
  std::vector<std::uint32_t> verts(ig.size());
  for (std::uint32_t i = 0; i < ig.size(); ++i)
    verts[i] = i;
  return rainbow_search(ig, verts, false, false, budget);
}

SearchResult find_rs_cycle(const GroupSpec &g, std::uint64_t budget) {
  if (g.order() < 2)
    throw std::invalid_argument("find_rs_cycle needs |G| >= 2");
  IndexedGroup ig(g);
  std::vector<std::uint32_t> verts(ig.size());
  for (std::uint32_t i = 0; i < ig.size(); ++i)
    verts[i] = i;
  return rainbow_search(ig, verts, true, true, budget);
}

SearchResult find_rd_cycle_nonzero(const GroupSpec &g, std::uint64_t budget) {
  if (g.order() < 3)
    throw std::invalid_argument("find_rd_cycle_nonzero needs |G| >= 3");
  IndexedGroup ig(g);
  std::vector<std::uint32_t> verts;
  for (std::uint32_t i = 1; i < ig.size(); ++i)
    verts.push_back(i);
  return rainbow_search(ig, verts, false, true, budget);
}

} // namespace abelcycles
