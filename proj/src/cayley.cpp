#include "abelcycles/cayley.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <stdexcept>

#include "abelcycles/constructions.hpp"

namespace abelcycles {

namespace {

std::vector<std::uint32_t> indices_of(const IndexedGroup &ig, const std::set<Element> &s) {
  std::vector<std::uint32_t> out;
  for (const Element &e : s) {
    if (!contains(ig.spec(), e))
      throw std::invalid_argument("connection set element " + to_string(e) + " not in " +
                                  ig.spec().to_string());
    out.push_back(ig.index(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> adjacency_lists(const IndexedGroup &ig,
                                                        const std::vector<std::uint32_t> &s) {
  const std::uint32_t n = ig.size();
  std::vector<char> in_s(n, 0);
  for (std::uint32_t x : s)
    in_s[x] = 1;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (a != b && in_s[ig.add(a, b)])
        adj[a].push_back(b);
  return adj;
}

bool structural_connected(const IndexedGroup &ig, const std::vector<std::uint32_t> &s) {
  const std::uint32_t n = ig.size();
  if (s.empty())
    return n == 1;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x : s)
    gens.push_back(ig.sub(x, s[0]));
  auto h = generated_subgroup(ig, gens);
  if (h.size() == n)
    return true;
  return 2 * h.size() == n && !std::binary_search(h.begin(), h.end(), s[0]);
}

// Held-Karp style reachability: reach[mask] holds the possible end vertices
// of paths from vertex 0 covering exactly {0} + mask (bit v-1 for vertex v).
HamiltonResult hamiltonian_dp(const IndexedGroup &ig,
                              const std::vector<std::vector<std::uint32_t>> &adj) {
  HamiltonResult res;
  const std::uint32_t n = ig.size();
  const std::uint32_t m = n - 1;
  std::vector<std::uint32_t> nbr(n, 0); // neighbours among 1..n-1, as bits
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t u : adj[v])
      if (u != 0)
        nbr[v] |= std::uint32_t{1} << (u - 1);

  const std::size_t states = std::size_t{1} << m;
  std::vector<std::uint32_t> reach(states, 0);
  for (std::uint32_t u = 1; u < n; ++u)
    if (nbr[0] & (std::uint32_t{1} << (u - 1)))
      reach[std::size_t{1} << (u - 1)] |= std::uint32_t{1} << (u - 1);
  for (std::size_t mask = 1; mask < states; ++mask) {
    const std::uint32_t ends = reach[mask];
    if (!ends)
      continue;
    for (std::uint32_t u = 1; u < n; ++u) {
      const std::uint32_t bit = std::uint32_t{1} << (u - 1);
      if ((mask & bit) == 0 && (nbr[u] & ends))
        reach[mask | bit] |= bit;
    }
  }
  res.nodes = states;
  const std::size_t full = states - 1;
  const std::uint32_t closing = reach[full] & nbr[0];
  if (!closing) {
    res.verdict = HamiltonVerdict::not_hamiltonian;
    return res;
  }
  std::vector<std::uint32_t> back;
  std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(closing)) + 1;
  std::size_t mask = full;
  back.push_back(v);
  while (std::popcount(mask) > 1) {
    const std::size_t prev = mask ^ (std::size_t{1} << (v - 1));
    const std::uint32_t cand = reach[prev] & nbr[v];
    v = static_cast<std::uint32_t>(std::countr_zero(cand)) + 1;
    back.push_back(v);
    mask = prev;
  }
  std::vector<std::uint32_t> cyc{0};
  cyc.insert(cyc.end(), back.rbegin(), back.rend());
  // the graph is undirected: report the lexicographically smaller direction
  std::vector<std::uint32_t> rev{0};
  rev.insert(rev.end(), cyc.rbegin(), cyc.rend() - 1);
  if (rev < cyc)
    cyc = std::move(rev);
  res.verdict = HamiltonVerdict::hamiltonian;
  res.witness = trail_from_indices(ig, cyc, TrailKind::cyclic);
  return res;
}

class HamiltonBacktracker {
public:
  HamiltonBacktracker(const IndexedGroup &ig, const std::vector<std::vector<std::uint32_t>> &adj,
                      std::uint64_t budget)
      : ig_(ig), adj_(adj), n_(ig.size()), budget_(budget), visited_(n_, 0),
        is_adj_(static_cast<std::size_t>(n_) * n_, 0) {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b : adj_[a])
        is_adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
  }

  HamiltonResult run() {
    HamiltonResult res;
    path_.assign(1, 0);
    visited_[0] = 1;
    bool ok = dfs();
    res.nodes = nodes_;
    if (ok) {
      res.verdict = HamiltonVerdict::hamiltonian;
      res.witness = trail_from_indices(ig_, path_, TrailKind::cyclic);
    } else {
      res.verdict = out_ ? HamiltonVerdict::exhausted : HamiltonVerdict::not_hamiltonian;
    }
    return res;
  }

private:
  bool adj(std::uint32_t a, std::uint32_t b) const {
    return is_adj_[static_cast<std::size_t>(a) * n_ + b];
  }

  // Every unvisited vertex needs two usable neighbours, and all of them must
  // stay reachable from the current end through unvisited vertices.
  bool feasible(std::uint32_t cur, std::optional<std::uint32_t> &forced) const {
    forced.reset();
    std::size_t remaining = n_ - path_.size();
    for (std::uint32_t u = 0; u < n_; ++u) {
      if (visited_[u])
        continue;
      int deg = 0;
      for (std::uint32_t w : adj_[u])
        if (!visited_[w] || w == cur || w == 0)
          ++deg;
      if (remaining > 1 && deg < 2)
        return false;
      if (remaining > 1 && deg == 2 && adj(u, cur) && cur != 0) {
        if (forced && *forced != u)
          return false;
        forced = u;
      }
    }
    std::vector<char> seen(n_, 0);
    std::queue<std::uint32_t> q;
    q.push(cur);
    seen[cur] = 1;
    std::size_t reached = 0;
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop();
      for (std::uint32_t w : adj_[x])
        if (!visited_[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    return reached == remaining;
  }

  bool dfs() {
    const std::uint32_t cur = path_.back();
    if (path_.size() == n_)
      return adj(cur, 0);
    std::optional<std::uint32_t> forced;
    if (!feasible(cur, forced))
      return false;
    for (std::uint32_t w : adj_[cur]) {
      if (visited_[w] || (forced && w != *forced))
        continue;
      if (++nodes_ > budget_) {
        out_ = true;
        return false;
      }
      visited_[w] = 1;
      path_.push_back(w);
      if (dfs())
        return true;
      path_.pop_back();
      visited_[w] = 0;
      if (out_)
        return false;
    }
    return false;
  }

  const IndexedGroup &ig_;
  const std::vector<std::vector<std::uint32_t>> &adj_;
  std::uint32_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_ = false;
  std::vector<char> visited_;
  std::vector<char> is_adj_;
  std::vector<std::uint32_t> path_;
};

HamiltonResult hamiltonian(const IndexedGroup &ig, const std::vector<std::uint32_t> &s,
                           const HamiltonOptions &opts) {
  if (ig.size() < 2) {
    return HamiltonResult{HamiltonVerdict::not_hamiltonian, std::nullopt, 0};
  }
  auto adj = adjacency_lists(ig, s);
  if (ig.size() <= opts.dp_gate && ig.size() <= 32)
    return hamiltonian_dp(ig, adj);
  return HamiltonBacktracker(ig, adj, opts.budget).run();
}

} // namespace

bool CayleyGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

std::size_t CayleyGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto &l : adjacency)
    e += l.size();
  return e / 2;
}

CayleyGraph build_cayley(const GroupSpec &g, const std::set<Element> &s) {
  IndexedGroup ig(g);
  auto si = indices_of(ig, s);
  CayleyGraph cg{g, s, adjacency_lists(ig, si), {}};
  std::vector<char> in_s(ig.size(), 0);
  for (std::uint32_t x : si)
    in_s[x] = 1;
  for (std::uint32_t a = 0; a < ig.size(); ++a)
    if (in_s[ig.add(a, a)])
      cg.loops.push_back(a);
  return cg;
}

std::vector<std::uint32_t> generated_subgroup(const IndexedGroup &g,
                                              const std::vector<std::uint32_t> &gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<std::uint32_t> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::uint32_t x : gens) {
      std::uint32_t y = g.add(members[i], x);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_connected_cayley_structural(const GroupSpec &g, const std::set<Element> &s) {
  IndexedGroup ig(g);
  return structural_connected(ig, indices_of(ig, s));
}

bool is_connected_cayley_bfs(const GroupSpec &g, const std::set<Element> &s) {
  CayleyGraph cg = build_cayley(g, s);
  const std::size_t n = cg.adjacency.size();
  std::vector<char> seen(n, 0);
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop();
    for (std::uint32_t w : cg.adjacency[x])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

HamiltonResult is_hamiltonian_cayley(const GroupSpec &g, const std::set<Element> &s,
                                     const HamiltonOptions &opts) {
  if (g.order() < 2)
    throw std::invalid_argument("is_hamiltonian_cayley needs |G| >= 2");
  IndexedGroup ig(g);
  return hamiltonian(ig, indices_of(ig, s), opts);
}

bool classify_small_connection_set(const GroupSpec &g, const std::set<Element> &s) {
  if (g.order() < 3)
    throw std::invalid_argument("classify_small_connection_set needs |G| >= 3");
  if (s.size() > 2)
    throw std::invalid_argument("classify_small_connection_set needs |S| <= 2");
  if (s.size() < 2)
    return false;
  const Element &s1 = *s.begin();
  const Element &s2 = *std::next(s.begin());
  const Element d = sub(g, s2, s1);
  const std::int64_t n = g.order();
  if (n % 2 != 0 || element_order(g, d) != n / 2)
    return false;
  Element x = zero(g);
  for (std::int64_t k = 0; k < n / 2; ++k) {
    if (x == s1 || x == s2)
      return false;
    x = add(g, x, d);
  }
  return true;
}

std::pair<std::size_t, std::size_t> smin_bounds(const GroupSpec &g) {
  if (g.order() < 2)
    throw std::invalid_argument("smin needs |G| >= 2");
  if (g.order() == 2)
    return {1, 1};
  std::size_t lower = g.rank() + (g.factor(0) > 2 ? 1 : 0);
  lower = std::max<std::size_t>(lower, 2);
  std::size_t upper = g.order() % 2 == 0 ? even_smin_value(g)
                                         : sum_labels(odd_smin_cycle(g)).distinct_count();
  return {lower, upper};
}

SminResult smin_exact(const GroupSpec &g, const SminOptions &opts) {
  SminResult res;
  auto [lower, upper] = smin_bounds(g);
  res.lower = lower;
  res.upper = upper;
  Trail construction = g.order() % 2 == 0 ? interleaved_even_cycle(g) : odd_smin_cycle(g);

  IndexedGroup ig(g);
  const std::uint32_t n = ig.size();
  std::vector<std::uint32_t> doubles; // the translation group 2G
  {
    std::vector<char> in(n, 0);
    for (std::uint32_t t = 0; t < n; ++t) {
      std::uint32_t d = ig.add(t, t);
      if (!in[d] && d != 0) {
        in[d] = 1;
        doubles.push_back(d);
      }
    }
  }
  auto canonical = [&](const std::vector<std::uint32_t> &s) {
    std::vector<std::uint32_t> moved(s.size());
    for (std::uint32_t t : doubles) {
      for (std::size_t i = 0; i < s.size(); ++i)
        moved[i] = ig.add(s[i], t);
      std::sort(moved.begin(), moved.end());
      if (moved < s)
        return false;
    }
    return true;
  };

  const std::size_t start = opts.from_one ? 1 : lower;
  for (std::size_t k = start; k <= upper; ++k) {
    if (k > n)
      break;
    std::vector<std::uint32_t> s(k);
    for (std::size_t i = 0; i < k; ++i)
      s[i] = static_cast<std::uint32_t>(i);
    while (true) {
      if (canonical(s) && structural_connected(ig, s)) {
        ++res.sets_tested;
        if (res.nodes >= opts.budget) {
          res.lower = k;
          res.witness_set.clear();
          for (const auto &[e, m] : sum_labels(construction).labels)
            res.witness_set.insert(e);
          res.witness_cycle = construction;
          return res;
        }
        HamiltonOptions ho{opts.dp_gate, opts.budget - res.nodes};
        HamiltonResult hr = hamiltonian(ig, s, ho);
        res.nodes += hr.nodes;
        if (hr.verdict == HamiltonVerdict::hamiltonian) {
          res.exact = true;
          res.value = k;
          res.lower = res.upper = k;
          for (std::uint32_t x : s)
            res.witness_set.insert(ig.element(x));
          res.witness_cycle = hr.witness;
          return res;
        }
        if (hr.verdict == HamiltonVerdict::exhausted) {
          res.lower = k;
          for (const auto &[e, m] : sum_labels(construction).labels)
            res.witness_set.insert(e);
          res.witness_cycle = construction;
          return res;
        }
      }
      // next k-combination of {0..n-1} in lexicographic order
      std::size_t i = k;
      while (i > 0 && s[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++s[i - 1];
      for (std::size_t j = i; j < k; ++j)
        s[j] = s[j - 1] + 1;
    }
  }
  throw std::logic_error("smin_exact: no Hamiltonian connection set up to the constructed bound on " +
                         g.to_string());
}

} // namespace abelcycles
