#include "abelcycles/trail.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abelcycles {

Trail::Trail(GroupSpec ground, std::vector<Element> vertices, TrailKind kind)
    : ground_(std::move(ground)), vertices_(std::move(vertices)), kind_(kind) {
  std::set<Element> seen;
  for (const Element &v : vertices_) {
    if (!contains(ground_, v))
      throw std::invalid_argument("trail vertex " + to_string(v) + " not in " +
                                  ground_.to_string());
    if (!seen.insert(v).second)
      throw std::invalid_argument("trail vertex " + to_string(v) + " repeated");
  }
}

std::size_t Trail::edge_count() const {
  if (vertices_.size() < 2)
    return 0;
  return is_cyclic() ? vertices_.size() : vertices_.size() - 1;
}

bool Trail::is_hamiltonian() const {
  return static_cast<std::int64_t>(vertices_.size()) == ground_.order();
}

std::size_t LabelSet::total() const {
  std::size_t s = 0;
  for (const auto &[e, m] : labels)
    s += static_cast<std::size_t>(m);
  return s;
}

int LabelSet::multiplicity(const Element &e) const {
  auto it = labels.find(e);
  return it == labels.end() ? 0 : it->second;
}

namespace {

template <class Op> LabelSet edge_labels(const Trail &t, Op op) {
  const auto &v = t.vertices();
  if (v.size() < 2)
    throw std::invalid_argument("labels need a trail with at least 2 vertices");
  LabelSet ls;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    ++ls.labels[op(v[i], v[i + 1])];
  if (t.is_cyclic())
    ++ls.labels[op(v.back(), v.front())];
  return ls;
}

void require_kind(const Trail &t, TrailKind k) {
  if (t.kind() != k)
    throw std::logic_error(k == TrailKind::cyclic ? "cycle predicate applied to an open trail"
                                                  : "path predicate applied to a cyclic trail");
}

} // namespace

LabelSet sum_labels(const Trail &t) {
  const GroupSpec &g = t.ground();
  return edge_labels(t, [&](const Element &a, const Element &b) { return add(g, a, b); });
}

LabelSet diff_labels(const Trail &t) {
  const GroupSpec &g = t.ground();
  return edge_labels(t, [&](const Element &a, const Element &b) { return sub(g, b, a); });
}

bool is_rs_path(const Trail &t) {
  require_kind(t, TrailKind::open);
  return sum_labels(t).distinct_count() == t.edge_count();
}

bool is_rs_cycle(const Trail &t) {
  require_kind(t, TrailKind::cyclic);
  return sum_labels(t).distinct_count() == t.edge_count();
}

bool is_rd_path(const Trail &t) {
  require_kind(t, TrailKind::open);
  return diff_labels(t).distinct_count() == t.edge_count();
}

bool is_rd_cycle(const Trail &t) {
  require_kind(t, TrailKind::cyclic);
  return diff_labels(t).distinct_count() == t.edge_count();
}

std::vector<Element> canonical_cycle_key(const Trail &t) {
  if (!t.is_cyclic())
    throw std::logic_error("canonical_cycle_key needs a cyclic trail");
  const auto &v = t.vertices();
  if (v.empty())
    return {};
  // vertices are distinct, so the least rotation starts at the least vertex
  auto start = std::min_element(v.begin(), v.end()) - v.begin();
  std::vector<Element> key;
  key.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    key.push_back(v[(static_cast<std::size_t>(start) + i) % v.size()]);
  return key;
}

Trail canonical_rotation(const Trail &t) {
  return Trail(t.ground(), canonical_cycle_key(t), TrailKind::cyclic);
}

Trail translated(const Trail &t, const Element &by) {
  std::vector<Element> v;
  v.reserve(t.size());
  for (const Element &x : t.vertices())
    v.push_back(add(t.ground(), x, by));
  return Trail(t.ground(), std::move(v), t.kind());
}

Trail negated(const Trail &t) {
  std::vector<Element> v;
  v.reserve(t.size());
  for (const Element &x : t.vertices())
    v.push_back(neg(t.ground(), x));
  return Trail(t.ground(), std::move(v), t.kind());
}

Trail reversed(const Trail &t) {
  std::vector<Element> v(t.vertices().rbegin(), t.vertices().rend());
  return Trail(t.ground(), std::move(v), t.kind());
}

Element weighted_sum(const GroupSpec &g, const LabelSet &labels) {
  Element s = zero(g);
  for (const auto &[e, m] : labels.labels)
    s = add(g, s, scalar_mul(g, m, e));
  return s;
}

} // namespace abelcycles
