#pragma once

#include <map>
#include <vector>

#include "abelcycles/group.hpp"

namespace abelcycles {

enum class TrailKind { cyclic, open };

/// An ordered sequence of pairwise distinct group elements, read either as
/// a directed cycle (wrap-around edge included) or as an open path.
class Trail {
public:
  /// Validates membership and distinctness; throws std::invalid_argument.
  Trail(GroupSpec ground, std::vector<Element> vertices, TrailKind kind);

  const GroupSpec &ground() const { return ground_; }
  const std::vector<Element> &vertices() const { return vertices_; }
  TrailKind kind() const { return kind_; }
  bool is_cyclic() const { return kind_ == TrailKind::cyclic; }
  std::size_t size() const { return vertices_.size(); }

  /// Number of labelled edges: |A| for a cycle, |A| - 1 for a path.
  std::size_t edge_count() const;

  /// True when the vertices exhaust the ground group.
  bool is_hamiltonian() const;

  friend bool operator==(const Trail &, const Trail &) = default;

private:
  GroupSpec ground_;
  std::vector<Element> vertices_;
  TrailKind kind_;
};

/// Labels of a trail with their multiplicities.
struct LabelSet {
  std::map<Element, int> labels;

  std::size_t distinct_count() const { return labels.size(); }
  std::size_t total() const;
  int multiplicity(const Element &e) const;
  bool contains(const Element &e) const { return labels.count(e) != 0; }
};

/// Multiset of a_i + a_{i+1}; the wrap pair is included iff t is cyclic.
LabelSet sum_labels(const Trail &t);
/// Multiset of a_{i+1} - a_i; the wrap pair is included iff t is cyclic.
LabelSet diff_labels(const Trail &t);

bool is_rs_path(const Trail &t);
bool is_rs_cycle(const Trail &t);
bool is_rd_path(const Trail &t);
bool is_rd_cycle(const Trail &t);

/// Lexicographically least rotation of a cyclic trail, direction preserved.
std::vector<Element> canonical_cycle_key(const Trail &t);

/// The same cycle, rotated to start at its canonical key.
Trail canonical_rotation(const Trail &t);

Trail translated(const Trail &t, const Element &by);
Trail negated(const Trail &t);
Trail reversed(const Trail &t);

/// Label-weighted sum, i.e. the sum of all labels with multiplicity.
Element weighted_sum(const GroupSpec &g, const LabelSet &labels);

} // namespace abelcycles
