#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelcycles {

/// A finite abelian group Z/m_1 + ... + Z/m_r in invariant-factor form
/// (m_i >= 2, m_i | m_{i+1}). The empty factor list is the trivial group.
class GroupSpec {
public:
  GroupSpec() = default;

  /// Takes an already-canonical factor list; throws std::invalid_argument
  /// if the divisibility chain is broken. Use parse_group_spec() or
  /// canonical_group() for arbitrary direct sums.
  explicit GroupSpec(std::vector<std::int64_t> invariant_factors);

  const std::vector<std::int64_t> &factors() const { return factors_; }
  std::int64_t factor(std::size_t i) const { return factors_[i]; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  bool is_elementary_2group() const;

  /// "Z2 x Z6"; the trivial group renders as "Z1".
  std::string to_string() const;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
  friend auto operator<=>(const GroupSpec &, const GroupSpec &) = default;

private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

/// Group element as a tuple of reduced residues, one per invariant factor.
struct Element {
  std::vector<std::int64_t> coords;

  Element() = default;
  explicit Element(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Element(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t &operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Element &, const Element &) = default;
  friend auto operator<=>(const Element &, const Element &) = default;
};

std::string to_string(const Element &e);

/// Parses "6", "2x2x3", "Z4xZ2", "C2,C6", "(2, 6)" and merges elementary
/// divisors into invariant-factor form.
GroupSpec parse_group_spec(std::string_view text);

/// Invariant-factor form of an arbitrary direct sum of cyclic groups.
/// Factors equal to 1 are dropped; factors < 1 throw.
GroupSpec canonical_group(std::span<const std::int64_t> cyclic_orders);

/// All elements in lexicographic coordinate order; index 0 is zero.
std::vector<Element> elements(const GroupSpec &g);

/// Lexicographic rank of e, i.e. its position in elements(g).
std::int64_t index_of(const GroupSpec &g, const Element &e);
Element element_at(const GroupSpec &g, std::int64_t index);

bool contains(const GroupSpec &g, const Element &e);

Element zero(const GroupSpec &g);
Element add(const GroupSpec &g, const Element &a, const Element &b);
Element sub(const GroupSpec &g, const Element &a, const Element &b);
Element neg(const GroupSpec &g, const Element &a);
Element scalar_mul(const GroupSpec &g, std::int64_t k, const Element &a);

/// Sum of all elements of g.
Element sigma(const GroupSpec &g);

/// Least d >= 1 with d*e = 0.
std::int64_t element_order(const GroupSpec &g, const Element &e);

/// Number of elements of order exactly d (0 when d does not divide |g|).
std::int64_t count_by_order(const GroupSpec &g, std::int64_t d);

/// |{x : 2x = 0}| = 2^(number of even invariant factors).
std::int64_t two_torsion_count(const GroupSpec &g);

/// Number of even invariant factors; Sigma(G) != 0 iff this equals 1.
std::size_t even_factor_count(const GroupSpec &g);

/// G = H + Z/c with H of odd order and c = 2^a the 2-part of the single
/// even invariant factor. Coordinates of G map to (H coords, residue mod c)
/// through the Chinese remainder theorem on the last factor.
class EvenSplit {
public:
  const GroupSpec &odd_part() const { return odd_; }
  std::int64_t cyclic_order() const { return cyclic_; }
  const GroupSpec &group() const { return whole_; }

  Element combine(const Element &h, std::int64_t z) const;
  std::pair<Element, std::int64_t> split(const Element &g) const;

private:
  friend EvenSplit decompose_even(const GroupSpec &g);
  GroupSpec whole_;
  GroupSpec odd_;
  std::int64_t cyclic_ = 1;
  std::int64_t odd_last_ = 1; // odd part of the last invariant factor
};

/// Requires |G| even and Sigma(G) != 0; throws std::invalid_argument otherwise.
EvenSplit decompose_even(const GroupSpec &g);

/// All isomorphism classes of abelian groups of the given order, cyclic
/// group first, ordered by the exponent partitions of each prime in
/// increasing prime order (partitions in reverse lexicographic order).
std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t order);
std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t lo, std::int64_t hi);

/// Dense index-based view of a small group used by the search and
/// enumeration hot loops. Vertex i corresponds to element_at(g, i).
class IndexedGroup {
public:
  explicit IndexedGroup(const GroupSpec &g);

  const GroupSpec &spec() const { return spec_; }
  std::uint32_t size() const { return n_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add_[static_cast<std::size_t>(a) * n_ + neg_[b]];
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }

  Element element(std::uint32_t i) const { return element_at(spec_, i); }
  std::uint32_t index(const Element &e) const {
    return static_cast<std::uint32_t>(index_of(spec_, e));
  }

  static constexpr std::int64_t max_order = 4096;

private:
  GroupSpec spec_;
  std::uint32_t n_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

} // namespace abelcycles
