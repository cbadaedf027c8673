#pragma once

#include <stdexcept>

#include "abelcycles/trail.hpp"

namespace abelcycles {

/// Thrown when a builder's own output fails its postcondition.
class ConstructionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Hamiltonian cycle with exactly rk(G) distinct differences. Built from the
/// natural cycle on the largest factor by adding the remaining factors as
/// new leading coordinates, one layer of |H| vertices per residue.
Trail min_diff_cycle(const GroupSpec &g);

/// Even order: cycle (h_1, s-h_1, h_2, s-h_2, ...) over an index-2 subgroup
/// H and s outside H, with |S| = rk(G) if m_1 = 2 and rk(G) + 1 otherwise.
Trail interleaved_even_cycle(const GroupSpec &g);

/// Odd order: cycle with |S| <= 2 rk(G) + 1 (exactly 3 for cyclic groups).
Trail odd_smin_cycle(const GroupSpec &g);

/// Rainbow-sum Hamiltonian path; requires exactly one even invariant factor.
Trail rs_path(const GroupSpec &g);

/// Rainbow-sum Hamiltonian cycle on a group of odd order >= 3.
Trail rs_cycle_odd(const GroupSpec &g);

/// The 8-vertex cycle on Z2^3 with six distinct sums.
Trail elementary8_cycle(const GroupSpec &g);

/// (0, 1, n-1, 2, n-2, ...) on Z/n, n even: a rainbow-difference path.
Trail zigzag_rd_path_cyclic_even(const GroupSpec &g);

/// |S| realised by interleaved_even_cycle: rk if m_1 = 2, else rk + 1.
std::size_t even_smin_value(const GroupSpec &g);

} // namespace abelcycles
