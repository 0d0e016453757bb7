#pragma once

#include <array>
#include <string>

#include "tetragme/state.hpp"

namespace tetragme {

/// The three 2|2 cuts in canonical order.
enum class PairCut : int { c12_34 = 0, c13_24 = 1, c14_23 = 2 };

std::string pair_cut_name(PairCut cut);             // "12|34", ...
PairCut pair_cut_of(int qa, int qb);                // cut separating {qa,qb}

/// All seven bipartition concurrences of one state.
struct ConcurrenceProfile {
  std::array<double, 4> c_one;  // C_i, index i-1 <-> qubit i
  std::array<double, 3> c_two;  // C_{ij|kl}, indexed by PairCut

  double one(int qubit) const { return c_one[static_cast<size_t>(qubit - 1)]; }
  double two(PairCut cut) const { return c_two[static_cast<size_t>(cut)]; }
  double min_entry() const;
};

/// C = sqrt(2 (1 - Tr rho^2)) for the kept side of the cut. Evaluated as
/// twice the sum of 2x2 principal minors of rho, which equals the same
/// quantity for a unit-trace rho but stays exactly zero on product states
/// instead of picking up sqrt-amplified rounding noise.
double bipartition_concurrence(const PureState4& state, const Bipartition& cut);

ConcurrenceProfile concurrence_profile(const PureState4& state);

/// Signed slacks of the two polygon-style inequalities.
/// polygon[i-1] = sum_{k != i} C_k - C_i         (one-vs-three cuts)
/// triangle[p]  = sum of the other two C_two - C_two[p]
struct ResidualReport {
  std::array<double, 4> polygon;
  std::array<double, 3> triangle;
  double min_polygon;
  double min_triangle;
};

ResidualReport inequality_residuals(const ConcurrenceProfile& profile);

}  // namespace tetragme
