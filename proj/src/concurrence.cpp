#include "tetragme/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tetragme {

std::string pair_cut_name(PairCut cut) {
  switch (cut) {
    case PairCut::c12_34: return "12|34";
    case PairCut::c13_24: return "13|24";
    case PairCut::c14_23: return "14|23";
  }
  throw std::logic_error("pair_cut_name: bad cut");
}

PairCut pair_cut_of(int qa, int qb) {
  if (qa > qb) std::swap(qa, qb);
  if (qa < 1 || qb > 4 || qa == qb) throw std::invalid_argument("pair_cut_of: invalid pair");
  if (qa != 1) {  // complement contains qubit 1
    int other = 10 - 1 - qa - qb;  // the remaining label besides 1, qa, qb
    qb = other;
    qa = 1;
    if (qa > qb) std::swap(qa, qb);
  }
  switch (qb) {
    case 2: return PairCut::c12_34;
    case 3: return PairCut::c13_24;
    case 4: return PairCut::c14_23;
  }
  throw std::logic_error("pair_cut_of: unreachable");
}

double ConcurrenceProfile::min_entry() const {
  double m = c_one[0];
  for (double v : c_one) m = std::min(m, v);
  for (double v : c_two) m = std::min(m, v);
  return m;
}

double bipartition_concurrence(const PureState4& state, const Bipartition& cut) {
  const ReducedDensity rho = partial_trace(state, cut);
  // 2 (1 - Tr rho^2) = 2 ((Tr rho)^2 - Tr rho^2) = 4 sum_{a<b} 2x2 minors
  double sum = 0;
  for (int a = 0; a < rho.dim(); ++a)
    for (int b = a + 1; b < rho.dim(); ++b)
      sum += rho.entry(a, a).real() * rho.entry(b, b).real() - std::norm(rho.entry(a, b));
  return std::sqrt(std::max(0.0, 4.0 * sum));
}

ConcurrenceProfile concurrence_profile(const PureState4& state) {
  ConcurrenceProfile p{};
  for (int q = 1; q <= 4; ++q)
    p.c_one[static_cast<size_t>(q - 1)] = bipartition_concurrence(state, Bipartition::keep_one(q));
  for (int qb = 2; qb <= 4; ++qb)
    p.c_two[static_cast<size_t>(qb - 2)] = bipartition_concurrence(state, Bipartition::keep_pair(1, qb));
  return p;
}

ResidualReport inequality_residuals(const ConcurrenceProfile& profile) {
  ResidualReport r{};
  const double sum1 = profile.c_one[0] + profile.c_one[1] + profile.c_one[2] + profile.c_one[3];
  for (size_t i = 0; i < 4; ++i) r.polygon[i] = sum1 - 2.0 * profile.c_one[i];
  const double sum2 = profile.c_two[0] + profile.c_two[1] + profile.c_two[2];
  for (size_t i = 0; i < 3; ++i) r.triangle[i] = sum2 - 2.0 * profile.c_two[i];
  r.min_polygon = *std::min_element(r.polygon.begin(), r.polygon.end());
  r.min_triangle = *std::min_element(r.triangle.begin(), r.triangle.end());
  return r;
}

}  // namespace tetragme
