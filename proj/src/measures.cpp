#include "tetragme/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tetragme {

namespace {

inline int qubit_bit(int index, int qubit) { return (index >> (4 - qubit)) & 1; }

// Residual three-qubit factor after projecting qubit `q` onto the dominant
// eigenvector of its (nearly pure) marginal. Basis of the remaining qubits:
// ascending label, most significant first.
std::array<Cx, 8> residual_factor(const PureState4& state, int q) {
  const ReducedDensity rho = partial_trace(state, Bipartition::keep_one(q));
  const double a = rho.entry(0, 0).real();
  const double d = rho.entry(1, 1).real();
  const Cx b = rho.entry(0, 1);
  const double half_gap = 0.5 * (a - d);
  const double lam = 0.5 * (a + d) + std::sqrt(half_gap * half_gap + std::norm(b));
  Cx phi0, phi1;
  if (std::abs(b) > 1e-15) {
    phi0 = b;
    phi1 = Cx(lam - a, 0);
  } else if (a >= d) {
    phi0 = 1;
    phi1 = 0;
  } else {
    phi0 = 0;
    phi1 = 1;
  }
  const double n = std::sqrt(std::norm(phi0) + std::norm(phi1));
  phi0 /= n;
  phi1 /= n;

  std::array<Cx, 8> chi{};
  double norm_sq = 0;
  for (int i = 0; i < 16; ++i) {
    int rest = 0;
    for (int qq = 1; qq <= 4; ++qq)
      if (qq != q) rest = (rest << 1) | qubit_bit(i, qq);
    const Cx proj = qubit_bit(i, q) == 0 ? std::conj(phi0) : std::conj(phi1);
    chi[static_cast<size_t>(rest)] += proj * state.amp(i);
  }
  for (const auto& c : chi) norm_sq += std::norm(c);
  const double nn = std::sqrt(norm_sq);
  if (nn > 1e-300)
    for (auto& c : chi) c /= nn;
  return chi;
}

// Cayley hyperdeterminant 3-tangle: 1 for GHZ, 0 for W.
double three_tangle(const std::array<Cx, 8>& c) {
  auto at = [&](int i, int j, int k) { return c[static_cast<size_t>(4 * i + 2 * j + k)]; };
  const Cx d1 = at(0, 0, 0) * at(0, 0, 0) * at(1, 1, 1) * at(1, 1, 1) +
                at(0, 0, 1) * at(0, 0, 1) * at(1, 1, 0) * at(1, 1, 0) +
                at(0, 1, 0) * at(0, 1, 0) * at(1, 0, 1) * at(1, 0, 1) +
                at(1, 0, 0) * at(1, 0, 0) * at(0, 1, 1) * at(0, 1, 1);
  const Cx d2 = at(0, 0, 0) * at(1, 1, 1) * at(0, 1, 1) * at(1, 0, 0) +
                at(0, 0, 0) * at(1, 1, 1) * at(1, 0, 1) * at(0, 1, 0) +
                at(0, 0, 0) * at(1, 1, 1) * at(1, 1, 0) * at(0, 0, 1) +
                at(0, 1, 1) * at(1, 0, 0) * at(1, 0, 1) * at(0, 1, 0) +
                at(0, 1, 1) * at(1, 0, 0) * at(1, 1, 0) * at(0, 0, 1) +
                at(1, 0, 1) * at(0, 1, 0) * at(1, 1, 0) * at(0, 0, 1);
  const Cx d3 = at(0, 0, 0) * at(1, 1, 0) * at(1, 0, 1) * at(0, 1, 1) +
                at(1, 1, 1) * at(0, 0, 1) * at(0, 1, 0) * at(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

}  // namespace

std::string class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::GenuineME: return "GenuineME";
    case ClassKind::OneVsThreeProduct: return "OneVsThreeProduct";
    case ClassKind::TwoTwoBiseparable: return "TwoTwoBiseparable";
    case ClassKind::TwoEprPairs: return "TwoEprPairs";
    case ClassKind::FullySeparable: return "FullySeparable";
  }
  throw std::logic_error("class_kind_name: bad kind");
}

std::string ClassLabel::describe() const {
  std::string s = class_kind_name(kind);
  if (kind == ClassKind::OneVsThreeProduct) {
    s += "(" + std::to_string(qubit) + ")";
    if (residual_kind) s += " residual=" + *residual_kind;
  } else if (partition) {
    s += "(" + pair_cut_name(*partition) + ")";
  }
  return s;
}

ClassLabel classify(const PureState4& state, double eps) {
  if (!(eps > 0.0) || eps > 1e-3)
    throw std::invalid_argument("classify: eps must lie in (0, 1e-3]");
  const ConcurrenceProfile prof = concurrence_profile(state);

  double max_entry = 0;
  for (double v : prof.c_one) max_entry = std::max(max_entry, v);
  for (double v : prof.c_two) max_entry = std::max(max_entry, v);
  if (max_entry <= eps) {
    ClassLabel l{ClassKind::FullySeparable};
    l.witness_value = max_entry;
    return l;
  }

  int zero_qubit = 0, zero_count = 0;
  for (int q = 1; q <= 4; ++q)
    if (prof.one(q) <= eps) {
      zero_qubit = q;
      ++zero_count;
    }
  if (zero_count == 1) {
    // the other three C_i exceed eps, so the residual three qubits are GME
    ClassLabel l{ClassKind::OneVsThreeProduct};
    l.qubit = zero_qubit;
    l.witness_value = prof.one(zero_qubit);
    const double tangle = three_tangle(residual_factor(state, zero_qubit));
    l.residual_tangle = tangle;
    l.residual_kind = tangle >= 0.5 ? "ghz_like" : "w_like";
    return l;
  }

  // 2x2 product with at least one internally entangled side
  int best_cut = -1;
  double best_value = 0;
  for (int idx = 0; idx < 3; ++idx) {
    const auto cut = static_cast<PairCut>(idx);
    if (prof.two(cut) > eps) continue;
    const int qb = 2 + idx;           // cut separates {1, qb} from the rest
    const int rest1 = qb == 2 ? 3 : 2;
    const int rest2 = qb == 4 ? 3 : 4;
    const bool side_a = prof.one(1) > eps && prof.one(qb) > eps;
    const bool side_b = prof.one(rest1) > eps && prof.one(rest2) > eps;
    if (side_a || side_b) {
      if (best_cut < 0 || prof.two(cut) < best_value) {
        best_cut = idx;
        best_value = prof.two(cut);
      }
    }
  }
  if (best_cut >= 0) {
    ClassLabel l{ClassKind::TwoEprPairs};
    l.partition = static_cast<PairCut>(best_cut);
    l.witness_value = best_value;
    return l;
  }

  const ResidualReport res = inequality_residuals(prof);
  int tight = -1;
  for (int idx = 0; idx < 3; ++idx)
    if (res.triangle[static_cast<size_t>(idx)] <= eps &&
        (tight < 0 || res.triangle[static_cast<size_t>(idx)] < res.triangle[static_cast<size_t>(tight)]))
      tight = idx;
  if (tight >= 0) {
    ClassLabel l{ClassKind::TwoTwoBiseparable};
    l.partition = static_cast<PairCut>(tight);
    l.witness_value = res.triangle[static_cast<size_t>(tight)];
    return l;
  }

  ClassLabel l{ClassKind::GenuineME};
  l.witness_value = prof.min_entry();
  return l;
}

double gmc(const PureState4& state) {
  return concurrence_profile(state).min_entry();
}

MeasureReport v1234(const PureState4& state, double eps) {
  MeasureReport r{};
  r.profile = concurrence_profile(state);
  r.edges = build_edges(r.profile);
  r.tetra = tetra_report(r.edges);
  r.gmc = r.profile.min_entry();
  r.label = classify(state, eps);
  return r;
}

}  // namespace tetragme
