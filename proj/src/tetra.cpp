#include "tetragme/tetra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tetragme/errors.hpp"
#include "tetragme/linalg.hpp"

namespace tetragme {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kHeronTol = 1e-12;
constexpr double kZeroEdge = 1e-9;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Closed form as a raw function of the six lengths with the feet pairing
// fixed: base_vw joins the feet of v and w, etc.
double closed_form_raw(double u, double v, double w, double base_vw, double base_uw,
                       double base_uv, double* radicand_out = nullptr) {
  const double D = v * v + w * w - base_vw * base_vw;
  const double E = u * u + w * w - base_uw * base_uw;
  const double F = u * u + v * v - base_uv * base_uv;
  const double rad = 4.0 * u * u * v * v * w * w - u * u * D * D - v * v * E * E -
                     w * w * F * F + D * E * F;
  if (radicand_out) *radicand_out = rad;
  if (rad < -kFeasTol)
    throw InfeasibleEdgesError("closed_form_volume: negative Gram radicand", rad);
  return std::sqrt(std::max(0.0, rad)) / 12.0;
}

struct FeetBases {
  double vw, uw, uv;  // base edges joining the named apex feet
};

FeetBases feet_bases(const TetraEdges& e) {
  return {e.base_between(e.apex[1].qubit, e.apex[2].qubit),
          e.base_between(e.apex[0].qubit, e.apex[2].qubit),
          e.base_between(e.apex[0].qubit, e.apex[1].qubit)};
}

double cm_determinant(const TetraEdges& e) {
  const auto kept = e.kept();
  double d[4][4] = {};
  for (int k = 0; k < 3; ++k) {
    // apex edge runs to its own foot
    double len = 0;
    for (const auto& a : e.apex)
      if (a.qubit == kept[static_cast<size_t>(k)]) len = a.length;
    d[0][k + 1] = d[k + 1][0] = len;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      d[i + 1][j + 1] = d[j + 1][i + 1] =
          e.base_between(kept[static_cast<size_t>(i)], kept[static_cast<size_t>(j)]);

  std::array<std::array<double, 5>, 5> m{};
  m[0][0] = 0;
  for (int i = 1; i < 5; ++i) m[0][static_cast<size_t>(i)] = m[static_cast<size_t>(i)][0] = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m[static_cast<size_t>(i + 1)][static_cast<size_t>(j + 1)] = d[i][j] * d[i][j];
  return det5(m);
}

}  // namespace

std::array<int, 3> TetraEdges::kept() const {
  std::array<int, 3> k = {apex[0].qubit, apex[1].qubit, apex[2].qubit};
  std::sort(k.begin(), k.end());
  return k;
}

double TetraEdges::base_between(int qa, int qb) const {
  if (qa > qb) std::swap(qa, qb);
  for (const auto& b : base)
    if (b.qa == qa && b.qb == qb) return b.length;
  throw std::invalid_argument("TetraEdges: no base edge between qubits " +
                              std::to_string(qa) + " and " + std::to_string(qb));
}

TetraEdges build_edges(const ConcurrenceProfile& profile) {
  int drop = 1;
  for (int q = 2; q <= 4; ++q)
    if (profile.one(q) >= profile.one(drop)) drop = q;  // ties: larger label

  TetraEdges e{};
  e.dropped_qubit = drop;
  int n = 0;
  int kept[3];
  for (int q = 1; q <= 4; ++q)
    if (q != drop) {
      e.apex[static_cast<size_t>(n)] = {q, profile.one(q)};
      kept[n++] = q;
    }
  std::sort(e.apex.begin(), e.apex.end(), [](const ApexEdge& x, const ApexEdge& y) {
    return x.length != y.length ? x.length < y.length : x.qubit < y.qubit;
  });
  e.base[0] = {kept[0], kept[1], profile.two(pair_cut_of(kept[0], kept[1]))};
  e.base[1] = {kept[0], kept[2], profile.two(pair_cut_of(kept[0], kept[2]))};
  e.base[2] = {kept[1], kept[2], profile.two(pair_cut_of(kept[1], kept[2]))};
  return e;
}

LemmaGap lemma_gap(const TetraEdges& edges) {
  const double e1 = edges.base[0].length, e2 = edges.base[1].length, e3 = edges.base[2].length;
  const double p = 0.5 * (e1 + e2 + e3);
  const double heron = p * (p - e1) * (p - e2) * (p - e3);
  if (heron <= kHeronTol) {
    const double slack = std::min({p - e1, p - e2, p - e3});
    throw DegenerateBaseError("lemma_gap: degenerate base triangle", slack);
  }
  const double R = e1 * e2 * e3 / (4.0 * std::sqrt(heron));
  const double H = edges.u() + edges.v() + edges.w();
  return {H, p, R, H - 3.0 * R};
}

CmVolume cm_volume(const TetraEdges& edges) {
  const double cm = cm_determinant(edges);
  if (cm < -kFeasTol)
    throw InfeasibleEdgesError("cm_volume: unrealizable edge set", cm);
  return {cm, std::sqrt(std::max(0.0, cm) / 288.0)};
}

double closed_form_volume(const TetraEdges& edges) {
  const auto fb = feet_bases(edges);
  return closed_form_raw(edges.u(), edges.v(), edges.w(), fb.vw, fb.uw, fb.uv);
}

double VolumeGradient::base_partial(PairCut cut) const {
  for (const auto& b : base)
    if (pair_cut_of(b.qa, b.qb) == cut) return b.length;
  throw std::logic_error("VolumeGradient: missing base partial");
}

double VolumeGradient::min_component() const {
  double m = std::min({du, dv, dw});
  for (const auto& b : base) m = std::min(m, b.length);
  return m;
}

VolumeGradient volume_gradient(const TetraEdges& edges) {
  const auto fb = feet_bases(edges);
  double len[6] = {edges.u(), edges.v(), edges.w(), fb.vw, fb.uw, fb.uv};
  double partial[6];
  for (int k = 0; k < 6; ++k) {
    const double h = 1e-6 * std::max(1.0, len[k]);
    double plus[6], minus[6];
    std::copy(len, len + 6, plus);
    std::copy(len, len + 6, minus);
    plus[k] += h;
    minus[k] -= h;
    const double vp = closed_form_raw(plus[0], plus[1], plus[2], plus[3], plus[4], plus[5]);
    const double vm = closed_form_raw(minus[0], minus[1], minus[2], minus[3], minus[4], minus[5]);
    partial[k] = (vp - vm) / (2.0 * h);
  }
  VolumeGradient g{};
  g.du = partial[0];
  g.dv = partial[1];
  g.dw = partial[2];
  const int fvw[2] = {edges.apex[1].qubit, edges.apex[2].qubit};
  const int fuw[2] = {edges.apex[0].qubit, edges.apex[2].qubit};
  const int fuv[2] = {edges.apex[0].qubit, edges.apex[1].qubit};
  g.base[0] = {std::min(fvw[0], fvw[1]), std::max(fvw[0], fvw[1]), partial[3]};
  g.base[1] = {std::min(fuw[0], fuw[1]), std::max(fuw[0], fuw[1]), partial[4]};
  g.base[2] = {std::min(fuv[0], fuv[1]), std::max(fuv[0], fuv[1]), partial[5]};
  return g;
}

TetraReport tetra_report(const TetraEdges& edges) {
  TetraReport r{};
  const double e1 = edges.base[0].length, e2 = edges.base[1].length, e3 = edges.base[2].length;
  r.H = edges.u() + edges.v() + edges.w();
  r.p = 0.5 * (e1 + e2 + e3);
  r.min_base_slack = std::min({r.p - e1, r.p - e2, r.p - e3});
  const double heron = r.p * (r.p - e1) * (r.p - e2) * (r.p - e3);
  r.degenerate_base = heron <= kHeronTol;
  if (r.degenerate_base) {
    r.R = kNaN;
    r.G = kNaN;
  } else {
    r.R = e1 * e2 * e3 / (4.0 * std::sqrt(heron));
    r.G = r.H - 3.0 * r.R;
  }
  r.apex_zero = edges.u() <= kZeroEdge;

  const auto fb = feet_bases(edges);
  r.D = edges.v() * edges.v() + edges.w() * edges.w() - fb.vw * fb.vw;
  r.E = edges.u() * edges.u() + edges.w() * edges.w() - fb.uw * fb.uw;
  r.F = edges.u() * edges.u() + edges.v() * edges.v() - fb.uv * fb.uv;

  r.cm_det = cm_determinant(edges);
  // a negative slack only counts as a violation above the concurrence noise
  // floor; below it the base triangle is numerically a point, not an
  // unrealizable edge set (all-product states land here after rotation)
  const bool slack_violation = r.min_base_slack < -kFeasTol && 2.0 * r.p > 1e-6;
  r.feasible = !slack_violation && r.cm_det >= -kFeasTol;
  if (2.0 * r.p <= 1e-6) r.degenerate_base = true;
  if (!r.feasible) {
    r.volume = kNaN;
    return r;
  }
  if (r.apex_zero || r.degenerate_base) {
    r.volume = 0.0;
    return r;
  }
  r.volume = std::sqrt(std::max(0.0, r.cm_det) / 288.0);
  double rad;
  const double closed = closed_form_raw(edges.u(), edges.v(), edges.w(), fb.vw, fb.uw,
                                        fb.uv, &rad);
  r.closed_cm_gap = std::abs(closed - r.volume);
  return r;
}

}  // namespace tetragme
