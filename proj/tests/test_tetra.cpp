#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "tetragme/errors.hpp"
#include "tetragme/families.hpp"
#include "tetragme/measures.hpp"
#include "tetragme/rng.hpp"
#include "tetragme/tetra.hpp"

using namespace tetragme;

namespace {

const double kR3 = std::sqrt(3.0) / 2.0;
const double kR5 = std::sqrt(5.0) / 2.0;

TetraEdges synthetic(std::array<double, 3> apex, std::array<double, 3> base,
                     std::array<int, 3> kept = {1, 2, 3}) {
  // base order follows the kept pairs (k1,k2), (k1,k3), (k2,k3)
  TetraEdges e{};
  e.dropped_qubit = 10 - kept[0] - kept[1] - kept[2];
  for (int i = 0; i < 3; ++i)
    e.apex[static_cast<size_t>(i)] = {kept[static_cast<size_t>(i)], apex[static_cast<size_t>(i)]};
  std::sort(e.apex.begin(), e.apex.end(), [](const ApexEdge& x, const ApexEdge& y) {
    return x.length != y.length ? x.length < y.length : x.qubit < y.qubit;
  });
  e.base[0] = {kept[0], kept[1], base[0]};
  e.base[1] = {kept[0], kept[2], base[1]};
  e.base[2] = {kept[1], kept[2], base[2]};
  return e;
}

struct Point {
  double x, y, z;
};

double dist(const Point& a, const Point& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

// |det[P1-P0, P2-P0, P3-P0]| / 6 — the third, fully independent volume route
double point_volume(const std::array<Point, 4>& p) {
  const double m[3][3] = {{p[1].x - p[0].x, p[1].y - p[0].y, p[1].z - p[0].z},
                          {p[2].x - p[0].x, p[2].y - p[0].y, p[2].z - p[0].z},
                          {p[3].x - p[0].x, p[3].y - p[0].y, p[3].z - p[0].z}};
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return std::abs(det) / 6.0;
}

TetraEdges edges_from_points(const std::array<Point, 4>& p) {
  return synthetic({dist(p[0], p[1]), dist(p[0], p[2]), dist(p[0], p[3])},
                   {dist(p[1], p[2]), dist(p[1], p[3]), dist(p[2], p[3])});
}

std::array<Point, 4> random_points(RandomStream& rng) {
  std::array<Point, 4> p;
  for (auto& pt : p) pt = {rng.next_uniform(), rng.next_uniform(), rng.next_uniform()};
  return p;
}

}  // namespace

TEST_CASE("build_edges drops the largest one-vs-three concurrence") {
  const TetraEdges a = build_edges(concurrence_profile(benchmark_state("psiA")));
  CHECK(a.dropped_qubit == 4);
  CHECK(a.apex[0].qubit == 1);
  CHECK(a.apex[0].length == doctest::Approx(kR3).epsilon(1e-12));
  CHECK(a.apex[1].length == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.apex[2].length == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& b : a.base) CHECK(b.length == doctest::Approx(kR5).epsilon(1e-12));
  CHECK(a.base_between(2, 3) == doctest::Approx(kR5).epsilon(1e-12));  // the 14|23 cut

  // all-equal profile: tie-break drops the largest label
  const TetraEdges g = build_edges(concurrence_profile(benchmark_state("ghz4")));
  CHECK(g.dropped_qubit == 4);
  for (const auto& ap : g.apex) CHECK(ap.length == doctest::Approx(1.0).epsilon(1e-12));

  // psiB: the unique maximum sits at qubit 2 (the tabulated display says
  // qubit 3; see docs/discrepancies.md)
  const TetraEdges b = build_edges(concurrence_profile(benchmark_state("psiB")));
  CHECK(b.dropped_qubit == 2);
  CHECK(b.kept() == std::array<int, 3>{1, 3, 4});
  for (const auto& ap : b.apex) CHECK(ap.length == doctest::Approx(kR3).epsilon(1e-12));
  CHECK(b.base_between(3, 4) == doctest::Approx(kR5).epsilon(1e-12));  // 12|34 cut
  CHECK(b.base_between(1, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.base_between(1, 4) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lemma_gap reference values") {
  const LemmaGap a = lemma_gap(build_edges(concurrence_profile(benchmark_state("psiA"))));
  CHECK(a.H == doctest::Approx(kR3 + 2.0).epsilon(1e-12));
  CHECK(a.G == doctest::Approx(0.92953).epsilon(1e-4));
  CHECK(a.G == doctest::Approx(0.92953373068072964).epsilon(1e-12));

  const LemmaGap b = lemma_gap(build_edges(concurrence_profile(benchmark_state("psiB"))));
  CHECK(b.H == doctest::Approx(3.0 * kR3).epsilon(1e-12));
  CHECK(b.G == doctest::Approx(0.78904).epsilon(1e-3));
  CHECK(b.G == doctest::Approx(0.78900814388673446).epsilon(1e-12));

  // apex sitting at the circumcenter distance: equilateral side 1, apex 1/sqrt(3)
  const LemmaGap flat = lemma_gap(synthetic({1 / std::sqrt(3.0), 1 / std::sqrt(3.0),
                                             1 / std::sqrt(3.0)},
                                            {1, 1, 1}));
  CHECK(flat.G == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(flat.R == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("lemma_gap signals a degenerate base") {
  try {
    lemma_gap(synthetic({1, 1, 1}, {1.0, 0.0, 1.0}));
    FAIL("expected DegenerateBaseError");
  } catch (const DegenerateBaseError& e) {
    CHECK(e.offending_slack() == doctest::Approx(0.0).epsilon(1e-12));
  }
  // triangle inequality violated outright: slack is negative
  try {
    lemma_gap(synthetic({1, 1, 1}, {3.0, 1.0, 1.0}));
    FAIL("expected DegenerateBaseError");
  } catch (const DegenerateBaseError& e) {
    CHECK(e.offending_slack() < -0.4);
  }
}

TEST_CASE("cm_volume reference values") {
  const CmVolume reg = cm_volume(synthetic({1, 1, 1}, {1, 1, 1}));
  CHECK(reg.volume == doctest::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-14));
  CHECK(reg.cm_det == doctest::Approx(4.0).epsilon(1e-14));

  // coplanar: apex at the circumcenter; the determinant cancels to rounding
  // noise, so the volume only vanishes to ~sqrt(noise)
  const CmVolume flat = cm_volume(synthetic(
      {1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)}, {1, 1, 1}));
  CHECK(std::abs(flat.cm_det) < 1e-12);
  CHECK(flat.volume < 1e-7);

  const CmVolume a = cm_volume(build_edges(concurrence_profile(benchmark_state("psiA"))));
  CHECK(a.volume == doctest::Approx(0.1254).epsilon(5e-4));
}

TEST_CASE("closed_form_volume reference values") {
  const PureState4 psiA = benchmark_state("psiA");
  const TetraEdges ea = build_edges(concurrence_profile(psiA));
  const TetraReport ra = tetra_report(ea);
  CHECK(ra.D == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(ra.E == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ra.F == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(closed_form_volume(ea) == doctest::Approx(0.125433276862).epsilon(1e-10));

  const TetraEdges eb = build_edges(concurrence_profile(benchmark_state("psiB")));
  const TetraReport rb = tetra_report(eb);
  std::array<double, 3> def = {rb.D, rb.E, rb.F};
  std::sort(def.begin(), def.end());
  CHECK(def[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(def[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(def[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(closed_form_volume(eb) == doctest::Approx(0.0960).epsilon(5e-4));

  const TetraEdges reg = synthetic({1, 1, 1}, {1, 1, 1});
  CHECK(closed_form_volume(reg) == doctest::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-14));
}

TEST_CASE("closed form and Cayley-Menger agree on random point tetrahedra") {
  RandomStream rng(20240817);
  double max_cm_gap = 0, max_true_gap = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto pts = random_points(rng);
    const TetraEdges e = edges_from_points(pts);
    const double closed = closed_form_volume(e);
    const CmVolume cm = cm_volume(e);
    max_cm_gap = std::max(max_cm_gap, std::abs(closed - cm.volume));
    max_true_gap = std::max(max_true_gap, std::abs(cm.volume - point_volume(pts)));
  }
  CHECK(max_cm_gap < 1e-10);
  CHECK(max_true_gap < 1e-9);
}

TEST_CASE("volume scales as lambda^3") {
  RandomStream rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto pts = random_points(rng);
    const TetraEdges e = edges_from_points(pts);
    const double v = closed_form_volume(e);
    if (v < 1e-4) continue;  // scaling amplifies a near-degenerate radicand's noise
    for (double lam : {0.3, 2.5}) {
      TetraEdges scaled = e;  // scaling keeps the apex order and feet pairing
      for (auto& ap : scaled.apex) ap.length *= lam;
      for (auto& b : scaled.base) b.length *= lam;
      const double vs = closed_form_volume(scaled);
      CHECK(std::abs(vs - lam * lam * lam * v) <= 1e-9 * std::max(1.0, lam * lam * lam * v));
    }
  }
}

TEST_CASE("volume is invariant under base-vertex relabeling") {
  RandomStream rng(4321);
  const std::array<std::array<int, 3>, 3> relabels = {{{1, 2, 4}, {2, 3, 4}, {1, 3, 4}}};
  for (int i = 0; i < 100; ++i) {
    const auto pts = random_points(rng);
    const TetraEdges e = edges_from_points(pts);
    const double v = cm_volume(e).volume;
    for (const auto& kept : relabels) {
      // carry each apex edge and base edge to the renamed vertices
      const TetraEdges moved = synthetic({dist(pts[0], pts[1]), dist(pts[0], pts[2]),
                                          dist(pts[0], pts[3])},
                                         {dist(pts[1], pts[2]), dist(pts[1], pts[3]),
                                          dist(pts[2], pts[3])},
                                         kept);
      CHECK(std::abs(cm_volume(moved).volume - v) < 1e-12);
      CHECK(std::abs(closed_form_volume(moved) - v) < 1e-10);
    }
  }
}

TEST_CASE("volume is invariant under qubit relabeling when the maximum is unique") {
  int used = 0;
  for (std::uint64_t k = 0; used < 40; ++k) {
    const PureState4 psi = haar_state(31337, k);
    const ConcurrenceProfile prof = concurrence_profile(psi);
    std::array<double, 4> c = prof.c_one;
    std::sort(c.begin(), c.end());
    if (c[3] - c[2] < 1e-3) continue;  // want a strictly unique maximum
    ++used;
    const double v = tetra_report(build_edges(prof)).volume;
    for (const auto& perm : {std::array<int, 4>{2, 1, 4, 3}, std::array<int, 4>{4, 3, 2, 1},
                             std::array<int, 4>{3, 4, 1, 2}}) {
      const double vp =
          tetra_report(build_edges(concurrence_profile(permute_qubits(psi, perm)))).volume;
      CHECK(std::abs(vp - v) < 1e-9);
    }
  }
}

TEST_CASE("zero apex edge collapses the tetrahedron") {
  const PureState4 psi1 = family_state({Family::F1});
  const TetraEdges e = build_edges(concurrence_profile(psi1));
  CHECK(e.u() == 0.0);
  const TetraReport r = tetra_report(e);
  CHECK(r.cm_det <= 1e-9);
  CHECK(r.volume == 0.0);
  CHECK(r.feasible);
  // the lemma diagnostic stays positive here even though no tetrahedron
  // exists; realizability is decided by the determinant
  CHECK(lemma_gap(e).G == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("unrealizable edge sets are rejected") {
  // apex far too short to reach the base vertices
  const TetraEdges bad = synthetic({0.05, 0.05, 0.05}, {1, 1, 1});
  CHECK_THROWS_AS(cm_volume(bad), InfeasibleEdgesError);
  CHECK_THROWS_AS(closed_form_volume(bad), InfeasibleEdgesError);
  CHECK_THROWS_AS(volume_gradient(bad), InfeasibleEdgesError);
  const TetraReport r = tetra_report(bad);
  CHECK_FALSE(r.feasible);
  CHECK(r.cm_det < -1e-9);
}

TEST_CASE("tetra_report feasibility flag matches its definition") {
  RandomStream rng(808);
  for (int i = 0; i < 200; ++i) {
    const auto pts = random_points(rng);
    const TetraReport r = tetra_report(edges_from_points(pts));
    CHECK(r.feasible == (r.min_base_slack >= -1e-9 && r.cm_det >= -1e-9));
    if (r.feasible && !r.degenerate_base && !r.apex_zero) CHECK(r.closed_cm_gap < 1e-10);
  }
}

TEST_CASE("volume gradient spot values at psiA's edges") {
  const VolumeGradient g = volume_gradient(build_edges(concurrence_profile(benchmark_state("psiA"))));
  CHECK(g.du == doctest::Approx(0.1049).epsilon(3e-3));
  CHECK(std::abs(g.du - 0.1049) < 3e-4);
  CHECK(std::abs(g.dv - 0.0692) < 3e-4);
  CHECK(std::abs(g.dw - 0.0692) < 3e-4);
  std::array<double, 3> base = {g.base[0].length, g.base[1].length, g.base[2].length};
  std::sort(base.begin(), base.end());
  CHECK(std::abs(base[0] - 0.0387) < 3e-4);
  CHECK(std::abs(base[1] - 0.0387) < 3e-4);
  CHECK(std::abs(base[2] - 0.0542) < 3e-4);
  // the distinct partial belongs to the base edge opposite the u apex edge
  CHECK(g.base_partial(PairCut::c14_23) == doctest::Approx(0.0541611).epsilon(1e-4));
}

TEST_CASE("volume gradient spot values at psiB's edges") {
  const VolumeGradient g = volume_gradient(build_edges(concurrence_profile(benchmark_state("psiB"))));
  CHECK(std::abs(g.du - 0.0587) < 3e-4);
  CHECK(std::abs(g.dv - 0.0783) < 3e-4);
  CHECK(std::abs(g.dw - 0.0783) < 3e-4);
  std::array<double, 3> base = {g.base[0].length, g.base[1].length, g.base[2].length};
  std::sort(base.begin(), base.end());
  CHECK(std::abs(base[0] - 0.0101) < 3e-4);
  CHECK(std::abs(base[1] - 0.0452) < 3e-4);
  CHECK(std::abs(base[2] - 0.0452) < 3e-4);
}

TEST_CASE("regular tetrahedron has six equal partials") {
  const VolumeGradient g = volume_gradient(synthetic({1, 1, 1}, {1, 1, 1}));
  const double ref = g.du;
  CHECK(std::abs(g.dv - ref) < 1e-8);
  CHECK(std::abs(g.dw - ref) < 1e-8);
  for (const auto& b : g.base) CHECK(std::abs(b.length - ref) < 1e-8);
}
