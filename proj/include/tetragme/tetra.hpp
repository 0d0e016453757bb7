#pragma once

#include <array>

#include "tetragme/concurrence.hpp"

namespace tetragme {

struct ApexEdge {
  int qubit;      // kept qubit this edge runs to
  double length;  // C_qubit
};

struct BaseEdge {
  int qa, qb;     // kept qubits joined by this edge, qa < qb
  double length;  // C of the 2|2 cut {qa,qb}|{rest}
};

/// Concurrence tetrahedron: apex edges are the three smallest one-vs-three
/// concurrences (the qubit with the largest C_i is dropped, ties broken
/// toward the largest label); the base triangle is made of the three 2|2
/// concurrences, edge {p,q} carrying the cut that separates {p,q}.
struct TetraEdges {
  std::array<ApexEdge, 3> apex;  // ascending by (length, qubit): u <= v <= w
  std::array<BaseEdge, 3> base;  // pairs (k1,k2), (k1,k3), (k2,k3) of kept qubits
  int dropped_qubit;

  double u() const { return apex[0].length; }
  double v() const { return apex[1].length; }
  double w() const { return apex[2].length; }
  std::array<int, 3> kept() const;
  double base_between(int qa, int qb) const;
};

TetraEdges build_edges(const ConcurrenceProfile& profile);

/// H = u+v+w, p = base semiperimeter, R = base circumradius, G = H - 3R.
struct LemmaGap {
  double H;
  double p;
  double R;
  double G;
};

/// Throws DegenerateBaseError when the Heron radicand is <= 1e-12.
LemmaGap lemma_gap(const TetraEdges& edges);

struct CmVolume {
  double cm_det;  // bordered squared-distance determinant; 288 V^2
  double volume;
};

/// Cayley-Menger route: vertex 0 = apex, vertices 1..3 = kept qubits in
/// ascending label order. Throws InfeasibleEdgesError if cm_det < -1e-9.
CmVolume cm_volume(const TetraEdges& edges);

/// Gram-determinant closed form V = (1/12) sqrt(4u^2v^2w^2 - u^2 D^2
/// - v^2 E^2 - w^2 F^2 + DEF) with D = v^2+w^2-|vw base|^2 (base edge
/// joining the feet of v and w), E, F likewise for (u,w) and (u,v).
/// Throws InfeasibleEdgesError if the radicand is < -1e-9.
double closed_form_volume(const TetraEdges& edges);

struct VolumeGradient {
  double du, dv, dw;                   // partials along the sorted apex edges
  std::array<BaseEdge, 3> base;        // length field holds the partial
  double base_partial(PairCut cut) const;
  double min_component() const;
};

/// Central finite differences of closed_form_volume, step 1e-6*max(1,edge).
/// Throws if any stencil point is infeasible.
VolumeGradient volume_gradient(const TetraEdges& edges);

/// Non-throwing summary used by the measure pipeline and sweeps.
/// R and G are NaN when the base is degenerate; volume is NaN when
/// infeasible and exactly 0 in the degenerate cases.
struct TetraReport {
  double H = 0, p = 0;
  double R, G;
  double D = 0, E = 0, F = 0;
  double cm_det = 0;
  bool feasible = false;
  double volume;
  // diagnostics
  double min_base_slack = 0;      // min over p - base edge
  bool degenerate_base = false;   // Heron radicand <= 1e-12
  bool apex_zero = false;         // some apex edge <= 1e-9
  double closed_cm_gap = 0;       // |closed form - CM| when both defined
};

TetraReport tetra_report(const TetraEdges& edges);

}  // namespace tetragme
