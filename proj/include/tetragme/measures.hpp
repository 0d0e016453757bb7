#pragma once

#include <optional>
#include <string>

#include "tetragme/tetra.hpp"

namespace tetragme {

enum class ClassKind {
  GenuineME,
  OneVsThreeProduct,
  TwoTwoBiseparable,
  TwoEprPairs,
  FullySeparable,
};

std::string class_kind_name(ClassKind kind);

/// Separability label plus the witnesses that triggered it.
struct ClassLabel {
  ClassKind kind;
  int qubit = 0;                                    // OneVsThreeProduct: the factored qubit
  std::optional<PairCut> partition = std::nullopt;  // TwoEprPairs / TwoTwoBiseparable

  // Witnesses.
  double witness_value = 0;            // the concurrence or slack that triggered
  // OneVsThreeProduct only: Cayley hyperdeterminant 3-tangle of the residual
  // three-qubit factor; ~1 for a GHZ-like residual, ~0 for a W-like one.
  std::optional<double> residual_tangle = std::nullopt;
  std::optional<std::string> residual_kind = std::nullopt;  // "ghz_like" | "w_like"

  std::string describe() const;
};

/// FullySeparable / OneVsThreeProduct / TwoEprPairs / TwoTwoBiseparable /
/// GenuineME cascade on the concurrence profile, zero threshold eps.
/// eps must lie in (0, 1e-3]; default 1e-9.
ClassLabel classify(const PureState4& state, double eps = 1e-9);

/// Minimum bipartition concurrence over all seven cuts.
double gmc(const PureState4& state);

/// Full pipeline: profile -> edges -> tetra volume, with GMC and label.
struct MeasureReport {
  ConcurrenceProfile profile;
  TetraEdges edges;
  TetraReport tetra;
  double gmc;
  ClassLabel label;
};

MeasureReport v1234(const PureState4& state, double eps = 1e-9);

}  // namespace tetragme
