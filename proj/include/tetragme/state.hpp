#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

namespace tetragme {

using Cx = std::complex<double>;

/// Four-qubit pure state: 16 amplitudes indexed by |q1 q2 q3 q4> with
/// index = 8*q1 + 4*q2 + 2*q3 + q4 (qubit 1 is the most significant bit).
/// The constructor always renormalizes; zero or non-finite input is rejected.
class PureState4 {
public:
  static constexpr int kDim = 16;

  explicit PureState4(const std::array<Cx, kDim>& amps);

  const std::array<Cx, kDim>& amps() const { return amps_; }
  const Cx& amp(int index) const { return amps_[static_cast<size_t>(index)]; }

  /// Factor the constructor multiplied the raw input by (1/original norm).
  double norm_factor() const { return norm_factor_; }

private:
  std::array<Cx, kDim> amps_{};
  double norm_factor_ = 1.0;
};

/// One of the seven canonical cuts: {1},{2},{3},{4},{1,2},{1,3},{1,4}.
/// The kept side is the singleton for 1|3 cuts and the side containing
/// qubit 1 for 2|2 cuts.
class Bipartition {
public:
  /// Throws std::invalid_argument unless the kept set is canonical.
  static Bipartition keep_one(int qubit);
  static Bipartition keep_pair(int qa, int qb);

  static const std::array<Bipartition, 7>& canonical();

  int size() const { return size_; }            // 1 or 2
  int qubit(int i) const { return qubits_[static_cast<size_t>(i)]; }
  bool contains(int qubit) const;
  std::string name() const;                     // "1|234", "13|24", ...

  bool operator==(const Bipartition&) const = default;

private:
  Bipartition(int size, std::array<int, 2> qubits) : size_(size), qubits_(qubits) {}
  int size_;
  std::array<int, 2> qubits_;  // ascending; qubits_[1] unused for 1|3 cuts
};

/// Reduced density matrix of the kept subsystem (dim 2 for 1|3 cuts,
/// dim 4 for 2|2 cuts). Kept-qubit bits are packed with the smaller
/// label more significant.
class ReducedDensity {
public:
  ReducedDensity(int dim, const std::array<Cx, 16>& entries);

  int dim() const { return dim_; }
  const Cx& entry(int row, int col) const { return entries_[static_cast<size_t>(row * dim_ + col)]; }

  /// Full invariant check: Hermiticity, unit trace, nonnegative spectrum,
  /// purity within [1/dim, 1]. Throws std::invalid_argument on violation.
  void validate(double herm_tol = 1e-12, double eig_tol = 1e-10) const;

private:
  int dim_;
  std::array<Cx, 16> entries_{};  // dim*dim used
};

ReducedDensity partial_trace(const PureState4& state, const Bipartition& cut);

/// Tr(rho^2) as the sum of squared entry magnitudes, clamped to [1/dim, 1].
/// A clamp beyond 1e-10 signals an invalid density and throws.
double purity(const ReducedDensity& rho);

/// Result of reading a state document.
struct ParsedState {
  PureState4 state;
  double norm_factor;                // multiplier applied to the raw input
  std::optional<std::string> label;
};

/// Parses {"amplitudes": [[re,im] x 16], "label"?: "..."} (UTF-8 JSON).
ParsedState parse_state(const std::string& text);
ParsedState parse_state_file(const std::string& path);

/// Inverse of parse_state up to normalization; %.17g numbers round-trip
/// amplitudes exactly.
std::string serialize_state(const PureState4& state,
                            const std::optional<std::string>& label = std::nullopt);

/// Relabels qubits: old qubit q becomes new qubit perm[q-1].
PureState4 permute_qubits(const PureState4& state, const std::array<int, 4>& perm);

}  // namespace tetragme
