#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetragme/concurrence.hpp"
#include "tetragme/state.hpp"

namespace tetragme {

/// The nine four-qubit SLOCC families (Verstraete et al. normal forms).
enum class Family : int {
  F1 = 1,  // L_{03+1,03+1}          no parameters
  F2,      // L_{07+1}               no parameters
  F3,      // L_{05+3}               no parameters
  F4,      // L_{a2 03+1}            a
  F5,      // L_{a4}                 a
  F6,      // L_{a2 b2}              a, b
  F7,      // L_{a b3}               a, b
  F8,      // L_{a b c2}             a, b, c
  F9,      // G_{abcd}               a, b, c, d
};

std::string family_name(Family f);        // "F1".."F9"
std::string family_display(Family f);     // "L_a2b2", "G_abcd", ...
Family parse_family(const std::string& name);
int family_arity(Family f);

/// Representative-family instance. Unused parameters must be absent.
struct FamilySpec {
  Family family{};
  std::optional<double> a = std::nullopt, b = std::nullopt, c = std::nullopt,
                        d = std::nullopt;

  /// Throws std::invalid_argument if the parameter arity does not match.
  void validate() const;
  std::vector<double> params() const;  // the used parameters, in order
  std::string describe() const;        // "F6(a=1, b=0.5)"
};

/// Amplitudes per the family's representative ket, numerically normalized.
/// Throws std::invalid_argument on a zero-norm parameter combination.
PureState4 family_state(const FamilySpec& spec);

/// Norm of the raw representative ket vs the normalization constant printed
/// with the family display (they disagree for G_abcd with real parameters).
struct FamilyNorms {
  double direct;
  double tabulated;  // NaN if the printed constant is not defined here
  bool agree;        // within 1e-9, false when tabulated is NaN
};

FamilyNorms family_norms(const FamilySpec& spec);

/// One audited concurrence entry: published closed form vs the
/// partial-trace engine.
struct AuditEntry {
  std::string entry;     // "c1".."c4", "c12_34", "c13_24", "c14_23"
  double tabulated;      // closed-form value at the given parameters
  double engine;         // concurrence_profile(family_state(spec))
  bool agree;            // |tabulated - engine| <= 1e-9
};

struct ClosedFormAudit {
  FamilySpec spec;
  std::vector<AuditEntry> entries;  // 4 entries for F1, 7 otherwise
  FamilyNorms norms;
  bool all_agree;
};

/// Evaluates the published closed-form concurrences and flags every entry
/// against the engine. Disagreements are data, not errors. For F3 and F6
/// the published per-qubit labels are internally inconsistent with the
/// family's own product structure; the audit assigns those closed forms to
/// the qubits they actually describe (2 <-> 3), which is the only mapping
/// under which the values can be compared at all (see docs/discrepancies.md).
ClosedFormAudit closed_form_profile(const FamilySpec& spec);

/// Named comparison states: psiA (= F2), psiB (= F3), psiC (= F4 at a=1),
/// psiD (= F5 at a = sqrt((51 + 5 sqrt(113))/32)), ghz4.
PureState4 benchmark_state(const std::string& name);

const std::vector<std::string>& benchmark_names();

/// Named parameter generators for the case-wise analyzed subfamilies.
/// Every free parameter of the slice runs over {start, start+step, ...,
/// stop}; combinations that collapse to the known product cases are
/// excluded, except in "F9:products", which generates exactly those.
///
/// Names: "F8:c=0", "F8:abc!=0", "F8:c!=0,ab=0", "F9:two-zero",
/// "F9:a=-d,b=c", "F9:a=d,b!=c", "F9:generic", "F9:products".
std::vector<FamilySpec> subfamily_grid(const std::string& name, double start,
                                       double stop, double step);

const std::vector<std::string>& subfamily_names();

}  // namespace tetragme
