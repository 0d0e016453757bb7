#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tetragme/families.hpp"
#include "tetragme/measures.hpp"

namespace tetragme {

/// Inclusive numeric range start:stop:step (step > 0; start == stop is a
/// single point).
struct Range {
  double start = 0, stop = 0, step = 1;

  std::size_t count() const;
  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  static Range parse(const std::string& text);  // "0:3:0.1" or "1.5"
};

enum class Quantity { G, Volume, Gradient, Audit };
Quantity parse_quantity(const std::string& name);

struct SweepConfig {
  std::optional<Family> family;           // exactly one of family/benchmark
  std::map<char, Range> ranges;           // per used parameter: 'a'..'d'
  std::optional<std::string> benchmark;
  Quantity quantity = Quantity::G;
};

/// CSV-shaped table; all numbers already formatted with 17 significant
/// digits so that identical (seed, config) reruns are byte-identical.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

/// Grid evaluation. Rows are ordered by grid index regardless of the
/// number of worker threads (TETRA_GME_THREADS caps parallelism).
/// Infeasible or degenerate points are flagged rows, not errors.
Table sweep(const SweepConfig& config);

struct ViolationRecord {
  std::uint64_t sample_index;
  std::string kind;   // "eq1", "eq2", "feasibility"
  double value;       // the offending slack or determinant
  std::array<Cx, 16> amps;
};

struct ScanReport {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::vector<ViolationRecord> eq1_violations;
  std::vector<ViolationRecord> eq2_violations;
  std::vector<ViolationRecord> feasibility_violations;
  std::uint64_t gradient_negative_samples = 0;  // some FD component < -1e-6
  std::uint64_t gradient_skipped = 0;           // stencil hit infeasibility
  // extrema observed over the scan
  double min_eq1_slack = 0;
  double min_eq2_slack = 0;
  double min_cm_det = 0;
  double min_volume = 0;
  double max_volume = 0;
  double min_gmc = 0;
  double max_closed_cm_gap = 0;

  bool clean() const {
    return eq1_violations.empty() && eq2_violations.empty() &&
           feasibility_violations.empty();
  }
};

/// `count` seeded Haar-random states: checks both polygon inequalities at
/// slack >= -1e-9 and edge realizability at cm_det >= -1e-9, collects
/// counterexample records, and tracks extrema. Deterministic per seed.
ScanReport random_scan(std::uint64_t count, std::uint64_t seed);

/// Max |change| over all seven concurrences and the volume under `trials`
/// random U(2)^x4 rotations.
double lu_invariance(const PureState4& state, int trials, std::uint64_t seed);

}  // namespace tetragme
