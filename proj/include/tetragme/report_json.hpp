#pragma once

#include <string>

#include "tetragme/measures.hpp"
#include "tetragme/sweep.hpp"

namespace tetragme {

/// %.17g — enough digits to round-trip any double exactly.
std::string g17(double value);

std::string to_json(const ConcurrenceProfile& profile);
std::string to_json(const TetraEdges& edges);
std::string to_json(const TetraReport& report);
std::string to_json(const ClassLabel& label);
std::string to_json(const ScanReport& report);

/// Whole measure report; `pretty` inserts newlines and two-space indent.
std::string measure_report_json(const MeasureReport& report, bool pretty = true,
                                const std::string& state_label = "");

}  // namespace tetragme
