#pragma once

namespace tetragme {

inline constexpr const char* kVersion = "1.0.0";

/// Version of docs/discrepancies.md, the list of known deviations between
/// the tabulated reference values and direct computation.
inline constexpr const char* kDiscrepancyLedgerVersion = "1";

}  // namespace tetragme
