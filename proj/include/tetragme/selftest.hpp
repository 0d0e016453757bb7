#pragma once

#include <string>
#include <vector>

namespace tetragme {

/// One self-contained regression item. `discrepancy` marks the known,
/// documented deviations from the tabulated reference values (see
/// docs/discrepancies.md); those do not fail the suite.
struct CheckItem {
  std::string name;
  std::string computed;
  std::string expected;
  double tolerance = 0;
  enum class Status { Pass, Fail, Discrepancy } status;
  std::string note;
};

std::string status_name(CheckItem::Status s);

/// Hermetic reference-value suite: profiles, lemma gaps, volumes, GMC,
/// gradient spot values, classification labels, and closed-form audits for
/// the built-in benchmark states. Needs no files or network.
std::vector<CheckItem> run_selftest();

/// True when no item has Fail status.
bool selftest_passed(const std::vector<CheckItem>& items);

}  // namespace tetragme
