// Command-line front end: analyze | family | benchmark | sweep | random | selftest.
// Data goes to stdout as JSON or CSV; diagnostics go to stderr.
// Exit codes: 0 success, 1 computation finding, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tetragme/errors.hpp"
#include "tetragme/families.hpp"
#include "tetragme/measures.hpp"
#include "tetragme/report_json.hpp"
#include "tetragme/selftest.hpp"
#include "tetragme/sweep.hpp"
#include "tetragme/version.hpp"

namespace {

using namespace tetragme;

std::string audit_json(const ClosedFormAudit& audit) {
  std::string out = "{\"entries\": [";
  for (size_t i = 0; i < audit.entries.size(); ++i) {
    const auto& e = audit.entries[i];
    if (i) out += ", ";
    out += "{\"entry\": \"" + e.entry + "\", \"paper_value\": " + g17(e.tabulated) +
           ", \"engine_value\": " + g17(e.engine) +
           ", \"agree\": " + (e.agree ? "true" : "false") + "}";
  }
  out += "], \"all_agree\": ";
  out += audit.all_agree ? "true" : "false";
  return out + "}";
}

int report_state(const PureState4& state, bool compact, const std::string& label,
                 bool include_state = false, const FamilySpec* spec = nullptr,
                 bool with_audit = false) {
  const MeasureReport report = v1234(state);
  if (include_state) {
    std::cout << "{\n  \"state\": " << serialize_state(state, label) << ",\n";
    if (spec) {
      const FamilyNorms norms = family_norms(*spec);
      std::cout << "  \"norms\": {\"direct\": " << g17(norms.direct)
                << ", \"tabulated\": "
                << (std::isfinite(norms.tabulated) ? g17(norms.tabulated) : "null")
                << ", \"agree\": " << (norms.agree ? "true" : "false") << "},\n";
      if (!norms.agree)
        std::cerr << "note: tabulated normalization constant ("
                  << g17(norms.tabulated) << ") differs from the direct norm ("
                  << g17(norms.direct) << "); state renormalized numerically\n";
      if (with_audit)
        std::cout << "  \"audit\": " << audit_json(closed_form_profile(*spec)) << ",\n";
    }
    std::cout << "  \"report\": " << measure_report_json(report, false, label) << "\n}"
              << std::endl;
  } else {
    std::cout << measure_report_json(report, !compact, label) << std::endl;
  }
  return report.tetra.feasible ? 0 : 1;
}

int run_sweep(const SweepConfig& config, const std::string& out_path) {
  const Table table = sweep(config);
  const std::string csv = table.to_csv();
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    out << csv;
  }
  // flagged rows are data; an unrealizable edge set is a finding
  const size_t status_col = table.header.size() - 1;
  bool infeasible = false;
  if (config.quantity != Quantity::Audit)
    for (const auto& row : table.rows)
      if (row[status_col] == "infeasible") infeasible = true;
  return infeasible ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concurrence-tetrahedron entanglement analysis for four-qubit pure states"};
  app.set_version_flag("--version", std::string("tetra_gme ") + kVersion +
                                        " (discrepancy ledger v" +
                                        kDiscrepancyLedgerVersion + ")");
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "measure report for a state document");
  std::string state_path;
  bool compact = false;
  analyze->add_option("--state", state_path, "JSON state document")->required();
  analyze->add_flag("--json", compact, "single-line JSON instead of pretty-printed");

  // family
  auto* family_cmd = app.add_subcommand("family", "instantiate a SLOCC family and report");
  std::string family_name_arg;
  std::optional<double> pa, pb, pc, pd;
  bool with_audit = false;
  family_cmd->add_option("--family", family_name_arg, "F1..F9")->required();
  family_cmd->add_option("--a", pa, "parameter a");
  family_cmd->add_option("--b", pb, "parameter b");
  family_cmd->add_option("--c", pc, "parameter c");
  family_cmd->add_option("--d", pd, "parameter d");
  family_cmd->add_flag("--audit", with_audit, "include the closed-form audit in the report");

  // benchmark
  auto* bench = app.add_subcommand("benchmark", "report for a named comparison state");
  std::string bench_name;
  bool bench_compact = false;
  bench->add_option("--name", bench_name, "psiA | psiB | psiC | psiD | ghz4")->required();
  bench->add_flag("--json", bench_compact, "single-line JSON");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "grid evaluation to CSV");
  std::string sweep_family, sweep_benchmark, quantity_name = "G", out_path;
  std::string ra, rb, rc, rd;
  sweep_cmd->add_option("--family", sweep_family, "F1..F9");
  sweep_cmd->add_option("--benchmark", sweep_benchmark, "benchmark state name");
  sweep_cmd->add_option("--a", ra, "range start:stop:step (or a single value)");
  sweep_cmd->add_option("--b", rb, "range for b");
  sweep_cmd->add_option("--c", rc, "range for c");
  sweep_cmd->add_option("--d", rd, "range for d");
  sweep_cmd->add_option("--quantity", quantity_name, "G | volume | gradient | audit");
  sweep_cmd->add_option("--out", out_path, "output CSV path ('-' for stdout)");

  // random
  auto* random_cmd = app.add_subcommand("random", "seeded Haar-random property scan");
  std::uint64_t count = 1000, seed = 1;
  random_cmd->add_option("--count", count, "number of states");
  random_cmd->add_option("--seed", seed, "root seed");

  // selftest
  app.add_subcommand("selftest", "hermetic reference-value regression suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      return app.exit(e);
    }
    std::cerr << e.what() << "\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (app.got_subcommand("analyze")) {
      const ParsedState parsed = parse_state_file(state_path);
      if (parsed.norm_factor != 1.0)
        std::cerr << "note: input renormalized by factor " << g17(parsed.norm_factor)
                  << "\n";
      return report_state(parsed.state, compact, parsed.label.value_or(""));
    }
    if (app.got_subcommand("family")) {
      FamilySpec spec{parse_family(family_name_arg), pa, pb, pc, pd};
      const PureState4 state = family_state(spec);
      return report_state(state, false, spec.describe(), true, &spec, with_audit);
    }
    if (app.got_subcommand("benchmark")) {
      return report_state(benchmark_state(bench_name), bench_compact, bench_name);
    }
    if (app.got_subcommand("sweep")) {
      SweepConfig config;
      if (!sweep_family.empty()) config.family = parse_family(sweep_family);
      if (!sweep_benchmark.empty()) config.benchmark = sweep_benchmark;
      if (!ra.empty()) config.ranges['a'] = Range::parse(ra);
      if (!rb.empty()) config.ranges['b'] = Range::parse(rb);
      if (!rc.empty()) config.ranges['c'] = Range::parse(rc);
      if (!rd.empty()) config.ranges['d'] = Range::parse(rd);
      config.quantity = parse_quantity(quantity_name);
      return run_sweep(config, out_path);
    }
    if (app.got_subcommand("random")) {
      const ScanReport report = random_scan(count, seed);
      std::cout << to_json(report) << std::endl;
      return report.clean() ? 0 : 1;
    }
    if (app.got_subcommand("selftest")) {
      const auto items = run_selftest();
      std::cout << "item,status,computed,expected,tolerance,note\n";
      for (const auto& item : items) {
        std::string note = item.note;
        for (auto& ch : note)
          if (ch == ',') ch = ';';
        std::cout << item.name << ',' << status_name(item.status) << ',' << item.computed
                  << ',' << item.expected << ',' << g17(item.tolerance) << ',' << note
                  << '\n';
      }
      const bool ok = selftest_passed(items);
      std::cerr << (ok ? "selftest: all items pass" : "selftest: FAILURES present")
                << std::endl;
      return ok ? 0 : 1;
    }
  } catch (const DegenerateBaseError& e) {
    std::cerr << "finding: " << e.what() << " (slack " << g17(e.offending_slack()) << ")\n";
    return 1;
  } catch (const InfeasibleEdgesError& e) {
    std::cerr << "finding: " << e.what() << " (value " << g17(e.value()) << ")\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
