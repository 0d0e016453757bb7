#include "tetragme/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace tetragme {

std::string g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

// number or null for NaN (JSON has no NaN)
std::string num(double value) { return std::isfinite(value) ? g17(value) : "null"; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const ConcurrenceProfile& p) {
  std::string out = "{";
  for (int q = 1; q <= 4; ++q)
    out += "\"c" + std::to_string(q) + "\": " + g17(p.one(q)) + ", ";
  out += "\"c12_34\": " + g17(p.two(PairCut::c12_34)) + ", ";
  out += "\"c13_24\": " + g17(p.two(PairCut::c13_24)) + ", ";
  out += "\"c14_23\": " + g17(p.two(PairCut::c14_23)) + "}";
  return out;
}

std::string to_json(const TetraEdges& e) {
  std::string out = "{\"dropped_qubit\": " + std::to_string(e.dropped_qubit) + ", \"apex\": [";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += "{\"qubit\": " + std::to_string(e.apex[static_cast<size_t>(i)].qubit) +
           ", \"length\": " + g17(e.apex[static_cast<size_t>(i)].length) + "}";
  }
  out += "], \"base\": [";
  for (int i = 0; i < 3; ++i) {
    const auto& b = e.base[static_cast<size_t>(i)];
    if (i) out += ", ";
    out += "{\"pair\": [" + std::to_string(b.qa) + ", " + std::to_string(b.qb) +
           "], \"cut\": " + quoted(pair_cut_name(pair_cut_of(b.qa, b.qb))) +
           ", \"length\": " + g17(b.length) + "}";
  }
  return out + "]}";
}

std::string to_json(const TetraReport& r) {
  std::string out = "{";
  out += "\"H\": " + num(r.H) + ", ";
  out += "\"p\": " + num(r.p) + ", ";
  out += "\"R\": " + num(r.R) + ", ";
  out += "\"G\": " + num(r.G) + ", ";
  out += "\"D\": " + num(r.D) + ", ";
  out += "\"E\": " + num(r.E) + ", ";
  out += "\"F\": " + num(r.F) + ", ";
  out += "\"cm_det\": " + num(r.cm_det) + ", ";
  out += std::string("\"feasible\": ") + (r.feasible ? "true" : "false") + ", ";
  out += "\"volume\": " + num(r.volume) + ", ";
  out += std::string("\"status\": ") +
         (!r.feasible ? "\"infeasible\""
                      : (r.apex_zero || r.degenerate_base ? "\"degenerate\"" : "\"ok\""));
  return out + "}";
}

std::string to_json(const ClassLabel& l) {
  std::string out = "{\"kind\": " + quoted(class_kind_name(l.kind));
  if (l.kind == ClassKind::OneVsThreeProduct) {
    out += ", \"qubit\": " + std::to_string(l.qubit);
    if (l.residual_tangle) out += ", \"residual_tangle\": " + num(*l.residual_tangle);
    if (l.residual_kind) out += ", \"residual_kind\": " + quoted(*l.residual_kind);
  }
  if (l.partition) out += ", \"partition\": " + quoted(pair_cut_name(*l.partition));
  out += ", \"witness_value\": " + num(l.witness_value);
  return out + "}";
}

std::string to_json(const ScanReport& r) {
  auto records = [](const std::vector<ViolationRecord>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += "{\"sample_index\": " + std::to_string(v[i].sample_index) + ", \"kind\": " +
             quoted(v[i].kind) + ", \"value\": " + g17(v[i].value) + ", \"amplitudes\": [";
      for (int k = 0; k < 16; ++k) {
        if (k) out += ", ";
        out += "[" + g17(v[i].amps[static_cast<size_t>(k)].real()) + ", " +
               g17(v[i].amps[static_cast<size_t>(k)].imag()) + "]";
      }
      out += "]}";
    }
    return out + "]";
  };
  std::string out = "{";
  out += "\"count\": " + std::to_string(r.count) + ", ";
  out += "\"seed\": " + std::to_string(r.seed) + ", ";
  out += "\"eq1_violations\": " + records(r.eq1_violations) + ", ";
  out += "\"eq2_violations\": " + records(r.eq2_violations) + ", ";
  out += "\"feasibility_violations\": " + records(r.feasibility_violations) + ", ";
  out += "\"gradient_negative_samples\": " + std::to_string(r.gradient_negative_samples) + ", ";
  out += "\"gradient_skipped\": " + std::to_string(r.gradient_skipped) + ", ";
  out += "\"extrema\": {";
  out += "\"min_eq1_slack\": " + num(r.min_eq1_slack) + ", ";
  out += "\"min_eq2_slack\": " + num(r.min_eq2_slack) + ", ";
  out += "\"min_cm_det\": " + num(r.min_cm_det) + ", ";
  out += "\"min_volume\": " + num(r.min_volume) + ", ";
  out += "\"max_volume\": " + num(r.max_volume) + ", ";
  out += "\"min_gmc\": " + num(r.min_gmc) + ", ";
  out += "\"max_closed_cm_gap\": " + num(r.max_closed_cm_gap) + "}}";
  return out;
}

std::string measure_report_json(const MeasureReport& r, bool pretty,
                                const std::string& state_label) {
  const char* nl = pretty ? "\n" : "";
  const char* ind = pretty ? "  " : "";
  std::string out = "{";
  out += nl;
  if (!state_label.empty()) {
    out += ind;
    out += "\"label\": " + quoted(state_label) + ",";
    out += nl;
  }
  out += ind;
  out += "\"profile\": " + to_json(r.profile) + ",";
  out += nl;
  out += ind;
  out += "\"edges\": " + to_json(r.edges) + ",";
  out += nl;
  out += ind;
  out += "\"tetra\": " + to_json(r.tetra) + ",";
  out += nl;
  out += ind;
  out += "\"gmc\": " + g17(r.gmc) + ",";
  out += nl;
  out += ind;
  out += "\"classification\": " + to_json(r.label);
  out += nl;
  out += "}";
  return out;
}

}  // namespace tetragme
