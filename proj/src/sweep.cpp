#include "tetragme/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "tetragme/errors.hpp"
#include "tetragme/report_json.hpp"
#include "tetragme/rng.hpp"

namespace tetragme {

namespace {

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("TETRA_GME_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(jobs, 1)));
}

// Runs fn(i) for i in [0, jobs) on a worker pool; results must be written
// by index so output order stays deterministic.
void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::size_t Range::count() const {
  if (!(step > 0)) throw std::invalid_argument("range: step must be positive");
  if (stop < start) throw std::invalid_argument("range: stop < start");
  return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

Range Range::parse(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("range \"" + text + "\": expected start:stop:step or a number");
  };
  Range r;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    char* end = nullptr;
    r.start = r.stop = std::strtod(text.c_str(), &end);
    r.step = 1;
    if (end == text.c_str() || *end != '\0' || !std::isfinite(r.start)) throw bad();
    return r;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw bad();
  char* end = nullptr;
  r.start = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + c1) throw bad();
  r.stop = std::strtod(text.c_str() + c1 + 1, &end);
  if (end != text.c_str() + c2) throw bad();
  r.step = std::strtod(text.c_str() + c2 + 1, &end);
  if (*end != '\0') throw bad();
  if (!std::isfinite(r.start) || !std::isfinite(r.stop) || !(r.step > 0)) throw bad();
  r.count();  // validates ordering
  return r;
}

Quantity parse_quantity(const std::string& name) {
  if (name == "G" || name == "g") return Quantity::G;
  if (name == "volume") return Quantity::Volume;
  if (name == "gradient") return Quantity::Gradient;
  if (name == "audit") return Quantity::Audit;
  throw std::invalid_argument("unknown quantity \"" + name +
                              "\" (expected G, volume, gradient, audit)");
}

std::string Table::to_csv() const {
  std::string out;
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

namespace {

struct GridPoint {
  std::vector<double> params;
  FamilySpec spec;
};

std::vector<GridPoint> make_grid(Family family, const std::map<char, Range>& ranges) {
  const int arity = family_arity(family);
  const char* names = "abcd";
  std::vector<Range> rs;
  for (int i = 0; i < arity; ++i) {
    const auto it = ranges.find(names[i]);
    if (it == ranges.end())
      throw std::invalid_argument(family_name(family) + ": missing range for parameter " +
                                  names[i]);
    rs.push_back(it->second);
  }
  for (const auto& [name, _] : ranges)
    if (std::string("abcd").find(name) >= static_cast<size_t>(arity))
      throw std::invalid_argument(family_name(family) +
                                  ": unexpected range for parameter " + name);

  std::vector<GridPoint> grid;
  std::vector<std::size_t> idx(static_cast<size_t>(arity), 0);
  for (;;) {
    GridPoint pt;
    pt.spec.family = family;
    for (int i = 0; i < arity; ++i) {
      const double v = rs[static_cast<size_t>(i)].at(idx[static_cast<size_t>(i)]);
      pt.params.push_back(v);
      if (i == 0) pt.spec.a = v;
      if (i == 1) pt.spec.b = v;
      if (i == 2) pt.spec.c = v;
      if (i == 3) pt.spec.d = v;
    }
    grid.push_back(std::move(pt));
    if (arity == 0) break;
    int k = arity - 1;
    while (k >= 0) {
      if (++idx[static_cast<size_t>(k)] < rs[static_cast<size_t>(k)].count()) break;
      idx[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return grid;
}

std::string status_of(const TetraReport& t) {
  if (!t.feasible) return "infeasible";
  if (t.apex_zero || t.degenerate_base) return "degenerate";
  return "ok";
}

}  // namespace

Table sweep(const SweepConfig& config) {
  if (config.family.has_value() == config.benchmark.has_value())
    throw std::invalid_argument("sweep: exactly one of family or benchmark required");
  if (config.benchmark && config.quantity == Quantity::Audit)
    throw std::invalid_argument("sweep: audit sweeps require a family");

  std::vector<GridPoint> grid;
  std::string id_value;
  std::string id_column;
  int arity = 0;
  if (config.family) {
    grid = make_grid(*config.family, config.ranges);
    arity = family_arity(*config.family);
    id_column = "family";
    id_value = family_name(*config.family);
  } else {
    if (!config.ranges.empty())
      throw std::invalid_argument("sweep: benchmark sweeps take no parameter ranges");
    GridPoint pt;
    grid.push_back(pt);
    id_column = "benchmark";
    id_value = *config.benchmark;
  }

  Table table;
  table.header.push_back(id_column);
  const char* names = "abcd";
  for (int i = 0; i < arity; ++i) table.header.push_back(std::string(1, names[i]));
  switch (config.quantity) {
    case Quantity::G:
      for (const char* c : {"H", "p", "R", "G", "status"}) table.header.push_back(c);
      break;
    case Quantity::Volume:
      for (const char* c : {"volume", "cm_det", "status"}) table.header.push_back(c);
      break;
    case Quantity::Gradient:
      for (const char* c : {"dV_du", "dV_dv", "dV_dw", "dV_dC12_34", "dV_dC13_24",
                            "dV_dC14_23", "status"})
        table.header.push_back(c);
      break;
    case Quantity::Audit:
      for (const char* c : {"entry", "paper_value", "engine_value", "agree"})
        table.header.push_back(c);
      break;
  }

  std::vector<std::vector<std::vector<std::string>>> rows_by_point(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const GridPoint& pt = grid[i];
    std::vector<std::string> prefix;
    prefix.push_back(id_value);
    for (double v : pt.params) prefix.push_back(g17(v));

    auto state_of = [&] {
      return config.family ? family_state(pt.spec) : benchmark_state(*config.benchmark);
    };

    if (config.quantity == Quantity::Audit) {
      const ClosedFormAudit audit = closed_form_profile(pt.spec);
      for (const auto& entry : audit.entries) {
        auto row = prefix;
        row.push_back(entry.entry);
        row.push_back(g17(entry.tabulated));
        row.push_back(g17(entry.engine));
        row.push_back(entry.agree ? "1" : "0");
        rows_by_point[i].push_back(std::move(row));
      }
      return;
    }

    const PureState4 state = state_of();
    const ConcurrenceProfile prof = concurrence_profile(state);
    const TetraEdges edges = build_edges(prof);
    const TetraReport rep = tetra_report(edges);
    auto row = prefix;
    switch (config.quantity) {
      case Quantity::G: {
        row.push_back(g17(rep.H));
        row.push_back(g17(rep.p));
        row.push_back(rep.degenerate_base ? "" : g17(rep.R));
        row.push_back(rep.degenerate_base ? "" : g17(rep.G));
        row.push_back(status_of(rep));
        break;
      }
      case Quantity::Volume: {
        row.push_back(rep.feasible ? g17(rep.volume) : "");
        row.push_back(g17(rep.cm_det));
        row.push_back(status_of(rep));
        break;
      }
      case Quantity::Gradient: {
        if (rep.feasible && !rep.degenerate_base && !rep.apex_zero) {
          try {
            const VolumeGradient grad = volume_gradient(edges);
            row.push_back(g17(grad.du));
            row.push_back(g17(grad.dv));
            row.push_back(g17(grad.dw));
            row.push_back(g17(grad.base_partial(PairCut::c12_34)));
            row.push_back(g17(grad.base_partial(PairCut::c13_24)));
            row.push_back(g17(grad.base_partial(PairCut::c14_23)));
            row.push_back(status_of(rep));
          } catch (const InfeasibleEdgesError&) {
            for (int k = 0; k < 6; ++k) row.push_back("");
            row.push_back("infeasible");
          }
        } else {
          for (int k = 0; k < 6; ++k) row.push_back("");
          row.push_back(status_of(rep));
        }
        break;
      }
      case Quantity::Audit: break;  // handled above
    }
    rows_by_point[i].push_back(std::move(row));
  });

  for (auto& rows : rows_by_point)
    for (auto& row : rows) table.rows.push_back(std::move(row));
  return table;
}

ScanReport random_scan(std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("random_scan: count must be >= 1");
  ScanReport report{};
  report.count = count;
  report.seed = seed;
  report.min_eq1_slack = report.min_eq2_slack = report.min_cm_det = 1e300;
  report.min_volume = report.min_gmc = 1e300;
  report.max_volume = report.max_closed_cm_gap = -1e300;

  const unsigned workers = worker_count(count);
  struct Local {
    std::vector<ViolationRecord> eq1, eq2, feas;
    std::uint64_t grad_neg = 0, grad_skip = 0;
    double min_eq1 = 1e300, min_eq2 = 1e300, min_cm = 1e300;
    double min_vol = 1e300, max_vol = -1e300, min_gmc = 1e300, max_gap = -1e300;
  };
  std::vector<Local> locals(workers);
  std::atomic<std::uint64_t> next{0};
  auto work = [&](unsigned wid) {
    Local& loc = locals[wid];
    for (;;) {
      const std::uint64_t k = next.fetch_add(1);
      if (k >= count) return;
      const PureState4 state = haar_state(seed, k);
      const ConcurrenceProfile prof = concurrence_profile(state);
      const ResidualReport res = inequality_residuals(prof);
      loc.min_eq1 = std::min(loc.min_eq1, res.min_polygon);
      loc.min_eq2 = std::min(loc.min_eq2, res.min_triangle);
      if (res.min_polygon < -1e-9)
        loc.eq1.push_back({k, "eq1", res.min_polygon, state.amps()});
      if (res.min_triangle < -1e-9)
        loc.eq2.push_back({k, "eq2", res.min_triangle, state.amps()});
      const TetraEdges edges = build_edges(prof);
      const TetraReport rep = tetra_report(edges);
      loc.min_cm = std::min(loc.min_cm, rep.cm_det);
      if (rep.cm_det < -1e-9)
        loc.feas.push_back({k, "feasibility", rep.cm_det, state.amps()});
      if (rep.feasible) {
        loc.min_vol = std::min(loc.min_vol, rep.volume);
        loc.max_vol = std::max(loc.max_vol, rep.volume);
        loc.max_gap = std::max(loc.max_gap, rep.closed_cm_gap);
      }
      loc.min_gmc = std::min(loc.min_gmc, prof.min_entry());
      if (rep.feasible && !rep.degenerate_base && !rep.apex_zero) {
        try {
          const VolumeGradient grad = volume_gradient(edges);
          if (grad.min_component() < -1e-6) ++loc.grad_neg;
        } catch (const InfeasibleEdgesError&) {
          ++loc.grad_skip;
        }
      } else {
        ++loc.grad_skip;
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  for (const Local& loc : locals) {
    report.eq1_violations.insert(report.eq1_violations.end(), loc.eq1.begin(), loc.eq1.end());
    report.eq2_violations.insert(report.eq2_violations.end(), loc.eq2.begin(), loc.eq2.end());
    report.feasibility_violations.insert(report.feasibility_violations.end(),
                                         loc.feas.begin(), loc.feas.end());
    report.gradient_negative_samples += loc.grad_neg;
    report.gradient_skipped += loc.grad_skip;
    report.min_eq1_slack = std::min(report.min_eq1_slack, loc.min_eq1);
    report.min_eq2_slack = std::min(report.min_eq2_slack, loc.min_eq2);
    report.min_cm_det = std::min(report.min_cm_det, loc.min_cm);
    report.min_volume = std::min(report.min_volume, loc.min_vol);
    report.max_volume = std::max(report.max_volume, loc.max_vol);
    report.min_gmc = std::min(report.min_gmc, loc.min_gmc);
    report.max_closed_cm_gap = std::max(report.max_closed_cm_gap, loc.max_gap);
  }
  auto by_index = [](const ViolationRecord& x, const ViolationRecord& y) {
    return x.sample_index < y.sample_index;
  };
  std::sort(report.eq1_violations.begin(), report.eq1_violations.end(), by_index);
  std::sort(report.eq2_violations.begin(), report.eq2_violations.end(), by_index);
  std::sort(report.feasibility_violations.begin(), report.feasibility_violations.end(), by_index);
  return report;
}

double lu_invariance(const PureState4& state, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("lu_invariance: trials must be >= 1");
  const ConcurrenceProfile base_prof = concurrence_profile(state);
  const TetraReport base_rep = tetra_report(build_edges(base_prof));
  const double base_vol = base_rep.feasible ? base_rep.volume : 0.0;

  double max_dev = 0;
  for (int t = 0; t < trials; ++t) {
    RandomStream rng = stream_for(seed, static_cast<std::uint64_t>(t));
    std::array<U2, 4> us;
    for (auto& u : us) u = haar_u2(rng);
    const PureState4 rotated = apply_local_unitaries(state, us);
    const ConcurrenceProfile prof = concurrence_profile(rotated);
    for (size_t i = 0; i < 4; ++i)
      max_dev = std::max(max_dev, std::abs(prof.c_one[i] - base_prof.c_one[i]));
    for (size_t i = 0; i < 3; ++i)
      max_dev = std::max(max_dev, std::abs(prof.c_two[i] - base_prof.c_two[i]));
    const TetraReport rep = tetra_report(build_edges(prof));
    const double vol = rep.feasible ? rep.volume : 0.0;
    max_dev = std::max(max_dev, std::abs(vol - base_vol));
  }
  return max_dev;
}

}  // namespace tetragme
