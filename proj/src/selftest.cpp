#include "tetragme/selftest.hpp"

#include <algorithm>
#include <cmath>

#include "tetragme/families.hpp"
#include "tetragme/measures.hpp"
#include "tetragme/report_json.hpp"

namespace tetragme {

namespace {

using Status = CheckItem::Status;

void check_value(std::vector<CheckItem>& items, const std::string& name, double computed,
                 double expected, double tol, const std::string& note = "") {
  items.push_back({name, g17(computed), g17(expected), tol,
                   std::abs(computed - expected) <= tol ? Status::Pass : Status::Fail,
                   note});
}

// Known deviation from the tabulated reference value: never a failure,
// Pass if it happens to agree, Discrepancy otherwise.
void check_reference(std::vector<CheckItem>& items, const std::string& name,
                     double computed, double reference, double tol,
                     const std::string& note) {
  items.push_back({name, g17(computed), g17(reference), tol,
                   std::abs(computed - reference) <= tol ? Status::Pass
                                                         : Status::Discrepancy,
                   note});
}

void check_text(std::vector<CheckItem>& items, const std::string& name,
                const std::string& computed, const std::string& expected,
                const std::string& note = "") {
  items.push_back({name, computed, expected, 0.0,
                   computed == expected ? Status::Pass : Status::Fail, note});
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Discrepancy: return "discrepancy";
  }
  return "?";
}

std::vector<CheckItem> run_selftest() {
  std::vector<CheckItem> items;
  const double r3 = std::sqrt(3.0) / 2.0;
  const double r5 = std::sqrt(5.0) / 2.0;

  // --- benchmark profiles ---
  const PureState4 psiA = benchmark_state("psiA");
  const PureState4 psiB = benchmark_state("psiB");
  const PureState4 psiC = benchmark_state("psiC");
  const PureState4 psiD = benchmark_state("psiD");
  const PureState4 ghz = benchmark_state("ghz4");

  const MeasureReport ra = v1234(psiA);
  const MeasureReport rb = v1234(psiB);
  const MeasureReport rc = v1234(psiC);
  const MeasureReport rd = v1234(psiD);
  const MeasureReport rg = v1234(ghz);

  const double tolp = 1e-9;
  check_value(items, "psiA.c1", ra.profile.one(1), r3, tolp);
  for (int q = 2; q <= 4; ++q)
    check_value(items, "psiA.c" + std::to_string(q), ra.profile.one(q), 1.0, tolp);
  check_value(items, "psiA.c12_34", ra.profile.two(PairCut::c12_34), r5, tolp);
  check_value(items, "psiA.c13_24", ra.profile.two(PairCut::c13_24), r5, tolp);
  check_value(items, "psiA.c14_23", ra.profile.two(PairCut::c14_23), r5, tolp);

  check_value(items, "psiB.c1", rb.profile.one(1), r3, tolp);
  check_value(items, "psiB.c2", rb.profile.one(2), 1.0, tolp,
              "reference table prints the unit entry at qubit 3; see discrepancy D1");
  check_value(items, "psiB.c3", rb.profile.one(3), r3, tolp);
  check_value(items, "psiB.c4", rb.profile.one(4), r3, tolp);
  check_value(items, "psiB.c12_34", rb.profile.two(PairCut::c12_34), r5, tolp);
  check_value(items, "psiB.c13_24", rb.profile.two(PairCut::c13_24), 1.0, tolp);
  check_value(items, "psiB.c14_23", rb.profile.two(PairCut::c14_23), 1.0, tolp);

  // --- lemma gaps ---
  check_value(items, "G(psiA)", ra.tetra.G, 0.92953, 1e-4);
  check_value(items, "G(psiB)", rb.tetra.G, 0.78904, 1e-3);
  check_reference(items, "G(psiB) vs reference", rb.tetra.G, 0.92298, 1e-3,
                  "known deviation D2: direct evaluation of H - 3R gives 0.78901");

  // --- volumes ---
  check_value(items, "V(psiA)", ra.tetra.volume, 0.1254, 5e-4);
  check_value(items, "V(psiB)", rb.tetra.volume, 0.0960, 5e-4);
  check_value(items, "V(psiC)", rc.tetra.volume, 0.1084, 5e-4);
  check_value(items, "V(psiD)", rd.tetra.volume, 0.11369635465995769, 1e-9,
              "engine regression value");
  check_reference(items, "V(psiD) vs reference", rd.tetra.volume, 0.1624, 1e-3,
                  "known deviation D3: engine volume 0.113696");
  check_value(items, "V(ghz4)", rg.tetra.volume, std::sqrt(2.0) / 12.0, 1e-12);

  // --- GMC ---
  check_value(items, "gmc(psiA)", ra.gmc, 0.8660, 1e-4);
  check_value(items, "gmc(psiB)", rb.gmc, 0.8660, 1e-4);
  check_value(items, "gmc(psiC)", rc.gmc, 0.8000, 1e-4);
  check_value(items, "gmc(psiD)", rd.gmc, 0.8000, 1e-4);

  // --- gradient spot values at psiA's edges ---
  const VolumeGradient grad = volume_gradient(ra.edges);
  check_value(items, "dV/du(psiA)", grad.du, 0.1049, 3e-4);
  check_value(items, "dV/dv(psiA)", grad.dv, 0.0692, 3e-4);
  check_value(items, "dV/dw(psiA)", grad.dw, 0.0692, 3e-4);
  std::array<double, 3> base = {grad.base[0].length, grad.base[1].length,
                                grad.base[2].length};
  std::sort(base.begin(), base.end());
  check_value(items, "dV/dbase(psiA) smallest", base[0], 0.0387, 3e-4,
              "base partials compared as a multiset; see discrepancy D4");
  check_value(items, "dV/dbase(psiA) middle", base[1], 0.0387, 3e-4);
  check_value(items, "dV/dbase(psiA) largest", base[2], 0.0542, 3e-4);

  // --- classification ---
  const PureState4 psi1 = family_state({Family::F1});
  const ClassLabel l1 = classify(psi1);
  check_text(items, "classify(psi1)", l1.describe(), "OneVsThreeProduct(1) residual=ghz_like");
  const ClassLabel l4 = classify(family_state({Family::F4, 0.0}));
  check_text(items, "classify(F4 a=0)", l4.describe(), "OneVsThreeProduct(1) residual=w_like");
  const MeasureReport r6 = v1234(family_state({Family::F6, 0.0, 0.0}));
  check_text(items, "classify(F6 a=b=0)", r6.label.describe(), "TwoEprPairs(13|24)");
  check_value(items, "V(F6 a=b=0)", r6.tetra.volume, 0.0, 1e-12);
  const MeasureReport r9 = v1234(family_state({Family::F9, 1.0, 1.0, 1.0, 1.0}));
  check_text(items, "classify(F9 a=b=c=d)", r9.label.describe(), "TwoEprPairs(13|24)");
  check_value(items, "V(F9 a=b=c=d)", r9.tetra.volume, 0.0, 1e-12);
  std::array<Cx, 16> zero{};
  zero[0] = 1;
  check_text(items, "classify(|0000>)", classify(PureState4(zero)).describe(),
             "FullySeparable");
  check_text(items, "classify(ghz4)", rg.label.describe(), "GenuineME");

  // --- closed-form audits ---
  const ClosedFormAudit a2 = closed_form_profile({Family::F2});
  check_text(items, "audit(F2) agrees", a2.all_agree ? "yes" : "no", "yes");
  const ClosedFormAudit a3 = closed_form_profile({Family::F3});
  check_text(items, "audit(F3) agrees", a3.all_agree ? "yes" : "no", "yes",
             "after the qubit 2/3 label correction of discrepancy D1");
  const ClosedFormAudit a5 = closed_form_profile({Family::F5, 1.0});
  check_text(items, "audit(F5 a=1) flags c1", a5.entries[0].agree ? "agree" : "disagree",
             "disagree", "known deviation D5: closed form exceeds the one-vs-three bound");
  check_value(items, "audit(F5 a=1) engine c1", a5.entries[0].engine,
              0.98974331861078724, 1e-9);
  check_value(items, "audit(F5 a=1) closed form c1", a5.entries[0].tabulated,
              1.34011878852098, 1e-9);
  const ClosedFormAudit a9 = closed_form_profile({Family::F9, 1.0, 0.5, 0.7, 0.3});
  check_text(items, "audit(F9) norm constant flagged", a9.norms.agree ? "agree" : "disagree",
             "disagree", "known deviation D6: printed constant != direct norm");

  return items;
}

bool selftest_passed(const std::vector<CheckItem>& items) {
  return std::none_of(items.begin(), items.end(),
                      [](const CheckItem& c) { return c.status == Status::Fail; });
}

}  // namespace tetragme
