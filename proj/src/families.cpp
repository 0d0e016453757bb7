#include "tetragme/families.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tetragme {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();
const Cx kI{0.0, 1.0};

// |q1 q2 q3 q4>  ->  8 q1 + 4 q2 + 2 q3 + q4
constexpr int B0000 = 0, B0001 = 1, B0010 = 2, B0011 = 3, B0101 = 5, B0110 = 6,
              B0111 = 7, B1000 = 8, B1001 = 9, B1010 = 10, B1011 = 11, B1100 = 12,
              B1101 = 13, B1110 = 14, B1111 = 15;

std::array<Cx, 16> raw_amplitudes(const FamilySpec& s) {
  const double a = s.a.value_or(0), b = s.b.value_or(0), c = s.c.value_or(0),
               d = s.d.value_or(0);
  std::array<Cx, 16> m{};
  switch (s.family) {
    case Family::F1:  // |0000> + |0111>
      m[B0000] = 1;
      m[B0111] = 1;
      break;
    case Family::F2:  // |0000> + |1011> + |1101> + |1110>
      m[B0000] = 1;
      m[B1011] = 1;
      m[B1101] = 1;
      m[B1110] = 1;
      break;
    case Family::F3:  // |0000> + |0101> + |1000> + |1110>
      m[B0000] = 1;
      m[B0101] = 1;
      m[B1000] = 1;
      m[B1110] = 1;
      break;
    case Family::F4:  // a(|0000>+|1111>) + |0011> + |0101> + |0110>
      m[B0000] = a;
      m[B1111] = a;
      m[B0011] = 1;
      m[B0101] = 1;
      m[B0110] = 1;
      break;
    case Family::F5:  // a(|0000>+|0101>+|1010>+|1111>) + i|0001> + |0110> - i|1011>
      m[B0000] = a;
      m[B0101] = a;
      m[B1010] = a;
      m[B1111] = a;
      m[B0001] = kI;
      m[B0110] = 1;
      m[B1011] = -kI;
      break;
    case Family::F6:  // a(|0000>+|1111>) + b(|0101>+|1010>) + |0110> + |0011>
      m[B0000] = a;
      m[B1111] = a;
      m[B0101] = b;
      m[B1010] = b;
      m[B0110] = 1;
      m[B0011] = 1;
      break;
    case Family::F7: {  // a(|0000>+|1111>) + (a+b)/2 (|0101>+|1010>)
                        // + (a-b)/2 (|0110>+|1001>) + i/sqrt2 (|0001>+|0010>+|0111>+|1011>)
      const Cx s2 = kI / std::sqrt(2.0);
      m[B0000] = a;
      m[B1111] = a;
      m[B0101] = (a + b) / 2;
      m[B1010] = (a + b) / 2;
      m[B0110] = (a - b) / 2;
      m[B1001] = (a - b) / 2;
      m[B0001] = s2;
      m[B0010] = s2;
      m[B0111] = s2;
      m[B1011] = s2;
      break;
    }
    case Family::F8:  // (a+b)/2 (|0000>+|1111>) + (a-b)/2 (|0011>+|1100>)
                      // + c(|0101>+|1010>) + |0110>
      m[B0000] = (a + b) / 2;
      m[B1111] = (a + b) / 2;
      m[B0011] = (a - b) / 2;
      m[B1100] = (a - b) / 2;
      m[B0101] = c;
      m[B1010] = c;
      m[B0110] = 1;
      break;
    case Family::F9:  // (a+d)/2 (|0000>+|1111>) + (a-d)/2 (|0011>+|1100>)
                      // + (b+c)/2 (|0101>+|1010>) + (b-c)/2 (|0110>+|1001>)
      m[B0000] = (a + d) / 2;
      m[B1111] = (a + d) / 2;
      m[B0011] = (a - d) / 2;
      m[B1100] = (a - d) / 2;
      m[B0101] = (b + c) / 2;
      m[B1010] = (b + c) / 2;
      m[B0110] = (b - c) / 2;
      m[B1001] = (b - c) / 2;
      break;
  }
  return m;
}

struct ClosedForms {
  // closed-form concurrences in engine qubit order c1..c4 and cut order
  // c12_34, c13_24, c14_23; NaN where the family display gives none
  std::array<double, 4> c_one;
  std::array<double, 3> c_two;
};

double sq(double x) { return x * x; }

ClosedForms closed_forms(const FamilySpec& s) {
  const double a = s.a.value_or(0), b = s.b.value_or(0), c = s.c.value_or(0),
               d = s.d.value_or(0);
  ClosedForms f{{kNaN, kNaN, kNaN, kNaN}, {kNaN, kNaN, kNaN}};
  switch (s.family) {
    case Family::F1:
      f.c_one = {0, 1, 1, 1};
      break;
    case Family::F2: {
      const double r3 = std::sqrt(3.0) / 2, r5 = std::sqrt(5.0) / 2;
      f.c_one = {r3, 1, 1, 1};
      f.c_two = {r5, r5, r5};
      break;
    }
    case Family::F3: {
      // published display puts the unit concurrence at qubit 3; the family's
      // own reduced states put it at qubit 2 (labels 2 and 3 swapped)
      const double r3 = std::sqrt(3.0) / 2;
      f.c_one = {r3, 1, r3, r3};
      f.c_two = {std::sqrt(5.0) / 2, 1, 1};
      break;
    }
    case Family::F4: {
      const double den = 2 * a * a + 3;
      f.c_one[0] = std::sqrt(4 * a * a * (a * a + 3)) / den;
      f.c_one[1] = f.c_one[2] = f.c_one[3] =
          2 * std::sqrt(a * a * a * a + 3 * a * a + 2) / den;
      const double t = 2 * std::sqrt(a * a * a * a + 4 * a * a + 2) / den;
      f.c_two = {t, t, t};
      break;
    }
    case Family::F5: {
      const double den = 4 * a * a + 3, a2 = a * a, a4 = a2 * a2;
      f.c_one[0] = f.c_one[1] = std::sqrt(8 * (2 * a4 + 7 * a2 + 2)) / den;
      f.c_one[2] = f.c_one[3] = std::sqrt(8 * (2 * a4 + 7 * a2 + 1)) / den;
      f.c_two[static_cast<size_t>(PairCut::c12_34)] =
          std::sqrt(4 * (6 * a4 + 14 * a2 + 3)) / den;
      f.c_two[static_cast<size_t>(PairCut::c14_23)] =
          std::sqrt(4 * (6 * a4 + 14 * a2 + 3)) / den;
      f.c_two[static_cast<size_t>(PairCut::c13_24)] = std::sqrt(8 * (6 * a2 + 1)) / den;
      break;
    }
    case Family::F6: {
      // same label swap as F3: the "C1 = C2" pair is the {1,3} pair here
      const double den = a * a + b * b + 1, a2 = a * a, b2 = b * b;
      const double small = std::sqrt(2 * a2 * (b2 + 1) + a2 * a2 + b2 * (b2 + 2)) / den;
      f.c_one = {small, 1, small, 1};
      const double t1214 = std::sqrt(a2 * (4 * b2 + 2) + a2 * a2 + sq(b2 + 1)) / den;
      f.c_two[static_cast<size_t>(PairCut::c12_34)] = t1214;
      f.c_two[static_cast<size_t>(PairCut::c14_23)] = t1214;
      f.c_two[static_cast<size_t>(PairCut::c13_24)] =
          std::sqrt(-2 * a2 * (b2 - 2) + a2 * a2 + b2 * (b2 + 4)) / den;
      break;
    }
    case Family::F7: {
      const double den = 3 * a * a + b * b + 2, a2 = a * a, b2 = b * b;
      const double a4 = a2 * a2, b4 = b2 * b2;
      const double cone =
          std::sqrt(a2 * (6 * b2 + 44) + 9 * a4 + b4 + 12 * b2 + 3) / den;
      f.c_one = {cone, cone, cone, cone};
      const double M11 = a2 * (6 * b2 + 88) + 15 * a4 + 3 * b4 + 24 * b2 + 8;
      f.c_two[static_cast<size_t>(PairCut::c12_34)] =
          std::sqrt(4 * (a2 * (3 * b2 + 10) + 3 * a4 + 2 * b2 + 1)) / den;
      f.c_two[static_cast<size_t>(PairCut::c13_24)] =
          std::sqrt(M11 - 24 * a2 * a * b + 16 * a * b) / (std::sqrt(2.0) * den);
      f.c_two[static_cast<size_t>(PairCut::c14_23)] =
          std::sqrt(M11 + 24 * a2 * a * b - 16 * a * b) / (std::sqrt(2.0) * den);
      break;
    }
    case Family::F8: {
      const double den = a * a + b * b + 2 * c * c + 1;
      const double a2 = a * a, b2 = b * b, c2 = c * c;
      const double M12 = b2 + 2 * c2 + 1;
      const double N12 = c2 + 1;
      const double L12 = a2 * a2 + b2 * b2;
      const double O12 = 2 * a2 * (M12 + 1) + 4 * b2 * N12 + 8 * c2 * (N12 + 1);
      const double cone =
          std::sqrt(2 * a2 * M12 + 2 * b2 * (c2 + N12) + 4 * c2 * N12 + L12) / den;
      f.c_one = {cone, cone, cone, cone};
      f.c_two[static_cast<size_t>(PairCut::c12_34)] =
          std::sqrt(4 * (a2 * M12 + b2 * (c2 + N12) + c2 * c2)) / den;
      f.c_two[static_cast<size_t>(PairCut::c13_24)] =
          std::sqrt(O12 + 8 * a * b * (c2 + N12) + 3 * L12) / (std::sqrt(2.0) * den);
      f.c_two[static_cast<size_t>(PairCut::c14_23)] =
          std::sqrt(O12 - 8 * a * b * (c2 + N12) + 3 * L12) / (std::sqrt(2.0) * den);
      break;
    }
    case Family::F9: {
      const double a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
      const double den = 2 * a2 + 2 * a * b - 2 * a * d + 3 * b2 + 2 * c2 + d2;
      const double M22 = 8 * a2 * a * b + 2 * a2 * a2 + 4 * a * d2 + 8 * b2 * c2 +
                         7 * b2 * b2 + 2 * c2 * c2 + 2 * b2 * d2 - d2 * d2;
      const double N22 = 4 * a2 * (-2 * a * d + 3 * b2 + c2) -
                         4 * a * d * (3 * b2 + 2 * c2 + d2);
      const double L22 = -2 * a * d + 3 * b2 + 2 * c2 + d2;
      const double M32 = 8 * a2 * a * b + 4 * a * d2 + 12 * b2 * c2 + 6 * b2 * d2 +
                         5 * b2 * b2 + 4 * c2 * d2 - 3 * d2 * d2;
      const double N32 = 4 * a * b * (-2 * a * d + 3 * b2 + 2 * c2 + d2) -
                         4 * a * d * (3 * b2 + 2 * c2 + d2);
      const double M42 = 8 * a2 * a * b + 3 * a2 * a2 + 4 * a * d2 + 6 * b2 * c2 +
                         8 * b2 * b2 - 2 * c2 * d2 + 3 * c2 * c2;
      const double N42 = 2 * a2 * (4 * a * d - 5 * b2 - c2 + d2) +
                         4 * a * d * (3 * b2 + 2 * c2 + d2);
      const double L42 = 4 * a * b * (-2 * a * d + 3 * b2 + 2 * c2 + d2);
      const double cone = std::sqrt(2 * (M22 + N22 + 4 * a * b * L22)) / den;
      f.c_one = {cone, cone, cone, cone};
      f.c_two[static_cast<size_t>(PairCut::c12_34)] =
          std::sqrt(2 * (M32 + N32 + 4 * a2 * (L22 + b2))) / den;
      f.c_two[static_cast<size_t>(PairCut::c13_24)] =
          std::sqrt(2 * (M42 - N42 + L42 - 24 * a * b * c * d)) / den;
      f.c_two[static_cast<size_t>(PairCut::c14_23)] =
          std::sqrt(2 * (M42 - N42 + L42 + 24 * a * b * c * d)) / den;
      break;
    }
  }
  return f;
}

double tabulated_norm(const FamilySpec& s) {
  const double a = s.a.value_or(0), b = s.b.value_or(0), c = s.c.value_or(0),
               d = s.d.value_or(0);
  switch (s.family) {
    case Family::F1: return std::sqrt(2.0);
    case Family::F2: return 2.0;
    case Family::F3: return 2.0;
    case Family::F4: return std::sqrt(2 * a * a + 3);
    case Family::F5: return std::sqrt(4 * a * a + 3);
    case Family::F6: return std::sqrt(2 * (1 + a * a + b * b));
    case Family::F7: return std::sqrt(3 * a * a + b * b + 2);
    case Family::F8: return std::sqrt(1 + a * a + b * b + 2 * c * c);
    case Family::F9: {
      const double r = a * a + a * b + 1.5 * b * b + c * c - a * d + d * d / 2;
      return r > 0 ? std::sqrt(r) : kNaN;
    }
  }
  return kNaN;
}

}  // namespace

std::string family_name(Family f) { return "F" + std::to_string(static_cast<int>(f)); }

std::string family_display(Family f) {
  switch (f) {
    case Family::F1: return "L_03+1,03+1";
    case Family::F2: return "L_07+1";
    case Family::F3: return "L_05+3";
    case Family::F4: return "L_a2_03+1";
    case Family::F5: return "L_a4";
    case Family::F6: return "L_a2b2";
    case Family::F7: return "L_ab3";
    case Family::F8: return "L_abc2";
    case Family::F9: return "G_abcd";
  }
  throw std::logic_error("family_display: bad family");
}

Family parse_family(const std::string& name) {
  if (name.size() == 2 && (name[0] == 'F' || name[0] == 'f') && name[1] >= '1' &&
      name[1] <= '9')
    return static_cast<Family>(name[1] - '0');
  throw std::invalid_argument("unknown family \"" + name + "\" (expected F1..F9)");
}

int family_arity(Family f) {
  switch (f) {
    case Family::F1:
    case Family::F2:
    case Family::F3: return 0;
    case Family::F4:
    case Family::F5: return 1;
    case Family::F6:
    case Family::F7: return 2;
    case Family::F8: return 3;
    case Family::F9: return 4;
  }
  throw std::logic_error("family_arity: bad family");
}

void FamilySpec::validate() const {
  const int arity = family_arity(family);
  const std::array<std::optional<double>, 4> ps = {a, b, c, d};
  const char* names = "abcd";
  for (int i = 0; i < 4; ++i) {
    if (i < arity && !ps[static_cast<size_t>(i)])
      throw std::invalid_argument(family_name(family) + ": missing parameter " +
                                  names[i]);
    if (i >= arity && ps[static_cast<size_t>(i)])
      throw std::invalid_argument(family_name(family) + ": unexpected parameter " +
                                  names[i]);
    if (ps[static_cast<size_t>(i)] && !std::isfinite(*ps[static_cast<size_t>(i)]))
      throw std::invalid_argument(family_name(family) + ": non-finite parameter " +
                                  names[i]);
  }
}

std::vector<double> FamilySpec::params() const {
  std::vector<double> out;
  for (const auto& p : {a, b, c, d})
    if (p) out.push_back(*p);
  return out;
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  os << family_name(family);
  const char* names = "abcd";
  const auto ps = params();
  if (!ps.empty()) {
    os << "(";
    for (size_t i = 0; i < ps.size(); ++i) {
      if (i) os << ", ";
      os << names[i] << "=" << ps[i];
    }
    os << ")";
  }
  return os.str();
}

PureState4 family_state(const FamilySpec& spec) {
  spec.validate();
  const auto raw = raw_amplitudes(spec);
  double norm_sq = 0;
  for (const auto& v : raw) norm_sq += std::norm(v);
  if (!(norm_sq > 1e-300))
    throw std::invalid_argument(spec.describe() + ": zero-norm parameter combination");
  return PureState4(raw);
}

FamilyNorms family_norms(const FamilySpec& spec) {
  spec.validate();
  const auto raw = raw_amplitudes(spec);
  double norm_sq = 0;
  for (const auto& v : raw) norm_sq += std::norm(v);
  FamilyNorms n{};
  n.direct = std::sqrt(norm_sq);
  n.tabulated = tabulated_norm(spec);
  n.agree = std::isfinite(n.tabulated) && std::abs(n.direct - n.tabulated) <= 1e-9;
  return n;
}

ClosedFormAudit closed_form_profile(const FamilySpec& spec) {
  const PureState4 state = family_state(spec);
  const ConcurrenceProfile engine = concurrence_profile(state);
  const ClosedForms forms = closed_forms(spec);

  ClosedFormAudit audit{};
  audit.spec = spec;
  audit.norms = family_norms(spec);
  audit.all_agree = true;
  auto push = [&](const std::string& name, double tab, double eng) {
    const bool agree = std::isfinite(tab) && std::abs(tab - eng) <= 1e-9;
    audit.entries.push_back({name, tab, eng, agree});
    if (!agree) audit.all_agree = false;
  };
  for (int q = 1; q <= 4; ++q)
    push("c" + std::to_string(q), forms.c_one[static_cast<size_t>(q - 1)], engine.one(q));
  if (spec.family != Family::F1) {
    push("c12_34", forms.c_two[0], engine.two(PairCut::c12_34));
    push("c13_24", forms.c_two[1], engine.two(PairCut::c13_24));
    push("c14_23", forms.c_two[2], engine.two(PairCut::c14_23));
  }
  return audit;
}

PureState4 benchmark_state(const std::string& name) {
  if (name == "psiA") return family_state({Family::F2});
  if (name == "psiB") return family_state({Family::F3});
  if (name == "psiC") return family_state({Family::F4, 1.0});
  if (name == "psiD") {
    const double a = std::sqrt(51.0 / 32.0 + 5.0 * std::sqrt(113.0) / 32.0);
    return family_state({Family::F5, a});
  }
  if (name == "ghz4") {
    std::array<Cx, 16> m{};
    m[B0000] = 1;
    m[B1111] = 1;
    return PureState4(m);
  }
  throw std::invalid_argument("unknown benchmark state \"" + name +
                              "\" (expected psiA, psiB, psiC, psiD, ghz4)");
}

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = {"psiA", "psiB", "psiC", "psiD", "ghz4"};
  return names;
}

namespace {

std::vector<double> grid_values(double start, double stop, double step) {
  if (!(step > 0) || stop < start)
    throw std::invalid_argument("subfamily_grid: bad range");
  std::vector<double> vs;
  const auto n = static_cast<size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (size_t i = 0; i < n; ++i) vs.push_back(start + static_cast<double>(i) * step);
  return vs;
}

bool nonzero(double x) { return std::abs(x) > 1e-12; }
bool same(double x, double y) { return std::abs(x - y) <= 1e-12; }

}  // namespace

std::vector<FamilySpec> subfamily_grid(const std::string& name, double start,
                                       double stop, double step) {
  const std::vector<double> vs = grid_values(start, stop, step);
  std::vector<FamilySpec> out;

  if (name == "F8:c=0") {
    for (double a : vs)
      for (double b : vs) {
        if (!nonzero(a) && !nonzero(b)) continue;  // fully separable point
        out.push_back({Family::F8, a, b, 0.0});
      }
    return out;
  }
  if (name == "F8:abc!=0") {
    for (double a : vs)
      for (double b : vs)
        for (double c : vs) {
          if (!nonzero(a) || !nonzero(b) || !nonzero(c)) continue;
          out.push_back({Family::F8, a, b, c});
        }
    return out;
  }
  if (name == "F8:c!=0,ab=0") {
    for (double c : vs) {
      if (!nonzero(c)) continue;
      out.push_back({Family::F8, 0.0, 0.0, c});
      for (double t : vs) {
        if (!nonzero(t)) continue;
        out.push_back({Family::F8, t, 0.0, c});
        out.push_back({Family::F8, 0.0, t, c});
      }
    }
    return out;
  }
  if (name == "F9:two-zero") {
    // two parameters vanish, the other two stay nonzero; with x, y, z
    // distinct the three-zero and sign-paired product patterns cannot occur
    // on a positive grid
    for (double x : vs)
      for (double y : vs) {
        if (!nonzero(x) || !nonzero(y)) continue;
        out.push_back({Family::F9, x, y, 0.0, 0.0});
        out.push_back({Family::F9, x, 0.0, y, 0.0});
        out.push_back({Family::F9, x, 0.0, 0.0, y});
        out.push_back({Family::F9, 0.0, x, y, 0.0});
        out.push_back({Family::F9, 0.0, x, 0.0, y});
        out.push_back({Family::F9, 0.0, 0.0, x, y});
      }
    return out;
  }
  if (name == "F9:a=-d,b=c") {
    for (double c : vs)
      for (double d : vs) {
        if (!nonzero(c) || !nonzero(d) || same(c, d)) continue;
        out.push_back({Family::F9, -d, c, c, d});
      }
    return out;
  }
  if (name == "F9:a=d,b!=c") {
    for (double a : vs) {
      if (!nonzero(a)) continue;
      for (double b : vs)
        for (double c : vs) {
          if (same(b, c)) continue;
          out.push_back({Family::F9, a, b, c, a});
        }
    }
    return out;
  }
  if (name == "F9:generic") {
    // all four parameters distinct and nonzero; a positive grid then has no
    // x = +-y coincidence at all
    for (double a : vs)
      for (double b : vs)
        for (double c : vs)
          for (double d : vs) {
            if (!nonzero(a) || !nonzero(b) || !nonzero(c) || !nonzero(d)) continue;
            if (same(a, b) || same(a, c) || same(a, d) || same(b, c) || same(b, d) ||
                same(c, d))
              continue;
            out.push_back({Family::F9, a, b, c, d});
          }
    return out;
  }
  if (name == "F9:products") {
    // the degenerate cases: all equal; three zeros; three equal to the
    // negative of the fourth; two pairs with opposite signs
    for (double t : vs) {
      if (!nonzero(t)) continue;
      out.push_back({Family::F9, t, t, t, t});
      out.push_back({Family::F9, t, 0.0, 0.0, 0.0});
      out.push_back({Family::F9, 0.0, t, 0.0, 0.0});
      out.push_back({Family::F9, 0.0, 0.0, t, 0.0});
      out.push_back({Family::F9, 0.0, 0.0, 0.0, t});
      out.push_back({Family::F9, -t, t, t, t});
      out.push_back({Family::F9, t, -t, t, t});
      out.push_back({Family::F9, t, t, -t, t});
      out.push_back({Family::F9, t, t, t, -t});
      out.push_back({Family::F9, t, t, -t, -t});
      out.push_back({Family::F9, t, -t, t, -t});
      out.push_back({Family::F9, t, -t, -t, t});
    }
    return out;
  }
  throw std::invalid_argument("unknown subfamily \"" + name + "\"");
}

const std::vector<std::string>& subfamily_names() {
  static const std::vector<std::string> names = {
      "F8:c=0",      "F8:abc!=0",    "F8:c!=0,ab=0", "F9:two-zero",
      "F9:a=-d,b=c", "F9:a=d,b!=c",  "F9:generic",   "F9:products"};
  return names;
}

}  // namespace tetragme
