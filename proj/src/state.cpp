#include "tetragme/state.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tetragme/linalg.hpp"

namespace tetragme {

namespace {

// qubit q (1..4) of basis index i: index = 8 q1 + 4 q2 + 2 q3 + q4
inline int qubit_bit(int index, int qubit) { return (index >> (4 - qubit)) & 1; }

std::string g17_local(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PureState4::PureState4(const std::array<Cx, kDim>& amps) : amps_(amps) {
  double norm_sq = 0;
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("PureState4: non-finite amplitude");
    norm_sq += std::norm(a);
  }
  if (!(norm_sq > 1e-300))
    throw std::invalid_argument("PureState4: zero-norm amplitude vector");
  if (std::abs(norm_sq - 1.0) <= 1e-13) return;  // already unit; keep bits stable
  const double norm = std::sqrt(norm_sq);
  norm_factor_ = 1.0 / norm;
  for (auto& a : amps_) a *= norm_factor_;
}

Bipartition Bipartition::keep_one(int qubit) {
  if (qubit < 1 || qubit > 4)
    throw std::invalid_argument("Bipartition: qubit label out of range");
  return Bipartition(1, {qubit, 0});
}

Bipartition Bipartition::keep_pair(int qa, int qb) {
  if (qa > qb) std::swap(qa, qb);
  if (qa < 1 || qb > 4 || qa == qb)
    throw std::invalid_argument("Bipartition: invalid qubit pair");
  if (qa != 1)
    throw std::invalid_argument("Bipartition: non-canonical 2|2 cut " +
                                std::to_string(qa) + std::to_string(qb) +
                                "; use the complement containing qubit 1");
  return Bipartition(2, {qa, qb});
}

const std::array<Bipartition, 7>& Bipartition::canonical() {
  static const std::array<Bipartition, 7> cuts = {
      keep_one(1), keep_one(2), keep_one(3), keep_one(4),
      keep_pair(1, 2), keep_pair(1, 3), keep_pair(1, 4)};
  return cuts;
}

bool Bipartition::contains(int qubit) const {
  return qubits_[0] == qubit || (size_ == 2 && qubits_[1] == qubit);
}

std::string Bipartition::name() const {
  std::string kept, rest;
  for (int q = 1; q <= 4; ++q) (contains(q) ? kept : rest) += static_cast<char>('0' + q);
  return kept + "|" + rest;
}

ReducedDensity::ReducedDensity(int dim, const std::array<Cx, 16>& entries)
    : dim_(dim), entries_(entries) {
  if (dim_ != 2 && dim_ != 4) throw std::invalid_argument("ReducedDensity: dim must be 2 or 4");
  double trace = 0;
  for (int r = 0; r < dim_; ++r) {
    trace += entry(r, r).real();
    if (std::abs(entry(r, r).imag()) > 1e-12)
      throw std::invalid_argument("ReducedDensity: complex diagonal");
    for (int c = r + 1; c < dim_; ++c)
      if (std::abs(entry(r, c) - std::conj(entry(c, r))) > 1e-12)
        throw std::invalid_argument("ReducedDensity: not Hermitian");
  }
  if (std::abs(trace - 1.0) > 1e-12)
    throw std::invalid_argument("ReducedDensity: trace != 1");
}

void ReducedDensity::validate(double herm_tol, double eig_tol) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (std::abs(entry(r, c) - std::conj(entry(c, r))) > herm_tol)
        throw std::invalid_argument("ReducedDensity: Hermiticity violated");
  const auto eig = hermitian_eigenvalues(dim_, entries_.data());
  if (eig.front() < -eig_tol)
    throw std::invalid_argument("ReducedDensity: negative eigenvalue " +
                                g17_local(eig.front()));
  double pur = 0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) pur += std::norm(entry(r, c));
  if (pur < 1.0 / dim_ - 1e-12 || pur > 1.0 + 1e-12)
    throw std::invalid_argument("ReducedDensity: purity out of range");
}

ReducedDensity partial_trace(const PureState4& state, const Bipartition& cut) {
  const int dim = cut.size() == 1 ? 2 : 4;
  // kept bits packed with the smaller qubit label more significant
  int kept_index[16], rest_index[16];
  for (int i = 0; i < 16; ++i) {
    int k = 0, r = 0;
    for (int q = 1; q <= 4; ++q) {
      if (cut.contains(q))
        k = (k << 1) | qubit_bit(i, q);
      else
        r = (r << 1) | qubit_bit(i, q);
    }
    kept_index[i] = k;
    rest_index[i] = r;
  }
  std::array<Cx, 16> rho{};
  const auto& amps = state.amps();
  for (int i = 0; i < 16; ++i) {
    if (amps[static_cast<size_t>(i)] == Cx{0, 0}) continue;
    for (int j = 0; j < 16; ++j) {
      if (rest_index[i] != rest_index[j]) continue;
      rho[static_cast<size_t>(kept_index[i] * dim + kept_index[j])] +=
          amps[static_cast<size_t>(i)] * std::conj(amps[static_cast<size_t>(j)]);
    }
  }
  return ReducedDensity(dim, rho);
}

double purity(const ReducedDensity& rho) {
  double raw = 0;
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) raw += std::norm(rho.entry(r, c));
  const double lo = 1.0 / rho.dim();
  const double clamped = std::min(1.0, std::max(lo, raw));
  if (std::abs(clamped - raw) > 1e-10)
    throw std::invalid_argument("purity: value " + g17_local(raw) +
                                " outside [1/dim, 1] beyond tolerance");
  return clamped;
}

namespace {

ParsedState parse_state_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("amplitudes"))
    throw std::invalid_argument("state document: missing \"amplitudes\" key");
  const auto& arr = doc["amplitudes"];
  if (!arr.is_array() || arr.size() != 16)
    throw std::invalid_argument("state document: \"amplitudes\" must be an array of 16 pairs");
  std::array<Cx, 16> amps{};
  for (size_t i = 0; i < 16; ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw std::invalid_argument("state document: amplitude " + std::to_string(i) +
                                  " must be a [re, im] number pair");
    amps[i] = Cx(pair[0].get<double>(), pair[1].get<double>());
  }
  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      throw std::invalid_argument("state document: \"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  PureState4 state(amps);
  return ParsedState{state, state.norm_factor(), label};
}

}  // namespace

ParsedState parse_state(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    return parse_state_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state document: malformed JSON: ") + e.what());
  }
}

ParsedState parse_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("state document: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

std::string serialize_state(const PureState4& state, const std::optional<std::string>& label) {
  std::string out = "{\"amplitudes\": [";
  for (int i = 0; i < 16; ++i) {
    if (i) out += ", ";
    out += "[" + g17_local(state.amp(i).real()) + ", " + g17_local(state.amp(i).imag()) + "]";
  }
  out += "]";
  if (label) {
    out += ", \"label\": \"";
    for (char ch : *label) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    out += "\"";
  }
  out += "}";
  return out;
}

PureState4 permute_qubits(const PureState4& state, const std::array<int, 4>& perm) {
  bool seen[5] = {};
  for (int q = 1; q <= 4; ++q) {
    const int p = perm[static_cast<size_t>(q - 1)];
    if (p < 1 || p > 4 || seen[p]) throw std::invalid_argument("permute_qubits: not a permutation");
    seen[p] = true;
  }
  std::array<Cx, 16> out{};
  for (int i = 0; i < 16; ++i) {
    int j = 0;
    for (int q = 1; q <= 4; ++q)
      j |= qubit_bit(i, q) << (4 - perm[static_cast<size_t>(q - 1)]);
    out[static_cast<size_t>(j)] = state.amp(i);
  }
  return PureState4(out);
}

}  // namespace tetragme
