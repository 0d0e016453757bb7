#include "tetragme/rng.hpp"

#include <cmath>

namespace tetragme {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
  x += kGolden;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RandomStream::next_u64() { return splitmix64(state_); }

double RandomStream::next_uniform() {
  // 53 mantissa bits, shifted into (0, 1)
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Cx RandomStream::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

RandomStream stream_for(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed;
  std::uint64_t mix = splitmix64(x) ^ (index * 0xD1B54A32D192ED03ULL + kGolden);
  return RandomStream(mix);
}

PureState4 haar_state(std::uint64_t seed, std::uint64_t index) {
  RandomStream rng = stream_for(seed, index);
  std::array<Cx, 16> amps{};
  for (auto& a : amps) a = rng.next_complex_gaussian();
  return PureState4(amps);
}

U2 haar_u2(RandomStream& rng) {
  // Ginibre columns -> Gram-Schmidt -> uniform column phases (Mezzadri)
  Cx g00 = rng.next_complex_gaussian(), g10 = rng.next_complex_gaussian();
  Cx g01 = rng.next_complex_gaussian(), g11 = rng.next_complex_gaussian();
  double n0 = std::sqrt(std::norm(g00) + std::norm(g10));
  Cx c00 = g00 / n0, c10 = g10 / n0;
  const Cx overlap = std::conj(c00) * g01 + std::conj(c10) * g11;
  Cx d01 = g01 - overlap * c00, d11 = g11 - overlap * c10;
  double n1 = std::sqrt(std::norm(d01) + std::norm(d11));
  const Cx ph0 = std::polar(1.0, 2.0 * M_PI * rng.next_uniform());
  const Cx ph1 = std::polar(1.0, 2.0 * M_PI * rng.next_uniform());
  return {{{c00 * ph0, d01 / n1 * ph1}, {c10 * ph0, d11 / n1 * ph1}}};
}

PureState4 apply_local_unitaries(const PureState4& state, const std::array<U2, 4>& us) {
  std::array<Cx, 16> cur = state.amps();
  for (int q = 1; q <= 4; ++q) {
    const U2& u = us[static_cast<size_t>(q - 1)];
    const int bit = 1 << (4 - q);
    std::array<Cx, 16> next{};
    for (int i = 0; i < 16; ++i) {
      const int b = (i & bit) ? 1 : 0;
      const int i0 = i & ~bit;
      next[static_cast<size_t>(i)] =
          u[static_cast<size_t>(b)][0] * cur[static_cast<size_t>(i0)] +
          u[static_cast<size_t>(b)][1] * cur[static_cast<size_t>(i0 | bit)];
    }
    cur = next;
  }
  return PureState4(cur);
}

}  // namespace tetragme
