#pragma once

#include <array>
#include <cstdint>

#include "tetragme/state.hpp"

namespace tetragme {

/// Deterministic 64-bit stream (splitmix64). Used instead of <random>
/// distributions so that sampled states are identical across standard
/// libraries, which keeps sweep and scan output byte-reproducible.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double next_uniform();   // (0, 1)
  double next_gaussian();  // standard normal (Box-Muller)
  Cx next_complex_gaussian();

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0;
};

/// Stream for sample `index` of a campaign rooted at `seed`; one root seed,
/// per-sample counter.
RandomStream stream_for(std::uint64_t seed, std::uint64_t index);

/// Haar-random pure state: 16 complex standard Gaussians, normalized.
PureState4 haar_state(std::uint64_t seed, std::uint64_t index);

using U2 = std::array<std::array<Cx, 2>, 2>;

/// Haar-random single-qubit unitary (Ginibre + Gram-Schmidt + phase fix).
U2 haar_u2(RandomStream& rng);

/// (U1 x U2 x U3 x U4) |state>.
PureState4 apply_local_unitaries(const PureState4& state, const std::array<U2, 4>& us);

}  // namespace tetragme
