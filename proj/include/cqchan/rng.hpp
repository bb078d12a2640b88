// Copyright 2026 The cqchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQCHAN_RNG_HPP_
#define CQCHAN_RNG_HPP_

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace cqchan {

// All randomized routines draw from std::mt19937_64 seeded through
// splitmix64, and convert raw 64-bit words to doubles by hand.  The
// standard distribution classes are implementation-defined, so they are
// avoided: identical seeds must give identical streams on every platform.

/// One round of the splitmix64 mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator for stream `stream` of master seed `seed`.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  return std::mt19937_64(splitmix64(s));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Index sampled from the distribution given by `probs` (nonnegative,
/// summing to one up to rounding); the tail bucket absorbs the slack.
inline int sample_index(const Eigen::VectorXd& probs, std::mt19937_64& rng) {
  double u = uniform_double(rng);
  double acc = 0.0;
  int last = 0;
  for (int i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    acc += probs[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

}  // namespace cqchan

#endif  // CQCHAN_RNG_HPP_
