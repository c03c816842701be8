//
// Copyright 2026 The mtnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MTNOISE_RANDOM_H_
#define MTNOISE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace mtnoise {

// Mixes (seed, stream) into an engine seed. Used to give every sentence pair
// and every sweep level its own independent stream.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

// Deterministic random source. The engine sequence is fixed by the standard
// (mt19937_64), and the distributions below are implemented here rather
// than taken from <random>, whose algorithms differ between standard
// libraries. Identical (seed, stream) therefore gives identical draws on
// every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double UniformDouble();

  // Uniform on [0, n). Requires n > 0.
  std::uint64_t UniformIndex(std::uint64_t n);

  bool Bernoulli(double p) { return UniformDouble() < p; }

  // A new, independent source keyed on this source's seed and `stream`.
  RandomSource Split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace mtnoise

#endif  // MTNOISE_RANDOM_H_
