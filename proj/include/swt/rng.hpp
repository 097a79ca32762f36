// Copyright 2026 The SWT Toolkit Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace swt {

/// Philox4x64-10 block function (Salmon et al., Random123).
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key);

/// A reproducible random stream: Philox4x64-10 keyed by (seed, stream id)
/// with a 256-bit counter incremented per block. Streams with different ids
/// are statistically independent, so work items can derive their own.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound) by rejection, bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// +1 or -1 with equal probability.
  int rademacher() { return (next_u64() >> 63) != 0 ? 1 : -1; }

  std::uint64_t seed() const { return key_[0]; }
  std::uint64_t stream_id() const { return key_[1]; }

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{};
  std::array<std::uint64_t, 4> block_{};
  int used_ = 4;
};

/// Mixes a list of integers into one stream id (SplitMix64 finalizer chain).
std::uint64_t derive_stream_id(std::initializer_list<std::uint64_t> parts);

}  // namespace swt
