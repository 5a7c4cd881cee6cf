// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <ostream>
#include <string>

#include <sl2tl/tensor.hpp>
#include <sl2tl/udot.hpp>

namespace sl2tl::testing {

// Randomized tests draw from this generator. Set SL2TL_TEST_SEED to replay a run.
inline std::mt19937_64 rng() {
  std::uint64_t seed = 20261017;
  if (const char* env = std::getenv("SL2TL_TEST_SEED")) seed = std::strtoull(env, nullptr, 10);
  ::testing::Test::RecordProperty("seed", std::to_string(seed));
  return std::mt19937_64(seed);
}

inline int uniform(std::mt19937_64& gen, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen);
}

}  // namespace sl2tl::testing

namespace sl2tl {

// Readable failure messages.
template <class Coeff>
void PrintTo(const BasicTensorVector<Coeff>& v, std::ostream* os) {
  *os << to_string(v);
}
inline void PrintTo(const UdotElement& x, std::ostream* os) { *os << to_string(x); }
inline void PrintTo(const CanonicalCoords& x, std::ostream* os) { *os << to_string(x); }

}  // namespace sl2tl
