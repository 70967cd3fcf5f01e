// Copyright 2026 The sprn Authors
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

#include <cstdint>
#include <random>
#include <vector>

#include "sprn/complex_matrix.hpp"

namespace sprn {

/// PRNG identity recorded in every report. Gaussians come from an explicit
/// Box-Muller transform on the raw 64-bit stream, so results do not depend
/// on the standard library's distribution implementations.
inline constexpr const char* kPrngName = "mt19937_64";

/// Per-sample stream derivation: sweeps are order-independent because each
/// sample owns the stream seed ^ index.
inline std::uint64_t derive_stream(std::uint64_t master_seed,
                                   std::uint64_t sample_index) {
  return master_seed ^ sample_index;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Standard real Gaussian (Box-Muller).
  double gauss();
  /// Standard complex Gaussian: (g + i g) / sqrt(2).
  cplx cgauss();

  /// Unit vector with i.i.d. complex-Gaussian entries, normalized.
  std::vector<cplx> unit_vector(std::size_t n);
  /// Random point on the probability simplex (k exponential weights).
  std::vector<double> simplex(std::size_t k);
  /// Haar-ish random unitary via Gram-Schmidt of a Gaussian matrix.
  ComplexMatrix unitary(std::size_t n);
  /// Random invertible matrix whose singular values satisfy
  /// sigma_min >= min_sv_ratio * sigma_max (resampled until they do).
  ComplexMatrix invertible(std::size_t n, double min_sv_ratio = 1e-3);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sprn
