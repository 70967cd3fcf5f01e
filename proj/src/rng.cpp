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

#include "sprn/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sprn/hermitian_eigen.hpp"

namespace sprn {

double Rng::uniform() {
  // 53-bit mantissa from the top bits of the 64-bit output.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

cplx Rng::cgauss() {
  const double re = gauss();
  const double im = gauss();
  return cplx{re, im} / std::sqrt(2.0);
}

std::vector<cplx> Rng::unit_vector(std::size_t n) {
  std::vector<cplx> v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (cplx& z : v) {
      z = cgauss();
      norm2 += std::norm(z);
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& z : v) z *= inv;
  return v;
}

std::vector<double> Rng::simplex(std::size_t k) {
  std::vector<double> p(k);
  double sum = 0.0;
  for (double& x : p) {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    x = -std::log(u);
    sum += x;
  }
  for (double& x : p) x /= sum;
  return p;
}

ComplexMatrix Rng::unitary(std::size_t n) {
  // Gram-Schmidt of an n x n Gaussian matrix, with a deterministic retry if a
  // column collapses (probability ~0).
  for (int attempt = 0; attempt < 64; ++attempt) {
    ComplexMatrix q(n, n);
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      std::vector<cplx> col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = cgauss();
      for (std::size_t prev = 0; prev < c; ++prev) {
        cplx ov = 0.0;
        for (std::size_t r = 0; r < n; ++r) ov += std::conj(q(r, prev)) * col[r];
        for (std::size_t r = 0; r < n; ++r) col[r] -= ov * q(r, prev);
      }
      const double nrm = vector_norm(col);
      if (nrm < 1e-8) {
        ok = false;
        break;
      }
      for (std::size_t r = 0; r < n; ++r) q(r, c) = col[r] / nrm;
    }
    if (ok) return q;
  }
  throw std::runtime_error("Rng::unitary: repeated Gram-Schmidt collapse");
}

ComplexMatrix Rng::invertible(std::size_t n, double min_sv_ratio) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    ComplexMatrix f(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) f(r, c) = cgauss();
    const auto eig = hermitian_eigen(f.adjoint() * f);
    const double smax = std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
    const double smin = std::sqrt(std::max(eig.eigenvalues.front(), 0.0));
    if (smax > 0.0 && smin >= min_sv_ratio * smax) return f;
  }
  throw std::runtime_error("Rng::invertible: could not draw a well-conditioned matrix");
}

}  // namespace sprn
