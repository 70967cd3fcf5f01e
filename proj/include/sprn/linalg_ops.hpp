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

#include <cstddef>
#include <vector>

#include "sprn/complex_matrix.hpp"
#include "sprn/tolerances.hpp"

namespace sprn {

/// Kronecker product: (A (x) B)[(i*m+k),(j*n+l)] = A[i][j] * B[k][l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a (d1*d2) x (d1*d2) operator over one tensor factor.
/// traced_party is 1 or 2.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t d1,
                            std::size_t d2, int traced_party);

/// Partial transpose over one tensor factor (party 1 or 2). A pure index
/// permutation, so applying it twice reproduces the input bit-for-bit.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t d1,
                                std::size_t d2, int party);

/// Von Neumann entropy in bits: -sum lambda log2 lambda, with 0 log 0 := 0.
/// Eigenvalues below 1e-12 are clamped to zero; an eigenvalue below
/// -eig_negativity * trace signals non-state input and throws.
double von_neumann_entropy(const ComplexMatrix& rho,
                           const TolerancePolicy& tol = {});

/// Probability spectrum: non-negative values sorted descending, summing to 1.
/// Accepts eigenvalue noise down to -eig_negativity (clamped to zero).
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> probs, const TolerancePolicy& tol = {});
  static Spectrum of_density(const ComplexMatrix& rho,
                             const TolerancePolicy& tol = {});

  const std::vector<double>& values() const { return v_; }
  std::size_t size() const { return v_.size(); }

 private:
  std::vector<double> v_;
};

enum class MajRelation { LeftMajorizes, RightMajorizes, Equal, Incomparable };

const char* maj_relation_name(MajRelation r);

/// Majorization comparison of two spectra (shorter side zero-padded).
/// p majorizes q iff every prefix sum of p is >= the corresponding prefix
/// sum of q, within `slack`; Equal iff both directions hold.
MajRelation majorization_compare(const Spectrum& p, const Spectrum& q,
                                 double slack = 1e-9);

/// True iff the zero-padded sorted spectra agree within `per_entry_tol`.
bool spectra_equal(const Spectrum& p, const Spectrum& q, double per_entry_tol);

/// Schmidt decomposition of a unit vector in C^{d1} (x) C^{d2}:
///   v[i*d2+j] = sum_k coefficients[k] * left(i,k) * right(j,k)
/// with coefficients sorted descending, sum of squares 1, and orthonormal
/// left/right columns (min(d1,d2) of them).
struct SchmidtResult {
  std::vector<double> coefficients;
  ComplexMatrix left;
  ComplexMatrix right;
};

SchmidtResult schmidt_decompose(const std::vector<cplx>& v, std::size_t d1,
                                std::size_t d2);

}  // namespace sprn
