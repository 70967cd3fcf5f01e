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

#include <vector>

#include "sprn/complex_matrix.hpp"
#include "sprn/tolerances.hpp"

namespace sprn {

/// Result of a Hermitian eigendecomposition: M = V diag(lambda) V^dagger.
/// Eigenvalues are sorted ascending; column k of `eigenvectors` belongs to
/// eigenvalues[k]. Within a degenerate cluster the eigenvector choice is
/// unspecified (but deterministic for identical input).
struct HermitianEigenResult {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. The input must be Hermitian within 1e-10 * ||M||_F; it is
/// symmetrized as (M + M^dagger)/2 before iterating. Converges when the
/// off-diagonal Frobenius norm drops below 1e-13 * ||M||_F (cap: 100 sweeps).
///
/// Throws std::invalid_argument for non-square, non-finite or visibly
/// non-Hermitian input, std::runtime_error if the sweep cap is hit.
HermitianEigenResult hermitian_eigen(const ComplexMatrix& m);

/// Number of eigenvalues above rank_threshold * lambda_max. Input is expected
/// Hermitian PSD; a zero (or negative-semidefinite) matrix has rank 0.
int numerical_rank(const ComplexMatrix& psd, const TolerancePolicy& tol = {});
int numerical_rank(const std::vector<double>& eigenvalues,
                   const TolerancePolicy& tol = {});

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& herm);

}  // namespace sprn
