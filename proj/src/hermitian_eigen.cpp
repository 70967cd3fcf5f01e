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

#include "sprn/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sprn {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation on the (p, q) plane, p < q. The rotation is
// the product of a phase that makes A(p,q) real and a real Givens rotation
// that annihilates it:
//   U[p][p] = c, U[p][q] = s, U[q][p] = -s e^{-i phi}, U[q][q] = c e^{-i phi}
// with phi = arg A(p,q). Updates A <- U^dagger A U and V <- V U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx phase = apq / r;  // e^{i phi}

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double sgn = tau >= 0.0 ? 1.0 : -1.0;
  const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // Row update: A <- U^dagger A.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ap = a(p, k);
    const cplx aq = a(q, k);
    a(p, k) = c * ap - s * phase * aq;
    a(q, k) = s * ap + c * phase * aq;
  }
  // Column update: A <- A U, and accumulate V <- V U.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ap = a(k, p);
    const cplx aq = a(k, q);
    a(k, p) = c * ap - s * std::conj(phase) * aq;
    a(k, q) = s * ap + c * std::conj(phase) * aq;

    const cplx vp = v(k, p);
    const cplx vq = v(k, q);
    v(k, p) = c * vp - s * std::conj(phase) * vq;
    v(k, q) = s * vp + c * std::conj(phase) * vq;
  }
  // The rotation zeroes (p,q) exactly in exact arithmetic; pin it and keep
  // the diagonal real so rounding cannot accumulate there.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cplx{a(p, p).real(), 0.0};
  a(q, q) = cplx{a(q, q).real(), 0.0};
}

}  // namespace

HermitianEigenResult hermitian_eigen(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("hermitian_eigen: not square");
  if (!m.all_finite())
    throw std::invalid_argument("hermitian_eigen: non-finite entries");
  const double norm = m.frobenius_norm();
  if (m.hermiticity_gap() > 1e-10 * std::max(norm, 1e-300))
    throw std::invalid_argument("hermitian_eigen: matrix not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  if (n > 1 && norm > 0.0) {
    const double target = 1e-13 * norm;
    bool converged = false;
    for (int sweep = 0; sweep < 100; ++sweep) {
      if (offdiag_norm(a) <= target) {
        converged = true;
        break;
      }
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    if (!converged && offdiag_norm(a) > target)
      throw std::runtime_error("hermitian_eigen: Jacobi did not converge");
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return eigs[i] < eigs[j]; });

  HermitianEigenResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    res.eigenvalues[k] = eigs[order[k]];
    for (std::size_t r = 0; r < n; ++r) res.eigenvectors(r, k) = v(r, order[k]);
  }
  return res;
}

int numerical_rank(const std::vector<double>& eigenvalues,
                   const TolerancePolicy& tol) {
  double lambda_max = 0.0;
  for (double e : eigenvalues) lambda_max = std::max(lambda_max, e);
  if (lambda_max <= 0.0) return 0;
  const double thr = tol.rank_threshold() * lambda_max;
  int rank = 0;
  for (double e : eigenvalues)
    if (e > thr) ++rank;
  return rank;
}

int numerical_rank(const ComplexMatrix& psd, const TolerancePolicy& tol) {
  return numerical_rank(hermitian_eigen(psd).eigenvalues, tol);
}

double min_eigenvalue(const ComplexMatrix& herm) {
  return hermitian_eigen(herm).eigenvalues.front();
}

}  // namespace sprn
