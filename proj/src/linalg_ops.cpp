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

#include "sprn/linalg_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sprn/hermitian_eigen.hpp"

namespace sprn {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

static void check_bipartite_shape(const ComplexMatrix& rho, std::size_t d1,
                                  std::size_t d2, const char* who) {
  if (!rho.square() || rho.rows() != d1 * d2)
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t d1,
                            std::size_t d2, int traced_party) {
  check_bipartite_shape(rho, d1, d2, "partial_trace");
  if (traced_party == 2) {
    ComplexMatrix out(d1, d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < d2; ++k) s += rho(i * d2 + k, j * d2 + k);
        out(i, j) = s;
      }
    return out;
  }
  if (traced_party == 1) {
    ComplexMatrix out(d2, d2);
    for (std::size_t k = 0; k < d2; ++k)
      for (std::size_t l = 0; l < d2; ++l) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < d1; ++i) s += rho(i * d2 + k, i * d2 + l);
        out(k, l) = s;
      }
    return out;
  }
  throw std::invalid_argument("partial_trace: traced_party must be 1 or 2");
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t d1,
                                std::size_t d2, int party) {
  check_bipartite_shape(rho, d1, d2, "partial_transpose");
  ComplexMatrix out(d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t k = 0; k < d2; ++k)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t l = 0; l < d2; ++l) {
          if (party == 2)
            out(i * d2 + k, j * d2 + l) = rho(i * d2 + l, j * d2 + k);
          else if (party == 1)
            out(i * d2 + k, j * d2 + l) = rho(j * d2 + k, i * d2 + l);
          else
            throw std::invalid_argument("partial_transpose: party must be 1 or 2");
        }
  return out;
}

double von_neumann_entropy(const ComplexMatrix& rho,
                           const TolerancePolicy& tol) {
  const auto eig = hermitian_eigen(rho);
  const double tr = rho.trace().real();
  double h = 0.0;
  for (double lam : eig.eigenvalues) {
    if (lam < -tol.eig_negativity() * std::max(tr, 1.0))
      throw std::invalid_argument("von_neumann_entropy: input is not a state");
    if (lam < 1e-12) continue;  // 0 log 0 := 0
    h -= lam * std::log2(lam);
  }
  return h;
}

Spectrum::Spectrum(std::vector<double> probs, const TolerancePolicy& tol) {
  double sum = 0.0;
  for (double& p : probs) {
    if (p < -tol.eig_negativity())
      throw std::invalid_argument("Spectrum: negative probability");
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("Spectrum: probabilities do not sum to 1");
  std::sort(probs.begin(), probs.end(), std::greater<double>());
  v_ = std::move(probs);
}

Spectrum Spectrum::of_density(const ComplexMatrix& rho,
                              const TolerancePolicy& tol) {
  return Spectrum(hermitian_eigen(rho).eigenvalues, tol);
}

const char* maj_relation_name(MajRelation r) {
  switch (r) {
    case MajRelation::LeftMajorizes: return "LeftMajorizes";
    case MajRelation::RightMajorizes: return "RightMajorizes";
    case MajRelation::Equal: return "Equal";
    case MajRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

MajRelation majorization_compare(const Spectrum& p, const Spectrum& q,
                                 double slack) {
  const std::size_t n = std::max(p.size(), q.size());
  double pp = 0.0, qq = 0.0;
  bool left = true, right = true;
  for (std::size_t i = 0; i < n; ++i) {
    pp += i < p.size() ? p.values()[i] : 0.0;
    qq += i < q.size() ? q.values()[i] : 0.0;
    if (pp < qq - slack) left = false;
    if (qq < pp - slack) right = false;
  }
  if (left && right) return MajRelation::Equal;
  if (left) return MajRelation::LeftMajorizes;
  if (right) return MajRelation::RightMajorizes;
  return MajRelation::Incomparable;
}

bool spectra_equal(const Spectrum& p, const Spectrum& q, double per_entry_tol) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p.values()[i] : 0.0;
    const double b = i < q.size() ? q.values()[i] : 0.0;
    if (std::abs(a - b) > per_entry_tol) return false;
  }
  return true;
}

SchmidtResult schmidt_decompose(const std::vector<cplx>& v, std::size_t d1,
                                std::size_t d2) {
  if (v.size() != d1 * d2)
    throw std::invalid_argument("schmidt_decompose: dimension mismatch");
  const double nrm = vector_norm(v);
  if (nrm < 1e-12) throw std::invalid_argument("schmidt_decompose: zero vector");

  // Reshape v into M (d1 x d2) and eigendecompose the smaller Gram matrix.
  ComplexMatrix m(d1, d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) m(i, j) = v[i * d2 + j] / nrm;

  const bool left_small = d1 <= d2;
  const ComplexMatrix gram =
      left_small ? m * m.adjoint() : m.adjoint() * m;
  const auto eig = hermitian_eigen(gram);
  const std::size_t k = std::min(d1, d2);

  SchmidtResult res;
  res.coefficients.resize(k);
  res.left = ComplexMatrix(d1, k);
  res.right = ComplexMatrix(d2, k);

  // Gram eigenvalues ascending; take them in descending order.
  std::vector<std::vector<cplx>> small_vecs(k), large_vecs(k);
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t src = k - 1 - t;
    const double lam = std::max(eig.eigenvalues[src], 0.0);
    res.coefficients[t] = std::sqrt(lam);
    std::vector<cplx> u(gram.rows());
    for (std::size_t r = 0; r < gram.rows(); ++r) u[r] = eig.eigenvectors(r, src);
    small_vecs[t] = std::move(u);
  }

  // Recover the other side's vectors; directions with negligible singular
  // value are completed by Gram-Schmidt against the ones already found.
  const std::size_t other_dim = left_small ? d2 : d1;
  const double sv_floor = 1e-12;
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<cplx> w(other_dim, cplx{0.0, 0.0});
    if (res.coefficients[t] > sv_floor) {
      if (left_small) {
        // w[j] = conj(sum_i conj(M[i][j]) u[i]) / s = sum_i M[i][j] conj(u[i]) / s
        for (std::size_t j = 0; j < d2; ++j) {
          cplx s = 0.0;
          for (std::size_t i = 0; i < d1; ++i)
            s += m(i, j) * std::conj(small_vecs[t][i]);
          w[j] = s / res.coefficients[t];
        }
      } else {
        // Gram was M^dagger M, so small_vecs hold right-side data; the
        // left vectors are u = M w / s with w read back below.
        for (std::size_t i = 0; i < d1; ++i) {
          cplx s = 0.0;
          for (std::size_t j = 0; j < d2; ++j) s += m(i, j) * small_vecs[t][j];
          w[i] = s / res.coefficients[t];
        }
      }
    }
    large_vecs[t] = std::move(w);
  }
  // Gram-Schmidt fill for zero singular directions on the large side.
  for (std::size_t t = 0; t < k; ++t) {
    if (res.coefficients[t] > sv_floor) continue;
    std::vector<cplx> cand(other_dim);
    for (std::size_t basis = 0; basis < other_dim; ++basis) {
      std::fill(cand.begin(), cand.end(), cplx{0.0, 0.0});
      cand[basis] = 1.0;
      for (std::size_t s = 0; s < k; ++s) {
        if (s == t || vector_norm(large_vecs[s]) < 0.5) continue;
        cplx ov = 0.0;
        for (std::size_t r = 0; r < other_dim; ++r)
          ov += std::conj(large_vecs[s][r]) * cand[r];
        for (std::size_t r = 0; r < other_dim; ++r)
          cand[r] -= ov * large_vecs[s][r];
      }
      const double n2 = vector_norm(cand);
      if (n2 > 1e-6) {
        for (cplx& z : cand) z /= n2;
        break;
      }
    }
    large_vecs[t] = cand;
  }

  for (std::size_t t = 0; t < k; ++t) {
    if (left_small) {
      for (std::size_t i = 0; i < d1; ++i) res.left(i, t) = small_vecs[t][i];
      // Right vectors defined so v = sum s_t left_t (x) right_t, i.e. the
      // conjugate of the usual SVD columns.
      for (std::size_t j = 0; j < d2; ++j) res.right(j, t) = large_vecs[t][j];
    } else {
      for (std::size_t i = 0; i < d1; ++i) res.left(i, t) = large_vecs[t][i];
      // small_vecs are eigenvectors of M^dagger M; reconstruction needs
      // their conjugate on the right side.
      for (std::size_t j = 0; j < d2; ++j)
        res.right(j, t) = std::conj(small_vecs[t][j]);
    }
  }
  return res;
}

}  // namespace sprn
