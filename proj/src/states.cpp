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

#include "sprn/states.hpp"

#include <cmath>
#include <stdexcept>

#include "sprn/hermitian_eigen.hpp"
#include "sprn/linalg_ops.hpp"
#include "sprn/rng.hpp"

namespace sprn {

const char* pair_name(Pair p) {
  switch (p) {
    case Pair::AB: return "AB";
    case Pair::BC: return "BC";
    case Pair::CA: return "CA";
  }
  return "?";
}

std::array<Pair, 3> all_pairs() { return {Pair::AB, Pair::BC, Pair::CA}; }

std::array<Pair, 2> sibling_pairs(Pair p) {
  switch (p) {
    case Pair::AB: return {Pair::BC, Pair::CA};
    case Pair::BC: return {Pair::CA, Pair::AB};
    case Pair::CA: return {Pair::AB, Pair::BC};
  }
  return {Pair::AB, Pair::BC};
}

PureState3::PureState3(std::array<std::size_t, 3> dims, std::vector<cplx> amps,
                       Provenance prov, bool renormalize)
    : dims_(dims), amps_(std::move(amps)), prov_(std::move(prov)) {
  if (dims_[0] == 0 || dims_[1] == 0 || dims_[2] == 0)
    throw std::invalid_argument("PureState3: zero dimension");
  if (amps_.size() != dims_[0] * dims_[1] * dims_[2])
    throw std::invalid_argument("PureState3: amplitude count mismatch");
  const double n = vector_norm(amps_);
  if (renormalize) {
    if (n < 1e-12) throw std::invalid_argument("PureState3: zero vector");
    for (cplx& z : amps_) z /= n;
  } else if (std::abs(n - 1.0) > 1e-10) {
    throw std::invalid_argument("PureState3: state not normalized");
  }
  for (const cplx& z : amps_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("PureState3: non-finite amplitude");
}

BipartiteDensity::BipartiteDensity(Pair p, std::size_t dx, std::size_t dy,
                                   ComplexMatrix m, const TolerancePolicy& tol)
    : pair(p), dim_x(dx), dim_y(dy) {
  if (!m.square() || m.rows() != dx * dy)
    throw std::invalid_argument("BipartiteDensity: shape mismatch");
  if (m.hermiticity_gap() > 1e-10 * std::max(m.frobenius_norm(), 1.0))
    throw std::invalid_argument("BipartiteDensity: not Hermitian");
  mat = hermitian_part(m);
  const double tr = mat.trace().real();
  if (std::abs(tr - 1.0) > 1e-10)
    throw std::invalid_argument("BipartiteDensity: trace is not 1");
  if (min_eigenvalue(mat) < -tol.eig_negativity())
    throw std::invalid_argument("BipartiteDensity: negative eigenvalue");
}

ComplexMatrix BipartiteDensity::marginal_x() const {
  return partial_trace(mat, dim_x, dim_y, 2);
}

ComplexMatrix BipartiteDensity::marginal_y() const {
  return partial_trace(mat, dim_x, dim_y, 1);
}

// --- Families --------------------------------------------------------------

PureState3 ghz(std::size_t d) {
  if (d < 2) throw std::invalid_argument("ghz: d must be >= 2");
  std::vector<cplx> amps(d * d * d, cplx{0.0, 0.0});
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) amps[(i * d + i) * d + i] = w;
  Provenance prov;
  prov.family = "ghz";
  prov.params["d"] = static_cast<double>(d);
  prov.known_tensor_rank = static_cast<int>(d);
  return PureState3({d, d, d}, std::move(amps), std::move(prov));
}

PureState3 mc_state(const std::vector<double>& p,
                    const std::vector<std::vector<cplx>>& b) {
  if (p.empty() || p.size() != b.size())
    throw std::invalid_argument("mc_state: p and b must have equal nonzero length");
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) throw std::invalid_argument("mc_state: negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("mc_state: probabilities must sum to 1");
  const std::size_t d_a = b.front().size();
  for (const auto& v : b)
    if (v.size() != d_a) throw std::invalid_argument("mc_state: ragged b vectors");
  const std::size_t k = p.size();

  std::vector<cplx> amps(d_a * k * k, cplx{0.0, 0.0});
  int terms = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (p[i] <= 0.0) continue;
    ++terms;
    const double w = std::sqrt(p[i]);
    for (std::size_t a = 0; a < d_a; ++a)
      amps[(a * k + i) * k + i] += w * b[i][a];
  }
  Provenance prov;
  prov.family = "mc";
  prov.params["k"] = static_cast<double>(k);
  prov.known_tensor_rank = terms;  // orthonormal B and C components per term
  return PureState3({d_a, k, k}, std::move(amps), std::move(prov), true);
}

PureState3 schmidt_family(const std::vector<double>& p,
                          const std::vector<std::vector<cplx>>& a,
                          const std::vector<std::vector<cplx>>& b,
                          const std::vector<std::vector<cplx>>& c) {
  const std::size_t k = p.size();
  if (k == 0 || a.size() != k || b.size() != k || c.size() != k)
    throw std::invalid_argument("schmidt_family: inconsistent term count");
  const std::size_t d_a = a.front().size();
  const std::size_t d_b = b.front().size();
  const std::size_t d_c = c.front().size();
  std::vector<cplx> amps(d_a * d_b * d_c, cplx{0.0, 0.0});
  for (std::size_t t = 0; t < k; ++t) {
    if (a[t].size() != d_a || b[t].size() != d_b || c[t].size() != d_c)
      throw std::invalid_argument("schmidt_family: ragged vectors");
    if (p[t] < 0.0) throw std::invalid_argument("schmidt_family: negative weight");
    const double w = std::sqrt(p[t]);
    for (std::size_t i = 0; i < d_a; ++i)
      for (std::size_t j = 0; j < d_b; ++j)
        for (std::size_t l = 0; l < d_c; ++l)
          amps[(i * d_b + j) * d_c + l] += w * a[t][i] * b[t][j] * c[t][l];
  }
  if (vector_norm(amps) < 1e-12)
    throw std::invalid_argument("schmidt_family: terms cancel to the zero vector");
  Provenance prov;
  prov.family = "schmidt";
  prov.params["terms"] = static_cast<double>(k);
  prov.tensor_rank_upper_bound = static_cast<int>(k);
  return PureState3({d_a, d_b, d_c}, std::move(amps), std::move(prov), true);
}

PureState3 w_state() {
  std::vector<cplx> amps(8, cplx{0.0, 0.0});
  const double w = 1.0 / std::sqrt(3.0);
  amps[(0 * 2 + 0) * 2 + 1] = w;
  amps[(0 * 2 + 1) * 2 + 0] = w;
  amps[(1 * 2 + 0) * 2 + 0] = w;
  Provenance prov;
  prov.family = "w";
  prov.known_tensor_rank = 3;
  return PureState3({2, 2, 2}, std::move(amps), std::move(prov));
}

PureState3 rnn_boundary(std::size_t d) {
  if (d < 2) throw std::invalid_argument("rnn_boundary: d must be >= 2");
  const std::size_t dc = 2 * d;
  std::vector<cplx> amps(d * d * dc, cplx{0.0, 0.0});
  const double w = 1.0 / std::sqrt(2.0 * static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) amps[(j * d + j) * dc + j] = w;
  for (std::size_t j = 0; j + 1 < d; ++j) amps[(j * d + (j + 1)) * dc + (d + j)] = w;
  amps[((d - 1) * d + 0) * dc + (2 * d - 1)] = w;
  Provenance prov;
  prov.family = "rnn-boundary";
  prov.params["d"] = static_cast<double>(d);
  prov.known_tensor_rank = static_cast<int>(2 * d);
  return PureState3({d, d, dc}, std::move(amps), std::move(prov));
}

PureState3 rrr_symmetric(std::size_t r) {
  if (r < 3) throw std::invalid_argument("rrr_symmetric: r must be >= 3");
  std::vector<cplx> amps(r * r * r, cplx{0.0, 0.0});
  const double head = 1.0 / std::sqrt(2.0 * static_cast<double>(r));
  const std::size_t perms[6][3] = {{2, 0, 1}, {0, 1, 2}, {1, 2, 0},
                                   {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (const auto& s : perms) amps[(s[0] * r + s[1]) * r + s[2]] = head;
  const double tail = 1.0 / std::sqrt(static_cast<double>(r));
  for (std::size_t j = 3; j < r; ++j) amps[(j * r + j) * r + j] = tail;
  Provenance prov;
  prov.family = "rrr-symmetric";
  prov.params["r"] = static_cast<double>(r);
  // Symmetrized |312...> head is the rank-4 tensor of the x*y*z cubic; the
  // diagonal tail contributes one independent term per level.
  prov.known_tensor_rank = static_cast<int>(r) + 1;
  return PureState3({r, r, r}, std::move(amps), std::move(prov));
}

PureState3 psi_a(std::size_t r) {
  if (r < 2) throw std::invalid_argument("psi_a: r must be >= 2");
  std::vector<cplx> amps(r * r * r, cplx{0.0, 0.0});
  for (std::size_t i = 1; i < r; ++i) amps[(i * r + i) * r + i] += 1.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) amps[(i * r + j) * r + k] += 1.0;
  Provenance prov;
  prov.family = "psi-a";
  prov.params["r"] = static_cast<double>(r);
  prov.known_tensor_rank = static_cast<int>(r);  // r terms, local rank r
  return PureState3({r, r, r}, std::move(amps), std::move(prov), true);
}

PureState3 haar_random(std::array<std::size_t, 3> dims, std::uint64_t seed) {
  const std::size_t n = dims[0] * dims[1] * dims[2];
  if (n == 0) throw std::invalid_argument("haar_random: zero dimension");
  Rng rng(seed);
  std::vector<cplx> amps = rng.unit_vector(n);
  Provenance prov;
  prov.family = "haar";
  prov.params["seed"] = static_cast<double>(seed);
  return PureState3(dims, std::move(amps), std::move(prov));
}

PureState3 purify_separable_bc(std::size_t d_b, std::size_t d_c,
                               std::size_t k_terms, std::uint64_t seed,
                               const TolerancePolicy& tol) {
  if (k_terms == 0) throw std::invalid_argument("purify_separable_bc: k_terms >= 1");
  Rng rng(seed);
  const std::vector<double> p = rng.simplex(k_terms);
  ComplexMatrix rho_bc(d_b * d_c, d_b * d_c);
  for (std::size_t t = 0; t < k_terms; ++t) {
    const auto b = rng.unit_vector(d_b);
    const auto c = rng.unit_vector(d_c);
    for (std::size_t j = 0; j < d_b; ++j)
      for (std::size_t k = 0; k < d_c; ++k)
        for (std::size_t j2 = 0; j2 < d_b; ++j2)
          for (std::size_t k2 = 0; k2 < d_c; ++k2)
            rho_bc(j * d_c + k, j2 * d_c + k2) +=
                p[t] * b[j] * c[k] * std::conj(b[j2] * c[k2]);
  }
  const auto eig = hermitian_eigen(rho_bc);
  const int rank = numerical_rank(eig.eigenvalues, tol);
  if (rank == 0) throw std::runtime_error("purify_separable_bc: zero-rank state");

  // Purify in the eigenbasis: |psi> = sum_m sqrt(lambda_m) |m>_A |e_m>_BC,
  // so d_A equals rank(rho_BC) by construction.
  const std::size_t d_a = static_cast<std::size_t>(rank);
  const std::size_t n_bc = d_b * d_c;
  std::vector<cplx> amps(d_a * n_bc, cplx{0.0, 0.0});
  for (std::size_t m = 0; m < d_a; ++m) {
    const std::size_t src = n_bc - 1 - m;  // largest eigenvalues first
    const double lam = eig.eigenvalues[src];
    const double w = std::sqrt(std::max(lam, 0.0));
    for (std::size_t jk = 0; jk < n_bc; ++jk)
      amps[m * n_bc + jk] = w * eig.eigenvectors(jk, src);
  }
  Provenance prov;
  prov.family = "purified-sep-bc";
  prov.params["d_b"] = static_cast<double>(d_b);
  prov.params["d_c"] = static_cast<double>(d_c);
  prov.params["k"] = static_cast<double>(k_terms);
  prov.params["seed"] = static_cast<double>(seed);
  prov.separable_pair = Pair::BC;
  return PureState3({d_a, d_b, d_c}, std::move(amps), std::move(prov), true);
}

PureState3 upb_tiles_purification() {
  // The five tile vectors on C^3 (x) C^3.
  const double s2 = 1.0 / std::sqrt(2.0);
  const double t3 = 1.0 / 3.0;
  std::vector<std::vector<cplx>> tiles(5, std::vector<cplx>(9, cplx{0.0, 0.0}));
  auto at = [](std::size_t i, std::size_t j) { return i * 3 + j; };
  tiles[0][at(0, 0)] = s2;  tiles[0][at(0, 1)] = -s2;                 // |0>(|0>-|1>)
  tiles[1][at(0, 2)] = s2;  tiles[1][at(1, 2)] = -s2;                 // (|0>-|1>)|2>
  tiles[2][at(2, 1)] = s2;  tiles[2][at(2, 2)] = -s2;                 // |2>(|1>-|2>)
  tiles[3][at(1, 0)] = s2;  tiles[3][at(2, 0)] = -s2;                 // (|1>-|2>)|0>
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) tiles[4][at(i, j)] = t3;      // uniform

  ComplexMatrix rho = ComplexMatrix::identity(9);
  for (const auto& t : tiles)
    for (std::size_t r = 0; r < 9; ++r)
      for (std::size_t c = 0; c < 9; ++c) rho(r, c) -= t[r] * std::conj(t[c]);
  rho *= cplx{0.25, 0.0};

  const auto eig = hermitian_eigen(rho);
  std::vector<cplx> amps(9 * 4, cplx{0.0, 0.0});
  for (std::size_t m = 0; m < 4; ++m) {
    const std::size_t src = 8 - m;  // the four eigenvalues 1/4
    const double w = std::sqrt(std::max(eig.eigenvalues[src], 0.0));
    for (std::size_t ij = 0; ij < 9; ++ij)
      amps[ij * 4 + m] = w * eig.eigenvectors(ij, src);
  }
  Provenance prov;
  prov.family = "pnn-upb";
  return PureState3({3, 3, 4}, std::move(amps), std::move(prov), true);
}

PureState3 direct_sum_product(const PureState3& s1, const PureState3& s2,
                              double w) {
  if (!(w > 0.0 && w < 1.0))
    throw std::invalid_argument("direct_sum_product: weight must be in (0,1)");
  const auto& d1 = s1.dims();
  const auto& d2 = s2.dims();
  const std::array<std::size_t, 3> d{d1[0] + d2[0], d1[1] + d2[1], d1[2] + d2[2]};
  std::vector<cplx> amps(d[0] * d[1] * d[2], cplx{0.0, 0.0});
  const double w1 = std::sqrt(w);
  const double w2 = std::sqrt(1.0 - w);
  for (std::size_t i = 0; i < d1[0]; ++i)
    for (std::size_t j = 0; j < d1[1]; ++j)
      for (std::size_t k = 0; k < d1[2]; ++k)
        amps[(i * d[1] + j) * d[2] + k] = w1 * s1.amp(i, j, k);
  for (std::size_t i = 0; i < d2[0]; ++i)
    for (std::size_t j = 0; j < d2[1]; ++j)
      for (std::size_t k = 0; k < d2[2]; ++k)
        amps[((i + d1[0]) * d[1] + (j + d1[1])) * d[2] + (k + d1[2])] =
            w2 * s2.amp(i, j, k);

  Provenance prov;
  prov.family = "product(" + s1.provenance().family + "," +
                s2.provenance().family + ")";
  prov.params["w"] = w;
  auto ub = [](const Provenance& p) -> std::optional<int> {
    if (p.known_tensor_rank) return p.known_tensor_rank;
    return p.tensor_rank_upper_bound;
  };
  const auto u1 = ub(s1.provenance());
  const auto u2 = ub(s2.provenance());
  if (u1 && u2) prov.tensor_rank_upper_bound = *u1 + *u2;
  if (s1.provenance().separable_pair && s2.provenance().separable_pair &&
      *s1.provenance().separable_pair == *s2.provenance().separable_pair)
    prov.separable_pair = s1.provenance().separable_pair;
  return PureState3(d, std::move(amps), std::move(prov));
}

PureState3 slocc_filter(const PureState3& s, const ComplexMatrix& f_a,
                        const ComplexMatrix& f_b, const ComplexMatrix& f_c) {
  const ComplexMatrix* fs[3] = {&f_a, &f_b, &f_c};
  for (int p = 0; p < 3; ++p) {
    const ComplexMatrix& f = *fs[p];
    if (!f.square() || f.rows() != s.dim(p))
      throw std::invalid_argument("slocc_filter: filter shape mismatch");
    const auto eig = hermitian_eigen(f.adjoint() * f);
    const double smax = std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
    const double smin = std::sqrt(std::max(eig.eigenvalues.front(), 0.0));
    if (smax <= 0.0 || smin < 1e-8 * smax)
      throw std::invalid_argument("slocc_filter: singular filter");
  }
  const auto& d = s.dims();
  std::vector<cplx> amps(s.size(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d[0]; ++i)
    for (std::size_t j = 0; j < d[1]; ++j)
      for (std::size_t k = 0; k < d[2]; ++k) {
        const cplx z = s.amp(i, j, k);
        if (z == cplx{0.0, 0.0}) continue;
        for (std::size_t i2 = 0; i2 < d[0]; ++i2)
          for (std::size_t j2 = 0; j2 < d[1]; ++j2)
            for (std::size_t k2 = 0; k2 < d[2]; ++k2)
              amps[(i2 * d[1] + j2) * d[2] + k2] +=
                  f_a(i2, i) * f_b(j2, j) * f_c(k2, k) * z;
      }
  Provenance prov = s.provenance();
  prov.family = "slocc(" + s.provenance().family + ")";
  prov.separable_pair.reset();  // local filters do not preserve the certificate
  return PureState3(d, std::move(amps), std::move(prov), true);
}

PureState3 permute_parties(const PureState3& s, std::array<int, 3> order) {
  std::array<bool, 3> seen{false, false, false};
  for (int o : order) {
    if (o < 0 || o > 2) throw std::invalid_argument("permute_parties: bad order");
    seen[static_cast<std::size_t>(o)] = true;
  }
  if (!(seen[0] && seen[1] && seen[2]))
    throw std::invalid_argument("permute_parties: order is not a permutation");

  const std::array<std::size_t, 3> nd{s.dim(order[0]), s.dim(order[1]),
                                      s.dim(order[2])};
  std::array<int, 3> inv{};  // inv[old_party] = new_slot
  for (int slot = 0; slot < 3; ++slot) inv[static_cast<std::size_t>(order[slot])] = slot;

  std::vector<cplx> amps(s.size());
  const auto& d = s.dims();
  for (std::size_t i = 0; i < d[0]; ++i)
    for (std::size_t j = 0; j < d[1]; ++j)
      for (std::size_t k = 0; k < d[2]; ++k) {
        const std::size_t old_idx[3] = {i, j, k};
        std::size_t n[3];
        for (int party = 0; party < 3; ++party)
          n[inv[static_cast<std::size_t>(party)]] = old_idx[party];
        amps[(n[0] * nd[1] + n[1]) * nd[2] + n[2]] = s.amp(i, j, k);
      }

  Provenance prov = s.provenance();
  if (prov.separable_pair) {
    // A pair {X,Y} of old parties becomes the pair of their new slots.
    const std::array<std::array<int, 2>, 3> members{{{0, 1}, {1, 2}, {2, 0}}};
    const auto& m = members[static_cast<std::size_t>(*prov.separable_pair)];
    const int a = inv[static_cast<std::size_t>(m[0])];
    const int b = inv[static_cast<std::size_t>(m[1])];
    const int lo = std::min(a, b), hi = std::max(a, b);
    if (lo == 0 && hi == 1) prov.separable_pair = Pair::AB;
    else if (lo == 1 && hi == 2) prov.separable_pair = Pair::BC;
    else prov.separable_pair = Pair::CA;
  }
  return PureState3(nd, std::move(amps), std::move(prov));
}

BipartiteDensity reduced_density(const PureState3& s, Pair pair,
                                 const TolerancePolicy& tol) {
  const auto& d = s.dims();
  std::size_t dx, dy;
  ComplexMatrix rho;
  switch (pair) {
    case Pair::AB: {
      dx = d[0]; dy = d[1];
      rho = ComplexMatrix(dx * dy, dx * dy);
      for (std::size_t i = 0; i < d[0]; ++i)
        for (std::size_t j = 0; j < d[1]; ++j)
          for (std::size_t i2 = 0; i2 < d[0]; ++i2)
            for (std::size_t j2 = 0; j2 < d[1]; ++j2) {
              cplx sum = 0.0;
              for (std::size_t k = 0; k < d[2]; ++k)
                sum += s.amp(i, j, k) * std::conj(s.amp(i2, j2, k));
              rho(i * dy + j, i2 * dy + j2) = sum;
            }
      break;
    }
    case Pair::BC: {
      dx = d[1]; dy = d[2];
      rho = ComplexMatrix(dx * dy, dx * dy);
      for (std::size_t j = 0; j < d[1]; ++j)
        for (std::size_t k = 0; k < d[2]; ++k)
          for (std::size_t j2 = 0; j2 < d[1]; ++j2)
            for (std::size_t k2 = 0; k2 < d[2]; ++k2) {
              cplx sum = 0.0;
              for (std::size_t i = 0; i < d[0]; ++i)
                sum += s.amp(i, j, k) * std::conj(s.amp(i, j2, k2));
              rho(j * dy + k, j2 * dy + k2) = sum;
            }
      break;
    }
    case Pair::CA: {
      dx = d[2]; dy = d[0];
      rho = ComplexMatrix(dx * dy, dx * dy);
      for (std::size_t k = 0; k < d[2]; ++k)
        for (std::size_t i = 0; i < d[0]; ++i)
          for (std::size_t k2 = 0; k2 < d[2]; ++k2)
            for (std::size_t i2 = 0; i2 < d[0]; ++i2) {
              cplx sum = 0.0;
              for (std::size_t j = 0; j < d[1]; ++j)
                sum += s.amp(i, j, k) * std::conj(s.amp(i2, j, k2));
              rho(k * dy + i, k2 * dy + i2) = sum;
            }
      break;
    }
    default:
      throw std::invalid_argument("reduced_density: bad pair");
  }
  return BipartiteDensity(pair, dx, dy, std::move(rho), tol);
}

ComplexMatrix single_party_marginal(const PureState3& s, int party) {
  if (party < 0 || party > 2)
    throw std::invalid_argument("single_party_marginal: party must be 0..2");
  const auto& d = s.dims();
  const std::size_t n = d[static_cast<std::size_t>(party)];
  ComplexMatrix rho(n, n);
  for (std::size_t i = 0; i < d[0]; ++i)
    for (std::size_t j = 0; j < d[1]; ++j)
      for (std::size_t k = 0; k < d[2]; ++k) {
        const cplx z = s.amp(i, j, k);
        if (z == cplx{0.0, 0.0}) continue;
        const std::size_t idx[3] = {i, j, k};
        for (std::size_t m = 0; m < n; ++m) {
          std::size_t other[3] = {i, j, k};
          other[static_cast<std::size_t>(party)] = m;
          rho(idx[static_cast<std::size_t>(party)], m) +=
              z * std::conj(s.amp(other[0], other[1], other[2]));
        }
      }
  return rho;
}

}  // namespace sprn
