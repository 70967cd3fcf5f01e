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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sprn/complex_matrix.hpp"
#include "sprn/tolerances.hpp"

namespace sprn {

/// The three bipartite reductions of a tripartite state, in the fixed slot
/// order used throughout: (AB, BC, CA).
enum class Pair { AB, BC, CA };

const char* pair_name(Pair p);
std::array<Pair, 3> all_pairs();
/// The two pairs other than `p`, i.e. the ones sharing the complementary
/// party with it.
std::array<Pair, 2> sibling_pairs(Pair p);

/// Construction metadata carried by a state: which family built it, its
/// parameters, and whatever tensor-rank or separability facts the
/// construction certifies.
struct Provenance {
  std::string family;
  std::map<std::string, double> params;
  /// Exact tensor rank certified by the construction.
  std::optional<int> known_tensor_rank;
  /// Upper bound when only the number of product terms is known.
  std::optional<int> tensor_rank_upper_bound;
  /// Reduced pair that is separable by construction (with an explicit
  /// product decomposition at build time).
  std::optional<Pair> separable_pair;
};

/// Normalized tripartite pure state. Amplitudes are stored flat in index
/// order i * d_B * d_C + j * d_C + k with 0-based (i, j, k); party labels in
/// documentation are 1-based, and this accessor is the only place the two
/// conventions meet.
class PureState3 {
 public:
  PureState3(std::array<std::size_t, 3> dims, std::vector<cplx> amps,
             Provenance prov = {}, bool renormalize = false);

  const std::array<std::size_t, 3>& dims() const { return dims_; }
  std::size_t dim(int party) const { return dims_[static_cast<std::size_t>(party)]; }
  std::size_t size() const { return amps_.size(); }

  cplx amp(std::size_t i, std::size_t j, std::size_t k) const {
    return amps_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  const Provenance& provenance() const { return prov_; }
  Provenance& provenance() { return prov_; }

  double norm() const { return vector_norm(amps_); }

 private:
  std::array<std::size_t, 3> dims_;
  std::vector<cplx> amps_;
  Provenance prov_;
};

/// Hermitian, PSD, unit-trace operator on a declared bipartite split.
/// Construction symmetrizes and validates the invariants.
struct BipartiteDensity {
  Pair pair;
  std::size_t dim_x = 0;
  std::size_t dim_y = 0;
  ComplexMatrix mat;

  BipartiteDensity(Pair p, std::size_t dx, std::size_t dy, ComplexMatrix m,
                   const TolerancePolicy& tol = {});

  ComplexMatrix marginal_x() const;  // trace over Y
  ComplexMatrix marginal_y() const;  // trace over X
};

// --- State families -------------------------------------------------------

/// (1/sqrt(d)) sum_i |i,i,i>. Tensor rank d.
PureState3 ghz(std::size_t d);

/// sum_i sqrt(p_i) |b_i, i, i> with unit vectors b_i in H_A. The BC
/// reduction is maximally correlated; it is entangled exactly when some
/// pair of b's is non-orthogonal.
PureState3 mc_state(const std::vector<double>& p,
                    const std::vector<std::vector<cplx>>& b);

/// Normalized sum_i sqrt(p_i) |a_i, b_i, c_i| with arbitrary unit vectors.
PureState3 schmidt_family(const std::vector<double>& p,
                          const std::vector<std::vector<cplx>>& a,
                          const std::vector<std::vector<cplx>>& b,
                          const std::vector<std::vector<cplx>>& c);

/// (|1,1,2> + |1,2,1> + |2,1,1>)/sqrt(3) on qubits. Tensor rank 3.
PureState3 w_state();

/// (1/sqrt(2d)) (sum_{j=1..d} |j,j,j> + sum_{j=1..d-1} |j,j+1,d+j> +
/// |d,1,2d>), dims (d, d, 2d). All 2d product terms carry orthonormal
/// C-components, so the tensor rank is exactly 2d and the AB reduction is
/// diagonal in the product basis.
PureState3 rnn_boundary(std::size_t d);

/// (1/sqrt(2r)) (|312>+|123>+|231>+|213>+|132>+|321>) +
/// (1/sqrt(r)) sum_{j=4..r} |jjj>, dims (r,r,r), r >= 3. The symmetrized
/// head has tensor rank 4, the diagonal tail adds r-3 terms: rank r+1.
PureState3 rrr_symmetric(std::size_t r);

/// Normalized sum_{i=2..r} |iii> + (|1>+|2>)^(x3), dims (r,r,r). Expressed
/// with r product terms and local rank r, so tensor rank is exactly r.
PureState3 psi_a(std::size_t r);

/// Amplitudes i.i.d. standard complex Gaussian, normalized. Deterministic
/// per seed.
PureState3 haar_random(std::array<std::size_t, 3> dims, std::uint64_t seed);

/// Draws rho_BC = sum_i p_i |b_i><b_i| x |c_i><c_i| with k random terms and
/// returns its purification in the eigenbasis of rho_BC, with d_A set to the
/// numerical rank. The BC pair carries a separable-decomposition certificate.
PureState3 purify_separable_bc(std::size_t d_b, std::size_t d_c,
                               std::size_t k_terms, std::uint64_t seed,
                               const TolerancePolicy& tol = {});

/// Purification of the 3x3 tiles-UPB state (I - sum of the five tile
/// projectors)/4: the AB reduction is PPT yet entangled, with local ranks
/// (3, 3) and d_C = 4. Dims (3, 3, 4).
PureState3 upb_tiles_purification();

/// Direct sum of two states on block-disjoint local spaces, weighted
/// sqrt(w) / sqrt(1-w). Dims add componentwise.
PureState3 direct_sum_product(const PureState3& s1, const PureState3& s2,
                              double w = 0.5);

/// Normalized (F_A (x) F_B (x) F_C) |psi>. Each filter must be square with
/// sigma_min >= 1e-8 * sigma_max. Tensor-rank provenance survives (invertible
/// local filters preserve tensor rank); separability certificates do not.
PureState3 slocc_filter(const PureState3& s, const ComplexMatrix& f_a,
                        const ComplexMatrix& f_b, const ComplexMatrix& f_c);

/// Relabel parties: order[new_slot] = old_party (0=A, 1=B, 2=C).
PureState3 permute_parties(const PureState3& s, std::array<int, 3> order);

/// Reduced density operator of one pair (trace over the third party).
BipartiteDensity reduced_density(const PureState3& s, Pair pair,
                                 const TolerancePolicy& tol = {});

/// Single-party marginal (party 0=A, 1=B, 2=C).
ComplexMatrix single_party_marginal(const PureState3& s, int party);

}  // namespace sprn
