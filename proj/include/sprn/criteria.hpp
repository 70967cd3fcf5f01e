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

#include <optional>
#include <string>
#include <vector>

#include "sprn/linalg_ops.hpp"
#include "sprn/states.hpp"
#include "sprn/tolerances.hpp"

namespace sprn::criteria {

struct PptResult {
  bool satisfied = false;
  double min_eigenvalue = 0.0;  // of the partial transpose
};

struct ReductionResult {
  bool satisfied = false;
  double margin_x = 0.0;  // min eig of rho_X (x) I - rho
  double margin_y = 0.0;  // min eig of I (x) rho_Y - rho
};

struct CondEntropyResult {
  double h_y_given_x = 0.0;  // H(rho) - H(rho_X), bits
  double h_x_given_y = 0.0;  // H(rho) - H(rho_Y), bits
};

struct SpectraEqualResult {
  bool x_side = false;  // spec(rho_X) == spec(rho), zero-padded
  bool y_side = false;
};

enum class Verdict { Separable, Entangled, Undecided };
enum class SepRule { None, NptWitness, RankRule, Theorem1Rule, ProvenanceCertificate };

const char* verdict_name(Verdict v);
const char* sep_rule_name(SepRule r);

struct SeparabilityResult {
  Verdict verdict = Verdict::Undecided;
  SepRule rule = SepRule::None;
  std::string note;
};

/// What the surrounding tripartite state contributes to a pair's verdict:
/// whether some sibling reduced state (sharing the complementary party) is
/// PPT, and whether construction provenance certifies this pair separable.
struct Context {
  bool sibling_ppt = false;
  bool certified_separable = false;
};

/// Full battery outcome for one bipartite reduced state, margins included.
struct CriteriaReport {
  Pair pair = Pair::AB;
  std::size_t dim_x = 0, dim_y = 0;
  PptResult ppt;
  ReductionResult reduction;
  MajRelation maj_x = MajRelation::Incomparable;  // spec(rho_X) vs spec(rho)
  MajRelation maj_y = MajRelation::Incomparable;
  CondEntropyResult cond_entropy;
  SpectraEqualResult spectra_equal;   // the (5') checks
  bool entropy_equal_6prime = false;  // |H(Y|X)| below entropy_zero
  SeparabilityResult separability;

  bool majorization_holds() const {
    return (maj_x == MajRelation::LeftMajorizes || maj_x == MajRelation::Equal) &&
           (maj_y == MajRelation::LeftMajorizes || maj_y == MajRelation::Equal);
  }
  bool cond_entropy_nonneg(double tol) const {
    return cond_entropy.h_y_given_x >= -tol && cond_entropy.h_x_given_y >= -tol;
  }
};

PptResult check_ppt(const BipartiteDensity& rho, const TolerancePolicy& tol = {});
ReductionResult check_reduction(const BipartiteDensity& rho,
                                const TolerancePolicy& tol = {});
std::pair<MajRelation, MajRelation> check_majorization(
    const BipartiteDensity& rho, const TolerancePolicy& tol = {});
CondEntropyResult check_cond_entropy(const BipartiteDensity& rho,
                                     const TolerancePolicy& tol = {});
SpectraEqualResult check_spectra_equal(const BipartiteDensity& rho,
                                       const TolerancePolicy& tol = {});

/// Decision ladder:
///  (i)   PPT fails            -> Entangled (NPT witness)
///  (ii)  rank <= max(dx, dy)  -> Separable (rank rule), unless any
///        eigenvalue sits within a factor 10 of the rank threshold, which
///        demotes the rule (verdict falls through)
///  (iii) PPT and a sibling reduced state is PPT -> Separable
///  (iv)  construction certificate               -> Separable
///  (v)   otherwise Undecided
/// A certified-separable input that fails PPT is reported Undecided (the
/// two sources contradict; neither is trusted).
SeparabilityResult decide_separability(const BipartiteDensity& rho,
                                       const Context& ctx = {},
                                       const TolerancePolicy& tol = {});

/// Runs the whole battery with the ladder wired per `ctx`.
CriteriaReport evaluate_criteria(const BipartiteDensity& rho,
                                 const Context& ctx = {},
                                 const TolerancePolicy& tol = {});

/// Implication-chain audit over the computed booleans. Inversions whose
/// deciding margin is within boundary_factor x tolerance land in `boundary`
/// instead of `violations`.
struct AuditResult {
  std::vector<std::string> violations;
  std::vector<std::string> boundary;
};
AuditResult hierarchy_audit(const CriteriaReport& report,
                            const TolerancePolicy& tol = {});

/// True iff rho has the form sum_{ij} c_ij |i,i><j,j| in some product of
/// local orthonormal bases. Implemented by reshaping the weighted
/// eigenvectors into d_x x d_y matrices, checking that all their pairwise
/// left/right products commute, and verifying joint diagonality in the
/// common singular bases.
bool maximally_correlated_test(const BipartiteDensity& rho,
                               const TolerancePolicy& tol = {});

}  // namespace sprn::criteria
