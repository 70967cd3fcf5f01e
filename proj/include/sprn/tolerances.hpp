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

#include <map>
#include <string>

namespace sprn {

/// Central numerical-tolerance policy. Every classifier decision reports its
/// margin, so the effect of these thresholds stays auditable. All values are
/// multiplied by `scale` (the CLI exposes it as --tol-scale).
struct TolerancePolicy {
  double scale = 1.0;

  /// How negative an eigenvalue of a unit-trace operator may be before it
  /// counts as genuinely negative (relative to the trace).
  double eig_negativity() const { return 1e-9 * scale; }

  /// Eigenvalues above rank_threshold() * lambda_max count toward the rank.
  double rank_threshold() const { return 1e-8 * scale; }

  /// Slack allowed on each prefix-sum comparison in majorization.
  double majorization_slack() const { return 1e-9 * scale; }

  /// Per-entry tolerance when comparing two sorted spectra for equality.
  double spectra_match() const { return 1e-8 * scale; }

  /// |conditional entropy| below this (in bits) is reported as zero.
  double entropy_zero() const { return 1e-7 * scale; }

  /// Frobenius-norm bound for the commutator battery of the
  /// maximally-correlated test (on unit-norm operators).
  double commutator() const { return 1e-8 * scale; }

  /// Margins within boundary_factor x tolerance are triaged as boundary
  /// cases (warned) rather than hard violations.
  double boundary_factor = 10.0;

  std::map<std::string, double> snapshot() const {
    return {
        {"eig_negativity", eig_negativity()},
        {"rank_threshold", rank_threshold()},
        {"majorization_slack", majorization_slack()},
        {"spectra_match", spectra_match()},
        {"entropy_zero", entropy_zero()},
        {"commutator", commutator()},
        {"boundary_factor", boundary_factor},
        {"scale", scale},
    };
  }
};

}  // namespace sprn
