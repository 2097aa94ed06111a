// Copyright 2026 The qinstr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The dual construction that swaps the roles of ensemble and measurement.
 *
 * From an ensemble {P(a), rho(a)} with invertible barycenter eta we build the
 * instrument J with one Kraus operator per letter,
 *
 *     M(a) = sqrt(P(a)) rho(a)^{1/2} eta^{-1/2},
 *
 * and, for any measurement E on the same space, the dual ensemble
 *
 *     sigma(w) = eta^{1/2} E(w) eta^{1/2} / P_f(w).
 *
 * Measuring {P_f, sigma} with J reproduces the joint letter/outcome table of
 * measuring {P, rho} with E, which yields two upper bounds on I_c.
 */

#pragma once

#include "qinstr/infobounds.hpp"

namespace qinstr {

inline constexpr double kInvertibilityTol = 1e-9;

struct HallInstrument {
    Instrument base;  // outcomes are the ensemble letters
    Ensemble source;
};

/// Throws SingularAprioriState when the smallest eigenvalue of the barycenter
/// is not above `invertibility_tol`.
HallInstrument build_hall_instrument(const Ensemble &e, double invertibility_tol = kInvertibilityTol);

AposterioriFamily hall_a_posteriori(const HallInstrument &h, const DensityMatrix &rho);

/// Only outcomes with P_f(w) above kZeroProbTol appear.
struct DualEnsemble {
    ClassicalDist probs;
    std::vector<DensityMatrix> states;

    const Labels &labels() const {
        return probs.labels();
    }
    Ensemble as_ensemble() const;
};

DualEnsemble dual_ensemble(const Ensemble &e, const Instrument &ins);

/// Checks that the dual ensemble reproduces the conditional table and I_c.
/// Its barycenter must also equal the a priori state.
BoundReport verify_duality(const Ensemble &e, const Instrument &ins, const Tolerances &tol = {});

/// I_c <= sum_w P_f(w) S(sigma(w) | eta). The record's rhs is the bound.
BoundRecord hall_bound(const Ensemble &e, const Instrument &ins, const Tolerances &tol = {});

struct NewBoundResult {
    BoundReport report;
    double d_term = 0.0;  // sum_w P_f(w) I_q{sigma(w); J}
    double chi = 0.0;     // chi{P, rho}
    double value = 0.0;   // chi - d_term
    double min_sigma_gain = 0.0;
};

/// I_c <= chi{P, rho} - D. D is computed from the closed form of the
/// a posteriori states of J on sigma(w), never by running J numerically.
NewBoundResult new_bound(const Ensemble &e, const Instrument &ins, const Tolerances &tol = {});

/// D evaluated generically: quantum_info_gain(J, sigma(w)) for each dual state.
double d_term_generic(const Ensemble &e, const Instrument &ins);

}  // namespace qinstr
