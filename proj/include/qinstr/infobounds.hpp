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
 * Joint letter/outcome statistics of an ensemble measured by an
 * instrument, together with the mutual entropies built from them and the
 * relations those entropies satisfy.
 *
 * Naming: "i" refers to the input letters (alphabet A), "f" to the final
 * measurement outcomes (Omega). Matrices indexed [letter][outcome].
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinstr/entropy.hpp"
#include "qinstr/instrument.hpp"

namespace qinstr {

struct Tolerances {
    double bound = 1e-8;           // inequality slack floor
    double identity = 1e-9;        // equality residual
    double default_state = 1e-12;  // dependence on the fixed a posteriori fallback
};

enum class Relation { LessEq, Equal };

/// One checked relation lhs <= rhs (or lhs == rhs). slack = rhs - lhs.
/// Inequalities pass when slack >= -tol; equalities when |slack| <= tol.
/// An inequality whose rhs is +inf passes with slack +inf.
struct BoundRecord {
    std::string name;
    Relation relation = Relation::LessEq;
    ExtReal lhs;
    ExtReal rhs;
    ExtReal slack;
    bool pass = false;

    static BoundRecord less_eq(std::string name, ExtReal lhs, ExtReal rhs, double tol);
    static BoundRecord equal(std::string name, ExtReal lhs, ExtReal rhs, double tol);

    friend bool operator==(const BoundRecord &, const BoundRecord &) = default;
};

using BoundReport = std::vector<BoundRecord>;

bool all_pass(const BoundReport &r);

struct MeasurementStatistics {
    Labels letters;
    Labels outcomes;
    Eigen::MatrixXd joint;         // p_if(a, w)
    ClassicalDist input_marginal;  // P_i
    ClassicalDist output_marginal; // P_f
    Eigen::MatrixXd out_given_in;  // P_{f|i}(w|a), row a
    Eigen::MatrixXd in_given_out;  // P_{i|f}(a|w), column w; zero where P_f(w) is negligible
    std::vector<bool> outcome_live;  // P_f(w) > kZeroProbTol

    DensityMatrix a_priori;                                     // eta_i
    std::vector<std::vector<DensityMatrix>> letter_posteriors;  // rho_f^a(w), [a][w]
    std::vector<DensityMatrix> mean_posteriors;                 // rho_f(w)
    std::vector<DensityMatrix> post_letter_states;              // eta_f^a
    DensityMatrix post_state;                                   // eta_f

    std::size_t n_letters() const {
        return letters.size();
    }
    std::size_t n_outcomes() const {
        return outcomes.size();
    }
};

/// Joint statistics and all conditional states of (e, ins).
/// `default_state` is the a posteriori fallback for zero-probability outcomes.
MeasurementStatistics analyze(const Ensemble &e, const Instrument &ins,
                              const std::optional<DensityMatrix> &default_state = std::nullopt);

struct MixtureResiduals {
    double posterior_given_letter = 0.0;  // sum_w P_{f|i} rho_f^a(w) vs eta_f^a
    double posterior_given_outcome = 0.0; // sum_a P_{i|f} rho_f^a(w) vs rho_f(w)
    double mean_posterior = 0.0;          // sum_w P_f rho_f(w) vs eta_f
    double joint_posterior = 0.0;         // sum_aw p_if rho_f^a(w) vs eta_f

    double max() const;
};

/// Max entrywise residuals of the four mixture identities of the statistics.
MixtureResiduals mixture_residuals(const MeasurementStatistics &ms);

/// S_c(p_if | P_i (x) P_f)
ExtReal classical_mutual_info(const MeasurementStatistics &ms);

/// H(P_i) + H(P_f) - H(p_if), the entropy-decomposition route to I_c.
double classical_mutual_info_from_entropies(const MeasurementStatistics &ms);

struct EntropyPanel {
    ExtReal chi_initial;         // chi{P_i, rho_i}
    ExtReal chi_post;            // chi{P_i, eta_f^.}
    ExtReal chi_out;             // chi{P_f, rho_f}
    ExtReal chi_joint;           // chi{p_if, rho_f^.}
    ExtReal mean_chi_given_out;  // sum_w P_f chi{P_{i|f}(.|w), rho_f^.(w)}
    ExtReal mean_chi_given_in;   // sum_a P_i chi{P_{f|i}(.|a), rho_f^a}
    ExtReal classical_info;      // I_c
    ExtReal tripartite;          // evaluated directly as a mixed relative entropy
};

/// chi_initial needs the letter states themselves, hence the ensemble.
EntropyPanel entropy_panel(const MeasurementStatistics &ms, const Ensemble &e);

/// Both chi decompositions of chi_joint plus every chain-rule form of the
/// tripartite mutual entropy. Throws InfiniteQuantity on a +inf operand.
BoundReport check_identities(const EntropyPanel &p, const Tolerances &tol = {});

/// Upper bounds on I_c (Holevo and SWW in both forms) plus the lower bound
/// on the retained posterior information.
BoundReport check_bounds(const EntropyPanel &p, const Tolerances &tol = {});

/// S_q(eta) - sum_w P_eta(w) S_q(pi_eta(w))
double quantum_info_gain(const Instrument &ins, const DensityMatrix &eta);

struct GroenewoldLindbladResult {
    bool purity_preserving = false;
    double min_pure_input_purity = 1.0;      // worst a posteriori purity on pure inputs
    std::optional<double> min_info_gain;     // set when purity preserving
    double min_iq_inequality_slack = 0.0;
    BoundReport report;
};

/// Classifies `ins` as purity preserving on `trials` Haar-random pure inputs;
/// when it is, checks I_q >= 0 on `trials` random mixed inputs. Always checks
/// I_q{eta} >= I_c + sum_a P(a) I_q{rho(a)} on `trials` random ensembles.
GroenewoldLindbladResult groenewold_lindblad_check(const Instrument &ins, std::size_t trials, std::uint64_t seed,
                                                   const Tolerances &tol = {});

/// Families of operators on H1 (x) H2 built from input letters and their
/// post-measurement images. Per-outcome entries of dead outcomes hold the
/// maximally mixed state and carry zero weight everywhere.
struct CompoundStates {
    Index d1 = 0;
    Index d2 = 0;
    std::vector<DensityMatrix> eps_if;  // per outcome, on H1 (x) H2
    std::vector<DensityMatrix> eps_i;   // Tr_2 eps_if
    std::vector<DensityMatrix> eps_f;   // Tr_1 eps_if
    DensityMatrix eta_if;               // sum_w P_f eps_if(w)
    std::vector<DensityMatrix> tau_f;   // per letter, sum_w P_{f|i} rho_f(w)
    DensityMatrix gamma_if;             // sum_w P_f eps_i(w) (x) rho_f(w)
};

CompoundStates compound_states(const MeasurementStatistics &ms, const Ensemble &e);

/// Consistency identities of the compound states as equality records.
BoundReport compound_consistency(const CompoundStates &cs, const MeasurementStatistics &ms, const Ensemble &e,
                                 const Tolerances &tol = {});

/// Both lower-bound chains on I_c, one record per link.
BoundReport scutaru_chains(const MeasurementStatistics &ms, const Ensemble &e, const Tolerances &tol = {});

/// Merges outcomes `first` and `second` of `ins` into one outcome.
Instrument coarse_grain(const Instrument &ins, std::size_t first, std::size_t second);

}  // namespace qinstr
