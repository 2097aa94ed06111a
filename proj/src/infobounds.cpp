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

#include "qinstr/infobounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qinstr/error.hpp"
#include "qinstr/random.hpp"

namespace qinstr {

BoundRecord BoundRecord::less_eq(std::string name, ExtReal lhs, ExtReal rhs, double tol) {
    BoundRecord r{std::move(name), Relation::LessEq, lhs, rhs, 0.0, false};
    const double inf = std::numeric_limits<double>::infinity();
    if (rhs.value() == inf) {
        r.slack = ExtReal::infinity();
        r.pass = true;
    } else if (lhs.value() == inf) {
        r.slack = -inf;
        r.pass = false;
    } else {
        r.slack = rhs.value() - lhs.value();
        r.pass = r.slack.value() >= -tol;
    }
    return r;
}

BoundRecord BoundRecord::equal(std::string name, ExtReal lhs, ExtReal rhs, double tol) {
    if (!lhs.is_finite() || !rhs.is_finite()) {
        throw Error(ErrorCode::InfiniteQuantity, "equality check '" + name + "' has an infinite operand");
    }
    BoundRecord r{std::move(name), Relation::Equal, lhs, rhs, rhs.value() - lhs.value(), false};
    r.pass = std::abs(r.slack.value()) <= tol;
    return r;
}

bool all_pass(const BoundReport &r) {
    return std::all_of(r.begin(), r.end(), [](const BoundRecord &b) { return b.pass; });
}

MeasurementStatistics analyze(const Ensemble &e, const Instrument &ins,
                              const std::optional<DensityMatrix> &default_state) {
    if (e.dim() != ins.dim_in()) {
        throw Error(ErrorCode::DimensionMismatch, "ensemble lives in dimension " + std::to_string(e.dim()) +
                                                      ", instrument expects " + std::to_string(ins.dim_in()));
    }
    const std::size_t na = e.size();
    const std::size_t nw = ins.size();

    DensityMatrix eta_i = a_priori_state(e);

    Eigen::MatrixXd out_given_in(na, nw);
    Eigen::MatrixXd joint(na, nw);
    std::vector<std::vector<DensityMatrix>> letter_posteriors;
    std::vector<DensityMatrix> post_letter_states;
    for (std::size_t a = 0; a < na; ++a) {
        AposterioriFamily fam = a_posteriori(ins, e.states()[a], default_state);
        for (std::size_t w = 0; w < nw; ++w) {
            out_given_in(a, w) = fam.probs[w];
            joint(a, w) = e.probs()[a] * fam.probs[w];
        }
        letter_posteriors.push_back(std::move(fam.states));
        post_letter_states.push_back(total_channel(ins, e.states()[a]));
    }

    std::vector<double> pf(nw, 0.0);
    for (std::size_t w = 0; w < nw; ++w) {
        pf[w] = joint.col(w).sum();
    }
    ClassicalDist output_marginal = ClassicalDist::normalized(ins.outcomes(), pf, kInstrumentNormTol);

    Eigen::MatrixXd in_given_out = Eigen::MatrixXd::Zero(na, nw);
    std::vector<bool> live(nw, false);
    for (std::size_t w = 0; w < nw; ++w) {
        live[w] = output_marginal[w] > kZeroProbTol;
        if (live[w]) {
            in_given_out.col(w) = joint.col(w) / joint.col(w).sum();
        }
    }

    AposterioriFamily mean_fam = a_posteriori(ins, eta_i, default_state);
    DensityMatrix eta_f = total_channel(ins, eta_i);

    return MeasurementStatistics{e.letters(),
                                 ins.outcomes(),
                                 std::move(joint),
                                 e.distribution(),
                                 std::move(output_marginal),
                                 std::move(out_given_in),
                                 std::move(in_given_out),
                                 std::move(live),
                                 std::move(eta_i),
                                 std::move(letter_posteriors),
                                 std::move(mean_fam.states),
                                 std::move(post_letter_states),
                                 std::move(eta_f)};
}

double MixtureResiduals::max() const {
    return std::max({posterior_given_letter, posterior_given_outcome, mean_posterior, joint_posterior});
}

MixtureResiduals mixture_residuals(const MeasurementStatistics &ms) {
    const Index d2 = ms.post_state.dim();
    MixtureResiduals r;
    CMatrix joint_sum = CMatrix::Zero(d2, d2);
    CMatrix mean_sum = CMatrix::Zero(d2, d2);
    for (std::size_t a = 0; a < ms.n_letters(); ++a) {
        CMatrix sum = CMatrix::Zero(d2, d2);
        for (std::size_t w = 0; w < ms.n_outcomes(); ++w) {
            sum += ms.out_given_in(a, w) * ms.letter_posteriors[a][w].matrix();
            joint_sum += ms.joint(a, w) * ms.letter_posteriors[a][w].matrix();
        }
        r.posterior_given_letter = std::max(r.posterior_given_letter, max_abs_diff(sum, ms.post_letter_states[a].matrix()));
    }
    for (std::size_t w = 0; w < ms.n_outcomes(); ++w) {
        mean_sum += ms.output_marginal[w] * ms.mean_posteriors[w].matrix();
        if (!ms.outcome_live[w]) {
            continue;
        }
        CMatrix sum = CMatrix::Zero(d2, d2);
        for (std::size_t a = 0; a < ms.n_letters(); ++a) {
            sum += ms.in_given_out(a, w) * ms.letter_posteriors[a][w].matrix();
        }
        r.posterior_given_outcome = std::max(r.posterior_given_outcome, max_abs_diff(sum, ms.mean_posteriors[w].matrix()));
    }
    r.mean_posterior = max_abs_diff(mean_sum, ms.post_state.matrix());
    r.joint_posterior = max_abs_diff(joint_sum, ms.post_state.matrix());
    return r;
}

ExtReal classical_mutual_info(const MeasurementStatistics &ms) {
    Labels pairs;
    std::vector<double> joint;
    std::vector<double> product;
    for (std::size_t a = 0; a < ms.n_letters(); ++a) {
        for (std::size_t w = 0; w < ms.n_outcomes(); ++w) {
            pairs.push_back(ms.letters[a] + "|" + ms.outcomes[w]);
            joint.push_back(ms.joint(a, w));
            product.push_back(ms.input_marginal[a] * ms.output_marginal[w]);
        }
    }
    return c_rel_entropy(ClassicalDist::normalized(pairs, joint, kInstrumentNormTol),
                         ClassicalDist::normalized(pairs, product, kInstrumentNormTol));
}

namespace {

double shannon(const std::vector<double> &p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            h -= x * std::log(x);
        }
    }
    return h;
}

// Family over the live outcomes only, weights renormalized.
StateFamily live_outcome_family(const MeasurementStatistics &ms, const std::vector<DensityMatrix> &per_outcome) {
    Labels labels;
    std::vector<double> weights;
    std::vector<DensityMatrix> members;
    for (std::size_t w = 0; w < ms.n_outcomes(); ++w) {
        if (ms.outcome_live[w]) {
            labels.push_back(ms.outcomes[w]);
            weights.push_back(ms.output_marginal[w]);
            members.push_back(per_outcome[w]);
        }
    }
    return StateFamily(ClassicalDist::normalized(labels, weights, kInstrumentNormTol), members);
}

}  // namespace

double classical_mutual_info_from_entropies(const MeasurementStatistics &ms) {
    std::vector<double> joint(ms.joint.data(), ms.joint.data() + ms.joint.size());
    return shannon(ms.input_marginal.probs()) + shannon(ms.output_marginal.probs()) - shannon(joint);
}

EntropyPanel entropy_panel(const MeasurementStatistics &ms, const Ensemble &e) {
    if (e.letters() != ms.letters) {
        throw Error(ErrorCode::LabelMismatch, "ensemble does not match the measurement statistics");
    }
    const std::size_t na = ms.n_letters();
    const std::size_t nw = ms.n_outcomes();
    EntropyPanel p;

    p.chi_initial = chi_quantity(StateFamily(ms.input_marginal, e.states()));
    p.chi_post = chi_quantity(StateFamily(ms.input_marginal, ms.post_letter_states));
    p.chi_out = chi_quantity(live_outcome_family(ms, ms.mean_posteriors));

    Labels pairs;
    std::vector<double> joint;
    std::vector<double> product;
    std::vector<DensityMatrix> posteriors;
    std::vector<DensityMatrix> post_states;
    for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t w = 0; w < nw; ++w) {
            pairs.push_back(ms.letters[a] + "|" + ms.outcomes[w]);
            joint.push_back(ms.joint(a, w));
            product.push_back(ms.input_marginal[a] * ms.output_marginal[w]);
            posteriors.push_back(ms.letter_posteriors[a][w]);
            post_states.push_back(ms.post_state);
        }
    }
    const StateFamily joint_family(ClassicalDist::normalized(pairs, joint, kInstrumentNormTol), posteriors);
    p.chi_joint = chi_quantity(joint_family);

    ExtReal given_out = 0.0;
    for (std::size_t w = 0; w < nw; ++w) {
        if (!ms.outcome_live[w]) {
            continue;
        }
        std::vector<double> cond(na);
        std::vector<DensityMatrix> members;
        for (std::size_t a = 0; a < na; ++a) {
            cond[a] = ms.in_given_out(a, w);
            members.push_back(ms.letter_posteriors[a][w]);
        }
        const StateFamily f(ClassicalDist::normalized(ms.letters, cond, kInstrumentNormTol), members);
        given_out += scale(ms.output_marginal[w], chi_quantity(f));
    }
    p.mean_chi_given_out = given_out;

    ExtReal given_in = 0.0;
    for (std::size_t a = 0; a < na; ++a) {
        std::vector<double> cond(nw);
        for (std::size_t w = 0; w < nw; ++w) {
            cond[w] = ms.out_given_in(a, w);
        }
        const StateFamily f(ClassicalDist::normalized(ms.outcomes, cond, kInstrumentNormTol), ms.letter_posteriors[a]);
        given_in += scale(ms.input_marginal[a], chi_quantity(f));
    }
    p.mean_chi_given_in = given_in;

    p.classical_info = classical_mutual_info(ms);
    p.tripartite = mixed_rel_entropy(
        joint_family, StateFamily(ClassicalDist::normalized(pairs, product, kInstrumentNormTol), post_states));
    return p;
}

BoundReport check_identities(const EntropyPanel &p, const Tolerances &tol) {
    for (ExtReal x : {p.chi_initial, p.chi_post, p.chi_out, p.chi_joint, p.mean_chi_given_out, p.mean_chi_given_in,
                      p.classical_info, p.tripartite}) {
        if (!x.is_finite()) {
            throw Error(ErrorCode::InfiniteQuantity, "entropy panel holds an infinite entry");
        }
    }
    const double t = tol.identity;
    BoundReport r;
    r.push_back(BoundRecord::equal("chi_joint_via_outcomes", p.chi_joint, p.chi_out + p.mean_chi_given_out, t));
    r.push_back(BoundRecord::equal("chi_joint_via_letters", p.chi_joint, p.chi_post + p.mean_chi_given_in, t));
    r.push_back(BoundRecord::equal("tripartite_chain_outcomes", p.tripartite,
                                   p.classical_info + p.mean_chi_given_out + p.chi_out, t));
    r.push_back(
        BoundRecord::equal("tripartite_chain_letters", p.tripartite, p.classical_info + p.mean_chi_given_in + p.chi_post, t));
    r.push_back(BoundRecord::equal("tripartite_chain_joint", p.tripartite, p.chi_joint + p.classical_info, t));
    return r;
}

BoundReport check_bounds(const EntropyPanel &p, const Tolerances &tol) {
    const double t = tol.bound;
    BoundReport r;
    r.push_back(BoundRecord::less_eq("holevo", p.classical_info, p.chi_initial, t));
    r.push_back(BoundRecord::less_eq("sww", p.classical_info + p.mean_chi_given_out, p.chi_initial, t));
    r.push_back(BoundRecord::less_eq("sww_symmetric", p.classical_info,
                                     p.chi_initial.value() + p.chi_out.value() - p.chi_joint.value(), t));
    r.push_back(BoundRecord::less_eq("posterior_lower_bound", p.chi_post, p.classical_info + p.mean_chi_given_out, t));
    return r;
}

double quantum_info_gain(const Instrument &ins, const DensityMatrix &eta) {
    const AposterioriFamily fam = a_posteriori(ins, eta);
    double mean = 0.0;
    for (std::size_t w = 0; w < ins.size(); ++w) {
        if (!fam.from_default[w]) {
            mean += fam.probs[w] * vn_entropy(fam.states[w]);
        }
    }
    return vn_entropy(eta) - mean;
}

GroenewoldLindbladResult groenewold_lindblad_check(const Instrument &ins, std::size_t trials, std::uint64_t seed,
                                                   const Tolerances &tol) {
    Rng rng(seed);
    const Index d1 = ins.dim_in();
    GroenewoldLindbladResult out;

    for (std::size_t t = 0; t < trials; ++t) {
        const AposterioriFamily fam = a_posteriori(ins, random_pure(rng, d1));
        for (std::size_t w = 0; w < ins.size(); ++w) {
            if (!fam.from_default[w]) {
                out.min_pure_input_purity = std::min(out.min_pure_input_purity, fam.states[w].purity());
            }
        }
    }
    out.purity_preserving = out.min_pure_input_purity >= 1.0 - tol.bound;

    if (out.purity_preserving) {
        double min_gain = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < trials; ++t) {
            min_gain = std::min(min_gain, quantum_info_gain(ins, random_density(rng, d1)));
        }
        if (trials > 0) {
            out.min_info_gain = min_gain;
            out.report.push_back(BoundRecord::less_eq("info_gain_nonnegative", 0.0, min_gain, tol.bound));
        }
    }

    std::optional<BoundRecord> worst;
    for (std::size_t t = 0; t < trials; ++t) {
        const Ensemble e = random_ensemble(rng, d1, 2 + t % 3);
        const MeasurementStatistics ms = analyze(e, ins);
        double letter_gain = 0.0;
        for (std::size_t a = 0; a < e.size(); ++a) {
            letter_gain += e.probs()[a] * quantum_info_gain(ins, e.states()[a]);
        }
        const double lhs = classical_mutual_info(ms).value() + letter_gain;
        const double rhs = quantum_info_gain(ins, ms.a_priori);
        BoundRecord rec = BoundRecord::less_eq("info_gain_demixture", lhs, rhs, tol.bound);
        if (!worst || rec.slack < worst->slack) {
            worst = std::move(rec);
        }
    }
    if (worst) {
        out.min_iq_inequality_slack = worst->slack.value();
        out.report.push_back(std::move(*worst));
    }
    return out;
}

Instrument coarse_grain(const Instrument &ins, std::size_t first, std::size_t second) {
    if (first >= ins.size() || second >= ins.size() || first == second) {
        throw Error(ErrorCode::UnknownOutcome, "coarse_grain needs two distinct valid outcomes");
    }
    Labels labels;
    std::vector<KrausMap> maps;
    for (std::size_t w = 0; w < ins.size(); ++w) {
        if (w == second) {
            continue;
        }
        KrausMap m = ins.maps()[w];
        std::string label = ins.outcomes()[w];
        if (w == first) {
            const auto &extra = ins.maps()[second].kraus;
            m.kraus.insert(m.kraus.end(), extra.begin(), extra.end());
            label += "+" + ins.outcomes()[second];
        }
        labels.push_back(std::move(label));
        maps.push_back(std::move(m));
    }
    return Instrument(std::move(labels), std::move(maps));
}

}  // namespace qinstr
