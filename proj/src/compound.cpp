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

#include <algorithm>

#include "qinstr/error.hpp"
#include "qinstr/infobounds.hpp"

namespace qinstr {

namespace {

StateFamily live_family(const MeasurementStatistics &ms, const std::vector<DensityMatrix> &per_outcome) {
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

CompoundStates compound_states(const MeasurementStatistics &ms, const Ensemble &e) {
    const Index d1 = ms.a_priori.dim();
    const Index d2 = ms.post_state.dim();
    const std::size_t na = ms.n_letters();
    const std::size_t nw = ms.n_outcomes();

    std::vector<CMatrix> letter_products;
    CMatrix eta_if = CMatrix::Zero(d1 * d2, d1 * d2);
    for (std::size_t a = 0; a < na; ++a) {
        letter_products.push_back(kron(e.states()[a].matrix(), ms.post_letter_states[a].matrix()));
        eta_if += ms.input_marginal[a] * letter_products.back();
    }

    std::vector<DensityMatrix> eps_if;
    std::vector<DensityMatrix> eps_i;
    std::vector<DensityMatrix> eps_f;
    CMatrix gamma = CMatrix::Zero(d1 * d2, d1 * d2);
    for (std::size_t w = 0; w < nw; ++w) {
        if (!ms.outcome_live[w]) {
            eps_if.push_back(DensityMatrix::maximally_mixed(d1 * d2));
            eps_i.push_back(DensityMatrix::maximally_mixed(d1));
            eps_f.push_back(DensityMatrix::maximally_mixed(d2));
            continue;
        }
        CMatrix sum = CMatrix::Zero(d1 * d2, d1 * d2);
        for (std::size_t a = 0; a < na; ++a) {
            sum += ms.in_given_out(a, w) * letter_products[a];
        }
        eps_if.push_back(DensityMatrix::from_unnormalized(sum));
        eps_i.push_back(DensityMatrix::from_unnormalized(partial_trace(sum, Subsystem::Second, d1, d2)));
        eps_f.push_back(DensityMatrix::from_unnormalized(partial_trace(sum, Subsystem::First, d1, d2)));
        gamma += ms.output_marginal[w] * kron(eps_i.back().matrix(), ms.mean_posteriors[w].matrix());
    }

    std::vector<DensityMatrix> tau_f;
    for (std::size_t a = 0; a < na; ++a) {
        CMatrix sum = CMatrix::Zero(d2, d2);
        for (std::size_t w = 0; w < nw; ++w) {
            if (ms.outcome_live[w]) {
                sum += ms.out_given_in(a, w) * ms.mean_posteriors[w].matrix();
            }
        }
        tau_f.push_back(DensityMatrix::from_unnormalized(sum));
    }

    return CompoundStates{d1,
                          d2,
                          std::move(eps_if),
                          std::move(eps_i),
                          std::move(eps_f),
                          DensityMatrix::from_unnormalized(eta_if),
                          std::move(tau_f),
                          DensityMatrix::from_unnormalized(gamma)};
}

BoundReport compound_consistency(const CompoundStates &cs, const MeasurementStatistics &ms, const Ensemble &e,
                                 const Tolerances &tol) {
    const Index d1 = cs.d1;
    const Index d2 = cs.d2;
    const double t = tol.identity;
    BoundReport r;
    auto residual = [&](const std::string &name, const CMatrix &x, const CMatrix &y) {
        r.push_back(BoundRecord::equal(name, max_abs_diff(x, y), 0.0, t));
    };

    residual("eta_if_trace_out", partial_trace(cs.eta_if.matrix(), Subsystem::Second, d1, d2), ms.a_priori.matrix());
    residual("eta_if_trace_in", partial_trace(cs.eta_if.matrix(), Subsystem::First, d1, d2), ms.post_state.matrix());

    CMatrix mix_if = CMatrix::Zero(d1 * d2, d1 * d2);
    CMatrix mix_i = CMatrix::Zero(d1, d1);
    CMatrix mix_f = CMatrix::Zero(d2, d2);
    double eps_i_direct = 0.0;
    double eps_f_direct = 0.0;
    for (std::size_t w = 0; w < ms.n_outcomes(); ++w) {
        if (!ms.outcome_live[w]) {
            continue;
        }
        const double pf = ms.output_marginal[w];
        mix_if += pf * cs.eps_if[w].matrix();
        mix_i += pf * cs.eps_i[w].matrix();
        mix_f += pf * cs.eps_f[w].matrix();
        CMatrix di = CMatrix::Zero(d1, d1);
        CMatrix df = CMatrix::Zero(d2, d2);
        for (std::size_t a = 0; a < ms.n_letters(); ++a) {
            di += ms.in_given_out(a, w) * e.states()[a].matrix();
            df += ms.in_given_out(a, w) * ms.post_letter_states[a].matrix();
        }
        eps_i_direct = std::max(eps_i_direct, max_abs_diff(di, cs.eps_i[w].matrix()));
        eps_f_direct = std::max(eps_f_direct, max_abs_diff(df, cs.eps_f[w].matrix()));
    }
    residual("eta_if_outcome_mixture", mix_if, cs.eta_if.matrix());
    residual("eps_i_mixture", mix_i, ms.a_priori.matrix());
    residual("eps_f_mixture", mix_f, ms.post_state.matrix());
    r.push_back(BoundRecord::equal("eps_i_direct", eps_i_direct, 0.0, t));
    r.push_back(BoundRecord::equal("eps_f_direct", eps_f_direct, 0.0, t));

    CMatrix tau_mix = CMatrix::Zero(d2, d2);
    for (std::size_t a = 0; a < ms.n_letters(); ++a) {
        tau_mix += ms.input_marginal[a] * cs.tau_f[a].matrix();
    }
    residual("tau_f_mixture", tau_mix, ms.post_state.matrix());
    residual("gamma_if_trace_out", partial_trace(cs.gamma_if.matrix(), Subsystem::Second, d1, d2),
             ms.a_priori.matrix());
    residual("gamma_if_trace_in", partial_trace(cs.gamma_if.matrix(), Subsystem::First, d1, d2),
             ms.post_state.matrix());
    return r;
}

BoundReport scutaru_chains(const MeasurementStatistics &ms, const Ensemble &e, const Tolerances &tol) {
    const CompoundStates cs = compound_states(ms, e);
    const double t = tol.bound;
    const ExtReal ic = classical_mutual_info(ms);
    const ExtReal chi_if = chi_quantity(live_family(ms, cs.eps_if));
    const ExtReal chi_i = chi_quantity(live_family(ms, cs.eps_i));
    const ExtReal chi_f = chi_quantity(live_family(ms, cs.eps_f));
    const ExtReal chi_tau = chi_quantity(StateFamily(ms.input_marginal, cs.tau_f));
    const DensityMatrix product =
        DensityMatrix::from_unnormalized(kron(ms.a_priori.matrix(), ms.post_state.matrix()));
    const ExtReal gamma_info = q_rel_entropy(cs.gamma_if, product);

    BoundReport r;
    r.push_back(BoundRecord::less_eq("scutaru1_ic_ge_chi_if", chi_if, ic, t));
    r.push_back(BoundRecord::less_eq("scutaru1_chi_if_ge_chi_i", chi_i, chi_if, t));
    r.push_back(BoundRecord::less_eq("scutaru1_chi_if_ge_chi_f", chi_f, chi_if, t));
    r.push_back(BoundRecord::less_eq("scutaru2_ic_ge_chi_i", chi_i, ic, t));
    r.push_back(BoundRecord::less_eq("scutaru2_ic_ge_chi_tau", chi_tau, ic, t));
    r.push_back(BoundRecord::less_eq("scutaru2_chi_i_ge_gamma", gamma_info, chi_i, t));
    r.push_back(BoundRecord::less_eq("scutaru2_chi_tau_ge_gamma", gamma_info, chi_tau, t));
    return r;
}

}  // namespace qinstr
