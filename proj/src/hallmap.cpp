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

#include "qinstr/hallmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qinstr/error.hpp"

namespace qinstr {

namespace {

double checked_min_eigenvalue(const DensityMatrix &eta, double tol) {
    const double lo = eta.spectrum().eigenvalues(0);
    if (lo <= tol) {
        throw Error(ErrorCode::SingularAprioriState,
                    "a priori state is not invertible (smallest eigenvalue " + std::to_string(lo) + ")");
    }
    return lo;
}

CMatrix sqrt_of(const DensityMatrix &rho) {
    return spectral_apply(rho.spectrum(), [](double x) { return std::sqrt(x); }).matrix();
}

}  // namespace

HallInstrument build_hall_instrument(const Ensemble &e, double invertibility_tol) {
    const DensityMatrix eta = a_priori_state(e);
    checked_min_eigenvalue(eta, invertibility_tol);
    const CMatrix inv_sqrt = spectral_apply(eta.spectrum(), [](double x) { return 1.0 / std::sqrt(x); }).matrix();

    std::vector<KrausMap> maps;
    for (std::size_t a = 0; a < e.size(); ++a) {
        maps.push_back(KrausMap{e.dim(), e.dim(), {std::sqrt(e.probs()[a]) * sqrt_of(e.states()[a]) * inv_sqrt}});
    }
    return HallInstrument{Instrument(e.letters(), std::move(maps)), e};
}

AposterioriFamily hall_a_posteriori(const HallInstrument &h, const DensityMatrix &rho) {
    if (rho.dim() != h.base.dim_in()) {
        throw Error(ErrorCode::DimensionMismatch, "state does not live on the instrument's input space");
    }
    return a_posteriori(h.base, rho);
}

Ensemble DualEnsemble::as_ensemble() const {
    return Ensemble(probs.labels(), probs.probs(), states);
}

DualEnsemble dual_ensemble(const Ensemble &e, const Instrument &ins) {
    if (e.dim() != ins.dim_in()) {
        throw Error(ErrorCode::DimensionMismatch, "instrument does not act on the ensemble's space");
    }
    const DensityMatrix eta = a_priori_state(e);
    const CMatrix root = sqrt_of(eta);
    const Povm povm = povm_of(ins);

    Labels labels;
    std::vector<double> probs;
    std::vector<DensityMatrix> states;
    for (std::size_t w = 0; w < ins.size(); ++w) {
        const CMatrix sandwich = root * povm.effects[w].matrix() * root;
        const double pf = sandwich.trace().real();
        if (pf <= kZeroProbTol) {
            continue;
        }
        labels.push_back(ins.outcomes()[w]);
        probs.push_back(pf);
        states.push_back(DensityMatrix::from_unnormalized(sandwich));
    }
    return DualEnsemble{ClassicalDist::normalized(std::move(labels), std::move(probs), kInstrumentNormTol),
                        std::move(states)};
}

BoundReport verify_duality(const Ensemble &e, const Instrument &ins, const Tolerances &tol) {
    const HallInstrument hall = build_hall_instrument(e);
    const DualEnsemble dual = dual_ensemble(e, ins);
    const MeasurementStatistics ms = analyze(e, ins);
    const Povm hall_povm = povm_of(hall.base);

    double cond_residual = 0.0;
    CMatrix bary = CMatrix::Zero(e.dim(), e.dim());
    for (std::size_t k = 0; k < dual.states.size(); ++k) {
        const std::size_t w = ins.outcome_index(dual.labels()[k]);
        bary += dual.probs[k] * dual.states[k].matrix();
        for (std::size_t a = 0; a < e.size(); ++a) {
            const double p = (hall_povm.effects[a].matrix() * dual.states[k].matrix()).trace().real();
            cond_residual = std::max(cond_residual, std::abs(p - ms.in_given_out(a, w)));
        }
    }

    const MeasurementStatistics dual_ms = analyze(dual.as_ensemble(), hall.base);
    BoundReport r;
    r.push_back(BoundRecord::equal("duality_conditional_table", cond_residual, 0.0, tol.identity));
    r.push_back(BoundRecord::equal("duality_classical_info", classical_mutual_info(dual_ms),
                                   classical_mutual_info(ms), tol.identity));
    r.push_back(BoundRecord::equal("dual_barycenter", max_abs_diff(bary, ms.a_priori.matrix()), 0.0, tol.identity));
    return r;
}

BoundRecord hall_bound(const Ensemble &e, const Instrument &ins, const Tolerances &tol) {
    const DensityMatrix eta = a_priori_state(e);
    checked_min_eigenvalue(eta, kInvertibilityTol);
    const DualEnsemble dual = dual_ensemble(e, ins);
    ExtReal bound = 0.0;
    for (std::size_t k = 0; k < dual.states.size(); ++k) {
        bound += scale(dual.probs[k], q_rel_entropy(dual.states[k], eta));
    }
    return BoundRecord::less_eq("hall", classical_mutual_info(analyze(e, ins)), bound, tol.bound);
}

NewBoundResult new_bound(const Ensemble &e, const Instrument &ins, const Tolerances &tol) {
    const HallInstrument hall = build_hall_instrument(e);
    const DualEnsemble dual = dual_ensemble(e, ins);
    const MeasurementStatistics ms = analyze(e, ins);
    const Povm povm = povm_of(ins);

    std::vector<CMatrix> letter_roots;
    for (const DensityMatrix &rho : e.states()) {
        letter_roots.push_back(sqrt_of(rho));
    }

    NewBoundResult out;
    out.min_sigma_gain = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < dual.states.size(); ++k) {
        const std::size_t w = ins.outcome_index(dual.labels()[k]);
        double gain = vn_entropy(dual.states[k]);
        for (std::size_t a = 0; a < e.size(); ++a) {
            const double p_out = ms.out_given_in(a, w);
            if (p_out <= kZeroProbTol) {
                continue;
            }
            const CMatrix post = letter_roots[a] * povm.effects[w].matrix() * letter_roots[a] / p_out;
            gain -= ms.in_given_out(a, w) * vn_entropy(DensityMatrix::from_unnormalized(post));
        }
        out.min_sigma_gain = std::min(out.min_sigma_gain, gain);
        out.d_term += dual.probs[k] * gain;
    }

    out.chi = chi_quantity(StateFamily(e.distribution(), e.states())).value();
    out.value = out.chi - out.d_term;
    const ExtReal ic = classical_mutual_info(ms);

    out.report.push_back(BoundRecord::less_eq("dual_info_gain_nonnegative", 0.0, out.min_sigma_gain, tol.bound));
    out.report.push_back(BoundRecord::less_eq("new_bound", ic, out.value, tol.bound));
    out.report.push_back(BoundRecord::less_eq("new_bound_le_holevo", out.value, out.chi, tol.bound));
    out.report.push_back(
        BoundRecord::equal("info_gain_at_apriori_equals_chi", quantum_info_gain(hall.base, ms.a_priori), out.chi,
                           tol.identity));
    return out;
}

double d_term_generic(const Ensemble &e, const Instrument &ins) {
    const HallInstrument hall = build_hall_instrument(e);
    const DualEnsemble dual = dual_ensemble(e, ins);
    double d = 0.0;
    for (std::size_t k = 0; k < dual.states.size(); ++k) {
        d += dual.probs[k] * quantum_info_gain(hall.base, dual.states[k]);
    }
    return d;
}

}  // namespace qinstr
