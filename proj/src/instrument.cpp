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

#include "qinstr/instrument.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qinstr/error.hpp"
#include "qinstr/random.hpp"

namespace qinstr {

CMatrix KrausMap::apply(const CMatrix &rho) const {
    CMatrix out = CMatrix::Zero(dim_out, dim_out);
    for (const CMatrix &k : kraus) {
        out += k * rho * k.adjoint();
    }
    return out;
}

CMatrix KrausMap::apply_adjoint(const CMatrix &a) const {
    CMatrix out = CMatrix::Zero(dim_in, dim_in);
    for (const CMatrix &k : kraus) {
        out += k.adjoint() * a * k;
    }
    return out;
}

CMatrix KrausMap::effect() const {
    CMatrix out = CMatrix::Zero(dim_in, dim_in);
    for (const CMatrix &k : kraus) {
        out += k.adjoint() * k;
    }
    return out;
}

Instrument::Instrument(Labels outcomes, std::vector<KrausMap> maps, double norm_tol)
    : outcomes_(std::move(outcomes)), maps_(std::move(maps)) {
    if (maps_.empty() || outcomes_.size() != maps_.size()) {
        throw Error(ErrorCode::LabelMismatch, "instrument needs one Kraus map per outcome");
    }
    const Index d1 = maps_.front().dim_in;
    const Index d2 = maps_.front().dim_out;
    if (d1 <= 0 || d2 <= 0) {
        throw Error(ErrorCode::DimensionMismatch, "instrument dimensions must be positive");
    }
    CMatrix total = CMatrix::Zero(d1, d1);
    for (const KrausMap &m : maps_) {
        if (m.dim_in != d1 || m.dim_out != d2) {
            throw Error(ErrorCode::DimensionMismatch, "Kraus maps disagree on dimensions");
        }
        for (const CMatrix &k : m.kraus) {
            if (k.rows() != d2 || k.cols() != d1) {
                throw Error(ErrorCode::DimensionMismatch,
                            "Kraus operator is " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                                ", expected " + std::to_string(d2) + "x" + std::to_string(d1));
            }
            if (!k.allFinite()) {
                throw Error(ErrorCode::InvalidArgument, "Kraus operator has non-finite entries");
            }
        }
        total += m.effect();
    }
    const double defect = max_abs_diff(total, CMatrix::Identity(d1, d1));
    if (defect > norm_tol) {
        throw Error(ErrorCode::NotNormalized,
                    "sum of K^dagger K differs from identity by " + std::to_string(defect));
    }
    std::vector<std::string> sorted = outcomes_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::LabelMismatch, "duplicate outcome label");
    }
}

std::size_t Instrument::outcome_index(const std::string &label) const {
    const auto it = std::find(outcomes_.begin(), outcomes_.end(), label);
    if (it == outcomes_.end()) {
        throw Error(ErrorCode::UnknownOutcome, "no outcome labelled '" + label + "'");
    }
    return static_cast<std::size_t>(it - outcomes_.begin());
}

std::size_t Instrument::max_kraus_rank() const {
    std::size_t out = 0;
    for (const KrausMap &m : maps_) {
        out = std::max(out, m.kraus.size());
    }
    return out;
}

namespace {

void require_input_dim(const Instrument &ins, const DensityMatrix &rho) {
    if (rho.dim() != ins.dim_in()) {
        throw Error(ErrorCode::DimensionMismatch, "state has dimension " + std::to_string(rho.dim()) +
                                                      ", instrument expects " + std::to_string(ins.dim_in()));
    }
}

}  // namespace

CMatrix apply_outcome(const Instrument &ins, const DensityMatrix &rho, std::size_t outcome) {
    require_input_dim(ins, rho);
    if (outcome >= ins.size()) {
        throw Error(ErrorCode::UnknownOutcome, "outcome index " + std::to_string(outcome));
    }
    return ins.maps()[outcome].apply(rho.matrix());
}

CMatrix apply_outcome(const Instrument &ins, const DensityMatrix &rho, const std::string &outcome) {
    return apply_outcome(ins, rho, ins.outcome_index(outcome));
}

Povm povm_of(const Instrument &ins) {
    Povm povm;
    povm.outcomes = ins.outcomes();
    for (const KrausMap &m : ins.maps()) {
        povm.effects.push_back(HermMatrix::hermitian_part(m.effect()));
    }
    return povm;
}

ClassicalDist outcome_probs(const Instrument &ins, const DensityMatrix &rho) {
    require_input_dim(ins, rho);
    std::vector<double> probs;
    probs.reserve(ins.size());
    for (const KrausMap &m : ins.maps()) {
        probs.push_back(m.apply(rho.matrix()).trace().real());
    }
    return ClassicalDist::normalized(ins.outcomes(), std::move(probs), kInstrumentNormTol);
}

AposterioriFamily a_posteriori(const Instrument &ins, const DensityMatrix &rho,
                               const std::optional<DensityMatrix> &default_state) {
    require_input_dim(ins, rho);
    DensityMatrix fallback = default_state ? *default_state : DensityMatrix::maximally_mixed(ins.dim_out());
    if (fallback.dim() != ins.dim_out()) {
        throw Error(ErrorCode::DimensionMismatch, "default a posteriori state has wrong dimension");
    }
    std::vector<double> probs;
    std::vector<DensityMatrix> states;
    std::vector<bool> from_default;
    for (const KrausMap &m : ins.maps()) {
        const CMatrix out = m.apply(rho.matrix());
        const double p = out.trace().real();
        probs.push_back(p);
        if (p > kZeroProbTol) {
            states.push_back(DensityMatrix::from_unnormalized(out));
            from_default.push_back(false);
        } else {
            states.push_back(fallback);
            from_default.push_back(true);
        }
    }
    return AposterioriFamily{ClassicalDist::normalized(ins.outcomes(), std::move(probs), kInstrumentNormTol),
                             std::move(states), std::move(fallback), std::move(from_default)};
}

DensityMatrix total_channel(const Instrument &ins, const DensityMatrix &rho) {
    require_input_dim(ins, rho);
    CMatrix out = CMatrix::Zero(ins.dim_out(), ins.dim_out());
    for (const KrausMap &m : ins.maps()) {
        out += m.apply(rho.matrix());
    }
    return DensityMatrix::from_unnormalized(out);
}

Instrument channel_roundtrip(const Instrument &ins) {
    const Index d1 = ins.dim_in();
    const Index d2 = ins.dim_out();
    std::vector<KrausMap> rebuilt;
    for (const KrausMap &m : ins.maps()) {
        // Heisenberg images of the output matrix units: heis[j][k] = I*(|j><k|).
        std::vector<std::vector<CMatrix>> heis(static_cast<std::size_t>(d2));
        for (Index j = 0; j < d2; ++j) {
            for (Index k = 0; k < d2; ++k) {
                CMatrix unit = CMatrix::Zero(d2, d2);
                unit(j, k) = 1.0;
                heis[static_cast<std::size_t>(j)].push_back(m.apply_adjoint(unit));
            }
        }
        // Duality Tr(I[rho] |j><k|) = Tr(rho I*(|j><k|)) gives
        // I[|a><b|](k, j) = I*(|j><k|)(b, a). Assemble the Choi matrix
        // C = sum_ab |a><b| (x) I[|a><b|].
        CMatrix choi = CMatrix::Zero(d1 * d2, d1 * d2);
        for (Index a = 0; a < d1; ++a) {
            for (Index b = 0; b < d1; ++b) {
                for (Index k = 0; k < d2; ++k) {
                    for (Index j = 0; j < d2; ++j) {
                        choi(a * d2 + k, b * d2 + j) =
                            heis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)](b, a);
                    }
                }
            }
        }
        const SpectralDecomp s = herm_eig(HermMatrix::hermitian_part(choi));
        KrausMap out{d1, d2, {}};
        for (Index r = 0; r < s.eigenvalues.size(); ++r) {
            const double lambda = s.eigenvalues(r);
            if (lambda <= kSupportCutoff) {
                continue;
            }
            CMatrix k(d2, d1);
            for (Index a = 0; a < d1; ++a) {
                for (Index i = 0; i < d2; ++i) {
                    k(i, a) = std::sqrt(lambda) * s.eigenvectors(a * d2 + i, r);
                }
            }
            out.kraus.push_back(std::move(k));
        }
        if (out.kraus.empty()) {
            out.kraus.push_back(CMatrix::Zero(d2, d1));
        }
        rebuilt.push_back(std::move(out));
    }
    return Instrument(ins.outcomes(), std::move(rebuilt));
}

Instrument random_instrument(Index d1, Index d2, std::size_t n_outcomes, std::size_t kraus_per_outcome,
                             std::uint64_t seed) {
    if (d1 <= 0 || d2 <= 0 || n_outcomes == 0 || kraus_per_outcome == 0) {
        throw Error(ErrorCode::InvalidArgument, "random_instrument needs positive parameters");
    }
    Rng rng(seed);
    std::vector<std::vector<CMatrix>> ops(n_outcomes);
    CMatrix s = CMatrix::Zero(d1, d1);
    for (auto &outcome : ops) {
        for (std::size_t r = 0; r < kraus_per_outcome; ++r) {
            outcome.push_back(ginibre(rng, d2, d1));
            s += outcome.back().adjoint() * outcome.back();
        }
    }
    const SpectralDecomp sd = herm_eig(HermMatrix::hermitian_part(s));
    if (sd.eigenvalues.minCoeff() < 1e-12) {
        throw Error(ErrorCode::SingularNormalizer, "sum of K^dagger K is numerically singular");
    }
    const CMatrix s_inv_sqrt = spectral_apply(sd, [](double x) { return 1.0 / std::sqrt(x); }).matrix();

    Labels labels;
    std::vector<KrausMap> maps;
    for (std::size_t w = 0; w < n_outcomes; ++w) {
        labels.push_back(std::to_string(w));
        KrausMap m{d1, d2, {}};
        for (const CMatrix &k : ops[w]) {
            m.kraus.push_back(k * s_inv_sqrt);
        }
        maps.push_back(std::move(m));
    }
    return Instrument(std::move(labels), std::move(maps));
}

Instrument identity_instrument(Index dim) {
    return Instrument({"0"}, {KrausMap{dim, dim, {CMatrix::Identity(dim, dim)}}});
}

Instrument computational_instrument(Index dim) {
    Labels labels;
    std::vector<KrausMap> maps;
    for (Index k = 0; k < dim; ++k) {
        labels.push_back(std::to_string(k));
        CMatrix proj = CMatrix::Zero(dim, dim);
        proj(k, k) = 1.0;
        maps.push_back(KrausMap{dim, dim, {proj}});
    }
    return Instrument(std::move(labels), std::move(maps));
}

}  // namespace qinstr
