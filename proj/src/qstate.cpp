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

#include "qinstr/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qinstr/error.hpp"

namespace qinstr {

DensityMatrix DensityMatrix::validate(const HermMatrix &m, double tol) {
    SpectralDecomp s = herm_eig(m);
    const double min_eig = s.eigenvalues.minCoeff();
    if (min_eig < -tol) {
        throw Error(ErrorCode::NotPositive, "minimum eigenvalue " + std::to_string(min_eig));
    }
    const double trace = s.eigenvalues.sum();
    if (std::abs(trace - 1.0) > tol) {
        throw Error(ErrorCode::BadTrace, "trace " + std::to_string(trace));
    }
    if (min_eig < 0.0) {
        s.eigenvalues = s.eigenvalues.cwiseMax(0.0);
        s.eigenvalues /= s.eigenvalues.sum();
        CMatrix rebuilt = HermMatrix::hermitian_part(s.reconstruct()).matrix();
        return DensityMatrix(std::move(rebuilt), std::move(s));
    }
    s.eigenvalues /= trace;
    return DensityMatrix(m.matrix() / trace, std::move(s));
}

DensityMatrix DensityMatrix::from_unnormalized(const CMatrix &m, double tol) {
    const HermMatrix h = HermMatrix::hermitian_part(m);
    const double trace = h.matrix().trace().real();
    if (!(trace > 0.0)) {
        throw Error(ErrorCode::BadTrace, "cannot normalize operator with trace " + std::to_string(trace));
    }
    return validate(HermMatrix::hermitian_part(h.matrix() / trace), tol);
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
    if (dim <= 0) {
        throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
    }
    SpectralDecomp s{RVector::Constant(dim, 1.0 / static_cast<double>(dim)), CMatrix::Identity(dim, dim)};
    return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim), std::move(s));
}

DensityMatrix DensityMatrix::pure(const CVector &psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "zero state vector");
    }
    const CVector unit = psi / norm;
    return validate(HermMatrix::hermitian_part(unit * unit.adjoint()));
}

DensityMatrix DensityMatrix::basis_state(Index dim, Index k) {
    if (k < 0 || k >= dim) {
        throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    }
    return pure(CVector::Unit(dim, k));
}

double DensityMatrix::purity() const {
    return spectrum_.eigenvalues.squaredNorm();
}

ClassicalDist::ClassicalDist(Labels labels, std::vector<double> probs, double tol)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
    if (labels_.size() != probs_.size()) {
        throw Error(ErrorCode::LabelMismatch, "labels and probabilities differ in length");
    }
    if (probs_.empty()) {
        throw Error(ErrorCode::BadDistribution, "empty distribution");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw Error(ErrorCode::BadDistribution, "probability " + std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
        throw Error(ErrorCode::BadDistribution, "probabilities sum to " + std::to_string(sum));
    }
}

ClassicalDist ClassicalDist::normalized(Labels labels, std::vector<double> probs, double tol) {
    double sum = 0.0;
    for (double &p : probs) {
        if (!std::isfinite(p) || p < -tol) {
            throw Error(ErrorCode::BadDistribution, "probability " + std::to_string(p));
        }
        p = std::max(p, 0.0);
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
        throw Error(ErrorCode::BadDistribution, "probabilities sum to " + std::to_string(sum));
    }
    for (double &p : probs) {
        p /= sum;
    }
    return ClassicalDist(std::move(labels), std::move(probs), tol);
}

void Povm::validate(double tol) const {
    if (effects.empty() || effects.size() != outcomes.size()) {
        throw Error(ErrorCode::LabelMismatch, "POVM needs one effect per outcome");
    }
    const Index d = effects.front().dim();
    CMatrix sum = CMatrix::Zero(d, d);
    for (const HermMatrix &e : effects) {
        if (e.dim() != d) {
            throw Error(ErrorCode::DimensionMismatch, "POVM effects differ in dimension");
        }
        const double min_eig = herm_eig(e).eigenvalues.minCoeff();
        if (min_eig < -kDensityTol) {
            throw Error(ErrorCode::NotPositive, "POVM effect eigenvalue " + std::to_string(min_eig));
        }
        sum += e.matrix();
    }
    const double defect = max_abs_diff(sum, CMatrix::Identity(d, d));
    if (defect > tol) {
        throw Error(ErrorCode::NotNormalized, "POVM effects sum to identity up to " + std::to_string(defect));
    }
}

Ensemble::Ensemble(Labels letters, std::vector<double> probs, std::vector<DensityMatrix> states)
    : letters_(std::move(letters)), probs_(std::move(probs)), states_(std::move(states)) {
    if (letters_.empty() || letters_.size() != probs_.size() || letters_.size() != states_.size()) {
        throw Error(ErrorCode::LabelMismatch, "ensemble needs one probability and one state per letter");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || !(p > 0.0)) {
            throw Error(ErrorCode::BadDistribution, "letter probabilities must be strictly positive");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw Error(ErrorCode::BadDistribution, "letter probabilities sum to " + std::to_string(sum));
    }
    for (const DensityMatrix &s : states_) {
        if (s.dim() != states_.front().dim()) {
            throw Error(ErrorCode::DimensionMismatch, "letter states differ in dimension");
        }
    }
}

DensityMatrix a_priori_state(const Ensemble &e) {
    CMatrix eta = CMatrix::Zero(e.dim(), e.dim());
    for (std::size_t a = 0; a < e.size(); ++a) {
        eta += e.probs()[a] * e.states()[a].matrix();
    }
    return DensityMatrix::validate(HermMatrix::hermitian_part(eta));
}

CMatrix support_projector(const SpectralDecomp &d, double cutoff) {
    const Index n = d.eigenvalues.size();
    CMatrix proj = CMatrix::Zero(n, n);
    for (Index k = 0; k < n; ++k) {
        if (d.eigenvalues(k) > cutoff) {
            proj += d.eigenvectors.col(k) * d.eigenvectors.col(k).adjoint();
        }
    }
    return proj;
}

bool support_contained(const DensityMatrix &sigma, const DensityMatrix &tau, double cutoff) {
    if (sigma.dim() != tau.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "support check on different dimensions");
    }
    const Index n = tau.dim();
    const CMatrix outside = CMatrix::Identity(n, n) - support_projector(tau.spectrum(), cutoff);
    const CMatrix leak = outside * sigma.matrix() * outside;
    return leak.cwiseAbs().maxCoeff() <= cutoff;
}

}  // namespace qinstr
