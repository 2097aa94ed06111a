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

#pragma once

#include <string>
#include <vector>

#include "qinstr/matcore.hpp"

namespace qinstr {

inline constexpr double kDensityTol = 1e-10;
inline constexpr double kProbSumTol = 1e-12;
inline constexpr double kPovmTol = 1e-9;

using Labels = std::vector<std::string>;

/// Unit-trace positive semidefinite matrix. Every instance carries its
/// spectral decomposition, computed once at validation, so entropies and
/// support projectors never re-diagonalize.
class DensityMatrix {
   public:
    /// Validates `m`. Eigenvalues in (-tol, 0) are clamped to zero and the
    /// trace renormalized; larger negativity or a trace defect above `tol`
    /// is an error (NotPositive / BadTrace).
    static DensityMatrix validate(const HermMatrix &m, double tol = kDensityTol);

    /// Normalizes a positive operator by its trace, then validates.
    static DensityMatrix from_unnormalized(const CMatrix &m, double tol = kDensityTol);

    static DensityMatrix maximally_mixed(Index dim);
    static DensityMatrix pure(const CVector &psi);
    static DensityMatrix basis_state(Index dim, Index k);

    const CMatrix &matrix() const {
        return m_;
    }
    Index dim() const {
        return m_.rows();
    }
    const SpectralDecomp &spectrum() const {
        return spectrum_;
    }
    double purity() const;

   private:
    DensityMatrix(CMatrix m, SpectralDecomp s) : m_(std::move(m)), spectrum_(std::move(s)) {
    }

    CMatrix m_;
    SpectralDecomp spectrum_;
};

inline DensityMatrix validate_density(const HermMatrix &m, double tol = kDensityTol) {
    return DensityMatrix::validate(m, tol);
}

/// Finite probability vector over named labels.
class ClassicalDist {
   public:
    /// Entries must be >= 0 and sum to one within `tol`.
    ClassicalDist(Labels labels, std::vector<double> probs, double tol = kProbSumTol);

    /// Accepts a sum within `tol` of one, clamps entries in [-tol, 0) to zero
    /// and rescales to an exact unit sum. For distributions computed from traces.
    static ClassicalDist normalized(Labels labels, std::vector<double> probs, double tol);

    const Labels &labels() const {
        return labels_;
    }
    const std::vector<double> &probs() const {
        return probs_;
    }
    std::size_t size() const {
        return probs_.size();
    }
    double operator[](std::size_t i) const {
        return probs_[i];
    }

   private:
    ClassicalDist() = default;

    Labels labels_;
    std::vector<double> probs_;
};

/// Positive operator valued measure on a finite outcome set.
struct Povm {
    Labels outcomes;
    std::vector<HermMatrix> effects;

    /// Throws NotPositive / NotNormalized / DimensionMismatch.
    void validate(double tol = kPovmTol) const;
};

/// Letter states with strictly positive a priori probabilities.
class Ensemble {
   public:
    Ensemble(Labels letters, std::vector<double> probs, std::vector<DensityMatrix> states);

    const Labels &letters() const {
        return letters_;
    }
    const std::vector<double> &probs() const {
        return probs_;
    }
    const std::vector<DensityMatrix> &states() const {
        return states_;
    }
    std::size_t size() const {
        return probs_.size();
    }
    Index dim() const {
        return states_.front().dim();
    }
    ClassicalDist distribution() const {
        return ClassicalDist(letters_, probs_);
    }

   private:
    Labels letters_;
    std::vector<double> probs_;
    std::vector<DensityMatrix> states_;
};

/// Barycenter sum_a P(a) rho(a).
DensityMatrix a_priori_state(const Ensemble &e);

/// supp(sigma) contained in supp(tau), tested as
/// ||(1 - Pi_tau) sigma (1 - Pi_tau)||_max <= cutoff.
bool support_contained(const DensityMatrix &sigma, const DensityMatrix &tau,
                       double cutoff = kSupportCutoff);

/// Projector onto the eigenvectors of `d` with eigenvalue above `cutoff`.
CMatrix support_projector(const SpectralDecomp &d, double cutoff = kSupportCutoff);

}  // namespace qinstr
