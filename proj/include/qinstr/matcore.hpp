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
 * Dense complex linear algebra used throughout the toolkit. The core is a
 * validated Hermitian matrix type with a cyclic Jacobi eigensolver; the
 * spectral functions act on the support only. Tensor helpers live here too.
 *
 * Conventions: row/column indices follow Eigen (storage is irrelevant to
 * callers), eigenvectors are the columns of SpectralDecomp::eigenvectors,
 * eigenvalues are sorted ascending.
 */

#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qinstr {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermTol = 1e-10;
inline constexpr double kSupportCutoff = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagTol = 1e-13;

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// Square complex matrix with A = A^dagger. Construction checks the
/// Hermiticity defect against a tolerance and stores the exact Hermitian
/// part (A + A^dagger) / 2.
class HermMatrix {
   public:
    explicit HermMatrix(const CMatrix &m, double tol = kHermTol);

    /// Takes the Hermitian part without checking; for matrices that are
    /// Hermitian by construction up to roundoff.
    static HermMatrix hermitian_part(const CMatrix &m);

    static HermMatrix identity(Index dim);

    const CMatrix &matrix() const {
        return m_;
    }
    Index dim() const {
        return m_.rows();
    }

   private:
    struct Trusted {};
    HermMatrix(Trusted, CMatrix m) : m_(std::move(m)) {
    }

    CMatrix m_;
};

struct SpectralDecomp {
    RVector eigenvalues;   // ascending
    CMatrix eigenvectors;  // unitary, columns

    CMatrix reconstruct() const;
};

SpectralDecomp herm_eig(const HermMatrix &a);

/// U f(Lambda) U^dagger with f applied only to eigenvalues strictly above
/// `support_cutoff`; the remaining eigenvalues map to zero.
HermMatrix spectral_apply(const HermMatrix &a, const std::function<double(double)> &f,
                          double support_cutoff = kSupportCutoff);

/// Same as above on an already computed decomposition.
HermMatrix spectral_apply(const SpectralDecomp &decomp, const std::function<double(double)> &f,
                          double support_cutoff = kSupportCutoff);

CMatrix kron(const CMatrix &a, const CMatrix &b);

enum class Subsystem { First, Second };

/// Traces out `traced` from an operator on C^d1 (x) C^d2.
CMatrix partial_trace(const CMatrix &a, Subsystem traced, Index d1, Index d2);

}  // namespace qinstr
