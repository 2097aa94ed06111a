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

#include "qinstr/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qinstr/error.hpp"

namespace qinstr {

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "max_abs_diff: shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

HermMatrix::HermMatrix(const CMatrix &m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "Hermitian matrix must be square and non-empty");
    }
    if (!m.allFinite()) {
        throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
    }
    const double defect = max_abs_diff(m, m.adjoint());
    if (defect > tol) {
        throw Error(ErrorCode::NotHermitian, "max |A - A^dagger| = " + std::to_string(defect));
    }
    m_ = (m + m.adjoint()) / 2.0;
}

HermMatrix HermMatrix::hermitian_part(const CMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "Hermitian matrix must be square and non-empty");
    }
    return HermMatrix(Trusted{}, (m + m.adjoint()) / 2.0);
}

HermMatrix HermMatrix::identity(Index dim) {
    return HermMatrix(Trusted{}, CMatrix::Identity(dim, dim));
}

CMatrix SpectralDecomp::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

namespace {

double off_diagonal_norm(const CMatrix &a) {
    double sum = 0.0;
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p, q). The rotation is a phase
// change on column q that makes a(p, q) real, followed by the classic real
// symmetric rotation.
void rotate(CMatrix &a, CMatrix &v, Index p, Index q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) {
        return;
    }
    const Complex phase = std::conj(apq) / g;  // e^{-i phi}
    const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex u_pp = c;
    const Complex u_pq = s;
    const Complex u_qp = -s * phase;
    const Complex u_qq = c * phase;

    const Index n = a.rows();
    for (Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * u_pp + akq * u_qp;
        a(k, q) = akp * u_pq + akq * u_qq;
    }
    for (Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
        a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
    }
    for (Index k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * u_pp + vkq * u_qp;
        v(k, q) = vkp * u_pq + vkq * u_qq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

SpectralDecomp herm_eig(const HermMatrix &herm) {
    CMatrix a = herm.matrix();
    const Index n = a.rows();
    CMatrix v = CMatrix::Identity(n, n);

    // Threshold is absolute for unit-scale inputs (density matrices, effects)
    // and relative for anything larger.
    const double threshold = kJacobiOffDiagTol * std::max(1.0, a.norm());
    bool converged = off_diagonal_norm(a) <= threshold;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (Index p = 0; p < n - 1; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence,
                    "Jacobi eigensolver exceeded " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index i, Index j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomp out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Index k = 0; k < n; ++k) {
        const Index src = order[static_cast<std::size_t>(k)];
        out.eigenvalues(k) = a(src, src).real();
        out.eigenvectors.col(k) = v.col(src);
    }
    return out;
}

HermMatrix spectral_apply(const SpectralDecomp &decomp, const std::function<double(double)> &f,
                          double support_cutoff) {
    if (support_cutoff < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "support_cutoff must be non-negative");
    }
    const Index n = decomp.eigenvalues.size();
    RVector mapped = RVector::Zero(n);
    for (Index k = 0; k < n; ++k) {
        if (decomp.eigenvalues(k) > support_cutoff) {
            mapped(k) = f(decomp.eigenvalues(k));
        }
    }
    const CMatrix &u = decomp.eigenvectors;
    return HermMatrix::hermitian_part(u * mapped.cast<Complex>().asDiagonal() * u.adjoint());
}

HermMatrix spectral_apply(const HermMatrix &a, const std::function<double(double)> &f,
                          double support_cutoff) {
    return spectral_apply(herm_eig(a), f, support_cutoff);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix partial_trace(const CMatrix &a, Subsystem traced, Index d1, Index d2) {
    if (d1 <= 0 || d2 <= 0 || a.rows() != d1 * d2 || a.cols() != d1 * d2) {
        throw Error(ErrorCode::DimensionMismatch,
                    "partial_trace: expected " + std::to_string(d1 * d2) + "x" + std::to_string(d1 * d2) +
                        " operator, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (traced == Subsystem::Second) {
        CMatrix out = CMatrix::Zero(d1, d1);
        for (Index i = 0; i < d1; ++i) {
            for (Index j = 0; j < d1; ++j) {
                out(i, j) = a.block(i * d2, j * d2, d2, d2).trace();
            }
        }
        return out;
    }
    CMatrix out = CMatrix::Zero(d2, d2);
    for (Index i = 0; i < d1; ++i) {
        out += a.block(i * d2, i * d2, d2, d2);
    }
    return out;
}

}  // namespace qinstr
