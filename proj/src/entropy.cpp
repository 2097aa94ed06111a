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

#include "qinstr/entropy.hpp"

#include <cmath>
#include <sstream>

#include "qinstr/error.hpp"

namespace qinstr {

std::string to_string(ExtReal x) {
    if (std::isinf(x.value())) {
        return x.value() > 0 ? "+inf" : "-inf";
    }
    std::ostringstream os;
    os.precision(17);
    os << x.value();
    return os.str();
}

StateFamily::StateFamily(ClassicalDist w, std::vector<DensityMatrix> m)
    : weights(std::move(w)), members(std::move(m)) {
    if (members.size() != weights.size() || members.empty()) {
        throw Error(ErrorCode::LabelMismatch, "state family needs one member per weight");
    }
    for (const DensityMatrix &s : members) {
        if (s.dim() != members.front().dim()) {
            throw Error(ErrorCode::DimensionMismatch, "state family members differ in dimension");
        }
    }
}

DensityMatrix StateFamily::barycenter() const {
    const Index d = members.front().dim();
    CMatrix sum = CMatrix::Zero(d, d);
    for (std::size_t b = 0; b < members.size(); ++b) {
        sum += weights[b] * members[b].matrix();
    }
    return DensityMatrix::from_unnormalized(sum);
}

double vn_entropy(const DensityMatrix &rho) {
    double s = 0.0;
    for (Index k = 0; k < rho.spectrum().eigenvalues.size(); ++k) {
        const double lambda = rho.spectrum().eigenvalues(k);
        if (lambda > kSupportCutoff) {
            s -= lambda * std::log(lambda);
        }
    }
    return s;
}

namespace {

// sum_j l_j log l_j - sum_{j,k} l_j |<u_j|v_k>|^2 log m_k, both sums over
// eigenvalues above the cutoff. Exact whenever supp sigma lies in supp tau.
double rel_entropy_on_support(const SpectralDecomp &sigma, const SpectralDecomp &tau) {
    const CMatrix overlap = sigma.eigenvectors.adjoint() * tau.eigenvectors;
    double value = 0.0;
    for (Index j = 0; j < sigma.eigenvalues.size(); ++j) {
        const double lambda = sigma.eigenvalues(j);
        if (lambda <= kSupportCutoff) {
            continue;
        }
        value += lambda * std::log(lambda);
        for (Index k = 0; k < tau.eigenvalues.size(); ++k) {
            const double mu = tau.eigenvalues(k);
            if (mu > kSupportCutoff) {
                value -= lambda * std::norm(overlap(j, k)) * std::log(mu);
            }
        }
    }
    return value;
}

}  // namespace

ExtReal q_rel_entropy(const DensityMatrix &sigma, const DensityMatrix &tau) {
    if (sigma.dim() != tau.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "relative entropy of states with different dimensions");
    }
    if (!support_contained(sigma, tau)) {
        return ExtReal::infinity();
    }
    return rel_entropy_on_support(sigma.spectrum(), tau.spectrum());
}

ExtReal c_rel_entropy(const ClassicalDist &p, const ClassicalDist &q) {
    if (p.labels() != q.labels()) {
        throw Error(ErrorCode::LabelMismatch, "classical relative entropy over different label sets");
    }
    double value = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double pi = p[i];
        const double qi = q[i];
        if (pi == 0.0) {
            continue;
        }
        if (qi <= kSupportCutoff) {
            if (pi > kSupportCutoff) {
                return ExtReal::infinity();
            }
            continue;
        }
        value += pi * std::log(pi / qi);
    }
    return value;
}

ExtReal mixed_rel_entropy(const StateFamily &f1, const StateFamily &f2) {
    if (f1.labels() != f2.labels()) {
        throw Error(ErrorCode::LabelMismatch, "mixed relative entropy over different label sets");
    }
    if (f1.members.front().dim() != f2.members.front().dim()) {
        throw Error(ErrorCode::DimensionMismatch, "mixed relative entropy of families on different spaces");
    }
    ExtReal total = c_rel_entropy(f1.weights, f2.weights);
    for (std::size_t w = 0; w < f1.members.size(); ++w) {
        if (f1.weights[w] <= kSupportCutoff) {
            continue;
        }
        total += scale(f1.weights[w], q_rel_entropy(f1.members[w], f2.members[w]));
    }
    return total;
}

ExtReal chi_quantity(const StateFamily &f) {
    // Each member with positive weight is dominated by the barycenter, so the
    // support test is skipped and the sum is always finite.
    const DensityMatrix bary = f.barycenter();
    double chi = 0.0;
    for (std::size_t b = 0; b < f.members.size(); ++b) {
        if (f.weights[b] == 0.0) {
            continue;
        }
        chi += f.weights[b] * rel_entropy_on_support(f.members[b].spectrum(), bary.spectrum());
    }
    return chi;
}

double chi_from_entropies(const StateFamily &f) {
    double mean = 0.0;
    for (std::size_t b = 0; b < f.members.size(); ++b) {
        mean += f.weights[b] * vn_entropy(f.members[b]);
    }
    return vn_entropy(f.barycenter()) - mean;
}

}  // namespace qinstr
