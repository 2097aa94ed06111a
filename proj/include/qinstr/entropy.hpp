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
 * Entropies and relative entropies of states and distributions, plus the
 * Holevo chi-quantity of a state family. All values are in nats.
 */

#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qinstr/qstate.hpp"

namespace qinstr {

/// Real number or +infinity. Sums propagate +infinity; +infinity compares
/// greater than or equal to everything.
class ExtReal {
   public:
    constexpr ExtReal() = default;
    constexpr ExtReal(double v) : v_(v) {  // NOLINT(google-explicit-constructor)
    }

    static constexpr ExtReal infinity() {
        return ExtReal(std::numeric_limits<double>::infinity());
    }

    bool is_finite() const {
        return std::isfinite(v_);
    }
    double value() const {
        return v_;
    }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        return ExtReal(a.v_ + b.v_);
    }
    ExtReal &operator+=(ExtReal b) {
        v_ += b.v_;
        return *this;
    }
    /// Non-negative scaling with 0 * inf = 0.
    friend ExtReal scale(double w, ExtReal x) {
        if (w == 0.0) {
            return ExtReal(0.0);
        }
        return ExtReal(w * x.v_);
    }
    friend bool operator==(ExtReal a, ExtReal b) = default;
    friend auto operator<=>(ExtReal a, ExtReal b) {
        return a.v_ <=> b.v_;
    }

   private:
    double v_ = 0.0;
};

std::string to_string(ExtReal x);

/// Weighted family of states beta -> tau(beta).
struct StateFamily {
    ClassicalDist weights;
    std::vector<DensityMatrix> members;

    StateFamily(ClassicalDist w, std::vector<DensityMatrix> m);

    const Labels &labels() const {
        return weights.labels();
    }
    /// sum_beta P(beta) tau(beta)
    DensityMatrix barycenter() const;
};

/// -sum lambda log lambda over eigenvalues above the support cutoff.
double vn_entropy(const DensityMatrix &rho);

/// Tr sigma (log sigma - log tau), +inf when supp sigma is not inside supp tau.
ExtReal q_rel_entropy(const DensityMatrix &sigma, const DensityMatrix &tau);

/// Kullback-Leibler divergence with 0 log(0/q) = 0.
ExtReal c_rel_entropy(const ClassicalDist &p, const ClassicalDist &q);

/// Relative entropy of two classical-quantum states given as families:
/// S_c(P1|P2) + sum_w P1(w) S_q(sigma1(w)|sigma2(w)).
ExtReal mixed_rel_entropy(const StateFamily &f1, const StateFamily &f2);

/// sum_beta P(beta) S_q(tau(beta)|barycenter).
ExtReal chi_quantity(const StateFamily &f);

/// S_q(barycenter) - sum_beta P(beta) S_q(tau(beta)); equals chi_quantity in
/// finite dimension.
double chi_from_entropies(const StateFamily &f);

inline double nats_to_bits(double nats) {
    return nats / 0.69314718055994530942;
}

}  // namespace qinstr
