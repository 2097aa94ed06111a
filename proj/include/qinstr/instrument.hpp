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
 * Finite-outcome instruments in Kraus form. Each outcome carries a
 * completely positive map rho -> sum_k K_k rho K_k^dagger from C^dim_in to
 * C^dim_out; the maps jointly preserve the trace.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinstr/qstate.hpp"

namespace qinstr {

inline constexpr double kInstrumentNormTol = 1e-9;
inline constexpr double kZeroProbTol = 1e-12;

struct KrausMap {
    Index dim_in = 0;
    Index dim_out = 0;
    std::vector<CMatrix> kraus;  // each dim_out x dim_in

    CMatrix apply(const CMatrix &rho) const;
    /// Heisenberg-picture action a -> sum_k K_k^dagger a K_k.
    CMatrix apply_adjoint(const CMatrix &a) const;
    /// sum_k K_k^dagger K_k
    CMatrix effect() const;
};

class Instrument {
   public:
    /// Checks shapes and sum_w sum_k K^dagger K = 1 within `norm_tol`
    /// (DimensionMismatch / NotNormalized).
    Instrument(Labels outcomes, std::vector<KrausMap> maps, double norm_tol = kInstrumentNormTol);

    const Labels &outcomes() const {
        return outcomes_;
    }
    const std::vector<KrausMap> &maps() const {
        return maps_;
    }
    std::size_t size() const {
        return maps_.size();
    }
    Index dim_in() const {
        return maps_.front().dim_in;
    }
    Index dim_out() const {
        return maps_.front().dim_out;
    }
    std::size_t outcome_index(const std::string &label) const;
    /// Largest number of Kraus operators attached to any outcome.
    std::size_t max_kraus_rank() const;

   private:
    Labels outcomes_;
    std::vector<KrausMap> maps_;
};

/// Output of an instrument on one input state: outcome probabilities and
/// the normalized conditional states. Outcomes at or below kZeroProbTol get
/// `default_state` and are flagged in `from_default`.
struct AposterioriFamily {
    ClassicalDist probs;
    std::vector<DensityMatrix> states;
    DensityMatrix default_state;
    std::vector<bool> from_default;
};

/// Unnormalized I({w})[rho].
CMatrix apply_outcome(const Instrument &ins, const DensityMatrix &rho, std::size_t outcome);
CMatrix apply_outcome(const Instrument &ins, const DensityMatrix &rho, const std::string &outcome);

Povm povm_of(const Instrument &ins);

/// P_rho(w) = Tr I({w})[rho].
ClassicalDist outcome_probs(const Instrument &ins, const DensityMatrix &rho);

/// A posteriori states; `default_state` defaults to the maximally mixed state
/// on the output space.
AposterioriFamily a_posteriori(const Instrument &ins, const DensityMatrix &rho,
                               const std::optional<DensityMatrix> &default_state = std::nullopt);

/// I(Omega)[rho]
DensityMatrix total_channel(const Instrument &ins, const DensityMatrix &rho);

/// Rebuilds the instrument from its dual channel alone: each outcome's
/// Schroedinger action is recovered from the Heisenberg action on matrix
/// units, and Kraus operators are re-extracted from the resulting Choi
/// matrix. The result generally has different Kraus operators but the same
/// action.
Instrument channel_roundtrip(const Instrument &ins);

/// Gaussian Kraus operators normalized by S^{-1/2}, S = sum K^dagger K.
/// Deterministic in `seed`. Throws SingularNormalizer when S is
/// numerically singular.
Instrument random_instrument(Index d1, Index d2, std::size_t n_outcomes, std::size_t kraus_per_outcome,
                             std::uint64_t seed);

/// Identity channel as a one-outcome instrument.
Instrument identity_instrument(Index dim);

/// Rank-one projective measurement in the computational basis.
Instrument computational_instrument(Index dim);

}  // namespace qinstr
