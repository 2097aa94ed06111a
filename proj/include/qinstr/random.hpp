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

// Seeded generators for random states and the objects built on them.

#pragma once

#include <cstdint>
#include <random>

#include "qinstr/qstate.hpp"

namespace qinstr {

using Rng = std::mt19937_64;

inline constexpr double kLetterProbFloor = 0.05;

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// rows x cols matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
CMatrix ginibre(Rng &rng, Index rows, Index cols);

/// Normalized Ginibre state G G^dagger / Tr.
DensityMatrix random_density(Rng &rng, Index dim);

/// Haar-random pure state.
DensityMatrix random_pure(Rng &rng, Index dim);

/// Ginibre letter states with probabilities drawn uniformly, normalized and
/// floored at `prob_floor` (then renormalized).
Ensemble random_ensemble(Rng &rng, Index dim, std::size_t n_letters, double prob_floor = kLetterProbFloor);

}  // namespace qinstr
