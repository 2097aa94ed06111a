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

#include "qinstr/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qinstr/error.hpp"

namespace qinstr {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

CMatrix ginibre(Rng &rng, Index rows, Index cols) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CMatrix g(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

DensityMatrix random_density(Rng &rng, Index dim) {
    const CMatrix g = ginibre(rng, dim, dim);
    return DensityMatrix::from_unnormalized(g * g.adjoint());
}

DensityMatrix random_pure(Rng &rng, Index dim) {
    return DensityMatrix::pure(ginibre(rng, dim, 1).col(0));
}

Ensemble random_ensemble(Rng &rng, Index dim, std::size_t n_letters, double prob_floor) {
    if (n_letters == 0 || dim <= 0) {
        throw Error(ErrorCode::InvalidArgument, "random_ensemble needs positive sizes");
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> probs(n_letters);
    for (double &p : probs) {
        p = uniform(rng);
    }
    double sum = 0.0;
    for (double p : probs) {
        sum += p;
    }
    for (double &p : probs) {
        p = std::max(p / sum, prob_floor);
    }
    sum = 0.0;
    for (double p : probs) {
        sum += p;
    }
    for (double &p : probs) {
        p /= sum;
    }
    Labels letters;
    std::vector<DensityMatrix> states;
    for (std::size_t a = 0; a < n_letters; ++a) {
        letters.push_back("a" + std::to_string(a));
        states.push_back(random_density(rng, dim));
    }
    return Ensemble(std::move(letters), std::move(probs), std::move(states));
}

}  // namespace qinstr
