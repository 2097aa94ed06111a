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

#include <gtest/gtest.h>

#include "qinstr/instrument.hpp"
#include "test_support.hpp"

using namespace qinstr;
using namespace qinstr::testing;

namespace {

const double kLn2 = std::log(2.0);

DensityMatrix diag_state(std::initializer_list<double> p) {
    CMatrix m = CMatrix::Zero(static_cast<Index>(p.size()), static_cast<Index>(p.size()));
    Index k = 0;
    for (double x : p) {
        m(k, k) = x;
        ++k;
    }
    return DensityMatrix::validate(HermMatrix(m));
}

DensityMatrix plus_state() {
    return DensityMatrix::pure(CVector::Ones(2) / std::sqrt(2.0));
}

/// Block-diagonal sum_w P(w) |w><w| (x) tau(w): the classical-quantum state of a family.
CMatrix cq_state(const StateFamily &f) {
    const Index d = f.members.front().dim();
    const Index n = static_cast<Index>(f.members.size());
    CMatrix out = CMatrix::Zero(n * d, n * d);
    for (Index w = 0; w < n; ++w) {
        out.block(w * d, w * d, d, d) = f.weights[static_cast<std::size_t>(w)] * f.members[static_cast<std::size_t>(w)].matrix();
    }
    return out;
}

}  // namespace

TEST(ext_real, arithmetic_and_order) {
    const ExtReal inf = ExtReal::infinity();
    EXPECT_FALSE(inf.is_finite());
    EXPECT_FALSE((inf + 1.0).is_finite());
    EXPECT_EQ(scale(0.0, inf), ExtReal(0.0));
    EXPECT_FALSE(scale(0.5, inf).is_finite());
    EXPECT_LT(ExtReal(1e300), inf);
    EXPECT_EQ(to_string(inf), "+inf");
    EXPECT_EQ(to_string(ExtReal(0.5)), "0.5");
}

TEST(vn_entropy, frozen_values) {
    EXPECT_NEAR(vn_entropy(diag_state({0.75, 0.25})), 0.5623351446188083, 1e-14);
    EXPECT_NEAR(vn_entropy(DensityMatrix::maximally_mixed(2)), kLn2, 1e-15);
    EXPECT_NEAR(vn_entropy(DensityMatrix::maximally_mixed(5)), std::log(5.0), 1e-14);
    EXPECT_NEAR(vn_entropy(plus_state()), 0.0, 1e-15);
    CMatrix s(2, 2);
    s << 0.6, Complex(0.2, -0.1), Complex(0.2, 0.1), 0.4;
    EXPECT_NEAR(vn_entropy(DensityMatrix::validate(HermMatrix(s))), 0.5678165311528041, 1e-13);
}

TEST(vn_entropy, unitary_invariance_property) {
    Rng rng(kTestSeed);
    for (int trial = 0; trial < 20; ++trial) {
        const Index d = draw_dim(rng, 2, 5);
        const DensityMatrix rho = random_density(rng, d);
        const CMatrix u = random_unitary(rng, d);
        const DensityMatrix rot = DensityMatrix::from_unnormalized(u * rho.matrix() * u.adjoint());
        EXPECT_NEAR(vn_entropy(rho), vn_entropy(rot), 1e-11);
        EXPECT_NEAR(vn_entropy(rho), oracle_entropy(rho.matrix()), 1e-11);
        EXPECT_LE(vn_entropy(rho), std::log(static_cast<double>(d)) + 1e-12);
    }
}

TEST(q_rel_entropy, frozen_values) {
    EXPECT_NEAR(q_rel_entropy(diag_state({0.5, 0.5}), diag_state({0.75, 0.25})).value(), 0.14384103622589045, 1e-14);
    CMatrix s(2, 2), t(2, 2);
    s << 0.6, Complex(0.2, -0.1), Complex(0.2, 0.1), 0.4;
    t << 0.5, Complex(0.0, -0.1), Complex(0.0, 0.1), 0.5;
    EXPECT_NEAR(q_rel_entropy(DensityMatrix::validate(HermMatrix(s)), DensityMatrix::validate(HermMatrix(t))).value(),
                0.1051951358564524, 1e-13);
}

TEST(q_rel_entropy, support_cases) {
    const DensityMatrix zero = DensityMatrix::basis_state(2, 0);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    EXPECT_FALSE(q_rel_entropy(mixed, zero).is_finite());
    EXPECT_FALSE(q_rel_entropy(zero, DensityMatrix::basis_state(2, 1)).is_finite());
    EXPECT_NEAR(q_rel_entropy(zero, mixed).value(), kLn2, 1e-15);
    EXPECT_NEAR(q_rel_entropy(zero, zero).value(), 0.0, 1e-15);
    EXPECT_QINSTR_ERROR(q_rel_entropy(zero, DensityMatrix::maximally_mixed(3)), ErrorCode::DimensionMismatch);
}

TEST(q_rel_entropy, matches_matrix_log_oracle) {
    Rng rng(kTestSeed + 1);
    for (int trial = 0; trial < 30; ++trial) {
        const Index d = draw_dim(rng, 2, 5);
        const DensityMatrix s = random_density(rng, d);
        const DensityMatrix t = random_density(rng, d);
        const ExtReal v = q_rel_entropy(s, t);
        ASSERT_TRUE(v.is_finite());
        EXPECT_NEAR(v.value(), oracle_rel_entropy(s.matrix(), t.matrix()), 1e-9 * std::max(1.0, v.value()));
        EXPECT_GE(v.value(), -1e-12);
        EXPECT_NEAR(q_rel_entropy(s, s).value(), 0.0, 1e-11);
    }
}

TEST(q_rel_entropy, monotone_under_channels) {
    Rng rng(kTestSeed + 2);
    for (int trial = 0; trial < 40; ++trial) {
        const Index d1 = draw_dim(rng, 2, 3), d2 = draw_dim(rng, 2, 3);
        // kraus * d2 >= d1 keeps the normalizer invertible.
        const Instrument ch = random_instrument(d1, d2, 1, static_cast<std::size_t>(draw_dim(rng, 2, 3)), rng());
        const DensityMatrix s = random_density(rng, d1), t = random_density(rng, d1);
        EXPECT_LE(q_rel_entropy(total_channel(ch, s), total_channel(ch, t)).value(),
                  q_rel_entropy(s, t).value() + 1e-8);
    }
}

TEST(q_rel_entropy, monotone_under_partial_trace) {
    Rng rng(kTestSeed + 3);
    for (int trial = 0; trial < 40; ++trial) {
        const Index d1 = draw_dim(rng, 2, 3), d2 = draw_dim(rng, 2, 3);
        const DensityMatrix s = random_density(rng, d1 * d2), t = random_density(rng, d1 * d2);
        const double full = q_rel_entropy(s, t).value();
        for (Subsystem sub : {Subsystem::First, Subsystem::Second}) {
            const DensityMatrix rs = DensityMatrix::from_unnormalized(partial_trace(s.matrix(), sub, d1, d2));
            const DensityMatrix rt = DensityMatrix::from_unnormalized(partial_trace(t.matrix(), sub, d1, d2));
            EXPECT_LE(q_rel_entropy(rs, rt).value(), full + 1e-8);
        }
    }
}

TEST(c_rel_entropy, values_and_errors) {
    const ClassicalDist p({"a", "b"}, {0.5, 0.5});
    const ClassicalDist q({"a", "b"}, {0.75, 0.25});
    EXPECT_NEAR(c_rel_entropy(p, q).value(), 0.14384103622589045, 1e-15);
    EXPECT_EQ(c_rel_entropy(p, p).value(), 0.0);
    const ClassicalDist point({"a", "b"}, {1.0, 0.0});
    EXPECT_NEAR(c_rel_entropy(point, p).value(), kLn2, 1e-15);
    EXPECT_FALSE(c_rel_entropy(p, point).is_finite());
    EXPECT_QINSTR_ERROR(c_rel_entropy(p, ClassicalDist({"a", "c"}, {0.5, 0.5})), ErrorCode::LabelMismatch);
}

TEST(chi_quantity, zero_plus_ensemble) {
    const StateFamily f(ClassicalDist({"0", "+"}, {0.5, 0.5}), {DensityMatrix::basis_state(2, 0), plus_state()});
    EXPECT_NEAR(chi_quantity(f).value(), 0.4164955306996875, 1e-14);
    EXPECT_NEAR(chi_from_entropies(f), 0.4164955306996875, 1e-14);
}

TEST(chi_quantity, orthogonal_and_identical_families) {
    const StateFamily orth(ClassicalDist({"0", "1"}, {0.5, 0.5}),
                           {DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1)});
    EXPECT_NEAR(chi_quantity(orth).value(), kLn2, 1e-15);
    const StateFamily same(ClassicalDist({"x", "y"}, {0.3, 0.7}), {plus_state(), plus_state()});
    EXPECT_NEAR(chi_quantity(same).value(), 0.0, 1e-15);
}

TEST(chi_quantity, two_routes_agree_property) {
    Rng rng(kTestSeed + 4);
    for (int trial = 0; trial < 30; ++trial) {
        const Index d = draw_dim(rng, 1, 4);
        const Ensemble e = random_ensemble(rng, d, static_cast<std::size_t>(draw_dim(rng, 1, 5)));
        const StateFamily f(e.distribution(), e.states());
        const double chi = chi_quantity(f).value();
        EXPECT_NEAR(chi, chi_from_entropies(f), 1e-10);
        EXPECT_GE(chi, -1e-12);
        EXPECT_LE(chi, vn_entropy(f.barycenter()) + 1e-12);
    }
}

TEST(mixed_rel_entropy, equals_block_diagonal_relative_entropy) {
    Rng rng(kTestSeed + 5);
    for (int trial = 0; trial < 20; ++trial) {
        const Index d = draw_dim(rng, 1, 3);
        const std::size_t n = static_cast<std::size_t>(draw_dim(rng, 2, 4));
        const Ensemble a = random_ensemble(rng, d, n);
        const Ensemble b = random_ensemble(rng, d, n);
        const StateFamily f1(a.distribution(), a.states());
        const StateFamily f2(ClassicalDist(a.letters(), b.probs()), b.states());
        const double mine = mixed_rel_entropy(f1, f2).value();
        EXPECT_NEAR(mine, oracle_rel_entropy(cq_state(f1), cq_state(f2)), 1e-9);
    }
}

TEST(mixed_rel_entropy, infinite_and_mismatched) {
    const ClassicalDist w({"a", "b"}, {0.5, 0.5});
    const StateFamily f1(w, {DensityMatrix::maximally_mixed(2), DensityMatrix::basis_state(2, 0)});
    const StateFamily f2(w, {DensityMatrix::maximally_mixed(2), DensityMatrix::basis_state(2, 1)});
    EXPECT_FALSE(mixed_rel_entropy(f1, f2).is_finite());
    const StateFamily f3(ClassicalDist({"a", "c"}, {0.5, 0.5}), f1.members);
    EXPECT_QINSTR_ERROR(mixed_rel_entropy(f1, f3), ErrorCode::LabelMismatch);
    EXPECT_QINSTR_ERROR(StateFamily(w, {DensityMatrix::maximally_mixed(2)}), ErrorCode::LabelMismatch);
}

TEST(nats_to_bits, ln2_is_one_bit) {
    EXPECT_NEAR(nats_to_bits(kLn2), 1.0, 1e-15);
}
