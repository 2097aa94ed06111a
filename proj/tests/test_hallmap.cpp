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

#include "qinstr/hallmap.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qinstr;
using namespace qinstr::testing;

namespace {

const double kLn2 = std::log(2.0);
const double kPi = 3.14159265358979323846;

Ensemble zero_plus() {
    return Ensemble({"0", "+"}, {0.5, 0.5},
                    {DensityMatrix::basis_state(2, 0), DensityMatrix::pure(CVector::Ones(2) / std::sqrt(2.0))});
}

Ensemble orthogonal_pair() {
    return Ensemble({"0", "1"}, {0.5, 0.5}, {DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1)});
}

/// eta^{-1/2} through Eigen's solver.
CMatrix oracle_inv_sqrt(const CMatrix &eta) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(eta);
    const Eigen::VectorXd w = es.eigenvalues().array().rsqrt().matrix();
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

const BoundRecord &named(const BoundReport &r, const std::string &name) {
    for (const BoundRecord &b : r) {
        if (b.name == name) {
            return b;
        }
    }
    throw std::runtime_error("no record " + name);
}

}  // namespace

TEST(build_hall_instrument, orthogonal_pair_is_computational) {
    const HallInstrument h = build_hall_instrument(orthogonal_pair());
    EXPECT_EQ(h.base.outcomes(), (Labels{"0", "1"}));
    for (Index a = 0; a < 2; ++a) {
        EXPECT_MATRIX_NEAR(h.base.maps()[static_cast<std::size_t>(a)].kraus[0],
                           DensityMatrix::basis_state(2, a).matrix(), 1e-12);
    }
}

TEST(build_hall_instrument, single_letter_is_identity) {
    Rng rng(kTestSeed);
    const Ensemble e({"x"}, {1.0}, {random_density(rng, 3)});
    const HallInstrument h = build_hall_instrument(e);
    ASSERT_EQ(h.base.size(), 1u);
    EXPECT_MATRIX_NEAR(h.base.maps()[0].kraus[0], CMatrix::Identity(3, 3), 1e-10);
}

TEST(build_hall_instrument, singular_apriori_state) {
    const DensityMatrix zero = DensityMatrix::basis_state(2, 0);
    EXPECT_QINSTR_ERROR(build_hall_instrument(Ensemble({"a", "b"}, {0.5, 0.5}, {zero, zero})),
                        ErrorCode::SingularAprioriState);
}

TEST(build_hall_instrument, zero_plus_frozen_kraus_and_effects) {
    const HallInstrument h = build_hall_instrument(zero_plus());
    const double c = std::cos(kPi / 8), s = std::sin(kPi / 8);
    CMatrix m0(2, 2), mp(2, 2), e0(2, 2);
    m0 << c, -s, 0.0, 0.0;
    mp << s / std::sqrt(2.0), c / std::sqrt(2.0), s / std::sqrt(2.0), c / std::sqrt(2.0);
    e0 << 0.8535533905932738, -0.35355339059327373, -0.35355339059327373, 0.14644660940672613;
    EXPECT_MATRIX_NEAR(h.base.maps()[0].kraus[0], m0, 1e-12);
    EXPECT_MATRIX_NEAR(h.base.maps()[1].kraus[0], mp, 1e-12);
    EXPECT_MATRIX_NEAR(povm_of(h.base).effects[0].matrix(), e0, 1e-12);
}

TEST(build_hall_instrument, effects_match_sandwich_property) {
    Rng rng(kTestSeed + 1);
    for (int trial = 0; trial < 25; ++trial) {
        const Index d = draw_dim(rng, 2, 4);
        const Ensemble e = random_ensemble(rng, d, static_cast<std::size_t>(draw_dim(rng, 1, 4)));
        const HallInstrument h = build_hall_instrument(e);
        const CMatrix w = oracle_inv_sqrt(a_priori_state(e).matrix());
        const Povm m = povm_of(h.base);
        CMatrix sum = CMatrix::Zero(d, d);
        for (std::size_t a = 0; a < e.size(); ++a) {
            EXPECT_MATRIX_NEAR(m.effects[a].matrix(), e.probs()[a] * w * e.states()[a].matrix() * w, 1e-9);
            sum += m.effects[a].matrix();
        }
        EXPECT_MATRIX_NEAR(sum, CMatrix::Identity(d, d), 1e-9);
    }
}

TEST(hall_a_posteriori, apriori_input_recovers_letters) {
    Rng rng(kTestSeed + 2);
    for (int trial = 0; trial < 20; ++trial) {
        const Ensemble e = random_ensemble(rng, draw_dim(rng, 2, 3), static_cast<std::size_t>(draw_dim(rng, 2, 4)));
        const HallInstrument h = build_hall_instrument(e);
        const AposterioriFamily f = hall_a_posteriori(h, a_priori_state(e));
        for (std::size_t a = 0; a < e.size(); ++a) {
            EXPECT_NEAR(f.probs[a], e.probs()[a], 1e-9);
            EXPECT_MATRIX_NEAR(f.states[a].matrix(), e.states()[a].matrix(), 1e-9);
        }
    }
}

TEST(hall_a_posteriori, orthogonal_pair_on_plus) {
    const HallInstrument h = build_hall_instrument(orthogonal_pair());
    const AposterioriFamily f = hall_a_posteriori(h, DensityMatrix::pure(CVector::Ones(2) / std::sqrt(2.0)));
    EXPECT_MATRIX_NEAR(f.states[0].matrix(), DensityMatrix::basis_state(2, 0).matrix(), 1e-12);
    EXPECT_MATRIX_NEAR(f.states[1].matrix(), DensityMatrix::basis_state(2, 1).matrix(), 1e-12);
    EXPECT_QINSTR_ERROR(hall_a_posteriori(h, DensityMatrix::maximally_mixed(3)), ErrorCode::DimensionMismatch);
}

TEST(hall_a_posteriori, pure_inputs_stay_pure) {
    Rng rng(kTestSeed + 3);
    const HallInstrument h = build_hall_instrument(random_ensemble(rng, 3, 4));
    for (int trial = 0; trial < 20; ++trial) {
        const AposterioriFamily f = hall_a_posteriori(h, random_pure(rng, 3));
        for (std::size_t a = 0; a < f.states.size(); ++a) {
            if (!f.from_default[a]) {
                EXPECT_GE(f.states[a].purity(), 1.0 - 1e-9);
            }
        }
    }
}

TEST(dual_ensemble, identity_instrument_gives_apriori_state) {
    const Ensemble e = zero_plus();
    const DualEnsemble d = dual_ensemble(e, identity_instrument(2));
    ASSERT_EQ(d.states.size(), 1u);
    EXPECT_MATRIX_NEAR(d.states[0].matrix(), a_priori_state(e).matrix(), 1e-12);
}

TEST(dual_ensemble, orthogonal_pair_gives_basis_states) {
    const DualEnsemble d = dual_ensemble(orthogonal_pair(), computational_instrument(2));
    EXPECT_MATRIX_NEAR(d.states[0].matrix(), DensityMatrix::basis_state(2, 0).matrix(), 1e-12);
    EXPECT_MATRIX_NEAR(d.states[1].matrix(), DensityMatrix::basis_state(2, 1).matrix(), 1e-12);
}

TEST(dual_ensemble, zero_plus_frozen) {
    const DualEnsemble d = dual_ensemble(zero_plus(), computational_instrument(2));
    EXPECT_NEAR(d.probs[0], 0.75, 1e-14);
    CMatrix s1(2, 2);
    s1 << 0.14644660940672627, 0.35355339059327384, 0.35355339059327384, 0.8535533905932736;
    EXPECT_MATRIX_NEAR(d.states[1].matrix(), s1, 1e-12);
    EXPECT_NEAR(d.states[0].matrix()(0, 0).real(), 0.9511844635310913, 1e-12);
}

TEST(dual_ensemble, drops_dead_outcomes_and_checks_dims) {
    const Ensemble e({"z"}, {1.0}, {DensityMatrix::basis_state(2, 0)});
    const DualEnsemble d = dual_ensemble(e, computational_instrument(2));
    EXPECT_EQ(d.labels(), (Labels{"0"}));
    EXPECT_QINSTR_ERROR(dual_ensemble(e, computational_instrument(3)), ErrorCode::DimensionMismatch);
}

TEST(verify_duality, zero_plus_both_routes) {
    const BoundReport r = verify_duality(zero_plus(), computational_instrument(2));
    EXPECT_TRUE(all_pass(r));
    EXPECT_NEAR(named(r, "duality_classical_info").lhs.value(), 0.21576155433883565, 1e-12);
    EXPECT_NEAR(named(r, "duality_classical_info").rhs.value(), 0.21576155433883565, 1e-12);
}

TEST(verify_duality, property) {
    Rng rng(kTestSeed + 4);
    for (int trial = 0; trial < 40; ++trial) {
        const Index d1 = draw_dim(rng, 2, 3);
        const Ensemble e = random_ensemble(rng, d1, static_cast<std::size_t>(draw_dim(rng, 2, 4)));
        const Instrument ins = random_instrument(d1, draw_dim(rng, 2, 3), static_cast<std::size_t>(draw_dim(rng, 2, 4)),
                                                 static_cast<std::size_t>(draw_dim(rng, 1, 2)), rng());
        for (const BoundRecord &b : verify_duality(e, ins)) {
            EXPECT_TRUE(b.pass) << b.name << " " << to_string(b.slack);
        }
    }
}

TEST(hall_bound, orthogonal_tight_and_zero_plus_value) {
    const BoundRecord orth = hall_bound(orthogonal_pair(), computational_instrument(2));
    EXPECT_NEAR(orth.lhs.value(), kLn2, 1e-12);
    EXPECT_NEAR(orth.rhs.value(), kLn2, 1e-12);
    const BoundRecord zp = hall_bound(zero_plus(), computational_instrument(2));
    EXPECT_NEAR(zp.rhs.value(), 0.41649553069968703, 1e-12);
    EXPECT_TRUE(zp.pass);
}

TEST(hall_bound, identical_letters) {
    const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    const BoundRecord b = hall_bound(Ensemble({"a", "b"}, {0.4, 0.6}, {rho, rho}), computational_instrument(2));
    EXPECT_NEAR(b.lhs.value(), 0.0, 1e-14);
    EXPECT_GE(b.rhs.value(), -1e-14);
}

TEST(new_bound, orthogonal_equals_holevo) {
    const NewBoundResult r = new_bound(orthogonal_pair(), computational_instrument(2));
    EXPECT_NEAR(r.d_term, 0.0, 1e-12);
    EXPECT_NEAR(r.value, kLn2, 1e-12);
    EXPECT_TRUE(all_pass(r.report));
}

TEST(new_bound, identical_letters_everything_zero) {
    Rng rng(kTestSeed + 5);
    const DensityMatrix rho = random_density(rng, 2);
    const NewBoundResult r = new_bound(Ensemble({"a", "b"}, {0.5, 0.5}, {rho, rho}), random_instrument(2, 2, 3, 2, 9));
    EXPECT_NEAR(r.chi, 0.0, 1e-12);
    EXPECT_NEAR(r.d_term, 0.0, 1e-10);
    EXPECT_TRUE(all_pass(r.report));
}

TEST(new_bound, property_sandwich_and_closed_form) {
    Rng rng(kTestSeed + 6);
    bool strict = false;
    for (int trial = 0; trial < 40; ++trial) {
        const Index d1 = draw_dim(rng, 2, 3);
        const Ensemble e = random_ensemble(rng, d1, static_cast<std::size_t>(draw_dim(rng, 2, 4)));
        const Instrument ins = random_instrument(d1, draw_dim(rng, 2, 3), static_cast<std::size_t>(draw_dim(rng, 2, 4)),
                                                 static_cast<std::size_t>(draw_dim(rng, 1, 2)), rng());
        const NewBoundResult r = new_bound(e, ins);
        for (const BoundRecord &b : r.report) {
            EXPECT_TRUE(b.pass) << b.name << " " << to_string(b.slack);
        }
        EXPECT_NEAR(r.d_term, d_term_generic(e, ins), 1e-9);
        strict = strict || r.d_term > 1e-6;
    }
    EXPECT_TRUE(strict);
}

TEST(new_bound, singular_apriori_state) {
    const DensityMatrix zero = DensityMatrix::basis_state(2, 0);
    const Ensemble e({"a"}, {1.0}, {zero});
    EXPECT_QINSTR_ERROR(new_bound(e, computational_instrument(2)), ErrorCode::SingularAprioriState);
    EXPECT_QINSTR_ERROR(hall_bound(e, computational_instrument(2)), ErrorCode::SingularAprioriState);
    EXPECT_QINSTR_ERROR(verify_duality(e, computational_instrument(2)), ErrorCode::SingularAprioriState);
}
