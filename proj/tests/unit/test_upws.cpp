/**************************************************************************
 * test_upws.cpp
 *
 * Copyright 2026 The crcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <gtest/gtest.h>

#include <crcodes/catalog.hpp>
#include <crcodes/upws.hpp>

using namespace crcodes;

namespace {

std::optional<PackingCoefficients> solve(const LinearCode& c) {
    CosetTable t(c);
    CosetDistances d(t, 1);
    return solve_upws(t, d);
}

std::vector<Rational> rats(std::initializer_list<Rational> r) { return r; }

} // namespace

TEST(Upws, PerfectHamming) {
    auto b = solve(build_ham4_3());
    ASSERT_TRUE(b);
    EXPECT_EQ(b->betas, rats({1, 1}));
    EXPECT_TRUE(sphere_packing_check(build_ham4_3(), *b));
}

TEST(Upws, ExtendedHamming) {
    auto b = solve(build_ext_ham8_2());
    ASSERT_TRUE(b);
    EXPECT_TRUE(b->unique());
    EXPECT_EQ(b->betas, rats({1, 1, Rational(1, 4)}));
    EXPECT_EQ(packing_volume(8, 2, b->betas), 16);
    EXPECT_TRUE(sphere_packing_check(build_ext_ham8_2(), *b));
    auto perturbed = *b;
    perturbed.betas[2] = Rational(1, 3);
    EXPECT_FALSE(sphere_packing_check(build_ext_ham8_2(), perturbed));
}

TEST(Upws, ExtendedTernaryGolay) {
    auto b = solve(build_ext_golay12_3());
    ASSERT_TRUE(b);
    EXPECT_EQ(b->betas.back(), Rational(1, 4));
}

TEST(Upws, ClosedForm) {
    auto ham8 = is_completely_regular(build_ext_ham8_2());
    ASSERT_TRUE(ham8);
    EXPECT_EQ(beta_cr_closed_form(8, 4, 2, 4, 2, ham8->profile).back(), Rational(1, 4));
    auto golay = is_completely_regular(build_ext_golay12_3());
    ASSERT_TRUE(golay);
    EXPECT_EQ(beta_cr_closed_form(12, 6, 3, 6, 3, golay->profile).back(), Rational(1, 4));
    auto ham = is_completely_regular(build_ham4_3());
    ASSERT_TRUE(ham);
    EXPECT_EQ(beta_cr_closed_form(4, 2, 3, 3, 1, ham->profile), rats({1, 1}));
}

TEST(Upws, ClosedFormMatchesSolverOnCoveredShapes) {
    for (const auto& e : catalog_entries()) {
        if (e.stretch) continue;
        auto c = build(e.family, e.q, e.copies);
        auto cr = is_completely_regular(c);
        ASSERT_TRUE(cr) << e.name;
        auto solved = solve(c);
        ASSERT_TRUE(solved) << e.name;
        const std::size_t d = min_distance(c), rho = cr->intersection_array.rho;
        const std::size_t e_pack = (d - 1) / 2;
        const bool covered = e_pack == rho || d + 2 >= 2 * rho;
        if (!covered) {
            try {
                beta_cr_closed_form(c.n(), c.k(), c.q(), d, rho, cr->profile);
                FAIL() << e.name;
            } catch (const Error& err) {
                EXPECT_EQ(err.code(), Errc::case_not_covered) << e.name;
            }
            continue;
        }
        EXPECT_EQ(beta_cr_closed_form(c.n(), c.k(), c.q(), d, rho, cr->profile), solved->betas) << e.name;
    }
}

TEST(Upws, InconsistentSystem) {
    std::vector<std::vector<std::uint64_t>> rows{{1, 0}, {2, 0}};
    EXPECT_FALSE(solve_upws(rows, 1));
    std::vector<std::vector<std::uint64_t>> one{{1, 2}};
    auto b = solve_upws(one, 1);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->free_dimension, 1u);
}

TEST(Upws, ExternalDistance) {
    EXPECT_EQ(external_distance(build_ham4_3()), 1u);
    EXPECT_EQ(external_distance(build_ext_golay12_3()), 3u);
    EXPECT_EQ(external_distance(build_ext_ham8_2()), 2u);
}
