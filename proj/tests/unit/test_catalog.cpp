/**************************************************************************
 * test_catalog.cpp
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

using namespace crcodes;

TEST(Catalog, Rep2) {
    auto c = build_rep2(5);
    EXPECT_EQ(c.generator(), Matrix::from_rows(make_field(5), {{1, 2}}));
    EXPECT_TRUE(is_self_dual(c));
    try {
        build_rep2(3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::construction_unavailable);
    }
}

TEST(Catalog, Tetra) {
    auto c = build_tetra_2r(4);
    EXPECT_EQ(c.n(), 4u);
    EXPECT_EQ(min_distance(c), 3u);
    EXPECT_EQ(weight_distribution(c).nonzero_weights(), (std::vector<std::size_t>{3, 4}));
    EXPECT_TRUE(is_antipodal(weight_distribution(c)));
    EXPECT_THROW(build_tetra_2r(2), Error);
    EXPECT_THROW(build_tetra_2r(9), Error);
}

TEST(Catalog, NamedBuilds) {
    auto c = build_named("ham4_3_x3");
    EXPECT_EQ(c.n(), 12u);
    EXPECT_EQ(weight_distribution(c).nonzero_weights(), (std::vector<std::size_t>{3, 6, 9}));
    EXPECT_EQ(build_named("rep2_q13_j2").n(), 4u);
    EXPECT_EQ(build_named("tetra_2r_q32").q(), 32u);
    EXPECT_THROW(build_named("nope"), Error);
    EXPECT_THROW(build_named("rep2_q5_j0"), Error);
}

TEST(Catalog, CorruptedGeneratorFailsLoudly) {
    auto f = make_field(3);
    auto g = Matrix::from_rows(f, {{1, 1, 1, 0}, {0, 1, 1, 1}});
    try {
        detail::checked_code(g, 4, 2, 3, "corrupt");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::construction_unavailable);
    }
}

TEST(Catalog, DirectSumIa) {
    auto base = IntersectionArray::from_bc({8}, {1}, 8);
    EXPECT_EQ(direct_sum_ia(base, 3).to_string(), "{24,16,8;1,2,3}");
    EXPECT_EQ(direct_sum_ia(base, 1), base);
    auto rep = IntersectionArray::from_bc({8}, {2}, 8);
    EXPECT_EQ(direct_sum_ia(rep, 2).to_string(), "{16,8;2,4}");
    EXPECT_THROW(direct_sum_ia(base, 0), Error);
}

TEST(Catalog, DirectSumIaMatchesComputed) {
    for (const auto& base : {build_rep2(5), build_ham4_3()}) {
        auto base_ia = is_completely_regular(base);
        ASSERT_TRUE(base_ia);
        for (std::size_t j : {2u, 3u}) {
            auto computed = is_completely_regular(direct_sum_power(base, j));
            ASSERT_TRUE(computed);
            EXPECT_EQ(direct_sum_ia(base_ia->intersection_array, j), computed->intersection_array);
        }
    }
}

TEST(Catalog, VerifyAll) {
    auto rep = verify_catalog(1);
    ASSERT_EQ(rep.entries.size(), catalog_entries().size());
    for (const auto& e : rep.entries) {
        EXPECT_TRUE(e.passed()) << e.name;
        for (const auto& c : e.checks) EXPECT_TRUE(c.passed) << e.name << ": " << c.name << " " << c.detail;
    }
}

TEST(Catalog, AntipodalEntries) {
    for (const auto& e : catalog_entries()) {
        const bool expected = e.family == "tetra_2r" || e.family == "ext_ham8_2" || e.family == "ext_golay12_3" ||
                              e.family == "ext_golay24_2" || e.family == "rep2";
        EXPECT_EQ(e.expected.antipodal, expected) << e.name;
    }
}

TEST(Catalog, GolayTwentyFourArray) {
    auto v = verify_entry(catalog_entries().back(), 0);
    ASSERT_TRUE(v.intersection_array);
    EXPECT_EQ(v.intersection_array->to_string(), "{24,23,22,21;1,2,3,24}");
}
