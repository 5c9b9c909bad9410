/**************************************************************************
 * test_coset.cpp
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
#include <crcodes/coset.hpp>

using namespace crcodes;

namespace {

LinearCode code(std::uint32_t q, std::initializer_list<std::initializer_list<unsigned>> rows) {
    return LinearCode(Matrix::from_rows(make_field(q), rows));
}

} // namespace

TEST(Coset, HammingTable) {
    CosetTable t(build_ham4_3());
    EXPECT_EQ(t.size(), 9u);
    EXPECT_EQ(t.covering_radius(), 1u);
    EXPECT_EQ(t.leader_weight_counts(), (std::vector<std::uint64_t>{1, 8}));
    EXPECT_EQ(t.subconstituent_sizes(), (std::vector<std::uint64_t>{9, 72}));
}

TEST(Coset, SubconstituentSizes) {
    // tests/oracles/code_oracle.py
    EXPECT_EQ(CosetTable(code(5, {{1, 2}})).subconstituent_sizes(), (std::vector<std::uint64_t>{5, 20}));
    EXPECT_EQ(CosetTable(build_ext_ham8_2()).subconstituent_sizes(), (std::vector<std::uint64_t>{16, 128, 112}));
}

TEST(Coset, CoveringRadii) {
    EXPECT_EQ(CosetTable(build_ext_ham8_2()).covering_radius(), 2u);
    EXPECT_EQ(CosetTable(build_ext_golay12_3()).covering_radius(), 3u);
    EXPECT_EQ(CosetTable(build_ext_golay24_2()).covering_radius(), 4u);
    // full space: one coset
    CosetTable full(code(3, {{1, 0}, {0, 1}}));
    EXPECT_EQ(full.size(), 1u);
    EXPECT_EQ(full.covering_radius(), 0u);
}

TEST(Coset, LeadersHaveMinimalWeight) {
    auto c = build_ext_golay12_3();
    CosetTable t(c);
    for (std::uint64_t s = 0; s < t.size(); s += 7) {
        const auto r = t.representative(s);
        EXPECT_EQ(weight(r), t.leader_weight(s));
        EXPECT_EQ(t.syndrome(r), s);
        EXPECT_EQ(brute_force_distance(c, r), t.leader_weight(s));
    }
}

TEST(Coset, DistanceToCode) {
    auto g = build_ext_golay12_3();
    CosetTable t(g);
    EXPECT_EQ(t.distance_to_code(g.encode(std::vector<Element>{1, 0, 2, 2, 0, 1})), 0u);
    std::vector<Element> e1(12, 0);
    e1[5] = 2;
    EXPECT_EQ(CosetTable(build_ham4_3()).distance_to_code(std::vector<Element>{0, 0, 1, 0}), 1u);
    EXPECT_EQ(t.distance_to_code(e1), 1u);
    std::vector<Element> v(12, 0);
    v[0] = v[1] = 1;
    EXPECT_EQ(t.distance_to_code(v), 2u); // brute force: tests/oracles/code_oracle.py
    try {
        t.distance_to_code(std::vector<Element>{1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::dimension_mismatch);
    }
}

TEST(Coset, TooManyCosets) {
    // q^(n-k) = 2^25
    try {
        CosetTable t(code(2, {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::too_many_cosets);
    }
}

TEST(Coset, CompletelyRegularArrays) {
    auto ham = is_completely_regular(build_ham4_3());
    ASSERT_TRUE(ham);
    EXPECT_EQ(ham->intersection_array.to_string(), "{8;1}");
    auto golay = is_completely_regular(build_ext_golay12_3());
    ASSERT_TRUE(golay);
    EXPECT_EQ(golay->intersection_array.to_string(), "{24,22,20;1,2,12}");
    auto tetra = is_completely_regular(build_tetra_2r(4));
    ASSERT_TRUE(tetra);
    EXPECT_EQ(tetra->intersection_array.to_string(), "{12,3;1,12}");
    auto ham8 = is_completely_regular(build_ext_ham8_2());
    ASSERT_TRUE(ham8);
    EXPECT_EQ(ham8->intersection_array.to_string(), "{8,7;1,8}"); // brute force: tests/oracles/ia_oracle.py
}

TEST(Coset, IntersectionArrayFromBc) {
    auto ia = IntersectionArray::from_bc({8, 7}, {1, 8}, 8);
    EXPECT_EQ(ia.a, (std::vector<std::uint64_t>{0, 0, 0}));
    EXPECT_EQ(ia.to_string(), "{8,7;1,8}");
}

TEST(Coset, NonCompletelyRegularHasWitnesses) {
    // [6,3]_2 with cosets of equal leader weight but different distance rows
    auto c = code(2, {{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1}});
    CosetTable t(c);
    CosetDistances d(t, 1);
    auto rep = check_regularity(t, d);
    EXPECT_FALSE(rep.completely_regular());
    EXPECT_TRUE(rep.criteria_agree());
    ASSERT_TRUE(rep.distance_witness);
    ASSERT_TRUE(rep.neighbor_witness);
    const auto w = *rep.distance_witness;
    EXPECT_EQ(t.leader_weight(w.first), t.leader_weight(w.second));
    const auto r1 = d.row(w.first), r2 = d.row(w.second);
    EXPECT_FALSE(std::equal(r1.begin(), r1.end(), r2.begin()));
    EXPECT_FALSE(is_completely_regular(c));
}

TEST(Coset, InvarianceSpotCheck) {
    for (const auto& c : {build_ext_golay12_3(), build_tetra_2r(8), direct_sum_power(build_ham4_3(), 2)}) {
        CosetTable t(c);
        CosetDistances d(t, 2);
        EXPECT_EQ(spot_check_coset_invariance(t, d, 300, 11), 0u);
    }
}

TEST(Coset, CoveringRadiusAgainstRandomSamples) {
    auto c = build_ext_golay12_3();
    CosetTable t(c);
    std::mt19937_64 rng(3);
    std::size_t best = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto v = random_vector(c.field(), c.n(), rng);
        const auto dist = brute_force_distance(c, v);
        EXPECT_LE(dist, t.covering_radius());
        EXPECT_EQ(dist, t.distance_to_code(v));
        best = std::max(best, dist);
    }
    EXPECT_EQ(best, t.covering_radius());
}

TEST(Coset, DistancesIndependentOfWorkers) {
    auto c = build_tetra_2r(16);
    CosetTable t(c);
    CosetDistances one(t, 1), four(t, 4);
    for (std::uint64_t s = 0; s < t.size(); ++s) {
        const auto a = one.row(s), b = four.row(s);
        EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
    }
}
