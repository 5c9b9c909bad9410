/**************************************************************************
 * test_design.cpp
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
#include <crcodes/design.hpp>

using namespace crcodes;

// Expected lambdas below come from brute-force cover counts in
// tests/oracles/code_oracle.py.

TEST(Design, ExtendedHammingTwoDesign) {
    auto words = codewords_by_weight(build_ext_ham8_2());
    EXPECT_EQ(words[4].size(), 14u);
    EXPECT_EQ(design_lambda(2, 8, words[4], 2), 3u);
    EXPECT_EQ(design_lambda(2, 8, words[4], 3), 1u);
    EXPECT_EQ(design_lambda(2, 8, words[4], 1), 7u);
}

TEST(Design, HammingOneDesign) {
    auto words = codewords_by_weight(build_ham4_3());
    EXPECT_EQ(design_lambda(3, 4, words[3], 1), 3u);
}

TEST(Design, CompleteDesign) {
    std::vector<std::vector<Element>> blocks;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            std::vector<Element> b(4, 0);
            b[i] = b[j] = 1;
            blocks.push_back(b);
        }
    EXPECT_EQ(design_lambda(2, 4, blocks, 1), 3u);
    blocks.pop_back();
    EXPECT_FALSE(design_lambda(2, 4, blocks, 1)); // corrupted: no longer balanced
}

TEST(Design, GolayWeightSixThreeDesign) {
    auto words = codewords_by_weight(build_ext_golay12_3());
    EXPECT_EQ(words[6].size(), 264u);
    EXPECT_EQ(design_lambda(3, 12, words[6], 3), 3u);
    EXPECT_EQ(design_lambda(3, 12, words[6], 2), 15u);
    auto corrupted = words[6];
    corrupted.erase(corrupted.begin());
    EXPECT_FALSE(design_lambda(3, 12, corrupted, 3));
}

TEST(Design, Errors) {
    std::vector<std::vector<Element>> mixed{{1, 1, 0}, {1, 1, 1}};
    try {
        design_lambda(2, 3, mixed, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::mixed_weight_input);
    }
    std::vector<std::vector<Element>> none;
    try {
        design_lambda(2, 40, none, 20); // C(40,20) > 2^22
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::too_large_to_enumerate);
    }
}

TEST(Design, LambdaI) {
    DesignParams ham8{2, 8, 4, 3, 2};
    EXPECT_EQ(lambda_i(ham8, 1), 7);
    EXPECT_EQ(lambda_i(ham8, 2), 3);
    EXPECT_EQ(lambda_i(ham8, 0), 14);
    DesignParams golay{3, 12, 6, 3, 3};
    EXPECT_EQ(lambda_i(golay, 0), 264);
    EXPECT_EQ(lambda_i(golay, 2), 15);
    EXPECT_EQ(lambda_i(golay, 3), 3);
}

TEST(Design, LambdaIMatchesDirectCounts) {
    // lambda_i counts blocks covering a fixed weight-i vector
    auto words = codewords_by_weight(build_ext_golay12_3())[6];
    const DesignParams p{3, 12, 6, *design_lambda(3, 12, words, 3), 3};
    for (std::size_t i = 1; i <= 3; ++i) {
        auto direct = design_lambda(3, 12, words, i);
        ASSERT_TRUE(direct);
        EXPECT_EQ(lambda_i(p, i), Rational(*direct)) << i;
    }
    EXPECT_EQ(lambda_i(p, 0), Rational(words.size()));
}

TEST(Design, CrDesigns) {
    auto ham8 = verify_cr_designs(build_ext_ham8_2(), true);
    EXPECT_EQ(ham8.packing_radius, 1u);
    EXPECT_TRUE(ham8.all_hold());
    bool two_design = false;
    for (const auto& c : ham8.checks)
        if (c.weight == 4 && c.strength == 2) two_design = c.lambda == std::optional<std::uint64_t>(3);
    EXPECT_TRUE(two_design);

    auto golay = verify_cr_designs(build_ext_golay12_3(), true);
    EXPECT_TRUE(golay.all_hold());
    bool three_design = false;
    for (const auto& c : golay.checks)
        if (c.weight == 6 && c.strength == 3) three_design = c.lambda == std::optional<std::uint64_t>(3);
    EXPECT_TRUE(three_design);

    try {
        verify_cr_designs(build_ham4_3(), false);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_completely_regular);
    }
}
