/**************************************************************************
 * test_properties.cpp
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

#include "../support/property_checks.hpp"

using namespace crcodes;

TEST(Properties, RandomCodes) {
    const auto tally = props::run_property_suite(250, 20240601);
    EXPECT_EQ(tally.samples, 250u);
    for (const auto& v : tally.violations) ADD_FAILURE() << v;
    // the sample should exercise both outcomes
    EXPECT_GT(tally.completely_regular, 0u);
    EXPECT_LT(tally.completely_regular, tally.samples);
}

TEST(Properties, CatalogCodes) {
    props::PropertyTally tally;
    for (const auto& e : catalog_entries()) {
        if (e.stretch) continue;
        props::check_code_properties(build(e.family, e.q, e.copies), 5, tally);
    }
    for (const auto& v : tally.violations) ADD_FAILURE() << v;
    EXPECT_EQ(tally.completely_regular, tally.samples);
}

TEST(Properties, RandomVectorsAgainstBruteForce) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const auto c = props::random_code(rng);
        const CosetTable t(c);
        for (int j = 0; j < 25; ++j) {
            const auto v = random_vector(c.field(), c.n(), rng);
            EXPECT_EQ(t.distance_to_code(v), brute_force_distance(c, v));
        }
    }
}
