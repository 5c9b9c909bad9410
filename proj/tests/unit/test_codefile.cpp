/**************************************************************************
 * test_codefile.cpp
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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <crcodes/catalog.hpp>
#include <crcodes/codefile.hpp>
#include <crcodes/report.hpp>

using namespace crcodes;

namespace {

Errc parse_error(std::string_view text) {
    try {
        parse_code(text);
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::invalid_argument;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(CodeFile, RoundTrip) {
    for (const auto& e : catalog_entries()) {
        const auto c = build(e.family, e.q, e.copies);
        const auto text = serialize_code(c, e.name);
        const auto back = parse_code(text);
        EXPECT_EQ(back, c) << e.name;
        EXPECT_EQ(serialize_code(back, e.name), text) << e.name;
    }
}

TEST(CodeFile, CommentsBlankLinesAndCrlf) {
    auto c = parse_code("# ternary Hamming\n\n3 4 2\r\n1 1 1 0\n# middle\n0 1 2 1\n");
    EXPECT_EQ(c, build_ham4_3());
}

TEST(CodeFile, Malformed) {
    EXPECT_EQ(parse_error(""), Errc::malformed_file);
    EXPECT_EQ(parse_error("3 4\n1 1 1 0\n"), Errc::malformed_file);
    EXPECT_EQ(parse_error("3 4 2\n1 1 1 0\n"), Errc::malformed_file);
    EXPECT_EQ(parse_error("3 4 2\n1 1 1 0\n0 1 2\n"), Errc::malformed_file);
    EXPECT_EQ(parse_error("3 4 2\n1 1 1 0\n0 1 2 3\n"), Errc::malformed_file);
    EXPECT_EQ(parse_error("6 2 1\n1 1\n"), Errc::malformed_file);
    EXPECT_EQ(parse_error("3 4 2\n1 1 1 0\n2 2 2 0\n"), Errc::malformed_file);
    EXPECT_EQ(parse_error("3 4 2\n1 1 x 0\n0 1 2 1\n"), Errc::malformed_file);
    EXPECT_EQ(parse_error("3 4 1\n-1 1 1 0\n"), Errc::malformed_file);
}

TEST(CodeFile, DataFilesMatchCatalog) {
    for (const auto& e : catalog_entries()) {
        const std::string path = std::string(CRCODES_DATA_DIR) + "/" + e.name + ".code";
        EXPECT_EQ(read_code_file(path), build(e.family, e.q, e.copies)) << path;
        EXPECT_EQ(slurp(path), serialize_code(build(e.family, e.q, e.copies), e.name)) << path;
    }
}

TEST(Report, HammingAnalysis) {
    auto r = analyze(build_ham4_3(), {1, false});
    EXPECT_EQ(r.rho, 1u);
    EXPECT_TRUE(r.self_dual);
    ASSERT_TRUE(r.regularity.intersection_array);
    EXPECT_EQ(r.regularity.intersection_array->to_string(), "{8;1}");
    auto j = to_json(r);
    EXPECT_EQ(j["intersection_array"], "{8;1}");
    EXPECT_EQ(j["self_dual"], true);
    EXPECT_EQ(j["upws"]["betas"], Json::array({"1/1", "1/1"}));
    EXPECT_FALSE(j.contains("timings"));
    EXPECT_TRUE(to_json(r, true).contains("timings"));
}

TEST(Report, GolayAnalysis) {
    auto j = to_json(analyze(build_ext_golay12_3(), {2, false}));
    EXPECT_EQ(j["intersection_array"], "{24,22,20;1,2,12}");
    EXPECT_EQ(j["s"], 3);
    EXPECT_EQ(j["upws"]["closed_form"], "match");
    EXPECT_EQ(j["designs"]["all_hold"], true);
}

TEST(Report, StableKeyOrderAndWorkerIndependence) {
    const auto c = build_tetra_2r(8);
    const auto a = to_json(analyze(c, {1, false})).dump(2);
    const auto b = to_json(analyze(c, {4, false})).dump(2);
    EXPECT_EQ(a, b);
    const std::vector<std::string> keys{"parameters", "field_modulus", "self_dual", "antipodal",
                                        "weight_distribution", "dual_weights", "s", "rho", "is_CR",
                                        "intersection_array", "subconstituents", "regularity", "upws",
                                        "designs", "structural_checks"};
    std::vector<std::string> got;
    const auto j = to_json(analyze(c, {1, false}));
    for (const auto& [k, v] : j.items()) got.push_back(k);
    EXPECT_EQ(got, keys);
}

TEST(Report, NonCompletelyRegular) {
    auto c = read_code_file(std::string(CRCODES_DATA_DIR) + "/non_cr_6_3_2.code");
    auto r = analyze(c, {1, false});
    EXPECT_FALSE(r.regularity.completely_regular());
    EXPECT_FALSE(r.witness_vectors.empty());
    auto j = to_json(r);
    EXPECT_EQ(j["is_CR"], false);
    EXPECT_TRUE(j["intersection_array"].is_null());
    EXPECT_FALSE(j["regularity"]["distance_witness"].is_null());
    EXPECT_EQ(j["designs"]["status"], "not-completely-regular");
}
