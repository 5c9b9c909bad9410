/**************************************************************************
 * catalog.hpp
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

#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "coset.hpp"
#include "design.hpp"
#include "error.hpp"
#include "upws.hpp"

namespace crcodes {

/// Parameters a catalog code must reproduce.
struct Expected {
    std::size_t n = 0, k = 0, d = 0;
    std::size_t rho = 0;
    std::vector<std::size_t> weights;
    /// Absent when no published array exists; the computed one is reported.
    std::optional<IntersectionArray> intersection_array;
    bool antipodal = false;
};

struct CatalogEntry {
    std::string name;
    std::string family; // rep2, ham4_3, tetra_2r, ext_ham8_2, ext_golay12_3, ext_golay24_2
    std::uint32_t q = 2;
    std::size_t copies = 1;
    Expected expected;
    bool stretch = false; // beyond the rho <= 3 classification
};

namespace detail {

/// Builds a code from a published generator and re-derives (n, k, d, self-duality).
inline LinearCode checked_code(const Matrix& g, std::size_t n, std::size_t k, std::size_t d, const std::string& what) {
    LinearCode c(g);
    const std::size_t got_d = min_distance(c);
    if (c.n() != n || c.k() != k || got_d != d || !is_self_dual(c))
        throw Error(Errc::construction_unavailable,
                    what + ": generator does not give a self-dual [" + std::to_string(n) + "," + std::to_string(k) +
                        "," + std::to_string(d) + "] code (got [" + std::to_string(c.n()) + "," +
                        std::to_string(c.k()) + "," + std::to_string(got_d) + "])");
    return c;
}

inline Matrix systematic(FieldPtr f, const std::vector<std::vector<unsigned>>& parity) {
    const std::size_t k = parity.size();
    Matrix g(f, k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = 1;
        for (std::size_t j = 0; j < k; ++j) g(i, k + j) = static_cast<Element>(parity[i][j]);
    }
    return g;
}

} // namespace detail

/// [2,1,2]_q with generator (1 alpha), alpha^2 = -1 the smallest such element.
inline LinearCode build_rep2(std::uint32_t q) {
    FieldPtr f = make_field(q);
    const auto alpha = f->sqrt_of_minus_one();
    if (!alpha)
        throw Error(Errc::construction_unavailable, "-1 is not a square in GF(" + std::to_string(q) + ")");
    return LinearCode(Matrix(f, 1, 2, {1, *alpha}));
}

/// Ternary Hamming [4,2,3]_3.
inline LinearCode build_ham4_3() {
    return detail::checked_code(Matrix::from_rows(make_field(3), {{1, 1, 1, 0}, {0, 1, 2, 1}}), 4, 2, 3, "ham4_3");
}

/// [4,2,3]_q, q = 2^r with r > 1: rows (1,1,1,1), (0,1,alpha,1+alpha), alpha the smallest element outside {0,1}.
inline LinearCode build_tetra_2r(std::uint32_t q) {
    FieldPtr f = make_field(q);
    if (f->p() != 2 || f->m() < 2)
        throw Error(Errc::construction_unavailable, "tetra_2r needs q = 2^r with r > 1");
    const Element alpha = 2;
    const Element beta = f->add(1, alpha);
    return detail::checked_code(Matrix(f, 2, 4, {1, 1, 1, 1, 0, 1, alpha, beta}), 4, 2, 3, "tetra_2r");
}

/// Extended binary Hamming [8,4,4]_2 (first-order Reed-Muller generator).
inline LinearCode build_ext_ham8_2() {
    return detail::checked_code(Matrix::from_rows(make_field(2), {{1, 1, 1, 1, 1, 1, 1, 1},
                                                                   {0, 0, 0, 0, 1, 1, 1, 1},
                                                                   {0, 0, 1, 1, 0, 0, 1, 1},
                                                                   {0, 1, 0, 1, 0, 1, 0, 1}}),
                                8, 4, 4, "ext_ham8_2");
}

/// Extended ternary Golay [12,6,6]_3 = [I | B] with the Paley-type B.
inline LinearCode build_ext_golay12_3() {
    return detail::checked_code(detail::systematic(make_field(3), {{0, 1, 1, 1, 1, 1},
                                                                    {1, 0, 1, 2, 2, 1},
                                                                    {1, 1, 0, 1, 2, 2},
                                                                    {1, 2, 1, 0, 1, 2},
                                                                    {1, 2, 2, 1, 0, 1},
                                                                    {1, 1, 2, 2, 1, 0}}),
                                12, 6, 6, "ext_golay12_3");
}

/// Extended binary Golay [24,12,8]_2 = [I | A], A bordered from the quadratic residues mod 11.
inline LinearCode build_ext_golay24_2() {
    return detail::checked_code(detail::systematic(make_field(2), {{0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                                                    {1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0},
                                                                    {1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1},
                                                                    {1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0},
                                                                    {1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0},
                                                                    {1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0},
                                                                    {1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
                                                                    {1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1},
                                                                    {1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1},
                                                                    {1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0},
                                                                    {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
                                                                    {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1}}),
                                24, 12, 8, "ext_golay24_2");
}

/// Builds a family member; rep2 and ham4_3 take a copy count for direct sums.
inline LinearCode build(std::string_view family, std::uint32_t q = 0, std::size_t copies = 1) {
    if (family == "rep2") return direct_sum_power(build_rep2(q), copies);
    if (family == "ham4_3") return direct_sum_power(build_ham4_3(), copies);
    if (family == "tetra_2r") return build_tetra_2r(q);
    if (family == "ext_ham8_2") return build_ext_ham8_2();
    if (family == "ext_golay12_3") return build_ext_golay12_3();
    if (family == "ext_golay24_2") return build_ext_golay24_2();
    throw Error(Errc::invalid_argument, "unknown catalog family '" + std::string(family) + "'");
}

/**
 * Intersection array of the direct sum of j copies of a covering-radius-1
 * completely regular code: {j b0, (j-1) b0, ..., b0; c1, 2 c1, ..., j c1}.
 */
inline IntersectionArray direct_sum_ia(const IntersectionArray& base, std::size_t j) {
    if (base.rho != 1) throw Error(Errc::invalid_argument, "direct_sum_ia needs a covering-radius-1 array");
    if (j == 0) throw Error(Errc::invalid_argument, "direct sum needs at least one copy");
    const std::uint64_t degree = j * (base.a[0] + base.b[0]);
    std::vector<std::uint64_t> b, c;
    for (std::size_t i = 0; i < j; ++i) {
        b.push_back((j - i) * base.b[0]);
        c.push_back((i + 1) * base.c[0]);
    }
    return IntersectionArray::from_bc(std::move(b), std::move(c), degree);
}

/// The classification's codes with their published parameters.
inline std::vector<CatalogEntry> catalog_entries() {
    auto ia = [](std::vector<std::uint64_t> b, std::vector<std::uint64_t> c, std::size_t n, std::uint32_t q) {
        return IntersectionArray::from_bc(std::move(b), std::move(c), n * (q - 1));
    };
    std::vector<CatalogEntry> out;
    for (std::size_t j = 1; j <= 3; ++j) {
        std::vector<std::uint64_t> b, c;
        for (std::size_t i = 0; i < j; ++i) {
            b.push_back(2 * (j - i) * 4);
            c.push_back(2 * (i + 1));
        }
        std::vector<std::size_t> weights;
        for (std::size_t i = 1; i <= j; ++i) weights.push_back(2 * i);
        out.push_back({"rep2_q5_j" + std::to_string(j), "rep2", 5, j,
                       {2 * j, j, 2, j, weights, ia(b, c, 2 * j, 5), true}, false});
    }
    out.push_back({"ham4_3", "ham4_3", 3, 1, {4, 2, 3, 1, {3}, ia({8}, {1}, 4, 3), false}, false});
    out.push_back({"ham4_3_x2", "ham4_3", 3, 2, {8, 4, 3, 2, {3, 6}, ia({16, 8}, {1, 2}, 8, 3), false}, false});
    out.push_back(
        {"ham4_3_x3", "ham4_3", 3, 3, {12, 6, 3, 3, {3, 6, 9}, ia({24, 16, 8}, {1, 2, 3}, 12, 3), false}, false});
    for (std::uint32_t q : {4u, 8u, 16u})
        out.push_back({"tetra_2r_q" + std::to_string(q), "tetra_2r", q, 1,
                       {4, 2, 3, 2, {3, 4}, ia({4 * (q - 1), 3 * (q - 3)}, {1, 12}, 4, q), true}, false});
    out.push_back({"ext_ham8_2", "ext_ham8_2", 2, 1, {8, 4, 4, 2, {4, 8}, ia({8, 7}, {1, 8}, 8, 2), true}, false});
    out.push_back({"ext_golay12_3", "ext_golay12_3", 3, 1,
                   {12, 6, 6, 3, {6, 9, 12}, ia({24, 22, 20}, {1, 2, 12}, 12, 3), true}, false});
    out.push_back({"ext_golay24_2", "ext_golay24_2", 2, 1, {24, 12, 8, 4, {8, 12, 16, 24}, std::nullopt, true}, true});
    return out;
}

namespace detail {

inline std::optional<std::size_t> parse_suffix_number(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

} // namespace detail

/**
 * Resolves a catalog name. Besides the listed entries this accepts
 * rep2_q<q>_j<j>, ham4_3_x<j> and tetra_2r_q<q> for other parameters.
 */
inline LinearCode build_named(std::string_view name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return build(e.family, e.q, e.copies);
    auto fail = [&]() -> LinearCode {
        throw Error(Errc::invalid_argument, "unknown catalog name '" + std::string(name) + "'");
    };
    if (name.starts_with("rep2_q")) {
        const auto rest = name.substr(6);
        const auto sep = rest.find("_j");
        if (sep == std::string_view::npos) return fail();
        const auto q = detail::parse_suffix_number(rest.substr(0, sep));
        const auto j = detail::parse_suffix_number(rest.substr(sep + 2));
        if (!q || !j || *j == 0) return fail();
        return build("rep2", static_cast<std::uint32_t>(*q), *j);
    }
    if (name.starts_with("ham4_3_x")) {
        const auto j = detail::parse_suffix_number(name.substr(8));
        if (!j || *j == 0) return fail();
        return build("ham4_3", 3, *j);
    }
    if (name.starts_with("tetra_2r_q")) {
        const auto q = detail::parse_suffix_number(name.substr(10));
        if (!q) return fail();
        return build("tetra_2r", static_cast<std::uint32_t>(*q));
    }
    return fail();
}

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct EntryVerification {
    std::string name;
    bool stretch = false;
    std::vector<Check> checks;
    /// Computed intersection array, also for entries without a golden one.
    std::optional<IntersectionArray> intersection_array;
    std::vector<Rational> betas;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_string(v[i]);
    return s;
}

} // namespace detail

/**
 * Runs every analyzer on one entry and compares with its golden values:
 * self-duality, (n,k,d), weights, antipodality, complete regularity,
 * covering radius, intersection array, external distance, packing
 * coefficients (solved and closed form), sphere packing and designs.
 */
inline EntryVerification verify_entry(const CatalogEntry& entry, unsigned workers = 0) {
    EntryVerification out;
    out.name = entry.name;
    out.stretch = entry.stretch;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        out.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    const Expected& ex = entry.expected;

    const LinearCode code = build(entry.family, entry.q, entry.copies);
    const WeightDistribution wd = weight_distribution(code);
    const std::size_t d = wd.min_weight();
    add("self_dual", is_self_dual(code));
    add("parameters", code.n() == ex.n && code.k() == ex.k && d == ex.d,
        "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," + std::to_string(d) + "]_" +
            std::to_string(code.q()));
    add("weights", wd.nonzero_weights() == ex.weights, detail::join(wd.nonzero_weights()));
    add("antipodal", is_antipodal(wd) == ex.antipodal, is_antipodal(wd) ? "true" : "false");

    const CosetTable table(code);
    const CosetDistances distances(table, workers);
    const RegularityReport reg = check_regularity(table, distances);
    const std::size_t rho = table.covering_radius();
    add("covering_radius", rho == ex.rho, std::to_string(rho));
    add("completely_regular", reg.completely_regular() && reg.criteria_agree());
    out.intersection_array = reg.intersection_array;
    if (ex.intersection_array) {
        add("intersection_array", reg.intersection_array && *reg.intersection_array == *ex.intersection_array,
            reg.intersection_array ? reg.intersection_array->to_string() : "none");
    }
    const std::size_t s = external_distance(code);
    add("external_distance", s == rho, std::to_string(s));

    const auto coeffs = solve_upws(table, distances);
    add("upws", coeffs.has_value());
    if (coeffs) {
        out.betas = coeffs->betas;
        const Rational& top = coeffs->betas.back();
        const bool natural = top != 0 && is_natural(Rational(1) / top);
        add("beta_rho_inverse_natural", natural, rational_string(top));
        if (reg.profile)
            add("beta_rho_inverse_equals_p_rho_rho", top * Rational(reg.profile->p(rho, rho)) == 1,
                std::to_string(reg.profile->p(rho, rho)));
        add("sphere_packing", sphere_packing_check(code, *coeffs));
        if (reg.profile) {
            try {
                const auto closed = beta_cr_closed_form(code.n(), code.k(), code.q(), d, rho, *reg.profile);
                add("closed_form_beta", closed == coeffs->betas, detail::join(closed));
            } catch (const Error& e) {
                if (e.code() != Errc::case_not_covered) throw;
                add("closed_form_beta", true, "case-not-covered");
            }
        }
    }

    if (reg.completely_regular()) {
        const DesignReport designs = verify_cr_designs(code, true);
        std::string detail;
        for (const auto& c : designs.checks)
            detail += (detail.empty() ? "" : " ") + std::to_string(c.weight) + ":" + std::to_string(c.strength) +
                      "-design lambda=" + (c.lambda ? std::to_string(*c.lambda) : "none");
        add("designs", designs.all_hold(), detail);
    }
    return out;
}

struct CatalogReport {
    std::vector<EntryVerification> entries;

    bool passed() const {
        for (const auto& e : entries)
            if (!e.passed()) return false;
        return true;
    }
};

inline CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries, unsigned workers = 0) {
    CatalogReport rep;
    for (const auto& e : entries) rep.entries.push_back(verify_entry(e, workers));
    return rep;
}

inline CatalogReport verify_catalog(unsigned workers = 0) { return verify_catalog(catalog_entries(), workers); }

} // namespace crcodes
