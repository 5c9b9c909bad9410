/**************************************************************************
 * upws.hpp
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

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "code.hpp"
#include "coset.hpp"
#include "error.hpp"
#include "util.hpp"

namespace crcodes {

struct PackingCoefficients {
    std::vector<Rational> betas; // beta_0..beta_rho
    /// Dimension of the affine solution set; free variables are set to 0.
    std::size_t free_dimension = 0;

    bool unique() const { return free_dimension == 0; }
};

/// Distinct (B_{x,0}, ..., B_{x,rho}) over all cosets, sorted.
inline std::vector<std::vector<std::uint64_t>> distinct_packing_rows(const CosetTable& table,
                                                                     const CosetDistances& distances) {
    const std::size_t rho = table.covering_radius();
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(table.size());
    for (std::uint64_t s = 0; s < table.size(); ++s) {
        const auto r = distances.row(s);
        rows.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(rho + 1));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

/**
 * Solves row . beta = 1 for every given row, over the rationals. Returns
 * nullopt when the system is inconsistent, i.e. the code is not uniformly
 * packed in the wide sense.
 */
inline std::optional<PackingCoefficients> solve_upws(std::span<const std::vector<std::uint64_t>> rows,
                                                     std::size_t rho) {
    const std::size_t cols = rho + 1;
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() < cols) throw Error(Errc::dimension_mismatch, "packing row shorter than rho + 1");
        std::vector<Rational> row(cols + 1);
        for (std::size_t j = 0; j < cols; ++j) row[j] = Rational(r[j]);
        row[cols] = 1;
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        const Rational pivot = m[rank][col];
        for (auto& e : m[rank]) e /= pivot;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = 0; c <= cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < m.size(); ++r)
        if (m[r][cols] != 0) return std::nullopt;

    PackingCoefficients out;
    out.betas.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) out.betas[pivot_cols[i]] = m[i][cols];
    out.free_dimension = cols - rank;
    return out;
}

/// Solves the packing system for a code from its coset table.
inline std::optional<PackingCoefficients> solve_upws(const CosetTable& table, const CosetDistances& distances) {
    const auto rows = distinct_packing_rows(table, distances);
    return solve_upws(rows, table.covering_radius());
}

/// sum_i beta_i (q-1)^i C(n,i), the denominator of the sphere-packing identity.
inline Rational packing_volume(std::size_t n, std::uint32_t q, std::span<const Rational> betas) {
    Rational sum = 0;
    for (std::size_t i = 0; i < betas.size(); ++i) sum += betas[i] * Rational(big_pow(q - 1, i) * binomial(n, i));
    return sum;
}

/// |C| = q^n / sum_i beta_i (q-1)^i C(n,i), exactly.
inline bool sphere_packing_check(const LinearCode& code, const PackingCoefficients& coeffs) {
    const Rational vol = packing_volume(code.n(), code.q(), coeffs.betas);
    if (vol == 0) return false;
    return Rational(big_pow(code.q(), code.n())) / vol == Rational(big_pow(code.q(), code.k()));
}

/**
 * Packing coefficients of a completely regular [n,k,d]_q code with
 * covering radius rho, from the closed forms for d = 2rho, 2rho-1 and
 * 2rho-2. The p_{i,j} values come from the code's distance profile. A
 * perfect code (e = rho) has all coefficients equal to 1.
 */
inline std::vector<Rational> beta_cr_closed_form(std::size_t n, std::size_t k, std::uint32_t q, std::size_t d,
                                                 std::size_t rho, const DistanceProfile& profile) {
    auto volume = [&](std::size_t i) { return Rational(big_pow(q - 1, i) * binomial(n, i)); };
    auto p = [&](std::size_t i, std::size_t j) { return Rational(profile.p(i, j)); };
    const Rational redundancy = Rational(big_pow(q, n - k));
    std::vector<Rational> beta(rho + 1, Rational(1));

    if (d >= 1 && (d - 1) / 2 == rho) return beta;

    auto check_den = [](const Rational& den) {
        if (den == 0) throw Error(Errc::zero_denominator, "closed-form packing coefficient has zero denominator");
    };

    if (d == 2 * rho) {
        Rational num = redundancy;
        for (std::size_t i = 0; i < rho; ++i) num -= volume(i);
        const Rational den = volume(rho);
        check_den(den);
        beta[rho] = num / den;
        return beta;
    }
    if (rho >= 1 && d == 2 * rho - 1) {
        const Rational p_top = p(rho - 1, rho);
        Rational num = redundancy;
        for (std::size_t i = 0; i < rho; ++i) num -= volume(i);
        const Rational den = volume(rho) - p_top * volume(rho - 1);
        check_den(den);
        beta[rho] = num / den;
        beta[rho - 1] = 1 - beta[rho] * p_top;
        return beta;
    }
    if (rho >= 2 && d == 2 * rho - 2) {
        const Rational p11 = p(rho - 1, rho - 1);
        const Rational p1r = p(rho - 1, rho);
        const Rational p2r = p(rho - 2, rho);
        check_den(p11);
        Rational num = redundancy;
        for (std::size_t i = 0; i + 1 < rho; ++i) num -= volume(i);
        num -= volume(rho - 1) / p11;
        const Rational den = volume(rho) - p1r / p11 * volume(rho - 1) - p2r * volume(rho - 2);
        check_den(den);
        beta[rho] = num / den;
        beta[rho - 2] = 1 - beta[rho] * p2r;
        beta[rho - 1] = (1 - beta[rho] * p1r) / p11;
        return beta;
    }
    throw Error(Errc::case_not_covered, "no closed form for d = " + std::to_string(d) +
                                            ", rho = " + std::to_string(rho));
}

/// Number of distinct nonzero weights of the dual code.
inline std::size_t external_distance(const LinearCode& code) {
    if (code.k() == code.n()) return 0;
    return weight_distribution(dual_code(code)).nonzero_weights().size();
}

} // namespace crcodes
