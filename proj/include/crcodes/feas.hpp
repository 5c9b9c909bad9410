/**************************************************************************
 * feas.hpp
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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "util.hpp"

namespace crcodes {

/**
 * Integrality filters for self-dual completely regular [2k, k, d]_q codes.
 * Each family is the reciprocal of the top packing coefficient for one
 * (rho, d) shape, as a function of q, k and one family-specific parameter:
 *
 *   rho2_d4         f(q,k)          rho = 2, d = 4
 *   rho3_d6         f(q,k)          rho = 3, d = 6
 *   rho3_d5         g(q,k,s)        rho = 3, d = 5, s = p_{2,3}
 *   rho3_d4         h(q,k,lambda')  rho = 3, d = 4, lambda = 1
 *   rho3_d4_binary  l(k,lambda)     rho = 3, d = 4, q = 2
 *
 * All values are exact rationals; "natural" means a reduced integer >= 1.
 */
enum class Family { rho2_d4, rho3_d6, rho3_d5, rho3_d4, rho3_d4_binary };

inline constexpr std::array<Family, 5> kAllFamilies = {Family::rho2_d4, Family::rho3_d6, Family::rho3_d5,
                                                       Family::rho3_d4, Family::rho3_d4_binary};

constexpr std::string_view family_name(Family f) {
    switch (f) {
    case Family::rho2_d4: return "rho2_d4";
    case Family::rho3_d6: return "rho3_d6";
    case Family::rho3_d5: return "rho3_d5";
    case Family::rho3_d4: return "rho3_d4";
    case Family::rho3_d4_binary: return "rho3_d4_binary";
    }
    return "";
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (Family f : kAllFamilies)
        if (family_name(f) == s) return f;
    return std::nullopt;
}

/// Minimum distance of the codes a family describes.
constexpr std::size_t family_min_distance(Family f) {
    switch (f) {
    case Family::rho3_d6: return 6;
    case Family::rho3_d5: return 5;
    default: return 4;
    }
}

/// Self-dual binary codes have even weights and ternary ones weights divisible by 3.
constexpr bool self_dual_weight_allowed(std::uint32_t q, std::size_t w) {
    if (q == 2) return w % 2 == 0;
    if (q == 3) return w % 3 == 0;
    return true;
}

inline bool is_prime_power(std::uint32_t q) { return q >= 2 && detail::prime_factors(q).size() == 1; }

enum class FeasStatus { ok, zero_denominator, negative_denominator };

struct FeasEvaluation {
    FeasStatus status = FeasStatus::ok;
    std::optional<Rational> value; // absent only for a zero denominator
};

namespace detail {

inline FeasEvaluation ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) return {FeasStatus::zero_denominator, std::nullopt};
    return {den < 0 ? FeasStatus::negative_denominator : FeasStatus::ok, make_rational(num, den)};
}

} // namespace detail

/// Family expression at (q, k, extra) without range checks.
inline FeasEvaluation evaluate_family(Family fam, std::uint32_t q, std::int64_t k, std::int64_t extra) {
    const BigInt Q = q, K = k, X = extra;
    const BigInt qk = big_pow(q, static_cast<std::uint64_t>(k));
    const BigInt q1 = Q - 1;
    // q^k - 1 - 2k(q-1) - k(2k-1)(q-1)^2, shared by the d = 6 and d = 5 shapes
    const BigInt rho3_core = qk - 1 - 2 * K * q1 - K * (2 * K - 1) * q1 * q1;
    switch (fam) {
    case Family::rho2_d4:
        return detail::ratio(q1 * q1 * K * (2 * K - 1), qk - 1 - 2 * K * q1);
    case Family::rho3_d6:
        return detail::ratio(q1 * q1 * q1 * K * (2 * K - 1) * (2 * K - 2), 3 * rho3_core);
    case Family::rho3_d5:
        return detail::ratio(K * (2 * K - 1) * q1 * q1 * ((2 * K - 2) * q1 - X), 3 * rho3_core);
    case Family::rho3_d4:
        return detail::ratio(K * (2 * K - 1) * q1 * q1 * (2 * (2 * K - 2) * q1 - 4 - 6 * (Q - 2) - 3 * X),
                             3 * (2 * (qk - 1) - K * q1 * (4 + (2 * K - 1) * q1)));
    case Family::rho3_d4_binary: {
        const BigInt L = X;
        const BigInt two_k = big_pow(2, static_cast<std::uint64_t>(k));
        return detail::ratio(2 * K * (2 * K - 1) * (L + 1) * ((K - 1) - L),
                             3 * ((L + 1) * (two_k - 1) - K * (2 * (L + 1) + (2 * K - 1))));
    }
    }
    return {};
}

/// Whether `extra` lies in the family's admissible range at (q, k).
inline bool extra_in_range(Family fam, std::uint32_t q, std::int64_t k, std::int64_t extra) {
    const std::int64_t Q = q;
    switch (fam) {
    case Family::rho2_d4:
    case Family::rho3_d6: return extra == 0;
    case Family::rho3_d5: return extra >= 0 && 3 * extra <= (Q - 1) * (2 * k - 2);
    case Family::rho3_d4: return extra >= 0 && 3 * extra < 4 * (k - 1) * (Q - 1) - 6 * Q + 8;
    case Family::rho3_d4_binary: return q == 2 && extra >= 0 && extra <= k - 1;
    }
    return false;
}

/// Exact beta_rho^{-1} for the family; throws on bad ranges or a zero denominator.
inline Rational feas_value(Family fam, std::uint32_t q, std::int64_t k, std::int64_t extra = 0) {
    if (!is_prime_power(q)) throw Error(Errc::not_a_prime_power, std::to_string(q) + " is not a prime power");
    if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
    if (!extra_in_range(fam, q, k, extra))
        throw Error(Errc::out_of_range_extra, std::string(family_name(fam)) + ": parameter " +
                                                  std::to_string(extra) + " out of range");
    FeasEvaluation e = evaluate_family(fam, q, k, extra);
    if (e.status == FeasStatus::zero_denominator)
        throw Error(Errc::zero_denominator, std::string(family_name(fam)) + " has a zero denominator here");
    return *e.value;
}

/**
 * beta_3^{-1} for rho = 3, d = 4 with general lambda = p_{2,2} - 1 and
 * lambda' = p_{2,3} - 2 lambda (q - 2). Reduces to h at lambda = 1 and to
 * l at q = 2, lambda' = 0.
 */
inline FeasEvaluation rho3_d4_general(std::uint32_t q, std::int64_t k, std::int64_t lambda,
                                      std::int64_t lambda_prime) {
    const BigInt Q = q, K = k, L = lambda, LP = lambda_prime;
    const BigInt qk = big_pow(q, static_cast<std::uint64_t>(k));
    const BigInt q1 = Q - 1;
    const BigInt num = K * (2 * K - 1) * q1 * q1 *
                       ((L + 1) * (2 * K - 2) * q1 - 2 * L * (L + 1) - 6 * L * (Q - 2) - 3 * LP);
    const BigInt den = 3 * ((L + 1) * (qk - 1) - K * q1 * (2 * (L + 1) + (2 * K - 1) * q1));
    return detail::ratio(num, den);
}

struct FeasHit {
    Family family = Family::rho2_d4;
    std::uint32_t q = 2;
    std::int64_t k = 0;
    std::optional<std::int64_t> extra; // s, lambda' or lambda; absent for the two-parameter families
    std::uint64_t value = 0;

    bool operator==(const FeasHit&) const = default;
};

struct FeasPoint {
    std::uint32_t q = 2;
    std::int64_t k = 0;
    std::int64_t extra = 0;
};

struct ScanResult {
    Family family = Family::rho2_d4;
    std::vector<FeasHit> hits;
    /// Natural values at q where no self-dual code has minimum weight d.
    std::vector<FeasHit> excluded_by_divisibility;
    std::vector<FeasPoint> zero_denominator;
    std::size_t negative_denominator = 0;
    std::size_t points = 0;
};

/// Grid of (q, k, extra) points a family scan visits, in output order.
inline std::vector<FeasPoint> scan_grid(Family fam) {
    std::vector<FeasPoint> grid;
    auto extras = [&](std::uint32_t q, std::int64_t k) {
        for (std::int64_t x = 0; extra_in_range(fam, q, k, x); ++x) grid.push_back({q, k, x});
    };
    switch (fam) {
    case Family::rho2_d4:
        for (std::uint32_t q = 2; q < 16; ++q)
            if (is_prime_power(q))
                for (std::int64_t k = 3; k <= 6; ++k) grid.push_back({q, k, 0});
        break;
    case Family::rho3_d6:
        for (std::uint32_t q = 2; q <= 53; ++q)
            if (is_prime_power(q))
                for (std::int64_t k = 4; k <= 10; ++k) grid.push_back({q, k, 0});
        break;
    case Family::rho3_d5:
        for (std::uint32_t q = 2; q <= 53; ++q)
            if (is_prime_power(q))
                for (std::int64_t k = 4; k <= 10; ++k) extras(q, k);
        break;
    case Family::rho3_d4:
        for (std::uint32_t q = 4; q <= 25; ++q)
            if (is_prime_power(q))
                for (std::int64_t k = 4; k <= 10; ++k) extras(q, k);
        break;
    case Family::rho3_d4_binary:
        for (std::int64_t k = 3; k <= 10; ++k) extras(2, k);
        break;
    }
    return grid;
}

/**
 * Every grid point where the family takes a natural value, ordered by q,
 * then k, then extra. Points at q excluded by self-dual weight divisibility
 * are reported separately rather than as hits.
 */
inline ScanResult scan_family(Family fam, unsigned workers = 0) {
    const auto grid = scan_grid(fam);
    std::vector<FeasEvaluation> evals(grid.size());
    parallel_chunks(grid.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) evals[i] = evaluate_family(fam, grid[i].q, grid[i].k, grid[i].extra);
    });

    const bool has_extra = fam == Family::rho3_d5 || fam == Family::rho3_d4 || fam == Family::rho3_d4_binary;
    ScanResult out;
    out.family = fam;
    out.points = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& pt = grid[i];
        const auto& ev = evals[i];
        if (ev.status == FeasStatus::zero_denominator) {
            out.zero_denominator.push_back(pt);
            continue;
        }
        if (ev.status == FeasStatus::negative_denominator) ++out.negative_denominator;
        if (!is_natural(*ev.value)) continue;
        FeasHit hit{fam, pt.q, pt.k, std::nullopt,
                    static_cast<std::uint64_t>(boost::multiprecision::numerator(*ev.value))};
        if (has_extra) hit.extra = pt.extra;
        if (self_dual_weight_allowed(pt.q, family_min_distance(fam))) out.hits.push_back(hit);
        else out.excluded_by_divisibility.push_back(hit);
    }
    return out;
}

/// Right-hand sides of the first three power moments divided by q - 1.
inline std::array<Rational, 3> pless_rhs(std::uint32_t q, std::int64_t k) {
    if (k < 2) throw Error(Errc::non_integer_q_power, "q^(k-2) needs k >= 2");
    const BigInt Q = q, K = k;
    const auto uk = static_cast<std::uint64_t>(k);
    return {make_rational(big_pow(q, uk) - 1, Q - 1), Rational(big_pow(q, uk - 1) * 2 * K),
            Rational(big_pow(q, uk - 2) * 2 * K * (2 * K * (Q - 1) + 1))};
}

/**
 * (B_{w1}, B_{w2}, B_{w3}) of a self-dual three-weight [2k, k]_q code with
 * nonzero weights w1 < w2 < w3, from the first three power moments
 * (B_w = A_w / (q - 1)). Solved exactly by Cramer's rule.
 */
inline std::array<Rational, 3> pless_solve_3w(std::uint32_t q, std::int64_t k, std::int64_t w1, std::int64_t w2,
                                              std::int64_t w3) {
    if (q < 2) throw Error(Errc::invalid_argument, "q must be at least 2");
    if (!(0 < w1 && w1 < w2 && w2 < w3 && w3 <= 2 * k))
        throw Error(Errc::invalid_argument, "weights must satisfy 0 < w1 < w2 < w3 <= 2k");
    const auto rhs = pless_rhs(q, k);
    const std::array<std::array<Rational, 3>, 3> a = {{{1, 1, 1},
                                                       {Rational(w1), Rational(w2), Rational(w3)},
                                                       {Rational(w1 * w1), Rational(w2 * w2), Rational(w3 * w3)}}};
    auto det = [](const std::array<std::array<Rational, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const Rational d = det(a);
    if (d == 0) throw Error(Errc::singular_system, "power-moment system is singular");
    std::array<Rational, 3> out;
    for (std::size_t col = 0; col < 3; ++col) {
        auto m = a;
        for (std::size_t r = 0; r < 3; ++r) m[r][col] = rhs[r];
        out[col] = det(m) / d;
    }
    return out;
}

struct Table1Row {
    std::int64_t w1, w2, w3;
    std::int64_t k;
    std::optional<std::uint32_t> q; // fixed q, or symbolic
    std::function<std::array<Rational, 3>(std::uint32_t)> published;
};

/// Three-weight systems with their published closed-form solutions.
inline std::vector<Table1Row> table1_rows() {
    using R = Rational;
    auto fixed = [](R a, R b, R c) { return [=](std::uint32_t) { return std::array<R, 3>{a, b, c}; }; };
    return {
        {5, 6, 7, 4, 7u, fixed(168, -280, 512)},
        {5, 6, 8, 4, 7u, fixed(R(-8, 3), 232, R(512, 3))},
        {5, 7, 8, 4, 7u, fixed(R(224, 3), 232, R(280, 3))},
        {3, 4, 5, 3, std::nullopt,
         [](std::uint32_t q) {
             const R Q = q;
             return std::array<R, 3>{Q * Q - 5 * Q + 10, 3 * (-Q * Q + 5 * Q - 5), 3 * (Q - 1) * (Q - 2)};
         }},
        {4, 5, 6, 3, std::nullopt,
         [](std::uint32_t q) {
             const R Q = q;
             return std::array<R, 3>{R(15), 6 * (Q - 4), Q * Q - 5 * Q + 10};
         }},
        {3, 4, 6, 3, std::nullopt,
         [](std::uint32_t q) {
             const R Q = q;
             return std::array<R, 3>{-2 * (Q - 4), 3 * (2 * Q - 3), (Q - 1) * (Q - 2)};
         }},
        {3, 5, 6, 3, std::nullopt,
         [](std::uint32_t q) {
             const R Q = q;
             return std::array<R, 3>{R(5), 3 * (2 * Q - 3), Q * Q - 5 * Q + 5};
         }},
    };
}

/// Evaluation points for the rows that are symbolic in q.
inline constexpr std::array<std::uint32_t, 7> kTable1Points = {3, 4, 5, 7, 8, 9, 11};

struct Table1Check {
    std::size_t row = 0; // 1-based
    std::uint32_t q = 0;
    std::array<Rational, 3> solver;
    std::array<Rational, 3> published;
    bool pass = false;
    /// Some entry is negative or non-integral, so no code has these weights.
    bool infeasible = false;
};

struct Table1Report {
    std::vector<Table1Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline bool infeasible_counts(const std::array<Rational, 3>& b) {
    for (const auto& v : b)
        if (v < 0 || !is_integer(v)) return true;
    return false;
}

inline Table1Report table1_verify() {
    Table1Report rep;
    const auto rows = table1_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        std::vector<std::uint32_t> qs;
        if (row.q) qs.push_back(*row.q);
        else qs.assign(kTable1Points.begin(), kTable1Points.end());
        for (std::uint32_t q : qs) {
            Table1Check c;
            c.row = i + 1;
            c.q = q;
            c.solver = pless_solve_3w(q, row.k, row.w1, row.w2, row.w3);
            c.published = row.published(q);
            c.pass = c.solver == c.published;
            c.infeasible = infeasible_counts(c.solver);
            rep.checks.push_back(std::move(c));
        }
    }
    return rep;
}

/// q(2k - w3) < 2k, necessary for a self-dual three-weight code with largest weight w3.
inline bool k3_predicate(std::int64_t q, std::int64_t k, std::int64_t w3) {
    if (w3 > 2 * k) throw Error(Errc::invalid_argument, "w3 exceeds the length 2k");
    return q * (2 * k - w3) < 2 * k;
}

/// A_d = (q-1) C(n, d) for an MDS [n, k, n-k+1]_q code.
inline BigInt mds_weight_count(std::int64_t n, std::int64_t k, std::uint32_t q) {
    const std::int64_t d = n - k + 1;
    if (d < 1 || k < 0) throw Error(Errc::invalid_argument, "MDS count needs n >= k");
    return BigInt(q - 1) * binomial(n, d);
}

} // namespace crcodes
