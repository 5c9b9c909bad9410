/**************************************************************************
 * design.hpp
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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "code.hpp"
#include "error.hpp"
#include "util.hpp"

namespace crcodes {

/// q-ary t-(n, m, lambda) design parameters.
struct DesignParams {
    std::size_t t = 0, n = 0, m = 0;
    std::uint64_t lambda = 0;
    std::uint32_t q = 2;
};

/// Largest number of weight-t vectors a design check will enumerate.
inline constexpr std::uint64_t kDesignLimit = std::uint64_t{1} << 22;

namespace detail {

/// Calls fn(positions) for each t-subset of `items`, in lexicographic order.
template <class Fn>
void for_each_subset(std::span<const std::size_t> items, std::size_t t, Fn&& fn) {
    const std::size_t m = items.size();
    if (t > m) return;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    std::vector<std::size_t> chosen(t);
    while (true) {
        for (std::size_t i = 0; i < t; ++i) chosen[i] = items[idx[i]];
        fn(std::span<const std::size_t>(chosen));
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == m - t + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

/**
 * Counts, for every weight-t vector v of GF(q)^n, how many blocks cover v
 * (agree with v on supp(v)). Returns the common count when it is constant
 * and positive.
 */
inline std::optional<std::uint64_t> design_lambda(std::uint32_t q, std::size_t n,
                                                  std::span<const std::vector<Element>> blocks, std::size_t t) {
    const std::uint64_t values = *checked_pow(q - 1, t, ~std::uint64_t{0});
    const std::uint64_t supports = binomial_u64(n, t);
    if (supports > kDesignLimit || values > kDesignLimit / supports)
        throw Error(Errc::too_large_to_enumerate, "C(n,t)(q-1)^t exceeds 2^22");

    std::optional<std::size_t> m;
    for (const auto& b : blocks) {
        if (b.size() != n) throw Error(Errc::dimension_mismatch, "block length differs from n");
        const std::size_t w = weight(b);
        if (m && *m != w) throw Error(Errc::mixed_weight_input, "blocks of different weights");
        m = w;
    }
    if (m && t > *m) throw Error(Errc::invalid_argument, "design strength exceeds block weight");

    std::vector<std::uint64_t> count(supports * values, 0);
    std::vector<std::size_t> support;
    for (const auto& b : blocks) {
        support.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (b[i] != 0) support.push_back(i);
        detail::for_each_subset(support, t, [&](std::span<const std::size_t> pos) {
            std::uint64_t comb = 0, val = 0, scale = 1;
            for (std::size_t j = 0; j < pos.size(); ++j) {
                comb += binomial_u64(pos[j], j + 1);
                val += (b[pos[j]] - 1) * scale;
                scale *= q - 1;
            }
            ++count[comb * values + val];
        });
    }
    const std::uint64_t lambda = count.front();
    for (auto c : count)
        if (c != lambda) return std::nullopt;
    if (lambda == 0) return std::nullopt;
    return lambda;
}

/// lambda_i = lambda C(n-i, t-i) / C(m-i, t-i) (q-1)^(t-i).
inline Rational lambda_i(const DesignParams& d, std::size_t i) {
    if (i > d.t) throw Error(Errc::invalid_argument, "i exceeds the design strength");
    return Rational(BigInt(d.lambda) * binomial(d.n - i, d.t - i) * big_pow(d.q - 1, d.t - i)) /
           Rational(binomial(d.m - i, d.t - i));
}

/// Codewords grouped by weight, in enumeration order.
inline std::map<std::size_t, std::vector<std::vector<Element>>> codewords_by_weight(const LinearCode& code) {
    std::map<std::size_t, std::vector<std::vector<Element>>> out;
    code.for_each_codeword([&](std::span<const Element> c) {
        const std::size_t w = weight(c);
        if (w != 0) out[w].emplace_back(c.begin(), c.end());
    });
    return out;
}

struct DesignCheck {
    std::size_t weight = 0;
    std::size_t strength = 0;
    std::size_t blocks = 0;
    std::optional<std::uint64_t> lambda;
};

struct DesignReport {
    std::size_t packing_radius = 0;
    std::vector<DesignCheck> checks;

    bool all_hold() const {
        for (const auto& c : checks)
            if (!c.lambda) return false;
        return true;
    }
};

/**
 * For a completely regular code with packing radius e: the codewords of
 * every nonzero weight form an e-design, and an (e+1)-design when d = 2e+2.
 */
inline DesignReport verify_cr_designs(const LinearCode& code, bool completely_regular) {
    if (!completely_regular)
        throw Error(Errc::not_completely_regular, "design property needs a completely regular code");
    const auto classes = codewords_by_weight(code);
    DesignReport rep;
    if (classes.empty()) return rep;
    const std::size_t d = classes.begin()->first;
    const std::size_t e = (d - 1) / 2;
    rep.packing_radius = e;
    for (const auto& [w, words] : classes) {
        rep.checks.push_back({w, e, words.size(), design_lambda(code.q(), code.n(), words, e)});
        if (d == 2 * e + 2)
            rep.checks.push_back({w, e + 1, words.size(), design_lambda(code.q(), code.n(), words, e + 1)});
    }
    return rep;
}

} // namespace crcodes
