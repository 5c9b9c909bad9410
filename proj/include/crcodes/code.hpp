/**************************************************************************
 * code.hpp
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
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "util.hpp"

namespace crcodes {

inline std::size_t weight(std::span<const Element> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element e) { return e != 0; }));
}

/// Support as a bit mask (n <= 64).
inline std::uint64_t support_mask(std::span<const Element> v) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) mask |= std::uint64_t{1} << i;
    return mask;
}

/**
 * A k-dimensional subspace of GF(q)^n given by a generator matrix, stored
 * in reduced row echelon form so equal codes compare equal.
 */
class LinearCode {
public:
    static constexpr std::size_t kMaxLength = 64;

    explicit LinearCode(const Matrix& generator) {
        if (!generator.field()) throw Error(Errc::invalid_argument, "generator without a field");
        if (generator.cols() == 0 || generator.cols() > kMaxLength)
            throw Error(Errc::invalid_argument, "code length must be in [1, 64]");
        RowEchelon e = rref(generator);
        if (e.rank == 0) throw Error(Errc::invalid_argument, "zero-dimensional code");
        std::vector<Element> entries(e.reduced.entries().begin(),
                                     e.reduced.entries().begin() + e.rank * generator.cols());
        generator_ = Matrix(generator.field(), e.rank, generator.cols(), std::move(entries));
        pivots_ = std::move(e.pivots);
    }

    const FieldPtr& field_ptr() const { return generator_.field(); }
    const Field& field() const { return *generator_.field(); }
    std::uint32_t q() const { return field().q(); }
    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }
    const std::vector<std::size_t>& information_set() const { return pivots_; }

    /// Number of codewords q^k, or nullopt above the enumeration guard.
    std::optional<std::uint64_t> size_if_enumerable() const { return checked_pow(q(), k()); }

    std::uint64_t enumerable_size() const {
        auto s = size_if_enumerable();
        if (!s)
            throw Error(Errc::too_large_to_enumerate,
                        "q^k = " + std::to_string(q()) + "^" + std::to_string(k()) + " exceeds 2^24");
        return *s;
    }

    std::vector<Element> encode(std::span<const Element> message) const {
        if (message.size() != k()) throw Error(Errc::dimension_mismatch, "message length != k");
        const Field& f = field();
        std::vector<Element> out(n(), 0);
        for (std::size_t i = 0; i < k(); ++i) {
            if (message[i] == 0) continue;
            auto row = generator_.row(i);
            for (std::size_t j = 0; j < n(); ++j) out[j] = f.add(out[j], f.mul(message[i], row[j]));
        }
        return out;
    }

    bool contains(std::span<const Element> v) const {
        if (v.size() != n()) return false;
        // In RREF the codeword is determined by its values on the pivots.
        std::vector<Element> msg(k());
        for (std::size_t i = 0; i < k(); ++i) msg[i] = v[pivots_[i]];
        const auto c = encode(msg);
        return std::equal(c.begin(), c.end(), v.begin());
    }

    /**
     * Calls fn(span of n elements) for every codeword. Messages run as a
     * base-q counter with message coordinate 0 fastest; the codeword is
     * updated incrementally from precomputed row multiples.
     */
    template <class Fn>
    void for_each_codeword(Fn&& fn) const {
        enumerable_size();
        const Field& f = field();
        const std::size_t nn = n(), kk = k();
        const std::uint32_t qq = q();
        // multiples[(i*q + a)*n + j] = a * G[i][j]
        std::vector<Element> multiples(kk * qq * nn);
        for (std::size_t i = 0; i < kk; ++i)
            for (std::uint32_t a = 0; a < qq; ++a)
                for (std::size_t j = 0; j < nn; ++j)
                    multiples[(i * qq + a) * nn + j] = f.mul(static_cast<Element>(a), generator_(i, j));

        std::vector<Element> word(nn, 0);
        std::vector<std::uint32_t> digits(kk, 0);
        while (true) {
            fn(std::span<const Element>(word));
            std::size_t i = 0;
            for (; i < kk; ++i) {
                const std::uint32_t old = digits[i];
                const std::uint32_t next = old + 1 == qq ? 0 : old + 1;
                const Element* from = &multiples[(i * qq + old) * nn];
                const Element* to = &multiples[(i * qq + next) * nn];
                for (std::size_t j = 0; j < nn; ++j) word[j] = f.add(f.sub(word[j], from[j]), to[j]);
                digits[i] = next;
                if (next != 0) break;
            }
            if (i == kk) return;
        }
    }

    /// All codewords, row-major with stride n, in enumeration order.
    std::vector<Element> codewords() const {
        std::vector<Element> out;
        out.reserve(enumerable_size() * n());
        for_each_codeword([&](std::span<const Element> c) { out.insert(out.end(), c.begin(), c.end()); });
        return out;
    }

    bool operator==(const LinearCode& o) const { return generator_ == o.generator_; }

private:
    Matrix generator_;
    std::vector<std::size_t> pivots_;
};

struct WeightDistribution {
    std::vector<std::uint64_t> counts; // A_0..A_n

    std::size_t length() const { return counts.empty() ? 0 : counts.size() - 1; }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }

    std::vector<std::size_t> nonzero_weights() const {
        std::vector<std::size_t> w;
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] != 0) w.push_back(i);
        return w;
    }

    /// Smallest w >= 1 with A_w > 0 (0 for the zero code).
    std::size_t min_weight() const {
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] != 0) return i;
        return 0;
    }

    bool operator==(const WeightDistribution&) const = default;
};

inline WeightDistribution weight_distribution(const LinearCode& c) {
    WeightDistribution w{std::vector<std::uint64_t>(c.n() + 1, 0)};
    c.for_each_codeword([&](std::span<const Element> v) { ++w.counts[weight(v)]; });
    return w;
}

inline std::size_t min_distance(const LinearCode& c) { return weight_distribution(c).min_weight(); }

/// Whether some codeword has full weight n.
inline bool is_antipodal(const WeightDistribution& w) { return !w.counts.empty() && w.counts.back() != 0; }

/// C^perp. The full space has no representable dual (k = 0) and is rejected.
inline LinearCode dual_code(const LinearCode& c) {
    if (c.k() == c.n()) throw Error(Errc::degenerate_dual, "dual of the full space is zero-dimensional");
    return LinearCode(kernel(c.generator()));
}

/// The parity-check matrix: a basis of C^perp (empty when k = n).
inline Matrix parity_check_matrix(const LinearCode& c) { return kernel(c.generator()); }

inline bool is_self_dual(const LinearCode& c) { return c.n() == 2 * c.k() && gram(c.generator()).is_zero(); }

/// K_j(w) for length n over GF(q).
inline BigInt krawtchouk(std::size_t j, std::size_t w, std::size_t n, std::uint32_t q) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= j; ++i) {
        BigInt term = binomial(w, i) * binomial(n - w, j - i) * big_pow(q - 1, j - i);
        if (i % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

/// Dual weight distribution through the Krawtchouk transform, exactly.
inline WeightDistribution macwilliams_transform(const WeightDistribution& w, std::size_t n, std::size_t k,
                                                std::uint32_t q) {
    if (w.counts.size() != n + 1)
        throw Error(Errc::inconsistent_distribution, "distribution length is not n + 1");
    const BigInt size = big_pow(q, k);
    BigInt total = 0;
    for (auto a : w.counts) total += a;
    if (total != size) throw Error(Errc::inconsistent_distribution, "sum of A_w differs from q^k");

    WeightDistribution out{std::vector<std::uint64_t>(n + 1, 0)};
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= n; ++i)
            if (w.counts[i] != 0) acc += BigInt(w.counts[i]) * krawtchouk(j, i, n, q);
        if (acc < 0 || acc % size != 0)
            throw Error(Errc::inconsistent_distribution, "transform is not a non-negative integer vector");
        out.counts[j] = static_cast<std::uint64_t>(acc / size);
    }
    return out;
}

struct StructuralReport {
    /// Supports of minimum-weight codewords cover every coordinate.
    bool min_weight_supports_cover = false;
    /// No two codewords meet in exactly one support position (self-dual codes only).
    std::optional<bool> no_unit_intersections;
    /// All weights even (q = 2) or divisible by 3 (q = 3); self-dual codes only.
    std::optional<bool> weight_divisibility;
};

inline StructuralReport structural_checks(const LinearCode& c) {
    const std::size_t n = c.n();
    const bool self_dual = is_self_dual(c);
    const std::size_t d = min_distance(c);

    std::uint64_t cover = 0;
    std::vector<std::uint64_t> supports;
    bool divisible = true;
    c.for_each_codeword([&](std::span<const Element> v) {
        const std::uint64_t s = support_mask(v);
        const std::size_t w = static_cast<std::size_t>(std::popcount(s));
        if (w == d) cover |= s;
        if (w != 0) supports.push_back(s);
        if (c.q() == 2 && w % 2 != 0) divisible = false;
        if (c.q() == 3 && w % 3 != 0) divisible = false;
    });

    StructuralReport r;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    r.min_weight_supports_cover = cover == all;
    if (self_dual) {
        std::sort(supports.begin(), supports.end());
        supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
        bool ok = true;
        for (std::size_t i = 0; i < supports.size() && ok; ++i)
            for (std::size_t j = i; j < supports.size(); ++j)
                if (std::popcount(supports[i] & supports[j]) == 1) {
                    ok = false;
                    break;
                }
        r.no_unit_intersections = ok;
        if (c.q() == 2 || c.q() == 3) r.weight_divisibility = divisible;
    }
    return r;
}

/// Direct sum C_1 + C_2 with block-diagonal generator.
inline LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    if (a.q() != b.q()) throw Error(Errc::dimension_mismatch, "direct sum over different fields");
    Matrix g(a.field_ptr(), a.k() + b.k(), a.n() + b.n());
    for (std::size_t r = 0; r < a.k(); ++r)
        for (std::size_t c = 0; c < a.n(); ++c) g(r, c) = a.generator()(r, c);
    for (std::size_t r = 0; r < b.k(); ++r)
        for (std::size_t c = 0; c < b.n(); ++c) g(a.k() + r, a.n() + c) = b.generator()(r, c);
    return LinearCode(g);
}

inline LinearCode direct_sum_power(const LinearCode& base, std::size_t copies) {
    if (copies == 0) throw Error(Errc::invalid_argument, "direct sum needs at least one copy");
    LinearCode out = base;
    for (std::size_t i = 1; i < copies; ++i) out = direct_sum(out, base);
    return out;
}

} // namespace crcodes
