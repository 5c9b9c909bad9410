/**************************************************************************
 * util.hpp
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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crcodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest q^k (codewords) or q^(n-k) (cosets) that will be enumerated.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

/// base^exp if it does not exceed `limit`, otherwise nullopt.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                                std::uint64_t limit = kEnumerationLimit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    if (r > limit) return std::nullopt;
    return r;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// num/den for any nonzero den (the two-argument cpp_rational constructor rejects den < 0).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

/// Exact integer test for a reduced rational.
inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

/// A value "is a natural number" iff it reduces to an integer >= 1.
inline bool is_natural(const Rational& r) { return is_integer(r) && r >= 1; }

/// Canonical "num/den" form; the denominator is always written.
inline std::string rational_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// "num" when integral, "num/den" otherwise.
inline std::string rational_display(const Rational& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return rational_string(r);
}

inline unsigned default_workers() {
    return std::max(1u, std::thread::hardware_concurrency());
}

inline unsigned resolve_workers(unsigned requested) {
    return requested == 0 ? default_workers() : requested;
}

/// Runs fn(begin, end) over contiguous chunks of [0, count). Chunks are
/// disjoint, so callers writing to per-index slots get results that do
/// not depend on the worker count.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || count < 2 * static_cast<std::size_t>(workers)) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

} // namespace crcodes
