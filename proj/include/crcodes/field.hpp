/**************************************************************************
 * field.hpp
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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace crcodes {

/// A field element is its integer encoding: the polynomial sum c_i x^i
/// over GF(p) is stored as sum c_i p^i. 0 and 1 are the identities.
using Element = std::uint16_t;

/**
 * GF(q), q = p^m <= 2^16, built over the canonical modulus: the monic
 * irreducible of degree m whose non-leading coefficients (c_0 least
 * significant) give the smallest integer sum c_i p^i.
 *
 * Prime fields use modular arithmetic; extension fields multiply through
 * log/antilog tables. Small fields (q <= 256) also get an addition table.
 * Instances are immutable and shared through FieldPtr.
 */
class Field {
public:
    enum class Op { add, sub, mul, div, neg, inv };

    static std::shared_ptr<const Field> make(std::uint32_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    bool is_prime() const { return m_ == 1; }

    /// Non-leading coefficients c_0..c_{m-1} of the modulus (empty for prime fields).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    bool contains(std::uint64_t code) const { return code < q_; }

    Element add(Element a, Element b) const {
        if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
        if (p_ == 2) return static_cast<Element>(a ^ b);
        if (m_ == 1) {
            std::uint32_t s = std::uint32_t{a} + b;
            return static_cast<Element>(s >= p_ ? s - p_ : s);
        }
        return digitwise(a, b, false);
    }

    Element neg(Element a) const {
        if (p_ == 2 || a == 0) return a;
        if (m_ == 1) return static_cast<Element>(p_ - a);
        return digitwise(0, a, true);
    }

    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return static_cast<Element>((std::uint32_t{a} * b) % p_);
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    Element inv(Element a) const {
        if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
        if (m_ == 1) return pow(a, q_ - 2);
        std::uint32_t e = log_[a] == 0 ? 0 : (q_ - 1) - log_[a];
        return exp_[e];
    }

    Element div(Element a, Element b) const {
        if (b == 0) throw Error(Errc::division_by_zero, "division by zero");
        return mul(a, inv(b));
    }

    Element pow(Element a, std::uint64_t e) const {
        Element r = 1;
        Element base = a;
        while (e != 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Element apply(Op op, Element a, Element b = 0) const {
        switch (op) {
        case Op::add: return add(a, b);
        case Op::sub: return sub(a, b);
        case Op::mul: return mul(a, b);
        case Op::div: return div(a, b);
        case Op::neg: return neg(a);
        case Op::inv: return inv(a);
        }
        return 0;
    }

    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }

    /// Multiplicative order of a nonzero element.
    std::uint32_t order(Element a) const;

    /// Smallest-encoded element of order q-1.
    Element primitive_element() const { return primitive_; }

    /// Smallest-encoded alpha with alpha^2 = -1, if any.
    std::optional<Element> sqrt_of_minus_one() const {
        const Element minus_one = neg(1);
        for (std::uint32_t a = 1; a < q_; ++a)
            if (mul(static_cast<Element>(a), static_cast<Element>(a)) == minus_one)
                return static_cast<Element>(a);
        return std::nullopt;
    }

    bool operator==(const Field& o) const { return q_ == o.q_ && modulus_ == o.modulus_; }

private:
    Field() = default;

    Element digitwise(Element a, Element b, bool negate_b) const {
        std::uint32_t out = 0, scale = 1;
        std::uint32_t x = a, y = b;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t da = x % p_, db = y % p_;
            x /= p_;
            y /= p_;
            if (negate_b) db = (p_ - db) % p_;
            out += ((da + db) % p_) * scale;
            scale *= p_;
        }
        return static_cast<Element>(out);
    }

    std::uint32_t p_ = 2, m_ = 1, q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Element> add_table_;
    Element primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Canonical GF(q); throws Errc::not_a_prime_power outside prime powers in [2, 2^16].
inline FieldPtr make_field(std::uint32_t q) { return Field::make(q); }

namespace detail {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Polynomials over GF(p), coefficient i of x^i, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

/// Remainder of a modulo b (b nonzero).
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint32_t f = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - f} * b[i]) % p);
        trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    trim(r);
    return r;
}

inline Poly poly_from_code(std::uint32_t code, std::uint32_t p) {
    Poly r;
    while (code) {
        r.push_back(code % p);
        code /= p;
    }
    return r;
}

inline std::uint32_t poly_to_code(const Poly& a, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

/// Irreducibility of a monic degree-m polynomial by trial division with
/// every monic polynomial of degree 1..m/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint32_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly g = poly_from_code(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace detail

inline std::shared_ptr<const Field> Field::make(std::uint32_t q) {
    if (q < 2 || q > (1u << 16))
        throw Error(Errc::not_a_prime_power, "field order " + std::to_string(q) + " outside [2, 65536]");
    const auto factors = detail::prime_factors(q);
    if (factors.size() != 1)
        throw Error(Errc::not_a_prime_power, std::to_string(q) + " is not a prime power");

    std::shared_ptr<Field> f(new Field());
    f->p_ = factors.front();
    f->q_ = q;
    f->m_ = 0;
    for (std::uint32_t x = q; x > 1; x /= f->p_) ++f->m_;

    const std::uint32_t p = f->p_, m = f->m_;
    if (m > 1) {
        // Canonical modulus: first irreducible in the order of its low-coefficient code.
        for (std::uint32_t low = 0; low < q; ++low) {
            detail::Poly cand = detail::poly_from_code(low, p);
            cand.resize(m + 1, 0);
            cand[m] = 1;
            if (detail::is_irreducible(cand, p)) {
                f->modulus_.assign(cand.begin(), cand.begin() + m);
                break;
            }
        }
        detail::Poly mod(f->modulus_.begin(), f->modulus_.end());
        mod.push_back(1);

        auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
            return detail::poly_to_code(
                detail::poly_mod(detail::poly_mul(detail::poly_from_code(a, p), detail::poly_from_code(b, p), p),
                                 mod, p),
                p);
        };
        auto slow_order_is_full = [&](std::uint32_t g) {
            for (std::uint32_t r : detail::prime_factors(q - 1)) {
                std::uint32_t e = (q - 1) / r, acc = 1, base = g;
                while (e) {
                    if (e & 1) acc = slow_mul(acc, base);
                    base = slow_mul(base, base);
                    e >>= 1;
                }
                if (acc == 1) return false;
            }
            return true;
        };
        std::uint32_t g = 2;
        while (!slow_order_is_full(g)) ++g;

        f->exp_.resize(q - 1);
        f->log_.assign(q, 0);
        std::uint32_t cur = 1;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            f->exp_[i] = static_cast<Element>(cur);
            f->log_[cur] = i;
            cur = slow_mul(cur, g);
        }
        f->primitive_ = static_cast<Element>(g);
    }

    if (q <= 256) {
        std::vector<Element> table(std::size_t{q} * q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                table[std::size_t{a} * q + b] =
                    p == 2 ? static_cast<Element>(a ^ b)
                    : m == 1 ? static_cast<Element>((a + b) % p)
                             : f->digitwise(static_cast<Element>(a), static_cast<Element>(b), false);
        f->add_table_ = std::move(table);
    }

    if (m == 1) {
        if (q == 2) {
            f->primitive_ = 1;
        } else {
            for (std::uint32_t g = 2; g < q; ++g) {
                if (f->order(static_cast<Element>(g)) == q - 1) {
                    f->primitive_ = static_cast<Element>(g);
                    break;
                }
            }
        }
    }
    return f;
}

inline std::uint32_t Field::order(Element a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "order of zero");
    std::uint32_t ord = q_ - 1;
    for (std::uint32_t r : detail::prime_factors(q_ - 1))
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    return ord;
}

inline std::string Field::modulus_string() const {
    if (m_ == 1) return "";
    std::string s = "x^" + std::to_string(m_);
    for (std::uint32_t i = m_; i-- > 0;) {
        const std::uint32_t c = modulus_[i];
        if (c == 0) continue;
        s += "+";
        if (c != 1 || i == 0) s += std::to_string(c);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

} // namespace crcodes
