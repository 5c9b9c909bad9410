/**************************************************************************
 * search.hpp
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

#include <cmath>
#include <optional>
#include <vector>

#include "code.hpp"
#include "error.hpp"
#include "util.hpp"

namespace crcodes {

struct SearchSpec {
    std::size_t n = 0, k = 0;
    std::uint32_t q = 2;
    std::size_t d_min = 1;
    bool self_dual = false;
    unsigned limit_bits = 24; // refuse q^{k(n-k)} above 2^limit_bits
    bool all = false;         // collect every witness, not only the first
};

struct SearchResult {
    /// First witness in counter order of P, or empty.
    std::optional<LinearCode> witness;
    /// Every witness in counter order; filled only when spec.all is set.
    std::vector<LinearCode> witnesses;
    /// log2 of the systematic search space q^{k(n-k)}.
    double space_bits = 0;
};

namespace detail {

class SystematicSearch {
public:
    SystematicSearch(const SearchSpec& spec, FieldPtr f) : spec_(spec), f_(std::move(f)), r_(spec.n - spec.k) {
        build_candidates();
    }

    const std::vector<std::vector<Element>>& top_candidates() const { return candidates_; }

    /**
     * Tries rows k-1 .. 0 with the top row fixed to candidates_[top]. Rows
     * are chosen most significant first, each in ascending counter order,
     * so the first complete assignment is the smallest P.
     */
    void run(std::size_t top, std::vector<Matrix>& found, bool all) {
        chosen_.assign(spec_.k, {});
        words_.clear();
        words_.push_back({0, std::vector<Element>(r_, 0)});
        stop_ = false;
        found_ = &found;
        all_ = all;
        place(spec_.k - 1, &candidates_[top]);
    }

private:
    struct Partial {
        std::size_t info_weight;
        std::vector<Element> tail;
    };

    void build_candidates() {
        const std::uint64_t count = *checked_pow(spec_.q, r_, ~std::uint64_t{0});
        std::vector<Element> v(r_, 0);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t x = idx;
            for (std::size_t j = 0; j < r_; ++j) {
                v[j] = static_cast<Element>(x % spec_.q);
                x /= spec_.q;
            }
            if (1 + weight(v) < spec_.d_min) continue;
            if (spec_.self_dual && f_->add(1, dot(*f_, v, v)) != 0) continue;
            candidates_.push_back(v);
        }
    }

    bool compatible(const std::vector<Element>& v, std::size_t row) const {
        if (!spec_.self_dual) return true;
        for (std::size_t i = row + 1; i < spec_.k; ++i)
            if (dot(*f_, v, chosen_[i]) != 0) return false;
        return true;
    }

    // Extends the subcode by row `row`; false if a new word is too light.
    bool extend(const std::vector<Element>& v, std::size_t& undo) {
        undo = words_.size();
        for (std::size_t w = 0; w < undo; ++w) {
            for (std::uint32_t a = 1; a < spec_.q; ++a) {
                Partial p{words_[w].info_weight + 1, words_[w].tail};
                for (std::size_t j = 0; j < r_; ++j)
                    p.tail[j] = f_->add(p.tail[j], f_->mul(static_cast<Element>(a), v[j]));
                if (p.info_weight + weight(p.tail) < spec_.d_min) {
                    words_.resize(undo);
                    return false;
                }
                words_.push_back(std::move(p));
            }
        }
        return true;
    }

    void place(std::size_t row, const std::vector<Element>* only) {
        auto attempt = [&](const std::vector<Element>& v) {
            if (!compatible(v, row)) return;
            std::size_t undo = 0;
            if (!extend(v, undo)) return;
            chosen_[row] = v;
            if (row == 0)
                record();
            else
                place(row - 1, nullptr);
            words_.resize(undo);
        };
        if (only) {
            attempt(*only);
            return;
        }
        for (const auto& v : candidates_) {
            attempt(v);
            if (stop_) return;
        }
    }

    void record() {
        Matrix g(f_, spec_.k, spec_.n);
        for (std::size_t i = 0; i < spec_.k; ++i) {
            g(i, i) = 1;
            for (std::size_t j = 0; j < r_; ++j) g(i, spec_.k + j) = chosen_[i][j];
        }
        found_->push_back(std::move(g));
        if (!all_) stop_ = true;
    }

    const SearchSpec& spec_;
    FieldPtr f_;
    std::size_t r_;
    std::vector<std::vector<Element>> candidates_;
    std::vector<std::vector<Element>> chosen_;
    std::vector<Partial> words_;
    std::vector<Matrix>* found_ = nullptr;
    bool stop_ = false;
    bool all_ = false;
};

} // namespace detail

/**
 * Exhaustive search over systematic generators [I_k | P], P in
 * GF(q)^{k x (n-k)}. Every [n,k] code is systematic on some coordinate
 * set and permuting coordinates preserves self-duality and distance, so
 * an empty result proves nonexistence. Work is sharded over the last row
 * of P; the reported witness is the minimal one in counter order (entry
 * P[0][0] least significant) regardless of the worker count.
 */
inline SearchResult search_codes(const SearchSpec& spec, unsigned workers = 0) {
    if (spec.k == 0 || spec.n < spec.k || spec.n > LinearCode::kMaxLength)
        throw Error(Errc::invalid_argument, "search needs 1 <= k <= n <= 64");
    FieldPtr f = make_field(spec.q);
    SearchResult out;
    const std::uint64_t cells = spec.k * (spec.n - spec.k);
    out.space_bits = static_cast<double>(cells) * std::log2(static_cast<double>(spec.q));
    const unsigned bits = std::min(spec.limit_bits, 63u);
    if (!checked_pow(spec.q, cells, std::uint64_t{1} << bits))
        throw Error(Errc::search_space_too_large,
                    "search space " + std::to_string(spec.q) + "^" + std::to_string(cells) + " exceeds 2^" +
                        std::to_string(spec.limit_bits));
    if (spec.self_dual && spec.n != 2 * spec.k) return out;
    if (spec.n == spec.k) {
        // P is empty: the only candidate is the full space.
        LinearCode c(Matrix::identity(f, spec.n));
        if (spec.d_min <= 1) {
            out.witness = c;
            if (spec.all) out.witnesses.push_back(c);
        }
        return out;
    }

    detail::SystematicSearch probe(spec, f);
    const std::size_t shards = probe.top_candidates().size();
    std::vector<std::vector<Matrix>> per_shard(shards);
    parallel_chunks(shards, workers, [&](std::size_t begin, std::size_t end) {
        detail::SystematicSearch local(spec, f);
        for (std::size_t s = begin; s < end; ++s) {
            local.run(s, per_shard[s], spec.all);
            if (!spec.all && !per_shard[s].empty()) return; // later shards hold larger P
        }
    });
    for (auto& shard : per_shard) {
        for (auto& g : shard) {
            if (!out.witness) out.witness.emplace(g);
            if (spec.all) out.witnesses.emplace_back(g);
        }
        if (!spec.all && out.witness) break;
    }
    return out;
}

inline std::optional<LinearCode> exists_code(const SearchSpec& spec, unsigned workers = 0) {
    return search_codes(spec, workers).witness;
}

} // namespace crcodes
