/**************************************************************************
 * coset.hpp
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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "code.hpp"
#include "error.hpp"
#include "util.hpp"

namespace crcodes {

/// {b_0, ..., b_{rho-1}; c_1, ..., c_rho} together with a_0..a_rho.
struct IntersectionArray {
    std::size_t rho = 0;
    std::vector<std::uint64_t> b; // b_0..b_{rho-1}
    std::vector<std::uint64_t> c; // c_1..c_rho
    std::vector<std::uint64_t> a; // a_0..a_rho

    /// Fills a_l = degree - b_l - c_l, with c_0 = b_rho = 0.
    static IntersectionArray from_bc(std::vector<std::uint64_t> b, std::vector<std::uint64_t> c,
                                     std::uint64_t degree) {
        IntersectionArray ia;
        ia.rho = b.size();
        ia.b = std::move(b);
        ia.c = std::move(c);
        ia.a.resize(ia.rho + 1);
        for (std::size_t l = 0; l <= ia.rho; ++l) {
            const std::uint64_t bl = l < ia.rho ? ia.b[l] : 0;
            const std::uint64_t cl = l > 0 ? ia.c[l - 1] : 0;
            ia.a[l] = degree - bl - cl;
        }
        return ia;
    }

    /// Brace-semicolon notation, e.g. "{8,7;1,4}".
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        s += ";";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "}";
    }

    bool operator==(const IntersectionArray&) const = default;
};

/// rows[l][t] = B_{x,t} for any x at distance l from the code.
struct DistanceProfile {
    std::vector<std::vector<std::uint64_t>> rows;

    std::uint64_t p(std::size_t i, std::size_t j) const { return rows.at(i).at(j); }
    bool operator==(const DistanceProfile&) const = default;
};

/**
 * Syndrome-indexed coset leaders. Syndromes are encoded as integers
 * sum s_j q^j over the parity-check rows. Leaders are found breadth-first
 * by weight; within a weight, vectors are visited in increasing base-q
 * counter order (coordinate 0 least significant), and the first vector
 * reaching a syndrome is its representative.
 */
class CosetTable {
public:
    explicit CosetTable(const LinearCode& code)
        : code_(code), parity_(parity_check_matrix(code)), q_(code.q()), redundancy_(code.n() - code.k()) {
        auto count = checked_pow(q_, redundancy_);
        if (!count)
            throw Error(Errc::too_many_cosets,
                        "q^(n-k) = " + std::to_string(q_) + "^" + std::to_string(redundancy_) + " exceeds 2^24");
        count_ = *count;
        build_column_syndromes();
        build_leaders();
    }

    const LinearCode& code() const { return code_; }
    const Matrix& parity_check() const { return parity_; }
    std::uint64_t size() const { return count_; }
    std::size_t covering_radius() const { return rho_; }

    std::size_t leader_weight(std::uint64_t syndrome) const { return leader_weight_.at(syndrome); }

    std::span<const Element> representative(std::uint64_t syndrome) const {
        return {reps_.data() + syndrome * code_.n(), code_.n()};
    }

    /// Syndrome index of a * e_i.
    std::uint64_t column_syndrome(std::size_t i, Element a) const { return column_syn_[i * q_ + a]; }

    /// Digit-wise field sum of two syndrome indices.
    std::uint64_t syndrome_add(std::uint64_t x, std::uint64_t y) const {
        if (q_ == 2) return x ^ y;
        const Field& f = code_.field();
        std::uint64_t out = 0, scale = 1;
        for (std::size_t j = 0; j < redundancy_; ++j) {
            out += f.add(static_cast<Element>(x % q_), static_cast<Element>(y % q_)) * scale;
            x /= q_;
            y /= q_;
            scale *= q_;
        }
        return out;
    }

    std::uint64_t syndrome(std::span<const Element> v) const {
        check_vector(v);
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) s = syndrome_add(s, column_syndrome(i, v[i]));
        return s;
    }

    std::size_t distance_to_code(std::span<const Element> v) const { return leader_weight_[syndrome(v)]; }

    /// |C(i)| for i = 0..rho.
    std::vector<std::uint64_t> subconstituent_sizes() const {
        std::vector<std::uint64_t> sizes(rho_ + 1, 0);
        const std::uint64_t per_coset = *checked_pow(q_, code_.k());
        for (auto w : leader_weight_) sizes[w] += per_coset;
        return sizes;
    }

    /// Number of cosets with each leader weight.
    std::vector<std::uint64_t> leader_weight_counts() const {
        std::vector<std::uint64_t> counts(rho_ + 1, 0);
        for (auto w : leader_weight_) ++counts[w];
        return counts;
    }

    void check_vector(std::span<const Element> v) const {
        if (v.size() != code_.n())
            throw Error(Errc::dimension_mismatch,
                        "vector of length " + std::to_string(v.size()) + " for a length-" +
                            std::to_string(code_.n()) + " code");
        for (Element e : v)
            if (!code_.field().contains(e)) throw Error(Errc::invalid_argument, "vector entry outside the field");
    }

private:
    void build_column_syndromes() {
        const Field& f = code_.field();
        const std::size_t n = code_.n();
        column_syn_.assign(n * q_, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t a = 1; a < q_; ++a) {
                std::uint64_t s = 0, scale = 1;
                for (std::size_t j = 0; j < redundancy_; ++j) {
                    s += f.mul(static_cast<Element>(a), parity_(j, i)) * scale;
                    scale *= q_;
                }
                column_syn_[i * q_ + a] = s;
            }
    }

    void build_leaders() {
        const std::size_t n = code_.n();
        constexpr std::uint8_t unset = 0xff;
        leader_weight_.assign(count_, unset);
        reps_.assign(count_ * n, 0);
        std::uint64_t filled = 0;
        std::vector<Element> v(n, 0);

        // Weight-w vectors in increasing counter order: the highest support
        // position varies slowest, then its value, then the lower part.
        auto visit = [&](auto&& self, std::size_t remaining, std::size_t limit, std::uint64_t syn,
                         std::size_t w) -> void {
            if (filled == count_) return;
            if (remaining == 0) {
                if (leader_weight_[syn] == unset) {
                    leader_weight_[syn] = static_cast<std::uint8_t>(w);
                    std::copy(v.begin(), v.end(), reps_.begin() + static_cast<std::ptrdiff_t>(syn * n));
                    ++filled;
                }
                return;
            }
            for (std::size_t top = remaining - 1; top < limit; ++top) {
                for (std::uint32_t a = 1; a < q_; ++a) {
                    v[top] = static_cast<Element>(a);
                    self(self, remaining - 1, top, syndrome_add(syn, column_syn_[top * q_ + a]), w);
                    if (filled == count_) break;
                }
                v[top] = 0;
                if (filled == count_) return;
            }
        };
        for (std::size_t w = 0; w <= n && filled < count_; ++w) {
            visit(visit, w, n, 0, w);
            rho_ = w;
        }
        std::fill(v.begin(), v.end(), 0);
    }

    LinearCode code_;
    Matrix parity_;
    std::uint32_t q_;
    std::size_t redundancy_;
    std::uint64_t count_ = 1;
    std::size_t rho_ = 0;
    std::vector<std::uint64_t> column_syn_;
    std::vector<std::uint8_t> leader_weight_;
    std::vector<Element> reps_;
};

/// Largest q^n for which every coset representative is compared with every codeword.
inline constexpr std::uint64_t kCosetWorkLimit = std::uint64_t{1} << 32;

/**
 * B_{r,t} for every coset representative r: the histogram of wt(r + c)
 * over all codewords c. By coset invariance this is the B-vector of
 * every vector in the coset.
 */
class CosetDistances {
public:
    CosetDistances(const CosetTable& table, unsigned workers = 0) : n_(table.code().n()) {
        const LinearCode& code = table.code();
        if (!checked_pow(code.q(), code.n(), kCosetWorkLimit))
            throw Error(Errc::too_large_to_enumerate, "q^n exceeds 2^32 coset-by-codeword comparisons");
        const std::vector<Element> words = code.codewords();
        const std::size_t n = n_;
        const std::size_t word_count = words.size() / n;
        const Field& f = code.field();
        rows_.assign(table.size() * (n + 1), 0);
        parallel_chunks(table.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t s = begin; s < end; ++s) {
                const auto r = table.representative(s);
                std::uint64_t* row = &rows_[s * (n + 1)];
                for (std::size_t c = 0; c < word_count; ++c) {
                    const Element* w = &words[c * n];
                    std::size_t wt = 0;
                    for (std::size_t j = 0; j < n; ++j) wt += f.add(r[j], w[j]) != 0;
                    ++row[wt];
                }
            }
        });
    }

    std::size_t length() const { return n_; }
    std::uint64_t cosets() const { return rows_.size() / (n_ + 1); }
    std::span<const std::uint64_t> row(std::uint64_t syndrome) const {
        return {rows_.data() + syndrome * (n_ + 1), n_ + 1};
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> rows_;
};

struct CosetWitness {
    std::size_t leader_weight = 0;
    std::uint64_t first = 0, second = 0; // syndromes
};

struct RegularityReport {
    std::size_t rho = 0;
    bool neighbor_criterion = false;
    bool distance_criterion = false;
    std::optional<CosetWitness> neighbor_witness;
    std::optional<CosetWitness> distance_witness;
    std::optional<IntersectionArray> intersection_array;
    std::optional<DistanceProfile> profile;

    bool completely_regular() const { return neighbor_criterion && distance_criterion; }
    bool criteria_agree() const { return neighbor_criterion == distance_criterion; }
};

/**
 * Runs both complete-regularity criteria:
 *  - neighbor counts: every coset of leader weight l sends the same number
 *    of its n(q-1) weight-1 perturbations to weight l-1 (c_l) and l+1 (b_l);
 *  - distance distribution: the B-vector depends only on the leader weight.
 * Perturbations run over positions ascending, then nonzero values in
 * encoding order.
 */
inline RegularityReport check_regularity(const CosetTable& table, const CosetDistances& distances) {
    const LinearCode& code = table.code();
    const std::size_t n = code.n();
    const std::uint32_t q = code.q();
    const std::size_t rho = table.covering_radius();

    RegularityReport rep;
    rep.rho = rho;

    constexpr std::uint64_t none = ~std::uint64_t{0};
    std::vector<std::uint64_t> first_seen(rho + 1, none);
    std::vector<std::uint64_t> b(rho + 1, 0), c(rho + 1, 0), a(rho + 1, 0);
    rep.neighbor_criterion = true;
    for (std::uint64_t s = 0; s < table.size(); ++s) {
        const std::size_t l = table.leader_weight(s);
        std::uint64_t up = 0, down = 0, same = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t v = 1; v < q; ++v) {
                const std::size_t l2 = table.leader_weight(table.syndrome_add(s, table.column_syndrome(i, static_cast<Element>(v))));
                if (l2 + 1 == l) ++down;
                else if (l2 == l + 1) ++up;
                else ++same;
            }
        if (first_seen[l] == none) {
            first_seen[l] = s;
            b[l] = up;
            c[l] = down;
            a[l] = same;
        } else if (b[l] != up || c[l] != down) {
            rep.neighbor_criterion = false;
            if (!rep.neighbor_witness) rep.neighbor_witness = CosetWitness{l, first_seen[l], s};
        }
    }
    if (rep.neighbor_criterion) {
        IntersectionArray ia;
        ia.rho = rho;
        ia.b.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(rho));
        ia.c.assign(c.begin() + 1, c.end());
        ia.a = a;
        rep.intersection_array = std::move(ia);
    }

    rep.distance_criterion = true;
    DistanceProfile profile;
    profile.rows.assign(rho + 1, {});
    std::vector<std::uint64_t> first(rho + 1, none);
    for (std::uint64_t s = 0; s < table.size(); ++s) {
        const std::size_t l = table.leader_weight(s);
        const auto row = distances.row(s);
        if (first[l] == none) {
            first[l] = s;
            profile.rows[l].assign(row.begin(), row.end());
        } else if (!std::equal(row.begin(), row.end(), profile.rows[l].begin())) {
            rep.distance_criterion = false;
            if (!rep.distance_witness) rep.distance_witness = CosetWitness{l, first[l], s};
        }
    }
    if (rep.distance_criterion) rep.profile = std::move(profile);
    return rep;
}

struct CompleteRegularity {
    IntersectionArray intersection_array;
    DistanceProfile profile;
};

/// The intersection array and distance profile when the code is completely regular.
inline std::optional<CompleteRegularity> is_completely_regular(const LinearCode& code, unsigned workers = 0) {
    code.enumerable_size();
    const CosetTable table(code);
    const CosetDistances distances(table, workers);
    RegularityReport rep = check_regularity(table, distances);
    if (!rep.completely_regular()) return std::nullopt;
    return CompleteRegularity{std::move(*rep.intersection_array), std::move(*rep.profile)};
}

/// min over codewords of d(v, c), by brute force.
inline std::size_t brute_force_distance(const LinearCode& code, std::span<const Element> v) {
    const Field& f = code.field();
    std::size_t best = code.n();
    code.for_each_codeword([&](std::span<const Element> c) {
        std::size_t d = 0;
        for (std::size_t j = 0; j < c.size(); ++j) d += f.sub(v[j], c[j]) != 0;
        best = std::min(best, d);
    });
    return best;
}

/// B_{v,t} for t = 0..n, by brute force.
inline std::vector<std::uint64_t> brute_force_distance_row(const LinearCode& code, std::span<const Element> v) {
    const Field& f = code.field();
    std::vector<std::uint64_t> row(code.n() + 1, 0);
    code.for_each_codeword([&](std::span<const Element> c) {
        std::size_t d = 0;
        for (std::size_t j = 0; j < c.size(); ++j) d += f.sub(v[j], c[j]) != 0;
        ++row[d];
    });
    return row;
}

inline std::vector<Element> random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    std::vector<Element> v(n);
    for (auto& e : v) e = static_cast<Element>(pick(rng));
    return v;
}

/**
 * Samples random v and random codewords c and compares, by brute force,
 * d(v, C), d(v + c, C) and the B-vectors of v and v + c against the
 * table. Returns the number of mismatching samples.
 */
inline std::size_t spot_check_coset_invariance(const CosetTable& table, const CosetDistances& distances,
                                               std::size_t samples, std::uint64_t seed) {
    const LinearCode& code = table.code();
    const Field& f = code.field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto v = random_vector(f, code.n(), rng);
        std::vector<Element> msg(code.k());
        for (auto& e : msg) e = static_cast<Element>(pick(rng));
        const auto c = code.encode(msg);
        std::vector<Element> vc(code.n());
        for (std::size_t j = 0; j < vc.size(); ++j) vc[j] = f.add(v[j], c[j]);

        const std::uint64_t s = table.syndrome(v);
        const auto row = distances.row(s);
        const auto bv = brute_force_distance_row(code, v);
        const auto bvc = brute_force_distance_row(code, vc);
        const bool ok = brute_force_distance(code, v) == table.leader_weight(s) &&
                        table.distance_to_code(vc) == table.leader_weight(s) &&
                        std::equal(bv.begin(), bv.end(), row.begin()) && bv == bvc;
        if (!ok) ++mismatches;
    }
    return mismatches;
}

} // namespace crcodes
