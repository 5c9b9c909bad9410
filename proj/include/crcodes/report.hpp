/**************************************************************************
 * report.hpp
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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "code.hpp"
#include "coset.hpp"
#include "design.hpp"
#include "upws.hpp"

namespace crcodes {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
    unsigned workers = 0;
    bool timings = false;
};

struct StageTiming {
    std::string stage;
    double milliseconds = 0;
};

/// Everything `analyze` reports about one code.
struct AnalysisReport {
    std::uint32_t q = 0;
    std::size_t n = 0, k = 0, d = 0;
    std::string modulus;
    bool self_dual = false;
    bool antipodal = false;
    WeightDistribution weights;
    WeightDistribution dual_weights;
    std::size_t s = 0;
    std::size_t rho = 0;
    std::vector<std::uint64_t> subconstituents;
    RegularityReport regularity;
    std::optional<PackingCoefficients> upws;
    std::optional<bool> sphere_packing;
    std::optional<std::vector<Rational>> closed_form_betas;
    std::string closed_form_status; // "match", "mismatch", "case-not-covered", "not-applicable"
    std::optional<DesignReport> designs;
    std::string designs_status; // "checked", "not-completely-regular", or the guard message
    StructuralReport structure;
    std::vector<StageTiming> timings;
    // Coset representatives for the regularity witnesses, if any.
    std::vector<std::vector<Element>> witness_vectors;
};

inline AnalysisReport analyze(const LinearCode& code, const AnalysisOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    AnalysisReport r;
    auto timed = [&](const char* stage, auto&& fn) {
        const auto t0 = clock::now();
        fn();
        r.timings.push_back({stage, std::chrono::duration<double, std::milli>(clock::now() - t0).count()});
    };

    r.q = code.q();
    r.n = code.n();
    r.k = code.k();
    r.modulus = code.field().modulus_string();
    timed("weights", [&] {
        r.weights = weight_distribution(code);
        r.d = r.weights.min_weight();
        r.self_dual = is_self_dual(code);
        r.antipodal = is_antipodal(r.weights);
        if (r.k < r.n) {
            r.dual_weights = macwilliams_transform(r.weights, r.n, r.k, r.q);
            r.s = r.dual_weights.nonzero_weights().size();
        } else {
            r.dual_weights.counts.assign(r.n + 1, 0);
            r.dual_weights.counts[0] = 1;
        }
    });
    timed("structure", [&] { r.structure = structural_checks(code); });

    std::optional<CosetTable> table;
    std::optional<CosetDistances> distances;
    timed("cosets", [&] {
        table.emplace(code);
        distances.emplace(*table, opt.workers);
        r.rho = table->covering_radius();
        r.subconstituents = table->subconstituent_sizes();
        r.regularity = check_regularity(*table, *distances);
        for (const auto& w : {r.regularity.neighbor_witness, r.regularity.distance_witness}) {
            if (!w) continue;
            const auto a = table->representative(w->first);
            const auto b = table->representative(w->second);
            r.witness_vectors.emplace_back(a.begin(), a.end());
            r.witness_vectors.emplace_back(b.begin(), b.end());
        }
    });

    timed("upws", [&] {
        r.upws = solve_upws(*table, *distances);
        if (r.upws) r.sphere_packing = sphere_packing_check(code, *r.upws);
        r.closed_form_status = "not-applicable";
        if (r.upws && r.regularity.profile && r.k < r.n) {
            try {
                r.closed_form_betas = beta_cr_closed_form(r.n, r.k, r.q, r.d, r.rho, *r.regularity.profile);
                r.closed_form_status = *r.closed_form_betas == r.upws->betas ? "match" : "mismatch";
            } catch (const Error& e) {
                if (e.code() != Errc::case_not_covered && e.code() != Errc::zero_denominator) throw;
                r.closed_form_status = errc_name(e.code());
            }
        }
    });

    timed("designs", [&] {
        if (!r.regularity.completely_regular()) {
            r.designs_status = "not-completely-regular";
            return;
        }
        try {
            r.designs = verify_cr_designs(code, true);
            r.designs_status = "checked";
        } catch (const Error& e) {
            if (!is_guard_error(e.code())) throw;
            r.designs_status = std::string("skipped (") + e.what() + ")";
        }
    });
    return r;
}

namespace detail {

inline Json distribution_json(const WeightDistribution& w) {
    Json j = Json::object();
    for (std::size_t i = 0; i < w.counts.size(); ++i)
        if (w.counts[i] != 0) j[std::to_string(i)] = w.counts[i];
    return j;
}

inline Json rationals_json(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(rational_string(x));
    return j;
}

inline Json witness_json(const std::optional<CosetWitness>& w) {
    if (!w) return nullptr;
    return Json{{"leader_weight", w->leader_weight}, {"syndromes", {w->first, w->second}}};
}

} // namespace detail

inline Json to_json(const AnalysisReport& r, bool with_timings = false) {
    Json j;
    j["parameters"] = {{"q", r.q}, {"n", r.n}, {"k", r.k}, {"d", r.d}};
    j["field_modulus"] = r.modulus;
    j["self_dual"] = r.self_dual;
    j["antipodal"] = r.antipodal;
    j["weight_distribution"] = detail::distribution_json(r.weights);
    j["dual_weights"] = detail::distribution_json(r.dual_weights);
    j["s"] = r.s;
    j["rho"] = r.rho;
    j["is_CR"] = r.regularity.completely_regular();
    j["intersection_array"] =
        r.regularity.intersection_array ? Json(r.regularity.intersection_array->to_string()) : Json(nullptr);
    j["subconstituents"] = r.subconstituents;
    Json reg;
    reg["neighbor_criterion"] = r.regularity.neighbor_criterion;
    reg["distance_criterion"] = r.regularity.distance_criterion;
    reg["criteria_agree"] = r.regularity.criteria_agree();
    reg["neighbor_witness"] = detail::witness_json(r.regularity.neighbor_witness);
    reg["distance_witness"] = detail::witness_json(r.regularity.distance_witness);
    reg["witness_vectors"] = r.witness_vectors;
    if (r.regularity.profile)
        reg["distance_profile"] = r.regularity.profile->rows;
    else
        reg["distance_profile"] = nullptr;
    j["regularity"] = reg;

    Json up;
    up["solvable"] = r.upws.has_value();
    if (r.upws) {
        up["betas"] = detail::rationals_json(r.upws->betas);
        up["unique"] = r.upws->unique();
        up["sphere_packing"] = r.sphere_packing.value_or(false);
    }
    up["closed_form"] = r.closed_form_status;
    if (r.closed_form_betas) up["closed_form_betas"] = detail::rationals_json(*r.closed_form_betas);
    j["upws"] = up;

    Json ds;
    ds["status"] = r.designs_status;
    if (r.designs) {
        ds["packing_radius"] = r.designs->packing_radius;
        Json checks = Json::array();
        for (const auto& c : r.designs->checks)
            checks.push_back({{"weight", c.weight},
                              {"strength", c.strength},
                              {"blocks", c.blocks},
                              {"lambda", c.lambda ? Json(*c.lambda) : Json(nullptr)}});
        ds["checks"] = checks;
        ds["all_hold"] = r.designs->all_hold();
    }
    j["designs"] = ds;

    Json st;
    st["min_weight_supports_cover"] = r.structure.min_weight_supports_cover;
    st["no_unit_intersections"] =
        r.structure.no_unit_intersections ? Json(*r.structure.no_unit_intersections) : Json(nullptr);
    st["weight_divisibility"] =
        r.structure.weight_divisibility ? Json(*r.structure.weight_divisibility) : Json(nullptr);
    j["structural_checks"] = st;

    if (with_timings) {
        Json t = Json::object();
        for (const auto& s : r.timings) t[s.stage] = s.milliseconds;
        j["timings"] = t;
    }
    return j;
}

inline std::string to_text(const AnalysisReport& r) {
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) { out += key + ": " + value + "\n"; };
    auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
    line("code", "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "]_" +
                     std::to_string(r.q));
    line("self_dual", yes(r.self_dual));
    line("antipodal", yes(r.antipodal));
    line("weights", detail::distribution_json(r.weights).dump());
    line("dual_weights", detail::distribution_json(r.dual_weights).dump());
    line("s", std::to_string(r.s));
    line("rho", std::to_string(r.rho));
    line("completely_regular", yes(r.regularity.completely_regular()));
    if (r.regularity.intersection_array) line("intersection_array", r.regularity.intersection_array->to_string());
    for (const auto& w : {r.regularity.neighbor_witness, r.regularity.distance_witness})
        if (w)
            line("witness", "syndromes " + std::to_string(w->first) + " and " + std::to_string(w->second) +
                                " (leader weight " + std::to_string(w->leader_weight) + ")");
    if (r.upws) {
        line("betas", detail::rationals_json(r.upws->betas).dump());
        line("sphere_packing", yes(r.sphere_packing.value_or(false)));
    } else {
        line("betas", "none");
    }
    line("closed_form", r.closed_form_status);
    if (r.designs) {
        for (const auto& c : r.designs->checks)
            line("design", "weight " + std::to_string(c.weight) + ": " + std::to_string(c.strength) + "-design " +
                               (c.lambda ? "lambda=" + std::to_string(*c.lambda) : "fails"));
    } else {
        line("designs", r.designs_status);
    }
    return out;
}

} // namespace crcodes
