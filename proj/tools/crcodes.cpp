/**************************************************************************
 * crcodes.cpp
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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <crcodes/crcodes.hpp>

using namespace crcodes;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kGuard = 3, kVerify = 4 };

int exit_code(Errc e) {
    if (e == Errc::malformed_file) return kParse;
    if (is_guard_error(e)) return kGuard;
    return kUsage;
}

std::string hit_text(const FeasHit& h) {
    std::string s = "q=" + std::to_string(h.q) + " k=" + std::to_string(h.k);
    if (h.extra) s += " extra=" + std::to_string(*h.extra);
    return s + " value=" + std::to_string(h.value);
}

Json hit_json(const FeasHit& h) {
    Json j{{"q", h.q}, {"k", h.k}};
    j["extra"] = h.extra ? Json(*h.extra) : Json(nullptr);
    j["value"] = h.value;
    return j;
}

Json verification_json(const EntryVerification& v) {
    Json j;
    j["name"] = v.name;
    j["stretch"] = v.stretch;
    j["passed"] = v.passed();
    j["intersection_array"] = v.intersection_array ? Json(v.intersection_array->to_string()) : Json(nullptr);
    Json betas = Json::array();
    for (const auto& b : v.betas) betas.push_back(rational_string(b));
    j["betas"] = betas;
    Json checks = Json::array();
    for (const auto& c : v.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analyzer for linear codes over finite fields and self-dual completely regular codes"};
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--workers", workers, "Worker threads (0 = available parallelism)");

    std::string path;
    bool json = false, timings = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a code file");
    analyze_cmd->add_option("file", path, "Code file")->required();
    analyze_cmd->add_flag("--json", json, "JSON output");
    analyze_cmd->add_flag("--timings", timings, "Include stage timings");

    std::string family;
    auto* scan_cmd = app.add_subcommand("scan", "Scan a feasibility family for natural values");
    scan_cmd->add_option("family", family, "rho2_d4 | rho3_d6 | rho3_d5 | rho3_d4 | rho3_d4_binary")->required();
    scan_cmd->add_flag("--json", json, "JSON output");

    std::int64_t pq = 0, pk = 0, w1 = 0, w2 = 0, w3 = 0;
    auto* pless_cmd = app.add_subcommand("pless", "Solve the power moments for a three-weight self-dual code");
    pless_cmd->add_option("q", pq)->required();
    pless_cmd->add_option("k", pk)->required();
    pless_cmd->add_option("w1", w1)->required();
    pless_cmd->add_option("w2", w2)->required();
    pless_cmd->add_option("w3", w3)->required();

    auto* table1_cmd = app.add_subcommand("table1", "Check the three-weight table formulas against the solver");

    auto* catalog_cmd = app.add_subcommand("catalog", "Catalog of self-dual completely regular codes");
    catalog_cmd->require_subcommand(1);
    catalog_cmd->add_subcommand("list", "List catalog entries");
    std::string name, out_path;
    auto* build_cmd = catalog_cmd->add_subcommand("build", "Write an entry in code-file format");
    build_cmd->add_option("name", name)->required();
    build_cmd->add_option("--out", out_path, "Output file (default stdout)");
    auto* verify_cmd = catalog_cmd->add_subcommand("verify", "Verify entries against their published values");
    verify_cmd->add_option("name", name);
    verify_cmd->add_flag("--json", json, "JSON output");

    SearchSpec spec;
    auto* exists_cmd = app.add_subcommand("exists", "Exhaustive search over systematic generators");
    exists_cmd->add_option("n", spec.n)->required();
    exists_cmd->add_option("k", spec.k)->required();
    exists_cmd->add_option("dmin", spec.d_min)->required();
    exists_cmd->add_option("--q", spec.q, "Field size")->required();
    exists_cmd->add_flag("--self-dual", spec.self_dual, "Require C = C^perp");
    exists_cmd->add_option("--limit", spec.limit_bits, "Refuse spaces above 2^limit (default 24)");
    exists_cmd->add_flag("--all", spec.all, "Print every witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze_cmd) {
            const LinearCode code = read_code_file(path);
            const AnalysisReport r = analyze(code, {workers, timings});
            if (json)
                std::cout << to_json(r, timings).dump(2) << "\n";
            else
                std::cout << to_text(r);
            return kOk;
        }
        if (*scan_cmd) {
            const auto fam = parse_family(family);
            if (!fam) {
                std::cerr << "unknown family '" << family << "'\n";
                return kUsage;
            }
            const ScanResult res = scan_family(*fam, workers);
            if (json) {
                Json j;
                j["family"] = family;
                j["points"] = res.points;
                Json hits = Json::array();
                for (const auto& h : res.hits) hits.push_back(hit_json(h));
                j["hits"] = hits;
                Json ex = Json::array();
                for (const auto& h : res.excluded_by_divisibility) ex.push_back(hit_json(h));
                j["excluded_by_divisibility"] = ex;
                Json zero = Json::array();
                for (const auto& p : res.zero_denominator) zero.push_back({p.q, p.k, p.extra});
                j["zero_denominator"] = zero;
                j["negative_denominator"] = res.negative_denominator;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << family << ": " << res.hits.size() << " hit(s) over " << res.points << " points\n";
                for (const auto& h : res.hits) std::cout << "  " << hit_text(h) << "\n";
                for (const auto& h : res.excluded_by_divisibility)
                    std::cout << "  excluded (no self-dual code with this minimum weight): " << hit_text(h) << "\n";
                for (const auto& p : res.zero_denominator)
                    std::cout << "  zero denominator at q=" << p.q << " k=" << p.k << " extra=" << p.extra << "\n";
            }
            return kOk;
        }
        if (*pless_cmd) {
            if (pq < 2 || pq > 65536 || !is_prime_power(static_cast<std::uint32_t>(pq))) {
                std::cerr << "q must be a prime power\n";
                return kUsage;
            }
            const auto b = pless_solve_3w(static_cast<std::uint32_t>(pq), pk, w1, w2, w3);
            std::cout << rational_display(b[0]) << " " << rational_display(b[1]) << " " << rational_display(b[2])
                      << "\n";
            return kOk;
        }
        if (*table1_cmd) {
            const Table1Report rep = table1_verify();
            for (const auto& c : rep.checks)
                std::cout << "row " << c.row << " q=" << c.q << " " << (c.pass ? "ok" : "MISMATCH")
                          << (c.infeasible ? " infeasible" : "") << "\n";
            return rep.all_pass() ? kOk : kVerify;
        }
        if (*catalog_cmd) {
            if (catalog_cmd->got_subcommand("list")) {
                for (const auto& e : catalog_entries()) {
                    const auto& x = e.expected;
                    std::cout << e.name << " [" << x.n << "," << x.k << "," << x.d << "]_" << e.q << " rho=" << x.rho
                              << " IA="
                              << (x.intersection_array ? x.intersection_array->to_string() : std::string("computed"))
                              << (e.stretch ? " (stretch)" : "") << "\n";
                }
                return kOk;
            }
            if (*build_cmd) {
                const LinearCode code = build_named(name);
                if (out_path.empty())
                    std::cout << serialize_code(code, name);
                else
                    write_code_file(out_path, code, name);
                return kOk;
            }
            if (*verify_cmd) {
                std::vector<CatalogEntry> entries;
                for (const auto& e : catalog_entries())
                    if (name.empty() || e.name == name) entries.push_back(e);
                if (entries.empty()) {
                    std::cerr << "unknown catalog entry '" << name << "'\n";
                    return kUsage;
                }
                const CatalogReport rep = verify_catalog(entries, workers);
                if (json) {
                    Json j = Json::array();
                    for (const auto& v : rep.entries) j.push_back(verification_json(v));
                    std::cout << j.dump(2) << "\n";
                } else {
                    for (const auto& v : rep.entries) {
                        std::cout << (v.passed() ? "PASS " : "FAIL ") << v.name;
                        if (v.intersection_array) std::cout << " IA=" << v.intersection_array->to_string();
                        std::cout << "\n";
                        for (const auto& c : v.checks)
                            std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name
                                      << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
                    }
                }
                return rep.passed() ? kOk : kVerify;
            }
        }
        if (*exists_cmd) {
            const SearchResult res = search_codes(spec, workers);
            if (!res.witness) {
                std::cout << "NONE\n";
                return kOk;
            }
            if (spec.all) {
                std::cout << res.witnesses.size() << " witness(es)\n";
                for (const auto& w : res.witnesses) std::cout << serialize_code(w);
            } else {
                std::cout << serialize_code(*res.witness);
            }
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return kUsage;
}
