/**************************************************************************
 * codefile.hpp
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

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "error.hpp"

namespace crcodes {

/*
 * Code file format:
 *   q n k
 *   k lines of n space-separated element codes
 * Lines starting with '#' and blank lines are ignored. Output uses LF
 * line endings and the stored RREF generator, so a round trip is exact.
 */

namespace detail {

inline std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
    std::vector<std::uint64_t> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(Errc::malformed_file, "line " + std::to_string(line_no) + ": '" + tok + "' is not a number");
        out.push_back(v);
    }
    return out;
}

} // namespace detail

inline LinearCode parse_code(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;
        lines.emplace_back(line_no, detail::parse_numbers(line, line_no));
    }
    if (lines.empty()) throw Error(Errc::malformed_file, "missing 'q n k' header");
    const auto& header = lines.front().second;
    if (header.size() != 3) throw Error(Errc::malformed_file, "header must be 'q n k'");
    const std::uint64_t q = header[0], n = header[1], k = header[2];
    if (q < 2 || q > 65536) throw Error(Errc::malformed_file, "q = " + std::to_string(q) + " out of range");
    if (n == 0 || n > LinearCode::kMaxLength || k == 0 || k > n)
        throw Error(Errc::malformed_file, "need 1 <= k <= n <= 64");
    if (lines.size() - 1 != k)
        throw Error(Errc::malformed_file,
                    "expected " + std::to_string(k) + " generator rows, found " + std::to_string(lines.size() - 1));

    FieldPtr f;
    try {
        f = make_field(static_cast<std::uint32_t>(q));
    } catch (const Error& e) {
        throw Error(Errc::malformed_file, e.what());
    }
    std::vector<Element> entries;
    entries.reserve(n * k);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& [no, row] = lines[r];
        if (row.size() != n)
            throw Error(Errc::malformed_file,
                        "line " + std::to_string(no) + ": expected " + std::to_string(n) + " entries");
        for (std::uint64_t v : row) {
            if (v >= q)
                throw Error(Errc::malformed_file,
                            "line " + std::to_string(no) + ": entry " + std::to_string(v) + " outside GF(" +
                                std::to_string(q) + ")");
            entries.push_back(static_cast<Element>(v));
        }
    }
    Matrix g(f, k, n, std::move(entries));
    if (rank(g) != k) throw Error(Errc::malformed_file, "generator rows are linearly dependent");
    return LinearCode(g);
}

inline std::string serialize_code(const LinearCode& c, std::string_view comment = {}) {
    std::string out;
    if (!comment.empty()) out += "# " + std::string(comment) + "\n";
    out += std::to_string(c.q()) + " " + std::to_string(c.n()) + " " + std::to_string(c.k()) + "\n";
    for (std::size_t r = 0; r < c.k(); ++r) {
        const auto row = c.generator().row(r);
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
        out += "\n";
    }
    return out;
}

inline LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::malformed_file, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code(ss.str());
}

inline void write_code_file(const std::string& path, const LinearCode& c, std::string_view comment = {}) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::invalid_argument, "cannot write '" + path + "'");
    out << serialize_code(c, comment);
}

} // namespace crcodes
