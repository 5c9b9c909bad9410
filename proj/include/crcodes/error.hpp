/**************************************************************************
 * error.hpp
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace crcodes {

enum class Errc {
    not_a_prime_power,
    division_by_zero,
    dimension_mismatch,
    degenerate_dual,
    too_large_to_enumerate,
    too_many_cosets,
    inconsistent_distribution,
    case_not_covered,
    mixed_weight_input,
    not_completely_regular,
    out_of_range_extra,
    zero_denominator,
    singular_system,
    non_integer_q_power,
    construction_unavailable,
    search_space_too_large,
    malformed_file,
    invalid_argument,
};

constexpr std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::not_a_prime_power: return "not-a-prime-power";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::degenerate_dual: return "degenerate-dual";
    case Errc::too_large_to_enumerate: return "too-large-to-enumerate";
    case Errc::too_many_cosets: return "too-many-cosets";
    case Errc::inconsistent_distribution: return "inconsistent-distribution";
    case Errc::case_not_covered: return "case-not-covered";
    case Errc::mixed_weight_input: return "mixed-weight-input";
    case Errc::not_completely_regular: return "not-completely-regular";
    case Errc::out_of_range_extra: return "out-of-range-extra";
    case Errc::zero_denominator: return "zero-denominator";
    case Errc::singular_system: return "singular-system";
    case Errc::non_integer_q_power: return "non-integer-q-power";
    case Errc::construction_unavailable: return "construction-unavailable";
    case Errc::search_space_too_large: return "search-space-too-large";
    case Errc::malformed_file: return "malformed-file";
    case Errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

/// Enumeration guards; the CLI maps these to its "guard exceeded" exit status.
constexpr bool is_guard_error(Errc e) {
    return e == Errc::too_large_to_enumerate || e == Errc::too_many_cosets ||
           e == Errc::search_space_too_large;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace crcodes
