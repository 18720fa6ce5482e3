#pragma once

/**
 * @file euclid.hpp
 * @brief Anthyphairesis on numbers: greatest common measure and coprimality.
 *
 * Each step of alternating subtraction removes the smaller number from the
 * larger as many times as it fits; that count is the step's quotient. The
 * steps are performed with divmod, and the trace records the quotients so the
 * subtraction view stays recoverable. gcd_literal performs the subtractions
 * one at a time for demonstration runs.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tower/naturals.hpp"

namespace tower {

/// One row of an anthyphairesis table: dividend = quotient x divisor + remainder.
struct AnthyphairesisStep {
    Natural dividend;
    Natural quotient;
    Natural divisor;
    Natural remainder;

    friend bool operator==(const AnthyphairesisStep&, const AnthyphairesisStep&) = default;
};

struct AnthyphairesisTrace {
    std::vector<AnthyphairesisStep> steps;
    /// Last nonzero remainder: the greatest common measure (1 for coprime inputs).
    Natural terminal;
    /// Number of single subtractions performed; only filled by gcd_literal.
    std::uint64_t subtractions = 0;
};

struct GcdResult {
    Natural gcd;
    AnthyphairesisTrace trace;
};

/// Plain Euclid without a trace. Accepts zero operands (gcd(0, b) = b); the
/// rational and integer layers use it for normalization.
inline Natural gcd_value(Natural a, Natural b) {
    while (!b.is_zero()) {
        Natural r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

namespace detail {

inline AnthyphairesisTrace euclid_trace(Natural a, Natural b) {
    AnthyphairesisTrace trace;
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        trace.steps.push_back({a, q, b, r});
        a = std::move(b);
        b = std::move(r);
    }
    trace.terminal = std::move(a);
    return trace;
}

inline void require_positive(const Natural& a, const Natural& b, const char* what) {
    if (a.is_zero() || b.is_zero()) {
        throw domain_error(std::string(what) + " requires positive operands");
    }
}

}  // namespace detail

/// Greatest common measure of two positive numbers with the full division trace.
/// When a < b the first row is a = 0 x b + a, so quotients line up with the
/// continued fraction of a/b.
inline GcdResult gcd(const Natural& a, const Natural& b) {
    detail::require_positive(a, b, "gcd");
    AnthyphairesisTrace trace = detail::euclid_trace(a, b);
    Natural g = trace.terminal;
    return {std::move(g), std::move(trace)};
}

/// Same trace as gcd(), but every quotient is counted out by repeated
/// subtraction. Throws once more than max_subtractions would be needed.
inline GcdResult gcd_literal(const Natural& a, const Natural& b,
                             std::uint64_t max_subtractions = 1000000) {
    detail::require_positive(a, b, "gcd");
    AnthyphairesisTrace trace;
    Natural big = a;
    Natural small = b;
    while (!small.is_zero()) {
        Natural rest = big;
        std::uint64_t count = 0;
        while (rest >= small) {
            if (trace.subtractions == max_subtractions) {
                throw domain_error("literal anthyphairesis exceeded " +
                                   std::to_string(max_subtractions) + " subtractions");
            }
            rest -= small;
            ++count;
            ++trace.subtractions;
        }
        trace.steps.push_back({big, Natural(count), small, rest});
        big = std::move(small);
        small = std::move(rest);
    }
    trace.terminal = big;
    return {std::move(big), std::move(trace)};
}

/// Two numbers are prime to one another when anthyphairesis ends at the unit.
inline bool coprime(const Natural& a, const Natural& b) {
    detail::require_positive(a, b, "coprime");
    return gcd_value(a, b) == Natural(1U);
}

/// Renders a trace as aligned rows "136 = 22 × 6 + 4"; the terminal
/// remainder (the common measure or the unit) is marked "(2)".
inline std::string format_trace_table(const AnthyphairesisTrace& trace) {
    std::vector<std::array<std::string, 4>> rows;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        std::string rem = s.remainder.to_string();
        bool terminal_row = i + 2 == trace.steps.size() && s.remainder == trace.terminal;
        if (terminal_row) {
            rem = "(" + rem + ")";
        }
        rows.push_back({s.dividend.to_string(), s.quotient.to_string(), s.divisor.to_string(), rem});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    std::string out;
    for (const auto& r : rows) {
        out += pad(r[0], width[0]) + " = " + pad(r[1], width[1]) + " \u00d7 " + pad(r[2], width[2]) +
               " + " + r[3] + "\n";
    }
    return out;
}

}  // namespace tower
