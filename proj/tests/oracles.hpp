#pragma once

// Test oracles computed without the tower library.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "tower/rational.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline cpp_rational to_cpp(const tower::Rational& q) {
    return cpp_rational(cpp_int(q.numerator().to_string()), cpp_int(q.denominator().to_string()));
}

/// arctan(1/x) enclosed by consecutive partial sums of its alternating series.
inline std::pair<cpp_rational, cpp_rational> arctan_inverse(unsigned x, unsigned terms) {
    cpp_rational sum = 0;
    cpp_rational next = 0;
    cpp_int power = x;
    for (unsigned k = 0; k <= terms; ++k) {
        cpp_rational term(cpp_int(1), cpp_int(2 * k + 1) * power);
        if (k == terms) {
            next = term;
            break;
        }
        sum += k % 2 == 0 ? term : cpp_rational(-term);
        power *= x * x;
    }
    // the first omitted term has the sign (-1)^terms
    cpp_rational lo = terms % 2 == 0 ? sum : cpp_rational(sum - next);
    cpp_rational hi = terms % 2 == 0 ? cpp_rational(sum + next) : sum;
    return {lo, hi};
}

/// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239), as a rational enclosure.
inline std::pair<cpp_rational, cpp_rational> pi_machin(unsigned terms = 30) {
    auto [a_lo, a_hi] = arctan_inverse(5, terms);
    auto [b_lo, b_hi] = arctan_inverse(239, terms);
    return {cpp_rational(16 * a_lo - 4 * b_hi), cpp_rational(16 * a_hi - 4 * b_lo)};
}

}  // namespace oracle
