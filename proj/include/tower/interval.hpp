#pragma once

/**
 * @file interval.hpp
 * @brief Closed rational intervals with outward rounding.
 *
 * Every operation returns an interval that contains the exact result for
 * every choice of points in the operands. Rounding to a dyadic grid only ever
 * moves lo down and hi up.
 */

#include <cstddef>
#include <string>
#include <utility>

#include "tower/naturals.hpp"
#include "tower/rational.hpp"

namespace tower {

class RationalInterval {
public:
    RationalInterval() = default;

    RationalInterval(Rational point) : lo_(point), hi_(std::move(point)) {}  // NOLINT(google-explicit-constructor)

    RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) {
            throw domain_error("interval with lo " + lo_.to_string() + " above hi " + hi_.to_string());
        }
    }

    [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
    [[nodiscard]] const Rational& hi() const noexcept { return hi_; }
    [[nodiscard]] Rational width() const { return hi_ - lo_; }
    [[nodiscard]] Rational midpoint() const { return (lo_ + hi_) * Rational(Integer(1), Natural(2U)); }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }

    [[nodiscard]] bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains_zero() const { return !lo_.is_positive() && !hi_.is_negative(); }
    [[nodiscard]] bool intersects(const RationalInterval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

    /// Strictly below every point of o.
    [[nodiscard]] bool before(const RationalInterval& o) const { return hi_ < o.lo_; }

    /// Widens to the dyadic grid 2^-bits.
    [[nodiscard]] RationalInterval rounded_out(std::size_t bits) const {
        return {lo_.round_down(bits), hi_.round_up(bits)};
    }

    [[nodiscard]] std::string to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }

    friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_}; }

    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo_ - b.hi_, a.hi_ - b.lo_};
    }

    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
        Rational p1 = a.lo_ * b.lo_;
        Rational p2 = a.lo_ * b.hi_;
        Rational p3 = a.hi_ * b.lo_;
        Rational p4 = a.hi_ * b.hi_;
        return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
    }

    [[nodiscard]] RationalInterval reciprocal() const {
        if (contains_zero()) {
            throw domain_error("reciprocal of an interval containing zero");
        }
        return {hi_.reciprocal(), lo_.reciprocal()};
    }

    friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
        return a * b.reciprocal();
    }

private:
    Rational lo_;
    Rational hi_;
};

inline RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
    return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

/// sqrt(x) rounded down to the grid 2^-bits.
inline Rational sqrt_floor(const Rational& x, std::size_t bits) {
    if (x.is_negative()) {
        throw domain_error("square root of negative rational " + x.to_string());
    }
    // floor(sqrt(x) * 2^bits) = isqrt(floor(x * 4^bits))
    Integer scaled = floor_div(x.numerator() * Integer(pow2(2 * bits)), x.denominator());
    return Rational::dyadic(Integer(isqrt(scaled.magnitude())), bits);
}

/// sqrt(x) rounded up to the grid 2^-bits.
inline Rational sqrt_ceil(const Rational& x, std::size_t bits) {
    if (x.is_negative()) {
        throw domain_error("square root of negative rational " + x.to_string());
    }
    // ceil(sqrt(x) * 2^bits) = ceil(sqrt(ceil(x * 4^bits)))
    Natural scaled = ceil_div(x.numerator() * Integer(pow2(2 * bits)), x.denominator()).magnitude();
    Natural root = isqrt(scaled);
    if (root * root != scaled) {
        root += Natural(1U);
    }
    return Rational::dyadic(Integer(root), bits);
}

/// Interval of width at most 2^-bits containing sqrt(x), with lo^2 <= x <= hi^2.
inline RationalInterval sqrt_interval(const Rational& x, std::size_t bits) {
    // floor and ceiling of sqrt(x) * 2^bits differ by at most one
    return {sqrt_floor(x, bits), sqrt_ceil(x, bits)};
}

/// Square root of every point of a non-negative interval.
inline RationalInterval sqrt_interval(const RationalInterval& x, std::size_t bits) {
    if (x.lo().is_negative()) {
        throw domain_error("square root of an interval reaching below zero");
    }
    return {sqrt_floor(x.lo(), bits), sqrt_ceil(x.hi(), bits)};
}

}  // namespace tower
