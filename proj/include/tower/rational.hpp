#pragma once

/**
 * @file rational.hpp
 * @brief Canonical signed rationals in lowest terms.
 *
 * The numerator carries the sign, the denominator is at least 1, and
 * gcd(|numerator|, denominator) = 1, so zero is always 0/1. Reduction uses
 * the anthyphairesis gcd.
 */

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "tower/anthyphairesis/euclid.hpp"
#include "tower/integer.hpp"
#include "tower/naturals.hpp"

namespace tower {

enum class Rounding { down, up, nearest };

class Rational {
public:
    Rational() : den_(1U) {}

    template <std::integral I>
    Rational(I value) : num_(value), den_(1U) {}  // NOLINT(google-explicit-constructor)

    Rational(Integer value) : num_(std::move(value)), den_(1U) {}  // NOLINT(google-explicit-constructor)
    Rational(Natural value) : num_(std::move(value)), den_(1U) {}  // NOLINT(google-explicit-constructor)

    Rational(Integer numerator, Natural denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) {
            throw domain_error("rational with zero denominator");
        }
        normalize();
    }

    /// "p/q", "-p/q" or a plain integer.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(Integer::parse(text));
        }
        return {Integer::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1))};
    }

    /// m / 2^shift
    static Rational dyadic(Integer mantissa, std::size_t shift) {
        return {std::move(mantissa), pow2(shift)};
    }

    [[nodiscard]] const Integer& numerator() const noexcept { return num_; }
    [[nodiscard]] const Natural& denominator() const noexcept { return den_; }

    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_negative() const noexcept { return num_.is_negative(); }
    [[nodiscard]] bool is_positive() const noexcept { return num_.is_positive(); }
    [[nodiscard]] bool is_integer() const { return den_ == Natural(1U); }
    [[nodiscard]] Sign sign() const noexcept { return num_.sign(); }

    /// Canonical text form: always "p/q", including "0/1" and "7/1".
    [[nodiscard]] std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

    /// Shortest form: "7" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_short_string() const {
        return is_integer() ? num_.to_string() : to_string();
    }

    [[nodiscard]] Integer floor() const { return floor_div(num_, den_); }
    [[nodiscard]] Integer ceil() const { return ceil_div(num_, den_); }

    /// Decimal with `digits` fractional digits, rounded in the given direction.
    [[nodiscard]] std::string to_decimal(unsigned digits, Rounding mode = Rounding::nearest) const {
        Natural scale = pow(Natural(10U), digits);
        Integer scaled_num = num_ * Integer(scale);
        Integer q;
        switch (mode) {
        case Rounding::down:
            q = floor_div(scaled_num, den_);
            break;
        case Rounding::up:
            q = ceil_div(scaled_num, den_);
            break;
        case Rounding::nearest:
            q = floor_div(scaled_num * Integer(2) + Integer(den_), den_ * Natural(2U));
            break;
        }
        std::string mag = q.magnitude().to_string();
        if (digits > 0) {
            if (mag.size() <= digits) {
                mag.insert(0, digits + 1 - mag.size(), '0');
            }
            mag.insert(mag.size() - digits, ".");
        }
        return (q.is_negative() ? "-" : "") + mag;
    }

    /// Largest multiple of 2^-bits not above *this.
    [[nodiscard]] Rational round_down(std::size_t bits) const {
        if (den_ == Natural(1U)) {
            return *this;
        }
        return dyadic(floor_div(num_ * Integer(pow2(bits)), den_), bits);
    }

    /// Smallest multiple of 2^-bits not below *this.
    [[nodiscard]] Rational round_up(std::size_t bits) const {
        if (den_ == Natural(1U)) {
            return *this;
        }
        return dyadic(ceil_div(num_ * Integer(pow2(bits)), den_), bits);
    }

    [[nodiscard]] Rational reciprocal() const {
        if (is_zero()) {
            throw domain_error("zero has no multiplicative inverse");
        }
        return {Integer(num_.sign(), den_), num_.magnitude()};
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) {
            return a.num_ <=> b.num_;
        }
        return a.num_ * Integer(b.den_) <=> b.num_ * Integer(a.den_);
    }

    friend Rational operator-(Rational a) {
        a.num_ = -a.num_;
        return a;
    }

    friend Rational abs(Rational a) {
        a.num_ = abs(a.num_);
        return a;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) {
            return {a.num_ + b.num_, a.den_};
        }
        return {a.num_ * Integer(b.den_) + b.num_ * Integer(a.den_), a.den_ * b.den_};
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Natural(1U);
            return;
        }
        Natural g = gcd_value(num_.magnitude(), den_);
        if (g != Natural(1U)) {
            num_ = Integer(num_.sign(), num_.magnitude() / g);
            den_ /= g;
        }
    }

    Integer num_;
    Natural den_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tower
