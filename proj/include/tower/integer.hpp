#pragma once

/**
 * @file integer.hpp
 * @brief Canonical signed integers: a sign together with a Natural magnitude.
 *
 * This is the canonical-form view of an account class [m - n]; see
 * completion.hpp for the account construction itself.
 */

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "tower/naturals.hpp"

namespace tower {

enum class Sign { negative = -1, zero = 0, positive = 1 };

class Integer {
public:
    Integer() = default;

    Integer(Natural magnitude)  // NOLINT(google-explicit-constructor)
        : sign_(magnitude.is_zero() ? Sign::zero : Sign::positive), magnitude_(std::move(magnitude)) {}

    Integer(Sign sign, Natural magnitude) : magnitude_(std::move(magnitude)) {
        sign_ = magnitude_.is_zero() ? Sign::zero : (sign == Sign::zero ? Sign::positive : sign);
    }

    template <std::integral I>
    Integer(I value) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::signed_integral<I>) {
            if (value < 0) {
                // negate through unsigned to stay defined at the minimum value
                auto mag = static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(value);
                *this = Integer(Sign::negative, Natural(mag));
                return;
            }
        }
        *this = Integer(Natural(static_cast<std::uint64_t>(value)));
    }

    /// Accepts an optional leading '-' or '+', then a Natural literal.
    static Integer parse(std::string_view text) {
        if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
            Sign s = text[0] == '-' ? Sign::negative : Sign::positive;
            return {s, Natural::parse(text.substr(1))};
        }
        return Integer(Natural::parse(text));
    }

    [[nodiscard]] Sign sign() const noexcept { return sign_; }
    [[nodiscard]] const Natural& magnitude() const noexcept { return magnitude_; }
    [[nodiscard]] bool is_zero() const noexcept { return sign_ == Sign::zero; }
    [[nodiscard]] bool is_negative() const noexcept { return sign_ == Sign::negative; }
    [[nodiscard]] bool is_positive() const noexcept { return sign_ == Sign::positive; }

    [[nodiscard]] std::string to_string() const {
        return (sign_ == Sign::negative ? "-" : "") + magnitude_.to_string();
    }

    /// Requires a non-negative value.
    [[nodiscard]] const Natural& to_natural() const {
        if (is_negative()) {
            throw domain_error("negative integer " + to_string() + " is not a natural");
        }
        return magnitude_;
    }

    friend bool operator==(const Integer&, const Integer&) = default;

    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (a.sign_ != b.sign_) {
            return static_cast<int>(a.sign_) <=> static_cast<int>(b.sign_);
        }
        if (a.sign_ == Sign::negative) {
            return b.magnitude_ <=> a.magnitude_;
        }
        return a.magnitude_ <=> b.magnitude_;
    }

    friend Integer operator-(Integer a) {
        if (a.sign_ == Sign::positive) {
            a.sign_ = Sign::negative;
        } else if (a.sign_ == Sign::negative) {
            a.sign_ = Sign::positive;
        }
        return a;
    }

    friend Integer abs(Integer a) {
        if (a.sign_ == Sign::negative) {
            a.sign_ = Sign::positive;
        }
        return a;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        if (a.sign_ == b.sign_) {
            return {a.sign_, a.magnitude_ + b.magnitude_};
        }
        if (a.magnitude_ >= b.magnitude_) {
            return {a.sign_, a.magnitude_ - b.magnitude_};
        }
        return {b.sign_, b.magnitude_ - a.magnitude_};
    }

    friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

    friend Integer operator*(const Integer& a, const Integer& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        Sign s = a.sign_ == b.sign_ ? Sign::positive : Sign::negative;
        return {s, a.magnitude_ * b.magnitude_};
    }

    Integer& operator+=(const Integer& b) { return *this = *this + b; }
    Integer& operator-=(const Integer& b) { return *this = *this - b; }
    Integer& operator*=(const Integer& b) { return *this = *this * b; }

    friend std::ostream& operator<<(std::ostream& os, const Integer& n) { return os << n.to_string(); }

private:
    Sign sign_ = Sign::zero;
    Natural magnitude_;
};

/// Floor division by a positive natural: returns q with q*d <= a < (q+1)*d.
inline Integer floor_div(const Integer& a, const Natural& d) {
    auto [q, r] = divmod(a.magnitude(), d);
    if (!a.is_negative()) {
        return Integer(std::move(q));
    }
    if (!r.is_zero()) {
        q += Natural(1U);
    }
    return {Sign::negative, std::move(q)};
}

/// Ceiling division by a positive natural.
inline Integer ceil_div(const Integer& a, const Natural& d) { return -floor_div(-a, d); }

}  // namespace tower
