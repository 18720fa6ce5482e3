#pragma once

/**
 * @file naturals.hpp
 * @brief Arbitrary-size non-negative integers.
 *
 * Natural is the substrate of the whole tower: integers, rationals,
 * intervals and real streams all reduce to it. Limbs are 32-bit,
 * little-endian, with no trailing zero limbs, so equal values always have
 * identical representations.
 *
 * The carrier includes 0. Subtracting a larger value from a smaller one is
 * a domain error rather than wrap-around.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tower {

/// Raised whenever an operation is applied outside its domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Natural;

struct NaturalDivMod;

class Natural {
public:
    using limb_type = std::uint32_t;
    using wide_type = std::uint64_t;
    static constexpr unsigned limb_bits = 32;

    Natural() = default;

    template <std::unsigned_integral U>
    Natural(U value) {  // NOLINT(google-explicit-constructor)
        auto v = static_cast<std::uint64_t>(value);
        while (v != 0) {
            limbs_.push_back(static_cast<limb_type>(v));
            v >>= limb_bits;
        }
    }

    template <std::signed_integral S>
    Natural(S value) {  // NOLINT(google-explicit-constructor)
        if (value < 0) {
            throw domain_error("negative value has no natural representation");
        }
        *this = Natural(static_cast<std::uint64_t>(value));
    }

    /// Parses decimal ("0", "136") or hexadecimal with a "0x" prefix.
    /// Leading zeros are rejected except for the single digit "0".
    static Natural parse(std::string_view text) {
        if (text.empty()) {
            throw domain_error("empty natural literal");
        }
        Natural result;
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            for (char ch : text.substr(2)) {
                unsigned digit = 0;
                if (ch >= '0' && ch <= '9') {
                    digit = static_cast<unsigned>(ch - '0');
                } else if (ch >= 'a' && ch <= 'f') {
                    digit = static_cast<unsigned>(ch - 'a' + 10);
                } else if (ch >= 'A' && ch <= 'F') {
                    digit = static_cast<unsigned>(ch - 'A' + 10);
                } else {
                    throw domain_error("invalid hexadecimal digit in '" + std::string(text) + "'");
                }
                result = (result << 4U) + Natural(digit);
            }
            return result;
        }
        if (text.size() > 1 && text[0] == '0') {
            throw domain_error("leading zero in natural literal '" + std::string(text) + "'");
        }
        // nine decimal digits per step keeps the multiplier inside one limb
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t len = std::min<std::size_t>(9, text.size() - pos);
            limb_type chunk = 0;
            limb_type scale = 1;
            for (std::size_t i = 0; i < len; ++i) {
                char ch = text[pos + i];
                if (ch < '0' || ch > '9') {
                    throw domain_error("invalid decimal digit in '" + std::string(text) + "'");
                }
                chunk = chunk * 10 + static_cast<limb_type>(ch - '0');
                scale *= 10;
            }
            result.mul_small_add(scale, chunk);
            pos += len;
        }
        return result;
    }

    [[nodiscard]] std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::vector<limb_type> chunks;
        Natural rest = *this;
        while (!rest.is_zero()) {
            chunks.push_back(rest.div_small(1000000000U));
        }
        std::string out = std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out.append(9 - part.size(), '0');
            out += part;
        }
        return out;
    }

    [[nodiscard]] std::string to_hex() const {
        if (is_zero()) {
            return "0x0";
        }
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            for (int shift = 28; shift >= 0; shift -= 4) {
                out += digits[(limbs_[i] >> shift) & 0xFU];
            }
        }
        out.erase(0, out.find_first_not_of('0'));
        return "0x" + out;
    }

    [[nodiscard]] bool is_zero() const noexcept { return limbs_.empty(); }
    [[nodiscard]] bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1U) != 0; }
    [[nodiscard]] bool is_even() const noexcept { return !is_odd(); }

    [[nodiscard]] std::size_t bit_length() const noexcept {
        if (limbs_.empty()) {
            return 0;
        }
        return (limbs_.size() - 1) * limb_bits +
               static_cast<std::size_t>(std::bit_width(limbs_.back()));
    }

    [[nodiscard]] bool fits_u64() const noexcept { return limbs_.size() <= 2; }

    [[nodiscard]] std::uint64_t to_u64() const {
        if (!fits_u64()) {
            throw domain_error("natural " + to_string() + " does not fit in 64 bits");
        }
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            v = (v << limb_bits) | limbs_[i];
        }
        return v;
    }

    [[nodiscard]] std::span<const limb_type> limbs() const noexcept { return limbs_; }

    [[nodiscard]] std::size_t hash() const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (limb_type l : limbs_) {
            h ^= std::hash<limb_type>{}(l) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    friend bool operator==(const Natural&, const Natural&) = default;

    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
        if (a.limbs_.size() != b.limbs_.size()) {
            return a.limbs_.size() <=> b.limbs_.size();
        }
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) {
                return a.limbs_[i] <=> b.limbs_[i];
            }
        }
        return std::strong_ordering::equal;
    }

    Natural& operator+=(const Natural& other) {
        if (limbs_.size() < other.limbs_.size()) {
            limbs_.resize(other.limbs_.size(), 0);
        }
        wide_type carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            wide_type sum = wide_type{limbs_[i]} + carry +
                            (i < other.limbs_.size() ? other.limbs_[i] : 0U);
            limbs_[i] = static_cast<limb_type>(sum);
            carry = sum >> limb_bits;
            if (carry == 0 && i >= other.limbs_.size()) {
                break;
            }
        }
        if (carry != 0) {
            limbs_.push_back(static_cast<limb_type>(carry));
        }
        return *this;
    }

    Natural& operator-=(const Natural& other) {
        if (*this < other) {
            throw domain_error("natural subtraction " + to_string() + " - " + other.to_string() +
                               " is undefined");
        }
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t diff = std::int64_t{limbs_[i]} - borrow -
                                (i < other.limbs_.size() ? std::int64_t{other.limbs_[i]} : 0);
            borrow = diff < 0 ? 1 : 0;
            limbs_[i] = static_cast<limb_type>(diff + (borrow << limb_bits));
            if (borrow == 0 && i >= other.limbs_.size()) {
                break;
            }
        }
        trim();
        return *this;
    }

    Natural& operator*=(const Natural& other) {
        *this = *this * other;
        return *this;
    }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

    friend Natural operator*(const Natural& a, const Natural& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        Natural out;
        out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            wide_type carry = 0;
            wide_type ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                wide_type cur = ai * b.limbs_[j] + out.limbs_[i + j] + carry;
                out.limbs_[i + j] = static_cast<limb_type>(cur);
                carry = cur >> limb_bits;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                wide_type cur = wide_type{out.limbs_[k]} + carry;
                out.limbs_[k] = static_cast<limb_type>(cur);
                carry = cur >> limb_bits;
                ++k;
            }
        }
        out.trim();
        return out;
    }

    Natural& operator<<=(std::size_t shift) {
        if (is_zero()) {
            return *this;
        }
        std::size_t whole = shift / limb_bits;
        unsigned part = static_cast<unsigned>(shift % limb_bits);
        if (part != 0) {
            limb_type carry = 0;
            for (limb_type& l : limbs_) {
                limb_type next = l >> (limb_bits - part);
                l = (l << part) | carry;
                carry = next;
            }
            if (carry != 0) {
                limbs_.push_back(carry);
            }
        }
        limbs_.insert(limbs_.begin(), whole, 0);
        return *this;
    }

    Natural& operator>>=(std::size_t shift) {
        std::size_t whole = shift / limb_bits;
        if (whole >= limbs_.size()) {
            limbs_.clear();
            return *this;
        }
        limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(whole));
        unsigned part = static_cast<unsigned>(shift % limb_bits);
        if (part != 0) {
            for (std::size_t i = 0; i < limbs_.size(); ++i) {
                limb_type hi = i + 1 < limbs_.size() ? limbs_[i + 1] << (limb_bits - part) : 0;
                limbs_[i] = (limbs_[i] >> part) | hi;
            }
        }
        trim();
        return *this;
    }

    friend Natural operator<<(Natural a, std::size_t shift) { return a <<= shift; }
    friend Natural operator>>(Natural a, std::size_t shift) { return a >>= shift; }

    friend NaturalDivMod divmod(const Natural& a, const Natural& b);

    friend Natural operator/(const Natural& a, const Natural& b);
    friend Natural operator%(const Natural& a, const Natural& b);
    Natural& operator/=(const Natural& b) { return *this = *this / b; }
    Natural& operator%=(const Natural& b) { return *this = *this % b; }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
        return os << n.to_string();
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) {
            limbs_.pop_back();
        }
    }

    void mul_small_add(limb_type factor, limb_type addend) {
        wide_type carry = addend;
        for (limb_type& l : limbs_) {
            wide_type cur = wide_type{l} * factor + carry;
            l = static_cast<limb_type>(cur);
            carry = cur >> limb_bits;
        }
        if (carry != 0) {
            limbs_.push_back(static_cast<limb_type>(carry));
        }
    }

    // Divides in place by a single limb and returns the remainder.
    limb_type div_small(limb_type divisor) {
        wide_type rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            wide_type cur = (rem << limb_bits) | limbs_[i];
            limbs_[i] = static_cast<limb_type>(cur / divisor);
            rem = cur % divisor;
        }
        trim();
        return static_cast<limb_type>(rem);
    }

    static void long_divide(const Natural& a, const Natural& b, Natural& quotient,
                            Natural& remainder);

    std::vector<limb_type> limbs_;
};

struct NaturalDivMod {
    Natural quotient;
    Natural remainder;
};

// Knuth, TAOCP vol. 2, Algorithm D. Requires b to have at least two limbs and a >= b.
inline void Natural::long_divide(const Natural& a, const Natural& b, Natural& quotient,
                                 Natural& remainder) {
    const std::size_t n = b.limbs_.size();
    const std::size_t m = a.limbs_.size() - n;
    const unsigned s = static_cast<unsigned>(std::countl_zero(b.limbs_.back()));

    std::vector<limb_type> vn(n);
    for (std::size_t i = n - 1; i > 0; --i) {
        vn[i] = (b.limbs_[i] << s) | (s != 0 ? b.limbs_[i - 1] >> (limb_bits - s) : 0);
    }
    vn[0] = b.limbs_[0] << s;

    std::vector<limb_type> un(a.limbs_.size() + 1);
    un[a.limbs_.size()] = s != 0 ? a.limbs_.back() >> (limb_bits - s) : 0;
    for (std::size_t i = a.limbs_.size() - 1; i > 0; --i) {
        un[i] = (a.limbs_[i] << s) | (s != 0 ? a.limbs_[i - 1] >> (limb_bits - s) : 0);
    }
    un[0] = a.limbs_[0] << s;

    constexpr wide_type base = wide_type{1} << limb_bits;
    quotient.limbs_.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        wide_type num = (wide_type{un[j + n]} << limb_bits) | un[j + n - 1];
        wide_type qhat = num / vn[n - 1];
        wide_type rhat = num % vn[n - 1];
        while (qhat >= base || qhat * vn[n - 2] > ((rhat << limb_bits) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= base) {
                break;
            }
        }
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            wide_type p = qhat * vn[i];
            std::int64_t t = std::int64_t{un[i + j]} - borrow -
                             static_cast<std::int64_t>(p & 0xFFFFFFFFULL);
            un[i + j] = static_cast<limb_type>(t);
            borrow = static_cast<std::int64_t>(p >> limb_bits) - (t >> limb_bits);
        }
        std::int64_t t = std::int64_t{un[j + n]} - borrow;
        un[j + n] = static_cast<limb_type>(t);
        if (t < 0) {
            --qhat;
            wide_type carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                wide_type sum = wide_type{un[i + j]} + vn[i] + carry;
                un[i + j] = static_cast<limb_type>(sum);
                carry = sum >> limb_bits;
            }
            un[j + n] = static_cast<limb_type>(wide_type{un[j + n]} + carry);
        }
        quotient.limbs_[j] = static_cast<limb_type>(qhat);
    }
    quotient.trim();

    remainder.limbs_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        remainder.limbs_[i] =
            (un[i] >> s) | (s != 0 ? static_cast<limb_type>(wide_type{un[i + 1]} << (limb_bits - s)) : 0);
    }
    remainder.trim();
}

inline NaturalDivMod divmod(const Natural& a, const Natural& b) {
    if (b.is_zero()) {
        throw domain_error("division by zero");
    }
    if (a < b) {
        return {Natural{}, a};
    }
    if (b.limbs_.size() == 1) {
        Natural q = a;
        Natural::limb_type r = q.div_small(b.limbs_[0]);
        return {std::move(q), Natural(r)};
    }
    NaturalDivMod out;
    Natural::long_divide(a, b, out.quotient, out.remainder);
    return out;
}

inline Natural operator/(const Natural& a, const Natural& b) { return divmod(a, b).quotient; }
inline Natural operator%(const Natural& a, const Natural& b) { return divmod(a, b).remainder; }

/// Floor square root by Newton iteration from an over-estimate.
inline Natural isqrt(const Natural& a) {
    if (a.is_zero()) {
        return {};
    }
    Natural x = Natural(1U) << ((a.bit_length() + 1) / 2);
    while (true) {
        Natural y = (x + a / x) >> 1;
        if (y >= x) {
            return x;
        }
        x = std::move(y);
    }
}

inline bool is_perfect_square(const Natural& a) {
    Natural r = isqrt(a);
    return r * r == a;
}

inline Natural pow(Natural base, unsigned exponent) {
    Natural result(1U);
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

inline Natural pow2(std::size_t exponent) { return Natural(1U) << exponent; }

}  // namespace tower

template <>
struct std::hash<tower::Natural> {
    std::size_t operator()(const tower::Natural& n) const noexcept { return n.hash(); }
};
