#pragma once

/**
 * @file completion.hpp
 * @brief Group completion of a commutative cancellation semigroup (CCS).
 *
 * Given a carrier (S, o), pairs (x, y) are compared by
 *
 *     (x, y) ~ (u, v)  iff  x o v = y o u
 *
 * and combined componentwise. Classes of pairs form a commutative group with
 * identity [(x, x)] and inverse [(x, y)]^-1 = [(y, x)]; x embeds as
 * [(y o x, y)].
 *
 * The completion is written once and instantiated three times:
 *   - accounts   over (N+, +)  -> Z
 *   - fractions  over (N+, *)  -> Q+
 *   - differences over (Q+, +) -> Q
 * The second operation of each instantiation (account_mul, fraction_add) is
 * an extension specific to that instantiation.
 */

#include <concepts>
#include <optional>
#include <string>
#include <utility>

#include "tower/anthyphairesis/euclid.hpp"
#include "tower/integer.hpp"
#include "tower/naturals.hpp"
#include "tower/rational.hpp"

namespace tower {

/// A carrier set with one binary operation. `valid` restricts the element
/// type to the carrier (e.g. strictly positive naturals).
template <class C>
concept CcsCarrier = requires(const typename C::value_type& a, const typename C::value_type& b) {
    typename C::value_type;
    { C::op(a, b) } -> std::convertible_to<typename C::value_type>;
    { C::equal(a, b) } -> std::convertible_to<bool>;
    { C::valid(a) } -> std::convertible_to<bool>;
    { C::name() } -> std::convertible_to<std::string>;
};

/// Carrier that already owns an identity element (e.g. 1 for multiplication).
template <class C>
concept CarrierWithIdentity = CcsCarrier<C> && requires {
    { C::identity() } -> std::convertible_to<typename C::value_type>;
};

/// Carrier that can pick the unique canonical pair of a class.
template <class C>
concept CanonicalizingCarrier = CcsCarrier<C> && requires(const typename C::value_type& a) {
    { C::canonical(a, a) } -> std::convertible_to<std::pair<typename C::value_type, typename C::value_type>>;
};

/// (N+, +)
struct PositiveAddition {
    using value_type = Natural;
    static Natural op(const Natural& a, const Natural& b) { return a + b; }
    static bool equal(const Natural& a, const Natural& b) { return a == b; }
    static bool valid(const Natural& a) { return !a.is_zero(); }
    static std::string name() { return "(N+, +)"; }

    /// (k+1, 1) for +k, (1, k+1) for -k, (1, 1) for zero.
    static std::pair<Natural, Natural> canonical(const Natural& x, const Natural& y) {
        if (x >= y) {
            return {x - y + Natural(1U), Natural(1U)};
        }
        return {Natural(1U), y - x + Natural(1U)};
    }
};

/// (N+, *)
struct PositiveMultiplication {
    using value_type = Natural;
    static Natural op(const Natural& a, const Natural& b) { return a * b; }
    static bool equal(const Natural& a, const Natural& b) { return a == b; }
    static bool valid(const Natural& a) { return !a.is_zero(); }
    static Natural identity() { return Natural(1U); }
    static std::string name() { return "(N+, *)"; }

    /// Lowest terms.
    static std::pair<Natural, Natural> canonical(const Natural& x, const Natural& y) {
        Natural g = gcd_value(x, y);
        return {x / g, y / g};
    }
};

/// (Q+, +)
struct PositiveRationalAddition {
    using value_type = Rational;
    static Rational op(const Rational& a, const Rational& b) { return a + b; }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static bool valid(const Rational& a) { return a.is_positive(); }
    static std::string name() { return "(Q+, +)"; }

    /// (d+1, 1) for d >= 0, (1, 1-d) for d < 0, where d = x - y.
    static std::pair<Rational, Rational> canonical(const Rational& x, const Rational& y) {
        Rational d = x - y;
        if (!d.is_negative()) {
            return {d + Rational(1), Rational(1)};
        }
        return {Rational(1), Rational(1) - d};
    }
};

/// (Q+, *): the positive rationals as completed by fractions; used for
/// group-law checks on (Q+, *) itself.
struct PositiveRationalMultiplication {
    using value_type = Rational;
    static Rational op(const Rational& a, const Rational& b) { return a * b; }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static bool valid(const Rational& a) { return a.is_positive(); }
    static Rational identity() { return Rational(1); }
    static std::string name() { return "(Q+, *)"; }
};

template <CcsCarrier C>
struct CcsPair {
    using value_type = typename C::value_type;
    value_type first;
    value_type second;

    CcsPair(value_type x, value_type y) : first(std::move(x)), second(std::move(y)) {
        if (!C::valid(first) || !C::valid(second)) {
            throw domain_error("pair component outside the carrier " + C::name());
        }
    }

    /// Structural (not class) equality.
    friend bool operator==(const CcsPair&, const CcsPair&) = default;
};

/// (x, y) ~ (u, v) iff x o v = y o u
template <CcsCarrier C>
bool pair_congruent(const CcsPair<C>& p, const CcsPair<C>& q) {
    return C::equal(C::op(p.first, q.second), C::op(p.second, q.first));
}

/// (x, y) * (u, v) = (x o u, y o v)
template <CcsCarrier C>
CcsPair<C> pair_combine(const CcsPair<C>& p, const CcsPair<C>& q) {
    return {C::op(p.first, q.first), C::op(p.second, q.second)};
}

/// An element of the completion S_d. Equality is class equality (~). When the
/// carrier can canonicalize, the stored representative is the canonical pair.
template <CcsCarrier C>
class CcsClass {
public:
    using value_type = typename C::value_type;
    using pair_type = CcsPair<C>;

    explicit CcsClass(pair_type representative) : rep_(canonicalize(std::move(representative))) {}

    CcsClass(value_type x, value_type y) : CcsClass(pair_type(std::move(x), std::move(y))) {}

    [[nodiscard]] const pair_type& representative() const noexcept { return rep_; }

    /// e_d = [(x, x)]; any x in the carrier gives the same class.
    static CcsClass identity(const value_type& witness) { return CcsClass(witness, witness); }

    /// x_d = [(y o x, y)]; the class does not depend on y.
    static CcsClass embed(const value_type& x, const value_type& y) { return CcsClass(C::op(y, x), y); }

    [[nodiscard]] CcsClass combine(const CcsClass& other) const {
        return CcsClass(pair_combine<C>(rep_, other.rep_));
    }

    [[nodiscard]] CcsClass inverse() const { return CcsClass(rep_.second, rep_.first); }

    friend bool operator==(const CcsClass& a, const CcsClass& b) {
        return pair_congruent<C>(a.rep_, b.rep_);
    }

private:
    static pair_type canonicalize(pair_type p) {
        if constexpr (CanonicalizingCarrier<C>) {
            auto [x, y] = C::canonical(p.first, p.second);
            return pair_type(std::move(x), std::move(y));
        } else {
            return p;
        }
    }

    pair_type rep_;
};

/// Accounts m - n over (N+, +): credit m, debit n.
using Account = CcsPair<PositiveAddition>;
/// Fractions m / n over (N+, *).
using Fraction = CcsPair<PositiveMultiplication>;
/// Differences x - y of positive rationals over (Q+, +).
using RationalDifference = CcsPair<PositiveRationalAddition>;

using AccountClass = CcsClass<PositiveAddition>;
using FractionClass = CcsClass<PositiveMultiplication>;
using RationalDifferenceClass = CcsClass<PositiveRationalAddition>;

/// (m - n) * (p - q) = (mp + nq) - (mq + np)
inline Account account_mul(const Account& a, const Account& b) {
    return {a.first * b.first + a.second * b.second, a.first * b.second + a.second * b.first};
}

/// m/n + p/q = (mq + np) / (nq)
inline Fraction fraction_add(const Fraction& a, const Fraction& b) {
    return {a.first * b.second + a.second * b.first, a.second * b.second};
}

/// m/n * p/q = mp / nq
inline Fraction fraction_mul(const Fraction& a, const Fraction& b) {
    return pair_combine<PositiveMultiplication>(a, b);
}

/// (x - y) * (u - v) = (xu + yv) - (xv + yu), the signed-rational product.
inline RationalDifference difference_mul(const RationalDifference& a, const RationalDifference& b) {
    return {a.first * b.first + a.second * b.second, a.first * b.second + a.second * b.first};
}

inline Integer canonicalize_int(const Account& a) {
    if (a.first >= a.second) {
        return Integer(a.first - a.second);
    }
    return {Sign::negative, a.second - a.first};
}

inline Rational canonicalize_rat(const Fraction& f) { return {Integer(f.first), f.second}; }

inline Rational canonicalize_difference(const RationalDifference& d) { return d.first - d.second; }

/// Canonical account of an integer: (k+1, 1), (1, k+1) or (1, 1).
inline Account account_of(const Integer& k) {
    if (k.is_negative()) {
        return {Natural(1U), k.magnitude() + Natural(1U)};
    }
    return {k.magnitude() + Natural(1U), Natural(1U)};
}

/// Lowest-terms fraction of a positive rational.
inline Fraction fraction_of(const Rational& q) {
    if (!q.is_positive()) {
        throw domain_error("fractions represent positive rationals only");
    }
    return {q.numerator().magnitude(), q.denominator()};
}

}  // namespace tower
