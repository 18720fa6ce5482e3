#pragma once

/**
 * @file reals.hpp
 * @brief Constructive reals as refinable nested rational intervals.
 *
 * A RealStream maps a precision k to a rational interval of width at most
 * 2^-k that contains the real it denotes. Intervals for different k always
 * intersect, and asking twice for the same k yields the same interval
 * (results are memoized behind a mutex, so concurrent probes are safe).
 *
 * Equality of such reals is only semidecidable. Comparisons report less,
 * greater, or undecided at the probe budget; a decision, once made, is
 * correct and cannot flip at a higher budget. Completeness is offered only
 * where it is algorithmic: suprema of finite sets and limits of monotone
 * sequences that come with a modulus of convergence.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tower/anthyphairesis/continued_fraction.hpp"
#include "tower/exhaustion.hpp"
#include "tower/interval.hpp"
#include "tower/rational.hpp"

namespace tower {

constexpr std::size_t default_probe_budget = 256;

class RealStream {
public:
    using Approximator = std::function<RationalInterval(std::size_t)>;

    RealStream(Approximator approximator, std::string description)
        : state_(std::make_shared<State>(std::move(approximator), std::move(description))) {}

    /// Interval of width <= 2^-k containing the value.
    [[nodiscard]] RationalInterval approx(std::size_t k) const {
        {
            std::lock_guard lock(state_->mutex);
            auto it = state_->cache.find(k);
            if (it != state_->cache.end()) {
                return it->second;
            }
        }
        RationalInterval result = state_->approximator(k);
        if (Rational::dyadic(Integer(1), k) < result.width()) {
            throw std::logic_error("stream '" + state_->description + "' broke its width contract at k=" +
                                   std::to_string(k));
        }
        std::lock_guard lock(state_->mutex);
        // another thread may have won the race; both computed the same value
        return state_->cache.emplace(k, std::move(result)).first->second;
    }

    [[nodiscard]] const std::string& description() const noexcept { return state_->description; }

private:
    struct State {
        State(Approximator f, std::string d) : approximator(std::move(f)), description(std::move(d)) {}
        Approximator approximator;
        std::string description;
        std::mutex mutex;
        std::map<std::size_t, RationalInterval> cache;
    };

    std::shared_ptr<State> state_;
};

namespace detail {

// Evaluates `compute` at increasing working precision until the rounded
// result fits the 2^-k width contract.
template <class Compute>
RationalInterval refine(std::size_t k, std::size_t extra, Compute&& compute) {
    const Rational target = Rational::dyadic(Integer(1), k);
    const std::size_t limit = extra + 64 + 4 * k;
    for (; extra <= limit; extra += extra / 2 + 2) {
        RationalInterval iv = compute(k + extra).rounded_out(k + 2);
        if (!(target < iv.width())) {
            return iv;
        }
    }
    throw domain_error("precision boosting did not converge at k=" + std::to_string(k));
}

inline Rational magnitude_bound(const RationalInterval& iv) { return max(abs(iv.lo()), abs(iv.hi())); }

// Smallest e with x <= 2^e (x > 0), at least 0.
inline std::size_t log2_ceil(const Rational& x) {
    Natural c = x.ceil().magnitude();
    if (c.is_zero()) {
        return 0;
    }
    return (c - Natural(1U)).bit_length();
}

}  // namespace detail

inline RealStream real_from_rational(const Rational& q) {
    return {[q](std::size_t) { return RationalInterval(q); }, "rational " + q.to_string()};
}

/// sqrt(x) for a non-negative rational.
inline RealStream real_sqrt(const Rational& x) {
    if (x.is_negative()) {
        throw domain_error("square root of negative rational " + x.to_string());
    }
    return {[x](std::size_t k) { return sqrt_interval(x, k); }, "sqrt " + x.to_string()};
}

/// Value of a continued fraction, bracketed by consecutive convergents
/// (which lie on opposite sides of it).
inline RealStream real_from_cf(const CFExpansion& e) {
    if (!e.is_periodic()) {
        return real_from_rational(cf_reconstruct(e));
    }
    return {[e](std::size_t k) {
                const Rational target = Rational::dyadic(Integer(1), k + 1);
                Natural p_prev(1U), p_prev2(0U), q_prev(0U), q_prev2(1U);
                std::optional<Convergent> last;
                for (std::size_t i = 0;; ++i) {
                    const Natural& a = e.term(i);
                    Natural p = a * p_prev + p_prev2;
                    Natural q = a * q_prev + q_prev2;
                    p_prev2 = std::exchange(p_prev, p);
                    q_prev2 = std::exchange(q_prev, q);
                    if (last && !(target < Rational(Integer(1), last->q * q))) {
                        Rational x = last->value();
                        Rational y = Rational(Integer(p), q);
                        return RationalInterval(min(x, y), max(x, y)).rounded_out(k + 2);
                    }
                    last = Convergent{std::move(p), std::move(q)};
                }
            },
            "cf " + e.to_string()};
}

inline RealStream real_neg(const RealStream& x) {
    return {[x](std::size_t k) { return -x.approx(k); }, "neg(" + x.description() + ")"};
}

inline RealStream real_add(const RealStream& x, const RealStream& y) {
    return {[x, y](std::size_t k) {
                return detail::refine(k, 2, [&](std::size_t p) { return x.approx(p) + y.approx(p); });
            },
            "add(" + x.description() + ", " + y.description() + ")"};
}

inline RealStream real_mul(const RealStream& x, const RealStream& y) {
    return {[x, y](std::size_t k) {
                Rational bound = max(detail::magnitude_bound(x.approx(0)), detail::magnitude_bound(y.approx(0)));
                std::size_t extra = detail::log2_ceil(bound + Rational(1)) + 3;
                return detail::refine(k, extra, [&](std::size_t p) { return x.approx(p) * y.approx(p); });
            },
            "mul(" + x.description() + ", " + y.description() + ")"};
}

/// Precision at which x is first seen to exclude zero, if within budget.
inline std::optional<std::size_t> separation_from_zero(const RealStream& x,
                                                       std::size_t budget = default_probe_budget) {
    for (std::size_t k = 0;; k = k < 8 ? k + 1 : std::min(budget, 2 * k)) {
        if (!x.approx(k).contains_zero()) {
            return k;
        }
        if (k >= budget) {
            return std::nullopt;
        }
    }
}

inline RealStream real_inv(const RealStream& x, std::size_t budget = default_probe_budget) {
    auto sep = separation_from_zero(x, budget);
    if (!sep) {
        throw domain_error("cannot separate " + x.description() + " from zero within " + std::to_string(budget) +
                           " bits");
    }
    RationalInterval at_sep = x.approx(*sep);
    // |x| >= m, so any interval of width < m/2 around x stays clear of zero
    // and its reciprocal is at most 4 w / m^2 wide
    Rational m = min(abs(at_sep.lo()), abs(at_sep.hi()));
    std::size_t m_bits = detail::log2_ceil(m.reciprocal());
    std::size_t base = std::max(*sep, m_bits + 2);
    std::size_t extra = 2 * m_bits + 4;
    return {[x, base, extra](std::size_t k) {
                return detail::refine(k, extra, [&](std::size_t p) {
                    return x.approx(std::max(p, base)).reciprocal();
                });
            },
            "inv(" + x.description() + ")"};
}

enum class Comparison { less, greater, undecided };

inline std::string to_string(Comparison c) {
    switch (c) {
    case Comparison::less:
        return "less";
    case Comparison::greater:
        return "greater";
    case Comparison::undecided:
        break;
    }
    return "undecided";
}

struct CompareResult {
    Comparison outcome = Comparison::undecided;
    std::size_t precision = 0;  // deciding precision, or the budget when undecided
};

/// Probes k = 0, 1, ..., 8, 16, 32, ... up to the budget.
inline CompareResult real_compare(const RealStream& x, const RealStream& y,
                                  std::size_t budget = default_probe_budget) {
    for (std::size_t k = 0;; k = k < 8 ? k + 1 : std::min(budget, 2 * k)) {
        RationalInterval a = x.approx(k);
        RationalInterval b = y.approx(k);
        if (a.before(b)) {
            return {Comparison::less, k};
        }
        if (b.before(a)) {
            return {Comparison::greater, k};
        }
        if (k >= budget) {
            return {Comparison::undecided, budget};
        }
    }
}

/// Least n (as far as the budget can resolve) with a * n > b, for a > 0.
inline Natural archimedean_witness(const RealStream& a, const RealStream& b,
                                   std::size_t budget = default_probe_budget) {
    auto sep = separation_from_zero(a, budget);
    if (!sep) {
        throw domain_error("cannot separate " + a.description() + " from zero within " +
                           std::to_string(budget) + " bits");
    }
    if (a.approx(*sep).hi().is_negative()) {
        throw domain_error("archimedean witness needs a > 0");
    }
    std::optional<Natural> found;
    for (std::size_t k = *sep;; k = k < 8 ? k + 1 : std::min(budget, 2 * k)) {
        RationalInterval ia = a.approx(k);
        RationalInterval ib = b.approx(k);
        Natural upper(1U);
        if (ib.hi().is_positive()) {
            upper = (ib.hi() / ia.lo()).floor().magnitude() + Natural(1U);
        }
        Natural lower(1U);
        if (ib.lo().is_positive()) {
            lower = std::max(lower, (ib.lo() / ia.hi()).floor().magnitude() + Natural(1U));
        }
        // upper * lo(a) > hi(b) by construction
        if (!(ib.hi() < Rational(Integer(upper)) * ia.lo())) {
            throw std::logic_error("archimedean witness failed its separation check");
        }
        found = upper;
        if (lower == upper || k >= budget) {
            return *found;
        }
    }
}

/// A rational strictly between a and b, for a < b.
inline Rational rational_between(const RealStream& a, const RealStream& b,
                                 std::size_t budget = default_probe_budget) {
    CompareResult c = real_compare(a, b, budget);
    if (c.outcome == Comparison::greater) {
        throw domain_error("rational_between needs a < b, but a > b");
    }
    if (c.outcome == Comparison::undecided) {
        throw domain_error("cannot separate " + a.description() + " from " + b.description() + " within " +
                           std::to_string(budget) + " bits");
    }
    RationalInterval ia = a.approx(c.precision);
    RationalInterval ib = b.approx(c.precision);
    return (ia.hi() + ib.lo()) * Rational(Integer(1), Natural(2U));
}

/// Least upper bound of a finite nonempty set.
inline RealStream supremum_finite(const std::vector<RealStream>& xs) {
    if (xs.empty()) {
        throw domain_error("supremum of an empty set");
    }
    std::string desc = "sup(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        desc += (i == 0 ? "" : ", ") + xs[i].description();
    }
    return {[xs](std::size_t k) {
                RationalInterval acc = xs.front().approx(k);
                Rational lo = acc.lo();
                Rational hi = acc.hi();
                for (std::size_t i = 1; i < xs.size(); ++i) {
                    RationalInterval iv = xs[i].approx(k);
                    lo = max(lo, iv.lo());
                    hi = max(hi, iv.hi());
                }
                return RationalInterval(std::move(lo), std::move(hi));
            },
            desc + ")"};
}

using RationalSequence = std::function<Rational(std::size_t)>;
/// k -> N with |x_N - limit| <= 2^-k.
using ConvergenceModulus = std::function<std::size_t(std::size_t)>;

/// Limit of a nondecreasing sequence with a modulus of convergence:
/// approx(k) = [x_N(k), x_N(k) + 2^-k]. Monotonicity is spot-checked on the
/// first terms and around every sampled index.
inline RealStream limit_of_monotone(RationalSequence seq, ConvergenceModulus modulus,
                                    std::string description = "monotone limit") {
    constexpr std::size_t spot_checks = 16;
    Rational prev = seq(0);
    for (std::size_t n = 1; n <= spot_checks; ++n) {
        Rational cur = seq(n);
        if (cur < prev) {
            throw domain_error("sequence decreases between terms " + std::to_string(n - 1) + " and " +
                               std::to_string(n));
        }
        prev = std::move(cur);
    }
    return {[seq = std::move(seq), modulus = std::move(modulus)](std::size_t k) {
                std::size_t n = modulus(k);
                Rational x = seq(n);
                if (seq(n + 1) < x || (n > 0 && x < seq(n - 1))) {
                    throw domain_error("sequence is not monotone near term " + std::to_string(n));
                }
                Rational hi = x + Rational::dyadic(Integer(1), k);
                return RationalInterval(std::move(x), std::move(hi));
            },
            std::move(description)};
}

/// pi from polygon doubling; usable up to the precision 64 doublings reach.
inline RealStream real_pi() {
    return {[](std::size_t k) {
                const Rational target = Rational::dyadic(Integer(1), k + 1);
                for (std::size_t d = std::min(max_doublings, k / 2 + 2);; d = std::min(max_doublings, d + 4)) {
                    auto rows = pi_bounds(d, k + 16);
                    const auto& last = rows.back();
                    RationalInterval iv(last.inscribed.lo(), last.circumscribed.hi());
                    if (!(target < iv.width())) {
                        return iv.rounded_out(k + 2);
                    }
                    if (d == max_doublings) {
                        throw domain_error("pi stream limited to " + std::to_string(max_doublings) +
                                           " doublings; precision " + std::to_string(k) + " unreachable");
                    }
                }
            },
            "pi"};
}

/// Decimal with `digits` fractional digits and a trailing "±1 ulp" marker;
/// the true value is within one unit of the last printed digit.
inline std::string render(const RealStream& x, unsigned digits) {
    // 2^-k <= 10^-digits / 4
    std::size_t k = 4 * static_cast<std::size_t>(digits) + 2;
    RationalInterval iv = x.approx(k);
    return iv.midpoint().to_decimal(digits, Rounding::nearest) + " ±1 ulp";
}

}  // namespace tower
