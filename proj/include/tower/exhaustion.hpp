#pragma once

/**
 * @file exhaustion.hpp
 * @brief Exhaustion as computation: polygon bounds on pi, circle areas,
 * the halving lemma, Zeno's partial sums and two exact constructions.
 *
 * Semiperimeters of regular n-gons about the unit circle:
 *   circumscribed a_n = n tan(pi/n), inscribed b_n = n sin(pi/n),
 *   b_n < pi < a_n, and doubling the number of sides gives
 *   a_2n = 2 a_n b_n / (a_n + b_n)      (harmonic mean)
 *   b_2n = sqrt(a_2n b_n)               (geometric mean).
 * Both means are increasing in each argument, so lower endpoints are built
 * from lower endpoints and upper from upper, each rounded outward on the
 * dyadic grid of the working precision. The hexagon start is exact on the
 * inscribed side (b_6 = 3) and a_6 = 2 sqrt(3).
 *
 * Rows are only returned after their ordering invariants are checked; a
 * violation retries once at twice the precision, then raises.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tower/interval.hpp"
#include "tower/naturals.hpp"
#include "tower/rational.hpp"

namespace tower {

/// One-half the altitude to a side times the perimeter.
inline Rational polygon_area(const Rational& altitude, const Rational& perimeter) {
    if (!altitude.is_positive() || !perimeter.is_positive()) {
        throw domain_error("polygon area needs positive altitude and perimeter");
    }
    return altitude * perimeter * Rational(Integer(1), Natural(2U));
}

enum class StartPolygon { hexagon, square };

struct PolygonBoundsRow {
    Natural sides;
    RationalInterval inscribed;      // b_n
    RationalInterval circumscribed;  // a_n
    Rational gap;                    // hi(a_n) - lo(b_n)
    std::size_t bits = 0;            // working precision that produced the row
};

constexpr std::size_t max_doublings = 64;

/// Working precision for a run: at least 16 + 4 bits per doubling.
inline std::size_t scheduled_bits(std::size_t doublings, std::size_t requested_bits) {
    return std::max(requested_bits, 16 + 4 * doublings);
}

namespace detail {

inline bool row_ordered(const PolygonBoundsRow& row, const PolygonBoundsRow* prev) {
    if (!(row.inscribed.lo() < row.circumscribed.hi())) {
        return false;
    }
    if (prev != nullptr) {
        if (row.inscribed.lo() < prev->inscribed.lo()) {
            return false;
        }
        if (prev->circumscribed.hi() < row.circumscribed.hi()) {
            return false;
        }
    }
    return true;
}

inline std::vector<PolygonBoundsRow> polygon_rows(std::size_t doublings, std::size_t bits,
                                                  StartPolygon start, bool& ok) {
    std::vector<PolygonBoundsRow> rows;
    RationalInterval a;
    RationalInterval b;
    Natural sides;
    if (start == StartPolygon::hexagon) {
        sides = Natural(6U);
        b = RationalInterval(Rational(3));
        a = sqrt_interval(Rational(12), bits);
    } else {
        sides = Natural(4U);
        a = RationalInterval(Rational(4));
        b = sqrt_interval(Rational(8), bits);
    }
    auto push = [&]() {
        PolygonBoundsRow row{sides, b, a, a.hi() - b.lo(), bits};
        ok = ok && row_ordered(row, rows.empty() ? nullptr : &rows.back());
        rows.push_back(std::move(row));
    };
    ok = true;
    push();
    const Rational two(2);
    for (std::size_t k = 0; k < doublings && ok; ++k) {
        Rational a2_lo = (two * a.lo() * b.lo() / (a.lo() + b.lo())).round_down(bits);
        Rational a2_hi = (two * a.hi() * b.hi() / (a.hi() + b.hi())).round_up(bits);
        Rational b2_lo = sqrt_floor(a2_lo * b.lo(), bits);
        Rational b2_hi = sqrt_ceil(a2_hi * b.hi(), bits);
        a = RationalInterval(std::move(a2_lo), std::move(a2_hi));
        b = RationalInterval(std::move(b2_lo), std::move(b2_hi));
        sides = sides * Natural(2U);
        push();
    }
    return rows;
}

}  // namespace detail

/// Rows for the start polygon and each of `doublings` doublings.
inline std::vector<PolygonBoundsRow> pi_bounds(std::size_t doublings, std::size_t bits = 64,
                                               StartPolygon start = StartPolygon::hexagon) {
    if (doublings > max_doublings) {
        throw domain_error("at most " + std::to_string(max_doublings) + " doublings are supported");
    }
    std::size_t working = scheduled_bits(doublings, bits);
    for (int attempt = 0; attempt < 2; ++attempt, working *= 2) {
        bool ok = false;
        auto rows = detail::polygon_rows(doublings, working, start, ok);
        if (ok) {
            return rows;
        }
    }
    throw domain_error("precision budget of " + std::to_string(bits) + " bits too small for " +
                       std::to_string(doublings) + " doublings");
}

/// pi r^2 bracketed by triangles with leg r and the inscribed/circumscribed
/// perimeters of the last polygon as the other leg.
inline RationalInterval circle_area_bounds(const Rational& radius, std::size_t doublings,
                                           std::size_t bits = 64,
                                           StartPolygon start = StartPolygon::hexagon) {
    if (!radius.is_positive()) {
        throw domain_error("circle radius must be positive");
    }
    const auto rows = pi_bounds(doublings, bits, start);
    const auto& last = rows.back();
    const Rational two(2);
    return {polygon_area(radius, two * radius * last.inscribed.lo()),
            polygon_area(radius, two * radius * last.circumscribed.hi())};
}

struct AreaRatioVerdict {
    RationalInterval first_area;
    RationalInterval second_area;
    RationalInterval ratio;
    Rational diameter_square_ratio;  // (d1/d2)^2
    bool contains = false;
};

/// Circles are to one another as the squares on their diameters: the area
/// ratio interval must contain (2 r1)^2 / (2 r2)^2.
inline AreaRatioVerdict area_ratio_check(const Rational& r1, const Rational& r2, std::size_t doublings,
                                         std::size_t bits = 64) {
    AreaRatioVerdict v;
    v.first_area = circle_area_bounds(r1, doublings, bits);
    v.second_area = circle_area_bounds(r2, doublings, bits);
    v.ratio = v.first_area / v.second_area;
    const Rational two(2);
    Rational d1 = two * r1;
    Rational d2 = two * r2;
    v.diameter_square_ratio = (d1 * d1) / (d2 * d2);
    v.contains = v.ratio.contains(v.diameter_square_ratio);
    return v;
}

struct HalvingFailure {
    std::size_t index;  // pair (index, index + 1)
    Rational gap_before;
    Rational gap_after;
    std::size_t bits;
};

struct HalvingVerdict {
    std::size_t pairs_checked = 0;
    std::vector<HalvingFailure> failures;
    [[nodiscard]] bool holds() const noexcept { return failures.empty(); }
};

/// gap(k+1) < gap(k) / 2 for every consecutive pair of rows.
inline HalvingVerdict exhaustion_halving_check(const std::vector<PolygonBoundsRow>& rows) {
    HalvingVerdict v;
    const Rational half(Integer(1), Natural(2U));
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
        ++v.pairs_checked;
        if (!(rows[k + 1].gap < half * rows[k].gap)) {
            v.failures.push_back({k, rows[k].gap, rows[k + 1].gap, rows[k + 1].bits});
        }
    }
    return v;
}

struct ZenoRow {
    std::size_t n;
    Rational step;     // a_n = 1/2^n
    Rational partial;  // t_n = a_1 + ... + a_n
};

/// t_n accumulated by summation of the steps.
inline std::vector<ZenoRow> zeno_table(std::size_t n_max) {
    if (n_max == 0) {
        throw domain_error("zeno table needs at least one row");
    }
    std::vector<ZenoRow> rows;
    Rational t;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational a = Rational::dyadic(Integer(1), n);
        t += a;
        rows.push_back({n, std::move(a), t});
    }
    return rows;
}

struct LabeledPoint {
    std::string label;
    Rational x;
    Rational y;
};

struct RulerCompassProduct {
    Rational length;  // |AD|
    std::vector<LabeledPoint> points;  // A, B, C, E, D
    bool similar_ratio_holds = false;  // AE * AB = AC * AD
};

/// Descartes' product: A at the origin, B = (a, 0), C and E on the ray from A
/// with rational unit direction (3/5, 4/5) at distances 1 and b, D where the
/// line through E parallel to BC meets line AB. Then |AD| = ab.
inline RulerCompassProduct ruler_compass_product(const Rational& a, const Rational& b) {
    if (!a.is_positive() || !b.is_positive()) {
        throw domain_error("ruler-and-compass product needs positive lengths");
    }
    const Rational ux(Integer(3), Natural(5U));
    const Rational uy(Integer(4), Natural(5U));
    LabeledPoint pa{"A", Rational(0), Rational(0)};
    LabeledPoint pb{"B", a, Rational(0)};
    LabeledPoint pc{"C", ux, uy};
    LabeledPoint pe{"E", b * ux, b * uy};
    // E + s (C - B) meets y = 0
    Rational dx = pc.x - pb.x;
    Rational dy = pc.y - pb.y;
    Rational s = -pe.y / dy;
    LabeledPoint pd{"D", pe.x + s * dx, pe.y + s * dy};

    auto dist2 = [](const LabeledPoint& p, const LabeledPoint& q) {
        Rational ddx = p.x - q.x;
        Rational ddy = p.y - q.y;
        return ddx * ddx + ddy * ddy;
    };
    RulerCompassProduct out;
    out.length = abs(pd.x - pa.x);
    out.similar_ratio_holds = dist2(pa, pe) * dist2(pa, pb) == dist2(pa, pc) * dist2(pa, pd);
    out.points = {pa, pb, pc, pe, pd};
    return out;
}

struct TheodorusVertex {
    std::size_t k;
    RationalInterval x;
    RationalInterval y;
    RationalInterval hypotenuse;  // contains sqrt(k + 1)
};

inline RationalInterval square(const RationalInterval& v) {
    RationalInterval p = v * v;
    if (v.contains_zero()) {
        return {Rational(0), p.hi()};
    }
    return p;
}

/// Spiral of right triangles with unit outer legs, starting from (1, 0).
/// Vertex k is the previous one plus the unit vector perpendicular to it.
inline std::vector<TheodorusVertex> theodorus_vertices(std::size_t k_max, std::size_t bits = 64) {
    if (k_max == 0) {
        throw domain_error("theodorus spiral needs at least one triangle");
    }
    const Rational exhausted = Rational::dyadic(Integer(1), bits / 2);
    std::vector<TheodorusVertex> out;
    RationalInterval x(Rational(1));
    RationalInterval y(Rational(0));
    RationalInterval length(Rational(1));
    for (std::size_t k = 1; k <= k_max; ++k) {
        RationalInterval nx = (x - y / length).rounded_out(bits);
        RationalInterval ny = (y + x / length).rounded_out(bits);
        x = std::move(nx);
        y = std::move(ny);
        length = sqrt_interval(square(x) + square(y), bits);
        if (exhausted < length.width() || length.contains_zero()) {
            throw domain_error("precision exhausted at triangle " + std::to_string(k) + " with " +
                               std::to_string(bits) + " bits");
        }
        out.push_back({k, x, y, length});
    }
    return out;
}

}  // namespace tower
