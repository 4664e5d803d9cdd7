#pragma once

// Planar primitives and the small set of constructions the coverings need:
// circle-circle and circle-line intersection, interior angles, and the area
// of a convex region bounded by line segments and circular arcs.
//
// All tolerances scale with the precision context as 10^(k - digits), so the
// same code path is valid at 50 and at 2000 digits.

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "covering/errors.hpp"
#include "covering/scalar.hpp"

namespace covering {

struct Point {
    Scalar x;
    Scalar y;

    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
    Point(double px, double py, const PrecisionContext& ctx)
        : x(Scalar::from_double(px, ctx)), y(Scalar::from_double(py, ctx)) {}

    int digits() const { return x.digits() >= y.digits() ? x.digits() : y.digits(); }
    PrecisionContext context() const { return PrecisionContext(digits()); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }
inline Point operator-(const Point& p) { return {-p.x, -p.y}; }

inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar norm(const Point& a) { return eval_sqrt(dot(a, a)); }
inline Scalar distance(const Point& a, const Point& b) { return norm(a - b); }

// Counterclockwise quarter-turn.
inline Point perp(const Point& a) { return {-a.y, a.x}; }

struct Circle {
    Point center;
    Scalar radius;

    Circle(Point c, Scalar r) : center(std::move(c)), radius(std::move(r)) {
        if (radius.sign() <= 0) {
            throw parameter_error("Circle: radius must be positive, got " + radius.str(20));
        }
    }
};

struct LineSegment {
    Point start;
    Point end;

    LineSegment(Point s, Point e) : start(std::move(s)), end(std::move(e)) {
        if (start.x == end.x && start.y == end.y) {
            throw parameter_error("LineSegment: start and end coincide");
        }
    }
};

enum class ArcOrientation { counterclockwise, clockwise };

struct ArcSegment {
    Point center;
    Scalar radius;
    Point start;
    Point end;
    ArcOrientation orientation;

    ArcSegment(Point c, Scalar r, Point s, Point e,
               ArcOrientation o = ArcOrientation::counterclockwise)
        : center(std::move(c)), radius(std::move(r)), start(std::move(s)), end(std::move(e)),
          orientation(o) {
        if (radius.sign() <= 0) {
            throw parameter_error("ArcSegment: radius must be positive");
        }
    }
};

using BoundaryElement = std::variant<LineSegment, ArcSegment>;

// Closed, positively oriented (region on the left) chain of segments and arcs.
struct CoveringBoundary {
    std::vector<BoundaryElement> elements;
};

inline const Point& element_start(const BoundaryElement& e) {
    return std::holds_alternative<LineSegment>(e) ? std::get<LineSegment>(e).start
                                                  : std::get<ArcSegment>(e).start;
}

inline const Point& element_end(const BoundaryElement& e) {
    return std::holds_alternative<LineSegment>(e) ? std::get<LineSegment>(e).end
                                                  : std::get<ArcSegment>(e).end;
}

struct IntersectionResult {
    enum class Kind { none, tangent, two };
    Kind kind;
    std::vector<Point> points; // empty / 1 / 2 (ordered by ascending y, then x)
};

namespace detail {

inline void order_points(std::vector<Point>& pts) {
    if (pts.size() == 2) {
        const bool swap_needed =
            pts[1].y < pts[0].y || (pts[1].y == pts[0].y && pts[1].x < pts[0].x);
        if (swap_needed) std::swap(pts[0], pts[1]);
    }
}

} // namespace detail

inline IntersectionResult circle_circle_intersection(const Circle& a, const Circle& b) {
    const PrecisionContext ctx(a.center.digits() >= b.center.digits() ? a.center.digits()
                                                                      : b.center.digits());
    const Point delta = b.center - a.center;
    const Scalar d = norm(delta);
    const Scalar sep_tol = pow10(5 - ctx.digits(), ctx) * (a.radius + b.radius);
    if (d <= sep_tol) {
        throw degeneracy_error("circle_circle_intersection: concentric circles");
    }
    // Distance from a.center to the radical line along the center axis.
    const Scalar along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2 * d);
    const Scalar h2 = a.radius * a.radius - along * along;
    const Scalar tangent_tol = pow10(10 - ctx.digits(), ctx) * a.radius * b.radius;
    const Point u{delta.x / d, delta.y / d};
    const Point base = a.center + along * u;
    if (h2 < -tangent_tol) {
        return {IntersectionResult::Kind::none, {}};
    }
    if (eval_abs(h2) <= tangent_tol) {
        return {IntersectionResult::Kind::tangent, {base}};
    }
    const Scalar h = eval_sqrt(h2);
    const Point n = perp(u);
    std::vector<Point> pts{base + h * n, base - h * n};
    detail::order_points(pts);
    return {IntersectionResult::Kind::two, std::move(pts)};
}

// Intersects a circle with the infinite carrier line of `through`.
inline IntersectionResult circle_line_intersection(const Circle& c, const LineSegment& through) {
    const PrecisionContext ctx(c.center.digits());
    Point d = through.end - through.start;
    const Scalar len = norm(d);
    d = {d.x / len, d.y / len};
    const Point f = through.start - c.center;
    // |f + t d|^2 = r^2 with |d| = 1: t^2 + 2(f.d)t + |f|^2 - r^2 = 0.
    const Scalar half_b = dot(f, d);
    const Scalar cc = dot(f, f) - c.radius * c.radius;
    const Scalar disc = half_b * half_b - cc;
    const Scalar tangent_tol = pow10(10 - ctx.digits(), ctx) * c.radius * c.radius;
    if (disc < -tangent_tol) {
        return {IntersectionResult::Kind::none, {}};
    }
    if (eval_abs(disc) <= tangent_tol) {
        return {IntersectionResult::Kind::tangent, {through.start + (-half_b) * d}};
    }
    const Scalar s = eval_sqrt(disc);
    std::vector<Point> pts{through.start + (-half_b - s) * d, through.start + (-half_b + s) * d};
    detail::order_points(pts);
    return {IntersectionResult::Kind::two, std::move(pts)};
}

// Unsigned angle at `at` between the rays toward ray_to_1 and ray_to_2, in (0, pi].
inline Scalar interior_angle(const Point& at, const Point& ray_to_1, const Point& ray_to_2) {
    const Point v1 = ray_to_1 - at;
    const Point v2 = ray_to_2 - at;
    if ((v1.x.is_zero() && v1.y.is_zero()) || (v2.x.is_zero() && v2.y.is_zero())) {
        throw degeneracy_error("interior_angle: zero-length ray");
    }
    return eval_atan2(eval_abs(cross(v1, v2)), dot(v1, v2));
}

// Area between a chord of the given length and its minor arc: (R^2/2)(theta - sin theta).
inline Scalar circular_segment_area(const Scalar& radius, const Scalar& chord_length) {
    if (chord_length.sign() < 0 || chord_length > 2 * radius) {
        throw domain_error("circular_segment_area: chord " + chord_length.str(20) +
                           " outside [0, 2r]");
    }
    const Scalar theta = 2 * eval_asin(chord_length / (2 * radius));
    return radius * radius / 2 * (theta - eval_sin(theta));
}

namespace detail {

// Counterclockwise sweep angle of the arc from its start to its end, in (0, 2pi).
inline Scalar ccw_sweep(const ArcSegment& arc) {
    const PrecisionContext ctx(arc.center.digits());
    const Point rs = arc.start - arc.center;
    const Point re = arc.end - arc.center;
    const Scalar two_pi = 2 * const_pi(ctx);
    Scalar sw = eval_atan2(re.y, re.x) - eval_atan2(rs.y, rs.x);
    if (sw.sign() < 0) sw = sw + two_pi;
    if (sw > two_pi) sw = sw - two_pi;
    return sw;
}

// Signed sweep: positive for counterclockwise arcs, negative for clockwise.
inline Scalar signed_sweep(const ArcSegment& arc) {
    const Scalar sw = ccw_sweep(arc);
    if (arc.orientation == ArcOrientation::counterclockwise) return sw;
    const PrecisionContext ctx(arc.center.digits());
    return sw - 2 * const_pi(ctx);
}

inline void require_closed(const CoveringBoundary& boundary) {
    if (boundary.elements.empty()) {
        throw malformed_boundary_error("region_area: empty boundary");
    }
    int digits = 30;
    for (const auto& e : boundary.elements) {
        digits = std::max(digits, element_start(e).digits());
    }
    const PrecisionContext ctx(digits);
    const Scalar tol = pow10(5 - digits, ctx);
    const size_t n = boundary.elements.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& e0 = element_end(boundary.elements[i]);
        const Point& s1 = element_start(boundary.elements[(i + 1) % n]);
        if (distance(e0, s1) > tol) {
            throw malformed_boundary_error("boundary chain is open at element " +
                                           std::to_string(i));
        }
    }
}

} // namespace detail

// Area enclosed by a closed chain: shoelace over the element chords plus a
// signed circular-segment correction per arc (Green's theorem).
inline Scalar region_area(const CoveringBoundary& boundary) {
    detail::require_closed(boundary);
    int digits = 30;
    for (const auto& e : boundary.elements) {
        digits = std::max(digits, element_start(e).digits());
    }
    const PrecisionContext ctx(digits);
    Scalar area(ctx);
    for (const auto& e : boundary.elements) {
        area = area + cross(element_start(e), element_end(e));
    }
    area = area / 2;
    for (const auto& e : boundary.elements) {
        if (!std::holds_alternative<ArcSegment>(e)) continue;
        const ArcSegment& arc = std::get<ArcSegment>(e);
        const Scalar sweep = detail::signed_sweep(arc);
        const Scalar theta = eval_abs(sweep);
        const Scalar seg = arc.radius * arc.radius / 2 * (theta - eval_sin(theta));
        area = sweep.sign() >= 0 ? area + seg : area - seg;
    }
    return area;
}

namespace detail {

inline Point unit_tangent_at_start(const BoundaryElement& e) {
    if (std::holds_alternative<LineSegment>(e)) {
        const LineSegment& s = std::get<LineSegment>(e);
        Point d = s.end - s.start;
        const Scalar len = norm(d);
        return {d.x / len, d.y / len};
    }
    const ArcSegment& a = std::get<ArcSegment>(e);
    Point r = a.start - a.center;
    const Scalar len = norm(r);
    Point t = perp(r);
    if (a.orientation == ArcOrientation::clockwise) t = -t;
    return {t.x / len, t.y / len};
}

inline Point unit_tangent_at_end(const BoundaryElement& e) {
    if (std::holds_alternative<LineSegment>(e)) {
        return unit_tangent_at_start(e);
    }
    const ArcSegment& a = std::get<ArcSegment>(e);
    Point r = a.end - a.center;
    const Scalar len = norm(r);
    Point t = perp(r);
    if (a.orientation == ArcOrientation::clockwise) t = -t;
    return {t.x / len, t.y / len};
}

} // namespace detail

inline bool is_closed(const CoveringBoundary& boundary) {
    try {
        detail::require_closed(boundary);
        return true;
    } catch (const malformed_boundary_error&) {
        return false;
    }
}

// Convexity via the turning test: tangent direction monotone, no negative
// junction turn beyond tolerance, total turning 2 pi.
inline bool is_convex(const CoveringBoundary& boundary) {
    if (!is_closed(boundary)) return false;
    int digits = 30;
    for (const auto& e : boundary.elements) {
        digits = std::max(digits, element_start(e).digits());
    }
    const PrecisionContext ctx(digits);
    const Scalar tol = pow10(5 - digits, ctx);
    const Scalar two_pi = 2 * const_pi(ctx);
    Scalar total(ctx);
    const size_t n = boundary.elements.size();
    for (size_t i = 0; i < n; ++i) {
        const BoundaryElement& cur = boundary.elements[i];
        const BoundaryElement& nxt = boundary.elements[(i + 1) % n];
        if (std::holds_alternative<ArcSegment>(cur)) {
            const Scalar sweep = detail::signed_sweep(std::get<ArcSegment>(cur));
            if (sweep < -tol) return false;
            total = total + sweep;
        }
        const Point t1 = detail::unit_tangent_at_end(cur);
        const Point t2 = detail::unit_tangent_at_start(nxt);
        const Scalar turn = eval_atan2(cross(t1, t2), dot(t1, t2));
        if (turn < -tol) return false;
        total = total + turn;
    }
    return eval_abs(total - two_pi) <= Scalar(1, ctx) / 1000;
}

} // namespace covering
