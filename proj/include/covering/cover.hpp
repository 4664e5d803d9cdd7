#pragma once

// The slanted-hexagon covering construction.
//
// Coordinate convention: hexagon H centered at the origin with its inscribed
// circle of diameter 1 (circumradius 1/sqrt(3)), side D1E1 horizontal at the
// bottom so that the symmetry axis through M (the midpoint of D1E1) is the
// vertical axis.  Corner labels sit at fixed angular positions:
//   A1 = 120 deg, B1 = 60 deg, C1 = 0 deg, D1 = 300 deg, E1 = 240 deg,
//   F1 = 180 deg
// (labels advance clockwise around the hexagon; this angular assignment is
// what reproduces the published constraint angles and areas).  H' is H
// rotated counterclockwise by 30 degrees + sigma.
//
// Named points:
//   O  - crossing of the H' boundary on side C1D1 nearest C1 (corner of the
//        removed triangle C),
//   N  - crossing on side D1E1 nearest E1 (corner of the removed triangle E),
//   L  - mirror image, about the vertical axis through M, of the crossing on
//        side E1F1 nearest F1 (i.e. the corner of the reflected triangle F',
//        lying on side D1C1 closer to C1),
//   M  - midpoint of side D1E1,
//   X  - intersection of the unit circles about O and N nearest corner A1,
//   W  - intersection of the unit circles about O and M nearest corner A1,
//   Y  - intersection of the unit circles about N and L nearest corner A1.
//
// The covering is H minus triangles C and E, minus the corner-A material
// outside the unit arcs centered at O and N, minus the sliver WXY.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "covering/errors.hpp"
#include "covering/geom.hpp"
#include "covering/scalar.hpp"

namespace covering::cover {

enum class Corner { A = 0, B = 1, C = 2, D = 3, E = 4, F = 5 };

struct HexPair {
    std::array<Point, 6> hexagon; // indexed by Corner
    std::array<Point, 6> rotated;
    Scalar sigma; // radians
};

inline const Point& vertex(const HexPair& hp, Corner c) {
    return hp.hexagon[static_cast<size_t>(c)];
}

struct NamedPoints {
    Point O, N, L, M, W, X, Y;
    // triangles[k] = the corner piece of H outside H' at corner k:
    // {hexagon vertex, crossing on the preceding side, crossing on the
    //  following side}, k indexed as Corner.
    std::array<std::array<Point, 3>, 6> triangles;
};

struct ConstructionReport {
    Scalar sigma;
    NamedPoints points;
    CoveringBoundary boundary;
    Scalar area;
    Scalar angle_WYL; // radians
    Scalar angle_MWY; // radians
    bool wxy_in_Bprime;
    bool constraints_ok;
};

namespace detail {

// Angular position (degrees) of each corner label in the reference frame.
inline constexpr int corner_angle_deg[6] = {120, 60, 0, 300, 240, 180};

inline Corner next_corner(Corner c) { return static_cast<Corner>((static_cast<int>(c) + 1) % 6); }
inline Corner prev_corner(Corner c) { return static_cast<Corner>((static_cast<int>(c) + 5) % 6); }

inline std::array<Point, 6> hex_vertices(const Scalar& rotation, const PrecisionContext& ctx) {
    const Scalar circumradius = 1 / eval_sqrt(Scalar(3, ctx));
    const Scalar deg = const_pi(ctx) / 180;
    std::array<Point, 6> out{
        Point(Scalar(ctx), Scalar(ctx)), Point(Scalar(ctx), Scalar(ctx)),
        Point(Scalar(ctx), Scalar(ctx)), Point(Scalar(ctx), Scalar(ctx)),
        Point(Scalar(ctx), Scalar(ctx)), Point(Scalar(ctx), Scalar(ctx))};
    for (int k = 0; k < 6; ++k) {
        const Scalar a = Scalar(corner_angle_deg[k], ctx) * deg + rotation;
        out[static_cast<size_t>(k)] = Point(circumradius * eval_cos(a), circumradius * eval_sin(a));
    }
    return out;
}

inline std::optional<Point> segment_intersection(const Point& p1, const Point& p2, const Point& q1,
                                                 const Point& q2) {
    const PrecisionContext ctx = p1.context();
    const Point d1 = p2 - p1;
    const Point d2 = q2 - q1;
    const Scalar den = cross(d1, d2);
    const Scalar tol = pow10(10 - ctx.digits(), ctx);
    if (eval_abs(den) <= tol) return std::nullopt; // parallel
    const Point w = q1 - p1;
    const Scalar t = cross(w, d2) / den;
    const Scalar s = cross(w, d1) / den;
    if (t < -tol || t > 1 + tol || s < -tol || s > 1 + tol) return std::nullopt;
    return p1 + t * d1;
}

inline Point nearest_point(const std::vector<Point>& pts, const Point& ref) {
    size_t best = 0;
    Scalar best_d = distance(pts[0], ref);
    for (size_t i = 1; i < pts.size(); ++i) {
        Scalar d = distance(pts[i], ref);
        if (d < best_d) {
            best_d = std::move(d);
            best = i;
        }
    }
    return pts[best];
}

// Both crossings of the H' boundary with hexagon side a-b.
inline std::vector<Point> crossings_on_side(const HexPair& hp, Corner a, Corner b) {
    std::vector<Point> out;
    const Point& pa = vertex(hp, a);
    const Point& pb = vertex(hp, b);
    for (int k = 0; k < 6; ++k) {
        const Point& q1 = hp.rotated[static_cast<size_t>(k)];
        const Point& q2 = hp.rotated[static_cast<size_t>((k + 1) % 6)];
        if (auto p = segment_intersection(pa, pb, q1, q2)) {
            out.push_back(std::move(*p));
        }
    }
    if (out.size() != 2) {
        throw degeneracy_error("crossings_on_side: expected 2 crossings of H' on a hexagon "
                               "side, found " +
                               std::to_string(out.size()));
    }
    return out;
}

inline std::array<Point, 3> corner_triangle(const HexPair& hp, Corner c) {
    const Point& v = vertex(hp, c);
    const Point before = nearest_point(crossings_on_side(hp, prev_corner(c), c), v);
    const Point after = nearest_point(crossings_on_side(hp, c, next_corner(c)), v);
    return {v, before, after};
}

// Non-strict point-in-triangle test (boundary counts as inside).
inline bool in_triangle(const Point& p, const std::array<Point, 3>& tri) {
    int pos = 0, neg = 0;
    for (int i = 0; i < 3; ++i) {
        const Point& a = tri[static_cast<size_t>(i)];
        const Point& b = tri[static_cast<size_t>((i + 1) % 3)];
        const int s = cross(b - a, p - a).sign();
        if (s > 0) ++pos;
        if (s < 0) ++neg;
    }
    return pos == 0 || neg == 0;
}

// Point of the (minor) arc about `center` halfway between arc points p and q.
inline Point arc_midpoint(const Point& center, const Scalar& radius, const Point& p,
                          const Point& q) {
    Point m = Scalar(1, p.context()) / 2 * (p + q) - center;
    const Scalar len = norm(m);
    return center + (radius / len) * m;
}

} // namespace detail

// Reflection about the axis through the hexagon center (origin) and M.
inline Point reflect_about_m_axis(const Point& p, const Point& m) {
    const Scalar len2 = dot(m, m);
    const Scalar f = 2 * dot(p, m) / len2;
    return f * m - p;
}

inline HexPair build_hexagons(const Scalar& sigma, const PrecisionContext& ctx,
                              const Scalar& frame_rotation) {
    const Scalar ten_deg = const_pi(ctx) / 18;
    if (sigma.sign() < 0 || sigma >= ten_deg) {
        throw parameter_error("build_hexagons: sigma must satisfy 0 <= sigma < 10 degrees, got " +
                              sigma.str(20) + " rad");
    }
    const Scalar thirty_deg = const_pi(ctx) / 6;
    return HexPair{detail::hex_vertices(frame_rotation, ctx),
                   detail::hex_vertices(frame_rotation + thirty_deg + sigma, ctx), sigma};
}

inline HexPair build_hexagons(const Scalar& sigma, const PrecisionContext& ctx) {
    return build_hexagons(sigma, ctx, Scalar(ctx));
}

inline NamedPoints locate_points(const HexPair& hp) {
    const PrecisionContext ctx = hp.sigma.context();
    if (hp.sigma.is_zero()) {
        throw degeneracy_error("locate_points: sigma = 0 leaves W, X, Y undefined "
                               "(crossings coincide with dodecagon vertices)");
    }
    using detail::crossings_on_side;
    using detail::nearest_point;
    const Point& a1 = vertex(hp, Corner::A);

    std::array<std::array<Point, 3>, 6> triangles{
        detail::corner_triangle(hp, Corner::A), detail::corner_triangle(hp, Corner::B),
        detail::corner_triangle(hp, Corner::C), detail::corner_triangle(hp, Corner::D),
        detail::corner_triangle(hp, Corner::E), detail::corner_triangle(hp, Corner::F)};

    const Point O = nearest_point(crossings_on_side(hp, Corner::C, Corner::D), vertex(hp, Corner::C));
    const Point N = nearest_point(crossings_on_side(hp, Corner::D, Corner::E), vertex(hp, Corner::E));
    const Point M = Scalar(1, ctx) / 2 * (vertex(hp, Corner::D) + vertex(hp, Corner::E));
    // L is the corner of the reflected triangle F': mirror the crossing on
    // side E1F1 nearest F1 about the axis through M.
    const Point f_corner =
        nearest_point(crossings_on_side(hp, Corner::E, Corner::F), vertex(hp, Corner::F));
    const Point L = reflect_about_m_axis(f_corner, M);

    const Scalar one(1, ctx);
    auto circle_pair = [&](const Point& c1, const Point& c2, const char* label) {
        const IntersectionResult r =
            circle_circle_intersection(Circle(c1, one), Circle(c2, one));
        if (r.kind != IntersectionResult::Kind::two) {
            throw degeneracy_error(std::string("locate_points: unit circles for ") + label +
                                   " do not intersect transversally");
        }
        return nearest_point(r.points, a1);
    };
    const Point X = circle_pair(O, N, "X");
    const Point W = circle_pair(O, M, "W");
    const Point Y = circle_pair(N, L, "Y");

    const Scalar sep_tol = pow10(5 - ctx.digits(), ctx);
    if (distance(W, X) <= sep_tol || distance(X, Y) <= sep_tol || distance(W, Y) <= sep_tol) {
        throw degeneracy_error("locate_points: W, X, Y not distinct at sigma = " +
                               hp.sigma.str(20) + " rad (W=" + W.x.str(20) + "," + W.y.str(20) +
                               " X=" + X.x.str(20) + "," + X.y.str(20) + " Y=" + Y.x.str(20) +
                               "," + Y.y.str(20) + ")");
    }
    return NamedPoints{O, N, L, M, W, X, Y, std::move(triangles)};
}

inline CoveringBoundary assemble_boundary(const HexPair& hp, const NamedPoints& np) {
    const PrecisionContext ctx = hp.sigma.context();
    const Scalar one(1, ctx);
    const Point& a1 = vertex(hp, Corner::A);
    const Point& b1 = vertex(hp, Corner::B);
    const Point& d1 = vertex(hp, Corner::D);
    const Point& f1 = vertex(hp, Corner::F);

    // Chord endpoints of the removed corner triangles C and E away from O, N.
    const Point o2 = detail::nearest_point(detail::crossings_on_side(hp, Corner::B, Corner::C),
                                           vertex(hp, Corner::C));
    const Point n2 = detail::nearest_point(detail::crossings_on_side(hp, Corner::E, Corner::F),
                                           vertex(hp, Corner::E));

    // Where the unit arcs about O and N meet the covering edges adjacent to
    // corner A.  Side F1A1 is opposite C1D1 (and A1B1 opposite D1E1) at
    // distance exactly 1, so these are tangency points.
    auto arc_edge_point = [&](const Point& center, const Point& ea, const Point& eb) {
        const IntersectionResult r =
            circle_line_intersection(Circle(center, one), LineSegment(ea, eb));
        if (r.kind == IntersectionResult::Kind::tangent) return r.points[0];
        if (r.kind == IntersectionResult::Kind::two) {
            return detail::nearest_point(r.points, a1);
        }
        throw inconsistency_error("assemble_boundary: unit arc misses its covering edge");
    };
    const Point t_o = arc_edge_point(np.O, f1, a1); // on side F1A1
    const Point t_n = arc_edge_point(np.N, a1, b1); // on side A1B1

    CoveringBoundary boundary;
    auto seg = [&](const Point& s, const Point& e) {
        boundary.elements.emplace_back(LineSegment(s, e));
    };
    auto arc = [&](const Point& c, const Point& s, const Point& e) {
        boundary.elements.emplace_back(ArcSegment(c, one, s, e, ArcOrientation::counterclockwise));
    };
    // Counterclockwise from corner D1.
    seg(d1, np.O);   // lower part of side C1D1
    seg(np.O, o2);   // chord cutting off triangle C
    seg(o2, b1);     // upper part of side B1C1
    seg(b1, t_n);    // part of side A1B1 up to the arc tangency
    arc(np.N, t_n, np.Y);
    seg(np.Y, np.W); // chord of the removed sliver WXY
    arc(np.O, np.W, t_o);
    seg(t_o, f1);    // rest of side F1A1
    seg(f1, n2);     // upper part of side E1F1
    seg(n2, np.N);   // chord cutting off triangle E
    seg(np.N, d1);   // part of side D1E1

    if (!is_convex(boundary)) {
        throw malformed_boundary_error("assemble_boundary: boundary is not convex at sigma = " +
                                       hp.sigma.str(20) + " rad");
    }
    return boundary;
}

// True iff W, X, Y and the midpoints of arcs WX (center O) and XY (center N)
// all lie inside B', the reflection of triangle B about the axis through M.
// B' is convex and the removed sliver WXY is bounded by the chord WY and two
// arcs that bulge toward B's corner, so if these five points are inside B'
// the whole sliver is (the arcs stay between the chord and the tested
// midpoints; tests additionally fuzz this with dense arc sampling).
inline bool check_case1_containment(const NamedPoints& np, const HexPair& hp) {
    const PrecisionContext ctx = hp.sigma.context();
    const Scalar one(1, ctx);
    const auto& tri_b = np.triangles[static_cast<size_t>(Corner::B)];
    const std::array<Point, 3> b_prime{reflect_about_m_axis(tri_b[0], np.M),
                                       reflect_about_m_axis(tri_b[1], np.M),
                                       reflect_about_m_axis(tri_b[2], np.M)};
    const std::array<Point, 5> probes{np.W, np.X, np.Y,
                                      detail::arc_midpoint(np.O, one, np.W, np.X),
                                      detail::arc_midpoint(np.N, one, np.X, np.Y)};
    for (const Point& p : probes) {
        if (!detail::in_triangle(p, b_prime)) return false;
    }
    return true;
}

inline ConstructionReport construct(const Scalar& sigma, const PrecisionContext& ctx,
                                    const Scalar& frame_rotation) {
    if (sigma.sign() <= 0) {
        throw parameter_error("construct: sigma must be positive, got " + sigma.str(20) + " rad");
    }
    const HexPair hp = build_hexagons(sigma, ctx, frame_rotation);
    NamedPoints np = locate_points(hp);
    CoveringBoundary boundary = assemble_boundary(hp, np);
    Scalar area = region_area(boundary);
    Scalar angle_wyl = interior_angle(np.Y, np.W, np.L);
    Scalar angle_mwy = interior_angle(np.W, np.M, np.Y);
    const bool case1 = check_case1_containment(np, hp);
    const Scalar right_angle = const_pi(ctx) / 2;
    const bool ok = (angle_wyl >= right_angle) && (angle_mwy >= right_angle) && case1;
    return ConstructionReport{sigma,
                              std::move(np),
                              std::move(boundary),
                              std::move(area),
                              std::move(angle_wyl),
                              std::move(angle_mwy),
                              case1,
                              ok};
}

inline ConstructionReport construct(const Scalar& sigma, const PrecisionContext& ctx) {
    return construct(sigma, ctx, Scalar(ctx));
}

// Area of the removed sliver WXY: triangle WXY plus the two circular
// segments over chords WX and XY.
inline Scalar sliver_area(const NamedPoints& np) {
    const PrecisionContext ctx = np.W.context();
    const Scalar one(1, ctx);
    const Scalar tri = eval_abs(cross(np.X - np.W, np.Y - np.W)) / 2;
    return tri + circular_segment_area(one, distance(np.W, np.X)) +
           circular_segment_area(one, distance(np.X, np.Y));
}

} // namespace covering::cover
