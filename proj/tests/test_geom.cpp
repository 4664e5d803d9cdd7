#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "covering/cover.hpp"
#include "covering/geom.hpp"

using namespace covering;

namespace {

const PrecisionContext ctx(50);

Point pt(double x, double y) { return Point(x, y, ctx); }

Scalar tol5() { return pow10(5 - ctx.digits(), ctx); }

} // namespace

TEST_CASE("circle-circle: symmetric unit circles") {
    const auto r = circle_circle_intersection(Circle(pt(0, 0), Scalar(1, ctx)),
                                              Circle(pt(1, 0), Scalar(1, ctx)));
    REQUIRE(r.kind == IntersectionResult::Kind::two);
    const Scalar half = Scalar(1, ctx) / 2;
    const Scalar s32 = eval_sqrt(Scalar(3, ctx)) / 2;
    // Ordered by ascending y.
    CHECK(eval_abs(r.points[0].x - half) <= tol5());
    CHECK(eval_abs(r.points[0].y + s32) <= tol5());
    CHECK(eval_abs(r.points[1].x - half) <= tol5());
    CHECK(eval_abs(r.points[1].y - s32) <= tol5());
}

TEST_CASE("circle-circle: separation and degeneracy") {
    const Scalar one(1, ctx);
    CHECK(circle_circle_intersection(Circle(pt(0, 0), one), Circle(pt(3, 0), one)).kind ==
          IntersectionResult::Kind::none);
    CHECK_THROWS_AS(circle_circle_intersection(Circle(pt(0, 0), one), Circle(pt(0, 0), one)),
                    degeneracy_error);
}

TEST_CASE("circle-circle: results satisfy both circle equations") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    int found = 0;
    while (found < 50) {
        const double ra = d(rng), rb = d(rng);
        const Circle a(pt(d(rng), d(rng)), Scalar::from_double(1.0 + 0.5 * ra * ra, ctx));
        const Circle b(pt(d(rng), d(rng)), Scalar::from_double(1.0 + 0.5 * rb * rb, ctx));
        IntersectionResult r{IntersectionResult::Kind::none, {}};
        try {
            r = circle_circle_intersection(a, b);
        } catch (const degeneracy_error&) {
            continue;
        }
        if (r.kind != IntersectionResult::Kind::two) continue;
        ++found;
        for (const Point& p : r.points) {
            CHECK(eval_abs(distance(p, a.center) - a.radius) <= tol5());
            CHECK(eval_abs(distance(p, b.center) - b.radius) <= tol5());
        }
    }
}

TEST_CASE("circle-circle: X of the construction matches a double oracle") {
    const Scalar sigma = Scalar::parse("1.3", ctx) * const_pi(ctx) / 180;
    const auto hp = cover::build_hexagons(sigma, ctx);
    const auto np = cover::locate_points(hp);
    const auto r = circle_circle_intersection(Circle(np.O, Scalar(1, ctx)),
                                              Circle(np.N, Scalar(1, ctx)));
    REQUIRE(r.kind == IntersectionResult::Kind::two);
    // Independent machine-float solve of the two circle equations.
    const double ox = np.O.x.to_double(), oy = np.O.y.to_double();
    const double nx = np.N.x.to_double(), ny = np.N.y.to_double();
    const double dx = nx - ox, dy = ny - oy;
    const double dd = std::hypot(dx, dy);
    const double h = std::sqrt(1.0 - dd * dd / 4.0);
    const double mx = (ox + nx) / 2, my = (oy + ny) / 2;
    const double c1x = mx - h * dy / dd, c1y = my + h * dx / dd;
    const double c2x = mx + h * dy / dd, c2y = my - h * dx / dd;
    const double ax = np.X.x.to_double(), ay = np.X.y.to_double();
    const bool matches_one = (std::hypot(ax - c1x, ay - c1y) < 1e-12) ||
                             (std::hypot(ax - c2x, ay - c2y) < 1e-12);
    CHECK(matches_one);
}

TEST_CASE("circle-line: tangent, secant, ordering") {
    const Scalar one(1, ctx);
    const Circle c(pt(0, 0), one);
    const auto tangent = circle_line_intersection(c, LineSegment(pt(-1, 1), pt(1, 1)));
    REQUIRE(tangent.kind == IntersectionResult::Kind::tangent);
    CHECK(eval_abs(tangent.points[0].x) <= tol5());
    CHECK(eval_abs(tangent.points[0].y - 1) <= tol5());

    const auto secant = circle_line_intersection(c, LineSegment(pt(-5, 0), pt(5, 0)));
    REQUIRE(secant.kind == IntersectionResult::Kind::two);
    CHECK(eval_abs(secant.points[0].x + 1) <= tol5());
    CHECK(eval_abs(secant.points[1].x - 1) <= tol5());

    CHECK(circle_line_intersection(c, LineSegment(pt(-1, 2), pt(1, 2))).kind ==
          IntersectionResult::Kind::none);
}

TEST_CASE("circle-line: unit circle about W against side D1C1 matches a double oracle") {
    const Scalar sigma = Scalar::parse("1.3", ctx) * const_pi(ctx) / 180;
    const auto hp = cover::build_hexagons(sigma, ctx);
    const auto np = cover::locate_points(hp);
    const Point& c1 = cover::vertex(hp, cover::Corner::C);
    const Point& d1 = cover::vertex(hp, cover::Corner::D);
    const auto r = circle_line_intersection(Circle(np.W, Scalar(1, ctx)), LineSegment(d1, c1));
    REQUIRE(r.kind == IntersectionResult::Kind::two);
    // Float quadratic solve along the parametrized carrier.
    const double px = d1.x.to_double(), py = d1.y.to_double();
    const double ex = c1.x.to_double() - px, ey = c1.y.to_double() - py;
    const double fx = px - np.W.x.to_double(), fy = py - np.W.y.to_double();
    const double a = ex * ex + ey * ey;
    const double b = 2 * (fx * ex + fy * ey);
    const double cc = fx * fx + fy * fy - 1.0;
    const double disc = b * b - 4 * a * cc;
    REQUIRE(disc > 0);
    for (const double t : {(-b - std::sqrt(disc)) / (2 * a), (-b + std::sqrt(disc)) / (2 * a)}) {
        const double qx = px + t * ex, qy = py + t * ey;
        const bool hit = std::hypot(qx - r.points[0].x.to_double(),
                                    qy - r.points[0].y.to_double()) < 1e-12 ||
                         std::hypot(qx - r.points[1].x.to_double(),
                                    qy - r.points[1].y.to_double()) < 1e-12;
        CHECK(hit);
    }
}

TEST_CASE("interior angle basics") {
    CHECK(eval_abs(interior_angle(pt(0, 0), pt(1, 0), pt(0, 1)) - const_pi(ctx) / 2) <= tol5());
    CHECK(eval_abs(interior_angle(pt(1, 1), pt(2, 1), pt(0, 1)) - const_pi(ctx)) <= tol5());
    CHECK_THROWS_AS(interior_angle(pt(0, 0), pt(0, 0), pt(1, 0)), degeneracy_error);
}

TEST_CASE("circular segment area") {
    const Scalar one(1, ctx);
    // Chord through the center: the segment is the half disk.
    CHECK(eval_abs(circular_segment_area(one, Scalar(2, ctx)) - const_pi(ctx) / 2) <= tol5());
    // Unit chord subtends 60 degrees: area pi/6 - sqrt(3)/4.
    CHECK(eval_abs(circular_segment_area(one, one) -
                   (const_pi(ctx) / 6 - eval_sqrt(Scalar(3, ctx)) / 4)) <= tol5());
    CHECK(circular_segment_area(one, Scalar(0, ctx)).is_zero());
    CHECK_THROWS_AS(circular_segment_area(one, Scalar(3, ctx)), domain_error);
}

namespace {

CoveringBoundary hexagon_boundary(const PrecisionContext& c) {
    const auto hp = cover::build_hexagons(Scalar(0, c), c);
    CoveringBoundary b;
    // Counterclockwise traversal is D1, C1, B1, A1, F1, E1 in this labeling.
    const cover::Corner order[6] = {cover::Corner::D, cover::Corner::C, cover::Corner::B,
                                    cover::Corner::A, cover::Corner::F, cover::Corner::E};
    for (int i = 0; i < 6; ++i) {
        b.elements.emplace_back(
            LineSegment(cover::vertex(hp, order[i]), cover::vertex(hp, order[(i + 1) % 6])));
    }
    return b;
}

CoveringBoundary disk_boundary(const PrecisionContext& c) {
    const Scalar r = Scalar(1, c) / 2;
    const Point center(Scalar(0, c), Scalar(0, c));
    const Point e(r, Scalar(0, c)), n(Scalar(0, c), r), w(-r, Scalar(0, c)), s(Scalar(0, c), -r);
    CoveringBoundary b;
    b.elements.emplace_back(ArcSegment(center, r, e, n));
    b.elements.emplace_back(ArcSegment(center, r, n, w));
    b.elements.emplace_back(ArcSegment(center, r, w, s));
    b.elements.emplace_back(ArcSegment(center, r, s, e));
    return b;
}

} // namespace

TEST_CASE("region area: hexagon and unit-diameter disk") {
    CHECK(eval_abs(region_area(hexagon_boundary(ctx)) - eval_sqrt(Scalar(3, ctx)) / 2) <= tol5());
    CHECK(eval_abs(region_area(disk_boundary(ctx)) - const_pi(ctx) / 4) <= tol5());
}

TEST_CASE("region area: polygon-only boundary equals the plain shoelace") {
    CoveringBoundary sq;
    sq.elements.emplace_back(LineSegment(pt(0, 0), pt(2, 0)));
    sq.elements.emplace_back(LineSegment(pt(2, 0), pt(2, 1)));
    sq.elements.emplace_back(LineSegment(pt(2, 1), pt(0, 1)));
    sq.elements.emplace_back(LineSegment(pt(0, 1), pt(0, 0)));
    CHECK(region_area(sq) == Scalar(2, ctx));
}

TEST_CASE("region area: invariant under rigid motions") {
    const Scalar base = region_area(disk_boundary(ctx));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const Scalar theta = Scalar::from_double(d(rng) * 3, ctx);
        const Point shift = pt(d(rng), d(rng));
        const Scalar cs = eval_cos(theta), sn = eval_sin(theta);
        auto move = [&](const Point& p) {
            return Point(cs * p.x - sn * p.y + shift.x, sn * p.x + cs * p.y + shift.y);
        };
        CoveringBoundary b;
        for (const auto& e : disk_boundary(ctx).elements) {
            const auto& a = std::get<ArcSegment>(e);
            b.elements.emplace_back(
                ArcSegment(move(a.center), a.radius, move(a.start), move(a.end), a.orientation));
        }
        CHECK(eval_abs(region_area(b) - base) <= pow10(10 - ctx.digits(), ctx));
    }
}

TEST_CASE("region area: open chain is rejected") {
    CoveringBoundary open;
    open.elements.emplace_back(LineSegment(pt(0, 0), pt(1, 0)));
    open.elements.emplace_back(LineSegment(pt(1, 0), pt(1, 1)));
    CHECK_THROWS_AS(region_area(open), malformed_boundary_error);
}

TEST_CASE("replacing an outward arc by its chord strictly decreases area") {
    const CoveringBoundary disk = disk_boundary(ctx);
    CoveringBoundary chopped = disk;
    const auto& a0 = std::get<ArcSegment>(disk.elements[0]);
    chopped.elements[0] = LineSegment(a0.start, a0.end);
    CHECK(region_area(chopped) < region_area(disk));
}

TEST_CASE("convexity turning test") {
    CHECK(is_convex(hexagon_boundary(ctx)));
    CHECK(is_convex(disk_boundary(ctx)));
    CoveringBoundary dented;
    dented.elements.emplace_back(LineSegment(pt(0, 0), pt(2, 0)));
    dented.elements.emplace_back(LineSegment(pt(2, 0), pt(2, 2)));
    dented.elements.emplace_back(LineSegment(pt(2, 2), pt(1, 1)));
    dented.elements.emplace_back(LineSegment(pt(1, 1), pt(0, 2)));
    dented.elements.emplace_back(LineSegment(pt(0, 2), pt(0, 0)));
    CHECK_FALSE(is_convex(dented));
}
