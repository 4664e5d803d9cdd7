#include <catch2/catch_amalgamated.hpp>

#include "covering/cover.hpp"

using namespace covering;
using namespace covering::cover;

namespace {

const PrecisionContext ctx(50);

Scalar deg(const char* s) { return Scalar::parse(s, ctx) * const_pi(ctx) / 180; }

Scalar tol5() { return pow10(5 - ctx.digits(), ctx); }

Scalar triangle_area(const std::array<Point, 3>& t) {
    return eval_abs(cross(t[1] - t[0], t[2] - t[0])) / 2;
}

} // namespace

TEST_CASE("hexagon dimensions at sigma = 0") {
    const auto hp = build_hexagons(Scalar(0, ctx), ctx);
    const Scalar side = distance(vertex(hp, Corner::D), vertex(hp, Corner::E));
    CHECK(eval_abs(side - 1 / eval_sqrt(Scalar(3, ctx))) <= tol5());
    // Inscribed circle diameter 1: opposite sides D1E1 and A1B1 at y = -1/2, +1/2.
    CHECK(eval_abs(vertex(hp, Corner::D).y + Scalar(1, ctx) / 2) <= tol5());
    CHECK(eval_abs(vertex(hp, Corner::A).y - Scalar(1, ctx) / 2) <= tol5());
}

TEST_CASE("sigma = 0 regression to the two-corner covering") {
    const auto hp = build_hexagons(Scalar(0, ctx), ctx);
    const Scalar hexagon_area = eval_sqrt(Scalar(3, ctx)) / 2;
    const Scalar pal = 2 - 2 / eval_sqrt(Scalar(3, ctx));
    // Each corner triangle of H outside H' has area (sqrt(3)/2 - pal)/2.
    const Scalar expected = (hexagon_area - pal) / 2;
    for (const Corner c : {Corner::A, Corner::B, Corner::C, Corner::D, Corner::E, Corner::F}) {
        CHECK(eval_abs(triangle_area(cover::detail::corner_triangle(hp, c)) - expected) <= tol5());
    }
    // So removing two of them leaves exactly the 2 - 2/sqrt(3) covering.
    const Scalar two_removed =
        hexagon_area - triangle_area(cover::detail::corner_triangle(hp, Corner::C)) -
        triangle_area(cover::detail::corner_triangle(hp, Corner::E));
    CHECK(eval_abs(two_removed - pal) <= tol5());
    CHECK(pal.str(10) == "0.8452994616");
}

TEST_CASE("build_hexagons validates the slant range") {
    CHECK_THROWS_AS(build_hexagons(Scalar(-1, ctx) / 100, ctx), parameter_error);
    CHECK_THROWS_AS(build_hexagons(deg("10"), ctx), parameter_error);
    CHECK_NOTHROW(build_hexagons(deg("9.99"), ctx));
}

TEST_CASE("locate_points rejects sigma = 0 as degenerate") {
    const auto hp = build_hexagons(Scalar(0, ctx), ctx);
    CHECK_THROWS_AS(locate_points(hp), degeneracy_error);
}

TEST_CASE("published values at sigma = 1.3 degrees") {
    const auto rep = construct(deg("1.3"), ctx);
    const Scalar rad_per_deg = const_pi(ctx) / 180;
    CHECK(eval_abs(rep.angle_WYL / rad_per_deg - Scalar::parse("90.00593", ctx)) <=
          Scalar::parse("1e-5", ctx));
    CHECK(eval_abs(rep.angle_MWY / rad_per_deg - Scalar::parse("122.9277", ctx)) <=
          Scalar::parse("1e-4", ctx));
    CHECK(eval_abs(rep.area - Scalar::parse("0.844115376859376746806104420762830689", ctx)) <=
          Scalar::parse("1e-30", ctx));
    CHECK(rep.wxy_in_Bprime);
    CHECK(rep.constraints_ok);
    CHECK(is_convex(rep.boundary));
    CHECK(rep.boundary.elements.size() == 11);
}

TEST_CASE("named points satisfy their defining incidences") {
    const auto hp = build_hexagons(deg("1.3"), ctx);
    const auto np = locate_points(hp);
    const Scalar one(1, ctx);
    CHECK(eval_abs(distance(np.W, np.O) - one) <= tol5());
    CHECK(eval_abs(distance(np.W, np.M) - one) <= tol5());
    CHECK(eval_abs(distance(np.X, np.O) - one) <= tol5());
    CHECK(eval_abs(distance(np.X, np.N) - one) <= tol5());
    CHECK(eval_abs(distance(np.Y, np.N) - one) <= tol5());
    CHECK(eval_abs(distance(np.Y, np.L) - one) <= tol5());
    // O on side C1D1, N on side D1E1, L on side D1C1, M the midpoint of D1E1.
    auto on_side = [&](const Point& p, Corner a, Corner b) {
        const Point va = vertex(hp, a), vb = vertex(hp, b);
        return eval_abs(cross(vb - va, p - va)) <= tol5();
    };
    CHECK(on_side(np.O, Corner::C, Corner::D));
    CHECK(on_side(np.N, Corner::D, Corner::E));
    CHECK(on_side(np.L, Corner::C, Corner::D));
    CHECK(eval_abs(distance(np.M, vertex(hp, Corner::D)) -
                   distance(np.M, vertex(hp, Corner::E))) <= tol5());
    // L sits between O and C1 on that side, closer to C1 than D1.
    CHECK(distance(np.L, vertex(hp, Corner::C)) < distance(np.L, vertex(hp, Corner::D)));
}

TEST_CASE("sigma = 0.5 degrees violates the binding constraint") {
    const auto rep = construct(deg("0.5"), ctx);
    CHECK_FALSE(rep.constraints_ok);
    CHECK(rep.angle_WYL < const_pi(ctx) / 2);
}

TEST_CASE("areas stay below the corrected corner-recursion bound") {
    const Scalar bound = Scalar::parse("0.844137708398", ctx);
    CHECK(construct(deg("1.3"), ctx).area < bound);
    CHECK(construct(deg("1.294389444703601012"), ctx).area < bound);
    CHECK(construct(deg("1.294389444703601012"), ctx).area.str(18) == "0.844115297128419059");
}

TEST_CASE("frame independence of reported quantities") {
    const auto a = construct(deg("1.3"), ctx);
    const auto b = construct(deg("1.3"), ctx, Scalar::parse("0.3", ctx));
    const Scalar tol = pow10(10 - ctx.digits(), ctx);
    CHECK(eval_abs(a.area - b.area) <= tol);
    CHECK(eval_abs(a.angle_WYL - b.angle_WYL) <= tol);
    CHECK(eval_abs(a.angle_MWY - b.angle_MWY) <= tol);
    CHECK(a.wxy_in_Bprime == b.wxy_in_Bprime);
}

TEST_CASE("angle WYL is strictly increasing and brackets 90 degrees on [1.2, 1.4]") {
    const Scalar right = const_pi(ctx) / 2;
    Scalar prev(ctx);
    bool first = true;
    Scalar at_lo(ctx), at_hi(ctx);
    for (int i = 0; i <= 20; ++i) {
        const Scalar sigma = deg("1.2") + Scalar(i, ctx) * deg("0.01");
        const auto hp = build_hexagons(sigma, ctx);
        const auto np = locate_points(hp);
        const Scalar angle = interior_angle(np.Y, np.W, np.L);
        if (!first) CHECK(angle > prev);
        if (i == 0) at_lo = angle;
        if (i == 20) at_hi = angle;
        prev = angle;
        first = false;
    }
    CHECK(at_lo < right);
    CHECK(at_hi > right);
}

TEST_CASE("area is strictly increasing on [sigma*, 1.4]") {
    Scalar prev(ctx);
    bool first = true;
    const Scalar lo = deg("1.294389445");
    const Scalar step = (deg("1.4") - lo) / 10;
    for (int i = 0; i <= 10; ++i) {
        const Scalar area = construct(lo + Scalar(i, ctx) * step, ctx).area;
        if (!first) CHECK(area > prev);
        prev = area;
        first = false;
    }
}

TEST_CASE("segment WY avoids the open unit disks about L and M") {
    const auto np = locate_points(build_hexagons(deg("1.3"), ctx));
    const Scalar slack = pow10(-40, ctx);
    for (int i = 0; i <= 100; ++i) {
        const Scalar t = Scalar(i, ctx) / 100;
        const Point p = np.W + t * (np.Y - np.W);
        CHECK(distance(p, np.L) >= 1 - slack);
        CHECK(distance(p, np.M) >= 1 - slack);
    }
}

TEST_CASE("case-1 containment holds at the working angles and fails when displaced") {
    const auto hp = build_hexagons(deg("1.3"), ctx);
    auto np = locate_points(hp);
    CHECK(check_case1_containment(np, hp));
    const auto hp2 = build_hexagons(deg("1.294389444703601012"), ctx);
    CHECK(check_case1_containment(locate_points(hp2), hp2));
    // Sliver translated far outside B'.
    const Point shift(Scalar(1, ctx), Scalar(1, ctx));
    np.W = np.W + shift;
    np.X = np.X + shift;
    np.Y = np.Y + shift;
    np.O = np.O + shift;
    np.N = np.N + shift;
    CHECK_FALSE(check_case1_containment(np, hp));
}

TEST_CASE("case-1 probe points are sufficient: dense arc sampling stays inside B'") {
    const auto hp = build_hexagons(deg("1.3"), ctx);
    const auto np = locate_points(hp);
    const auto& tri_b = np.triangles[static_cast<size_t>(Corner::B)];
    const std::array<Point, 3> b_prime{reflect_about_m_axis(tri_b[0], np.M),
                                       reflect_about_m_axis(tri_b[1], np.M),
                                       reflect_about_m_axis(tri_b[2], np.M)};
    auto sample_arc = [&](const Point& c, const Point& a, const Point& b) {
        for (int i = 0; i <= 200; ++i) {
            const Scalar t = Scalar(i, ctx) / 200;
            Point m = a + t * (b - a) - c;
            const Scalar len = norm(m);
            const Point p = c + (1 / len) * m;
            CHECK(cover::detail::in_triangle(p, b_prime));
        }
    };
    sample_arc(np.O, np.W, np.X);
    sample_arc(np.N, np.X, np.Y);
}

TEST_CASE("sliver area of the removed region WXY") {
    const auto np = locate_points(build_hexagons(deg("1.3"), ctx));
    const Scalar s = sliver_area(np);
    CHECK(eval_abs(s - Scalar::parse("5.22175367e-5", ctx)) <= Scalar::parse("1e-13", ctx));
}

TEST_CASE("construct rejects non-positive sigma") {
    CHECK_THROWS_AS(construct(Scalar(0, ctx), ctx), parameter_error);
    CHECK_THROWS_AS(construct(Scalar(-1, ctx), ctx), parameter_error);
}
