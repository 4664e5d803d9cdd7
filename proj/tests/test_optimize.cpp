#include <catch2/catch_amalgamated.hpp>

#include "covering/optimize.hpp"

using namespace covering;
using namespace covering::optimize;

namespace {

Scalar deg(const char* s, const PrecisionContext& ctx) {
    return Scalar::parse(s, ctx) * const_pi(ctx) / 180;
}

} // namespace

TEST_CASE("sigma* and its area reproduce the published digits at 60 digits") {
    const PrecisionContext ctx(60);
    const auto res = find_sigma_star(deg("1.0", ctx), deg("1.5", ctx), ctx);
    const Scalar sigma_deg = res.sigma_star * 180 / const_pi(ctx);
    CHECK(sigma_deg.str(19) == "1.294389444703601012");
    CHECK(res.area.str(18) == "0.844115297128419059");
    CHECK(res.all_constraints_verified);
    CHECK(res.iterations > 50);
    CHECK(res.bracket.second - res.bracket.first < pow10(10 - ctx.digits(), ctx));
    // The reported sigma* is the feasible endpoint.
    CHECK(res.sigma_star == res.bracket.second);
}

TEST_CASE("invalid brackets are rejected") {
    const PrecisionContext ctx(50);
    CHECK_THROWS_AS(find_sigma_star(deg("1.3", ctx), deg("1.5", ctx), ctx), bracket_error);
    CHECK_THROWS_AS(find_sigma_star(deg("1.5", ctx), deg("1.0", ctx), ctx), bracket_error);
}

TEST_CASE("root residual shrinks as precision grows") {
    auto residual = [](int digits) {
        const PrecisionContext ctx(digits);
        const auto res = find_sigma_star(deg("1.0", ctx), deg("1.5", ctx), ctx);
        const auto rep = cover::construct(res.sigma_star, ctx);
        return eval_abs(rep.angle_WYL - const_pi(ctx) / 2);
    };
    const Scalar r50 = residual(50);
    const Scalar r100 = residual(100);
    CHECK(r100 < r50);
    CHECK(r50 < pow10(-25, PrecisionContext(50))); // root to half the digits
}

TEST_CASE("sigma* is independent of the bracket choice") {
    const PrecisionContext ctx(50);
    const auto a = find_sigma_star(deg("1.0", ctx), deg("1.5", ctx), ctx);
    const auto b = find_sigma_star(deg("1.25", ctx), deg("1.31", ctx), ctx);
    CHECK(eval_abs(a.sigma_star - b.sigma_star) <= pow10(12 - ctx.digits(), ctx));
}

TEST_CASE("scan preserves order and reports failures inline") {
    const PrecisionContext ctx(50);
    const auto entries = scan({deg("1.2", ctx), deg("1.3", ctx)}, ctx);
    REQUIRE(entries.size() == 2);
    REQUIRE(entries[0].report.has_value());
    REQUIRE(entries[1].report.has_value());
    CHECK_FALSE(entries[0].report->constraints_ok);
    CHECK(entries[1].report->constraints_ok);
    CHECK(entries[1].report->area.str(16) == "0.8441153768593767");

    CHECK(scan({}, ctx).empty());

    const auto bad = scan({deg("-1", ctx), deg("1.3", ctx)}, ctx);
    REQUIRE(bad.size() == 2);
    CHECK_FALSE(bad[0].report.has_value());
    CHECK_FALSE(bad[0].error.empty());
    CHECK(bad[1].report.has_value());
}

TEST_CASE("area chain: area(sigma*) < area(1.3 deg) < corrected bound < classical bound") {
    const PrecisionContext ctx(50);
    const auto res = find_sigma_star(deg("1.0", ctx), deg("1.5", ctx), ctx);
    const Scalar a13 = cover::construct(deg("1.3", ctx), ctx).area;
    CHECK(res.area < a13);
    CHECK(a13 < Scalar::parse("0.844137708398", ctx));
    CHECK(Scalar::parse("0.844137708398", ctx) < Scalar::parse("0.844137708436", ctx));
}
