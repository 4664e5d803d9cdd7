#pragma once

// Hansen's iterated corner construction: the x_i recurrence and the sliver
// areas a_i that make up Table 1.
//
// The recurrence comes from the right triangle with legs
// (sqrt(3) x_{i+1} / 2 + x_i) and (1 - x_{i+1} / 2) and hypotenuse 1, i.e.
//   x_{i+1}^2 - (1 - sqrt(3) x_i) x_{i+1} + x_i^2 = 0.
// Only the rationalized root
//   x_{i+1} = 2 x_i^2 / (1 - sqrt(3) x_i + sqrt(1 - 2 sqrt(3) x_i - x_i^2))
// is public; the subtractive root loses roughly half the working digits and
// exists purely as a test oracle.

#include <string>
#include <vector>

#include "covering/errors.hpp"
#include "covering/scalar.hpp"

namespace covering::hansen {

struct HansenRow {
    int i;
    Scalar x;
    Scalar a;
};

// x_0 = 1 - sqrt(3)/2, the first corner offset.
inline Scalar x_initial(const PrecisionContext& ctx) {
    return Scalar(1, ctx) - eval_sqrt(Scalar(3, ctx)) / 2;
}

namespace detail {

inline Scalar radicand(const Scalar& x, const Scalar& sqrt3) {
    return 1 - 2 * sqrt3 * x - x * x;
}

// Subtractive root of the quadratic; catastrophically cancels for small x.
// Test oracle only.
inline Scalar x_next_subtractive(const Scalar& x) {
    const PrecisionContext ctx = x.context();
    const Scalar sqrt3 = eval_sqrt(Scalar(3, ctx));
    const Scalar rad = radicand(x, sqrt3);
    if (rad.sign() < 0) {
        throw domain_error("x_next: negative radicand at x = " + x.str(20));
    }
    return ((1 - sqrt3 * x) - eval_sqrt(rad)) / 2;
}

} // namespace detail

inline Scalar x_next(const Scalar& x) {
    const PrecisionContext ctx = x.context();
    const Scalar sqrt3 = eval_sqrt(Scalar(3, ctx));
    const Scalar rad = detail::radicand(x, sqrt3);
    if (rad.sign() < 0) {
        throw domain_error("x_next: negative radicand at x = " + x.str(20));
    }
    return 2 * x * x / (1 - sqrt3 * x + eval_sqrt(rad));
}

// Area of the sliver between the triangle with legs x_i, x_{i+1} and the unit
// arc through its far corners: a_i = x_i x_{i+1} / 4 - (theta - sin theta)/2
// with chord d = sqrt(x_{i+1}^2/4 + (x_i + sqrt(3) x_{i+1}/2)^2), theta = 2 asin(d/2).
inline Scalar area_row(const Scalar& x_i, const Scalar& x_ip1) {
    const PrecisionContext ctx = x_i.context();
    const Scalar sqrt3 = eval_sqrt(Scalar(3, ctx));
    const Scalar long_leg = x_i + sqrt3 / 2 * x_ip1;
    const Scalar d = eval_sqrt(x_ip1 * x_ip1 / 4 + long_leg * long_leg);
    const Scalar theta = 2 * eval_asin(d / 2);
    return x_i * x_ip1 / 4 - (theta - eval_sin(theta)) / 2;
}

inline std::vector<HansenRow> table(int rows, const PrecisionContext& ctx) {
    if (rows < 1) {
        throw parameter_error("hansen::table: rows must be >= 1, got " + std::to_string(rows));
    }
    std::vector<HansenRow> out;
    out.reserve(static_cast<size_t>(rows));
    Scalar x = x_initial(ctx);
    for (int i = 0; i < rows; ++i) {
        Scalar xn = x_next(x);
        out.push_back({i, x, area_row(x, xn)});
        x = std::move(xn);
    }
    return out;
}

} // namespace covering::hansen
