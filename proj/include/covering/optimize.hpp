#pragma once

// Finds the smallest valid slant angle: the root of angle(WYL)(sigma) = 90
// degrees.  The area is decreasing in sigma until this binding constraint
// becomes active, so minimizing the area reduces to a well-conditioned
// one-dimensional root-find by bisection.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covering/cover.hpp"
#include "covering/errors.hpp"
#include "covering/scalar.hpp"

namespace covering::optimize {

struct OptimizeResult {
    Scalar sigma_star; // radians; the feasible bracket endpoint
    Scalar area;
    std::pair<Scalar, Scalar> bracket; // final (infeasible, feasible) endpoints
    int iterations;
    bool all_constraints_verified;
};

struct ScanEntry {
    Scalar sigma; // radians
    std::optional<cover::ConstructionReport> report;
    std::string error; // empty on success
};

namespace detail {

// angle(WYL) - pi/2; cheaper than a full construct (no boundary or area).
inline Scalar constraint_residual(const Scalar& sigma, const PrecisionContext& ctx) {
    const cover::HexPair hp = cover::build_hexagons(sigma, ctx);
    const cover::NamedPoints np = cover::locate_points(hp);
    return interior_angle(np.Y, np.W, np.L) - const_pi(ctx) / 2;
}

} // namespace detail

inline OptimizeResult find_sigma_star(const Scalar& lo_in, const Scalar& hi_in,
                                      const PrecisionContext& ctx) {
    Scalar lo = lo_in;
    Scalar hi = hi_in;
    if (!(lo < hi)) {
        throw bracket_error("find_sigma_star: bracket endpoints out of order");
    }
    const Scalar f_lo = detail::constraint_residual(lo, ctx);
    const Scalar f_hi = detail::constraint_residual(hi, ctx);
    if (!(f_lo.sign() < 0 && f_hi.sign() >= 0)) {
        throw bracket_error("find_sigma_star: angle WYL - 90deg does not change sign over "
                            "bracket [" + lo.str(20) + ", " + hi.str(20) + "] rad (residuals " +
                            f_lo.str(10) + ", " + f_hi.str(10) + ")");
    }
    const Scalar width_tol = pow10(10 - ctx.digits(), ctx);
    int iterations = 0;
    while (hi - lo >= width_tol) {
        const Scalar mid = (lo + hi) / 2;
        if (detail::constraint_residual(mid, ctx).sign() >= 0) {
            hi = mid;
        } else {
            lo = mid;
        }
        ++iterations;
    }
    // Report the feasible endpoint, never the infeasible side.
    const cover::ConstructionReport rep = cover::construct(hi, ctx);
    const Scalar right_angle = const_pi(ctx) / 2;
    if (rep.angle_WYL < right_angle) {
        throw inconsistency_error("find_sigma_star: feasible endpoint fails the WYL constraint");
    }
    return OptimizeResult{hi, rep.area, {std::move(lo), hi}, iterations, rep.constraints_ok};
}

inline std::vector<ScanEntry> scan(const std::vector<Scalar>& sigmas,
                                   const PrecisionContext& ctx) {
    std::vector<ScanEntry> out;
    out.reserve(sigmas.size());
    for (const Scalar& s : sigmas) {
        try {
            out.push_back(ScanEntry{s, cover::construct(s, ctx), ""});
        } catch (const error& e) {
            out.push_back(ScanEntry{s, std::nullopt, e.what()});
        }
    }
    return out;
}

} // namespace covering::optimize
