#pragma once

// Empirical falsification harness: generates curves of constant width 1,
// places each inside a covering following the construction's case analysis,
// and verifies containment by signed distance to the boundary.
//
// Curves are defined by support functions h(phi).  Constant width 1 is the
// identity h(phi) + h(phi + pi) = 1; the boundary point with outward normal
// angle phi is h*u + h'*u_perp.  Kinds: disk (h = 1/2), Reuleaux n-gons
// (piecewise: vertex cones where h = rho*cos(delta), opposite arc cones where
// h = 1 - rho*cos(delta)), and perturbed Reuleaux (a blend toward the disk
// plus odd trigonometric harmonics, scaled to keep the curvature radius
// positive).
//
// Precision policy: curve parameters are machine doubles (exactly convertible
// to Scalars, so both evaluation paths describe the same curve).  Mass
// boundary sampling runs in doubles for throughput; the placement parameters
// and the worst sample are confirmed at a fixed 30-digit context.
// Containment margins away from the deliberate tangencies are >= 1e-7, far
// above both noise floors.
//
// Placement assumes the report was built in the default coordinate frame
// (frame rotation 0), where the Case-3 reflection is a plain x-negation.

#include <array>
#include <cmath>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "covering/cover.hpp"
#include "covering/errors.hpp"
#include "covering/geom.hpp"
#include "covering/scalar.hpp"

namespace covering::validate {

enum class CurveKind { disk, reuleaux, perturbed_reuleaux };

struct CurveSpec {
    CurveKind kind;
    int n;         // odd >= 3 for the Reuleaux kinds
    uint64_t seed; // phase / perturbation seed
};

namespace detail {

// SplitMix64: tiny deterministic generator, identical on every platform.
struct SplitMix64 {
    uint64_t state;

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits (a dyadic rational, hence exact
    // in both double and Scalar arithmetic).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct DoubleMath {
    using R = double;
    R num(double v) const { return v; }
    R pi() const { return 3.14159265358979323846; }
    R cos(const R& x) const { return std::cos(x); }
    R sin(const R& x) const { return std::sin(x); }
};

struct ScalarMath {
    PrecisionContext ctx;
    using R = Scalar;
    R num(double v) const { return Scalar::from_double(v, ctx); }
    R pi() const { return const_pi(ctx); }
    R cos(const R& x) const { return eval_cos(x); }
    R sin(const R& x) const { return eval_sin(x); }
};

inline double wrap_pm_pi(double x) {
    const double two_pi = 6.283185307179586476925286766559;
    x = std::fmod(x, two_pi);
    if (x > 3.14159265358979323846) x -= two_pi;
    if (x <= -3.14159265358979323846) x += two_pi;
    return x;
}

} // namespace detail

struct WidthOneCurve {
    CurveKind kind;
    int n;
    uint64_t seed;
    // All parameters below are machine doubles by definition; see header note.
    double rho;    // Reuleaux circumradius 1/(2 cos(pi/(2n)))
    double phase;  // rotation offset of the vertex fan
    double lambda; // blend weight toward the disk
    struct Harmonic {
        int k;
        double a, b;
    };
    std::vector<Harmonic> harmonics;

    std::string id() const {
        switch (kind) {
        case CurveKind::disk:
            return "disk";
        case CurveKind::reuleaux:
            return "reuleaux(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
        default:
            return "perturbed_reuleaux(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) +
                   ")";
        }
    }

    // Support function and its derivative at outward-normal angle phi.
    // phi_hint must equal phi to double accuracy; it selects the piece.
    template <class M>
    void support(const M& m, const typename M::R& phi, double phi_hint, typename M::R& h,
                 typename M::R& hp) const {
        using R = typename M::R;
        const R one_half = m.num(0.5);
        if (kind == CurveKind::disk) {
            h = one_half;
            hp = m.num(0.0);
            return;
        }
        const double pi_d = 3.14159265358979323846;
        const double two_pi = 2 * pi_d;
        const double hw = pi_d / (2 * n);
        const R pi_r = m.pi();
        bool found = false;
        R base_h = m.num(0.0);
        R base_hp = m.num(0.0);
        for (int k = 0; k < n && !found; ++k) {
            const double tk = pi_d / 2 + phase + two_pi * k / n;
            // Vertex cone around tk.
            double d = detail::wrap_pm_pi(phi_hint - tk);
            if (std::fabs(d) <= hw + 1e-12) {
                const double mult = std::round((phi_hint - tk - d) / two_pi);
                R delta = phi - m.num(tk) - m.num(2.0 * mult) * pi_r;
                base_h = m.num(rho) * m.cos(delta);
                base_hp = m.num(-rho) * m.sin(delta);
                found = true;
                break;
            }
            // Opposite arc cone around tk + pi.
            d = detail::wrap_pm_pi(phi_hint - tk - pi_d);
            if (std::fabs(d) <= hw + 1e-12) {
                const double mult = std::round((phi_hint - tk - pi_d - d) / two_pi);
                R delta = phi - m.num(tk) - (m.num(2.0 * mult) + m.num(1.0)) * pi_r;
                base_h = m.num(1.0) - m.num(rho) * m.cos(delta);
                base_hp = m.num(rho) * m.sin(delta);
                found = true;
                break;
            }
        }
        if (!found) {
            throw inconsistency_error("WidthOneCurve::support: angle not covered by any piece");
        }
        h = m.num(1.0 - lambda) * base_h + m.num(lambda) * one_half;
        hp = m.num(1.0 - lambda) * base_hp;
        for (const Harmonic& c : harmonics) {
            const R kphi = m.num(static_cast<double>(c.k)) * phi;
            h = h + m.num(c.a) * m.cos(kphi) + m.num(c.b) * m.sin(kphi);
            hp = hp + m.num(-c.a * c.k) * m.sin(kphi) + m.num(c.b * c.k) * m.cos(kphi);
        }
    }

    void support_d(double phi, double& h, double& hp) const {
        detail::DoubleMath m;
        support(m, phi, phi, h, hp);
    }

    // Boundary point with outward normal angle phi (double fast path).
    void point_d(double phi, double& x, double& y) const {
        double h, hp;
        support_d(phi, h, hp);
        const double c = std::cos(phi), s = std::sin(phi);
        x = h * c - hp * s;
        y = h * s + hp * c;
    }

    Point point_s(const Scalar& phi, double phi_hint, const PrecisionContext& ctx) const {
        detail::ScalarMath m{ctx};
        Scalar h(ctx), hp(ctx);
        support(m, phi, phi_hint, h, hp);
        const Scalar c = eval_cos(phi), s = eval_sin(phi);
        return Point(h * c - hp * s, h * s + hp * c);
    }
};

namespace detail {

inline void self_check(const WidthOneCurve& curve) {
    const double pi_d = 3.14159265358979323846;
    for (int i = 0; i < 360; ++i) {
        const double phi = 2 * pi_d * i / 360 + 0.0012345; // avoid exact piece corners
        double h1, hp1, h2, hp2;
        curve.support_d(phi, h1, hp1);
        curve.support_d(phi + pi_d, h2, hp2);
        if (std::fabs(h1 + h2 - 1.0) > 1e-12) {
            throw inconsistency_error("make_curve: constant-width check failed for " +
                                      curve.id());
        }
        // Curvature radius h + h'' must be nonnegative.  Piecewise analytic:
        // the Reuleaux base contributes 0 (vertex) or 1 (arc); the blend adds
        // lambda/2; each harmonic contributes (1 - k^2)(a cos + b sin).
        double r = curve.kind == CurveKind::disk ? 0.5 : 0.0;
        if (curve.kind != CurveKind::disk) {
            double base = 0.0; // vertex cone worst case
            r = (1.0 - curve.lambda) * base + curve.lambda * 0.5;
            for (const auto& c : curve.harmonics) {
                r += (1.0 - c.k * c.k) * (c.a * std::cos(c.k * phi) + c.b * std::sin(c.k * phi));
            }
        }
        if (r < -1e-9) {
            throw inconsistency_error("make_curve: convexity check failed for " + curve.id());
        }
    }
}

} // namespace detail

inline WidthOneCurve make_curve(const CurveSpec& spec) {
    WidthOneCurve c{spec.kind, spec.n, spec.seed, 0.0, 0.0, 0.0, {}};
    if (spec.kind != CurveKind::disk) {
        if (spec.n < 3 || spec.n % 2 == 0) {
            throw parameter_error("make_curve: Reuleaux order must be odd and >= 3, got " +
                                  std::to_string(spec.n));
        }
        const double pi_d = 3.14159265358979323846;
        c.rho = 1.0 / (2.0 * std::cos(pi_d / (2 * spec.n)));
        detail::SplitMix64 rng{spec.seed};
        c.phase = rng.uniform() * 2 * pi_d / spec.n;
        if (spec.kind == CurveKind::perturbed_reuleaux) {
            c.lambda = 0.3;
            const int ks[6] = {3, 3, 5, 5, 7, 7};
            double raw[6];
            double weight = 0.0;
            for (int i = 0; i < 6; ++i) {
                raw[i] = 2.0 * rng.uniform() - 1.0;
                weight += (ks[i] * ks[i] - 1) * std::fabs(raw[i]);
            }
            // Sum_k (k^2 - 1)|c_k| <= 0.09 < lambda/2 keeps h + h'' >= 0.06.
            const double scale = 0.09 / weight;
            c.harmonics = {{3, raw[0] * scale, raw[1] * scale},
                           {5, raw[2] * scale, raw[3] * scale},
                           {7, raw[4] * scale, raw[5] * scale}};
        }
    }
    detail::self_check(c);
    return c;
}

// Area enclosed by the curve, via A = (1/2) Integral(h^2 - h'^2) dphi
// (composite Simpson; generator self-test only).
inline double support_area_estimate(const WidthOneCurve& curve, int panels = 100000) {
    const double pi_d = 3.14159265358979323846;
    const double step = 2 * pi_d / panels;
    auto f = [&](double phi) {
        double h, hp;
        curve.support_d(phi, h, hp);
        return h * h - hp * hp;
    };
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = i * step;
        acc += f(a) + 4.0 * f(a + step / 2) + f(a + step);
    }
    return acc * step / 12.0;
}

struct PlacementResult {
    std::string curve_id;
    double rotation; // radians, applied before translation
    double tx, ty;
    bool reflected;
    int case_used; // 1..3, or 0 when no admissible rotation was found
    bool contained;
    Scalar max_violation; // signed distance of the worst sample outside
};

namespace detail {

// Boundary flattened to doubles for mass point queries.
struct CompiledElement {
    bool is_arc;
    // segment: p->q; arc: center c, radius r, ccw from angle a0 through sweep
    double px, py, qx, qy;
    double cx, cy, r, a0, sweep;
};

inline std::vector<CompiledElement> compile_boundary(const CoveringBoundary& boundary) {
    const double two_pi = 6.283185307179586476925286766559;
    std::vector<CompiledElement> out;
    out.reserve(boundary.elements.size());
    for (const auto& e : boundary.elements) {
        CompiledElement ce{};
        if (std::holds_alternative<LineSegment>(e)) {
            const auto& s = std::get<LineSegment>(e);
            ce.is_arc = false;
            ce.px = s.start.x.to_double();
            ce.py = s.start.y.to_double();
            ce.qx = s.end.x.to_double();
            ce.qy = s.end.y.to_double();
        } else {
            const auto& a = std::get<ArcSegment>(e);
            ce.is_arc = true;
            ce.cx = a.center.x.to_double();
            ce.cy = a.center.y.to_double();
            ce.r = a.radius.to_double();
            ce.px = a.start.x.to_double();
            ce.py = a.start.y.to_double();
            ce.qx = a.end.x.to_double();
            ce.qy = a.end.y.to_double();
            ce.a0 = std::atan2(ce.py - ce.cy, ce.px - ce.cx);
            double sw = std::atan2(ce.qy - ce.cy, ce.qx - ce.cx) - ce.a0;
            sw = std::fmod(sw + two_pi, two_pi);
            if (a.orientation == ArcOrientation::clockwise) sw -= two_pi;
            ce.sweep = sw;
        }
        out.push_back(ce);
    }
    return out;
}

// Signed distance of (x, y) from the region bounded by the compiled chain:
// negative inside, positive outside.  Nearest-feature logic: for each element
// take the distance to its span (segments clamp to endpoints; arcs fall back
// to endpoint distance outside their angular span) and keep the sign of the
// strictly nearest signed candidate.  At convex corners both adjacent
// carriers agree on the sign, so ties are safe.
inline double signed_distance_outside(const std::vector<CompiledElement>& els, double x,
                                      double y) {
    const double two_pi = 6.283185307179586476925286766559;
    double best_d = 1e300;
    double best_s = 0.0;
    for (const auto& e : els) {
        double dist, s;
        if (!e.is_arc) {
            const double dx = e.qx - e.px, dy = e.qy - e.py;
            const double len2 = dx * dx + dy * dy;
            double t = ((x - e.px) * dx + (y - e.py) * dy) / len2;
            t = t < 0 ? 0 : (t > 1 ? 1 : t);
            const double nx = e.px + t * dx, ny = e.py + t * dy;
            dist = std::hypot(x - nx, y - ny);
            const double cr = dx * (y - e.py) - dy * (x - e.px);
            s = cr < 0 ? 1.0 : -1.0; // region lies to the left of p->q
        } else {
            const double ang =
                std::fmod(std::atan2(y - e.cy, x - e.cx) - e.a0 + 2 * two_pi, two_pi);
            const double rr = std::hypot(x - e.cx, y - e.cy);
            const bool ccw = e.sweep >= 0;
            const double sw = ccw ? e.sweep : -e.sweep;
            const double a = ccw ? ang : std::fmod(two_pi - ang, two_pi);
            if (a <= sw) {
                dist = std::fabs(rr - e.r);
                s = (rr > e.r) == ccw ? 1.0 : -1.0;
            } else {
                dist = std::min(std::hypot(x - e.px, y - e.py), std::hypot(x - e.qx, y - e.qy));
                s = 0.0; // sign resolved by the adjacent element
            }
        }
        if (dist < best_d && (s != 0.0 || dist < best_d - 1e-15)) {
            best_d = dist;
            best_s = s;
        }
    }
    return best_s * best_d;
}

// Scalar twin of the query above, for confirming the worst sample.
inline Scalar signed_distance_outside_s(const CoveringBoundary& boundary, const Point& p,
                                        const PrecisionContext& ctx) {
    const Scalar two_pi = 2 * const_pi(ctx);
    Scalar best_d(1000, ctx);
    int best_s = 0;
    for (const auto& e : boundary.elements) {
        Scalar dist(ctx);
        int s = 0;
        if (std::holds_alternative<LineSegment>(e)) {
            const auto& seg = std::get<LineSegment>(e);
            const Point d = seg.end - seg.start;
            Scalar t = dot(p - seg.start, d) / dot(d, d);
            if (t.sign() < 0) t = Scalar(ctx);
            if (t > Scalar(1, ctx)) t = Scalar(1, ctx);
            dist = distance(p, seg.start + t * d);
            s = cross(d, p - seg.start).sign() < 0 ? 1 : -1;
        } else {
            const auto& arc = std::get<ArcSegment>(e);
            const Point rs = arc.start - arc.center;
            const Point rp = p - arc.center;
            Scalar ang = eval_atan2(rp.y, rp.x) - eval_atan2(rs.y, rs.x);
            while (ang.sign() < 0) ang = ang + two_pi;
            while (ang > two_pi) ang = ang - two_pi;
            const Scalar ccw_sw = covering::detail::ccw_sweep(arc);
            const bool ccw = arc.orientation == ArcOrientation::counterclockwise;
            const Scalar sweep = ccw ? ccw_sw : two_pi - ccw_sw;
            const Scalar off = ccw ? ang : two_pi - ang;
            const Scalar rr = norm(rp);
            if (off <= sweep) {
                dist = eval_abs(rr - arc.radius);
                s = ((rr > arc.radius) == ccw) ? 1 : -1;
            } else {
                dist = scalar_min(distance(p, arc.start), distance(p, arc.end));
                s = 0;
            }
        }
        if (dist < best_d && (s != 0 || dist < best_d - pow10(-15, ctx))) {
            best_d = dist;
            best_s = s;
        }
    }
    return Scalar(best_s, PrecisionContext(30)) * best_d;
}

struct TriangleD {
    double ax, ay, bx, by, cx, cy;
};

inline TriangleD triangle_to_double(const std::array<Point, 3>& tri, bool mirror_x) {
    const double f = mirror_x ? -1.0 : 1.0;
    return {f * tri[0].x.to_double(), tri[0].y.to_double(),
            f * tri[1].x.to_double(), tri[1].y.to_double(),
            f * tri[2].x.to_double(), tri[2].y.to_double()};
}

// Max penetration depth of the points into the triangle (positive = inside).
inline double penetration(const TriangleD& t, const std::vector<double>& xs,
                          const std::vector<double>& ys) {
    double vx[3] = {t.ax, t.bx, t.cx};
    double vy[3] = {t.ay, t.by, t.cy};
    const double orient =
        (vx[1] - vx[0]) * (vy[2] - vy[0]) - (vy[1] - vy[0]) * (vx[2] - vx[0]);
    if (orient < 0) {
        std::swap(vx[1], vx[2]);
        std::swap(vy[1], vy[2]);
    }
    double best = -1e300;
    for (size_t i = 0; i < xs.size(); ++i) {
        double pen = 1e300;
        for (int k = 0; k < 3; ++k) {
            const int k2 = (k + 1) % 3;
            const double ex = vx[k2] - vx[k], ey = vy[k2] - vy[k];
            const double len = std::hypot(ex, ey);
            const double d = (ex * (ys[i] - vy[k]) - ey * (xs[i] - vx[k])) / len;
            pen = std::min(pen, d);
        }
        best = std::max(best, pen);
    }
    return best;
}

} // namespace detail

inline PlacementResult place_in_covering(const WidthOneCurve& curve,
                                         const cover::ConstructionReport& report,
                                         int boundary_samples = 10000,
                                         const CoveringBoundary* boundary_override = nullptr) {
    if (!report.constraints_ok) {
        throw parameter_error("place_in_covering: construction report fails its constraints");
    }
    const PrecisionContext ctx(30);
    const double pi_d = 3.14159265358979323846;
    const double two_pi = 2 * pi_d;
    const double s3 = std::sqrt(3.0);
    const CoveringBoundary& boundary =
        boundary_override != nullptr ? *boundary_override : report.boundary;
    const auto els = detail::compile_boundary(boundary);
    detail::ScalarMath sm{ctx};

    // Rotation rho such that the curve's support lines in the three inward
    // side normal directions 90, 210, 330 degrees are consistent with one
    // translation: g(rho) = sum of the three supports - 3/2 = 0.  Constant
    // width gives g(rho + 60deg) = -g(rho), so [0, 60deg] always brackets.
    auto g_d = [&](double rho) {
        double tot = 0.0, h, hp;
        for (double beta : {pi_d / 2, pi_d * 7 / 6, pi_d * 11 / 6}) {
            curve.support_d(beta - rho, h, hp);
            tot += h;
        }
        return tot - 1.5;
    };
    double rho0_d = 0.0;
    const double g0 = g_d(0.0);
    if (std::fabs(g0) > 1e-14) {
        double lo = 0.0, hi = pi_d / 3;
        for (int i = 0; i < 80; ++i) {
            const double mid = (lo + hi) / 2;
            if (g_d(mid) * g0 <= 0) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        rho0_d = (lo + hi) / 2;
    }
    // Confirm the root at 30 digits (keeps the deliberate tangencies exact to
    // well below the containment threshold).
    auto g_s = [&](const Scalar& rho) {
        Scalar tot(ctx), h(ctx), hp(ctx);
        const Scalar pi_s = const_pi(ctx);
        const double betas_d[3] = {pi_d / 2, pi_d * 7 / 6, pi_d * 11 / 6};
        const Scalar betas[3] = {pi_s / 2, pi_s * 7 / 6, pi_s * 11 / 6};
        for (int i = 0; i < 3; ++i) {
            curve.support(sm, betas[i] - rho, betas_d[i] - rho.to_double(), h, hp);
            tot = tot + h;
        }
        return tot - Scalar::from_double(1.5, ctx);
    };
    Scalar rho0 = Scalar::from_double(rho0_d, ctx);
    if (std::fabs(g0) > 1e-14) {
        Scalar lo = rho0 - Scalar::from_double(1e-12, ctx);
        Scalar hi = rho0 + Scalar::from_double(1e-12, ctx);
        const int slo = g_s(lo).sign();
        const int shi = g_s(hi).sign();
        if (slo != 0 && shi != 0 && slo != shi) {
            for (int i = 0; i < 70; ++i) {
                const Scalar mid = (lo + hi) / 2;
                if (g_s(mid).sign() == slo) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            rho0 = (lo + hi) / 2;
        }
    }

    // Base boundary samples (doubles).
    std::vector<double> bx(static_cast<size_t>(boundary_samples));
    std::vector<double> by(static_cast<size_t>(boundary_samples));
    std::vector<double> bphi(static_cast<size_t>(boundary_samples));
    for (int i = 0; i < boundary_samples; ++i) {
        const double phi = two_pi * i / boundary_samples;
        bphi[static_cast<size_t>(i)] = phi;
        curve.point_d(phi, bx[static_cast<size_t>(i)], by[static_cast<size_t>(i)]);
    }

    const auto& tri_c = report.points.triangles[static_cast<size_t>(cover::Corner::C)];
    const auto& tri_e = report.points.triangles[static_cast<size_t>(cover::Corner::E)];
    const detail::TriangleD tc = detail::triangle_to_double(tri_c, false);
    const detail::TriangleD te = detail::triangle_to_double(tri_e, false);
    const detail::TriangleD tcp = detail::triangle_to_double(tri_c, true); // C'
    const detail::TriangleD tep = detail::triangle_to_double(tri_e, true); // E'

    // Translation for a given rotation: support line on side A1B1 (normal 90
    // degrees) pinned to y = 1/2 and on side F1A1 (normal 210 degrees) pinned
    // to its carrier.
    auto translation_s = [&](const Scalar& rho, Scalar& tx, Scalar& ty) {
        const Scalar pi_s = const_pi(ctx);
        Scalar h90(ctx), h210(ctx), hp(ctx);
        curve.support(sm, pi_s / 2 - rho, pi_d / 2 - rho.to_double(), h90, hp);
        curve.support(sm, pi_s * 7 / 6 - rho, pi_d * 7 / 6 - rho.to_double(), h210, hp);
        const Scalar half = Scalar(1, ctx) / 2;
        ty = half - h90;
        tx = (h210 - half - ty / 2) * 2 / eval_sqrt(Scalar(3, ctx));
    };

    // Try the six candidate rotations; keep the one that avoids the removed
    // triangles C and E.
    struct Candidate {
        double pen;
        int k;
        Scalar rho, tx, ty;
    };
    std::optional<Candidate> best;
    std::vector<double> px(bx.size()), py(by.size());
    for (int k = 0; k < 6; ++k) {
        const Scalar rho = rho0 + Scalar(k, ctx) * const_pi(ctx) / 3;
        Scalar tx(ctx), ty(ctx);
        translation_s(rho, tx, ty);
        const double rho_d = rho.to_double();
        const double cr = std::cos(rho_d), sr = std::sin(rho_d);
        const double txd = tx.to_double(), tyd = ty.to_double();
        for (size_t i = 0; i < bx.size(); ++i) {
            px[i] = cr * bx[i] - sr * by[i] + txd;
            py[i] = sr * bx[i] + cr * by[i] + tyd;
        }
        const double pen =
            std::max(detail::penetration(tc, px, py), detail::penetration(te, px, py));
        if (!best || pen < best->pen) {
            best = Candidate{pen, k, rho, tx, ty};
        }
        if (pen <= 1e-9) break;
    }
    if (best->pen > 1e-9) {
        return PlacementResult{curve.id(), best->rho.to_double(), best->tx.to_double(),
                               best->ty.to_double(), false, 0, false,
                               Scalar::from_double(best->pen, ctx)};
    }

    const Scalar rho = best->rho;
    const double rho_d = rho.to_double();
    const double cr = std::cos(rho_d), sr = std::sin(rho_d);
    const double txd = best->tx.to_double(), tyd = best->ty.to_double();
    for (size_t i = 0; i < bx.size(); ++i) {
        px[i] = cr * bx[i] - sr * by[i] + txd;
        py[i] = sr * bx[i] + cr * by[i] + tyd;
    }

    // Case dispatch: does the placed curve enter the reflected triangles?
    int case_used = 3;
    if (detail::penetration(tep, px, py) > 1e-9) {
        case_used = 1;
    } else if (detail::penetration(tcp, px, py) > 1e-9) {
        case_used = 2;
    }
    bool reflected = false;
    if (case_used == 3) {
        // Reflect so the bottom touch point lands on the kept half of D1E1.
        double qx, qy;
        curve.point_d(pi_d * 3 / 2 - rho_d, qx, qy);
        const double tx0 = cr * qx - sr * qy + txd;
        if (tx0 < 0) {
            reflected = true;
            for (size_t i = 0; i < bx.size(); ++i) px[i] = -px[i];
        }
    }

    // Containment sweep in doubles, then confirm the worst sample at 30 digits.
    double worst_d = -1e300;
    size_t worst_i = 0;
    for (size_t i = 0; i < px.size(); ++i) {
        const double v = detail::signed_distance_outside(els, px[i], py[i]);
        if (v > worst_d) {
            worst_d = v;
            worst_i = i;
        }
    }
    Scalar max_violation = Scalar::from_double(worst_d, ctx);
    if (worst_d <= 1e-8) {
        // Near-threshold: re-evaluate the worst sample and its neighbors in
        // Scalar arithmetic with the Scalar placement parameters.
        const Scalar pi_s = const_pi(ctx);
        max_violation = Scalar(-1, ctx);
        for (int off = -1; off <= 1; ++off) {
            const size_t i = (worst_i + px.size() + static_cast<size_t>(off + 1) - 1) % px.size();
            const Scalar phi =
                2 * pi_s * Scalar(static_cast<long>(i), ctx) / static_cast<long>(px.size());
            const Point p0 = curve.point_s(phi, bphi[i], ctx);
            const Scalar cs = eval_cos(rho), sn = eval_sin(rho);
            Point p(cs * p0.x - sn * p0.y + best->tx, sn * p0.x + cs * p0.y + best->ty);
            if (reflected) p = Point(-p.x, p.y);
            const Scalar v = detail::signed_distance_outside_s(boundary, p, ctx);
            max_violation = scalar_max(max_violation, v);
        }
    }
    const bool contained = max_violation <= pow10(-10, ctx);
    return PlacementResult{curve.id(),     rho_d,     txd,       tyd,
                           reflected,      case_used, contained, std::move(max_violation)};
}

struct BatchSummary {
    size_t total = 0;
    size_t failures = 0;
    Scalar worst_violation;
    std::array<size_t, 4> case_counts{}; // [0]=none, [1..3]=cases
    std::vector<PlacementResult> failing;
};

// Deterministic mixed batch: one disk, the plain Reuleaux 3/5/7, then
// perturbed Reuleaux curves cycling n in {3,5,7} with seeds derived from
// `seed` by SplitMix64.
inline std::vector<CurveSpec> make_standard_batch(int count, uint64_t seed) {
    std::vector<CurveSpec> specs;
    specs.reserve(static_cast<size_t>(count));
    detail::SplitMix64 rng{seed ^ 0xC0FFEE123456789ull};
    for (int i = 0; i < count; ++i) {
        const uint64_t s = rng.next();
        if (i == 0) {
            specs.push_back({CurveKind::disk, 0, 0});
        } else if (i <= 3) {
            specs.push_back({CurveKind::reuleaux, 2 * i + 1, s});
        } else {
            specs.push_back({CurveKind::perturbed_reuleaux, 3 + 2 * (i % 3), s});
        }
    }
    return specs;
}

inline BatchSummary batch(const std::vector<CurveSpec>& specs,
                          const cover::ConstructionReport& report, int boundary_samples = 10000,
                          const CoveringBoundary* boundary_override = nullptr) {
    const PrecisionContext ctx(30);
    BatchSummary summary{0, 0, Scalar(-1, ctx), {}, {}};
    summary.total = specs.size();
    if (specs.empty()) return summary;

    const size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
    const size_t workers = std::min(hw, specs.size());
    const size_t chunk = (specs.size() + workers - 1) / workers;
    std::vector<std::future<std::vector<PlacementResult>>> futs;
    for (size_t w = 0; w < workers; ++w) {
        const size_t begin = w * chunk;
        const size_t end = std::min(specs.size(), begin + chunk);
        if (begin >= end) break;
        futs.push_back(std::async(std::launch::async, [&, begin, end] {
            std::vector<PlacementResult> out;
            out.reserve(end - begin);
            for (size_t i = begin; i < end; ++i) {
                out.push_back(place_in_covering(make_curve(specs[i]), report, boundary_samples,
                                                boundary_override));
            }
            return out;
        }));
    }
    // Merge in submission order: deterministic regardless of scheduling.
    for (auto& f : futs) {
        for (PlacementResult& r : f.get()) {
            summary.worst_violation = scalar_max(summary.worst_violation, r.max_violation);
            ++summary.case_counts[static_cast<size_t>(r.case_used)];
            if (!r.contained) {
                ++summary.failures;
                summary.failing.push_back(std::move(r));
            }
        }
    }
    return summary;
}

// Mutation utility for harness-sensitivity tests: cuts corner A1 with a chord
// perpendicular to the 120-degree direction, removing `extra_area` more than
// the unmutated covering (bisected on the cut depth; the returned boundary
// removes at least `extra_area`).
inline CoveringBoundary overcut_corner_a(const cover::ConstructionReport& report,
                                         const Scalar& extra_area) {
    const PrecisionContext ctx = report.area.context();
    const Scalar base = report.area;
    const Scalar sqrt3 = eval_sqrt(Scalar(3, ctx));
    const Point dir(Scalar(-1, ctx) / 2, sqrt3 / 2); // unit vector at 120 degrees
    const Scalar two_pi = 2 * const_pi(ctx);
    const Scalar angle_tol = pow10(12 - ctx.digits(), ctx);
    const Scalar len_tol = pow10(12 - ctx.digits(), ctx);

    auto clip_element = [&](const BoundaryElement& e, const Scalar& c,
                            std::vector<BoundaryElement>& out) {
        if (std::holds_alternative<LineSegment>(e)) {
            const auto& s = std::get<LineSegment>(e);
            const Scalar vp = dot(s.start, dir) - c;
            const Scalar vq = dot(s.end, dir) - c;
            if (vp.sign() <= 0 && vq.sign() <= 0) {
                out.push_back(e);
                return;
            }
            if (vp.sign() > 0 && vq.sign() > 0) return;
            const Scalar t = vp / (vp - vq);
            const Point x = s.start + t * (s.end - s.start);
            if (vp.sign() <= 0) {
                if (distance(s.start, x) > len_tol) out.emplace_back(LineSegment(s.start, x));
            } else {
                if (distance(x, s.end) > len_tol) out.emplace_back(LineSegment(x, s.end));
            }
            return;
        }
        const auto& arc = std::get<ArcSegment>(e);
        const Point rs = arc.start - arc.center;
        const Scalar a0 = eval_atan2(rs.y, rs.x);
        const Scalar sweep = covering::detail::ccw_sweep(arc);
        const Scalar f = c - dot(arc.center, dir);
        // Breakpoints where the cut line crosses the circle, as ccw offsets.
        std::vector<std::pair<Scalar, Point>> brk;
        brk.emplace_back(Scalar(ctx), arc.start);
        if (eval_abs(f) < arc.radius) {
            const Point n = perp(dir);
            const Scalar half = eval_sqrt(arc.radius * arc.radius - f * f);
            for (int sgn : {1, -1}) {
                const Point x = arc.center + f * dir + (Scalar(sgn, ctx) * half) * n;
                const Point rx = x - arc.center;
                Scalar ax = eval_atan2(rx.y, rx.x) - a0;
                while (ax.sign() < 0) ax = ax + two_pi;
                while (ax > two_pi) ax = ax - two_pi;
                if (ax > angle_tol && ax < sweep - angle_tol) {
                    brk.emplace_back(ax, x);
                }
            }
        }
        brk.emplace_back(sweep, arc.end);
        std::sort(brk.begin(), brk.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t j = 0; j + 1 < brk.size(); ++j) {
            const Scalar amid = a0 + (brk[j].first + brk[j + 1].first) / 2;
            const Point m = arc.center + Point(arc.radius * eval_cos(amid),
                                               arc.radius * eval_sin(amid));
            if ((dot(m, dir) - c).sign() <= 0) {
                out.emplace_back(ArcSegment(arc.center, arc.radius, brk[j].second,
                                            brk[j + 1].second,
                                            ArcOrientation::counterclockwise));
            }
        }
    };

    auto cut = [&](const Scalar& c) -> std::optional<CoveringBoundary> {
        std::vector<BoundaryElement> kept;
        for (const auto& e : report.boundary.elements) clip_element(e, c, kept);
        if (kept.empty()) return std::nullopt;
        CoveringBoundary nb;
        for (size_t j = 0; j < kept.size(); ++j) {
            nb.elements.push_back(kept[j]);
            const Point& pend = element_end(kept[j]);
            const Point& nstart = element_start(kept[(j + 1) % kept.size()]);
            if (distance(pend, nstart) > len_tol) {
                nb.elements.emplace_back(LineSegment(pend, nstart));
            }
        }
        return nb;
    };

    // Removal is monotone decreasing in the cut offset c; bisect.
    Scalar lo = Scalar::from_double(0.30, ctx);
    Scalar hi = 1 / sqrt3; // corner A1 sits at distance 1/sqrt(3) along dir
    for (int i = 0; i < 120; ++i) {
        const Scalar mid = (lo + hi) / 2;
        const auto nb = cut(mid);
        if (!nb || base - region_area(*nb) < extra_area) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const auto nb = cut(lo);
    if (!nb || base - region_area(*nb) < extra_area) {
        throw inconsistency_error("overcut_corner_a: could not remove the requested area");
    }
    return *nb;
}

} // namespace covering::validate
