// Command-line front end: Table 1 of the Hansen recomputation, covering
// construction/optimization for the slant angle sigma, the constant-width
// validation harness, and SVG figures with zoom views.
//
// All JSON numbers are emitted as decimal strings (never binary floats) so
// output is byte-identical across runs and platforms.  Exit codes: 0 success
// (including constraints_ok=false), 2 usage, 3 construction degeneracy,
// 4 I/O.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covering/cover.hpp"
#include "covering/errors.hpp"
#include "covering/hansen.hpp"
#include "covering/optimize.hpp"
#include "covering/scalar.hpp"
#include "covering/svg.hpp"
#include "covering/validate.hpp"

namespace {

using covering::PrecisionContext;
using covering::Scalar;
using ojson = nlohmann::ordered_json;

constexpr int exit_usage = 2;
constexpr int exit_degenerate = 3;
constexpr int exit_io = 4;

Scalar deg_to_rad(const Scalar& deg, const PrecisionContext& ctx) {
    return deg * covering::const_pi(ctx) / 180;
}

Scalar rad_to_deg(const Scalar& rad, const PrecisionContext& ctx) {
    return rad * 180 / covering::const_pi(ctx);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ojson point_json(const covering::Point& p) {
    return ojson::array({p.x.str(), p.y.str()});
}

ojson report_json(const covering::cover::ConstructionReport& rep, const PrecisionContext& ctx) {
    ojson j;
    j["sigma_deg"] = rad_to_deg(rep.sigma, ctx).str();
    j["area"] = rep.area.str();
    j["angle_WYL_deg"] = rad_to_deg(rep.angle_WYL, ctx).str();
    j["angle_MWY_deg"] = rad_to_deg(rep.angle_MWY, ctx).str();
    j["wxy_in_Bprime"] = rep.wxy_in_Bprime;
    j["constraints_ok"] = rep.constraints_ok;
    ojson pts;
    pts["O"] = point_json(rep.points.O);
    pts["N"] = point_json(rep.points.N);
    pts["L"] = point_json(rep.points.L);
    pts["M"] = point_json(rep.points.M);
    pts["W"] = point_json(rep.points.W);
    pts["X"] = point_json(rep.points.X);
    pts["Y"] = point_json(rep.points.Y);
    j["points"] = pts;
    return j;
}

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

int cmd_table1(int rows, int precision) {
    const PrecisionContext ctx(precision);
    ojson j;
    j["schema"] = 1;
    j["command"] = "table1";
    j["precision"] = precision;
    ojson out = ojson::array();
    for (const auto& row : covering::hansen::table(rows, ctx)) {
        ojson r;
        r["i"] = row.i;
        r["x"] = row.x.str();
        r["a"] = row.a.str();
        out.push_back(r);
    }
    j["rows"] = out;
    emit(j);
    return 0;
}

int cmd_area(const std::string& sigma_deg, int precision) {
    const PrecisionContext ctx(precision);
    const Scalar sigma = deg_to_rad(Scalar::parse(sigma_deg, ctx), ctx);
    const auto rep = covering::cover::construct(sigma, ctx);
    ojson j;
    j["schema"] = 1;
    j["command"] = "area";
    j["precision"] = precision;
    ojson body = report_json(rep, ctx);
    for (auto& [k, v] : body.items()) j[k] = v;
    emit(j);
    return 0;
}

int cmd_optimize(const std::string& lo_deg, const std::string& hi_deg, int precision) {
    const PrecisionContext ctx(precision);
    const Scalar lo = deg_to_rad(Scalar::parse(lo_deg, ctx), ctx);
    const Scalar hi = deg_to_rad(Scalar::parse(hi_deg, ctx), ctx);
    const auto res = covering::optimize::find_sigma_star(lo, hi, ctx);
    ojson j;
    j["schema"] = 1;
    j["command"] = "optimize";
    j["precision"] = precision;
    j["sigma_star_deg"] = rad_to_deg(res.sigma_star, ctx).str();
    j["area"] = res.area.str();
    j["bracket_deg"] = ojson::array(
        {rad_to_deg(res.bracket.first, ctx).str(), rad_to_deg(res.bracket.second, ctx).str()});
    j["iterations"] = res.iterations;
    j["all_constraints_verified"] = res.all_constraints_verified;
    emit(j);
    return 0;
}

int cmd_validate(int samples, uint64_t seed, const std::string& sigma_deg, int precision) {
    const PrecisionContext ctx(precision);
    const Scalar sigma = deg_to_rad(Scalar::parse(sigma_deg, ctx), ctx);
    const auto rep = covering::cover::construct(sigma, ctx);
    const auto specs = covering::validate::make_standard_batch(samples, seed);
    const auto summary = covering::validate::batch(specs, rep);
    ojson j;
    j["schema"] = 1;
    j["command"] = "validate";
    j["precision"] = precision;
    j["sigma_deg"] = sigma_deg;
    j["seed"] = seed;
    j["curves"] = summary.total;
    j["failures"] = summary.failures;
    j["worst_violation"] = summary.worst_violation.str();
    j["case_counts"] = ojson::array({summary.case_counts[0], summary.case_counts[1],
                                     summary.case_counts[2], summary.case_counts[3]});
    ojson fails = ojson::array();
    for (const auto& f : summary.failing) {
        ojson w;
        w["curve"] = f.curve_id;
        w["case"] = f.case_used;
        w["rotation"] = fmt_double(f.rotation);
        w["tx"] = fmt_double(f.tx);
        w["ty"] = fmt_double(f.ty);
        w["reflected"] = f.reflected;
        w["violation"] = f.max_violation.str();
        fails.push_back(w);
    }
    j["failing"] = fails;
    emit(j);
    return 0;
}

int cmd_svg(const std::string& sigma_deg, const std::string& zoom, double scale,
            const std::string& out_path, int precision) {
    const PrecisionContext ctx(precision);
    const Scalar sigma = deg_to_rad(Scalar::parse(sigma_deg, ctx), ctx);
    const auto hp = covering::cover::build_hexagons(sigma, ctx);
    const auto rep = covering::cover::construct(sigma, ctx);

    covering::svg::SvgOptions opts;
    opts.scale = scale;
    if (!zoom.empty()) {
        const covering::Point* p = nullptr;
        const std::pair<const char*, const covering::Point*> named[] = {
            {"O", &rep.points.O}, {"N", &rep.points.N}, {"L", &rep.points.L},
            {"M", &rep.points.M}, {"W", &rep.points.W}, {"X", &rep.points.X},
            {"Y", &rep.points.Y}, {"A1", &hp.hexagon[0]}, {"B1", &hp.hexagon[1]},
            {"C1", &hp.hexagon[2]}, {"D1", &hp.hexagon[3]}, {"E1", &hp.hexagon[4]},
            {"F1", &hp.hexagon[5]}};
        for (const auto& [name, pt] : named) {
            if (zoom == name) {
                p = pt;
                break;
            }
        }
        if (p == nullptr) {
            std::cerr << "error: unknown zoom point '" << zoom
                      << "' (valid: O, N, L, M, W, X, Y, A1, B1, C1, D1, E1, F1)\n";
            return exit_usage;
        }
        opts.center_x = p->x.to_double();
        opts.center_y = p->y.to_double();
    }
    const std::string body = covering::svg::render(hp, rep, opts);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path '" << out_path << "'\n";
        return exit_io;
    }
    out << body;
    out.close();
    if (!out) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return exit_io;
    }
    return 0;
}

int emit_error(const char* type, const std::string& message, int code) {
    ojson j;
    j["schema"] = 1;
    j["error"] = {{"type", type}, {"message", message}};
    std::cout << j.dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal covering constructions for sets of unit diameter"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --precision after the subcommand name

    int precision = 50;
    app.add_option("--precision", precision, "working precision in decimal digits (>= 30)")
        ->check(CLI::Range(30, 1000000));

    auto* t1 = app.add_subcommand("table1", "corner-recursion lengths x_i and areas a_i");
    int rows = 5;
    t1->add_option("--rows", rows, "number of rows")->check(CLI::PositiveNumber);

    auto* ar = app.add_subcommand("area", "construct the covering for a slant angle");
    std::string sigma_deg = "1.3";
    ar->add_option("--sigma-deg", sigma_deg, "slant angle in degrees (decimal string)");

    auto* op = app.add_subcommand("optimize", "find the minimal valid slant angle");
    std::string lo_deg = "1.0";
    std::string hi_deg = "1.5";
    op->add_option("--bracket-lo", lo_deg, "bracket lower endpoint, degrees");
    op->add_option("--bracket-hi", hi_deg, "bracket upper endpoint, degrees");

    auto* va = app.add_subcommand("validate", "constant-width placement harness");
    int samples = 1000;
    uint64_t seed = 0;
    std::string va_sigma = "1.3";
    va->add_option("--samples", samples, "number of curves")->check(CLI::NonNegativeNumber);
    va->add_option("--seed", seed, "batch seed");
    va->add_option("--sigma-deg", va_sigma, "slant angle in degrees");

    auto* sv = app.add_subcommand("svg", "render the construction as SVG");
    std::string sv_sigma = "1.3";
    std::string zoom;
    double scale = 1.0;
    std::string out_path = "covering.svg";
    sv->add_option("--sigma-deg", sv_sigma, "slant angle in degrees");
    sv->add_option("--zoom", zoom, "center on a named point (O,N,L,M,W,X,Y,A1..F1)");
    sv->add_option("--scale", scale, "zoom factor")->check(CLI::PositiveNumber);
    sv->add_option("-o,--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (t1->parsed()) return cmd_table1(rows, precision);
        if (ar->parsed()) return cmd_area(sigma_deg, precision);
        if (op->parsed()) return cmd_optimize(lo_deg, hi_deg, precision);
        if (va->parsed()) return cmd_validate(samples, seed, va_sigma, precision);
        if (sv->parsed()) return cmd_svg(sv_sigma, zoom, scale, out_path, precision);
    } catch (const covering::parameter_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const covering::bracket_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const covering::degeneracy_error& e) {
        return emit_error("degeneracy", e.what(), exit_degenerate);
    } catch (const covering::malformed_boundary_error& e) {
        return emit_error("malformed_boundary", e.what(), exit_degenerate);
    } catch (const covering::error& e) {
        return emit_error("internal", e.what(), exit_degenerate);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    }
    return 0;
}
