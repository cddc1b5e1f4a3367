// ryamabe: command-line front end for the radial Yamabe solver.
//
// Exit codes: 0 success, 2 usage, 3 numerical failure, 4 count shortfall.
// Output goes to --out, or to $RADIAL_YAMABE_OUTPUT_DIR/<command>.<format>
// (current directory when the variable is unset). "-" writes to stdout.

#include "radial_yamabe/census.hpp"
#include "radial_yamabe/linear_modes.hpp"
#include "radial_yamabe/report.hpp"
#include "radial_yamabe/shooting.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ry = radial_yamabe;
using ry::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kNumerical = 3, kShortfall = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "json";
    std::string out;
    double tol = 1e-11;
    double scan_tol = 1e-10;
    double tol_alpha = 1e-13;
    double quad_tol = 1e-10;
};

struct Result {
    json payload;         // JSON body, without the config
    std::string csv;      // CSV body, without the header comments
    json summary;         // flat scalars repeated as CSV comments
    int exit_code = kOk;
};

ry::ShootingOptions shooting_options(const Common& c) {
    ry::ShootingOptions so;
    so.refine_integrator.tol = c.tol;
    so.scan_integrator.tol = c.scan_tol;
    so.tol_alpha = c.tol_alpha;
    so.quadrature.rel_tol = c.quad_tol;
    return so;
}

ry::CensusOptions census_options(const Common& c) {
    ry::CensusOptions co;
    co.shooting = shooting_options(c);
    return co;
}

json tolerances(const Common& c) {
    return {{"integrator_tol", c.tol},
            {"scan_tol", c.scan_tol},
            {"tol_alpha", c.tol_alpha},
            {"quadrature_tol", c.quad_tol}};
}

void check_positive(const Common& c) {
    for (double t : {c.tol, c.scan_tol, c.tol_alpha, c.quad_tol})
        if (!(t > 0.0)) throw UsageError("tolerances must be positive");
}

std::filesystem::path output_path(const std::string& command, const Common& c) {
    if (!c.out.empty()) return c.out;
    const char* dir = std::getenv("RADIAL_YAMABE_OUTPUT_DIR");
    std::filesystem::path base = (dir && *dir) ? dir : ".";
    return base / (command + "." + c.format);
}

void emit(const std::string& command, const Common& c, json config, const Result& r) {
    const std::filesystem::path path = output_path(command, c);
    std::ostringstream os;
    if (c.format == "json") {
        json doc{{"config", config}, {"result", r.payload}};
        os << doc.dump(2) << '\n';
    } else {
        ry::write_csv_header_comments(os, config.flatten());
        for (const auto& [k, v] : r.summary.items()) {
            os << "# result." << k << '=';
            if (v.is_number_float()) os << ry::format_double(v.get<double>());
            else if (v.is_string()) os << v.get<std::string>();
            else os << v.dump();
            os << '\n';
        }
        os << r.csv;
    }
    if (path == "-") {
        std::cout << os.str();
        return;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    f << os.str();
    if (!f) throw std::runtime_error("write failed for " + path.string());
    std::cerr << "wrote " << path.string() << '\n';
}

// --- modes -------------------------------------------------------------------

struct ModesArgs {
    std::optional<int> n;
    std::optional<double> A;
    int m = 2;
    int samples = 201;
    double tol = 1e-12;
};

Result run_modes(const ModesArgs& a) {
    if (a.m < 2) throw UsageError("--m must be >= 2");
    if (a.samples < 2) throw UsageError("--samples must be >= 2");
    if (a.n.has_value() == a.A.has_value()) throw UsageError("give exactly one of --n and --A");
    ry::LinearModeOptions lo;
    lo.integrator.tol = a.tol;
    ry::LinearMode mode;
    double lo_t = 0.0, hi_t = std::numbers::pi;
    if (a.n) {
        if (*a.n < 0) throw UsageError("--n must be >= 0");
        mode = ry::polynomial_mode(*a.n, a.m);
    } else {
        if (!(*a.A > 0.0)) throw UsageError("--A must be positive");
        mode = ry::numerical_mode(*a.A, a.m, lo);
        lo_t = mode.profile->lo();
        hi_t = mode.profile->hi();
    }
    const ry::ZeroCount zc = ry::count_zeros(mode, lo_t, hi_t);
    int extrema = 0;
    bool extrema_near = false;
    if (mode.A > 0.0) {
        const ry::ExtremaCount ec = ry::count_extrema_linear(mode.A, a.m, 1e-9, lo.integrator);
        extrema = ec.count;
        extrema_near = ec.near_boundary;
    }
    const auto band = ry::band_index(mode.A, a.m);

    Result r;
    r.payload = ry::mode_to_json(mode, a.samples, lo_t, hi_t);
    r.payload["zeros"] = zc.locations;
    r.payload["zero_count"] = zc.count;
    r.payload["zero_count_ambiguous"] = zc.ambiguous;
    r.payload["extrema_half"] = extrema;
    r.payload["extrema_near_boundary"] = extrema_near;
    r.payload["band"] = band ? json(*band) : json(nullptr);
    r.summary = {{"A", mode.A}, {"zero_count", zc.count}, {"extrema_half", extrema},
                 {"band", band ? json(*band) : json(nullptr)}};
    if (mode.poly) {
        std::string coeffs;
        for (const auto& c : mode.poly->coeffs()) coeffs += (coeffs.empty() ? "" : " ") + ry::to_string(c);
        r.summary["coefficients"] = coeffs;
    }
    std::ostringstream os;
    ry::write_mode_csv(os, mode, a.samples, lo_t, hi_t);
    r.csv = os.str();
    return r;
}

// --- shoot -------------------------------------------------------------------

struct ShootArgs {
    double alpha = 1.0;
    double lambda = 1.0;
    double p = 4.0;
    int m = 2;
    double t_end = std::numbers::pi / 2;
};

Result run_shoot(const ShootArgs& a, const Common& c) {
    if (a.m < 2) throw UsageError("--m must be >= 2");
    if (!(a.alpha > 0.0) || !(a.lambda > 0.0) || !(a.p > 2.0))
        throw UsageError("need alpha > 0, lambda > 0, p > 2");
    if (!(a.t_end > 0.0 && a.t_end <= std::numbers::pi)) throw UsageError("--t-end must lie in (0, pi]");
    const ry::ShootingProblem P{a.m, a.lambda, a.p};
    auto io = ry::IntegratorOptions::with_tol(c.tol);
    const ry::MissResult ms = ry::miss(a.alpha, P, io);
    io.atol = c.tol * std::min(a.alpha, 1.0);
    const ry::Trajectory tr = ry::integrate(P.ode(), a.alpha, 0.0, a.t_end, io);
    if (tr.exit.kind == ry::ExitKind::step_failure)
        throw ry::NumericalFailure("step failure at t = " + std::to_string(tr.exit.t));

    Result r;
    json exit{{"kind", ry::to_string(tr.exit.kind)}, {"t", tr.exit.t}};
    json miss{{"numeric", ms.numeric},
              {"exit", ry::to_string(ms.exit)},
              {"t_event", ms.t_event}};
    if (ms.numeric) {
        miss["value"] = ms.value;
        miss["u_half"] = ms.u_half;
    }
    json t = json::array(), u = json::array(), du = json::array(), E = json::array();
    std::ostringstream os;
    os << "t,u,du,E\n";
    auto row = [&](double tt, double uu, double vv) {
        const double e = P.energy(uu, vv);
        t.push_back(tt);
        u.push_back(uu);
        du.push_back(vv);
        E.push_back(e);
        os << ry::format_double(tt) << ',' << ry::format_double(uu) << ',' << ry::format_double(vv)
           << ',' << ry::format_double(e) << '\n';
    };
    row(0.0, a.alpha, 0.0);
    for (const auto& s : tr.samples) row(s.t, s.u, s.v);
    r.payload = {{"alpha", a.alpha},
                 {"A", P.A()},
                 {"miss", miss},
                 {"exit", exit},
                 {"profile", {{"t", t}, {"u", u}, {"du", du}, {"E", E}}}};
    r.summary = {{"exit", ry::to_string(tr.exit.kind)},
                 {"exit_t", tr.exit.t},
                 {"miss_numeric", ms.numeric},
                 {"miss", ms.numeric ? json(ms.value) : json(nullptr)}};
    r.csv = os.str();
    return r;
}

// --- census ------------------------------------------------------------------

struct CensusArgs {
    int m = 2;
    int k = 2;
    std::optional<double> delta;
    std::optional<double> s_M;
    std::optional<double> vol_M;
    std::optional<double> lambda;
    double p = 4.0;
    bool profiles = false;
};

int status_exit(ry::CensusStatus s) { return s == ry::CensusStatus::shortfall ? kShortfall : kOk; }

Result run_census_cmd(const CensusArgs& a, const Common& c) {
    if (a.m < 2) throw UsageError("--m must be >= 2");
    const int modes = (a.delta ? 1 : 0) + (a.s_M ? 1 : 0) + (a.lambda ? 1 : 0);
    if (modes != 1) throw UsageError("give exactly one of --delta, --s-M (with --vol-M) or --lambda");
    const auto co = census_options(c);
    ry::Census census;
    if (a.lambda) {
        if (!(*a.lambda > 0.0) || !(a.p > 2.0)) throw UsageError("need lambda > 0 and p > 2");
        const ry::ShootingProblem P{a.m, *a.lambda, a.p};
        census = ry::run_census(P, ry::FunctionalWeights::from_problem(a.m, a.p, *a.lambda), co);
    } else {
        if (a.k < 1) throw UsageError("--k must be >= 1");
        std::optional<ry::GeometryConfig> cfg;
        if (a.delta) {
            if (!(*a.delta > 0.0)) throw UsageError("--delta must be positive");
            cfg = ry::product_config(a.m, a.k, *a.delta);
        } else {
            if (!a.vol_M || !(*a.vol_M > 0.0)) throw UsageError("--s-M needs a positive --vol-M");
            cfg.emplace(a.m, a.k, *a.s_M, *a.vol_M);
        }
        if (!cfg->has_positive_lambda())
            throw UsageError("total scalar curvature must be positive, got " +
                             std::to_string(cfg->s_total()));
        census = ry::run_census(*cfg, co);
    }
    Result r;
    r.payload = ry::census_to_json(census, a.profiles);
    r.summary = {{"A", census.A},
                 {"band", census.band},
                 {"predicted_min", census.predicted_min},
                 {"found", census.found()},
                 {"symmetric", census.symmetric_count()},
                 {"instability_coefficient", census.instability_coefficient},
                 {"status", ry::to_string(census.status)}};
    std::ostringstream os;
    ry::write_census_csv(os, census);
    r.csv = os.str();
    r.exit_code = status_exit(census.status);
    for (const auto& note : census.notes) std::cerr << "note: " << note << '\n';
    return r;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
    int m = 2;
    double p = 4.0;
    double lambda_lo = 1.0;
    double lambda_hi = 12.0;
    int points = 12;
};

Result run_sweep(const SweepArgs& a, const Common& c) {
    if (a.m < 2) throw UsageError("--m must be >= 2");
    if (!(a.p > 2.0)) throw UsageError("--p must exceed 2");
    if (!(a.lambda_lo > 0.0) || a.lambda_hi < a.lambda_lo) throw UsageError("need 0 < lambda-lo <= lambda-hi");
    if (a.points < 0) throw UsageError("--points must be >= 0");
    const ry::SweepReport rep = ry::sweep_lambda(a.m, a.p, a.lambda_lo, a.lambda_hi, a.points, census_options(c));
    Result r;
    r.payload = ry::sweep_to_json(rep);
    r.summary = {{"rows", rep.rows.size()},
                 {"failures", rep.failures},
                 {"staircase_monotone", rep.staircase_monotone}};
    std::ostringstream os;
    ry::write_sweep_csv(os, rep);
    r.csv = os.str();
    for (const auto& row : rep.rows)
        if (!row.error.empty()) std::cerr << "lambda " << row.lambda << ": " << row.error << '\n';
    r.exit_code = rep.failures > 0 ? kShortfall : kOk;
    return r;
}

// --- s2xs2 -------------------------------------------------------------------

struct S2Args {
    std::vector<double> deltas;
    bool profiles = false;
};

Result run_s2xs2(const S2Args& a, const Common& c) {
    if (a.deltas.empty()) throw UsageError("give at least one --delta");
    for (double d : a.deltas)
        if (!(d > 0.0)) throw UsageError("--delta values must be positive");
    const auto rows = ry::s2xs2_table(a.deltas, census_options(c));
    Result r;
    r.payload = ry::s2xs2_to_json(rows, a.profiles);
    int shortfalls = 0;
    for (const auto& row : rows) shortfalls += row.census.status == ry::CensusStatus::shortfall;
    r.summary = {{"rows", rows.size()}, {"shortfalls", shortfalls}};
    std::ostringstream os;
    ry::write_s2xs2_csv(os, rows);
    r.csv = os.str();
    r.exit_code = shortfalls > 0 ? kShortfall : kOk;
    return r;
}

void add_common(CLI::App* sub, Common& c, bool shooting) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", c.out, "Output file ('-' for stdout)");
    if (!shooting) return;
    sub->add_option("--tol", c.tol, "Integrator tolerance for refinement")->capture_default_str();
    sub->add_option("--scan-tol", c.scan_tol, "Integrator tolerance for scans")->capture_default_str();
    sub->add_option("--tol-alpha", c.tol_alpha, "Relative root width in alpha")->capture_default_str();
    sub->add_option("--quad-tol", c.quad_tol, "Quadrature relative tolerance")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial constant scalar curvature metrics on S^m x M"};
    app.require_subcommand(1);
    Common common;

    ModesArgs ma;
    auto* modes = app.add_subcommand("modes", "Linearized modes w_A");
    modes->add_option("--n", ma.n, "Degree of the closed-form mode, A = n(n+m-1)");
    modes->add_option("--A", ma.A, "Coefficient A of the linear equation");
    modes->add_option("--m", ma.m, "Sphere dimension")->required();
    modes->add_option("--samples", ma.samples, "Profile samples")->capture_default_str();
    modes->add_option("--tol", ma.tol, "Integrator tolerance")->capture_default_str();
    add_common(modes, common, false);

    ShootArgs sa;
    auto* shoot = app.add_subcommand("shoot", "Single shot from u(0) = alpha");
    shoot->add_option("--alpha", sa.alpha, "Initial value u(0)")->required();
    shoot->add_option("--lambda", sa.lambda, "Coefficient lambda")->required();
    shoot->add_option("--p", sa.p, "Exponent p")->capture_default_str();
    shoot->add_option("--m", sa.m, "Sphere dimension")->required();
    shoot->add_option("--t-end", sa.t_end, "End of the integration interval")->capture_default_str();
    add_common(shoot, common, true);

    CensusArgs ca;
    auto* census = app.add_subcommand("census", "All certified radial solutions");
    census->add_option("--m", ca.m, "Sphere dimension")->capture_default_str();
    census->add_option("--k", ca.k, "Dimension of M")->capture_default_str();
    census->add_option("--delta", ca.delta, "M = (S^k, delta g0)");
    census->add_option("--s-M", ca.s_M, "Scalar curvature of M");
    census->add_option("--vol-M", ca.vol_M, "Volume of M");
    census->add_option("--lambda", ca.lambda, "Run on (m, p, lambda) directly");
    census->add_option("--p", ca.p, "Exponent p, with --lambda")->capture_default_str();
    census->add_flag("--profiles", ca.profiles, "Include sampled profiles in JSON");
    add_common(census, common, true);

    SweepArgs wa;
    auto* sweep = app.add_subcommand("sweep", "Census counts along a lambda grid");
    sweep->add_option("--m", wa.m, "Sphere dimension")->capture_default_str();
    sweep->add_option("--p", wa.p, "Exponent p")->capture_default_str();
    sweep->add_option("--lambda-lo", wa.lambda_lo, "Lower end of the lambda range")->capture_default_str();
    sweep->add_option("--lambda-hi", wa.lambda_hi, "Upper end of the lambda range")->capture_default_str();
    sweep->add_option("--points", wa.points, "Number of lambda values")->capture_default_str();
    add_common(sweep, common, true);

    S2Args s2;
    auto* s2xs2 = app.add_subcommand("s2xs2", "S^2 x S^2 table over delta");
    s2xs2->add_option("--delta", s2.deltas, "Scale(s) delta of the second factor")->required();
    s2xs2->add_flag("--profiles", s2.profiles, "Include sampled profiles in JSON");
    add_common(s2xs2, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json config{{"command", command},
                {"version", "0.1.0"},
                {"format", common.format},
                {"deterministic", true}};
    try {
        Result r;
        if (command == "modes") {
            config["parameters"] = {{"m", ma.m}, {"samples", ma.samples}};
            if (ma.n) config["parameters"]["n"] = *ma.n;
            if (ma.A) config["parameters"]["A"] = *ma.A;
            config["tolerances"] = {{"integrator_tol", ma.tol}};
            if (!(ma.tol > 0.0)) throw UsageError("tolerances must be positive");
            r = run_modes(ma);
        } else {
            check_positive(common);
            config["tolerances"] = tolerances(common);
            if (command == "shoot") {
                config["parameters"] = {{"alpha", sa.alpha}, {"lambda", sa.lambda}, {"p", sa.p},
                                        {"m", sa.m}, {"t_end", sa.t_end}};
                r = run_shoot(sa, common);
            } else if (command == "census") {
                json par{{"m", ca.m}, {"profiles", ca.profiles}};
                if (!ca.lambda) par["k"] = ca.k;
                if (ca.delta) par["delta"] = *ca.delta;
                if (ca.s_M) par["s_M"] = *ca.s_M;
                if (ca.vol_M) par["vol_M"] = *ca.vol_M;
                if (ca.lambda) {
                    par["lambda"] = *ca.lambda;
                    par["p"] = ca.p;
                }
                config["parameters"] = par;
                r = run_census_cmd(ca, common);
            } else if (command == "sweep") {
                config["parameters"] = {{"m", wa.m}, {"p", wa.p}, {"lambda_lo", wa.lambda_lo},
                                        {"lambda_hi", wa.lambda_hi}, {"points", wa.points}};
                r = run_sweep(wa, common);
            } else {
                config["parameters"] = {{"deltas", s2.deltas}, {"profiles", s2.profiles}};
                r = run_s2xs2(s2, common);
            }
        }
        config["output"] = output_path(command, common).string();
        emit(command, common, config, r);
        return r.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}
