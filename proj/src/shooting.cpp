#include "radial_yamabe/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace radial_yamabe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kMonotoneGap = 1e-3;

// Keeps the error control relative for small starting values.
IntegratorOptions scaled(IntegratorOptions io, double alpha) {
    if (!io.atol) io.atol = io.tol * std::min(alpha, 1.0);
    return io;
}

FunctionalWeights weights_for(const ShootingProblem& problem, const ShootingOptions& opts) {
    return opts.weights ? *opts.weights
                        : FunctionalWeights::from_problem(problem.m, problem.p, problem.lambda);
}

CurveSample sample_at(double alpha, const ShootingProblem& problem, const IntegratorOptions& io) {
    const MissResult r = miss(alpha, problem, io);
    CurveSample s;
    s.alpha = alpha;
    s.numeric = r.numeric;
    s.u_half = r.u_half;
    s.v_half = r.value;
    s.exit = r.exit;
    return s;
}

int sign_of(double x) { return (x > 0) - (x < 0); }

std::vector<double> log_grid(double a, double b, int n) {
    // n points from a (exclusive) to b (inclusive), log spaced
    std::vector<double> out;
    const double la = std::log(a), lb = std::log(b);
    for (int i = 1; i <= n; ++i) out.push_back(std::exp(la + (lb - la) * i / n));
    out.back() = b;
    return out;
}

// Walks outward from `anchor` through `grid` (ordered away from anchor),
// stopping at the first event and pinning the boundary by bisection.
std::optional<double> walk_side(const ShootingProblem& problem, const ShootingOptions& opts,
                                const std::vector<double>& grid, std::vector<CurveSample>& out) {
    const auto& io = opts.scan_integrator;
    std::optional<CurveSample> last_numeric;
    for (double a : grid) {
        CurveSample s = sample_at(a, problem, io);
        if (s.numeric) {
            out.push_back(s);
            last_numeric = s;
            continue;
        }
        out.push_back(s);
        if (last_numeric) {
            double good = last_numeric->alpha, bad = a;
            while (std::abs(bad - good) > opts.boundary_rel_tol * std::abs(good)) {
                const double mid = 0.5 * (good + bad);
                CurveSample ms = sample_at(mid, problem, io);
                out.push_back(ms);
                if (ms.numeric) good = mid;
                else bad = mid;
            }
            return bad;
        }
        return a;
    }
    return std::nullopt;
}

void refine_chords(const ShootingProblem& problem, const ShootingOptions& opts,
                   std::vector<CurveSample>& samples) {
    std::sort(samples.begin(), samples.end(),
              [](const CurveSample& x, const CurveSample& y) { return x.alpha < y.alpha; });
    std::vector<CurveSample> extra;
    std::function<void(const CurveSample&, const CurveSample&, int)> rec =
        [&](const CurveSample& a, const CurveSample& b, int depth) {
            if (!a.numeric || !b.numeric || depth >= opts.max_refine_depth) return;
            const double chord = std::hypot(b.u_half - a.u_half, b.v_half - a.v_half);
            if (chord <= opts.chord_max) return;
            const double mid = std::sqrt(a.alpha * b.alpha);
            if (!(mid > a.alpha && mid < b.alpha)) return;
            CurveSample m = sample_at(mid, problem, opts.scan_integrator);
            extra.push_back(m);
            rec(a, m, depth + 1);
            rec(m, b, depth + 1);
        };
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        // never bridge alpha = 1
        if ((samples[i].alpha < 1.0) != (samples[i + 1].alpha < 1.0)) continue;
        rec(samples[i], samples[i + 1], 0);
    }
    samples.insert(samples.end(), extra.begin(), extra.end());
    std::sort(samples.begin(), samples.end(),
              [](const CurveSample& x, const CurveSample& y) { return x.alpha < y.alpha; });
}

std::vector<double> node_values_u(const Profile& prof, double& umax, double& umin) {
    std::vector<double> nodes = prof.nodes();
    umax = -1e300;
    umin = 1e300;
    for (double t : nodes) {
        const double u = prof.eval(t)[0];
        umax = std::max(umax, u);
        umin = std::min(umin, u);
    }
    return nodes;
}

void finish_record(SolutionRecord& rec, const ShootingProblem& problem, const ShootingOptions& opts) {
    const Profile& prof = *rec.profile;
    const auto nodes = node_values_u(prof, rec.u_max, rec.u_min);
    rec.energy_profile.clear();
    rec.energy_profile.reserve(nodes.size());
    for (double t : nodes) {
        const State y = prof.eval(t);
        rec.energy_profile.push_back({t, y[0], y[1], problem.energy(y[0], y[1])});
    }
    const auto ext = profile_extrema(prof, 0.0, kHalfPi, opts.extremum_threshold);
    rec.extrema_half = static_cast<int>(
        std::count_if(ext.begin(), ext.end(), [](double t) { return kHalfPi - t > 1e-7; }));
    rec.u_half = prof.eval(kHalfPi)[0];
    if (rec.u_min > 0.0)
        rec.yamabe_value =
            yamabe_functional(prof.radial_function(), weights_for(problem, opts), opts.quadrature);
}

bool strictly_signed_derivative(const Profile& prof, int sign) {
    for (double t : prof.nodes()) {
        if (t <= kMonotoneGap || t >= kPi - kMonotoneGap) continue;
        if (sign_of(prof.eval(t)[1]) != sign) return false;
    }
    return true;
}

struct HalfData {
    bool ok = false;
    double u = 0.0;
    double v = 0.0;
};

HalfData half_data(double alpha, const ShootingProblem& problem, const IntegratorOptions& io) {
    if (!(alpha > 0.0)) return {};
    const MissResult r = miss(alpha, problem, io);
    if (!r.numeric) return {};
    return {true, r.u_half, r.value};
}

struct Polished {
    bool ok = false;
    double alpha = 0.0;
    double beta = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Newton on F(alpha, beta) = (u(alpha) - u(beta), v(alpha) + v(beta)) at pi/2.
Polished newton_match(double alpha, double beta, const ShootingProblem& problem,
                      const ShootingOptions& opts) {
    const auto& io = opts.refine_integrator;
    const double accept = 1e-9;
    auto F = [&](double a, double b, std::array<double, 2>& out) {
        const HalfData fa = half_data(a, problem, io);
        const HalfData fb = half_data(b, problem, io);
        if (!fa.ok || !fb.ok) return false;
        out = {fa.u - fb.u, fa.v + fb.v};
        return true;
    };
    Polished res;
    std::array<double, 2> f{};
    if (!F(alpha, beta, f)) return res;
    double norm = std::hypot(f[0], f[1]);
    int stall = 0;
    for (int it = 0; it < opts.newton_max_iter && norm > opts.newton_tol; ++it) {
        res.iterations = it + 1;
        const double ha = 1e-7 * alpha, hb = 1e-7 * beta;
        const HalfData ap = half_data(alpha + ha, problem, io), am = half_data(alpha - ha, problem, io);
        const HalfData bp = half_data(beta + hb, problem, io), bm = half_data(beta - hb, problem, io);
        if (!ap.ok || !am.ok || !bp.ok || !bm.ok) break;
        const double du_a = (ap.u - am.u) / (2 * ha), dv_a = (ap.v - am.v) / (2 * ha);
        const double du_b = (bp.u - bm.u) / (2 * hb), dv_b = (bp.v - bm.v) / (2 * hb);
        // J = [[du_a, -du_b], [dv_a, dv_b]]
        const double det = du_a * dv_b + du_b * dv_a;
        if (det == 0.0 || !std::isfinite(det)) break;
        double da = -(dv_b * f[0] + du_b * f[1]) / det;
        double db = -(-dv_a * f[0] + du_a * f[1]) / det;
        double step = 1.0;
        bool improved = false;
        for (int ls = 0; ls < 30; ++ls) {
            const double na = alpha + step * da, nb = beta + step * db;
            std::array<double, 2> nf{};
            if (na > 0.0 && nb > 0.0 && F(na, nb, nf)) {
                const double nn = std::hypot(nf[0], nf[1]);
                if (nn < norm) {
                    alpha = na;
                    beta = nb;
                    f = nf;
                    stall = (nn > 0.5 * norm) ? stall + 1 : 0;
                    norm = nn;
                    improved = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!improved || stall >= 4) break;
    }
    res.alpha = alpha;
    res.beta = beta;
    res.residual = norm;
    res.ok = norm < accept;
    return res;
}

struct Point {
    double alpha;
    double u;
    double v;
};

// Intersections of the half-time curve alpha -> (u, v) with its mirror
// (u, -v) at parameter pairs that are far apart.
std::vector<std::pair<double, double>> mirror_crossings(const std::vector<CurveSample>& samples) {
    std::vector<Point> pts;
    bool inserted_one = false;
    std::vector<std::vector<Point>> runs(1);
    for (const auto& s : samples) {
        if (!inserted_one && s.alpha > 1.0) {
            runs.back().push_back({1.0, 1.0, 0.0});
            inserted_one = true;
        }
        if (!s.numeric) {
            if (!runs.back().empty()) runs.emplace_back();
            continue;
        }
        runs.back().push_back({s.alpha, s.u_half, s.v_half});
    }
    struct Seg {
        Point a, b;
    };
    std::vector<Seg> segs;
    for (const auto& run : runs)
        for (std::size_t i = 0; i + 1 < run.size(); ++i) segs.push_back({run[i], run[i + 1]});

    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = 0; j < segs.size(); ++j) {
            if (i == j) continue;
            const Seg& s = segs[i];
            const Seg& r = segs[j];
            // s.a + x (s.b - s.a) == mirror(r.a) + y (mirror(r.b) - mirror(r.a))
            const double px = s.a.u, py = s.a.v;
            const double dx = s.b.u - s.a.u, dy = s.b.v - s.a.v;
            const double qx = r.a.u, qy = -r.a.v;
            const double ex = r.b.u - r.a.u, ey = -(r.b.v - r.a.v);
            const double den = dx * ey - dy * ex;
            if (den == 0.0) continue;
            const double x = ((qx - px) * ey - (qy - py) * ex) / den;
            const double y = ((qx - px) * dy - (qy - py) * dx) / den;
            if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) continue;
            const double alpha = s.a.alpha + x * (s.b.alpha - s.a.alpha);
            const double beta = r.a.alpha + y * (r.b.alpha - r.a.alpha);
            if (std::abs(alpha - beta) < 1e-3 * std::max(alpha, beta)) continue;
            out.emplace_back(alpha, beta);
        }
    }
    return out;
}

}  // namespace

ShootingProblem ShootingProblem::from(const GeometryConfig& cfg) {
    return {cfg.m(), cfg.lambda(), cfg.p()};
}

double ShootingProblem::energy(double u, double v) const {
    // E = v^2/2 + lambda (u^p/p - u^2/2)
    return 0.5 * v * v + lambda * (std::pow(std::abs(u), p) / p - 0.5 * u * u);
}

std::string to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::constant: return "constant";
        case SolutionKind::symmetric: return "symmetric";
        case SolutionKind::monotone_decreasing: return "monotone_decreasing";
        case SolutionKind::monotone_increasing: return "monotone_increasing";
        case SolutionKind::asymmetric: return "asymmetric";
    }
    return "unknown";
}

MissResult miss(double alpha, const ShootingProblem& problem, const IntegratorOptions& opts) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    const Trajectory tr = integrate(problem.ode(), alpha, 0.0, kHalfPi, scaled(opts, alpha));
    MissResult r;
    r.exit = tr.exit.kind;
    r.t_event = tr.exit.t;
    if (tr.exit.kind == ExitKind::step_failure)
        throw NumericalFailure("integrator step failure at t = " + std::to_string(tr.exit.t) +
                               " for alpha = " + std::to_string(alpha));
    if (tr.completed()) {
        const State y = tr.final_state();
        r.numeric = true;
        r.u_half = y[0];
        r.value = y[1];
    }
    return r;
}

ScanResult scan_alpha(const ShootingProblem& problem, double lo, double hi, int n_grid,
                      const ShootingOptions& opts) {
    ScanResult res;
    if (!(lo > 0.0)) throw std::invalid_argument("scan range must be positive");
    if (!(lo < hi) || n_grid <= 0) return res;

    const double spacing = opts.near_one_scale / std::max(problem.A(), 1.0);
    std::vector<CurveSample> samples;

    if (hi > 1.0) {
        const double start = std::max(lo, 1.0);
        std::vector<double> grid = log_grid(start, hi, n_grid);
        if (lo > 1.0) grid.insert(grid.begin(), lo);
        for (int j = 1; j <= opts.near_one_points; ++j) {
            const double a = 1.0 + j * spacing;
            if (a > start && a < hi) grid.push_back(a);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        res.upper_event_alpha = walk_side(problem, opts, grid, samples);
    }
    if (lo < 1.0) {
        const double start = std::min(hi, 1.0);
        // descending, away from 1
        std::vector<double> grid = log_grid(start, lo, n_grid);
        if (hi < 1.0) grid.insert(grid.begin(), hi);
        for (int j = 1; j <= opts.near_one_points; ++j) {
            const double a = 1.0 - j * spacing;
            if (a < start && a > lo) grid.push_back(a);
        }
        std::sort(grid.begin(), grid.end(), std::greater<>());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        res.lower_event_alpha = walk_side(problem, opts, grid, samples);
    }

    // drop samples past the first event on each side before refining
    std::erase_if(samples, [&](const CurveSample& s) {
        if (res.upper_event_alpha && s.alpha > *res.upper_event_alpha) return true;
        if (res.lower_event_alpha && s.alpha < *res.lower_event_alpha) return true;
        return false;
    });
    refine_chords(problem, opts, samples);
    res.samples = std::move(samples);

    const auto& S = res.samples;
    for (std::size_t i = 0; i + 1 < S.size(); ++i) {
        if (!S[i].numeric || !S[i + 1].numeric) continue;
        if ((S[i].alpha < 1.0) != (S[i + 1].alpha < 1.0)) continue;
        if (S[i].alpha == 1.0 || S[i + 1].alpha == 1.0) continue;
        if (sign_of(S[i].v_half) * sign_of(S[i + 1].v_half) < 0)
            res.brackets.push_back({S[i].alpha, S[i + 1].alpha, S[i].v_half, S[i + 1].v_half});
    }
    return res;
}

ScanResult scan_admissible(const ShootingProblem& problem, const ShootingOptions& opts) {
    const auto& io = opts.scan_integrator;
    double good = 1.0, bad = 2.0;
    while (bad < opts.alpha_cap && miss(bad, problem, io).numeric) {
        good = bad;
        bad *= 2.0;
    }
    double hi = std::min(bad, opts.alpha_cap);
    if (bad < opts.alpha_cap) {
        while (bad - good > opts.boundary_rel_tol * good) {
            const double mid = 0.5 * (good + bad);
            if (miss(mid, problem, io).numeric) good = mid;
            else bad = mid;
        }
        hi = good;
    }
    ScanResult res = scan_alpha(problem, opts.alpha_min, hi, opts.grid_per_side, opts);
    if (!res.upper_event_alpha && bad < opts.alpha_cap) res.upper_event_alpha = bad;
    return res;
}

std::vector<double> profile_extrema(const Profile& profile, double lo, double hi, double threshold) {
    return profile_zeros(profile, 1, lo, hi, threshold);
}

SolutionRecord constant_record(const ShootingProblem& problem, const ShootingOptions& opts) {
    SolutionRecord rec = symmetric_record(1.0, problem, opts);
    rec.kind = SolutionKind::constant;
    return rec;
}

SolutionRecord symmetric_record(double alpha, const ShootingProblem& problem,
                                const ShootingOptions& opts) {
    auto fwd = std::make_shared<Trajectory>(
        integrate(problem.ode(), alpha, 0.0, kHalfPi, scaled(opts.refine_integrator, alpha)));
    if (!fwd->completed())
        throw NumericalFailure("symmetric profile did not reach pi/2: " + to_string(fwd->exit.kind));
    auto prof = std::make_shared<Profile>();
    prof->add(fwd, 0.0, kHalfPi);
    prof->add(fwd, kHalfPi, kPi, true);
    SolutionRecord rec;
    rec.alpha_star = alpha;
    rec.beta = alpha;
    rec.kind = alpha == 1.0 ? SolutionKind::constant : SolutionKind::symmetric;
    rec.residual = std::abs(fwd->final_state()[1]);
    rec.profile = prof;
    finish_record(rec, problem, opts);
    return rec;
}

SolutionRecord refine_root(const Bracket& bracket, const ShootingProblem& problem,
                           const ShootingOptions& opts) {
    const auto& io = opts.refine_integrator;
    auto f = [&](double a) {
        const MissResult r = miss(a, problem, io);
        if (!r.numeric)
            throw NumericalFailure("trajectory left the positivity set inside a bracket at alpha = " +
                                   std::to_string(a));
        return r.value;
    };
    double a = bracket.lo, b = bracket.hi;
    double fa = f(a), fb = f(b);
    if (sign_of(fa) * sign_of(fb) > 0)
        throw std::invalid_argument("bracket endpoints do not have opposite signs");
    int side = 0;
    for (int it = 0; it < 400 && b - a > opts.tol_alpha * std::max(1.0, b); ++it) {
        double c = (fa * b - fb * a) / (fa - fb);
        if (it % 3 == 2 || !(c > a && c < b)) c = 0.5 * (a + b);
        const double fc = f(c);
        if (fc == 0.0) {
            a = b = c;
            fa = fb = 0.0;
            break;
        }
        if (sign_of(fc) == sign_of(fb)) {
            b = c;
            fb = fc;
            if (side == -1) fa *= 0.5;
            side = -1;
        } else {
            a = c;
            fa = fc;
            if (side == 1) fb *= 0.5;
            side = 1;
        }
    }
    const double root = 0.5 * (a + b);
    const double fr = f(root);
    const double scale = std::max(std::abs(bracket.miss_lo), std::abs(bracket.miss_hi));
    if (std::abs(fr) > 1e-6 * std::max(1.0, scale))
        throw TangentialRoot("sign change at alpha = " + std::to_string(root) +
                             " is not a root: |u'(pi/2)| = " + std::to_string(std::abs(fr)));
    return symmetric_record(root, problem, opts);
}

SolutionRecord matched_record(double alpha, double beta, const ShootingProblem& problem,
                              const ShootingOptions& opts) {
    const auto P = problem.ode();
    auto fwd = std::make_shared<Trajectory>(integrate(P, alpha, 0.0, kHalfPi, scaled(opts.refine_integrator, alpha)));
    auto bwd = std::make_shared<Trajectory>(integrate(P, beta, kPi, kHalfPi, scaled(opts.refine_integrator, beta)));
    if (!fwd->completed() || !bwd->completed())
        throw NumericalFailure("matched profile did not reach pi/2");
    auto prof = std::make_shared<Profile>();
    prof->add(fwd, 0.0, kHalfPi);
    prof->add(bwd, kHalfPi, kPi);
    SolutionRecord rec;
    rec.alpha_star = alpha;
    rec.beta = beta;
    const State f = fwd->final_state(), b = bwd->final_state();
    rec.residual = std::hypot(f[0] - b[0], f[1] - b[1]);
    rec.profile = prof;
    if (alpha > 1.0 && beta < 1.0 && strictly_signed_derivative(*prof, -1))
        rec.kind = SolutionKind::monotone_decreasing;
    else if (alpha < 1.0 && beta > 1.0 && strictly_signed_derivative(*prof, 1))
        rec.kind = SolutionKind::monotone_increasing;
    else
        rec.kind = SolutionKind::asymmetric;
    finish_record(rec, problem, opts);
    return rec;
}

MonotoneResult find_monotone(const ShootingProblem& problem, const ShootingOptions& opts,
                             const ScanResult* scan) {
    if (!(problem.A() > problem.m))
        throw std::domain_error("monotone solution needs lambda (p - 2) > m; got " +
                                std::to_string(problem.A()) + " <= " + std::to_string(problem.m));
    ScanResult own;
    if (!scan) {
        own = scan_admissible(problem, opts);
        scan = &own;
    }

    // the partner start value of the monotone solution can be far below alpha_min
    std::vector<CurveSample> curve;
    const double decades = std::log10(opts.alpha_min / opts.monotone_alpha_floor);
    const int n_low = std::max(0, static_cast<int>(std::ceil(decades * opts.monotone_points_per_decade)));
    for (int i = 1; i <= n_low; ++i) {
        const double a = opts.alpha_min * std::pow(10.0, -decades * i / n_low);
        CurveSample s = sample_at(a, problem, opts.scan_integrator);
        if (!s.numeric) break;
        curve.push_back(s);
    }
    std::reverse(curve.begin(), curve.end());
    curve.insert(curve.end(), scan->samples.begin(), scan->samples.end());

    auto seeds = mirror_crossings(curve);
    if (!scan->brackets.empty()) {
        const double a0 = 1.1 * scan->brackets.back().hi;
        seeds.emplace_back(a0, 1.0 / a0);
    }
    seeds.emplace_back(1.5, 1.0 / 1.5);

    MonotoneResult out;
    std::vector<std::pair<double, double>> found;
    bool have_decreasing = false;
    double last_residual = std::numeric_limits<double>::infinity();
    for (const auto& [a0, b0] : seeds) {
        // each unordered pair shows up twice; polish the alpha > beta order
        const double sa = std::max(a0, b0), sb = std::min(a0, b0);
        bool dup = false;
        for (const auto& [fa, fb] : found)
            if (std::abs(fa - sa) < 1e-6 * fa && std::abs(fb - sb) < 1e-6 * fb) dup = true;
        if (dup) continue;
        const Polished pol = newton_match(sa, sb, problem, opts);
        last_residual = std::min(last_residual, pol.residual);
        if (!pol.ok) continue;
        if (std::abs(pol.alpha - pol.beta) < 1e-6 * std::max(pol.alpha, pol.beta)) continue;
        const double ra = std::max(pol.alpha, pol.beta), rb = std::min(pol.alpha, pol.beta);
        bool seen = false;
        for (const auto& [fa, fb] : found)
            if (std::abs(fa - ra) < 1e-7 * fa && std::abs(fb - rb) < 1e-7 * fb) seen = true;
        found.emplace_back(ra, rb);
        if (seen) continue;

        SolutionRecord rec = matched_record(ra, rb, problem, opts);
        if (rec.kind == SolutionKind::monotone_decreasing && !have_decreasing) {
            out.decreasing = std::move(rec);
            out.increasing = matched_record(rb, ra, problem, opts);
            out.matching_residual = pol.residual;
            out.newton_iterations = pol.iterations;
            have_decreasing = true;
        } else if (rec.kind == SolutionKind::asymmetric) {
            out.asymmetric.push_back(std::move(rec));
        }
    }
    if (!have_decreasing)
        throw NoConvergence("no decreasing two-sided solution found", last_residual);
    return out;
}

EnergyReport energy_diagnostics(const SolutionRecord& record, const ShootingProblem& problem,
                                double tol) {
    EnergyReport rep;
    const auto& E = record.energy_profile;
    for (std::size_t i = 0; i + 1 < E.size(); ++i) {
        const double dE = E[i + 1].E - E[i].E;
        double violation = 0.0;
        if (E[i + 1].t <= kHalfPi) violation = dE;        // must not increase
        else if (E[i].t >= kHalfPi) violation = -dE;      // must not decrease
        if (violation > rep.worst_violation) rep.worst_violation = violation;
        if (violation > tol && rep.monotone) {
            rep.monotone = false;
            rep.violation_t = E[i].t;
        }
    }
    if (record.profile) {
        const Profile& prof = *record.profile;
        for (double t : profile_extrema(prof, 0.0, kPi, 1e-8)) {
            const double h = 1e-4;
            if (t - h <= 0.0 || t + h >= kPi) continue;
            const double before = prof.eval(t - h)[1], after = prof.eval(t + h)[1];
            if (!(before < 0.0 && after > 0.0)) continue;
            const State y = prof.eval(t);
            const double e = problem.energy(y[0], y[1]);
            rep.minima.push_back({t, y[0], e});
            if (!(y[0] < 1.0 && e < 0.0)) rep.minima_below_one = false;
        }
    }
    return rep;
}

}  // namespace radial_yamabe
