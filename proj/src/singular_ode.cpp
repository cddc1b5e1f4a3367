#include "radial_yamabe/singular_ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace radial_yamabe {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_endpoint(double t) { return t == 0.0 || t == kPi; }

// Dormand-Prince 5(4) tableau and continuous extension (Hairer, Norsett, Wanner).
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

State field(const OdeParams& P, double t, const State& y) {
    return {y[1], -(P.m - 1) * (std::cos(t) / std::sin(t)) * y[1] - P.rhs(y[0])};
}

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (const auto& [c, k] : terms) {
        out[0] += h * c * (*k)[0];
        out[1] += h * c * (*k)[1];
    }
    return out;
}

struct Stepper {
    const OdeParams& P;
    const IntegratorOptions& O;

    // returns scaled error norm; fills y1, k7 (FSAL) and the dense coefficients
    double attempt(double t, const State& y, const State& k1, double h, State& y1, State& k7,
                   std::array<State, 5>& rc) const {
        const State k2 = field(P, t + c2 * h, axpy(y, h, {{a21, &k1}}));
        const State k3 = field(P, t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = field(P, t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 =
            field(P, t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = field(
            P, t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        y1 = axpy(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        k7 = field(P, t + h, y1);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                  e7 * k7[i]);
            const double sc = O.atol.value_or(O.tol) + O.tol * std::max(std::abs(y[i]), std::abs(y1[i]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / 2.0);

        for (int i = 0; i < 2; ++i) {
            const double ydiff = y1[i] - y[i];
            const double bspl = h * k1[i] - ydiff;
            rc[0][i] = y[i];
            rc[1][i] = ydiff;
            rc[2][i] = bspl;
            rc[3][i] = ydiff - h * k7[i] - bspl;
            rc[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                            d7 * k7[i]);
        }
        return err;
    }
};

// Bisection on one component of a step's continuous extension.
double polish_in_step(const Step& s, int comp, double target) {
    double lo = s.t, hi = s.t_end();
    double flo = s.eval(lo)[comp] - target;
    for (int it = 0; it < 200 && std::abs(hi - lo) > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = s.eval(mid)[comp] - target;
        if ((fm <= 0.0) == (flo <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Trajectory run(const OdeParams& P, double t_from, State y, double target, const IntegratorOptions& O,
               Trajectory traj) {
    traj.params = P;
    traj.options = O;
    traj.t_end = target;
    traj.samples.push_back({t_from, y[0], y[1]});

    const double dir = target >= t_from ? 1.0 : -1.0;
    const bool watch_zero = P.mode == OdeMode::nonlinear && O.stop_at_zero;
    Stepper stepper{P, O};

    double t = t_from;
    if (t == target) return traj;
    State k1 = field(P, t, y);
    double h = dir * std::min({1e-3, O.max_step, std::abs(target - t)});
    long n_steps = 0;

    while (dir * (target - t) > 0.0) {
        if (++n_steps > O.max_steps) {
            traj.exit = {ExitKind::step_failure, t};
            traj.t_end = t;
            return traj;
        }
        bool last = false;
        if (dir * (t + h - target) >= 0.0) {
            h = target - t;
            last = true;
        }
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
            traj.exit = {ExitKind::step_failure, t};
            traj.t_end = t;
            return traj;
        }

        State y1, k7;
        Step step;
        step.t = t;
        step.h = h;
        const double err = stepper.attempt(t, y, k1, h, y1, k7, step.rcont);
        if (!std::isfinite(err) || err > 1.0) {
            const double fac = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.1;
            h *= fac;
            continue;
        }

        const double t1 = last ? target : t + h;
        traj.steps.push_back(step);

        if (watch_zero && y1[0] <= 0.0) {
            const double tz = polish_in_step(traj.steps.back(), 0, 0.0);
            const State yz = traj.steps.back().eval(tz);
            traj.samples.push_back({tz, 0.0, yz[1]});
            traj.exit = {ExitKind::hit_zero, tz};
            traj.t_end = tz;
            return traj;
        }
        traj.samples.push_back({t1, y1[0], y1[1]});
        if (!std::isfinite(y1[0]) || !std::isfinite(y1[1]) || std::abs(y1[0]) > O.blowup_u ||
            std::abs(y1[1]) > O.blowup_v) {
            traj.exit = {ExitKind::blew_up, t1};
            traj.t_end = t1;
            return traj;
        }

        t = t1;
        y = y1;
        k1 = k7;
        const double fac = err > 0.0 ? std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2))) : 5.0;
        h = dir * std::min(std::abs(h) * fac, O.max_step);
    }
    traj.exit = {ExitKind::completed, target};
    return traj;
}

}  // namespace

OdeParams OdeParams::nonlinear(int m, double lambda, double p) {
    OdeParams P;
    P.m = m;
    P.lambda = lambda;
    P.p = p;
    P.mode = OdeMode::nonlinear;
    P.validate();
    return P;
}

OdeParams OdeParams::linear(int m, double A) {
    OdeParams P;
    P.m = m;
    P.A = A;
    P.mode = OdeMode::linear;
    P.validate();
    return P;
}

void OdeParams::validate() const {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (mode == OdeMode::linear) {
        if (!(A > 0.0) || !std::isfinite(A)) throw std::invalid_argument("A must be positive");
    } else {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("lambda must be positive");
        if (!(p > 2.0) || !std::isfinite(p)) throw std::invalid_argument("p must exceed 2");
    }
}

double OdeParams::rhs(double u) const {
    if (mode == OdeMode::linear) return A * u;
    const double e = p - 1.0;
    double power;
    if (e == std::floor(e)) {
        power = std::pow(u, e);
    } else {
        // odd extension; only reached by trial stages past a zero crossing
        power = std::copysign(std::exp(e * std::log(std::abs(u))), u);
    }
    return lambda * (power - u);
}

double OdeParams::rhs_derivative(double u) const {
    if (mode == OdeMode::linear) return A;
    return lambda * ((p - 1.0) * std::pow(std::abs(u), p - 2.0) - 1.0);
}

std::string to_string(ExitKind kind) {
    switch (kind) {
        case ExitKind::completed: return "completed";
        case ExitKind::hit_zero: return "hit_zero";
        case ExitKind::blew_up: return "blew_up";
        case ExitKind::step_failure: return "step_failure";
    }
    return "unknown";
}

SeriesStart series_coefficients(const OdeParams& P, double alpha, double endpoint) {
    P.validate();
    // u = c0 + c2 s^2 + c4 s^4 with cot(s) = 1/s - s/3 + ...:
    //   2 m c2 = -f(c0),  4 (m+2) c4 = c2 (2(m-1)/3 - f'(c0))
    SeriesStart s;
    s.endpoint = endpoint;
    s.c0 = alpha;
    s.c2 = -P.rhs(alpha) / (2.0 * P.m);
    s.c4 = s.c2 * (2.0 * (P.m - 1) / 3.0 - P.rhs_derivative(alpha)) / (4.0 * (P.m + 2));
    return s;
}

State SeriesStart::eval(double t) const {
    const double s = std::abs(t - endpoint);
    const double u = c0 + s * s * (c2 + c4 * s * s);
    const double du_ds = s * (2.0 * c2 + 4.0 * c4 * s * s);
    return {u, endpoint == 0.0 ? du_ds : -du_ds};
}

State taylor_start(const OdeParams& params, double alpha, double t0) {
    if (!(t0 > 0.0) || t0 > 0.1)
        throw std::invalid_argument("series start point must lie in (0, 0.1]");
    return series_coefficients(params, alpha, 0.0).eval(t0);
}

State Step::eval(double t_query) const {
    const double th = (t_query - t) / h;
    const double th1 = 1.0 - th;
    State out;
    for (int i = 0; i < 2; ++i)
        out[i] = rcont[0][i] +
                 th * (rcont[1][i] + th1 * (rcont[2][i] + th * (rcont[3][i] + th1 * rcont[4][i])));
    return out;
}

State Trajectory::eval(double t) const {
    const double span_tol = 1e-12;
    if (t < lo() - span_tol || t > hi() + span_tol)
        throw std::out_of_range("dense output queried outside the trajectory span");
    if (series) {
        const double first = samples.empty() ? series->endpoint : samples.front().t;
        const bool inside = series->endpoint == 0.0 ? (t <= first) : (t >= first);
        if (inside) return series->eval(t);
    }
    if (steps.empty()) return {samples.front().u, samples.front().v};
    // steps are ordered along the direction of integration
    const bool fwd = forward();
    auto it = std::lower_bound(steps.begin(), steps.end(), t, [fwd](const Step& s, double x) {
        return fwd ? s.t_end() < x : s.t_end() > x;
    });
    if (it == steps.end()) --it;
    return it->eval(t);
}

State Trajectory::final_state() const {
    return {samples.back().u, samples.back().v};
}

std::vector<double> Trajectory::step_nodes() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.t);
    return out;
}

Trajectory integrate(const OdeParams& params, double alpha, double from, double to,
                     const IntegratorOptions& opts) {
    params.validate();
    if (from < 0.0 || from > kPi || to < 0.0 || to > kPi)
        throw std::invalid_argument("integration interval must lie in [0, pi]");
    if (!is_endpoint(from))
        throw std::invalid_argument("integrate() needs from in {0, pi}; use integrate_from_state");
    if (params.mode == OdeMode::nonlinear && !(alpha > 0.0))
        throw std::invalid_argument("initial value must be positive");

    const double t0 = opts.t_series;
    const double dir = from == 0.0 ? 1.0 : -1.0;
    const double start = from + dir * t0;
    double target = to;
    if (target == kPi && dir > 0) target = kPi - t0;
    if (target == 0.0 && dir < 0) target = t0;
    if (dir * (target - start) < 0.0)
        throw std::invalid_argument("target lies inside the series start region");

    Trajectory traj;
    traj.t_start = from;
    traj.series = series_coefficients(params, alpha, from);
    // large |u''(0)| shrinks the region where the truncated series is accurate
    double h0 = t0;
    const double c2 = std::abs(traj.series->c2);
    if (c2 * h0 * h0 > 1e-4 * std::abs(alpha)) h0 = std::sqrt(1e-4 * std::abs(alpha) / c2);
    const State y0 = traj.series->eval(from + dir * h0);
    return run(params, from + dir * h0, y0, target, opts, std::move(traj));
}

Trajectory integrate_from_state(const OdeParams& params, double t_from, State y0, double to,
                                const IntegratorOptions& opts) {
    params.validate();
    const double t0 = opts.t_series;
    if (t_from < t0 || t_from > kPi - t0)
        throw std::invalid_argument("interior start must keep clear of the singular endpoints");
    double target = std::clamp(to, t0, kPi - t0);
    Trajectory traj;
    traj.t_start = t_from;
    return run(params, t_from, y0, target, opts, std::move(traj));
}

namespace {

template <class Eval>
double residual_impl(const OdeParams& P, const std::vector<double>& nodes, double lo, double hi,
                     Eval&& eval) {
    const double h = 1e-4;
    double worst = 0.0;
    bool any = false;
    // probe between nodes: at the nodes the continuous extension reproduces
    // the vector field exactly, which would make the check vacuous
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double t = 0.5 * (nodes[i] + nodes[i + 1]);
        if (t - 2 * h < lo || t + 2 * h > hi) continue;
        const double dv = (-eval(t + 2 * h)[1] + 8.0 * eval(t + h)[1] - 8.0 * eval(t - h)[1] +
                           eval(t - 2 * h)[1]) / (12.0 * h);
        const State y = eval(t);
        const double r = dv + (P.m - 1) * (std::cos(t) / std::sin(t)) * y[1] + P.rhs(y[0]);
        worst = std::max(worst, std::abs(r));
        any = true;
    }
    if (!any) throw std::invalid_argument("trajectory too short to estimate derivatives");
    return worst;
}

}  // namespace

double residual(const OdeParams& params, const Trajectory& traj, double eps) {
    if (!traj.completed()) throw std::invalid_argument("residual needs a completed trajectory");
    const double lo = std::max(traj.lo(), eps);
    const double hi = std::min(traj.hi(), kPi - eps);
    return residual_impl(params, traj.step_nodes(), lo, hi,
                         [&](double t) { return traj.eval(t); });
}

double residual(const OdeParams& params, const Profile& profile, double eps) {
    const double lo = std::max(profile.lo(), eps);
    const double hi = std::min(profile.hi(), kPi - eps);
    return residual_impl(params, profile.nodes(), lo, hi,
                         [&](double t) { return profile.eval(t); });
}

void Profile::add(std::shared_ptr<const Trajectory> traj, double lo, double hi, bool reflected,
                  double scale) {
    if (!(lo < hi)) throw std::invalid_argument("empty profile piece");
    pieces_.push_back({std::move(traj), lo, hi, reflected, scale});
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
}

State Profile::eval(double t) const {
    if (pieces_.empty()) throw std::logic_error("empty profile");
    const double tol = 1e-12;
    for (const auto& pc : pieces_) {
        if (t >= pc.lo - tol && t <= pc.hi + tol) {
            if (pc.reflected) {
                const State y = pc.traj->eval(kPi - t);
                return {pc.scale * y[0], -pc.scale * y[1]};
            }
            const State y = pc.traj->eval(t);
            return {pc.scale * y[0], pc.scale * y[1]};
        }
    }
    throw std::out_of_range("profile queried outside its span");
}

double Profile::lo() const { return pieces_.empty() ? 0.0 : pieces_.front().lo; }

double Profile::hi() const {
    double h = 0.0;
    for (const auto& pc : pieces_) h = std::max(h, pc.hi);
    return h;
}

std::vector<double> Profile::nodes() const {
    std::vector<double> out;
    for (const auto& pc : pieces_) {
        out.push_back(pc.lo);
        out.push_back(pc.hi);
        for (double t : pc.traj->step_nodes()) {
            const double tt = pc.reflected ? kPi - t : t;
            if (tt > pc.lo && tt < pc.hi) out.push_back(tt);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RadialFunction Profile::radial_function() const {
    RadialFunction f;
    f.eval = [self = *this](double t) { return self.eval(t); };
    f.breakpoints = nodes();
    return f;
}

std::vector<double> profile_zeros(const Profile& profile, int component, double lo, double hi,
                                  double threshold) {
    std::vector<double> ts;
    for (double t : profile.nodes())
        if (t > lo && t < hi) ts.push_back(t);
    std::vector<double> zeros;
    int last_sign = 0;
    double prev_t = lo;
    for (double t : ts) {
        const double val = profile.eval(t)[component];
        if (std::abs(val) <= threshold || val == 0.0) {
            continue;
        }
        const int sg = val > 0 ? 1 : -1;
        if (last_sign != 0 && sg != last_sign) {
            double a = prev_t, b = t;
            double fa = profile.eval(a)[component];
            for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = profile.eval(mid)[component];
                if ((fm > 0) == (fa > 0) && fm != 0.0) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            zeros.push_back(0.5 * (a + b));
        }
        last_sign = sg;
        prev_t = t;
    }
    return zeros;
}

}  // namespace radial_yamabe
