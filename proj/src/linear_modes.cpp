#include "radial_yamabe/linear_modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radial_yamabe {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

// Exact image in x = cos(t) of an interval endpoint.
Rational x_of(double t) {
    if (t == 0.0) return Rational(1);
    if (t == kPi) return Rational(-1);
    if (t == kHalfPi) return Rational(0);
    return Rational(std::cos(t));
}
}  // namespace

State LinearMode::eval(double t) const {
    if (poly) {
        const double x = std::cos(t);
        return {(*poly)(x), -std::sin(t) * poly->derivative()(x)};
    }
    if (!profile) throw std::logic_error("linear mode has neither polynomial nor profile");
    return profile->eval(t);
}

Polynomial apply_linear_operator(const Polynomial& poly, const Rational& A, int m) {
    const auto& c = poly.coeffs();
    std::vector<Rational> out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        const long long jj = static_cast<long long>(j);
        out[j] += c[j] * (A - Rational(jj * (jj + m - 1)));
        if (j >= 2) out[j - 2] += c[j] * Rational(jj * (jj - 1));
    }
    return Polynomial(std::move(out));
}

LinearMode polynomial_mode(int n, int m) {
    if (n < 0) throw std::invalid_argument("mode index must be >= 0");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    const Rational A(static_cast<long long>(n) * (n + m - 1));
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    for (int j = n; j >= 2; j -= 2) {
        const Rational denom = A - Rational(static_cast<long long>(j - 2) * (j + m - 3));
        c[j - 2] = -Rational(static_cast<long long>(j) * (j - 1)) * c[j] / denom;
    }
    Rational at_zero = 0;
    for (const auto& cj : c) at_zero += cj;
    for (auto& cj : c) cj /= at_zero;

    LinearMode mode;
    mode.A = to_double(A);
    mode.m = m;
    mode.n = n;
    mode.exact_A = A;
    mode.poly = Polynomial(std::move(c));
    return mode;
}

LinearMode numerical_mode(double A, int m, const LinearModeOptions& opts) {
    const OdeParams P = OdeParams::linear(m, A);
    LinearMode mode;
    mode.A = A;
    mode.m = m;
    auto profile = std::make_shared<Profile>();

    if (opts.half_only) {
        auto fwd = std::make_shared<Trajectory>(integrate(P, 1.0, 0.0, kHalfPi, opts.integrator));
        if (!fwd->completed()) throw std::runtime_error("linear integration failed");
        profile->add(fwd, 0.0, kHalfPi);
    } else if (opts.route == LinearRoute::forward) {
        const double end = kPi - opts.t_end_gap;
        auto fwd = std::make_shared<Trajectory>(integrate(P, 1.0, 0.0, end, opts.integrator));
        if (!fwd->completed()) throw std::runtime_error("linear integration failed");
        profile->add(fwd, 0.0, end);
    } else {
        auto fwd = std::make_shared<Trajectory>(integrate(P, 1.0, 0.0, kHalfPi, opts.integrator));
        auto bwd = std::make_shared<Trajectory>(integrate(P, 1.0, kPi, kHalfPi, opts.integrator));
        if (!fwd->completed() || !bwd->completed())
            throw std::runtime_error("linear integration failed");
        const State f = fwd->final_state();
        const State b = bwd->final_state();
        // least-squares scale of the regular-at-pi solution onto the forward data
        const double scale = (f[0] * b[0] + f[1] * b[1]) / (b[0] * b[0] + b[1] * b[1]);
        const double du = f[0] - scale * b[0];
        const double dv = f[1] - scale * b[1];
        mode.matching_defect = std::hypot(du, dv) / std::max(1.0, std::hypot(f[0], f[1]));
        profile->add(fwd, 0.0, kHalfPi);
        profile->add(bwd, kHalfPi, kPi, false, scale);
    }
    mode.profile = profile;
    return mode;
}

ZeroCount count_zeros(const LinearMode& mode, double lo, double hi, double ambiguity) {
    if (!(lo < hi) || lo < 0.0 || hi > kPi) throw std::invalid_argument("interval must lie in [0, pi]");
    ZeroCount out;
    if (mode.poly) {
        // t in (lo, hi)  <=>  x in (cos hi, cos lo)
        const Rational xa = x_of(hi), xb = x_of(lo);
        if (mode.poly->degree() <= 0) return out;
        if ((*mode.poly)(xa) == 0) ++out.endpoint_zeros;
        if ((*mode.poly)(xb) == 0) ++out.endpoint_zeros;
        for (const auto& r : isolate_roots(*mode.poly, xa, xb)) {
            const double t = std::acos(std::clamp(r.value, -1.0, 1.0));
            if (std::abs(t - lo) < ambiguity || std::abs(t - hi) < ambiguity) out.ambiguous = true;
            out.locations.push_back(t);
        }
        std::sort(out.locations.begin(), out.locations.end());
        out.count = static_cast<int>(out.locations.size());
        return out;
    }
    if (!mode.profile) throw std::logic_error("linear mode has neither polynomial nor profile");
    const double a = std::max(lo, mode.profile->lo());
    const double b = std::min(hi, mode.profile->hi());
    for (double t : profile_zeros(*mode.profile, 0, a, b)) {
        if (std::abs(t - lo) < ambiguity || std::abs(t - hi) < ambiguity) out.ambiguous = true;
        out.locations.push_back(t);
    }
    out.count = static_cast<int>(out.locations.size());
    return out;
}

ExtremaCount count_extrema_linear(double A, int m, double ambiguity,
                                  const IntegratorOptions& integrator) {
    if (!(A > 0.0)) throw std::invalid_argument("A must be positive");
    LinearModeOptions opts;
    opts.integrator = integrator;
    opts.half_only = true;
    const LinearMode mode = numerical_mode(A, m, opts);
    const Profile& prof = *mode.profile;

    ExtremaCount out;
    const State half = prof.eval(kHalfPi);
    out.derivative_at_half = half[1];
    // w'' = -A w at pi/2, so the nearest root of w' is about w'/(A w) away
    const double dist_half =
        std::abs(half[1]) / std::max(std::abs(A * half[0]), std::numeric_limits<double>::min());
    out.locations = profile_zeros(prof, 1, 0.0, kHalfPi, 1e-8);
    // zeros polished right at pi/2 belong to the boundary, not the interior
    std::erase_if(out.locations, [&](double t) { return kHalfPi - t < ambiguity; });
    out.count = static_cast<int>(out.locations.size());
    out.near_boundary = dist_half < ambiguity || band_boundary_distance(A, m) < ambiguity;
    return out;
}

SturmCertificate sturm_certify(double A, double B, int m, const SturmOptions& opts) {
    if (!(A > 0.0) || !(B >= A)) throw std::invalid_argument("sturm_certify needs 0 < A <= B");
    SturmCertificate cert;
    if (A == B) {
        cert.passed = cert.degenerate = cert.interlacing = true;
        cert.message = "identical equations";
        return cert;
    }
    LinearModeOptions mo;
    mo.t_end_gap = opts.t_end_gap;
    const LinearMode U = numerical_mode(A, m, mo);
    const LinearMode V = numerical_mode(B, m, mo);
    const double end = kPi - opts.t_end_gap;
    cert.zeros_A = profile_zeros(*U.profile, 0, 0.0, end);
    cert.zeros_B = profile_zeros(*V.profile, 0, 0.0, end);

    auto passed = [](const std::vector<double>& zs, double t) {
        return static_cast<int>(std::lower_bound(zs.begin(), zs.end(), t) - zs.begin());
    };
    auto near_zero = [&](double t) {
        for (double z : cert.zeros_A)
            if (std::abs(t - z) < opts.exclusion_radius) return true;
        for (double z : cert.zeros_B)
            if (std::abs(t - z) < opts.exclusion_radius) return true;
        return false;
    };

    cert.passed = true;
    const double t0 = mo.integrator.t_series;
    for (int i = 0; i < opts.grid_points; ++i) {
        const double t = t0 + (end - t0) * (i + 0.5) / opts.grid_points;
        if (near_zero(t)) {
            ++cert.skipped_points;
            continue;
        }
        if (passed(cert.zeros_A, t) != passed(cert.zeros_B, t)) continue;
        const State u = U.eval(t);
        const State v = V.eval(t);
        const double lu = u[1] / u[0];
        const double lv = v[1] / v[0];
        ++cert.checked_points;
        const double violation = lv - lu;
        const double allowed = opts.slack * (1.0 + std::abs(lu) + std::abs(lv));
        cert.worst_violation = std::max(cert.worst_violation, violation);
        if (violation > allowed && cert.passed) {
            cert.passed = false;
            cert.failure_t = t;
            cert.message = "log-derivative ordering violated";
        }
    }

    // V's k-th zero must not come after U's k-th zero, and consecutive zeros
    // of U must enclose one of V
    cert.interlacing = true;
    for (std::size_t k = 0; k < cert.zeros_A.size(); ++k) {
        if (k >= cert.zeros_B.size() || cert.zeros_B[k] > cert.zeros_A[k] + opts.exclusion_radius) {
            cert.interlacing = false;
            if (!cert.failure_t) cert.failure_t = cert.zeros_A[k];
            break;
        }
        if (k + 1 < cert.zeros_A.size()) {
            const double a = cert.zeros_A[k], b = cert.zeros_A[k + 1];
            const bool enclosed = std::any_of(cert.zeros_B.begin(), cert.zeros_B.end(),
                                              [&](double z) { return z > a && z < b; });
            if (!enclosed) {
                cert.interlacing = false;
                if (!cert.failure_t) cert.failure_t = a;
                break;
            }
        }
    }
    if (!cert.interlacing) {
        cert.passed = false;
        if (cert.message.empty()) cert.message = "zero interlacing violated";
    }
    if (cert.passed) cert.message = "ordering and interlacing hold";
    return cert;
}

}  // namespace radial_yamabe
