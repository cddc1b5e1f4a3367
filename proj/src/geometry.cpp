#include "radial_yamabe/geometry.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace radial_yamabe {

DimensionConstants derive_constants(int m, int k) {
    if (m < 2) throw std::invalid_argument("sphere dimension m must be >= 2, got " + std::to_string(m));
    if (k < 1) throw std::invalid_argument("dimension k must be >= 1, got " + std::to_string(k));
    const int N = m + k;
    DimensionConstants c;
    c.N = N;
    c.p = Rational(2 * N, N - 2);
    c.a = Rational(4 * (N - 1), N - 2);
    return c;
}

GeometryConfig::GeometryConfig(int m, int k, double s_M, double vol_M)
    : m_(m), k_(k), s_M_(s_M), vol_M_(vol_M), constants_(derive_constants(m, k)),
      s_total_(s_M + static_cast<double>(m * (m - 1))) {
    if (!(vol_M > 0.0) || !std::isfinite(vol_M))
        throw std::invalid_argument("vol_M must be positive and finite");
    if (!std::isfinite(s_M)) throw std::invalid_argument("s_M must be finite");
}

double GeometryConfig::lambda() const {
    if (!(s_total_ > 0.0))
        throw std::domain_error("s_M + m(m-1) = " + std::to_string(s_total_) +
                                " is not positive; no positive lambda");
    return s_total_ / a();
}

double GeometryConfig::A() const { return lambda() * (p() - 2.0); }

double GeometryConfig::product_volume() const { return unit_sphere_volume(m_) * vol_M_; }

double unit_sphere_volume(int n) {
    if (n < 0) throw std::invalid_argument("sphere dimension must be >= 0");
    const double h = 0.5 * (n + 1);
    return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

GeometryConfig product_config(int m, int k, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("delta must be positive and finite");
    const double s_M = static_cast<double>(k * (k - 1)) / delta;
    const double vol_M = std::pow(delta, 0.5 * k) * unit_sphere_volume(k);
    return GeometryConfig(m, k, s_M, vol_M);
}

Band band_bounds(int n, int m) {
    if (n < 0) throw std::invalid_argument("band index must be >= 0");
    Band b;
    b.n = n;
    b.lower = 2.0 * n * (2.0 * n + m - 1);
    b.upper = (2.0 * n + 2) * (2.0 * n + 2 + m - 1);
    return b;
}

std::optional<int> band_index(double A, int m) {
    if (!(A > 0.0) || !std::isfinite(A)) return std::nullopt;
    int n = 0;
    while (A > band_bounds(n, m).upper) ++n;
    return n;
}

double band_boundary_distance(double A, int m) {
    const auto n = band_index(A, m);
    if (!n) return 0.0;
    const Band b = band_bounds(*n, m);
    const double lo = (*n == 0) ? std::abs(A) : A - b.lower;
    return std::min(lo, b.upper - A);
}

double second_variation_coefficient(const GeometryConfig& cfg) {
    return cfg.a() * cfg.m() + (2.0 - cfg.p()) * cfg.s_total();
}

FunctionalWeights FunctionalWeights::from(const GeometryConfig& cfg) {
    FunctionalWeights w;
    w.m = cfg.m();
    w.p = cfg.p();
    w.a = cfg.a();
    w.s_total = cfg.s_total();
    w.vol_M = cfg.vol_M();
    return w;
}

FunctionalWeights FunctionalWeights::from_problem(int m, double p, double lambda) {
    if (!(p > 2.0)) throw std::invalid_argument("p must exceed 2");
    FunctionalWeights w;
    w.m = m;
    w.p = p;
    const double N = 2.0 * p / (p - 2.0);
    w.a = (N - 1.0) * (p - 2.0);
    w.s_total = lambda * w.a;
    w.vol_M = 1.0;
    return w;
}

namespace {

struct Integrals {
    double grad = 0.0;
    double mass = 0.0;
    double power = 0.0;
};

constexpr int kGaussPoints = 20;

Integrals integrate_panel(const RadialFunction& f, const FunctionalWeights& w, double lo, double hi) {
    using rule = boost::math::quadrature::gauss<double, kGaussPoints>;
    static const auto& xs = rule::abscissa();
    static const auto& ws = rule::weights();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    Integrals out;
    auto add = [&](double t, double weight) {
        const auto [u, du] = f.eval(t);
        if (!(u > 0.0))
            throw std::domain_error("conformal factor must be strictly positive; f(" +
                                    std::to_string(t) + ") = " + std::to_string(u));
        const double jac = std::pow(std::sin(t), w.m - 1) * weight * half;
        out.grad += du * du * jac;
        out.mass += u * u * jac;
        out.power += std::pow(u, w.p) * jac;
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // even rule: abscissae are the positive half of a symmetric set
        add(mid + half * xs[i], ws[i]);
        add(mid - half * xs[i], ws[i]);
    }
    return out;
}

Integrals integrate_level(const RadialFunction& f, const FunctionalWeights& w,
                          const std::vector<double>& cuts, int subdivisions) {
    Integrals total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double step = (cuts[i + 1] - cuts[i]) / subdivisions;
        for (int j = 0; j < subdivisions; ++j) {
            const double lo = cuts[i] + j * step;
            const double hi = (j + 1 == subdivisions) ? cuts[i + 1] : lo + step;
            const Integrals p = integrate_panel(f, w, lo, hi);
            total.grad += p.grad;
            total.mass += p.mass;
            total.power += p.power;
        }
    }
    return total;
}

bool close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-300;
}

}  // namespace

double yamabe_functional(const RadialFunction& f, const FunctionalWeights& w,
                         const QuadratureOptions& opts) {
    if (!f.eval) throw std::invalid_argument("radial profile has no evaluator");
    if (!(w.p > 2.0) || !(w.vol_M > 0.0)) throw std::invalid_argument("invalid functional weights");

    std::vector<double> cuts{0.0, std::numbers::pi};
    for (double b : f.breakpoints)
        if (b > 0.0 && b < std::numbers::pi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-14; }),
               cuts.end());

    // the sin^{m-1} weight integrates the S^{m-1} directions; the remaining
    // factor is omega_{m-1} vol_M
    const double measure = unit_sphere_volume(w.m - 1) * w.vol_M;
    auto value = [&](const Integrals& I) {
        const double num = measure * (w.a * I.grad + w.s_total * I.mass);
        return num / std::pow(measure * I.power, 2.0 / w.p);
    };

    Integrals prev = integrate_level(f, w, cuts, 1);
    for (int level = 1; level <= opts.max_levels; ++level) {
        Integrals cur = integrate_level(f, w, cuts, 1 << level);
        const bool done = close(cur.grad, prev.grad, opts.rel_tol) &&
                          close(cur.mass, prev.mass, opts.rel_tol) &&
                          close(cur.power, prev.power, opts.rel_tol);
        if (done) return value(cur);
        prev = cur;
    }
    throw std::runtime_error("quadrature for the scalar curvature functional did not converge");
}

double yamabe_constant_profile(const GeometryConfig& cfg) {
    return cfg.s_total() * std::pow(cfg.product_volume(), 2.0 / cfg.N());
}

}  // namespace radial_yamabe
