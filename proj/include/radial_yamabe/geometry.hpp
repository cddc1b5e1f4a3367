#pragma once

#include "radial_yamabe/rational.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace radial_yamabe {

/// Exact dimension constants of the conformal Laplacian on an N-manifold:
/// N = m + k, p = 2N/(N-2), a = 4(N-1)/(N-2).
struct DimensionConstants {
    int N = 0;
    Rational p;
    Rational a;

    double p_value() const { return to_double(p); }
    double a_value() const { return to_double(a); }
};

DimensionConstants derive_constants(int m, int k);

/// Radial conformal problem on S^m x M, where (M^k, g) has constant scalar
/// curvature s_M and volume vol_M.
class GeometryConfig {
public:
    GeometryConfig(int m, int k, double s_M, double vol_M);

    int m() const { return m_; }
    int k() const { return k_; }
    double s_M() const { return s_M_; }
    double vol_M() const { return vol_M_; }
    const DimensionConstants& constants() const { return constants_; }
    int N() const { return constants_.N; }
    double p() const { return constants_.p_value(); }
    double a() const { return constants_.a_value(); }

    /// Scalar curvature of the product metric, s_M + m(m-1).
    double s_total() const { return s_total_; }
    bool has_positive_lambda() const { return s_total_ > 0.0; }

    /// s_total / a. Throws std::domain_error when s_total <= 0.
    double lambda() const;
    /// lambda (p - 2), the coefficient of the linearized equation.
    double A() const;

    /// Volume of S^m x M with the product metric.
    double product_volume() const;

private:
    int m_;
    int k_;
    double s_M_;
    double vol_M_;
    DimensionConstants constants_;
    double s_total_;
};

/// S^m x S^k with metric g0 + delta g0.
GeometryConfig product_config(int m, int k, double delta);

/// Volume of the unit round sphere S^n.
double unit_sphere_volume(int n);

/// Band C_n = (2n(2n+m-1), (2n+2)(2n+2+m-1)], left-open and right-closed.
struct Band {
    int n = 0;
    double lower = 0.0;
    double upper = 0.0;
};

Band band_bounds(int n, int m);

/// Index n with A in C_n; nullopt when A <= 0.
std::optional<int> band_index(double A, int m);

/// Distance from A to the nearest endpoint of any band.
double band_boundary_distance(double A, int m);

/// a m + (2 - p) s_total. Negative means the constant factor is not a local
/// minimum of the functional among radial conformal factors.
double second_variation_coefficient(const GeometryConfig& cfg);

/// Weights of the total scalar curvature functional restricted to radial
/// conformal factors u(t) on S^m, t the distance from a pole.
struct FunctionalWeights {
    int m = 2;
    double p = 4.0;
    double a = 6.0;
    double s_total = 6.0;
    double vol_M = 1.0;

    static FunctionalWeights from(const GeometryConfig& cfg);
    /// Weights implied by (m, p, lambda) alone; N = 2p/(p-2) need not be an
    /// integer and vol_M is set to one.
    static FunctionalWeights from_problem(int m, double p, double lambda);
};

/// A radial profile t -> (f(t), f'(t)) on [0, pi]. Breakpoints are points
/// where the profile may lose smoothness; quadrature panels respect them.
struct RadialFunction {
    std::function<std::array<double, 2>(double)> eval;
    std::vector<double> breakpoints;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    int max_levels = 14;
};

/// (a int |f'|^2 + s int f^2) / (int f^p)^{2/p} over S^m x M.
/// Throws std::domain_error if f is not strictly positive and
/// std::runtime_error if refinement does not converge.
double yamabe_functional(const RadialFunction& f, const FunctionalWeights& w,
                         const QuadratureOptions& opts = {});

/// Value of the functional at any constant conformal factor: s V^{2/N}.
double yamabe_constant_profile(const GeometryConfig& cfg);

}  // namespace radial_yamabe
