#pragma once

#include "radial_yamabe/polynomial.hpp"
#include "radial_yamabe/singular_ode.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace radial_yamabe {

/// Solution w_A of w'' + (m-1) cot(t) w' + A w = 0 with w(0) = 1, w'(0) = 0.
/// At A = n(n+m-1) the solution is a polynomial of degree n in cos(t).
struct LinearMode {
    double A = 0.0;
    int m = 2;
    std::optional<int> n;
    std::optional<Rational> exact_A;
    std::optional<Polynomial> poly;  // in x = cos(t)
    std::shared_ptr<const Profile> profile;
    /// Mismatch at pi/2 between the forward solution and the solution that is
    /// regular at pi; zero (to tolerance) exactly at the polynomial values of A.
    double matching_defect = 0.0;

    /// (w, w') at t, from the polynomial when present, else the profile.
    State eval(double t) const;
};

/// H_A(f) = f'' + (m-1) cot(t) f' + A f applied to a polynomial in cos(t):
/// H_A(cos^j) = (A - j(j+m-1)) cos^j + j(j-1) cos^{j-2}.
Polynomial apply_linear_operator(const Polynomial& poly, const Rational& A, int m);

/// Exact mode at A = n(n+m-1), normalized to w(0) = 1.
LinearMode polynomial_mode(int n, int m);

enum class LinearRoute {
    /// Forward from 0 up to pi - t_end_gap; follows the true (possibly
    /// singular at pi) solution.
    forward,
    /// Forward on [0, pi/2], regular-at-pi solution scaled to match on [pi/2, pi].
    two_sided,
};

struct LinearModeOptions {
    IntegratorOptions integrator = IntegratorOptions::with_tol(1e-12);
    LinearRoute route = LinearRoute::forward;
    double t_end_gap = 1e-3;
    /// Only integrate [0, pi/2].
    bool half_only = false;
};

LinearMode numerical_mode(double A, int m, const LinearModeOptions& opts = {});

struct ZeroCount {
    int count = 0;
    /// Zeros exactly at an interval endpoint (polynomial modes only).
    int endpoint_zeros = 0;
    /// A zero closer than the ambiguity radius to an endpoint without being on it.
    bool ambiguous = false;
    std::vector<double> locations;
};

/// Zeros of w in the open interval (lo, hi) in t. For polynomial modes the
/// roots are isolated exactly in x = cos(t); t = 0, pi/2, pi map to x = 1, 0, -1.
ZeroCount count_zeros(const LinearMode& mode, double lo, double hi, double ambiguity = 1e-9);

struct ExtremaCount {
    int count = 0;
    /// An extremum within `ambiguity` of pi/2, or A within it of a band edge.
    bool near_boundary = false;
    double derivative_at_half = 0.0;
    std::vector<double> locations;
};

/// Interior local extrema of w_A on (0, pi/2).
ExtremaCount count_extrema_linear(double A, int m, double ambiguity = 1e-9,
                                  const IntegratorOptions& integrator = IntegratorOptions::with_tol(1e-12));

struct SturmCertificate {
    bool passed = false;
    bool degenerate = false;
    bool interlacing = false;
    int checked_points = 0;
    int skipped_points = 0;
    double worst_violation = 0.0;
    std::optional<double> failure_t;
    std::string message;
    std::vector<double> zeros_A;
    std::vector<double> zeros_B;
};

struct SturmOptions {
    int grid_points = 2048;
    double exclusion_radius = 1e-6;
    double t_end_gap = 1e-3;
    double slack = 1e-7;
};

/// Numerical check of Sturm comparison between w_A and w_B, A < B: the
/// logarithmic derivatives stay ordered, w_B'/w_B <= w_A'/w_A, wherever both
/// have passed the same number of zeros, and every pair of consecutive zeros
/// of w_A encloses a zero of w_B.
SturmCertificate sturm_certify(double A, double B, int m, const SturmOptions& opts = {});

}  // namespace radial_yamabe
