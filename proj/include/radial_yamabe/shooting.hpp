#pragma once

#include "radial_yamabe/geometry.hpp"
#include "radial_yamabe/singular_ode.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radial_yamabe {

/// u'' + (m-1) cot(t) u' + lambda (u^{p-1} - u) = 0, u(0) = alpha, u'(0) = 0.
struct ShootingProblem {
    int m = 2;
    double lambda = 1.0;
    double p = 4.0;

    static ShootingProblem from(const GeometryConfig& cfg);
    double A() const { return lambda * (p - 2.0); }
    OdeParams ode() const { return OdeParams::nonlinear(m, lambda, p); }
    double energy(double u, double v) const;
};

struct ShootingOptions {
    IntegratorOptions scan_integrator = IntegratorOptions::with_tol(1e-10);
    IntegratorOptions refine_integrator = IntegratorOptions::with_tol(1e-11);
    /// Root refinement stops at bracket width tol_alpha * max(1, alpha).
    double tol_alpha = 1e-13;
    double alpha_min = 1e-3;
    double alpha_cap = 1e6;
    int grid_per_side = 400;
    /// Extra linear grid 1 +- j*spacing next to the constant solution,
    /// spacing = near_one_scale / max(A, 1).
    int near_one_points = 24;
    double near_one_scale = 0.05;
    /// Adaptive refinement of the miss curve (u(pi/2), u'(pi/2)).
    double chord_max = 0.05;
    int max_refine_depth = 8;
    /// u' sign changes are counted only across values above this magnitude.
    double extremum_threshold = 1e-8;
    /// Relative precision of the scan boundary of the positivity set.
    double boundary_rel_tol = 1e-6;
    /// The monotone seeding curve continues below alpha_min down to this
    /// floor, sampled logarithmically.
    double monotone_alpha_floor = 1e-14;
    int monotone_points_per_decade = 12;
    int newton_max_iter = 40;
    double newton_tol = 1e-11;
    QuadratureOptions quadrature{};
    /// Weights for the scalar curvature functional; defaults to those implied
    /// by (m, p, lambda).
    std::optional<FunctionalWeights> weights;
};

/// Sign-change bracket of the miss function.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double miss_lo = 0.0;
    double miss_hi = 0.0;
};

struct MissResult {
    bool numeric = false;
    double value = 0.0;   // u'(pi/2) when numeric
    double u_half = 0.0;  // u(pi/2) when numeric
    ExitKind exit = ExitKind::completed;
    double t_event = 0.0;
};

class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// u'(pi/2) of the solution started at alpha, or the event that stopped it.
/// Throws NumericalFailure on an integrator step failure.
MissResult miss(double alpha, const ShootingProblem& problem, const IntegratorOptions& opts = {});

struct CurveSample {
    double alpha = 0.0;
    bool numeric = false;
    double u_half = 0.0;
    double v_half = 0.0;
    ExitKind exit = ExitKind::completed;
};

struct ScanResult {
    std::vector<CurveSample> samples;  // sorted by alpha
    std::vector<Bracket> brackets;
    /// First alpha above 1 whose trajectory leaves the positivity set, if found.
    std::optional<double> upper_event_alpha;
    std::optional<double> lower_event_alpha;
};

/// Scans alpha on [lo, hi] with a logarithmic grid of n_grid points per side
/// of alpha = 1, and returns sign-change brackets of u'(pi/2). The trivial
/// root alpha = 1 is never bracketed. Events stop the scan on that side.
ScanResult scan_alpha(const ShootingProblem& problem, double lo, double hi, int n_grid,
                      const ShootingOptions& opts = {});

/// Scan over the full admissible range (alpha_min, first event above 1).
ScanResult scan_admissible(const ShootingProblem& problem, const ShootingOptions& opts = {});

enum class SolutionKind { constant, symmetric, monotone_decreasing, monotone_increasing, asymmetric };

std::string to_string(SolutionKind kind);

struct EnergySample {
    double t;
    double u;
    double v;
    double E;
};

struct SolutionRecord {
    double alpha_star = 1.0;
    double beta = 1.0;
    SolutionKind kind = SolutionKind::constant;
    int extrema_half = 0;
    double u_half = 1.0;
    /// |u'(pi/2)| for symmetric records, exit mismatch for matched ones.
    double residual = 0.0;
    double yamabe_value = 0.0;
    double u_max = 1.0;
    double u_min = 1.0;
    std::vector<EnergySample> energy_profile;
    std::shared_ptr<const Profile> profile;
};

/// Record of the constant solution u = 1.
SolutionRecord constant_record(const ShootingProblem& problem, const ShootingOptions& opts = {});

class TangentialRoot : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bisection (Illinois-accelerated) on a sign-change bracket, followed by
/// reflection of the half profile about pi/2. Throws TangentialRoot when the
/// refined point does not behave like a root.
SolutionRecord refine_root(const Bracket& bracket, const ShootingProblem& problem,
                           const ShootingOptions& opts = {});

/// Record of the symmetric solution started at alpha (u'(pi/2) ~ 0 assumed).
SolutionRecord symmetric_record(double alpha, const ShootingProblem& problem,
                                const ShootingOptions& opts = {});

/// Profile built from a forward trajectory at alpha on [0, pi/2] and a
/// backward trajectory at beta on [pi/2, pi].
SolutionRecord matched_record(double alpha, double beta, const ShootingProblem& problem,
                              const ShootingOptions& opts = {});

struct MonotoneResult {
    SolutionRecord decreasing;
    SolutionRecord increasing;
    /// Other two-sided solutions met on the way (neither symmetric nor monotone).
    std::vector<SolutionRecord> asymmetric;
    double matching_residual = 0.0;
    int newton_iterations = 0;
};

class NoConvergence : public std::runtime_error {
public:
    NoConvergence(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual(last_residual) {}
    double last_residual;
};

/// Two-sided matching at pi/2 for the monotone solution: unknowns (alpha, beta)
/// with (u, u') of the forward solution from alpha equal to those of the
/// backward solution from beta. Requires A = lambda (p - 2) > m
/// (std::domain_error otherwise); throws NoConvergence when no decreasing
/// solution is polished.
MonotoneResult find_monotone(const ShootingProblem& problem, const ShootingOptions& opts = {},
                             const ScanResult* scan = nullptr);

struct LocalMinimum {
    double t;
    double u;
    double E;
};

struct EnergyReport {
    bool monotone = true;  // non-increasing on [0, pi/2], non-decreasing on [pi/2, pi]
    double worst_violation = 0.0;
    std::optional<double> violation_t;
    std::vector<LocalMinimum> minima;
    bool minima_below_one = true;  // u < 1 and E < 0 at every interior local minimum
    bool suspect() const { return !monotone || !minima_below_one; }
};

/// Checks the energy law E' = -(m-1) cot(t) u'^2 qualitatively along the record.
EnergyReport energy_diagnostics(const SolutionRecord& record, const ShootingProblem& problem,
                                double tol);

/// Local extrema of the profile on (lo, hi) by sign changes of u'.
std::vector<double> profile_extrema(const Profile& profile, double lo, double hi,
                                    double threshold = 1e-8);

}  // namespace radial_yamabe
