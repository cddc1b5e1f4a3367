#pragma once

#include "radial_yamabe/geometry.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radial_yamabe {

enum class OdeMode { nonlinear, linear };

/// u'' + (m-1) cot(t) u' + rhs(u) = 0 on (0, pi), with
/// rhs(u) = lambda (u^{p-1} - u) (nonlinear) or A u (linear).
struct OdeParams {
    int m = 2;
    double lambda = 1.0;
    double p = 4.0;
    OdeMode mode = OdeMode::nonlinear;
    double A = 0.0;

    static OdeParams nonlinear(int m, double lambda, double p);
    static OdeParams linear(int m, double A);

    void validate() const;
    double rhs(double u) const;
    double rhs_derivative(double u) const;
};

using State = std::array<double, 2>;  // (u, u')

struct IntegratorOptions {
    double tol = 1e-10;
    /// Absolute part of the error scale; defaults to tol.
    std::optional<double> atol;
    /// Distance from t = 0 or t = pi at which the series start hands over.
    double t_series = 1e-4;
    double blowup_u = 1e6;
    double blowup_v = 1e8;
    double max_step = 0.1;
    long max_steps = 2'000'000;
    /// Stop with hit_zero when u reaches 0 (nonlinear mode only).
    bool stop_at_zero = true;

    static IntegratorOptions with_tol(double tol) {
        IntegratorOptions o;
        o.tol = tol;
        return o;
    }
};

enum class ExitKind { completed, hit_zero, blew_up, step_failure };

std::string to_string(ExitKind kind);

struct Exit {
    ExitKind kind = ExitKind::completed;
    double t = 0.0;
};

/// Even power series u(t) = c0 + c2 s^2 + c4 s^4 about an endpoint, s = |t - endpoint|.
struct SeriesStart {
    double endpoint = 0.0;
    double c0 = 0.0;
    double c2 = 0.0;
    double c4 = 0.0;

    /// (u, du/dt) at t.
    State eval(double t) const;
};

SeriesStart series_coefficients(const OdeParams& params, double alpha, double endpoint);

/// Series values (u, u') at distance t0 from t = 0. Error is O(t0^6).
State taylor_start(const OdeParams& params, double alpha, double t0);

/// One accepted Dormand-Prince step with its continuous extension.
struct Step {
    double t = 0.0;
    double h = 0.0;
    std::array<State, 5> rcont{};

    State eval(double t_query) const;
    double t_end() const { return t + h; }
};

struct Sample {
    double t;
    double u;
    double v;
};

/// A numerically integrated solution on [min(t_start,t_end), max(t_start,t_end)].
class Trajectory {
public:
    OdeParams params;
    IntegratorOptions options;
    double t_start = 0.0;  // where the data was prescribed (0, pi or interior)
    double t_end = 0.0;
    Exit exit;
    std::optional<SeriesStart> series;  // covers [endpoint, first integrated point]
    std::vector<Step> steps;
    std::vector<Sample> samples;

    bool forward() const { return t_end >= t_start; }
    bool completed() const { return exit.kind == ExitKind::completed; }
    double lo() const { return std::min(t_start, t_end); }
    double hi() const { return std::max(t_start, t_end); }
    /// Dense output anywhere in the covered span.
    State eval(double t) const;
    State final_state() const;
    std::vector<double> step_nodes() const;
};

/// Integrates from `from` to `to`. When `from` is 0 or pi the data is
/// u = alpha, u' = 0 there and the series start is used; a target of 0 or pi
/// stops at distance t_series from it.
Trajectory integrate(const OdeParams& params, double alpha, double from, double to,
                     const IntegratorOptions& opts = {});

/// Integrates from interior data (u, u') at t_from.
Trajectory integrate_from_state(const OdeParams& params, double t_from, State y0, double to,
                                const IntegratorOptions& opts = {});

/// Max over t in [lo+eps, hi-eps] of |u'' + (m-1)cot(t)u' + rhs(u)|, with u''
/// recovered by differencing the dense output of u'.
double residual(const OdeParams& params, const Trajectory& traj, double eps = 1e-3);

/// A piecewise profile on [0, pi] assembled from trajectories, each piece
/// optionally reflected (t -> pi - t) and scaled.
class Profile {
public:
    struct Piece {
        std::shared_ptr<const Trajectory> traj;
        double lo = 0.0;
        double hi = 0.0;
        bool reflected = false;
        double scale = 1.0;
    };

    void add(std::shared_ptr<const Trajectory> traj, double lo, double hi, bool reflected = false,
             double scale = 1.0);

    State eval(double t) const;
    double lo() const;
    double hi() const;
    const std::vector<Piece>& pieces() const { return pieces_; }
    /// Sorted integration nodes of all pieces, mapped into profile time.
    std::vector<double> nodes() const;
    RadialFunction radial_function() const;

private:
    std::vector<Piece> pieces_;
};

double residual(const OdeParams& params, const Profile& profile, double eps = 1e-3);

/// Zeros of component `component` (0 = u, 1 = u') of the profile on (lo, hi),
/// located by sign changes between nodes and polished by bisection.
/// Sign changes are counted only once |value| exceeds `threshold` again.
std::vector<double> profile_zeros(const Profile& profile, int component, double lo, double hi,
                                  double threshold = 0.0);

}  // namespace radial_yamabe
