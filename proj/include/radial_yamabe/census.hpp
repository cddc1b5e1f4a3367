#pragma once

#include "radial_yamabe/geometry.hpp"
#include "radial_yamabe/shooting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radial_yamabe {

struct CensusOptions {
    ShootingOptions shooting{};
    /// A within this distance of a band edge downgrades the count check to a warning.
    double boundary_tol = 1e-9;
    /// Tolerance of the energy monotonicity check, as a multiple of the
    /// refinement integrator tolerance.
    double energy_tol_factor = 10.0;
};

enum class CensusStatus { ok, boundary_warning, shortfall };

std::string to_string(CensusStatus s);

/// Lower bound on the number of distinct radial solutions: 2n+2 for
/// A in C_n with n >= 1; for n = 0, two when A > m (constant and monotone),
/// otherwise one.
int predicted_minimum(double A, int m);

struct Census {
    std::optional<GeometryConfig> cfg;
    ShootingProblem problem;
    double A = 0.0;
    int band = 0;
    int predicted_min = 1;
    /// Counted solutions: exactly one constant, the symmetric roots, and one
    /// representative of the monotone pair.
    std::vector<SolutionRecord> records;
    /// The mirrored monotone profile and any asymmetric two-sided solutions.
    std::vector<SolutionRecord> extras;
    double instability_coefficient = 0.0;
    int instability_sign = 0;
    bool near_band_boundary = false;
    CensusStatus status = CensusStatus::ok;
    std::vector<std::string> notes;
    std::vector<Bracket> brackets;
    std::optional<double> upper_event_alpha;

    int found() const { return static_cast<int>(records.size()); }
    int symmetric_count() const;
    const SolutionRecord& constant() const;
    const SolutionRecord* monotone() const;
};

Census run_census(const GeometryConfig& cfg, const CensusOptions& opts = {});
Census run_census(const ShootingProblem& problem, const FunctionalWeights& weights,
                  const CensusOptions& opts = {});

/// delta_j = 2 / (3 j (j+1) - 2), the S^2 x S^2 thresholds.
double s2xs2_threshold(int j);

struct S2xS2Row {
    double delta = 0.0;
    double lambda = 0.0;
    double A = 0.0;
    int band = 0;
    int predicted_min = 1;
    double instability_coefficient = 0.0;
    /// n >= 1 with delta in [delta_{2n+2}, delta_{2n}), when delta < delta_2.
    std::optional<int> threshold_n;
    bool near_threshold = false;
    double yamabe_constant = 0.0;
    Census census;
};

std::vector<S2xS2Row> s2xs2_table(const std::vector<double>& deltas, const CensusOptions& opts = {});

struct SweepRow {
    double lambda = 0.0;
    double A = 0.0;
    int band = 0;
    int found = 0;
    int symmetric = 0;
    int predicted_min = 1;
    CensusStatus status = CensusStatus::ok;
    bool near_band_boundary = false;
    std::string error;
};

struct SweepReport {
    int m = 2;
    double p = 4.0;
    std::vector<SweepRow> rows;
    /// found counts are non-decreasing in lambda across rows without boundary flags
    bool staircase_monotone = true;
    int failures = 0;
};

/// Independent censuses at n_points lambda values evenly spaced on
/// [lambda_lo, lambda_hi] (one point means lambda_lo).
SweepReport sweep_lambda(int m, double p, double lambda_lo, double lambda_hi, int n_points,
                         const CensusOptions& opts = {});

}  // namespace radial_yamabe
