#include "radial_yamabe/census.hpp"

#include <algorithm>
#include <cmath>

namespace radial_yamabe {

std::string to_string(CensusStatus s) {
    switch (s) {
        case CensusStatus::ok: return "ok";
        case CensusStatus::boundary_warning: return "boundary_warning";
        case CensusStatus::shortfall: return "shortfall";
    }
    return "unknown";
}

int predicted_minimum(double A, int m) {
    const auto n = band_index(A, m);
    if (!n) return 0;
    if (*n >= 1) return 2 * *n + 2;
    return A > m ? 2 : 1;
}

int Census::symmetric_count() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const SolutionRecord& r) {
        return r.kind == SolutionKind::symmetric;
    }));
}

const SolutionRecord& Census::constant() const {
    for (const auto& r : records)
        if (r.kind == SolutionKind::constant) return r;
    throw std::logic_error("census without a constant record");
}

const SolutionRecord* Census::monotone() const {
    for (const auto& r : records)
        if (r.kind == SolutionKind::monotone_decreasing) return &r;
    return nullptr;
}

namespace {

bool same_metric(const SolutionRecord& a, const SolutionRecord& b) {
    const double y = std::max(std::abs(a.yamabe_value), 1.0);
    return std::abs(a.yamabe_value - b.yamabe_value) < 1e-9 * y &&
           std::abs(a.u_max - b.u_max) < 1e-7 && std::abs(a.u_min - b.u_min) < 1e-7;
}

}  // namespace

Census run_census(const GeometryConfig& cfg, const CensusOptions& opts) {
    Census c = run_census(ShootingProblem::from(cfg), FunctionalWeights::from(cfg), opts);
    c.cfg = cfg;
    c.instability_coefficient = second_variation_coefficient(cfg);
    c.instability_sign = (c.instability_coefficient > 0) - (c.instability_coefficient < 0);
    return c;
}

Census run_census(const ShootingProblem& problem, const FunctionalWeights& weights,
                  const CensusOptions& opts) {
    if (!(problem.lambda > 0.0)) throw std::domain_error("census needs lambda > 0");
    ShootingOptions so = opts.shooting;
    so.weights = weights;

    Census c;
    c.problem = problem;
    c.A = problem.A();
    c.band = band_index(c.A, problem.m).value_or(0);
    c.predicted_min = predicted_minimum(c.A, problem.m);
    c.near_band_boundary = band_boundary_distance(c.A, problem.m) < opts.boundary_tol ||
                           std::abs(c.A - problem.m) < opts.boundary_tol;
    // a m + (2 - p) lambda a = a (m - A)
    c.instability_coefficient = weights.a * (problem.m - c.A);
    c.instability_sign = (c.instability_coefficient > 0) - (c.instability_coefficient < 0);

    c.records.push_back(constant_record(problem, so));

    const ScanResult scan = scan_admissible(problem, so);
    c.brackets = scan.brackets;
    c.upper_event_alpha = scan.upper_event_alpha;
    for (const auto& br : scan.brackets) {
        try {
            c.records.push_back(refine_root(br, problem, so));
        } catch (const TangentialRoot& e) {
            c.notes.push_back(std::string("bracket dropped: ") + e.what());
        }
    }

    if (c.A > problem.m) {
        try {
            MonotoneResult mono = find_monotone(problem, so, &scan);
            c.records.push_back(std::move(mono.decreasing));
            c.extras.push_back(std::move(mono.increasing));
            for (auto& r : mono.asymmetric) c.extras.push_back(std::move(r));
        } catch (const NoConvergence& e) {
            c.notes.push_back(std::string("monotone solution not found: ") + e.what() +
                              " (last residual " + std::to_string(e.last_residual) + ")");
        }
    }

    // merge records that describe the same metric
    std::vector<SolutionRecord> unique;
    for (auto& r : c.records) {
        const bool dup = std::any_of(unique.begin(), unique.end(),
                                     [&](const SolutionRecord& u) { return same_metric(u, r); });
        if (dup) {
            c.notes.push_back("merged duplicate record at alpha = " + std::to_string(r.alpha_star));
            continue;
        }
        unique.push_back(std::move(r));
    }
    c.records = std::move(unique);

    const double etol = opts.energy_tol_factor * so.refine_integrator.tol;
    for (const auto& r : c.records) {
        const EnergyReport er = energy_diagnostics(r, problem, etol);
        if (er.suspect())
            c.notes.push_back("energy diagnostics flag the record at alpha = " +
                              std::to_string(r.alpha_star));
    }

    if (c.found() < c.predicted_min) {
        c.status = c.near_band_boundary ? CensusStatus::boundary_warning : CensusStatus::shortfall;
        c.notes.push_back("found " + std::to_string(c.found()) + " solutions, expected at least " +
                          std::to_string(c.predicted_min));
    } else if (c.near_band_boundary) {
        c.status = CensusStatus::boundary_warning;
        c.notes.push_back("A lies on a band boundary; the lower bound is not asserted");
    }
    return c;
}

double s2xs2_threshold(int j) {
    if (j < 1) throw std::invalid_argument("threshold index must be >= 1");
    return 2.0 / (3.0 * j * (j + 1) - 2.0);
}

std::vector<S2xS2Row> s2xs2_table(const std::vector<double>& deltas, const CensusOptions& opts) {
    std::vector<double> sorted = deltas;
    std::sort(sorted.begin(), sorted.end());
    std::vector<S2xS2Row> rows;
    for (double delta : sorted) {
        const GeometryConfig cfg = product_config(2, 2, delta);
        S2xS2Row row;
        row.delta = delta;
        row.lambda = cfg.lambda();
        row.A = cfg.A();
        row.band = band_index(row.A, 2).value_or(0);
        row.predicted_min = predicted_minimum(row.A, 2);
        row.instability_coefficient = second_variation_coefficient(cfg);
        row.yamabe_constant = yamabe_constant_profile(cfg);
        for (int j = 1; j < 100000; ++j) {
            const double d = s2xs2_threshold(j);
            if (std::abs(delta - d) < 1e-9) row.near_threshold = true;
            if (d < delta - 1e-9) break;
        }
        for (int n = 1; n < 100000; ++n) {
            const double hi = s2xs2_threshold(2 * n), lo = s2xs2_threshold(2 * n + 2);
            if (delta >= hi) break;
            if (delta >= lo) {
                row.threshold_n = n;
                break;
            }
        }
        row.census = run_census(cfg, opts);
        rows.push_back(std::move(row));
    }
    return rows;
}

SweepReport sweep_lambda(int m, double p, double lambda_lo, double lambda_hi, int n_points,
                         const CensusOptions& opts) {
    SweepReport rep;
    rep.m = m;
    rep.p = p;
    if (n_points <= 0 || !(lambda_lo > 0.0) || lambda_hi < lambda_lo) return rep;
    std::optional<int> prev_found;
    for (int i = 0; i < n_points; ++i) {
        const double lam =
            n_points == 1 ? lambda_lo : lambda_lo + (lambda_hi - lambda_lo) * i / (n_points - 1);
        SweepRow row;
        row.lambda = lam;
        const ShootingProblem problem{m, lam, p};
        row.A = problem.A();
        row.band = band_index(row.A, m).value_or(0);
        row.predicted_min = predicted_minimum(row.A, m);
        try {
            const Census c = run_census(problem, FunctionalWeights::from_problem(m, p, lam), opts);
            row.found = c.found();
            row.symmetric = c.symmetric_count();
            row.status = c.status;
            row.near_band_boundary = c.near_band_boundary;
        } catch (const std::exception& e) {
            row.error = e.what();
            row.status = CensusStatus::shortfall;
        }
        if (row.status == CensusStatus::shortfall) ++rep.failures;
        if (!row.near_band_boundary && row.error.empty()) {
            if (prev_found && row.found < *prev_found) rep.staircase_monotone = false;
            prev_found = row.found;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace radial_yamabe
