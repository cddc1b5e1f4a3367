#include "radial_yamabe/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace radial_yamabe {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

json exit_json(const Trajectory& tr) {
    return {{"kind", to_string(tr.exit.kind)}, {"t", tr.exit.t}};
}

}  // namespace

json mode_to_json(const LinearMode& mode, int samples, double lo, double hi) {
    json j;
    j["A"] = mode.A;
    j["m"] = mode.m;
    if (mode.n) j["n"] = *mode.n;
    if (mode.exact_A) j["A_exact"] = to_string(*mode.exact_A);
    if (mode.poly) {
        json exact = json::array(), approx = json::array();
        for (const auto& c : mode.poly->coeffs()) {
            exact.push_back(to_string(c));
            approx.push_back(to_double(c));
        }
        j["coefficients"] = exact;
        j["coefficients_float"] = approx;
    }
    if (!mode.poly) j["matching_defect"] = mode.matching_defect;
    json t = json::array(), w = json::array(), dw = json::array();
    for (int i = 0; i < samples; ++i) {
        const double tt = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
        const State y = mode.eval(tt);
        t.push_back(tt);
        w.push_back(y[0]);
        dw.push_back(y[1]);
    }
    j["profile"] = {{"t", t}, {"w", w}, {"dw", dw}};
    return j;
}

void write_mode_csv(std::ostream& os, const LinearMode& mode, int samples, double lo, double hi) {
    os << "t,w,dw\n";
    for (int i = 0; i < samples; ++i) {
        const double tt = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
        const State y = mode.eval(tt);
        os << format_double(tt) << ',' << format_double(y[0]) << ',' << format_double(y[1]) << '\n';
    }
}

json record_to_json(const SolutionRecord& rec, bool with_profile) {
    json j{{"kind", to_string(rec.kind)},
           {"alpha_star", rec.alpha_star},
           {"beta", rec.beta},
           {"extrema_half", rec.extrema_half},
           {"u_half", rec.u_half},
           {"u_min", rec.u_min},
           {"u_max", rec.u_max},
           {"residual", rec.residual},
           {"yamabe_value", rec.yamabe_value}};
    if (rec.profile) {
        json pieces = json::array();
        for (const auto& pc : rec.profile->pieces())
            pieces.push_back(
                {{"lo", pc.lo}, {"hi", pc.hi}, {"reflected", pc.reflected}, {"exit", exit_json(*pc.traj)}});
        j["pieces"] = pieces;
    }
    if (with_profile) {
        json t = json::array(), u = json::array(), v = json::array(), E = json::array();
        for (const auto& s : rec.energy_profile) {
            t.push_back(s.t);
            u.push_back(s.u);
            v.push_back(s.v);
            E.push_back(s.E);
        }
        j["profile"] = {{"t", t}, {"u", u}, {"du", v}, {"E", E}};
    }
    return j;
}

void write_record_csv(std::ostream& os, const SolutionRecord& rec) {
    os << "t,u,du,E\n";
    for (const auto& s : rec.energy_profile)
        os << format_double(s.t) << ',' << format_double(s.u) << ',' << format_double(s.v) << ','
           << format_double(s.E) << '\n';
}

json census_to_json(const Census& c, bool with_profiles) {
    json j;
    if (c.cfg)
        j["geometry"] = {{"m", c.cfg->m()},     {"k", c.cfg->k()},         {"s_M", c.cfg->s_M()},
                         {"vol_M", c.cfg->vol_M()}, {"N", c.cfg->N()},      {"p", c.cfg->p()},
                         {"a", c.cfg->a()},     {"s_total", c.cfg->s_total()}};
    j["m"] = c.problem.m;
    j["p"] = c.problem.p;
    j["lambda"] = c.problem.lambda;
    j["A"] = c.A;
    j["band"] = c.band;
    j["predicted_min"] = c.predicted_min;
    j["found"] = c.found();
    j["symmetric"] = c.symmetric_count();
    j["instability_coefficient"] = c.instability_coefficient;
    j["instability_sign"] = c.instability_sign;
    j["near_band_boundary"] = c.near_band_boundary;
    j["status"] = to_string(c.status);
    j["notes"] = c.notes;
    if (c.upper_event_alpha) j["upper_event_alpha"] = *c.upper_event_alpha;
    json recs = json::array(), extras = json::array();
    for (const auto& r : c.records) recs.push_back(record_to_json(r, with_profiles));
    for (const auto& r : c.extras) extras.push_back(record_to_json(r, with_profiles));
    j["records"] = recs;
    j["extras"] = extras;
    return j;
}

void write_census_csv(std::ostream& os, const Census& c) {
    os << "kind,alpha_star,beta,u_half,u_min,u_max,extrema_half,yamabe_value,residual\n";
    for (const auto& r : c.records)
        os << to_string(r.kind) << ',' << format_double(r.alpha_star) << ',' << format_double(r.beta)
           << ',' << format_double(r.u_half) << ',' << format_double(r.u_min) << ','
           << format_double(r.u_max) << ',' << r.extrema_half << ',' << format_double(r.yamabe_value)
           << ',' << format_double(r.residual) << '\n';
}

namespace {

double min_yamabe(const Census& c) {
    double best = c.records.empty() ? 0.0 : c.records.front().yamabe_value;
    for (const auto& r : c.records) best = std::min(best, r.yamabe_value);
    return best;
}

}  // namespace

json s2xs2_to_json(const std::vector<S2xS2Row>& rows, bool with_profiles) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j{{"delta", r.delta},
               {"lambda", r.lambda},
               {"A", r.A},
               {"band", r.band},
               {"predicted_min", r.predicted_min},
               {"instability_coefficient", r.instability_coefficient},
               {"near_threshold", r.near_threshold},
               {"yamabe_constant", r.yamabe_constant},
               {"min_yamabe_found", min_yamabe(r.census)},
               {"census", census_to_json(r.census, with_profiles)}};
        j["threshold_n"] = r.threshold_n ? json(*r.threshold_n) : json(nullptr);
        arr.push_back(j);
    }
    return arr;
}

void write_s2xs2_csv(std::ostream& os, const std::vector<S2xS2Row>& rows) {
    os << "delta,lambda,A,band,threshold_n,predicted_min,found,symmetric,instability_coefficient,"
          "yamabe_constant,min_yamabe_found,near_threshold,status\n";
    for (const auto& r : rows)
        os << format_double(r.delta) << ',' << format_double(r.lambda) << ',' << format_double(r.A)
           << ',' << r.band << ',' << (r.threshold_n ? std::to_string(*r.threshold_n) : "") << ','
           << r.predicted_min << ',' << r.census.found() << ',' << r.census.symmetric_count() << ','
           << format_double(r.instability_coefficient) << ',' << format_double(r.yamabe_constant)
           << ',' << format_double(min_yamabe(r.census)) << ',' << (r.near_threshold ? 1 : 0) << ','
           << to_string(r.census.status) << '\n';
}

json sweep_to_json(const SweepReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json j{{"lambda", r.lambda},
               {"A", r.A},
               {"band", r.band},
               {"predicted_min", r.predicted_min},
               {"found", r.found},
               {"symmetric", r.symmetric},
               {"near_band_boundary", r.near_band_boundary},
               {"status", to_string(r.status)}};
        if (!r.error.empty()) j["error"] = r.error;
        rows.push_back(j);
    }
    return {{"m", rep.m},
            {"p", rep.p},
            {"rows", rows},
            {"staircase_monotone", rep.staircase_monotone},
            {"failures", rep.failures}};
}

void write_sweep_csv(std::ostream& os, const SweepReport& rep) {
    os << "lambda,A,band,predicted_min,found,symmetric,near_band_boundary,status\n";
    for (const auto& r : rep.rows)
        os << format_double(r.lambda) << ',' << format_double(r.A) << ',' << r.band << ','
           << r.predicted_min << ',' << r.found << ',' << r.symmetric << ','
           << (r.near_band_boundary ? 1 : 0) << ',' << to_string(r.status) << '\n';
}

void write_csv_header_comments(std::ostream& os, const json& config) {
    for (const auto& [k, v] : config.items()) {
        os << "# " << k << '=';
        if (v.is_number_float()) os << format_double(v.get<double>());
        else if (v.is_string()) os << v.get<std::string>();
        else os << v.dump();
        os << '\n';
    }
}

}  // namespace radial_yamabe
