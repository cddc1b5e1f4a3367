#pragma once

#include "radial_yamabe/census.hpp"
#include "radial_yamabe/linear_modes.hpp"
#include "radial_yamabe/shooting.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace radial_yamabe {

using json = nlohmann::json;

/// "%.17g": enough digits to reproduce the double exactly.
std::string format_double(double x);

/// Uniform samples of a mode on [lo, hi].
json mode_to_json(const LinearMode& mode, int samples, double lo, double hi);
/// Columns t,w,dw.
void write_mode_csv(std::ostream& os, const LinearMode& mode, int samples, double lo, double hi);

json record_to_json(const SolutionRecord& rec, bool with_profile = true);
/// Columns t,u,du,E at the integration nodes.
void write_record_csv(std::ostream& os, const SolutionRecord& rec);

json census_to_json(const Census& c, bool with_profiles = true);
/// Columns kind,alpha_star,beta,u_half,u_min,u_max,extrema_half,yamabe_value,residual.
void write_census_csv(std::ostream& os, const Census& c);

json s2xs2_to_json(const std::vector<S2xS2Row>& rows, bool with_profiles = false);
/// Columns delta,lambda,A,band,threshold_n,predicted_min,found,symmetric,
/// instability_coefficient,yamabe_constant,min_yamabe_found,near_threshold,status.
void write_s2xs2_csv(std::ostream& os, const std::vector<S2xS2Row>& rows);

json sweep_to_json(const SweepReport& rep);
/// Columns lambda,A,band,predicted_min,found,symmetric,near_band_boundary,status.
void write_sweep_csv(std::ostream& os, const SweepReport& rep);

/// One "# key=value" comment line per entry of a flat JSON object.
void write_csv_header_comments(std::ostream& os, const json& config);

}  // namespace radial_yamabe
