#pragma once
// CSV and SVG emission for entropy series.  All numeric formatting is
// shortest-round-trip, so identical series produce identical bytes.

#include <string>

#include "qcent/runner.hpp"

namespace qcent {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Column contract: t,S_L_q,S_V_q,S_L_cl,S_V_cl,norm_drift,energy_drift,
// oor_frac.  energy_drift is the pointwise max of the two branch drifts.
std::string csv_string(const EntropySeries& s);
void write_csv(const EntropySeries& s, const std::string& path);

// Self-contained line chart of the four entropy columns against time.
std::string svg_string(const EntropySeries& s, const std::string& title);
void write_plot(const EntropySeries& s, const std::string& title,
                const std::string& path);

}  // namespace qcent
