#ifndef PEAKON_IO_HPP
#define PEAKON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "peakon/collision.hpp"
#include "peakon/geometry.hpp"
#include "peakon/integrator.hpp"

namespace peakon {

/// Reals are written with 17 significant digits so that every emitted file
/// reparses to bitwise-identical doubles.
std::string format_real(double x);

// Trajectory CSV: `# status ...` line, a `t,q1..qn,p1..pn,H0,H1[,H2]` header,
// one row per sample, then events as `# event t_lo t_hi pair` comment lines
// and the drift summary as a final `# drift ...` comment.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);
Trajectory read_trajectory_csv(std::istream& is);

nlohmann::json trajectory_json(const Trajectory& trajectory);
Trajectory trajectory_from_json(const nlohmann::json& j);

nlohmann::json verdict_json(const Verdict& verdict);
Verdict verdict_from_json(const nlohmann::json& j);

nlohmann::json drift_json(const DriftReport& drift);

std::string run_status_name(RunStatus status);
RunStatus run_status_from_name(const std::string& name);

} // namespace peakon

#endif
