#pragma once

#include <iosfwd>
#include <string>

#include "epidist/analysis.hpp"
#include "epidist/simulate.hpp"

namespace epidist {

/// Formats a double with 12 significant digits; infinities serialize as
/// "inf"/"-inf" and NaN as "nan".
std::string format_csv_value(double x);

/// Writes the trajectory with its derived columns. Header is exactly
///   t,S,I,R,c,epsilon,I_dot,Re_behavioral,c_bar,headroom
/// one row per retained sample, both one-sided samples at jump times in
/// time order. `threshold` may be precomputed; when null it is computed
/// here.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out,
                          const ThresholdSeries* threshold = nullptr);
void write_trajectory_csv(const Trajectory& traj, const std::string& path,
                          const ThresholdSeries* threshold = nullptr);

/// Threshold analysis alone: t,c,c_bar,headroom plus a trailing comment
/// block listing crossing times.
void write_threshold_csv(const Trajectory& traj, const ThresholdSeries& series,
                         const std::string& path);

/// Per-sample single-peak verdicts: t,status,status_coarse with status in
/// {holds,violated,not_applicable}.
void write_single_peak_csv(const Trajectory& traj, const SinglePeakReport& report,
                           const std::string& path);

}  // namespace epidist
