#pragma once

#include <cstddef>
#include <vector>

#include "epidist/model.hpp"
#include "epidist/params.hpp"
#include "epidist/simulate.hpp"

namespace epidist {

/// A strict local extremum of a sampled series.
struct Extremum {
    double t = 0.0;
    double value = 0.0;
    std::size_t sample = 0;
};

/// Waves of prevalence and of the cost path. Peaks and troughs alternate in
/// time; wave_count is the number of prevalence peaks.
struct PeakReport {
    std::vector<Extremum> peaks;
    std::vector<Extremum> troughs;
    std::vector<Extremum> c_peaks;
    std::vector<Extremum> c_troughs;
    std::size_t wave_count = 0;
};

/// Per-sample status of the single-peak sufficient condition
/// c_dot/c^2 < eps^2/eta. Samples with eps = 0 are outside the condition's
/// derivation and are reported as not_applicable.
enum class ConditionStatus { holds, violated, not_applicable };

struct SinglePeakReport {
    std::vector<ConditionStatus> per_sample;         // exact condition
    std::vector<ConditionStatus> per_sample_coarse;  // bound gamma^2/(eta beta^2 S0^2)
    bool global = false;         // condition holds at every applicable t > 0
    bool global_coarse = false;
};

/// Pathwise threshold distancing cost and its headroom over the realized
/// cost. c_bar is +infinity exactly where S <= gamma/beta.
struct ThresholdSeries {
    std::vector<double> c_bar;
    std::vector<double> headroom;       // c_bar - c where finite, else +inf
    std::vector<double> crossing_times;  // sign changes of the headroom
};

/// Stationarity tolerance on I_dot used for plateau merging.
inline constexpr double kStationaryTol = 1e-12;
/// A peak must exceed both neighboring troughs by this much.
inline constexpr double kProminenceTol = 1e-10;

/// Locates strict local maxima/minima of I (and of c) from the stored
/// right-hand-side slopes: a peak is a + -> - sign change of I_dot with
/// |I_dot| above kStationaryTol on both sides, plateau runs merged into a
/// single crossing. Requires >= 3 samples.
PeakReport detect_waves(const Trajectory& traj);

/// Evaluates the single-peak sufficient condition at every sample, plus the
/// coarser S0-based bound. Vacuous (globally true) when eta = 0.
SinglePeakReport single_peak_condition(const Trajectory& traj,
                                       const EpidemicParams& params);

/// Curvature of prevalence at a stationary point of I:
///   I_ddot|_{I_dot=0} = beta^2 eta I^2 S (c_dot/c^2 - eps^2/eta).
/// Negative means the stationary point is a local maximum.
double curvature_at_stationary(const SystemState& state, double cost_rate,
                               const EpidemicParams& params);

/// Threshold distancing cost at one state:
///   c_bar = beta^2 I S eta / (beta S - gamma)  if S > gamma/beta, else +inf.
/// The right-limit of I_dot after switching to cost c2 is negative iff
/// c2 < c_bar.
double threshold_cost(const SystemState& state, const EpidemicParams& params);

ThresholdSeries threshold_series(const Trajectory& traj, const EpidemicParams& params);

/// Sign of the right-limit of I_dot after replacing the cost at sample
/// `sample` by c2_value: -1, 0 or +1.
int perturbation_sign_test(const Trajectory& traj, std::size_t sample,
                           double c2_value, const EpidemicParams& params);

/// Same, addressing the sample by its time (must match a sample node).
int perturbation_sign_test_at(const Trajectory& traj, double t_tilde,
                              double c2_value, const EpidemicParams& params);

}  // namespace epidist
