#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "epidist/cost.hpp"
#include "epidist/model.hpp"
#include "epidist/params.hpp"

namespace epidist {

/// Integration controls. Jump times are inserted into the step grid, so dt
/// is an upper bound on the step size near law boundaries.
struct SimConfig {
    double t_max = 200.0;
    double dt = 0.01;
    int output_every = 1;            // sample thinning factor
    double stop_when_i_below = 1e-12;  // early-stop threshold on I, 0 disables

    std::vector<std::string> check() const;
    void validate() const;
};

/// Uniformly sampled path of the coupled system plus derived series.
///
/// At each jump time both one-sided samples are emitted, left first, with
/// equal t; sample times are otherwise strictly increasing. exposure, i_dot
/// and c_dot are evaluated from the ODE right-hand side at each sample,
/// never finite-differenced.
struct Trajectory {
    std::vector<SystemState> samples;
    std::vector<double> exposure;
    std::vector<double> i_dot;
    std::vector<double> c_dot;
    std::vector<std::size_t> jump_samples;  // indices of left-side jump samples

    EpidemicParams params;
    CostModel cost;
    SimConfig config;

    bool early_stopped = false;
    double t_end = 0.0;

    std::size_t size() const { return samples.size(); }

    /// Index of the sample at time t (right-side sample at jump times).
    /// Throws std::invalid_argument if no sample time matches within 1e-9.
    std::size_t index_at(double t) const;
};

/// Result of a long-horizon run, with a convergence flag telling callers
/// whether the t -> infinity limits (I -> 0, eps -> 1, S < gamma/beta) can
/// be trusted at this horizon.
struct TerminalSummary {
    double s_inf = 0.0;
    double i_final = 0.0;
    double eps_final = 0.0;
    double herd_threshold = 0.0;  // gamma / beta
    bool converged = false;
};

/// Advances (S, I, R, c) from (S0, I0, 0, initial_cost(model)) with the
/// classical fixed-step 4th-order scheme, exposure re-evaluated at every
/// stage, and jumps applied right-continuously between the two emitted
/// samples at each jump node. Throws on invalid inputs and on non-finite or
/// out-of-range states during integration (diagnostic includes the time).
Trajectory simulate(const EpidemicParams& params, const CostModel& model,
                    const SimConfig& cfg);

TerminalSummary terminal_summary(const Trajectory& traj, const EpidemicParams& params);

}  // namespace epidist
