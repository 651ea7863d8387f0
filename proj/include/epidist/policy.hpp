#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "epidist/params.hpp"
#include "epidist/simulate.hpp"

namespace epidist {

/// Exogenous target transmission path beta_tilde(t) on [0, t_max], to be
/// implemented through the distancing cost. Values must stay in [0, beta):
/// exposure cannot be subsidized, so beta_tilde > beta is unattainable.
struct TransmissionPath {
    std::vector<std::pair<double, double>> knots;  // (t, beta_tilde)
    Interpolation interpolation = Interpolation::piecewise_constant_right;

    double value_at(double t, Side side = Side::right) const;

    /// Structural checks plus feasibility against beta with the given margin:
    /// beta_tilde(t) <= beta * (1 - margin) everywhere, beta_tilde >= 0,
    /// domain covers [0, t_max]. Returns all violations.
    std::vector<std::string> check(double beta, double t_max,
                                   double margin = 1e-6) const;
};

/// Outcome of inverting a transmission path into a cost schedule.
struct ImplementationResult {
    Trajectory reduced_traj;        // non-behavioral run under beta_tilde
    CostModel c_tilde;              // implementing cost, tabulated on the grid
    std::vector<double> c_tilde_values;  // per reduced sample
    std::vector<bool> feasible;          // beta_tilde < beta with margin
    std::vector<bool> below_c_lower;     // c_tilde < params.c_lower (warning)
    Trajectory behavioral_traj;     // re-simulation under c_tilde
    double roundtrip_error = 0.0;   // max relative deviation of I
};

/// Thrown when a transmission path violates beta_tilde < beta; lists the
/// offending intervals.
struct FeasibilityError : std::runtime_error {
    explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Integrates the reduced-form system: the product beta*eps is replaced by
/// beta_tilde(t). The cost column carries NaN as a placeholder and the
/// exposure column the implied eps = beta_tilde/beta.
Trajectory simulate_reduced(const EpidemicParams& params, const TransmissionPath& path,
                            const SimConfig& cfg);

/// Runs the reduced system, computes the implementing cost
///   c_tilde(t) = beta^2 eta I(t) / (beta - beta_tilde(t)),
/// re-simulates the behavioral model under it (tabulated, linear
/// interpolation on a half-step grid) and records the round-trip error on I.
/// Throws FeasibilityError for infeasible paths; c_tilde < c_lower is a
/// warning carried in the result.
ImplementationResult implement_transmission(const EpidemicParams& params,
                                            const TransmissionPath& path,
                                            const SimConfig& cfg,
                                            double margin = 1e-6);

/// Per-sample planner constraint c(t) <= c_bar(t); equivalent to the
/// behavioral reproduction number staying <= 1 wherever S > gamma/beta and
/// I > 0.
std::vector<bool> reproduction_constraint_check(const Trajectory& traj,
                                                const EpidemicParams& params);

}  // namespace epidist
