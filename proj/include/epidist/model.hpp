#pragma once

#include "epidist/params.hpp"

namespace epidist {

/// Time derivative of the coupled system at one state.
///
/// s_dot is defined as -(i_dot + r_dot) so the compartment derivatives sum
/// to zero bitwise when grouped as (i_dot + r_dot) + s_dot.
struct Derivatives {
    double s_dot = 0.0;
    double i_dot = 0.0;
    double r_dot = 0.0;
    double c_dot = 0.0;

    double mass_defect() const { return (i_dot + r_dot) + s_dot; }
};

/// Equilibrium exposure eps = max(0, 1 - beta*eta*i/c).
///
/// Exactly 0 once beta*eta*i >= c (full distancing), exactly 1 when i = 0 or
/// eta = 0. Throws std::invalid_argument on non-finite inputs or c <= 0.
double exposure(double i, double c, const EpidemicParams& params);

/// Right-hand side of the equilibrium system. `cost_rate` is the slope of
/// the distancing cost supplied by the cost model; exposure is evaluated
/// internally from (i, c).
Derivatives derivatives(const SystemState& state, double cost_rate,
                        const EpidemicParams& params);

/// Take-off condition: true iff prevalence grows at t = 0, i.e.
/// beta * S0 * eps(I0, c0) - gamma > 0.
bool initial_growth_check(const EpidemicParams& params, double c0);

/// Effective reproduction number. Behavioral form beta*eps*S/gamma uses the
/// equilibrium exposure; non-behavioral form is the classical beta*S/gamma.
double r_effective(const SystemState& state, const EpidemicParams& params,
                   bool behavioral);

}  // namespace epidist
