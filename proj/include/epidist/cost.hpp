#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace epidist {

/// Interpolation rule for tabulated cost paths. Piecewise-constant-right is
/// the default: it keeps the path right-continuous at every knot.
enum class Interpolation { piecewise_constant_right, linear };

/// Which one-sided limit to take when a time sits exactly on a law boundary.
enum class Side { left, right };

struct CostSegment;

/// Time-varying distancing-cost law c(t): a tagged variant.
///
/// Every variant is reduced to the same integrator contract: an initial
/// value, a slope cost_rate(t, c, d), and a finite set of right-continuous
/// jump nodes.
struct CostModel {
    struct Constant {
        double c = 0.0;
    };
    struct LinearInTime {
        double c0 = 0.0;
        double k = 0.0;  // slope per day
    };
    struct Fatigue {
        double c0 = 0.0;
        double k = 0.0;  // fatigue accumulation rate, > 0
        double r = 0.0;  // fatigue recovery rate, >= 0
    };
    struct PiecewiseSchedule {
        std::vector<CostSegment> segments;
    };
    struct Tabulated {
        // Knot times non-decreasing; a repeated time encodes a jump from the
        // earlier to the later value.
        std::vector<std::pair<double, double>> knots;
        Interpolation interpolation = Interpolation::piecewise_constant_right;
    };

    using Variant =
        std::variant<Constant, LinearInTime, Fatigue, PiecewiseSchedule, Tabulated>;
    Variant v;

    static CostModel constant(double c);
    static CostModel linear_in_time(double c0, double k);
    static CostModel fatigue(double c0, double k, double r);
    static CostModel schedule(std::vector<CostSegment> segments);
    static CostModel tabulated(std::vector<std::pair<double, double>> knots,
                               Interpolation interp);
};

/// One piece of a PiecewiseSchedule. At t_start the cost jumps to `jump_to`
/// (right-continuously) when present, otherwise it continues from its left
/// limit; `inner` supplies the law of motion until the next segment starts.
struct CostSegment {
    double t_start = 0.0;
    std::optional<double> jump_to;
    CostModel inner;
};

/// A declared discontinuity of the cost path: at time t the cost jumps
/// right-continuously to `value`.
struct JumpNode {
    double t = 0.0;
    double value = 0.0;
};

/// Slope of the cost path at (t, c, d) with d = 1 - eps the current
/// distancing. At a law boundary `side` picks the one-sided law; the default
/// follows right-continuity. Jumps themselves are handled by apply_jump.
/// Throws std::out_of_range for t outside a Tabulated domain.
double cost_rate(const CostModel& model, double t, double c, double d,
                 Side side = Side::right);

/// Post-jump cost at declared jump time t_n (compartments are unaffected).
/// Throws std::invalid_argument if t_n is not a declared jump node.
double apply_jump(const CostModel& model, double t_n);

/// Cost at t = 0 after any t = 0 jump override.
double initial_cost(const CostModel& model);

/// Declared jumps with t > 0, strictly increasing in time.
std::vector<JumpNode> jump_nodes(const CostModel& model);

/// All law-boundary times in (0, t_max): jump times plus continuous law
/// switches and tabulated knots. The integrator subdivides its grid so every
/// one of these is a step node.
std::vector<double> grid_nodes(const CostModel& model, double t_max);

/// Exact path value at a grid node for models that define the path directly
/// (Tabulated); nullopt for ODE-defined laws.
std::optional<double> exact_value_at(const CostModel& model, double t, Side side);

/// Smallest cost level declared anywhere in the model (used to derive the
/// default c_lower).
double min_declared_cost(const CostModel& model);

/// Structural and reachability checks: jump times strictly increasing, every
/// reachable cost >= c_lower over [0, t_max], tabulated domain covers
/// [0, t_max]. Returns all violations ("cost....: ..." messages).
std::vector<std::string> check_cost_model(const CostModel& model, double c_lower,
                                          double t_max);

/// Fatigue cost via trapezoid quadrature of the memory integral
///   c(t) = c0 + k * integral_0^t exp(-r (t - tau)) (1 - eps(tau)) dtau
/// on a uniform exposure grid with spacing dt; returns the cost at the last
/// grid point. Kept as an independent oracle against the ODE-integrated path.
double fatigue_closed_form(const std::vector<double>& eps_history, double dt,
                           double k, double r, double c0);

/// Closed-form cost path with semi-elasticity equal to c/eta:
///   c(t) = 1 / (1/c0 - t/eta)  on  [0, eta/c0).
/// Grows without bound as t approaches eta/c0 (finite escape time); the
/// growth rate necessary for a second wave cannot be sustained. Throws
/// std::domain_error for t >= eta/c0 or invalid c0/eta.
double lemma1_escape_cost(double c0, double eta, double t);

}  // namespace epidist
