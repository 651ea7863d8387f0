#pragma once

#include <string>
#include <vector>

namespace epidist {

/// Disease and preference constants of the behavioral SIR model.
///
/// All rates are per day, utility quantities in utility units. `pi_s` is the
/// flow payoff while susceptible; it cancels from the first-order condition
/// and never affects dynamics (kept for completeness).
struct EpidemicParams {
    double beta = 0.0;     // transmission rate, > gamma
    double gamma = 0.0;    // recovery rate, > 0
    double eta = 0.0;      // cost of infection, >= 0 (0 disables behavior)
    double pi_s = 0.0;     // flow payoff while susceptible (dynamics-irrelevant)
    double i0 = 0.0;       // initial infected share
    double c0 = 0.0;       // initial distancing cost, > 0
    double c_lower = 0.0;  // lower bound on distancing cost, > 0

    double s0() const { return 1.0 - i0; }

    /// Collects invariant violations ("params.<field>: ..." messages).
    /// `allow_zero_i0` admits the disease-free i0 = 0 case used in tests.
    std::vector<std::string> check(bool allow_zero_i0 = false) const;

    /// Throws std::invalid_argument listing every violation.
    void validate(bool allow_zero_i0 = false) const;
};

/// One time point of the coupled (S, I, R, c) system.
struct SystemState {
    double t = 0.0;
    double s = 0.0;
    double i = 0.0;
    double r = 0.0;
    double c = 0.0;
};

}  // namespace epidist
