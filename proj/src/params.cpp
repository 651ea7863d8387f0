#include "epidist/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace epidist {

std::vector<std::string> EpidemicParams::check(bool allow_zero_i0) const {
    std::vector<std::string> errors;
    auto require = [&errors](bool ok, const std::string& msg) {
        if (!ok) errors.push_back(msg);
    };

    require(std::isfinite(beta) && beta > 0.0, "params.beta: must be finite and > 0");
    require(std::isfinite(gamma) && gamma > 0.0, "params.gamma: must be finite and > 0");
    if (std::isfinite(beta) && std::isfinite(gamma))
        require(beta > gamma, "params.beta: must exceed gamma");
    require(std::isfinite(eta) && eta >= 0.0, "params.eta: must be finite and >= 0");
    require(std::isfinite(pi_s), "params.pi_s: must be finite");
    if (allow_zero_i0)
        require(std::isfinite(i0) && i0 >= 0.0 && i0 < 1.0, "params.i0: must lie in [0,1)");
    else
        require(std::isfinite(i0) && i0 > 0.0 && i0 < 1.0, "params.i0: must lie in (0,1)");
    require(std::isfinite(c0) && c0 > 0.0, "params.c0: must be finite and > 0");
    require(std::isfinite(c_lower) && c_lower > 0.0,
            "params.c_lower: must be finite and > 0");
    if (std::isfinite(c0) && std::isfinite(c_lower))
        require(c0 >= c_lower, "params.c0: must be >= c_lower");
    return errors;
}

void EpidemicParams::validate(bool allow_zero_i0) const {
    const auto errors = check(allow_zero_i0);
    if (errors.empty()) return;
    std::ostringstream msg;
    msg << "invalid EpidemicParams:";
    for (const auto& e : errors) msg << ' ' << e << ';';
    throw std::invalid_argument(msg.str());
}

}  // namespace epidist
