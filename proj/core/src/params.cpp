#include "wfrac/params.hpp"

#include <cmath>
#include <cstdio>

#include "wfrac/errors.hpp"

namespace wfrac {

FracParams::FracParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!std::isfinite(alpha) || !(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha must lie strictly inside (0,1), got " + std::to_string(alpha));
    }
    if (!std::isfinite(beta) || beta < 0.0) {
        throw DomainError("beta must be finite and >= 0, got " + std::to_string(beta));
    }
}

std::string FracParams::describe() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "alpha=%.10g beta=%.10g", alpha_, beta_);
    return buf;
}

}  // namespace wfrac
