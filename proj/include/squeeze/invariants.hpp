#pragma once

#include "squeeze/domain.hpp"
#include "squeeze/gauge.hpp"
#include "squeeze/point.hpp"

namespace squeeze {

/// Two-sided bound on a distance-like quantity; exact implies lower == upper.
struct DistanceBound {
    double lower = 0.0;
    double upper = 0.0;
    bool exact = false;
};

/// Poincare distance on the unit disk; its tanh is the Moebius quotient
/// |mu1 - mu2| / |1 - conj(mu1) mu2|. Arguments must lie in the open disk.
double poincare(Complex mu1, Complex mu2);

/// c*(0, z) = tanh c(0, z) for a bounded convex balanced domain equals the
/// Minkowski function of z, returned as an exact bound. Requires z inside.
DistanceBound caratheodory_star_origin(const DomainSpec& spec, const Point& z,
                                       const GaugeOptions& opts = {});

/// Two-sided bound h_d(z)^L <= c*(0, z) <= h_d(z) for a bounded convex
/// d-balanced domain, with L = max_i d_i; collapses to the exact balanced
/// identity when L = 1. Requires z inside.
DistanceBound caratheodory_star_sandwich(const DomainSpec& spec, const DVector& d, const Point& z,
                                         const GaugeOptions& opts = {});

} // namespace squeeze
