#include "squeeze/invariants.hpp"

#include <cmath>

namespace squeeze {

double poincare(Complex mu1, Complex mu2) {
    if (std::abs(mu1) >= 1.0 || std::abs(mu2) >= 1.0)
        throw ValidationError("arguments must lie in the open unit disk");
    double q = std::abs(mu1 - mu2) / std::abs(1.0 - std::conj(mu1) * mu2);
    return std::atanh(q);
}

DistanceBound caratheodory_star_origin(const DomainSpec& spec, const Point& z,
                                       const GaugeOptions& opts) {
    if (!spec.is_convex() || !spec.is_balanced())
        throw ValidationError("the exact identity needs a convex balanced domain");
    if (!contains(spec, z)) throw ValidationError("point must lie inside the domain");
    double h = minkowski_gauge(spec, z, opts).value;
    return {h, h, true};
}

DistanceBound caratheodory_star_sandwich(const DomainSpec& spec, const DVector& d, const Point& z,
                                         const GaugeOptions& opts) {
    if (!spec.is_convex() || !spec.is_d_balanced(d))
        throw ValidationError("the sandwich needs a convex d-balanced domain");
    if (!contains(spec, z)) throw ValidationError("point must lie inside the domain");
    double h = d_minkowski_gauge(spec, d, z, opts).value;
    int L = d.max_exponent();
    double lower = L == 1 ? h : std::pow(h, static_cast<double>(L));
    return {lower, h, L == 1};
}

} // namespace squeeze
