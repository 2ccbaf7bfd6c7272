#pragma once

#include "squeeze/domain.hpp"
#include "squeeze/point.hpp"

namespace squeeze {

enum class GaugeMethod { closed_form, bisection };

inline const char* to_string(GaugeMethod m) {
    return m == GaugeMethod::closed_form ? "closed_form" : "bisection";
}

/// Result of a gauge evaluation. `residual` is the absolute mismatch of the
/// defining equation at the returned value (0 for closed forms).
struct GaugeResult {
    double value = 0.0;
    GaugeMethod method = GaugeMethod::closed_form;
    double residual = 0.0;
};

struct GaugeOptions {
    double tolerance = 1e-12;  // bracket width stop: |hi - lo| <= tolerance * (1 + hi)
    int max_iterations = 200;
};

/// Minkowski function h(z) = inf{ t > 0 : z/t inside }. Closed forms per
/// family; block domains solve the monotone defining equation by bracketed
/// bisection. Defined on all of C^n (values above 1 mark exterior points).
GaugeResult minkowski_gauge(const DomainSpec& spec, const Point& z, const GaugeOptions& opts = {});

/// Anisotropic gauge inf{ t > 0 : (z_1/t^{d_1}, ..., z_n/t^{d_n}) inside }.
/// Always solved by bracketed bisection on the defining equation, so it
/// provides an independent route to cross-check the closed forms; agrees
/// with minkowski_gauge when d is all ones.
GaugeResult d_minkowski_gauge(const DomainSpec& spec, const DVector& d, const Point& z,
                              const GaugeOptions& opts = {});

/// The sublevel domain { z : h_d(z) < r } for r in (0,1]. With r = 1 this is
/// the original domain as a point set.
DomainSpec sublevel(const DomainSpec& spec, const DVector& d, double r);

/// Gauge of the sublevel domain, computed by the scaling identity
/// h_{d,sub(r)} = h_d / r and cross-checked against direct bisection on the
/// sublevel domain. `residual` reports the cross-check discrepancy.
GaugeResult gauge_of_sublevel(const DomainSpec& spec, const DVector& d, double r, const Point& z,
                              const GaugeOptions& opts = {});

namespace detail {

/// Defining functional F with F(z) < 1 exactly on the open domain, strictly
/// decreasing along t |-> (z_i / t^{d_i}) for every positive exponent tuple.
double defining_value(const DomainSpec& spec, const Point& z, const GaugeOptions& opts = {});

} // namespace detail

} // namespace squeeze
