#pragma once

#include "squeeze/domain.hpp"
#include "squeeze/point.hpp"

#include <cstdint>
#include <utility>

namespace squeeze {

enum class ConstantsMethod { analytic, sampled };

inline const char* to_string(ConstantsMethod m) {
    return m == ConstantsMethod::analytic ? "analytic" : "sampled";
}

/// Geometric constants of a (domain, d) pair: alpha = dist(0, boundary),
/// R = half-diameter, P = R + 1, L = max_i d_i.
struct GeometricConstants {
    double alpha = 1.0;
    double R = 1.0;
    double P = 2.0;
    int L = 1;
    ConstantsMethod method = ConstantsMethod::analytic;
};

struct OracleOptions {
    int directions = 100000;
    std::uint64_t seed = 42;
    int refine_sweeps = 32;
    int refine_starts = 4;
};

/// alpha and R for a balanced domain. For a balanced domain the boundary
/// point along a unit direction u is u / h(u), so alpha = min 1/h(u) and,
/// by central symmetry, R = sup 1/h(u). Analytic values where the family
/// admits them; otherwise the direction-sampling oracle (method = sampled).
GeometricConstants constants(const DomainSpec& spec, const DVector& d,
                             const OracleOptions& opts = {});

/// Direction-sampling estimate of (alpha, R): evaluates 1/h(u) on uniform
/// unit directions, then refines the best candidates by golden-section
/// search over great-circle perturbations. Both estimates come from actual
/// gauge evaluations, so alpha_est >= alpha and R_est <= R.
std::pair<double, double> extremal_radii_oracle(const DomainSpec& spec, int directions,
                                                std::uint64_t seed);
std::pair<double, double> extremal_radii_oracle(const DomainSpec& spec, const OracleOptions& opts);

/// Cheap analytic upper bound on R, tight for the product-like families.
/// Used to size the rejection-sampling ball.
double bounding_radius(const DomainSpec& spec);

} // namespace squeeze
