#pragma once

#include "squeeze/point.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace squeeze {

class DomainSpec;

/// Euclidean ball of the given complex dimension and radius, centered at 0.
struct Ball {
    int dim = 1;
    double radius = 1.0;
};

/// Polydisk with per-coordinate radii.
struct Polydisk {
    std::vector<double> radii;
};

/// Block domain sum_j ||z_j||^{2 m_j} < 1. An infinite exponent removes the
/// block from the sum and imposes the box constraint ||z_j|| < 1 instead;
/// with every exponent infinite this is the product of unit balls.
struct GeneralizedEllipsoid {
    std::vector<int> block_dims;    // p_1..p_k, each >= 1
    std::vector<double> exponents;  // m_1..m_k, each >= 1/2 or +infinity
};

/// Coordinate-weighted power domain sum_i c_i |z_i|^{2 s_i} < 1.
struct WeightedPowerDomain {
    std::vector<double> weights;  // c_i > 0
    std::vector<double> powers;   // s_i >= 1/2
};

/// Cartesian product; point blocks map positionally onto the factors.
struct Product {
    std::vector<DomainSpec> factors;
};

/// Gauge sublevel set { z : h_{d,base}(z) < level } with level in (0,1].
struct Sublevel {
    std::shared_ptr<const DomainSpec> base;
    double level = 1.0;
    DVector d;
};

constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

/// Declarative description of a bounded domain containing the origin, drawn
/// from the fixed family list. Immutable once validated.
class DomainSpec {
  public:
    using Shape = std::variant<Ball, Polydisk, GeneralizedEllipsoid, WeightedPowerDomain, Product, Sublevel>;

    DomainSpec() : shape_(Ball{}) {}
    explicit DomainSpec(Shape shape) : shape_(std::move(shape)) {}

    const Shape& shape() const { return shape_; }

    template <typename T>
    const T* get_if() const {
        return std::get_if<T>(&shape_);
    }

    int dim() const;

    /// Every variant admitted by validation is convex (all ellipsoid and
    /// power exponents are >= 1/2, and linear images / products of convex
    /// sets are convex).
    bool is_convex() const { return true; }

    /// Every variant here is closed under coordinate-wise shrinking of
    /// moduli, hence balanced and d-balanced for every exponent tuple.
    bool is_balanced() const { return true; }
    bool is_d_balanced(const DVector& d) const { return d.dim() == dim(); }

    /// Domains with a transitive automorphism group: balls, polydisks,
    /// products of unit balls, products of homogeneous factors, and linear
    /// images of homogeneous domains.
    bool is_homogeneous() const;

    /// Short human-readable form, e.g. "ball(dim=2, radius=1)".
    std::string describe() const;

  private:
    Shape shape_;
};

/// Checks shape parameters, reconciles dimensions, and rewrites structural
/// identities (an all-exponent-1 block domain is the unit ball; the product
/// of unit disks is the unit polydisk). Throws ValidationError on malformed
/// input.
DomainSpec validate(const DomainSpec& spec);

/// Strict open-domain membership. Consistent with the gauge: membership
/// holds exactly when the Minkowski function is below 1.
bool contains(const DomainSpec& spec, const Point& z);

/// Draws `count` points inside the domain by rejection sampling from the
/// bounding ball; deterministic for a fixed seed. Throws ConvergenceError if
/// the per-point retry cap (10^6) is exhausted.
std::vector<Point> sample_points(const DomainSpec& spec, int count, std::uint64_t seed);

} // namespace squeeze
