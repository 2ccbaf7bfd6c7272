#pragma once

#include "squeeze/domain.hpp"
#include "squeeze/geometry.hpp"
#include "squeeze/point.hpp"

#include <string>
#include <vector>

namespace squeeze {

/// Closed list of bound-propagation rules. Each rule is a one-sided
/// inequality that transfers a certified lower bound between squeezing
/// quantities; upper bounds enter only through the exact cases.
enum class Rule {
    prop21_1,         // S_D        >= (alpha/R) * S_D^Omega
    prop21_2,         // S_D^Omega  >= (alpha/R) * S_D
    cor23_1,          // S_D^Omega2 >= (a1 a2 / R1 R2) * S_D^Omega1
    cor23_2,          // S_D^Omega1 >= (a1 a2 / R1 R2) * S_D^Omega2
    prop32_1,         // S_D        >= (alpha/P) * (S_{d,D}^Omega)^L
    prop32_2,         // S_{d,D}^Omega >= (alpha/R) * S_D
    cor33_1,          // S_{d',D}^Omega2 >= a1 a2 (S_{d,D}^Omega1)^L / (P1 R2)
    cor33_2,          // S_{d,D}^Omega1  >= a1 a2 (S_{d',D}^Omega2)^L' / (R1 P2)
    thm35_1,          // S_{d',D}^Omega2 >= S_{d,Omega1}^Omega2(0) * (S_{d,D}^Omega1)^L
    thm35_2,          // mirrored direction
    exact_ball,       // the unit ball squeezes exactly to 1
    product_formula,  // (sum_i v_i^{-2})^{-1/2} endpoint-wise
    lemma41_upper,    // upper bound r <= 1/sqrt(k) for the ball-to-product case
    paper_example,    // closed-form value seeded from a published identity
};

const char* rule_name(Rule r);
Rule rule_from_name(const std::string& name);

struct ProvenanceStep {
    Rule rule;
    std::string inputs;  // rendered "key=value, ..." summary of the rule inputs
};

/// Certified squeezing-value interval in [0,1] with an append-only trail
/// naming the rule that produced each side.
class BoundInterval {
  public:
    BoundInterval() = default;

    BoundInterval(double lower, double upper, std::vector<ProvenanceStep> provenance = {})
        : lower_(lower), upper_(upper), provenance_(std::move(provenance)) {
        if (!(lower_ >= 0.0 && lower_ <= upper_ && upper_ <= 1.0))
            throw ValidationError("bound interval must satisfy 0 <= lower <= upper <= 1");
    }

    static BoundInterval vacuous() { return BoundInterval(0.0, 1.0); }

    double lower() const { return lower_; }
    double upper() const { return upper_; }
    double width() const { return upper_ - lower_; }
    const std::vector<ProvenanceStep>& provenance() const { return provenance_; }

    BoundInterval with_step(Rule rule, std::string inputs) const {
        auto steps = provenance_;
        steps.push_back({rule, std::move(inputs)});
        return BoundInterval(lower_, upper_, std::move(steps));
    }

  private:
    double lower_ = 0.0;
    double upper_ = 1.0;
    std::vector<ProvenanceStep> provenance_;
};

enum class TransferDirection { forward, reverse };

/// [1,1] for any point of the unit ball (the ball is homogeneous with
/// squeezing constant 1). Throws if z is outside.
BoundInterval exact_ball_squeezing(const Point& z);

/// Squeezing value of a product from per-factor values: applies
/// v |-> (sum_i v_i^{-2})^{-1/2} endpoint-wise. A zero lower endpoint
/// propagates to a zero lower endpoint.
BoundInterval product_squeezing(const std::vector<BoundInterval>& values);

/// Lower-bound transfer from the generalized quantity to the standard one:
/// new lower = (alpha/R) * in.lower. Upper bounds do not travel through
/// these rules; the upper endpoint stays at 1 unless the prior tightens it.
BoundInterval prop21_forward(const BoundInterval& s_gen, const GeometricConstants& k,
                             const BoundInterval& prior = BoundInterval::vacuous());

/// Mirror direction: standard to generalized, same factor alpha/R.
BoundInterval prop21_backward(const BoundInterval& s_std, const GeometricConstants& k,
                              const BoundInterval& prior = BoundInterval::vacuous());

/// Model-to-model transfer with factor (a1 a2)/(R1 R2); implemented as the
/// two-step composition so the outputs match it bit for bit.
BoundInterval cor23_transfer(const BoundInterval& s1, const GeometricConstants& k1,
                             const GeometricConstants& k2,
                             TransferDirection dir = TransferDirection::forward,
                             const BoundInterval& prior = BoundInterval::vacuous());

/// d-balanced transfer to the standard quantity: new lower =
/// (alpha/P) * in.lower^L with P = R+1.
BoundInterval prop32_forward(const BoundInterval& s_dbal, const GeometricConstants& k,
                             const BoundInterval& prior = BoundInterval::vacuous());

/// Standard to d-balanced: new lower = (alpha/R) * in.lower.
BoundInterval prop32_backward(const BoundInterval& s_std, const GeometricConstants& k,
                              const BoundInterval& prior = BoundInterval::vacuous());

/// Model-to-model d-balanced transfer; composition of the two rules above,
/// bit-for-bit.
BoundInterval cor33_transfer(const BoundInterval& s1, const GeometricConstants& k1,
                             const GeometricConstants& k2,
                             TransferDirection dir = TransferDirection::forward,
                             const BoundInterval& prior = BoundInterval::vacuous());

/// Homogeneous-model transfer: new lower = transfer_const.lower * in.lower^L.
/// The transfer constant is a certified interval for the model-to-model
/// squeezing value at 0; it is always caller-supplied, never estimated.
BoundInterval thm35_transfer(const BoundInterval& s1, const BoundInterval& transfer_const, int L,
                             TransferDirection dir = TransferDirection::forward,
                             const BoundInterval& prior = BoundInterval::vacuous());

/// As above but refuses model specs without the homogeneity attribute.
BoundInterval thm35_transfer_checked(const BoundInterval& s1, const BoundInterval& transfer_const,
                                     int L, const DomainSpec& model1, const DomainSpec& model2,
                                     TransferDirection dir = TransferDirection::forward,
                                     const BoundInterval& prior = BoundInterval::vacuous());

/// The ball-to-product-of-balls squeezing value: returns the point interval
/// [1/sqrt(k), 1/sqrt(k)] for the unit ball of dimension n against the
/// product of unit balls with block partition p. The lower side comes from
/// the alpha/R transfer of the exact ball value, the upper side from the
/// product formula over k unit-ball factors; the two meet exactly.
BoundInterval ellipsoid_example(int n, const std::vector<int>& p);

} // namespace squeeze
