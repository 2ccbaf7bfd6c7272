#include "squeeze/squeezing.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace squeeze {

namespace {

const struct {
    Rule rule;
    const char* name;
} kRuleNames[] = {
    {Rule::prop21_1, "Prop2.1(1)"},
    {Rule::prop21_2, "Prop2.1(2)"},
    {Rule::cor23_1, "Cor2.3(1)"},
    {Rule::cor23_2, "Cor2.3(2)"},
    {Rule::prop32_1, "Prop3.2(1)"},
    {Rule::prop32_2, "Prop3.2(2)"},
    {Rule::cor33_1, "Cor3.3(1)"},
    {Rule::cor33_2, "Cor3.3(2)"},
    {Rule::thm35_1, "Thm3.5(1)"},
    {Rule::thm35_2, "Thm3.5(2)"},
    {Rule::exact_ball, "exact_ball"},
    {Rule::product_formula, "product_formula"},
    {Rule::lemma41_upper, "lemma4.1_upper"},
    {Rule::paper_example, "paper_example"},
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string describe_constants(const GeometricConstants& k) {
    std::ostringstream os;
    os << "alpha=" << fmt(k.alpha) << ", R=" << fmt(k.R) << ", P=" << fmt(k.P) << ", L=" << k.L;
    return os.str();
}

std::string describe_interval(const BoundInterval& v) {
    return "[" + fmt(v.lower()) + ", " + fmt(v.upper()) + "]";
}

/// Common lower-bound propagation: the rules are one-sided, so only the
/// lower endpoint moves; prior knowledge is never discarded.
BoundInterval propagate(double new_lower, Rule rule, std::string inputs,
                        const BoundInterval& input, const BoundInterval& prior) {
    double lower = std::max(prior.lower(), new_lower);
    double upper = prior.upper();
    std::vector<ProvenanceStep> steps = prior.provenance();
    steps.insert(steps.end(), input.provenance().begin(), input.provenance().end());
    steps.push_back({rule, std::move(inputs)});
    // a lower bound crossing the certified upper marks inconsistent inputs
    // and is rejected by the interval constructor
    return BoundInterval(lower, upper, std::move(steps));
}

} // namespace

const char* rule_name(Rule r) {
    for (const auto& e : kRuleNames)
        if (e.rule == r) return e.name;
    return "?";
}

Rule rule_from_name(const std::string& name) {
    for (const auto& e : kRuleNames)
        if (name == e.name) return e.rule;
    throw ValidationError("unknown rule name: " + name);
}

BoundInterval exact_ball_squeezing(const Point& z) {
    if (z.coords().norm() >= 1.0)
        throw ValidationError("point must lie in the open unit ball");
    return BoundInterval(1.0, 1.0, {{Rule::exact_ball, "|z|=" + fmt(z.coords().norm())}});
}

BoundInterval product_squeezing(const std::vector<BoundInterval>& values) {
    if (values.empty()) throw ValidationError("product formula needs at least one factor");
    // v |-> (sum v_i^{-2})^{-1/2} is increasing in each coordinate, so the
    // endpoints map to endpoints.
    auto apply = [](auto endpoint_of) {
        double sum = 0.0;
        for (size_t i = 0; i < endpoint_of.size(); ++i) {
            double v = endpoint_of[i];
            if (v == 0.0) return 0.0;
            sum += 1.0 / (v * v);
        }
        return 1.0 / std::sqrt(sum);
    };
    std::vector<double> lowers, uppers;
    std::vector<ProvenanceStep> steps;
    for (const auto& v : values) {
        lowers.push_back(v.lower());
        uppers.push_back(v.upper());
        steps.insert(steps.end(), v.provenance().begin(), v.provenance().end());
    }
    std::ostringstream os;
    os << "factors=" << values.size();
    steps.push_back({Rule::product_formula, os.str()});
    return BoundInterval(apply(lowers), apply(uppers), std::move(steps));
}

BoundInterval prop21_forward(const BoundInterval& s_gen, const GeometricConstants& k,
                             const BoundInterval& prior) {
    double factor = k.alpha / k.R;
    return propagate(factor * s_gen.lower(), Rule::prop21_1,
                     describe_constants(k) + ", in=" + describe_interval(s_gen), s_gen, prior);
}

BoundInterval prop21_backward(const BoundInterval& s_std, const GeometricConstants& k,
                              const BoundInterval& prior) {
    double factor = k.alpha / k.R;
    return propagate(factor * s_std.lower(), Rule::prop21_2,
                     describe_constants(k) + ", in=" + describe_interval(s_std), s_std, prior);
}

BoundInterval cor23_transfer(const BoundInterval& s1, const GeometricConstants& k1,
                             const GeometricConstants& k2, TransferDirection dir,
                             const BoundInterval& prior) {
    // composition of the two one-model rules, so the factor matches the
    // composed route bit for bit
    const GeometricConstants& from = dir == TransferDirection::forward ? k1 : k2;
    const GeometricConstants& to = dir == TransferDirection::forward ? k2 : k1;
    BoundInterval composed = prop21_backward(prop21_forward(s1, from), to);
    Rule rule = dir == TransferDirection::forward ? Rule::cor23_1 : Rule::cor23_2;
    return propagate(composed.lower(), rule,
                     describe_constants(k1) + "; " + describe_constants(k2) + ", in=" +
                         describe_interval(s1),
                     s1, prior);
}

BoundInterval prop32_forward(const BoundInterval& s_dbal, const GeometricConstants& k,
                             const BoundInterval& prior) {
    double powered = std::pow(s_dbal.lower(), static_cast<double>(k.L));
    double factor = k.alpha / k.P;
    return propagate(factor * powered, Rule::prop32_1,
                     describe_constants(k) + ", in=" + describe_interval(s_dbal), s_dbal, prior);
}

BoundInterval prop32_backward(const BoundInterval& s_std, const GeometricConstants& k,
                              const BoundInterval& prior) {
    double factor = k.alpha / k.R;
    return propagate(factor * s_std.lower(), Rule::prop32_2,
                     describe_constants(k) + ", in=" + describe_interval(s_std), s_std, prior);
}

BoundInterval cor33_transfer(const BoundInterval& s1, const GeometricConstants& k1,
                             const GeometricConstants& k2, TransferDirection dir,
                             const BoundInterval& prior) {
    const GeometricConstants& from = dir == TransferDirection::forward ? k1 : k2;
    const GeometricConstants& to = dir == TransferDirection::forward ? k2 : k1;
    BoundInterval composed = prop32_backward(prop32_forward(s1, from), to);
    Rule rule = dir == TransferDirection::forward ? Rule::cor33_1 : Rule::cor33_2;
    return propagate(composed.lower(), rule,
                     describe_constants(k1) + "; " + describe_constants(k2) + ", in=" +
                         describe_interval(s1),
                     s1, prior);
}

BoundInterval thm35_transfer(const BoundInterval& s1, const BoundInterval& transfer_const, int L,
                             TransferDirection dir, const BoundInterval& prior) {
    if (L < 1) throw ValidationError("L must be a positive integer");
    double powered = std::pow(s1.lower(), static_cast<double>(L));
    Rule rule = dir == TransferDirection::forward ? Rule::thm35_1 : Rule::thm35_2;
    std::ostringstream os;
    os << "const=" << describe_interval(transfer_const) << ", L=" << L
       << ", in=" << describe_interval(s1);
    BoundInterval merged = propagate(transfer_const.lower() * powered, rule, os.str(), s1, prior);
    return merged;
}

BoundInterval thm35_transfer_checked(const BoundInterval& s1, const BoundInterval& transfer_const,
                                     int L, const DomainSpec& model1, const DomainSpec& model2,
                                     TransferDirection dir, const BoundInterval& prior) {
    if (!model1.is_homogeneous() || !model2.is_homogeneous())
        throw ValidationError("the homogeneous transfer rule needs homogeneous model domains");
    return thm35_transfer(s1, transfer_const, L, dir, prior);
}

BoundInterval ellipsoid_example(int n, const std::vector<int>& p) {
    if (n < 1) throw ValidationError("dimension must be >= 1");
    if (p.empty()) throw ValidationError("block partition must be nonempty");
    int sum = 0;
    for (int pi : p) {
        if (pi < 1) throw ValidationError("block partition entries must be >= 1");
        sum += pi;
    }
    if (sum != n) throw ValidationError("block partition must sum to the dimension");

    const size_t k = p.size();
    DomainSpec model = validate(DomainSpec(GeneralizedEllipsoid{
        p, std::vector<double>(k, kInfiniteExponent)}));
    GeometricConstants kc = constants(model, DVector::ones(n));

    // lower route: the exact ball value transferred by the alpha/R rule
    BoundInterval lower_side = prop21_backward(exact_ball_squeezing(Point::zero(n)), kc);

    // upper route: the product formula over k unit-ball factors
    std::vector<BoundInterval> factors(k, BoundInterval(1.0, 1.0));
    BoundInterval upper_side =
        product_squeezing(factors).with_step(Rule::lemma41_upper, "k=" + std::to_string(k));

    std::vector<ProvenanceStep> steps = lower_side.provenance();
    steps.insert(steps.end(), upper_side.provenance().begin(), upper_side.provenance().end());
    steps.push_back({Rule::paper_example, "n=" + std::to_string(n) + ", k=" + std::to_string(k)});
    return BoundInterval(lower_side.lower(), upper_side.upper(), std::move(steps));
}

} // namespace squeeze
