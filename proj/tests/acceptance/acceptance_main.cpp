// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Scales and tolerances are fixed here, not configurable.

#include "squeeze/domain.hpp"
#include "squeeze/format.hpp"
#include "squeeze/gauge.hpp"
#include "squeeze/geometry.hpp"
#include "squeeze/harness.hpp"
#include "squeeze/squeezing.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace squeeze;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

void enumerate_compositions(int n, std::vector<int>& prefix,
                            const std::function<void(const std::vector<int>&)>& visit) {
    if (n == 0) {
        visit(prefix);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        prefix.push_back(first);
        enumerate_compositions(n - first, prefix, visit);
        prefix.pop_back();
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

DomainSpec product_of_balls(const std::vector<int>& p) {
    return validate(DomainSpec(
        GeneralizedEllipsoid{p, std::vector<double>(p.size(), kInfiniteExponent)}));
}

void criterion_1_and_2_and_3() {
    auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    long cases = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> prefix;
        enumerate_compositions(n, prefix, [&](const std::vector<int>& p) {
            BoundInterval b = ellipsoid_example(n, p);
            double expect = 1.0 / std::sqrt(static_cast<double>(p.size()));
            worst = std::max({worst, b.width(), std::abs(b.lower() - expect),
                              std::abs(b.upper() - expect)});
            ++cases;
        });
    }
    double elapsed = seconds_since(start);
    report(1, "every block partition of n <= 6 yields the point value 1/sqrt(k)",
           worst <= 1e-12 && elapsed < 1.0,
           std::to_string(cases) + " cases, worst " + format_double17(worst) + ", " +
               format_double17(elapsed) + " s");

    double worst_poly = 0.0;
    for (int n = 1; n <= 6; ++n) {
        BoundInterval b = ellipsoid_example(n, std::vector<int>(static_cast<size_t>(n), 1));
        double expect = 1.0 / std::sqrt(static_cast<double>(n));
        worst_poly = std::max({worst_poly, std::abs(b.lower() - expect),
                               std::abs(b.upper() - expect)});
    }
    report(2, "the all-singleton partition yields 1/sqrt(n)", worst_poly <= 1e-12,
           "worst " + format_double17(worst_poly));

    // the two routes built explicitly: the alpha/R transfer of the exact
    // ball value against the product-formula upper bound
    double worst_gap = 0.0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> prefix;
        enumerate_compositions(n, prefix, [&](const std::vector<int>& p) {
            GeometricConstants k = constants(product_of_balls(p), DVector::ones(n));
            double lower = prop21_backward(exact_ball_squeezing(Point::zero(n)), k).lower();
            std::vector<BoundInterval> ones(p.size(), BoundInterval(1.0, 1.0));
            double upper = product_squeezing(ones).upper();
            worst_gap = std::max(worst_gap, std::abs(upper - lower));
        });
    }
    report(3, "the transfer lower bound meets the product-formula upper bound",
           worst_gap <= 1e-12, "worst gap " + format_double17(worst_gap));
}

void criterion_from_suite(int criterion, const std::string& what, const std::string& suite,
                          long samples, double time_budget = -1.0) {
    HarnessConfig cfg;
    cfg.samples = samples;
    cfg.seed = 42;
    auto start = std::chrono::steady_clock::now();
    VerificationReport r = run_suite(suite, cfg);
    double elapsed = seconds_since(start);
    bool ok = r.passed() && (time_budget < 0.0 || elapsed < time_budget);
    std::string detail = std::to_string(r.cases_run) + " cases, max violation " +
                         format_double17(r.max_violation) + " vs tol " +
                         format_double17(r.tolerance) + ", " + format_double17(elapsed) + " s";
    report(criterion, what, ok, detail);
}

void criterion_7() {
    HarnessConfig cfg;
    cfg.samples = 1000;
    cfg.seed = 42;
    VerificationReport sandwich = run_suite("sandwich_ordering", cfg);
    VerificationReport domination = run_suite("caratheodory_domination", cfg);
    bool ok = sandwich.passed() && domination.passed();
    report(7, "sandwich ordering and inclusion monotonicity hold with zero violations", ok,
           "sandwich max " + format_double17(sandwich.max_violation) + ", domination max " +
               format_double17(domination.max_violation));
}

void criterion_9() {
    struct Model {
        DomainSpec spec;
        bool is_ball;
    };
    std::vector<Model> models = {
        {validate(DomainSpec(Ball{2, 1.0})), true},
        {validate(DomainSpec(Ball{4, 0.7})), true},
        {validate(DomainSpec(Polydisk{{1.0, 0.7}})), false},
        {validate(DomainSpec(GeneralizedEllipsoid{{1, 2}, {2.0, 2.0}})), false},
        {product_of_balls({1, 1, 1}), false},
    };
    bool ok = true;
    std::string detail;
    for (const auto& m : models) {
        GeometricConstants k = constants(m.spec, DVector::ones(m.spec.dim()));
        double composed =
            prop21_backward(prop21_forward(BoundInterval(1.0, 1.0), k), k).lower();
        double ratio = k.alpha / k.R;
        if (!same_bits(composed, ratio * ratio)) {
            ok = false;
            detail = m.spec.describe() + ": factor differs from the squared ratio";
        }
        if (m.is_ball && composed != 1.0) {
            ok = false;
            detail = m.spec.describe() + ": ball round trip is not the identity";
        }
        if (!m.is_ball && !(composed < 1.0)) {
            ok = false;
            detail = m.spec.describe() + ": non-ball round trip fails to contract";
        }
    }
    report(9, "the round-trip factor is exactly the squared ratio, 1 only for balls", ok, detail);
}

} // namespace

int main() {
    criterion_1_and_2_and_3();
    criterion_from_suite(4, "scaling identity for sublevel gauges at 1e-8", "lemma36", 1000, 10.0);
    criterion_from_suite(5, "anisotropic gauge homogeneity at 1e-9", "gauge_homogeneity", 1000);
    criterion_from_suite(6, "analytic constants match the direction oracle at 1e-3",
                         "constants_oracle", 100000);
    criterion_7();
    criterion_from_suite(8, "corollary transfers equal their compositions bit for bit",
                         "corollary_composition", 1000);
    criterion_9();

    if (g_failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << g_failures << " acceptance criteria FAILED\n";
    return g_failures == 0 ? 0 : 1;
}
