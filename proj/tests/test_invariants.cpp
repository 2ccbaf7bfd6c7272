#include "squeeze/invariants.hpp"
#include "squeeze/domain.hpp"
#include "squeeze/geometry.hpp"

#include <doctest.h>

#include <cmath>

using namespace squeeze;

namespace {

Point pt(std::initializer_list<Complex> cs) {
    ComplexVector v(static_cast<Eigen::Index>(cs.size()));
    Eigen::Index i = 0;
    for (auto c : cs) v[i++] = c;
    return Point(std::move(v));
}

DomainSpec unit_ball(int n) { return validate(DomainSpec(Ball{n, 1.0})); }

} // namespace

TEST_CASE("poincare distance") {
    CHECK(poincare(0.0, 0.0) == 0.0);
    CHECK(poincare(0.0, 0.5) == doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
    CHECK(poincare(0.3, -0.3) == doctest::Approx(std::atanh(0.6 / 1.09)).epsilon(1e-15));
    CHECK(poincare(0.3, -0.3) == doctest::Approx(0.61903920840622328).epsilon(1e-15));
    CHECK_THROWS_AS(poincare(1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(poincare(0.0, Complex(0.8, 0.8)), ValidationError);
}

TEST_CASE("exact identity at the origin base point") {
    ComplexVector v(3);
    v << 0.3, 0.0, 0.4;
    DistanceBound b = caratheodory_star_origin(unit_ball(3), Point(v));
    CHECK(b.exact);
    CHECK(b.lower == b.upper);
    CHECK(b.lower == doctest::Approx(0.5).epsilon(1e-14));

    DistanceBound p =
        caratheodory_star_origin(validate(DomainSpec(Polydisk{{1.0, 1.0}})), pt({0.2, 0.7}));
    CHECK(p.lower == doctest::Approx(0.7).epsilon(1e-14));

    DistanceBound o = caratheodory_star_origin(unit_ball(2), Point::zero(2));
    CHECK(o.lower == 0.0);
    CHECK(o.upper == 0.0);

    CHECK_THROWS_AS(caratheodory_star_origin(unit_ball(2), pt({1.2, 0.0})), ValidationError);
}

TEST_CASE("sandwich bound") {
    SUBCASE("all-ones exponents collapse to the exact identity") {
        DistanceBound b =
            caratheodory_star_sandwich(unit_ball(2), DVector::ones(2), pt({0.3, 0.4}));
        CHECK(b.exact);
        CHECK(b.lower == b.upper);
    }
    SUBCASE("gauge power L on the lower side") {
        DistanceBound b =
            caratheodory_star_sandwich(unit_ball(2), DVector({1, 2}), pt({0.0, 0.25}));
        CHECK(b.lower == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(b.upper == doctest::Approx(0.5).epsilon(1e-12));
        CHECK_FALSE(b.exact);
    }
    SUBCASE("origin") {
        DistanceBound b = caratheodory_star_sandwich(unit_ball(2), DVector({1, 2}), Point::zero(2));
        CHECK(b.lower == 0.0);
        CHECK(b.upper == 0.0);
    }
}

TEST_CASE("sandwich ordering on sampled interior points") {
    std::vector<std::pair<DomainSpec, DVector>> cases = {
        {validate(DomainSpec(Polydisk{{1.0, 0.7}})), DVector({2, 1})},
        {validate(DomainSpec(WeightedPowerDomain{{1.0, 2.0}, {1.0, 1.5}})), DVector({2, 3})},
    };
    for (const auto& [spec, d] : cases) {
        for (const auto& z : sample_points(spec, 200, 41)) {
            DistanceBound b = caratheodory_star_sandwich(spec, d, z);
            CHECK(b.lower <= b.upper);
            CHECK(b.lower >= 0.0);
            CHECK(b.upper <= 1.0);
        }
    }
}

TEST_CASE("inclusion monotonicity against the enclosing and enclosed balls") {
    std::vector<DomainSpec> specs = {
        validate(DomainSpec(Polydisk{{1.0, 0.7}})),
        validate(DomainSpec(GeneralizedEllipsoid{{1, 2}, {2.0, 2.0}})),
    };
    for (const auto& spec : specs) {
        GeometricConstants k = constants(spec, DVector::ones(spec.dim()));
        for (const auto& z : sample_points(spec, 200, 43)) {
            double h = minkowski_gauge(spec, z).value;
            CHECK(z.coords().norm() / k.R <= h + 1e-10);
        }
        DomainSpec inner = validate(DomainSpec(Ball{spec.dim(), k.alpha}));
        for (const auto& w : sample_points(inner, 200, 44)) {
            double h = minkowski_gauge(spec, w).value;
            CHECK(h <= w.coords().norm() / k.alpha + 1e-10);
        }
    }
}
