#include "squeeze/harness.hpp"

#include "squeeze/domain.hpp"
#include "squeeze/format.hpp"
#include "squeeze/gauge.hpp"
#include "squeeze/geometry.hpp"
#include "squeeze/invariants.hpp"
#include "squeeze/squeezing.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>

namespace squeeze {

namespace {

struct SuiteRun {
    VerificationReport report;

    void record(double violation, std::string inputs, double expected, double actual) {
        ++report.cases_run;
        report.max_violation = std::max(report.max_violation, violation);
        if (violation > report.tolerance)
            report.failures.push_back({std::move(inputs), expected, actual, report.tolerance});
    }
};

std::string show_point(const Point& z) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < z.dim(); ++i) {
        if (i) os << ", ";
        os << "(" << format_double17(z.coords()[i].real()) << ","
           << format_double17(z.coords()[i].imag()) << ")";
    }
    os << "]";
    return os.str();
}

std::string show_d(const DVector& d) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < d.exponents().size(); ++i) os << (i ? "," : "") << d.exponents()[i];
    os << ")";
    return os.str();
}

struct Family {
    DomainSpec spec;
    DVector d;
};

/// Dimension-2 families exercising every gauge code path, each with a
/// nontrivial exponent tuple.
std::vector<Family> planar_families() {
    return {
        {validate(DomainSpec(Ball{2, 1.0})), DVector({1, 2})},
        {validate(DomainSpec(Polydisk{{1.0, 0.7}})), DVector({2, 1})},
        {validate(DomainSpec(GeneralizedEllipsoid{{1, 1}, {1.0, 2.0}})), DVector({1, 2})},
        {validate(DomainSpec(WeightedPowerDomain{{1.0, 2.0}, {1.0, 1.5}})), DVector({2, 3})},
    };
}

/// Extra family with mixed finite/infinite blocks (dimension 3).
Family mixed_block_family() {
    return {validate(DomainSpec(GeneralizedEllipsoid{{2, 1}, {1.5, kInfiniteExponent}})),
            DVector({1, 1, 2})};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    return x;
}

// ---------------------------------------------------------------------------
// suites

void suite_gauge_homogeneity(SuiteRun& run, const HarnessConfig& cfg) {
    auto families = planar_families();
    families.push_back(mixed_block_family());
    const long per_family = std::max<long>(0, cfg.samples / static_cast<long>(families.size()));
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const auto& [spec, d] = families[fi];
        auto points = sample_points(spec, static_cast<int>(per_family), mix_seed(cfg.seed, fi));
        for (const auto& z : points) {
            double h = d_minkowski_gauge(spec, d, z).value;
            double scale = std::max(1.0, h);
            for (int mi = 0; mi < 16; ++mi) {
                double modulus = 0.1 + 1.5 * mi / 15.0;
                for (int pi = 0; pi < 16; ++pi) {
                    double phase = 2.0 * M_PI * pi / 16.0;
                    Complex lambda = std::polar(modulus, phase);
                    Point w = anisotropic_scale(z, d, lambda);
                    double hw = d_minkowski_gauge(spec, d, w).value;
                    double violation = std::abs(hw - modulus * h) / scale;
                    if (violation > run.report.tolerance) {
                        std::ostringstream os;
                        os << spec.describe() << ", d=" << show_d(d) << ", z=" << show_point(z)
                           << ", lambda=(" << format_double17(lambda.real()) << ","
                           << format_double17(lambda.imag()) << ")";
                        run.record(violation, os.str(), modulus * h, hw);
                    } else {
                        run.record(violation, "", modulus * h, hw);
                    }
                }
            }
        }
    }
}

void suite_gauge_unit_level(SuiteRun& run, const HarnessConfig& cfg) {
    auto families = planar_families();
    families.push_back(mixed_block_family());
    const long per_family = std::max<long>(0, cfg.samples / static_cast<long>(families.size()));
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const auto& [spec, d] = families[fi];
        auto points = sample_points(spec, static_cast<int>(per_family), mix_seed(cfg.seed, 100 + fi));
        for (const auto& z : points) {
            // one interior and one derived exterior point per sample
            for (int variant = 0; variant < 2; ++variant) {
                Point w = z;
                if (variant == 1) {
                    double h0 = d_minkowski_gauge(spec, d, z).value;
                    if (h0 <= 0.0) continue;
                    w = anisotropic_scale(z, d, Complex(1.25 / h0, 0.0));
                }
                double h = d_minkowski_gauge(spec, d, w).value;
                if (std::abs(h - 1.0) <= 1e-9) continue;  // boundary band
                bool inside = contains(spec, w);
                bool gauge_inside = h < 1.0;
                double violation = inside == gauge_inside ? 0.0 : 1.0;
                std::ostringstream os;
                if (violation > 0.0)
                    os << spec.describe() << ", z=" << show_point(w) << ", h=" << h
                       << ", contains=" << inside;
                run.record(violation, os.str(), gauge_inside ? 1.0 : 0.0, inside ? 1.0 : 0.0);
            }
        }
    }
}

void suite_gauge_closed_vs_bisection(SuiteRun& run, const HarnessConfig& cfg) {
    std::vector<DomainSpec> specs = {
        validate(DomainSpec(Ball{3, 1.0})),
        validate(DomainSpec(Polydisk{{1.0, 0.7, 1.3}})),
        validate(DomainSpec(GeneralizedEllipsoid{{2, 2}, {kInfiniteExponent, kInfiniteExponent}})),
        validate(DomainSpec(Product{{validate(DomainSpec(Ball{2, 1.0})),
                                     validate(DomainSpec(Polydisk{{0.5, 2.0}}))}})),
    };
    const long per_spec = std::max<long>(0, cfg.samples / static_cast<long>(specs.size()));
    for (size_t si = 0; si < specs.size(); ++si) {
        const auto& spec = specs[si];
        DVector ones = DVector::ones(spec.dim());
        auto points = sample_points(spec, static_cast<int>(per_spec), mix_seed(cfg.seed, 200 + si));
        for (size_t k = 0; k < points.size(); ++k) {
            Point z = points[k];
            if (k % 3 == 2) {  // push a third of the samples outside
                double h0 = minkowski_gauge(spec, z).value;
                if (h0 > 0.0) z = anisotropic_scale(z, ones, Complex(1.5 / h0, 0.0));
            }
            GaugeResult closed = minkowski_gauge(spec, z);
            GaugeResult bis = d_minkowski_gauge(spec, ones, z);
            double violation = std::abs(closed.value - bis.value);
            std::ostringstream os;
            if (violation > run.report.tolerance)
                os << spec.describe() << ", z=" << show_point(z);
            run.record(violation, os.str(), closed.value, bis.value);
        }
    }
}

void suite_lemma36(SuiteRun& run, const HarnessConfig& cfg) {
    const auto families = planar_families();
    const double levels[] = {0.1, 0.5, 0.9, 1.0};
    const std::vector<DVector> tuples = {DVector({1, 1}), DVector({1, 2}), DVector({2, 3})};
    const long per_family = std::max<long>(0, cfg.samples / static_cast<long>(families.size()));
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const auto& spec = families[fi].spec;
        auto points = sample_points(spec, static_cast<int>(per_family), mix_seed(cfg.seed, 300 + fi));
        for (const auto& z : points) {
            for (const auto& d : tuples) {
                double h = d_minkowski_gauge(spec, d, z).value;
                for (double r : levels) {
                    DomainSpec sub = sublevel(spec, d, r);
                    double hs = d_minkowski_gauge(sub, d, z).value;
                    double violation = std::abs(hs - h / r);
                    std::ostringstream os;
                    if (violation > run.report.tolerance)
                        os << spec.describe() << ", d=" << show_d(d) << ", r=" << r
                           << ", z=" << show_point(z);
                    run.record(violation, os.str(), h / r, hs);
                }
            }
        }
    }
}

void suite_sandwich_ordering(SuiteRun& run, const HarnessConfig& cfg) {
    auto families = planar_families();
    families.push_back(mixed_block_family());
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const auto& [spec, d] = families[fi];
        auto points =
            sample_points(spec, static_cast<int>(cfg.samples), mix_seed(cfg.seed, 400 + fi));
        for (const auto& z : points) {
            DistanceBound b = caratheodory_star_sandwich(spec, d, z);
            double violation = std::max(0.0, b.lower - b.upper);
            std::ostringstream os;
            if (violation > run.report.tolerance)
                os << spec.describe() << ", d=" << show_d(d) << ", z=" << show_point(z);
            run.record(violation, os.str(), b.upper, b.lower);
        }
    }
}

void suite_caratheodory_domination(SuiteRun& run, const HarnessConfig& cfg) {
    // families with analytic alpha and R
    std::vector<DomainSpec> specs = {
        validate(DomainSpec(Ball{2, 0.8})),
        validate(DomainSpec(Polydisk{{1.0, 0.7}})),
        validate(DomainSpec(GeneralizedEllipsoid{{1, 2}, {2.0, 2.0}})),
        validate(DomainSpec(
            GeneralizedEllipsoid{{1, 1, 1}, {kInfiniteExponent, kInfiniteExponent, kInfiniteExponent}})),
    };
    for (size_t si = 0; si < specs.size(); ++si) {
        const auto& spec = specs[si];
        GeometricConstants k = constants(spec, DVector::ones(spec.dim()));
        auto inside = sample_points(spec, static_cast<int>(cfg.samples), mix_seed(cfg.seed, 500 + si));
        for (const auto& z : inside) {
            // the model sits inside the R-ball, so the R-ball quotient
            // bounds the gauge from below
            double lhs = z.coords().norm() / k.R;
            double h = minkowski_gauge(spec, z).value;
            double violation = std::max(0.0, lhs - h);
            std::ostringstream os;
            if (violation > run.report.tolerance)
                os << spec.describe() << " (outer), z=" << show_point(z);
            run.record(violation, os.str(), h, lhs);
        }
        DomainSpec inner_ball = validate(DomainSpec(Ball{spec.dim(), k.alpha}));
        auto inner =
            sample_points(inner_ball, static_cast<int>(cfg.samples), mix_seed(cfg.seed, 550 + si));
        for (const auto& w : inner) {
            // the alpha-ball sits inside the model, so the gauge is bounded
            // by the alpha-ball quotient
            double h = minkowski_gauge(spec, w).value;
            double rhs = w.coords().norm() / k.alpha;
            double violation = std::max(0.0, h - rhs);
            std::ostringstream os;
            if (violation > run.report.tolerance)
                os << spec.describe() << " (inner), z=" << show_point(w);
            run.record(violation, os.str(), rhs, h);
        }
    }
}

void suite_constants_oracle(SuiteRun& run, const HarnessConfig& cfg) {
    if (cfg.samples == 0) return;
    std::vector<DomainSpec> specs = {
        validate(DomainSpec(Ball{3, 1.0})),
        validate(DomainSpec(Ball{8, 1.0})),
        validate(DomainSpec(Polydisk{{1.0, 1.0}})),
        validate(DomainSpec(Polydisk{{1.0, 0.5, 2.0, 1.0}})),
        validate(DomainSpec(
            GeneralizedEllipsoid{{1, 1, 1}, {kInfiniteExponent, kInfiniteExponent, kInfiniteExponent}})),
        validate(DomainSpec(GeneralizedEllipsoid{{2, 3}, {kInfiniteExponent, kInfiniteExponent}})),
        validate(DomainSpec(GeneralizedEllipsoid{
            {2, 2, 2, 2},
            {kInfiniteExponent, kInfiniteExponent, kInfiniteExponent, kInfiniteExponent}})),
    };
    for (size_t si = 0; si < specs.size(); ++si) {
        const auto& spec = specs[si];
        GeometricConstants k = constants(spec, DVector::ones(spec.dim()));
        auto [a_est, r_est] = extremal_radii_oracle(spec, static_cast<int>(cfg.samples),
                                                    mix_seed(cfg.seed, 600 + si));
        // relative agreement plus the one-sided property of the estimates
        double rel_a = std::abs(a_est - k.alpha) / k.alpha;
        double breach_a = std::max(0.0, (k.alpha - 1e-9) - a_est) / k.alpha;
        double va = std::max(rel_a, breach_a > 0.0 ? run.report.tolerance + breach_a : 0.0);
        run.record(va, va > run.report.tolerance ? spec.describe() + " (alpha)" : "", k.alpha, a_est);

        double rel_r = std::abs(r_est - k.R) / k.R;
        double breach_r = std::max(0.0, r_est - (k.R + 1e-9)) / k.R;
        double vr = std::max(rel_r, breach_r > 0.0 ? run.report.tolerance + breach_r : 0.0);
        run.record(vr, vr > run.report.tolerance ? spec.describe() + " (R)" : "", k.R, r_est);
    }
}

GeometricConstants random_constants(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    GeometricConstants k;
    k.alpha = 0.2 + 0.8 * unif(rng);
    k.R = k.alpha * (1.0 + 2.0 * unif(rng));
    k.P = k.R + 1.0;
    k.L = 1 + static_cast<int>(unif(rng) * 3.0);
    return k;
}

BoundInterval random_interval(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double a = unif(rng), b = unif(rng);
    return BoundInterval(std::min(a, b), std::max(a, b));
}

void suite_interval_sanity(SuiteRun& run, const HarnessConfig& cfg) {
    std::mt19937_64 rng(mix_seed(cfg.seed, 700));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long i = 0; i < cfg.samples; ++i) {
        BoundInterval in = random_interval(rng);
        GeometricConstants k1 = random_constants(rng);
        GeometricConstants k2 = random_constants(rng);
        BoundInterval prior(unif(rng) * 0.5, 1.0);

        std::vector<BoundInterval> results = {
            prop21_forward(in, k1, prior),
            prop21_backward(in, k1, prior),
            cor23_transfer(in, k1, k2, TransferDirection::forward, prior),
            cor23_transfer(in, k1, k2, TransferDirection::reverse, prior),
            prop32_forward(in, k1, prior),
            prop32_backward(in, k1, prior),
            cor33_transfer(in, k1, k2, TransferDirection::forward, prior),
            cor33_transfer(in, k1, k2, TransferDirection::reverse, prior),
            thm35_transfer(in, random_interval(rng), k1.L, TransferDirection::forward, prior),
            product_squeezing({in, random_interval(rng)}),
        };
        double violation = 0.0;
        for (size_t ri = 0; ri < results.size(); ++ri) {
            const auto& r = results[ri];
            bool in_range = r.lower() >= 0.0 && r.lower() <= r.upper() && r.upper() <= 1.0;
            bool named = std::string(rule_name(r.provenance().back().rule)) != "?";
            bool monotone = ri == results.size() - 1 || r.lower() >= prior.lower();
            if (!(in_range && named && monotone)) violation = 1.0;
        }
        std::ostringstream os;
        if (violation > 0.0)
            os << "in=[" << in.lower() << "," << in.upper() << "], prior.lower=" << prior.lower();
        run.record(violation, os.str(), 0.0, violation);
    }
}

void suite_corollary_composition(SuiteRun& run, const HarnessConfig& cfg) {
    std::mt19937_64 rng(mix_seed(cfg.seed, 800));
    auto bits = [](double x) { return std::bit_cast<std::uint64_t>(x); };
    for (long i = 0; i < cfg.samples; ++i) {
        BoundInterval in = random_interval(rng);
        GeometricConstants k1 = random_constants(rng);
        GeometricConstants k2 = random_constants(rng);

        BoundInterval c23 = cor23_transfer(in, k1, k2);
        BoundInterval two21 = prop21_backward(prop21_forward(in, k1), k2);
        bool ok = bits(c23.lower()) == bits(two21.lower()) && bits(c23.upper()) == bits(two21.upper());

        BoundInterval c33 = cor33_transfer(in, k1, k2);
        BoundInterval two32 = prop32_backward(prop32_forward(in, k1), k2);
        ok = ok && bits(c33.lower()) == bits(two32.lower()) && bits(c33.upper()) == bits(two32.upper());

        BoundInterval c33r = cor33_transfer(in, k1, k2, TransferDirection::reverse);
        BoundInterval two32r = prop32_backward(prop32_forward(in, k2), k1);
        ok = ok && bits(c33r.lower()) == bits(two32r.lower());

        double violation = ok ? 0.0 : 1.0;
        std::ostringstream os;
        if (!ok)
            os << "in=[" << format_double17(in.lower()) << "," << format_double17(in.upper())
               << "], alpha1=" << format_double17(k1.alpha) << ", R1=" << format_double17(k1.R)
               << ", alpha2=" << format_double17(k2.alpha) << ", R2=" << format_double17(k2.R);
        run.record(violation, os.str(), two21.lower(), c23.lower());
    }
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

void suite_ellipsoid_tightness(SuiteRun& run, const HarnessConfig& cfg) {
    if (cfg.samples == 0) return;
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> prefix;
        enumerate_compositions(n, prefix, [&](const std::vector<int>& p) {
            BoundInterval b = ellipsoid_example(n, p);
            double expect = 1.0 / std::sqrt(static_cast<double>(p.size()));
            double violation = std::max({b.width(), std::abs(b.lower() - expect),
                                         std::abs(b.upper() - expect)});
            std::ostringstream os;
            if (violation > run.report.tolerance) {
                os << "n=" << n << ", p=(";
                for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
                os << ")";
            }
            run.record(violation, os.str(), expect, b.lower());
        });
    }
}

void suite_prop_collapse_d1(SuiteRun& run, const HarnessConfig& cfg) {
    if (cfg.samples == 0) return;
    std::vector<DomainSpec> models = {
        validate(DomainSpec(Ball{2, 1.0})),
        validate(DomainSpec(Polydisk{{1.0, 0.7}})),
        validate(DomainSpec(GeneralizedEllipsoid{{1, 2}, {2.0, 2.0}})),
        validate(DomainSpec(
            GeneralizedEllipsoid{{1, 1, 1}, {kInfiniteExponent, kInfiniteExponent, kInfiniteExponent}})),
    };
    auto bits = [](double x) { return std::bit_cast<std::uint64_t>(x); };
    BoundInterval one(1.0, 1.0);
    for (const auto& spec : models) {
        GeometricConstants k = constants(spec, DVector::ones(spec.dim()));
        double p21b = prop21_backward(one, k).lower();
        double p32b = prop32_backward(one, k).lower();
        double same = bits(p21b) == bits(p32b) ? 0.0 : 1.0;
        run.record(same, same > 0.0 ? spec.describe() + " (backward factors differ)" : "", p21b,
                   p32b);

        double p21f = prop21_forward(one, k).lower();
        double p32f = prop32_forward(one, k).lower();
        double ordered = p32f < p21f ? 0.0 : 1.0;  // alpha/(R+1) < alpha/R strictly
        run.record(ordered, ordered > 0.0 ? spec.describe() + " (forward not weaker)" : "", p21f,
                   p32f);
    }
}

struct SuiteEntry {
    const char* name;
    double default_tolerance;
    void (*fn)(SuiteRun&, const HarnessConfig&);
};

const SuiteEntry kSuites[] = {
    {"gauge_homogeneity", 1e-9, suite_gauge_homogeneity},
    {"gauge_unit_level", 0.0, suite_gauge_unit_level},
    {"gauge_closed_vs_bisection", 1e-9, suite_gauge_closed_vs_bisection},
    {"lemma36", 1e-8, suite_lemma36},
    {"sandwich_ordering", 0.0, suite_sandwich_ordering},
    {"caratheodory_domination", 1e-10, suite_caratheodory_domination},
    {"constants_oracle", 1e-3, suite_constants_oracle},
    {"interval_sanity", 0.0, suite_interval_sanity},
    {"corollary_composition", 0.0, suite_corollary_composition},
    {"ellipsoid_tightness", 1e-12, suite_ellipsoid_tightness},
    {"prop_collapse_d1", 0.0, suite_prop_collapse_d1},
};

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const HarnessConfig& config) {
    for (const auto& entry : kSuites) {
        if (name != entry.name) continue;
        SuiteRun run;
        run.report.suite = name;
        run.report.seed = config.seed;
        run.report.tolerance = config.tolerance.value_or(entry.default_tolerance);
        auto start = std::chrono::steady_clock::now();
        entry.fn(run, config);
        run.report.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return run.report;
    }
    throw ValidationError("unknown suite name: " + name);
}

std::vector<VerificationReport> run_all(const HarnessConfig& config) {
    std::vector<VerificationReport> reports;
    for (const auto& entry : kSuites) reports.push_back(run_suite(entry.name, config));
    return reports;
}

std::string report_to_json(const VerificationReport& report, bool include_wall_time) {
    std::ostringstream os;
    os << "{\"suite\":\"" << report.suite << "\",\"cases_run\":" << report.cases_run
       << ",\"failures\":[";
    for (size_t i = 0; i < report.failures.size(); ++i) {
        const auto& f = report.failures[i];
        if (i) os << ",";
        std::string quoted;
        for (char c : f.inputs) {
            if (c == '"' || c == '\\') quoted += '\\';
            quoted += c;
        }
        os << "{\"inputs\":\"" << quoted << "\",\"expected\":" << format_double17(f.expected)
           << ",\"actual\":" << format_double17(f.actual)
           << ",\"tolerance\":" << format_double17(f.tolerance) << "}";
    }
    os << "],\"max_violation\":" << format_double17(report.max_violation)
       << ",\"tolerance\":" << format_double17(report.tolerance) << ",\"seed\":" << report.seed
       << ",\"passed\":" << (report.passed() ? "true" : "false")
       << ",\"vacuous\":" << (report.vacuous() ? "true" : "false");
    if (include_wall_time) os << ",\"wall_time\":" << format_double17(report.wall_time);
    os << "}";
    return os.str();
}

} // namespace squeeze
