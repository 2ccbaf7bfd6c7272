#include "squeeze/geometry.hpp"

#include "squeeze/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace squeeze {

namespace {

double radius_along(const DomainSpec& spec, const ComplexVector& u) {
    // boundary point along a unit direction u is u / h(u)
    return 1.0 / minkowski_gauge(spec, Point(u)).value;
}

double radius_along_moduli(const DomainSpec& spec, const Eigen::VectorXd& x) {
    return radius_along(spec, x.cast<Complex>());
}

std::optional<std::pair<double, double>> analytic_alpha_R(const DomainSpec& spec) {
    if (const auto* b = spec.get_if<Ball>()) return std::make_pair(b->radius, b->radius);

    if (const auto* p = spec.get_if<Polydisk>()) {
        double lo = p->radii[0], sq = 0.0;
        for (double r : p->radii) {
            lo = std::min(lo, r);
            sq += r * r;
        }
        return std::make_pair(lo, std::sqrt(sq));
    }

    if (const auto* e = spec.get_if<GeneralizedEllipsoid>()) {
        const double k = static_cast<double>(e->block_dims.size());
        bool all_inf = true, all_equal_ge1 = true;
        double m0 = e->exponents[0];
        for (double m : e->exponents) {
            if (!std::isinf(m)) all_inf = false;
            if (m != m0 || (std::isfinite(m) && m < 1.0)) all_equal_ge1 = false;
        }
        if (all_inf) return std::make_pair(1.0, std::sqrt(k));
        if (all_equal_ge1 && std::isfinite(m0))
            // extremes of sum ||z_j||^{2m} on the unit sphere sit at an axis
            // block (radius 1) and at the balanced diagonal
            return std::make_pair(1.0, std::pow(k, (m0 - 1.0) / (2.0 * m0)));
        return std::nullopt;
    }

    if (const auto* pr = spec.get_if<Product>()) {
        double lo = std::numeric_limits<double>::infinity(), sq = 0.0;
        for (const auto& f : pr->factors) {
            auto c = analytic_alpha_R(f);
            if (!c) return std::nullopt;
            lo = std::min(lo, c->first);
            sq += c->second * c->second;
        }
        return std::make_pair(lo, std::sqrt(sq));
    }

    if (const auto* s = spec.get_if<Sublevel>()) {
        // the all-ones sublevel set is the r-dilate of its base
        if (!s->d.all_ones()) return std::nullopt;
        auto c = analytic_alpha_R(*s->base);
        if (!c) return std::nullopt;
        return std::make_pair(c->first * s->level, c->second * s->level);
    }

    return std::nullopt;  // weighted power domains have no closed form here
}

/// Line search over [lo, hi]. A coarse grid locates the extreme value; when
/// several grid points tie (the objective can be flat across a rotation that
/// only moves inactive coordinates of a max-type gauge), the center of the
/// tied band is taken so the move still makes progress, then a local
/// golden-section pass polishes smooth objectives.
template <typename Fn>
double line_extremum(Fn&& f, double lo, double hi, bool maximize) {
    constexpr int kGrid = 48;
    double values[kGrid + 1];
    double best_val = maximize ? -std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::infinity();
    for (int g = 0; g <= kGrid; ++g) {
        values[g] = f(lo + (hi - lo) * g / kGrid);
        best_val = maximize ? std::max(best_val, values[g]) : std::min(best_val, values[g]);
    }
    double band_tol = 1e-12 * std::max(1.0, std::abs(best_val));
    auto in_band = [&](int g) { return std::abs(values[g] - best_val) <= band_tol; };

    // longest run of consecutive tied grid points
    int best_start = 0, best_len = 0;
    for (int g = 0; g <= kGrid;) {
        if (!in_band(g)) {
            ++g;
            continue;
        }
        int start = g;
        while (g <= kGrid && in_band(g)) ++g;
        if (g - start > best_len) {
            best_len = g - start;
            best_start = start;
        }
    }
    double step = (hi - lo) / kGrid;
    double center = lo + step * (best_start + (best_len - 1) / 2.0);

    // polish within one grid cell on each side
    double a = std::max(lo, center - step), b = std::min(hi, center + step);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < 40; ++i) {
        bool keep_left = maximize ? (fc > fd) : (fc < fd);
        if (keep_left) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    double mid = 0.5 * (a + b);
    bool mid_better = maximize ? f(mid) >= best_val : f(mid) <= best_val;
    return mid_better ? mid : center;
}

/// Refines a candidate modulus direction. Each sweep runs a cyclic
/// two-coordinate rotation pass, then a pass of random great-circle polls;
/// the random directions are what lets max-type gauges make progress where
/// every coordinate rotation is flat (the known failure mode of pure
/// coordinate polling on nonsmooth objectives). Every estimate comes from an
/// actual gauge evaluation, so refinement only tightens the one-sided bound.
double refine_moduli(const DomainSpec& spec, Eigen::VectorXd x, bool maximize, int sweeps,
                     std::uint64_t seed) {
    const int n = static_cast<int>(x.size());
    double best = radius_along_moduli(spec, x);
    if (n == 1) return best;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double rho = std::hypot(x[i], x[j]);
                if (rho < 1e-14) continue;
                auto eval = [&](double phi) {
                    Eigen::VectorXd y = x;
                    y[i] = rho * std::cos(phi);
                    y[j] = rho * std::sin(phi);
                    return radius_along_moduli(spec, y);
                };
                // moduli live in the closed positive orthant
                double phi = line_extremum(eval, 0.0, M_PI / 2.0, maximize);
                double val = eval(phi);
                bool better = maximize ? (val > best) : (val < best);
                bool tie = std::abs(val - best) <= 1e-12 * std::max(1.0, std::abs(best));
                if (better || tie) {
                    double xi = rho * std::cos(phi), xj = rho * std::sin(phi);
                    moved += std::abs(xi - x[i]) + std::abs(xj - x[j]) + std::abs(val - best);
                    if (better) best = val;
                    x[i] = xi;
                    x[j] = xj;
                }
            }
        }
        for (int poll = 0; poll < 8 * n; ++poll) {
            Eigen::VectorXd w(n);
            for (int i = 0; i < n; ++i) w[i] = gauss(rng);
            w -= w.dot(x) * x;
            double wn = w.norm();
            if (wn < 1e-12) continue;
            w /= wn;
            auto eval = [&](double phi) {
                // folding into the modulus orthant preserves the norm
                return radius_along_moduli(spec,
                                           (x * std::cos(phi) + w * std::sin(phi)).cwiseAbs());
            };
            double phi = line_extremum(eval, -0.6, 0.6, maximize);
            double val = eval(phi);
            if (maximize ? (val > best) : (val < best)) {
                moved += std::abs(val - best);
                best = val;
                x = (x * std::cos(phi) + w * std::sin(phi)).cwiseAbs();
            }
        }
        if (moved < 1e-12) break;
    }
    return best;
}

std::pair<double, double> run_oracle(const DomainSpec& spec, const OracleOptions& opts) {
    const int n = spec.dim();
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    struct Candidate {
        double value;
        Eigen::VectorXd moduli;
    };
    std::vector<Candidate> lowest, highest;
    double min_seen = std::numeric_limits<double>::infinity();
    double max_seen = 0.0;

    auto keep = [&](std::vector<Candidate>& pool, Candidate c, bool maximize) {
        pool.push_back(std::move(c));
        std::sort(pool.begin(), pool.end(), [&](const Candidate& a, const Candidate& b) {
            return maximize ? a.value > b.value : a.value < b.value;
        });
        if (static_cast<int>(pool.size()) > opts.refine_starts) pool.pop_back();
    };

    for (int it = 0; it < std::max(1, opts.directions); ++it) {
        ComplexVector u(n);
        for (int i = 0; i < n; ++i) u[i] = Complex(gauss(rng), gauss(rng));
        double nrm = u.norm();
        if (nrm == 0.0) continue;
        u /= nrm;
        double r = radius_along(spec, u);
        min_seen = std::min(min_seen, r);
        max_seen = std::max(max_seen, r);
        Eigen::VectorXd x = u.cwiseAbs();
        if (static_cast<int>(lowest.size()) < opts.refine_starts || r < lowest.back().value)
            keep(lowest, {r, x}, false);
        if (static_cast<int>(highest.size()) < opts.refine_starts || r > highest.back().value)
            keep(highest, {r, x}, true);
    }

    std::uint64_t salt = opts.seed;
    for (const auto& c : lowest)
        min_seen =
            std::min(min_seen, refine_moduli(spec, c.moduli, false, opts.refine_sweeps, ++salt));
    for (const auto& c : highest)
        max_seen =
            std::max(max_seen, refine_moduli(spec, c.moduli, true, opts.refine_sweeps, ++salt));

    return {min_seen, max_seen};
}

} // namespace

std::pair<double, double> extremal_radii_oracle(const DomainSpec& spec, int directions,
                                                std::uint64_t seed) {
    OracleOptions opts;
    opts.directions = directions;
    opts.seed = seed;
    return run_oracle(spec, opts);
}

std::pair<double, double> extremal_radii_oracle(const DomainSpec& spec, const OracleOptions& opts) {
    return run_oracle(spec, opts);
}

GeometricConstants constants(const DomainSpec& spec, const DVector& d, const OracleOptions& opts) {
    if (d.dim() != spec.dim())
        throw ValidationError("exponent tuple/domain dimension mismatch");
    if (!spec.is_balanced())
        throw ValidationError("constants require a balanced domain");

    GeometricConstants out;
    out.L = d.max_exponent();
    if (auto analytic = analytic_alpha_R(spec)) {
        out.alpha = analytic->first;
        out.R = analytic->second;
        out.method = ConstantsMethod::analytic;
    } else {
        auto est = run_oracle(spec, opts);
        out.alpha = est.first;
        out.R = est.second;
        out.method = ConstantsMethod::sampled;
    }
    out.P = out.R + 1.0;
    return out;
}

double bounding_radius(const DomainSpec& spec) {
    if (const auto* b = spec.get_if<Ball>()) return b->radius;

    if (const auto* p = spec.get_if<Polydisk>()) {
        double sq = 0.0;
        for (double r : p->radii) sq += r * r;
        return std::sqrt(sq);
    }

    if (const auto* e = spec.get_if<GeneralizedEllipsoid>())
        return std::sqrt(static_cast<double>(e->block_dims.size()));  // each block norm < 1

    if (const auto* w = spec.get_if<WeightedPowerDomain>()) {
        double sq = 0.0;
        for (size_t i = 0; i < w->weights.size(); ++i) {
            double bound = std::pow(w->weights[i], -1.0 / (2.0 * w->powers[i]));
            sq += bound * bound;
        }
        return std::sqrt(sq);
    }

    if (const auto* pr = spec.get_if<Product>()) {
        double sq = 0.0;
        for (const auto& f : pr->factors) {
            double b = bounding_radius(f);
            sq += b * b;
        }
        return std::sqrt(sq);
    }

    const auto* s = spec.get_if<Sublevel>();
    // z in the sublevel set means z_i = r^{d_i} w_i with w in the base
    return s->level * bounding_radius(*s->base);
}

} // namespace squeeze
