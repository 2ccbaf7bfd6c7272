#include "squeeze/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace squeeze {

namespace {

Point scale_point(const Point& z, const DVector& d, double t) {
    ComplexVector out(z.dim());
    for (int i = 0; i < z.dim(); ++i)
        out[i] = z.coords()[i] / std::pow(t, static_cast<double>(d.exponents()[static_cast<size_t>(i)]));
    return Point(std::move(out));
}

void check_dims(const DomainSpec& spec, const DVector& d, const Point& z) {
    if (z.dim() != spec.dim()) throw ValidationError("point/domain dimension mismatch");
    if (d.dim() != spec.dim()) throw ValidationError("exponent tuple/domain dimension mismatch");
}

/// Bracketed bisection for a continuous strictly decreasing g with a root in
/// (0, inf). Stops when the bracket is tight and the equation residual at
/// the midpoint is within tolerance.
template <typename Fn>
GaugeResult bisect_monotone(Fn&& g, const GaugeOptions& opts) {
    constexpr double t_floor = std::numeric_limits<double>::epsilon();
    double t_lo, t_hi;
    double g1 = g(1.0);
    if (g1 <= 0.0) {
        // root at or below 1
        t_hi = 1.0;
        double t = 0.5;
        while (g(t) < 0.0) {
            t_hi = t;
            t *= 0.5;
            if (t < t_floor) return {t_floor, GaugeMethod::bisection, std::abs(g(t_floor))};
        }
        t_lo = t;
    } else {
        t_lo = 1.0;
        t_hi = 2.0;
        int guard = 0;
        while (g(t_hi) > 0.0) {
            t_lo = t_hi;
            t_hi *= 2.0;
            if (++guard > 1024)
                throw ConvergenceError(
                    "gauge bracketing failed: membership is not monotone along the dilation "
                    "(domain is not d-balanced for this exponent tuple, or is unbounded)");
        }
    }

    double mid = 0.5 * (t_lo + t_hi);
    double gm = g(mid);
    int iter = 0;
    while (t_hi - t_lo > opts.tolerance * (1.0 + t_hi) || std::abs(gm) > opts.tolerance) {
        if (++iter > opts.max_iterations)
            throw ConvergenceError("gauge bisection exceeded its iteration cap; "
                                   "the tolerance is too tight for double precision");
        if (gm > 0.0)
            t_lo = mid;
        else
            t_hi = mid;
        double next = 0.5 * (t_lo + t_hi);
        if (next == mid) break;  // double precision exhausted
        mid = next;
        gm = g(mid);
    }
    return {mid, GaugeMethod::bisection, std::abs(gm)};
}

GaugeOptions inner_options(const GaugeOptions& opts) {
    GaugeOptions inner = opts;
    inner.tolerance = std::max(opts.tolerance * 1e-2, 1e-15);
    return inner;
}

} // namespace

namespace detail {

double defining_value(const DomainSpec& spec, const Point& z, const GaugeOptions& opts) {
    const ComplexVector& c = z.coords();

    if (const auto* b = spec.get_if<Ball>()) return c.norm() / b->radius;

    if (const auto* p = spec.get_if<Polydisk>()) {
        double m = 0.0;
        for (int i = 0; i < z.dim(); ++i)
            m = std::max(m, std::abs(c[i]) / p->radii[static_cast<size_t>(i)]);
        return m;
    }

    if (const auto* e = spec.get_if<GeneralizedEllipsoid>()) {
        double sum = 0.0, box = 0.0;
        int off = 0;
        for (size_t j = 0; j < e->block_dims.size(); ++j) {
            double nrm = c.segment(off, e->block_dims[j]).norm();
            if (std::isinf(e->exponents[j]))
                box = std::max(box, nrm);
            else
                sum += std::pow(nrm, 2.0 * e->exponents[j]);
            off += e->block_dims[j];
        }
        return std::max(sum, box);
    }

    if (const auto* w = spec.get_if<WeightedPowerDomain>()) {
        double sum = 0.0;
        for (int i = 0; i < z.dim(); ++i)
            sum += w->weights[static_cast<size_t>(i)] *
                   std::pow(std::abs(c[i]), 2.0 * w->powers[static_cast<size_t>(i)]);
        return sum;
    }

    if (const auto* pr = spec.get_if<Product>()) {
        double m = 0.0;
        int off = 0;
        for (const auto& f : pr->factors) {
            m = std::max(m, defining_value(f, Point(c.segment(off, f.dim())), opts));
            off += f.dim();
        }
        return m;
    }

    const auto* s = spec.get_if<Sublevel>();
    return d_minkowski_gauge(*s->base, s->d, z, inner_options(opts)).value / s->level;
}

} // namespace detail

GaugeResult minkowski_gauge(const DomainSpec& spec, const Point& z, const GaugeOptions& opts) {
    if (z.dim() != spec.dim()) throw ValidationError("point/domain dimension mismatch");
    if (z.is_origin()) return {0.0, GaugeMethod::closed_form, 0.0};
    const ComplexVector& c = z.coords();

    if (const auto* b = spec.get_if<Ball>())
        return {c.norm() / b->radius, GaugeMethod::closed_form, 0.0};

    if (const auto* p = spec.get_if<Polydisk>()) {
        double m = 0.0;
        for (int i = 0; i < z.dim(); ++i)
            m = std::max(m, std::abs(c[i]) / p->radii[static_cast<size_t>(i)]);
        return {m, GaugeMethod::closed_form, 0.0};
    }

    if (const auto* e = spec.get_if<GeneralizedEllipsoid>()) {
        // Finite blocks contribute the root of the defining sum; infinite
        // blocks contribute their norms directly. The gauge is the max.
        std::vector<double> finite_norms, finite_exps;
        double box = 0.0;
        int off = 0;
        for (size_t j = 0; j < e->block_dims.size(); ++j) {
            double nrm = c.segment(off, e->block_dims[j]).norm();
            if (std::isinf(e->exponents[j]))
                box = std::max(box, nrm);
            else if (nrm > 0.0) {
                finite_norms.push_back(nrm);
                finite_exps.push_back(e->exponents[j]);
            }
            off += e->block_dims[j];
        }
        if (finite_norms.empty()) return {box, GaugeMethod::closed_form, 0.0};
        auto g = [&](double t) {
            double sum = 0.0;
            for (size_t j = 0; j < finite_norms.size(); ++j)
                sum += std::pow(finite_norms[j] / t, 2.0 * finite_exps[j]);
            return sum - 1.0;
        };
        GaugeResult root = bisect_monotone(g, opts);
        if (box >= root.value) return {box, GaugeMethod::closed_form, 0.0};
        return root;
    }

    if (const auto* w = spec.get_if<WeightedPowerDomain>()) {
        auto g = [&](double t) {
            double sum = 0.0;
            for (int i = 0; i < z.dim(); ++i)
                sum += w->weights[static_cast<size_t>(i)] *
                       std::pow(std::abs(c[i]) / t, 2.0 * w->powers[static_cast<size_t>(i)]);
            return sum - 1.0;
        };
        return bisect_monotone(g, opts);
    }

    if (const auto* pr = spec.get_if<Product>()) {
        GaugeResult best{0.0, GaugeMethod::closed_form, 0.0};
        bool any_bisection = false;
        int off = 0;
        for (const auto& f : pr->factors) {
            GaugeResult r = minkowski_gauge(f, Point(c.segment(off, f.dim())), opts);
            any_bisection = any_bisection || r.method == GaugeMethod::bisection;
            if (r.value > best.value) best = r;
            off += f.dim();
        }
        best.method = any_bisection ? GaugeMethod::bisection : GaugeMethod::closed_form;
        return best;
    }

    const auto* s = spec.get_if<Sublevel>();
    if (s->d.all_ones()) {
        // the sublevel set of a balanced domain is its dilate
        GaugeResult inner = minkowski_gauge(*s->base, z, opts);
        return {inner.value / s->level, inner.method, inner.residual / s->level};
    }
    return d_minkowski_gauge(spec, DVector::ones(spec.dim()), z, opts);
}

GaugeResult d_minkowski_gauge(const DomainSpec& spec, const DVector& d, const Point& z,
                              const GaugeOptions& opts) {
    check_dims(spec, d, z);
    if (z.is_origin()) return {0.0, GaugeMethod::closed_form, 0.0};
    auto g = [&](double t) { return detail::defining_value(spec, scale_point(z, d, t), opts) - 1.0; };
    return bisect_monotone(g, opts);
}

DomainSpec sublevel(const DomainSpec& spec, const DVector& d, double r) {
    return validate(DomainSpec(Sublevel{std::make_shared<DomainSpec>(spec), r, d}));
}

GaugeResult gauge_of_sublevel(const DomainSpec& spec, const DVector& d, double r, const Point& z,
                              const GaugeOptions& opts) {
    if (!(r > 0.0 && r <= 1.0)) throw ValidationError("sublevel level must lie in (0, 1]");
    check_dims(spec, d, z);
    GaugeResult inner = d_minkowski_gauge(spec, d, z, opts);
    double scaled = inner.value / r;
    GaugeResult direct = d_minkowski_gauge(sublevel(spec, d, r), d, z, opts);
    double mismatch = std::abs(scaled - direct.value);
    if (mismatch > 1e-8 * std::max(1.0, scaled)) {
        std::ostringstream os;
        os << "sublevel gauge cross-check failed: scaled=" << scaled << " direct=" << direct.value;
        throw ConvergenceError(os.str());
    }
    return {scaled, inner.method, mismatch};
}

} // namespace squeeze
