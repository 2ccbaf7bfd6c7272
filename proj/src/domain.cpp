#include "squeeze/domain.hpp"

#include "squeeze/gauge.hpp"
#include "squeeze/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace squeeze {

namespace {

struct DimVisitor {
    int operator()(const Ball& b) const { return b.dim; }
    int operator()(const Polydisk& p) const { return static_cast<int>(p.radii.size()); }
    int operator()(const GeneralizedEllipsoid& e) const {
        return std::accumulate(e.block_dims.begin(), e.block_dims.end(), 0);
    }
    int operator()(const WeightedPowerDomain& w) const {
        return static_cast<int>(w.weights.size());
    }
    int operator()(const Product& p) const {
        int n = 0;
        for (const auto& f : p.factors) n += f.dim();
        return n;
    }
    int operator()(const Sublevel& s) const { return s.base->dim(); }
};

bool all_of(const std::vector<double>& v, double x) {
    return std::all_of(v.begin(), v.end(), [x](double m) { return m == x; });
}

} // namespace

int DomainSpec::dim() const { return std::visit(DimVisitor{}, shape_); }

bool DomainSpec::is_homogeneous() const {
    if (get_if<Ball>()) return true;
    if (get_if<Polydisk>()) return true;
    if (const auto* e = get_if<GeneralizedEllipsoid>())
        return all_of(e->exponents, kInfiniteExponent);  // product of unit balls
    if (const auto* p = get_if<Product>())
        return std::all_of(p->factors.begin(), p->factors.end(),
                           [](const DomainSpec& f) { return f.is_homogeneous(); });
    // A sublevel set is a diagonal-linear image of its base, hence
    // biholomorphic to it.
    if (const auto* s = get_if<Sublevel>()) return s->base->is_homogeneous();
    return false;
}

std::string DomainSpec::describe() const {
    std::ostringstream os;
    if (const auto* b = get_if<Ball>()) {
        os << "ball(dim=" << b->dim << ", radius=" << b->radius << ")";
    } else if (const auto* p = get_if<Polydisk>()) {
        os << "polydisk(";
        for (size_t i = 0; i < p->radii.size(); ++i) os << (i ? "," : "") << p->radii[i];
        os << ")";
    } else if (const auto* e = get_if<GeneralizedEllipsoid>()) {
        os << "gen_ellipsoid(p=(";
        for (size_t i = 0; i < e->block_dims.size(); ++i) os << (i ? "," : "") << e->block_dims[i];
        os << "), m=(";
        for (size_t i = 0; i < e->exponents.size(); ++i) {
            os << (i ? "," : "");
            if (std::isinf(e->exponents[i]))
                os << "inf";
            else
                os << e->exponents[i];
        }
        os << "))";
    } else if (const auto* w = get_if<WeightedPowerDomain>()) {
        os << "weighted_power(n=" << w->weights.size() << ")";
    } else if (const auto* pr = get_if<Product>()) {
        os << "product(";
        for (size_t i = 0; i < pr->factors.size(); ++i)
            os << (i ? ", " : "") << pr->factors[i].describe();
        os << ")";
    } else if (const auto* s = get_if<Sublevel>()) {
        os << "sublevel(" << s->base->describe() << ", r=" << s->level << ", d=(";
        for (size_t i = 0; i < s->d.exponents().size(); ++i)
            os << (i ? "," : "") << s->d.exponents()[i];
        os << "))";
    }
    return os.str();
}

namespace {

DomainSpec validate_ball(const Ball& b) {
    if (b.dim < 1) throw ValidationError("ball dimension must be >= 1");
    if (!(b.radius > 0.0) || !std::isfinite(b.radius))
        throw ValidationError("ball radius must be positive and finite");
    return DomainSpec(b);
}

DomainSpec validate_polydisk(const Polydisk& p) {
    if (p.radii.empty()) throw ValidationError("polydisk needs at least one radius");
    for (double r : p.radii)
        if (!(r > 0.0) || !std::isfinite(r))
            throw ValidationError("polydisk radii must be positive and finite");
    return DomainSpec(p);
}

DomainSpec validate_gen_ellipsoid(const GeneralizedEllipsoid& e) {
    if (e.block_dims.empty()) throw ValidationError("block domain needs at least one block");
    if (e.block_dims.size() != e.exponents.size())
        throw ValidationError("block count must match exponent count");
    int n = 0;
    for (int p : e.block_dims) {
        if (p < 1) throw ValidationError("block dimensions must be >= 1");
        n += p;
    }
    for (double m : e.exponents) {
        if (std::isnan(m) || m < 0.5)
            throw ValidationError("block exponents must be >= 1/2 (or infinite)");
    }
    // Structural identities: sum_j ||z_j||^2 = ||z||^2 makes the all-ones
    // exponent case the unit ball regardless of the partition, and the
    // product of unit disks is the unit polydisk.
    if (all_of(e.exponents, 1.0)) return DomainSpec(Ball{n, 1.0});
    if (all_of(e.exponents, kInfiniteExponent) &&
        std::all_of(e.block_dims.begin(), e.block_dims.end(), [](int p) { return p == 1; }))
        return DomainSpec(Polydisk{std::vector<double>(static_cast<size_t>(n), 1.0)});
    return DomainSpec(e);
}

DomainSpec validate_weighted_power(const WeightedPowerDomain& w) {
    if (w.weights.empty()) throw ValidationError("weighted power domain needs coordinates");
    if (w.weights.size() != w.powers.size())
        throw ValidationError("weight count must match power count");
    for (double c : w.weights)
        if (!(c > 0.0) || !std::isfinite(c)) throw ValidationError("weights must be positive");
    for (double s : w.powers)
        if (!std::isfinite(s) || s < 0.5) throw ValidationError("powers must be >= 1/2");
    return DomainSpec(w);
}

DomainSpec validate_product(const Product& p) {
    if (p.factors.empty()) throw ValidationError("product needs at least one factor");
    Product out;
    out.factors.reserve(p.factors.size());
    for (const auto& f : p.factors) out.factors.push_back(validate(f));
    return DomainSpec(std::move(out));
}

DomainSpec validate_sublevel(const Sublevel& s) {
    if (!s.base) throw ValidationError("sublevel needs a base domain");
    if (!(s.level > 0.0 && s.level <= 1.0))
        throw ValidationError("sublevel level must lie in (0, 1]");
    auto base = std::make_shared<DomainSpec>(validate(*s.base));
    if (s.d.dim() != base->dim())
        throw ValidationError("sublevel exponent tuple must match the base dimension");
    return DomainSpec(Sublevel{std::move(base), s.level, s.d});
}

} // namespace

DomainSpec validate(const DomainSpec& spec) {
    return std::visit(
        [](const auto& shape) -> DomainSpec {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Ball>) return validate_ball(shape);
            if constexpr (std::is_same_v<T, Polydisk>) return validate_polydisk(shape);
            if constexpr (std::is_same_v<T, GeneralizedEllipsoid>)
                return validate_gen_ellipsoid(shape);
            if constexpr (std::is_same_v<T, WeightedPowerDomain>)
                return validate_weighted_power(shape);
            if constexpr (std::is_same_v<T, Product>) return validate_product(shape);
            if constexpr (std::is_same_v<T, Sublevel>) return validate_sublevel(shape);
        },
        spec.shape());
}

bool contains(const DomainSpec& spec, const Point& z) {
    if (z.dim() != spec.dim()) throw ValidationError("point/domain dimension mismatch");
    const ComplexVector& c = z.coords();

    if (const auto* b = spec.get_if<Ball>()) return c.norm() < b->radius;

    if (const auto* p = spec.get_if<Polydisk>()) {
        for (int i = 0; i < z.dim(); ++i)
            if (std::abs(c[i]) >= p->radii[static_cast<size_t>(i)]) return false;
        return true;
    }

    if (const auto* e = spec.get_if<GeneralizedEllipsoid>()) {
        double sum = 0.0;
        int off = 0;
        for (size_t j = 0; j < e->block_dims.size(); ++j) {
            double nrm = c.segment(off, e->block_dims[j]).norm();
            if (std::isinf(e->exponents[j])) {
                if (nrm >= 1.0) return false;
            } else {
                sum += std::pow(nrm, 2.0 * e->exponents[j]);
            }
            off += e->block_dims[j];
        }
        return sum < 1.0;
    }

    if (const auto* w = spec.get_if<WeightedPowerDomain>()) {
        double sum = 0.0;
        for (int i = 0; i < z.dim(); ++i)
            sum += w->weights[static_cast<size_t>(i)] *
                   std::pow(std::abs(c[i]), 2.0 * w->powers[static_cast<size_t>(i)]);
        return sum < 1.0;
    }

    if (const auto* pr = spec.get_if<Product>()) {
        int off = 0;
        for (const auto& f : pr->factors) {
            if (!contains(f, Point(c.segment(off, f.dim())))) return false;
            off += f.dim();
        }
        return true;
    }

    const auto* s = spec.get_if<Sublevel>();
    return d_minkowski_gauge(*s->base, s->d, z).value < s->level;
}

std::vector<Point> sample_points(const DomainSpec& spec, int count, std::uint64_t seed) {
    if (count < 0) throw ValidationError("sample count must be nonnegative");
    const int n = spec.dim();
    const double radius = bounding_radius(spec);
    constexpr long kRetryCap = 1000000;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<Point> out;
    out.reserve(static_cast<size_t>(count));
    long attempts_total = 0;
    for (int k = 0; k < count; ++k) {
        bool found = false;
        for (long attempt = 0; attempt < kRetryCap; ++attempt) {
            ++attempts_total;
            ComplexVector v(n);
            for (int i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
            double nrm = v.norm();
            if (nrm == 0.0) continue;
            // uniform in the real 2n-ball of the bounding radius
            double r = radius * std::pow(unif(rng), 1.0 / (2.0 * n));
            v *= r / nrm;
            Point z(std::move(v));
            if (contains(spec, z)) {
                out.push_back(std::move(z));
                found = true;
                break;
            }
        }
        if (!found) {
            std::ostringstream os;
            os << "rejection sampling cap exhausted for " << spec.describe() << " (acceptance rate "
               << static_cast<double>(out.size()) / static_cast<double>(attempts_total) << ")";
            throw ConvergenceError(os.str());
        }
    }
    return out;
}

} // namespace squeeze
