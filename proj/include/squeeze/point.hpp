#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace squeeze {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

/// Thrown when an input fails structural validation (bad shape parameters,
/// dimension mismatches, out-of-range levels, malformed JSON documents).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative routine fails to converge within its caps,
/// which signals a tolerance misconfiguration rather than bad input.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point of C^n. The optional block partition mirrors the block structure
/// of the domain the point is meant to live in; it must sum to dim().
class Point {
  public:
    Point() = default;

    explicit Point(ComplexVector coords) : coords_(std::move(coords)) { check_finite(); }

    Point(ComplexVector coords, std::vector<int> block_sizes)
        : coords_(std::move(coords)), block_sizes_(std::move(block_sizes)) {
        check_finite();
        int sum = 0;
        for (int b : *block_sizes_) {
            if (b <= 0) throw ValidationError("point block sizes must be positive");
            sum += b;
        }
        if (sum != dim()) throw ValidationError("point block sizes must sum to the dimension");
    }

    static Point zero(int n) { return Point(ComplexVector::Zero(n)); }

    const ComplexVector& coords() const { return coords_; }
    const std::optional<std::vector<int>>& block_sizes() const { return block_sizes_; }

    int dim() const { return static_cast<int>(coords_.size()); }
    bool is_origin() const { return coords_.size() == 0 || coords_.isZero(0.0); }

  private:
    void check_finite() const {
        if (!coords_.allFinite()) throw ValidationError("point coordinates must be finite");
    }

    ComplexVector coords_;
    std::optional<std::vector<int>> block_sizes_;
};

/// Exponent tuple d = (d_1,...,d_n) of positive integers. The all-ones
/// vector marks the plain balanced case.
class DVector {
  public:
    DVector() = default;

    explicit DVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        if (exponents_.empty()) throw ValidationError("exponent tuple must be nonempty");
        for (int e : exponents_)
            if (e < 1) throw ValidationError("exponent tuple entries must be >= 1");
    }

    static DVector ones(int n) { return DVector(std::vector<int>(static_cast<size_t>(n), 1)); }

    const std::vector<int>& exponents() const { return exponents_; }
    int dim() const { return static_cast<int>(exponents_.size()); }

    /// L = max_i d_i.
    int max_exponent() const {
        int m = 1;
        for (int e : exponents_) m = std::max(m, e);
        return m;
    }

    bool all_ones() const {
        for (int e : exponents_)
            if (e != 1) return false;
        return true;
    }

    bool operator==(const DVector& other) const { return exponents_ == other.exponents_; }

  private:
    std::vector<int> exponents_;
};

/// Coordinate-wise scaling z |-> (lambda^{d_1} z_1, ..., lambda^{d_n} z_n).
inline Point anisotropic_scale(const Point& z, const DVector& d, Complex lambda) {
    if (z.dim() != d.dim()) throw ValidationError("point/exponent dimension mismatch");
    ComplexVector out(z.dim());
    for (int i = 0; i < z.dim(); ++i) {
        Complex f = 1.0;
        for (int k = 0; k < d.exponents()[static_cast<size_t>(i)]; ++k) f *= lambda;
        out[i] = f * z.coords()[i];
    }
    return Point(std::move(out));
}

} // namespace squeeze
