#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"
#include "bcx/linalg.hpp"
#include "bcx/vector.hpp"

namespace bcx {

/// Bicomplex m-by-n matrix stored as its idempotent component pair
/// (minus, plus) of complex matrices; the (i,j) entry is
/// minus(i,j)*e1 + plus(i,j)*e2.  All arithmetic, determinants, inverses and
/// rank computations run componentwise on the pair.
class BCMatrix {
public:
    BCMatrix() = default;

    BCMatrix(std::size_t rows, std::size_t cols) : minus_(rows, cols), plus_(rows, cols) {}

    BCMatrix(CMatrix minus, CMatrix plus) : minus_(std::move(minus)), plus_(std::move(plus)) {
        if (minus_.rows() != plus_.rows() || minus_.cols() != plus_.cols()) {
            throw DimensionError("BCMatrix: component shapes " + shape_string(minus_) +
                                 " and " + shape_string(plus_) + " differ");
        }
    }

    static BCMatrix identity(std::size_t n) {
        return BCMatrix(CMatrix::identity(n), CMatrix::identity(n));
    }

    std::size_t rows() const noexcept { return minus_.rows(); }
    std::size_t cols() const noexcept { return minus_.cols(); }

    BiComplex operator()(std::size_t i, std::size_t j) const {
        return join(minus_(i, j), plus_(i, j));
    }

    void set(std::size_t i, std::size_t j, const BiComplex& v) {
        minus_(i, j) = v.minus();
        plus_(i, j) = v.plus();
    }

    const CMatrix& minus() const noexcept { return minus_; }
    const CMatrix& plus() const noexcept { return plus_; }

    bool operator==(const BCMatrix&) const = default;

private:
    static std::string shape_string(const CMatrix& a) {
        return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
    }

    CMatrix minus_;
    CMatrix plus_;
};

inline BCMatrix join(CMatrix minus, CMatrix plus) {
    return BCMatrix(std::move(minus), std::move(plus));
}

inline std::pair<CMatrix, CMatrix> split(const BCMatrix& m) {
    return {m.minus(), m.plus()};
}

inline BCMatrix operator+(const BCMatrix& a, const BCMatrix& b) {
    return BCMatrix(a.minus() + b.minus(), a.plus() + b.plus());
}

inline BCMatrix operator-(const BCMatrix& a, const BCMatrix& b) {
    return BCMatrix(a.minus() - b.minus(), a.plus() - b.plus());
}

inline BCMatrix operator*(const BCMatrix& a, const BCMatrix& b) {
    return BCMatrix(a.minus() * b.minus(), a.plus() * b.plus());
}

inline BCMatrix operator*(const BiComplex& s, const BCMatrix& a) {
    return BCMatrix(s.minus() * a.minus(), s.plus() * a.plus());
}

/// Action of the matrix on a bicomplex vector (the associated linear map).
inline BCVector operator*(const BCMatrix& a, const BCVector& v) {
    const auto [vm, vp] = split(v);
    return join(a.minus() * vm, a.plus() * vp);
}

inline BiComplex det(const BCMatrix& m, double pivot_tol = default_pivot_tolerance) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix must be square");
    return join(det(m.minus(), pivot_tol), det(m.plus(), pivot_tol));
}

/// A square bicomplex matrix is non-singular exactly when its determinant is
/// an invertible scalar, i.e. both component determinants are nonzero.
inline bool is_nonsingular(const BCMatrix& m, double pivot_tol = default_pivot_tolerance,
                           double zero_tol = default_zero_tolerance) {
    return classify(det(m, pivot_tol), zero_tol) == ScalarClass::Invertible;
}

inline BCMatrix inverse(const BCMatrix& m, double pivot_tol = default_pivot_tolerance) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix must be square");
    auto minus_inv = inverse(m.minus(), pivot_tol);
    auto plus_inv = inverse(m.plus(), pivot_tol);
    if (!minus_inv || !plus_inv) {
        Components failed = Components::none;
        if (!minus_inv) failed = failed | Components::minus;
        if (!plus_inv) failed = failed | Components::plus;
        throw NotInvertibleError("bicomplex matrix is not invertible (" + to_string(failed) +
                                     " component singular)",
                                 failed);
    }
    return BCMatrix(std::move(*minus_inv), std::move(*plus_inv));
}

inline std::size_t rank(const BCMatrix& m, double pivot_tol = default_pivot_tolerance) {
    return rank(m.minus(), pivot_tol) + rank(m.plus(), pivot_tol);
}

/// The matrix of the associated map as a complex 2m-by-2n block diagonal
/// diag(minus, plus), in the coordinates that list all minus components of a
/// vector first and all plus components second.
inline CMatrix block_embedding(const BCMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    CMatrix out(2 * rows, 2 * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = m.minus()(i, j);
            out(rows + i, cols + j) = m.plus()(i, j);
        }
    }
    return out;
}

}  // namespace bcx
