#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"

namespace bcx {

/// Dense row-major complex matrix.
class CMatrix {
public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    CMatrix(std::initializer_list<std::initializer_list<Complex>> init)
        : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("CMatrix: ragged initializer rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static CMatrix identity(std::size_t n) {
        CMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CVector column(std::size_t j) const {
        CVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    CMatrix transpose() const {
        CMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool operator==(const CMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix add: shape mismatch");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

inline CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix subtract: shape mismatch");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

inline CMatrix operator*(const Complex& s, const CMatrix& a) {
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix multiply: inner dimensions differ");
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex f = a(i, k);
            if (f == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += f * b(k, j);
        }
    }
    return out;
}

inline CVector operator*(const CMatrix& a, const CVector& v) {
    if (a.cols() != v.size()) throw DimensionError("matrix-vector multiply: length mismatch");
    CVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

inline double inf_norm(const CVector& v) {
    double best = 0.0;
    for (const Complex& x : v) best = std::max(best, std::abs(x));
    return best;
}

/// Induced infinity norm (maximum absolute row sum).
inline double inf_norm(const CMatrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
        best = std::max(best, row);
    }
    return best;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("max_abs_diff: shape mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            best = std::max(best, std::abs(a(i, j) - b(i, j)));
    return best;
}

struct Rref {
    CMatrix matrix;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

namespace detail {

/// Gauss-Jordan elimination with partial pivoting by maximum modulus, ties
/// broken by lowest row index.  A column yields no pivot when its largest
/// remaining entry is at most pivot_tol times the largest modulus the column
/// had on input; such residue is flushed to exact zero.  Columns at index
/// pivot_limit and beyond are carried along but never pivoted on.
inline Rref rref_limited(CMatrix a, double pivot_tol, std::size_t pivot_limit) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<double> column_scale(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            column_scale[j] = std::max(column_scale[j], std::abs(a(i, j)));

    Rref out;
    std::size_t r = 0;
    for (std::size_t j = 0; j < std::min(n, pivot_limit) && r < m; ++j) {
        std::size_t p = r;
        double best = std::abs(a(r, j));
        for (std::size_t i = r + 1; i < m; ++i) {
            const double mag = std::abs(a(i, j));
            if (mag > best) {
                best = mag;
                p = i;
            }
        }
        if (best <= pivot_tol * column_scale[j]) {
            for (std::size_t i = r; i < m; ++i) a(i, j) = Complex{};
            continue;
        }
        a.swap_rows(r, p);
        const Complex pivot = a(r, j);
        for (std::size_t k = j; k < n; ++k) a(r, k) /= pivot;
        a(r, j) = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            const Complex f = a(i, j);
            if (f == Complex{}) continue;
            for (std::size_t k = j; k < n; ++k) a(i, k) -= f * a(r, k);
            a(i, j) = Complex{};
        }
        out.pivot_columns.push_back(j);
        ++r;
    }
    out.rank = r;
    out.matrix = std::move(a);
    return out;
}

}  // namespace detail

inline Rref rref(const CMatrix& a, double pivot_tol = default_pivot_tolerance) {
    return detail::rref_limited(a, pivot_tol, a.cols());
}

inline std::size_t rank(const CMatrix& a, double pivot_tol = default_pivot_tolerance) {
    return rref(a, pivot_tol).rank;
}

/// Null-space basis by the unit-free-variable construction, one vector per
/// free column in ascending column order.
inline std::vector<CVector> kernel_basis(const CMatrix& a,
                                         double pivot_tol = default_pivot_tolerance) {
    const Rref red = rref(a, pivot_tol);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t j : red.pivot_columns) is_pivot[j] = true;

    std::vector<CVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        CVector v(n, Complex{});
        v[f] = 1.0;
        for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
            v[red.pivot_columns[k]] = -red.matrix(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Column-space basis: the original pivot columns, in ascending pivot order.
inline std::vector<CVector> image_basis(const CMatrix& a,
                                        double pivot_tol = default_pivot_tolerance) {
    const Rref red = rref(a, pivot_tol);
    std::vector<CVector> basis;
    basis.reserve(red.pivot_columns.size());
    for (std::size_t j : red.pivot_columns) basis.push_back(a.column(j));
    return basis;
}

/// Pivot columns of the reduced form, ascending.
inline std::vector<std::size_t> pivot_columns(const CMatrix& a,
                                              double pivot_tol = default_pivot_tolerance) {
    return rref(a, pivot_tol).pivot_columns;
}

/// A particular solution of a*x = b with every free variable set to zero, or
/// nullopt when the augmented system gains rank (i.e. a pivot lands in the
/// right-hand column).
inline std::optional<CVector> solve(const CMatrix& a, const CVector& b,
                                    double pivot_tol = default_pivot_tolerance) {
    if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    CMatrix aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const Rref red = detail::rref_limited(std::move(aug), pivot_tol, n + 1);
    CVector x(n, Complex{});
    for (std::size_t k = 0; k < red.pivot_columns.size(); ++k) {
        const std::size_t p = red.pivot_columns[k];
        if (p == n) return std::nullopt;
        x[p] = red.matrix(k, n);
    }
    return x;
}

/// Determinant by elimination with row-swap sign tracking; returns exact zero
/// once a column has no usable pivot.
inline Complex det(const CMatrix& a, double pivot_tol = default_pivot_tolerance) {
    if (a.rows() != a.cols()) throw DimensionError("det: matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0) return 1.0;

    CMatrix w = a;
    std::vector<double> column_scale(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            column_scale[j] = std::max(column_scale[j], std::abs(w(i, j)));

    Complex prod = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(w(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double mag = std::abs(w(i, k));
            if (mag > best) {
                best = mag;
                p = i;
            }
        }
        if (best <= pivot_tol * column_scale[k]) return Complex{};
        if (p != k) {
            w.swap_rows(k, p);
            prod = -prod;
        }
        const Complex pivot = w(k, k);
        prod *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = w(i, k) / pivot;
            if (f == Complex{}) continue;
            for (std::size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
        }
    }
    return prod;
}

/// Gauss-Jordan inverse; nullopt when a pivot falls below the threshold.
inline std::optional<CMatrix> inverse(const CMatrix& a,
                                      double pivot_tol = default_pivot_tolerance) {
    if (a.rows() != a.cols()) throw DimensionError("inverse: matrix must be square");
    const std::size_t n = a.rows();
    CMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1.0;
    }
    const Rref red = detail::rref_limited(std::move(aug), pivot_tol, n);
    if (red.rank < n) return std::nullopt;
    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = red.matrix(i, n + j);
    return out;
}

/// Crude condition estimate |A| * |A^-1| in the induced infinity norm, used
/// only to filter test inputs; nullopt for singular input.
inline std::optional<double> condition_estimate(const CMatrix& a,
                                                double pivot_tol = default_pivot_tolerance) {
    const auto inv = inverse(a, pivot_tol);
    if (!inv) return std::nullopt;
    return inf_norm(a) * inf_norm(*inv);
}

/// Ordered basis of C^n: n independent column vectors together with the
/// inverse of the basis matrix, computed once at construction so coordinate
/// extraction is a single matrix-vector product.
class Basis {
public:
    explicit Basis(std::vector<CVector> vectors, double pivot_tol = default_pivot_tolerance)
        : vectors_(std::move(vectors)) {
        const std::size_t n = vectors_.size();
        matrix_ = CMatrix(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (vectors_[j].size() != n)
                throw DimensionError("Basis: vector " + std::to_string(j) + " has length " +
                                     std::to_string(vectors_[j].size()) + ", expected " +
                                     std::to_string(n));
            for (std::size_t i = 0; i < n; ++i) matrix_(i, j) = vectors_[j][i];
        }
        auto inv = inverse(matrix_, pivot_tol);
        if (!inv) throw SingularBasisError("Basis: vectors are linearly dependent");
        inverse_ = std::move(*inv);
    }

    static Basis standard(std::size_t n) {
        std::vector<CVector> vecs(n, CVector(n, Complex{}));
        for (std::size_t j = 0; j < n; ++j) vecs[j][j] = 1.0;
        return Basis(std::move(vecs));
    }

    std::size_t dim() const noexcept { return vectors_.size(); }
    const std::vector<CVector>& vectors() const noexcept { return vectors_; }
    const CMatrix& matrix() const noexcept { return matrix_; }
    const CMatrix& inverse_matrix() const noexcept { return inverse_; }

    /// The unique coordinates c with sum_j c[j] * vectors()[j] = v.
    CVector coords(const CVector& v) const {
        if (v.size() != dim()) throw DimensionError("coords: vector length != basis dimension");
        return inverse_ * v;
    }

private:
    std::vector<CVector> vectors_;
    CMatrix matrix_;
    CMatrix inverse_;
};

}  // namespace bcx
