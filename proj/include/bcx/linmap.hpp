#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"
#include "bcx/linalg.hpp"
#include "bcx/matrix.hpp"
#include "bcx/vector.hpp"

namespace bcx {

/// A linear map of the idempotent-product form minus*e1 + plus*e2, stored as
/// the pair of complex m-by-n matrices of its components in the standard
/// bases.  It sends a bicomplex vector v to
/// join(minus * v_minus, plus * v_plus): the minus component matrix acts on
/// the tuple of minus components and the plus one on the tuple of plus
/// components.
class LinMap {
public:
    LinMap() = default;

    LinMap(CMatrix minus, CMatrix plus) : minus_(std::move(minus)), plus_(std::move(plus)) {
        if (minus_.rows() != plus_.rows() || minus_.cols() != plus_.cols())
            throw DimensionError("LinMap: component shapes differ");
    }

    static LinMap identity(std::size_t n) {
        return LinMap(CMatrix::identity(n), CMatrix::identity(n));
    }

    static LinMap zero(std::size_t codomain_dim, std::size_t domain_dim) {
        return LinMap(CMatrix(codomain_dim, domain_dim), CMatrix(codomain_dim, domain_dim));
    }

    std::size_t domain_dim() const noexcept { return minus_.cols(); }
    std::size_t codomain_dim() const noexcept { return minus_.rows(); }

    const CMatrix& minus() const noexcept { return minus_; }
    const CMatrix& plus() const noexcept { return plus_; }

    BCVector apply(const BCVector& v) const {
        if (v.size() != domain_dim())
            throw DimensionError("apply: vector length " + std::to_string(v.size()) +
                                 " != domain dimension " + std::to_string(domain_dim()));
        const auto [vm, vp] = split(v);
        return join(minus_ * vm, plus_ * vp);
    }

    bool operator==(const LinMap&) const = default;

    bool is_zero(double tol = 0.0) const {
        for (std::size_t i = 0; i < codomain_dim(); ++i)
            for (std::size_t j = 0; j < domain_dim(); ++j)
                if (std::abs(minus_(i, j)) > tol || std::abs(plus_(i, j)) > tol) return false;
        return true;
    }

private:
    CMatrix minus_;
    CMatrix plus_;
};

inline bool eq(const LinMap& a, const LinMap& b, double tol = 0.0) {
    if (a.codomain_dim() != b.codomain_dim() || a.domain_dim() != b.domain_dim())
        throw DimensionError("eq: map shapes differ");
    return max_abs_diff(a.minus(), b.minus()) <= tol && max_abs_diff(a.plus(), b.plus()) <= tol;
}

inline LinMap operator+(const LinMap& a, const LinMap& b) {
    return LinMap(a.minus() + b.minus(), a.plus() + b.plus());
}

inline LinMap operator-(const LinMap& a, const LinMap& b) {
    return LinMap(a.minus() - b.minus(), a.plus() - b.plus());
}

inline LinMap operator*(const Complex& s, const LinMap& t) {
    return LinMap(s * t.minus(), s * t.plus());
}

/// Composition s after t, componentwise.
inline LinMap compose(const LinMap& s, const LinMap& t) {
    if (s.domain_dim() != t.codomain_dim())
        throw DimensionError("compose: domain of the outer map != codomain of the inner map");
    return LinMap(s.minus() * t.minus(), s.plus() * t.plus());
}

inline LinMap operator*(const LinMap& s, const LinMap& t) { return compose(s, t); }

/// The map associated with a bicomplex matrix acting on column vectors.
inline LinMap to_linmap(const BCMatrix& m) { return LinMap(m.minus(), m.plus()); }

/// Kernel basis: vectors join(z, 0) for z in the kernel of the minus
/// component, followed by vectors join(0, w) for w in the kernel of the plus
/// component, each block in ascending free-column order.
inline std::vector<BCVector> kernel_basis(const LinMap& t,
                                          double pivot_tol = default_pivot_tolerance) {
    const CVector zero(t.domain_dim(), Complex{});
    std::vector<BCVector> basis;
    for (const CVector& z : kernel_basis(t.minus(), pivot_tol)) basis.push_back(join(z, zero));
    for (const CVector& w : kernel_basis(t.plus(), pivot_tol)) basis.push_back(join(zero, w));
    return basis;
}

/// An image-basis vector together with a vector that maps onto it.
struct ImageVector {
    BCVector vector;
    BCVector preimage;
};

/// Image basis join(z_i, 0), join(0, w_j) built from the component image
/// bases, minus block first.  Each basis vector is an original pivot column,
/// so its recorded preimage is the corresponding standard basis vector
/// confined to the same component.
inline std::vector<ImageVector> image_basis_with_preimages(
    const LinMap& t, double pivot_tol = default_pivot_tolerance) {
    const CVector zero_dom(t.domain_dim(), Complex{});
    const CVector zero_cod(t.codomain_dim(), Complex{});
    std::vector<ImageVector> basis;
    for (std::size_t j : pivot_columns(t.minus(), pivot_tol)) {
        CVector unit(t.domain_dim(), Complex{});
        unit[j] = 1.0;
        basis.push_back({join(t.minus().column(j), zero_cod), join(unit, zero_dom)});
    }
    for (std::size_t j : pivot_columns(t.plus(), pivot_tol)) {
        CVector unit(t.domain_dim(), Complex{});
        unit[j] = 1.0;
        basis.push_back({join(zero_cod, t.plus().column(j)), join(zero_dom, unit)});
    }
    return basis;
}

inline std::vector<BCVector> image_basis(const LinMap& t,
                                         double pivot_tol = default_pivot_tolerance) {
    std::vector<BCVector> basis;
    for (auto& entry : image_basis_with_preimages(t, pivot_tol))
        basis.push_back(std::move(entry.vector));
    return basis;
}

/// Rank is the sum of the component ranks.
inline std::size_t rank(const LinMap& t, double pivot_tol = default_pivot_tolerance) {
    return rank(t.minus(), pivot_tol) + rank(t.plus(), pivot_tol);
}

/// Nullity is 2n - rank for domain dimension n.
inline std::size_t nullity(const LinMap& t, double pivot_tol = default_pivot_tolerance) {
    return 2 * t.domain_dim() - rank(t, pivot_tol);
}

/// Injective exactly when both components are.
inline bool is_nonsingular(const LinMap& t, double pivot_tol = default_pivot_tolerance) {
    const std::size_t n = t.domain_dim();
    return rank(t.minus(), pivot_tol) == n && rank(t.plus(), pivot_tol) == n;
}

inline bool is_invertible(const LinMap& t, double pivot_tol = default_pivot_tolerance) {
    return t.domain_dim() == t.codomain_dim() && is_nonsingular(t, pivot_tol);
}

/// Inverse map (inverse of minus, inverse of plus); the error names the
/// component(s) that are singular.
inline LinMap inverse(const LinMap& t, double pivot_tol = default_pivot_tolerance) {
    if (t.domain_dim() != t.codomain_dim())
        throw DimensionError("inverse: map must have equal domain and codomain dimensions");
    auto minus_inv = inverse(t.minus(), pivot_tol);
    auto plus_inv = inverse(t.plus(), pivot_tol);
    if (!minus_inv || !plus_inv) {
        Components failed = Components::none;
        if (!minus_inv) failed = failed | Components::minus;
        if (!plus_inv) failed = failed | Components::plus;
        throw NotInvertibleError(
            "linear map is not invertible (" + to_string(failed) + " component singular)",
            failed);
    }
    return LinMap(std::move(*minus_inv), std::move(*plus_inv));
}

struct BasisPair {
    Basis domain;
    Basis codomain;
};

/// Matrix of the map relative to complex bases of the domain and codomain:
/// column j of each component is the coordinate vector of the image of the
/// j-th domain basis vector under that component, so the result joins the two
/// component representations.
inline BCMatrix matrix_rep(const LinMap& t, const Basis& domain_basis,
                           const Basis& codomain_basis) {
    if (domain_basis.dim() != t.domain_dim())
        throw DimensionError("matrix_rep: domain basis dimension != map domain dimension");
    if (codomain_basis.dim() != t.codomain_dim())
        throw DimensionError("matrix_rep: codomain basis dimension != map codomain dimension");
    const std::size_t m = t.codomain_dim();
    const std::size_t n = t.domain_dim();
    CMatrix rep_minus(m, n);
    CMatrix rep_plus(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const CVector& bj = domain_basis.vectors()[j];
        const CVector cm = codomain_basis.coords(t.minus() * bj);
        const CVector cp = codomain_basis.coords(t.plus() * bj);
        for (std::size_t i = 0; i < m; ++i) {
            rep_minus(i, j) = cm[i];
            rep_plus(i, j) = cp[i];
        }
    }
    return BCMatrix(std::move(rep_minus), std::move(rep_plus));
}

inline BCMatrix matrix_rep(const LinMap& t, const BasisPair& bases) {
    return matrix_rep(t, bases.domain, bases.codomain);
}

/// Solves t(x) = rhs by solving the two component systems independently;
/// free variables are set to zero.  Throws NoSolutionError naming the
/// inconsistent component system(s).
inline BCVector solve(const LinMap& t, const BCVector& rhs,
                      double pivot_tol = default_pivot_tolerance) {
    if (rhs.size() != t.codomain_dim())
        throw DimensionError("solve: right-hand side length != codomain dimension");
    const auto [rm, rp] = split(rhs);
    const auto x = solve(t.minus(), rm, pivot_tol);
    const auto y = solve(t.plus(), rp, pivot_tol);
    if (!x || !y) {
        Components failed = Components::none;
        if (!x) failed = failed | Components::minus;
        if (!y) failed = failed | Components::plus;
        throw NoSolutionError("system is inconsistent in the " + to_string(failed) +
                                  " component(s)",
                              failed);
    }
    return join(*x, *y);
}

}  // namespace bcx
