#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcx/errors.hpp"

namespace bcx {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Absolute threshold on a component modulus below which a scalar component
/// counts as zero during classification.
inline constexpr double default_zero_tolerance = 1e-10;
/// Threshold for pivot decisions in elimination, relative to the largest
/// modulus the working column had on input.
inline constexpr double default_pivot_tolerance = 1e-10;
/// Absolute bound accepted on residuals of computed solutions.
inline constexpr double default_residual_tolerance = 1e-9;

namespace detail {

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const Complex& z, const char* where) {
    if (!is_finite(z)) throw std::invalid_argument(std::string(where) + ": non-finite input");
}

}  // namespace detail

/// A bicomplex number stored by its idempotent components: the pair
/// (minus, plus) representing minus*e1 + plus*e2, where e1 = (1 + i1*i2)/2
/// and e2 = (1 - i1*i2)/2.  Products, inverses and zero-divisor tests act
/// componentwise on this pair; cartesian views (u1 + i1*u2 + i2*u3 +
/// i1*i2*u4, or the complex pair z1 + i2*z2) are computed on demand.
class BiComplex {
public:
    constexpr BiComplex() = default;

    /// Canonical embedding of a real number.
    BiComplex(double real) : minus_(real), plus_(real) {
        detail::require_finite(minus_, "BiComplex");
    }

    /// Canonical embedding of a complex number z, i.e. z*e1 + z*e2 = z.
    BiComplex(const Complex& z) : minus_(z), plus_(z) {
        detail::require_finite(z, "BiComplex");
    }

    /// Builds the number minus*e1 + plus*e2 from its idempotent components.
    static BiComplex from_idempotent(const Complex& minus, const Complex& plus) {
        detail::require_finite(minus, "from_idempotent");
        detail::require_finite(plus, "from_idempotent");
        BiComplex out;
        out.minus_ = minus;
        out.plus_ = plus;
        return out;
    }

    /// Builds z1 + i2*z2; the idempotent components are z1 -/+ i1*z2.
    static BiComplex from_complex_pair(const Complex& z1, const Complex& z2) {
        detail::require_finite(z1, "from_complex_pair");
        detail::require_finite(z2, "from_complex_pair");
        const Complex i1(0.0, 1.0);
        return from_idempotent(z1 - i1 * z2, z1 + i1 * z2);
    }

    /// Builds u1 + i1*u2 + i2*u3 + i1*i2*u4.
    static BiComplex from_cartesian(double u1, double u2, double u3, double u4) {
        return from_complex_pair(Complex(u1, u2), Complex(u3, u4));
    }

    const Complex& minus() const noexcept { return minus_; }
    const Complex& plus() const noexcept { return plus_; }

    Complex z1() const { return 0.5 * (minus_ + plus_); }
    Complex z2() const { return 0.5 * Complex(0.0, 1.0) * (minus_ - plus_); }

    /// The four real coordinates (u1, u2, u3, u4).
    std::array<double, 4> cartesian() const {
        const Complex a = z1();
        const Complex b = z2();
        return {a.real(), a.imag(), b.real(), b.imag()};
    }

    bool operator==(const BiComplex&) const = default;

    BiComplex& operator+=(const BiComplex& o) {
        minus_ += o.minus_;
        plus_ += o.plus_;
        return *this;
    }
    BiComplex& operator-=(const BiComplex& o) {
        minus_ -= o.minus_;
        plus_ -= o.plus_;
        return *this;
    }
    BiComplex& operator*=(const BiComplex& o) {
        minus_ *= o.minus_;
        plus_ *= o.plus_;
        return *this;
    }

    friend BiComplex operator+(BiComplex a, const BiComplex& b) { return a += b; }
    friend BiComplex operator-(BiComplex a, const BiComplex& b) { return a -= b; }
    friend BiComplex operator*(BiComplex a, const BiComplex& b) { return a *= b; }
    friend BiComplex operator-(const BiComplex& a) {
        return from_unchecked(-a.minus_, -a.plus_);
    }

private:
    static BiComplex from_unchecked(const Complex& minus, const Complex& plus) {
        BiComplex out;
        out.minus_ = minus;
        out.plus_ = plus;
        return out;
    }

    Complex minus_{};
    Complex plus_{};
};

/// The two nontrivial idempotents and the two imaginary units.
inline const BiComplex e1 = BiComplex::from_idempotent(1.0, 0.0);
inline const BiComplex e2 = BiComplex::from_idempotent(0.0, 1.0);
inline const BiComplex i1 = BiComplex(Complex(0.0, 1.0));
inline const BiComplex i2 = BiComplex::from_complex_pair(0.0, 1.0);

inline BiComplex join(const Complex& minus, const Complex& plus) {
    return BiComplex::from_idempotent(minus, plus);
}

inline std::pair<Complex, Complex> split(const BiComplex& x) {
    return {x.minus(), x.plus()};
}

inline ScalarClass classify(const BiComplex& x, double zero_tol = default_zero_tolerance) {
    const bool minus_zero = std::abs(x.minus()) <= zero_tol;
    const bool plus_zero = std::abs(x.plus()) <= zero_tol;
    if (minus_zero && plus_zero) return ScalarClass::Zero;
    if (minus_zero || plus_zero) return ScalarClass::ZeroDivisor;
    return ScalarClass::Invertible;
}

/// Componentwise reciprocal; defined exactly for the invertible scalars.
inline BiComplex inverse(const BiComplex& x, double zero_tol = default_zero_tolerance) {
    const ScalarClass cls = classify(x, zero_tol);
    if (cls != ScalarClass::Invertible) {
        throw NotInvertibleError("bicomplex scalar is not invertible (" + to_string(cls) + ")",
                                 cls);
    }
    return join(1.0 / x.minus(), 1.0 / x.plus());
}

inline BiComplex operator/(const BiComplex& a, const BiComplex& b) {
    return a * inverse(b);
}

}  // namespace bcx
