// Shared helpers for the test suites: deterministic random generators,
// ulp-distance measurement, and the independent oracles (cartesian-form
// multiplication, cofactor determinant, coordinate embeddings) the library
// results are checked against.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/format.hpp"
#include "bcx/linalg.hpp"
#include "bcx/linmap.hpp"
#include "bcx/matrix.hpp"
#include "bcx/vector.hpp"

namespace bcxtest {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bcx::Complex random_complex(Rng& rng, double lo = -10.0, double hi = 10.0) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline bcx::BiComplex random_bicomplex(Rng& rng, double lo = -10.0, double hi = 10.0) {
    return bcx::join(random_complex(rng, lo, hi), random_complex(rng, lo, hi));
}

inline bcx::BCVector random_bcvector(Rng& rng, std::size_t n) {
    bcx::BCVector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_bicomplex(rng));
    return v;
}

inline bcx::CMatrix random_cmatrix(Rng& rng, std::size_t m, std::size_t n, double lo = -1.0,
                                   double hi = 1.0) {
    bcx::CMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = random_complex(rng, lo, hi);
    return a;
}

/// Random complex matrix with small Gaussian-integer entries.
inline bcx::CMatrix random_int_cmatrix(Rng& rng, std::size_t m, std::size_t n, int bound = 3) {
    bcx::CMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = bcx::Complex(uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound));
    return a;
}

/// m-by-n complex matrix of rank at most r, as a product of random
/// small-integer factors.
inline bcx::CMatrix random_rank_limited(Rng& rng, std::size_t m, std::size_t n, std::size_t r) {
    if (r == 0) return bcx::CMatrix(m, n);
    return random_int_cmatrix(rng, m, r) * random_int_cmatrix(rng, r, n);
}

/// Random invertible complex matrix with integer entries (regenerates until
/// the determinant is clearly nonzero).
inline bcx::CMatrix random_invertible(Rng& rng, std::size_t n, int bound = 3) {
    for (;;) {
        bcx::CMatrix a = random_int_cmatrix(rng, n, n, bound);
        if (std::abs(bcx::det(a)) > 0.5) return a;
    }
}

inline bcx::Basis random_basis(Rng& rng, std::size_t n) {
    const bcx::CMatrix a = random_invertible(rng, n);
    std::vector<bcx::CVector> vectors;
    vectors.reserve(n);
    for (std::size_t j = 0; j < n; ++j) vectors.push_back(a.column(j));
    return bcx::Basis(std::move(vectors));
}

inline double ulp_of(double x) {
    const double ax = std::abs(x);
    return std::nextafter(ax, std::numeric_limits<double>::infinity()) - ax;
}

/// |a - b| measured in units of the last place of the larger magnitude.
inline double ulp_distance(double a, double b) {
    if (a == b) return 0.0;
    const double scale = ulp_of(std::max(std::abs(a), std::abs(b)));
    return std::abs(a - b) / scale;
}

/// Multiplication oracle in cartesian form: expand (z1 + i2 z2)(w1 + i2 w2)
/// with i2^2 = -1 and convert the complex pair back to a bicomplex value.
/// Independent of the componentwise product in the library.
inline bcx::BiComplex cartesian_mul_oracle(const bcx::BiComplex& a, const bcx::BiComplex& b) {
    const bcx::Complex z1 = a.z1(), z2 = a.z2();
    const bcx::Complex w1 = b.z1(), w2 = b.z2();
    return bcx::BiComplex::from_complex_pair(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1);
}

/// Determinant oracle: cofactor expansion along the first row using only
/// bicomplex scalar arithmetic.
inline bcx::BiComplex cofactor_det_oracle(const bcx::BCMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return bcx::BiComplex(1.0);
    if (n == 1) return m(0, 0);
    bcx::BiComplex acc(0.0);
    for (std::size_t j = 0; j < n; ++j) {
        bcx::BCMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, m(r, c));
            }
        }
        const bcx::BiComplex term = m(0, j) * cofactor_det_oracle(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Coordinates of a bicomplex vector in the basis that lists the minus
/// components first and the plus components second; consistent with the
/// block-diagonal matrix embedding.
inline bcx::CVector embed(const bcx::BCVector& v) {
    const auto [minus, plus] = bcx::split(v);
    bcx::CVector out = minus;
    out.insert(out.end(), plus.begin(), plus.end());
    return out;
}

inline double inf_norm(const bcx::BCVector& v) {
    return bcx::inf_norm(embed(v));
}

/// Largest componentwise deviation between two bicomplex vectors.
inline double max_deviation(const bcx::BCVector& a, const bcx::BCVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i].minus() - b[i].minus()));
        worst = std::max(worst, std::abs(a[i].plus() - b[i].plus()));
    }
    return worst;
}

}  // namespace bcxtest
