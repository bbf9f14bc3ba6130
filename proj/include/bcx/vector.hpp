#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"

namespace bcx {

using BCVector = std::vector<BiComplex>;

inline std::pair<CVector, CVector> split(const BCVector& v) {
    CVector minus, plus;
    minus.reserve(v.size());
    plus.reserve(v.size());
    for (const BiComplex& x : v) {
        minus.push_back(x.minus());
        plus.push_back(x.plus());
    }
    return {std::move(minus), std::move(plus)};
}

inline BCVector join(const CVector& minus, const CVector& plus) {
    if (minus.size() != plus.size()) {
        throw DimensionError("join: component tuples have lengths " +
                             std::to_string(minus.size()) + " and " +
                             std::to_string(plus.size()));
    }
    BCVector out;
    out.reserve(minus.size());
    for (std::size_t i = 0; i < minus.size(); ++i) out.push_back(join(minus[i], plus[i]));
    return out;
}

/// Componentwise equality; tol = 0 compares exactly.
inline bool eq(const BCVector& u, const BCVector& v, double tol = 0.0) {
    if (u.size() != v.size()) {
        throw DimensionError("eq: vectors have lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (std::abs(u[i].minus() - v[i].minus()) > tol) return false;
        if (std::abs(u[i].plus() - v[i].plus()) > tol) return false;
    }
    return true;
}

inline BCVector scale(const BiComplex& s, const BCVector& v) {
    BCVector out;
    out.reserve(v.size());
    for (const BiComplex& x : v) out.push_back(s * x);
    return out;
}

/// Scalar product with the idempotent e_k (k = 1 or 2): e1*v keeps the minus
/// components and zeroes the plus ones, e2*v the other way round.
inline BCVector scale_e(int k, const BCVector& v) {
    if (k != 1 && k != 2) throw std::invalid_argument("scale_e: k must be 1 or 2");
    return scale(k == 1 ? e1 : e2, v);
}

inline BCVector add(const BCVector& u, const BCVector& v) {
    if (u.size() != v.size()) {
        throw DimensionError("add: vectors have lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()));
    }
    BCVector out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] + v[i]);
    return out;
}

inline BCVector hadamard(const BCVector& u, const BCVector& v) {
    if (u.size() != v.size()) {
        throw DimensionError("hadamard: vectors have lengths " + std::to_string(u.size()) +
                             " and " + std::to_string(v.size()));
    }
    BCVector out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] * v[i]);
    return out;
}

}  // namespace bcx
