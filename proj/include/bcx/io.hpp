#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"
#include "bcx/format.hpp"
#include "bcx/linalg.hpp"
#include "bcx/linmap.hpp"
#include "bcx/matrix.hpp"
#include "bcx/vector.hpp"

namespace bcx {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return Json::parse(in);  // nlohmann parse errors propagate as input errors
}

/// JSON element holding a complex number: either a plain number (taken as the
/// real part) or a complex literal string `x+yi`.
inline Complex complex_from_json(const Json& element) {
    if (element.is_number()) return Complex(element.get<double>(), 0.0);
    if (element.is_string()) return parse_complex(element.get<std::string>());
    throw ParseError("expected a number or complex literal string, got " +
                         std::string(element.type_name()),
                     0);
}

inline BiComplex bicomplex_from_json(const Json& element) {
    if (element.is_number()) return BiComplex(element.get<double>());
    if (element.is_string()) return parse_bicomplex(element.get<std::string>());
    throw ParseError("expected a number or bicomplex literal string, got " +
                         std::string(element.type_name()),
                     0);
}

inline Json to_json(const BiComplex& x, TextForm form = TextForm::idempotent) {
    return to_string(x, form);
}

inline Json to_json(const BCVector& v, TextForm form = TextForm::idempotent) {
    Json out = Json::array();
    for (const BiComplex& x : v) out.push_back(to_string(x, form));
    return out;
}

inline BCVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vector: expected a JSON array", 0);
    BCVector out;
    out.reserve(j.size());
    for (const Json& element : j) out.push_back(bicomplex_from_json(element));
    return out;
}

namespace detail {

inline Json cmatrix_to_json(const CMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline CMatrix cmatrix_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of rows", 0);
    const std::size_t m = j.size();
    const std::size_t n = m ? j.at(0).size() : 0;
    CMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != n)
            throw ParseError(std::string(what) + ": row " + std::to_string(i) +
                                 " is not an array of length " + std::to_string(n),
                             0);
        for (std::size_t k = 0; k < n; ++k) out(i, k) = complex_from_json(row.at(k));
    }
    return out;
}

}  // namespace detail

/// Matrices are written in split form, the two component matrices as arrays
/// of complex literal strings.
inline Json to_json(const BCMatrix& m) {
    return Json{{"minus", detail::cmatrix_to_json(m.minus())},
                {"plus", detail::cmatrix_to_json(m.plus())}};
}

/// Accepts either the split form {"minus": [[..]], "plus": [[..]]} or the
/// entrywise form {"rows": m, "cols": n, "entries": [[bicomplex literal..]]}.
inline BCMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix: expected a JSON object", 0);
    if (j.contains("minus") || j.contains("plus")) {
        if (!j.contains("minus") || !j.contains("plus"))
            throw ParseError("matrix: split form needs both \"minus\" and \"plus\"", 0);
        return BCMatrix(detail::cmatrix_from_json(j.at("minus"), "matrix minus"),
                        detail::cmatrix_from_json(j.at("plus"), "matrix plus"));
    }
    if (!j.contains("entries")) throw ParseError("matrix: missing \"entries\"", 0);
    const Json& entries = j.at("entries");
    if (!entries.is_array()) throw ParseError("matrix: \"entries\" must be an array of rows", 0);
    const std::size_t m = entries.size();
    const std::size_t n = m ? entries.at(0).size() : 0;
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m)
        throw ParseError("matrix: \"rows\" does not match the entry array", 0);
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != n)
        throw ParseError("matrix: \"cols\" does not match the entry array", 0);
    BCMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const Json& row = entries.at(i);
        if (!row.is_array() || row.size() != n)
            throw ParseError("matrix: row " + std::to_string(i) +
                                 " is not an array of length " + std::to_string(n),
                             0);
        for (std::size_t k = 0; k < n; ++k) out.set(i, k, bicomplex_from_json(row.at(k)));
    }
    return out;
}

inline Json to_json(const LinMap& t) {
    return Json{{"n", t.domain_dim()},
                {"m", t.codomain_dim()},
                {"t1", detail::cmatrix_to_json(t.minus())},
                {"t2", detail::cmatrix_to_json(t.plus())}};
}

inline LinMap linmap_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("map: expected a JSON object", 0);
    if (!j.contains("t1") || !j.contains("t2"))
        throw ParseError("map: needs \"t1\" and \"t2\" component matrices", 0);
    CMatrix t1 = detail::cmatrix_from_json(j.at("t1"), "map t1");
    CMatrix t2 = detail::cmatrix_from_json(j.at("t2"), "map t2");
    if (j.contains("n") && j.at("n").get<std::size_t>() != t1.cols())
        throw ParseError("map: \"n\" does not match the component matrices", 0);
    if (j.contains("m") && j.at("m").get<std::size_t>() != t1.rows())
        throw ParseError("map: \"m\" does not match the component matrices", 0);
    return LinMap(std::move(t1), std::move(t2));
}

inline Json to_json(const Basis& b) {
    Json vectors = Json::array();
    for (const CVector& v : b.vectors()) {
        Json row = Json::array();
        for (const Complex& z : v) row.push_back(to_string(z));
        vectors.push_back(std::move(row));
    }
    return Json{{"dim", b.dim()}, {"vectors", vectors}};
}

inline Basis basis_from_json(const Json& j, double pivot_tol = default_pivot_tolerance) {
    if (!j.is_object() || !j.contains("vectors"))
        throw ParseError("basis: expected an object with \"vectors\"", 0);
    const Json& rows = j.at("vectors");
    if (!rows.is_array()) throw ParseError("basis: \"vectors\" must be an array", 0);
    std::vector<CVector> vectors;
    vectors.reserve(rows.size());
    for (const Json& row : rows) {
        if (!row.is_array()) throw ParseError("basis: each vector must be an array", 0);
        CVector v;
        v.reserve(row.size());
        for (const Json& element : row) v.push_back(complex_from_json(element));
        vectors.push_back(std::move(v));
    }
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != vectors.size())
        throw ParseError("basis: \"dim\" does not match the number of vectors", 0);
    return Basis(std::move(vectors), pivot_tol);
}

}  // namespace bcx
