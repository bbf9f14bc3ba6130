#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"
#include "bcx/matrix.hpp"
#include "bcx/vector.hpp"

namespace bcx {

/// Text form selector: cartesian `a+bi1+ci2+di1i2` or idempotent `[m|p]e`
/// with complex component literals `x+yi`.
enum class TextForm { idempotent, cartesian };

namespace detail {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double x) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

inline void append_term(std::string& out, double coeff, const char* unit) {
    const bool has_unit = unit[0] != '\0';
    std::string term;
    if (has_unit && coeff == 1.0)
        term = unit;
    else if (has_unit && coeff == -1.0)
        term = std::string("-") + unit;
    else
        term = format_double(coeff) + unit;
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " (at position " + std::to_string(pos) + ")", pos);
    }
};

/// Scans an unsigned decimal number with optional fraction and exponent.
/// Returns false without advancing when the cursor is not at a number.
inline bool scan_number(Cursor& c, double& value) {
    c.skip_ws();
    const std::size_t start = c.pos;
    std::size_t p = c.pos;
    const auto digits = [&](std::size_t& q) {
        const std::size_t first = q;
        while (q < c.text.size() && c.text[q] >= '0' && c.text[q] <= '9') ++q;
        return q > first;
    };
    bool any = digits(p);
    if (p < c.text.size() && c.text[p] == '.') {
        std::size_t q = p + 1;
        if (digits(q)) {
            p = q;
            any = true;
        } else if (!any) {
            return false;  // a lone '.' is not a number
        }
        // a trailing '.' is left for the caller to reject
    }
    if (!any) return false;
    if (p < c.text.size() && (c.text[p] == 'e' || c.text[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < c.text.size() && (c.text[q] == '+' || c.text[q] == '-')) ++q;
        if (digits(q)) p = q;  // otherwise the letter is not part of the number
    }
    const auto res = std::from_chars(c.text.data() + start, c.text.data() + p, value);
    if (res.ec != std::errc{} || res.ptr != c.text.data() + p) c.fail("malformed number");
    c.pos = p;
    return true;
}

/// Reads an optionally signed coefficient.  A bare unit has coefficient 1;
/// `had_number` tells the caller whether digits were actually present, so a
/// term with neither digits nor a unit can be rejected.
inline bool scan_signed_coefficient(Cursor& c, bool sign_required, double& coeff,
                                    std::size_t& term_start, bool& had_number) {
    c.skip_ws();
    term_start = c.pos;
    double sign = 1.0;
    if (c.consume('+')) {
        sign = 1.0;
    } else if (c.consume('-')) {
        sign = -1.0;
    } else if (sign_required) {
        return false;
    }
    double value = 1.0;
    had_number = scan_number(c, value);
    if (!had_number) value = 1.0;
    coeff = sign * value;
    return true;
}

// Slot indices for the cartesian units "", "i1", "i2", "i1i2".
inline int scan_bicomplex_unit(Cursor& c) {
    c.skip_ws();
    if (c.pos >= c.text.size() || c.text[c.pos] != 'i') return 0;
    if (c.pos + 1 >= c.text.size() || (c.text[c.pos + 1] != '1' && c.text[c.pos + 1] != '2'))
        c.fail("expected unit i1, i2 or i1i2");
    const char first = c.text[c.pos + 1];
    c.pos += 2;
    if (first == '2') return 2;
    // an i1 may be immediately followed by i2, forming the unit i1i2
    const std::size_t mark = c.pos;
    c.skip_ws();
    if (c.pos + 1 < c.text.size() && c.text[c.pos] == 'i' && c.text[c.pos + 1] == '2') {
        c.pos += 2;
        return 3;
    }
    c.pos = mark;
    return 1;
}

inline Complex parse_complex_expr(Cursor& c) {
    double re = 0.0, im = 0.0;
    bool seen_re = false, seen_im = false;
    bool first = true;
    while (true) {
        double coeff = 0.0;
        std::size_t term_start = 0;
        bool had_number = false;
        if (!scan_signed_coefficient(c, /*sign_required=*/!first, coeff, term_start, had_number))
            break;
        bool imaginary = false;
        c.skip_ws();
        if (c.pos < c.text.size() && c.text[c.pos] == 'i') {
            imaginary = true;
            ++c.pos;
        }
        if (!had_number && !imaginary) c.fail("expected a complex term");
        bool& seen = imaginary ? seen_im : seen_re;
        if (seen)
            throw ParseError(std::string("duplicate ") + (imaginary ? "imaginary" : "real") +
                                 " term (at position " + std::to_string(term_start) + ")",
                             term_start);
        seen = true;
        (imaginary ? im : re) = coeff;
        first = false;
    }
    if (!seen_re && !seen_im) c.fail("expected a complex literal");
    return Complex(re, im);
}

inline BiComplex parse_cartesian_expr(Cursor& c) {
    std::array<double, 4> u{};
    std::array<bool, 4> seen{};
    static constexpr const char* names[4] = {"constant", "i1", "i2", "i1i2"};
    bool first = true;
    while (true) {
        double coeff = 0.0;
        std::size_t term_start = 0;
        bool had_number = false;
        if (!scan_signed_coefficient(c, /*sign_required=*/!first, coeff, term_start, had_number))
            break;
        const int slot = scan_bicomplex_unit(c);
        if (!had_number && slot == 0) c.fail("expected a bicomplex term");
        if (seen[slot])
            throw ParseError(std::string("duplicate ") + names[slot] + " term (at position " +
                                 std::to_string(term_start) + ")",
                             term_start);
        seen[slot] = true;
        u[slot] = coeff;
        first = false;
    }
    if (!seen[0] && !seen[1] && !seen[2] && !seen[3]) c.fail("expected a bicomplex literal");
    return BiComplex::from_cartesian(u[0], u[1], u[2], u[3]);
}

}  // namespace detail

inline Complex parse_complex(std::string_view text) {
    detail::Cursor c{text};
    const Complex z = detail::parse_complex_expr(c);
    if (!c.at_end()) c.fail("unexpected trailing characters");
    return z;
}

/// Parses either form: cartesian `a+bi1+ci2+di1i2` (any subset of terms,
/// whitespace-insensitive) or idempotent `[<complex>|<complex>]e`.
inline BiComplex parse_bicomplex(std::string_view text) {
    detail::Cursor c{text};
    BiComplex value;
    if (c.peek() == '[') {
        c.consume('[');
        const Complex minus = detail::parse_complex_expr(c);
        if (!c.consume('|')) c.fail("expected '|' between idempotent components");
        const Complex plus = detail::parse_complex_expr(c);
        if (!c.consume(']')) c.fail("expected ']'");
        if (!c.consume('e')) c.fail("expected 'e' after ']'");
        value = join(minus, plus);
    } else {
        value = detail::parse_cartesian_expr(c);
    }
    if (!c.at_end()) c.fail("unexpected trailing characters");
    return value;
}

inline std::string to_string(const Complex& z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) return detail::format_double(re);
    std::string out;
    if (re != 0.0) out = detail::format_double(re);
    detail::append_term(out, im, "i");
    return out;
}

inline std::string to_string_cartesian(const BiComplex& x) {
    const auto u = x.cartesian();
    static constexpr const char* units[4] = {"", "i1", "i2", "i1i2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (u[k] == 0.0) continue;
        detail::append_term(out, u[k], units[k]);
    }
    return out.empty() ? "0" : out;
}

/// Default printing is idempotent `[m|p]e`; values whose components coincide
/// are complex numbers and print in cartesian form (so reals print plainly).
inline std::string to_string(const BiComplex& x, TextForm form = TextForm::idempotent) {
    if (form == TextForm::cartesian) return to_string_cartesian(x);
    if (x.minus() == x.plus()) return to_string_cartesian(x);
    return "[" + to_string(x.minus()) + "|" + to_string(x.plus()) + "]e";
}

inline std::ostream& operator<<(std::ostream& os, const BiComplex& x) {
    return os << to_string(x);
}

inline std::string to_string(const BCVector& v, TextForm form = TextForm::idempotent) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i], form);
    }
    return out + "]";
}

inline std::string to_string(const BCMatrix& m, TextForm form = TextForm::idempotent) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += to_string(m(i, j), form);
        }
        out += "]";
    }
    return out + "]";
}

inline std::string to_string(const std::vector<BCVector>& vs,
                             TextForm form = TextForm::idempotent) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += to_string(vs[i], form);
    }
    return out + "]";
}

}  // namespace bcx
