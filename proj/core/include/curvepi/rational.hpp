#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvepi {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

// Exact elements of Q(i).  Coefficients of fiber polynomials at complex
// rational pencil parameters, and anchor points of lasso paths.
struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(long r) : re(r) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return sgn(im) == 0; }

    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.norm();
        if (sgn(n) == 0) throw error("GaussRat division by zero");
        GaussRat t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline bool is_zero(const GaussRat& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }

inline std::string to_string(const GaussRat& x) {
    if (x.is_real()) return x.re.get_str();
    return x.re.get_str() + (sgn(x.im) < 0 ? "-" : "+") + abs(x.im).get_str() + "i";
}

// Exact division in the coefficient domains used by the subresultant PRS.
inline Rat divexact(const Rat& a, const Rat& b) {
    if (sgn(b) == 0) throw error("divexact by zero");
    return a / b;
}
inline GaussRat divexact(const GaussRat& a, const GaussRat& b) { return a / b; }

template <class R>
R ipow(R base, unsigned long e) {
    R acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace curvepi
