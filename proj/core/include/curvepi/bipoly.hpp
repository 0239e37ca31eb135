#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvepi/poly.hpp"
#include "curvepi/rational.hpp"

namespace curvepi {

// Exact bivariate polynomial over Q in the pencil variable x (outer) and the
// fiber variable y (inner).  No zero coefficients are ever stored; all
// arithmetic is exact.
struct BivariatePoly {
    // (x exponent, y exponent) -> coefficient
    std::map<std::pair<int, int>, Rat> terms;

    BivariatePoly() = default;
    explicit BivariatePoly(long v) {
        if (v != 0) terms[{0, 0}] = Rat(v);
    }
    explicit BivariatePoly(Rat v) {
        if (sgn(v) != 0) terms[{0, 0}] = std::move(v);
    }

    static BivariatePoly term(Rat c, int i, int j) {
        BivariatePoly p;
        if (sgn(c) != 0) p.terms[{i, j}] = std::move(c);
        return p;
    }
    static BivariatePoly var_x() { return term(Rat(1), 1, 0); }
    static BivariatePoly var_y() { return term(Rat(1), 0, 1); }

    bool zero() const { return terms.empty(); }
    int total_degree() const;
    int deg_x() const;
    int deg_y() const;

    void add_term(int i, int j, const Rat& c);

    BivariatePoly operator-() const;
    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const BivariatePoly& a, const Rat& s);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

    BivariatePoly dx() const;
    BivariatePoly dy() const;

    Rat eval(const Rat& x0, const Rat& y0) const;
    GaussRat eval(const GaussRat& x0, const GaussRat& y0) const;

    // p(x0, y) as an exact univariate polynomial in y.
    RatPoly evaluate_partial(const Rat& x0) const;
    GaussPoly evaluate_partial(const GaussRat& x0) const;

    // Dense view in y with coefficients in Q[x] (index = y exponent), and back.
    Poly<RatPoly> as_poly_in_y() const;
    Poly<RatPoly> as_poly_in_x() const;
    static BivariatePoly from_poly_in_y(const Poly<RatPoly>& p);
    static BivariatePoly from_poly_in_x(const Poly<RatPoly>& p);

    BivariatePoly swap_vars() const;
    // p(x + a, y + b)
    BivariatePoly translate(const Rat& a, const Rat& b) const;
    // p(x + a*y, y)
    BivariatePoly shear(const Rat& a) const;
};

inline bool is_zero(const BivariatePoly& p) { return p.zero(); }
BivariatePoly divexact(const BivariatePoly& a, const BivariatePoly& b);

// Res_y(p, q) as a polynomial in x.
RatPoly resultant_y(const BivariatePoly& p, const BivariatePoly& q);

// Res_y(p, dp/dy), normalized to the integer-primitive representative with
// positive leading coefficient.  Throws if p is constant in y.
RatPoly discriminant_y(const BivariatePoly& p);

// Multiplicity of the root x = a in a univariate polynomial.
int root_multiplicity(const RatPoly& p, const Rat& a);

// ---------------------------------------------------------------------------
// The real/imaginary fiber split used by the vertical-alignment certificate.
//
// h(x,u,v) = p(x, u + iv) = f_e + i*f_o with f_e, f_o real trivariate
// polynomials; v | f_o, and f_oo = f_o / v.  Trivariate polynomials are dense
// in v with coefficients in Q[x,u].
using VPoly = Poly<BivariatePoly>;

struct RealImagSplit {
    VPoly f_e;   // real part
    VPoly f_o;   // imaginary part
    VPoly f_oo;  // f_o / v (exact)
};

RealImagSplit real_imag_split(const BivariatePoly& p);

// Pseudo-remainder of f_e by f_oo in v, in the shape R = (R2'/R2'') v^2 +
// (R0'/R0'').  All four components are polynomials in (x,u); both
// denominators equal lc_v(f_oo)^(deg_v f_e - deg_v f_oo + 1).
struct VRemainder {
    BivariatePoly r2_num, r2_den;
    BivariatePoly r0_num, r0_den;
    VPoly quotient;   // q with r2_den * f_e = q * f_oo + remainder
    VPoly remainder;  // the full pseudo-remainder
};

VRemainder pseudo_remainder_in_v(const VPoly& f_e, const VPoly& f_oo);

}  // namespace curvepi
