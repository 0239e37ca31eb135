#include "curvepi/bipoly.hpp"

#include <algorithm>

namespace curvepi {

int BivariatePoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e.first + e.second);
    return d;
}

int BivariatePoly::deg_x() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e.first);
    return d;
}

int BivariatePoly::deg_y() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e.second);
    return d;
}

void BivariatePoly::add_term(int i, int j, const Rat& c) {
    if (sgn(c) == 0) return;
    auto key = std::make_pair(i, j);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms.erase(it);
    }
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms) r.terms[e] = -c;
    return r;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e.first, e.second, c);
    return r;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e.first, e.second, -c);
    return r;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BivariatePoly operator*(const BivariatePoly& a, const Rat& s) {
    BivariatePoly r;
    if (sgn(s) == 0) return r;
    for (const auto& [e, c] : a.terms) r.terms[e] = c * s;
    return r;
}

BivariatePoly BivariatePoly::dx() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms)
        if (e.first > 0) r.add_term(e.first - 1, e.second, c * e.first);
    return r;
}

BivariatePoly BivariatePoly::dy() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms)
        if (e.second > 0) r.add_term(e.first, e.second - 1, c * e.second);
    return r;
}

Rat BivariatePoly::eval(const Rat& x0, const Rat& y0) const {
    return evaluate_partial(x0).eval(y0);
}

GaussRat BivariatePoly::eval(const GaussRat& x0, const GaussRat& y0) const {
    return evaluate_partial(x0).eval(y0);
}

RatPoly BivariatePoly::evaluate_partial(const Rat& x0) const {
    if (zero()) throw error("evaluate_partial: zero polynomial");
    RatPoly r;
    r.c.assign(deg_y() + 1, Rat(0));
    for (const auto& [e, c] : terms) r.c[e.second] += c * ipow(x0, e.first);
    r.trim();
    return r;
}

GaussPoly BivariatePoly::evaluate_partial(const GaussRat& x0) const {
    if (zero()) throw error("evaluate_partial: zero polynomial");
    GaussPoly r;
    r.c.assign(deg_y() + 1, GaussRat(0));
    for (const auto& [e, c] : terms)
        r.c[e.second] += GaussRat(c) * ipow(x0, static_cast<unsigned long>(e.first));
    r.trim();
    return r;
}

Poly<RatPoly> BivariatePoly::as_poly_in_y() const {
    Poly<RatPoly> r;
    if (zero()) return r;
    r.c.assign(deg_y() + 1, RatPoly());
    for (const auto& [e, c] : terms) {
        RatPoly& cy = r.c[e.second];
        if (cy.degree() < e.first) cy.c.resize(e.first + 1, Rat(0));
        cy.c[e.first] += c;
    }
    for (auto& cy : r.c) cy.trim();
    r.trim();
    return r;
}

Poly<RatPoly> BivariatePoly::as_poly_in_x() const { return swap_vars().as_poly_in_y(); }

BivariatePoly BivariatePoly::from_poly_in_y(const Poly<RatPoly>& p) {
    BivariatePoly r;
    for (size_t j = 0; j < p.c.size(); ++j)
        for (size_t i = 0; i < p.c[j].c.size(); ++i)
            r.add_term(static_cast<int>(i), static_cast<int>(j), p.c[j].c[i]);
    return r;
}

BivariatePoly BivariatePoly::from_poly_in_x(const Poly<RatPoly>& p) {
    return from_poly_in_y(p).swap_vars();
}

BivariatePoly BivariatePoly::swap_vars() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms) r.terms[{e.second, e.first}] = c;
    return r;
}

BivariatePoly BivariatePoly::translate(const Rat& a, const Rat& b) const {
    // Binomial expansion per term; fixture degrees are small.
    BivariatePoly r;
    for (const auto& [e, c] : terms) {
        // (x + a)^i
        std::vector<Rat> xa(e.first + 1), yb(e.second + 1);
        Rat bin(1);
        for (int k = 0; k <= e.first; ++k) {
            xa[k] = bin * ipow(a, static_cast<unsigned long>(e.first - k));
            bin = bin * (e.first - k) / (k + 1);
        }
        bin = 1;
        for (int k = 0; k <= e.second; ++k) {
            yb[k] = bin * ipow(b, static_cast<unsigned long>(e.second - k));
            bin = bin * (e.second - k) / (k + 1);
        }
        for (int k = 0; k <= e.first; ++k)
            for (int l = 0; l <= e.second; ++l) r.add_term(k, l, c * xa[k] * yb[l]);
    }
    return r;
}

BivariatePoly BivariatePoly::shear(const Rat& a) const {
    BivariatePoly r;
    for (const auto& [e, c] : terms) {
        // (x + a y)^i expanded
        Rat bin(1);
        for (int k = 0; k <= e.first; ++k) {
            r.add_term(k, e.second + e.first - k,
                       c * bin * ipow(a, static_cast<unsigned long>(e.first - k)));
            bin = bin * (e.first - k) / (k + 1);
        }
    }
    return r;
}

BivariatePoly divexact(const BivariatePoly& a, const BivariatePoly& b) {
    if (b.zero()) throw error("bivariate divexact by zero");
    if (a.zero()) return {};
    Poly<RatPoly> pa = a.as_poly_in_y(), pb = b.as_poly_in_y();
    Poly<RatPoly> q = divexact(pa, pb);
    return BivariatePoly::from_poly_in_y(q);
}

RatPoly resultant_y(const BivariatePoly& p, const BivariatePoly& q) {
    if (p.zero() && q.zero()) throw error("resultant_y: both inputs zero");
    if (p.zero() || q.zero()) return {};
    return resultant(p.as_poly_in_y(), q.as_poly_in_y());
}

RatPoly discriminant_y(const BivariatePoly& p) {
    if (p.deg_y() < 1) throw error("discriminant_y: polynomial constant in y");
    RatPoly r = resultant_y(p, p.dy());
    if (r.zero()) return r;
    return primitive_part(r);
}

int root_multiplicity(const RatPoly& p, const Rat& a) {
    if (p.zero()) throw error("root_multiplicity of zero polynomial");
    RatPoly lin(std::vector<Rat>{-a, Rat(1)});
    RatPoly q = p;
    int m = 0;
    while (!q.zero() && sgn(q.eval(a)) == 0) {
        q = divexact(q, lin);
        ++m;
    }
    return m;
}

RealImagSplit real_imag_split(const BivariatePoly& p) {
    if (p.zero()) throw error("real_imag_split: zero polynomial");
    RealImagSplit out;
    int dy = p.deg_y();
    out.f_e.c.assign(dy + 1, BivariatePoly());
    out.f_o.c.assign(dy + 1, BivariatePoly());
    for (const auto& [e, c] : p.terms) {
        int i = e.first, j = e.second;
        // (u + iv)^j expanded; k = power of v
        Rat bin(1);
        for (int k = 0; k <= j; ++k) {
            Rat coeff = c * bin;
            if (k % 2 == 0) {
                if ((k / 2) % 2 == 1) coeff = -coeff;
                out.f_e.c[k].add_term(i, j - k, coeff);
            } else {
                if (((k - 1) / 2) % 2 == 1) coeff = -coeff;
                out.f_o.c[k].add_term(i, j - k, coeff);
            }
            bin = bin * (j - k) / (k + 1);
        }
    }
    out.f_e.trim();
    out.f_o.trim();
    // v divides f_o by construction (only odd powers of v appear)
    out.f_oo = out.f_o;
    if (!out.f_oo.zero()) {
        out.f_oo.c.erase(out.f_oo.c.begin());
        out.f_oo.trim();
    }
    return out;
}

VRemainder pseudo_remainder_in_v(const VPoly& f_e, const VPoly& f_oo) {
    if (f_oo.zero()) throw error("pseudo_remainder_in_v: zero divisor");
    if (f_e.degree() < f_oo.degree())
        throw error("pseudo_remainder_in_v: deg_v f_e < deg_v f_oo");
    auto [q, r] = pseudo_divrem(f_e, f_oo);
    VRemainder out;
    out.quotient = q;
    out.remainder = r;
    for (int k = 0; k <= r.degree(); ++k) {
        if (k == 0 || k == 2) continue;
        if (!r.coeff(k).zero())
            throw error("pseudo_remainder_in_v: remainder is not of the shape R2*v^2 + R0");
    }
    int delta = f_e.degree() - f_oo.degree();
    BivariatePoly den = ipow(f_oo.lc(), static_cast<unsigned long>(delta + 1));
    out.r2_num = r.coeff(2);
    out.r0_num = r.coeff(0);
    out.r2_den = den;
    out.r0_den = den;
    return out;
}

}  // namespace curvepi
