#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "curvepi/rational.hpp"

namespace curvepi {

// Dense univariate polynomial over a commutative coefficient domain R.
// Coefficients are stored lowest-degree first and kept trimmed (no zero
// leading coefficient).  R must provide ring operations, operator==, and a
// free is_zero(); the PRS routines additionally need divexact().
template <class R>
struct Poly {
    std::vector<R> c;

    Poly() = default;
    explicit Poly(R a) {
        c.push_back(std::move(a));
        trim();
    }
    explicit Poly(std::vector<R> cs) : c(std::move(cs)) { trim(); }

    static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const R& lc() const {
        assert(!c.empty());
        return c.back();
    }
    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return R(0);
        return c[i];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), R(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), R(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, R(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const R& s) {
        Poly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Multiply by x^k.
    Poly shifted(int k) const {
        if (zero()) return {};
        Poly r;
        r.c.assign(c.size() + k, R(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }

    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * R(static_cast<long>(i));
        r.trim();
        return r;
    }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + U(c[i]);
        return acc;
    }
};

using RatPoly = Poly<Rat>;
using GaussPoly = Poly<GaussRat>;

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.zero();
}

// ---------------------------------------------------------------------------
// Division

// Field coefficients: standard long division.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& a, const Poly<R>& b) {
    if (b.zero()) throw error("polynomial division by zero");
    Poly<R> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(a.degree() - b.degree() + 1, R(0));
    while (!r.zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        R f = r.lc() / b.lc();
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] = r.c[i + k] - f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

// Exact division in R[x]; throws if the division leaves a remainder.
template <class R>
Poly<R> divexact(const Poly<R>& a, const Poly<R>& b) {
    if (b.zero()) throw error("polynomial divexact by zero");
    if (a.zero()) return {};
    if (a.degree() < b.degree()) throw error("divexact: degree mismatch");
    Poly<R> q, r = a;
    q.c.assign(a.degree() - b.degree() + 1, R(0));
    while (!r.zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        R f = divexact(r.lc(), b.lc());
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] = r.c[i + k] - f * b.c[i];
        r.trim();
    }
    if (!r.zero()) throw error("divexact: inexact polynomial division");
    q.trim();
    return q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class R>
std::pair<Poly<R>, Poly<R>> pseudo_divrem(const Poly<R>& a, const Poly<R>& b) {
    if (b.zero()) throw error("pseudo-division by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return {{}, a};
    Poly<R> q, r = a;
    q.c.assign(da - db + 1, R(0));
    R d = b.lc();
    for (int k = da - db; k >= 0; --k) {
        if (r.degree() == db + k) {
            R f = r.lc();
            for (auto& x : q.c) x = x * d;
            q.c[k] = q.c[k] + f;
            for (auto& x : r.c) x = x * d;
            for (int i = 0; i <= db; ++i) r.c[i + k] = r.c[i + k] - f * b.c[i];
            r.trim();
        } else {
            for (auto& x : q.c) x = x * d;
            for (auto& x : r.c) x = x * d;
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

// ---------------------------------------------------------------------------
// Subresultant PRS resultant (Cohen, Algorithm 3.3.7).  Controls coefficient
// blowup where naive Euclid would explode at degree 6 with big rationals.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.zero() && b.zero()) throw error("resultant of two zero polynomials");
    if (a.zero() || b.zero()) return R(0);
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    if (b.degree() == 0) return ipow(b.lc(), static_cast<unsigned long>(a.degree()));
    R g(1), h(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        Poly<R> r = pseudo_divrem(a, b).second;
        a = b;
        R divisor = g * ipow(h, static_cast<unsigned long>(delta));
        if (r.zero())
            b = Poly<R>();
        else {
            Poly<R> nb;
            nb.c.resize(r.c.size());
            for (size_t i = 0; i < r.c.size(); ++i) nb.c[i] = divexact(r.c[i], divisor);
            nb.trim();
            b = nb;
        }
        g = a.lc();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = divexact(ipow(g, static_cast<unsigned long>(delta)),
                         ipow(h, static_cast<unsigned long>(delta - 1)));
        if (b.zero()) return R(0);
        if (b.degree() == 0) break;
    }
    int da = a.degree();
    R num = ipow(b.lc(), static_cast<unsigned long>(da));
    if (da <= 1) return (s < 0) ? -num : num;
    R res = divexact(num, ipow(h, static_cast<unsigned long>(da - 1)));
    return (s < 0) ? -res : res;
}

// ---------------------------------------------------------------------------
// Content / primitive part over Q (integer-primitive, positive leading
// coefficient); the sign goes into the content.
inline Rat rat_poly_content(const RatPoly& p) {
    if (p.zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& q : p.c) {
        if (sgn(q) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(p.lc()) < 0) content = -content;
    return content;
}

inline RatPoly primitive_part(const RatPoly& p) {
    if (p.zero()) return p;
    Rat c = rat_poly_content(p);
    RatPoly r = p;
    for (auto& x : r.c) x /= c;
    return r;
}

// Primitive PRS gcd over Q; result is integer-primitive with positive lc.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    if (a.zero()) return primitive_part(b);
    if (b.zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (true) {
        if (b.degree() == 0) return RatPoly(Rat(1));
        RatPoly r = pseudo_divrem(a, b).second;
        if (r.zero()) return b;
        a = b;
        b = primitive_part(r);
    }
}

// Monic Euclid gcd for field coefficients (used over Q(i); fiber degrees
// are small so growth is harmless).
template <class R>
Poly<R> poly_gcd_field(Poly<R> a, Poly<R> b) {
    while (!b.zero()) {
        Poly<R> r = divrem(a, b).second;
        a = b;
        b = r;
    }
    if (a.zero()) return a;
    R inv = R(1) / a.lc();
    return a * inv;
}

inline RatPoly make_monic(const RatPoly& p) {
    if (p.zero()) return p;
    Rat inv = 1 / p.lc();
    return p * inv;
}

// ---------------------------------------------------------------------------
// Yun squarefree decomposition: p = c * prod f_i^i with f_i squarefree and
// pairwise coprime; only the nontrivial factors (degree >= 1) are returned.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);
std::vector<std::pair<GaussPoly, int>> squarefree_decomposition(const GaussPoly& p);

// Product of the distinct irreducible factors, primitive/monic normalized.
RatPoly squarefree_part(const RatPoly& p);
GaussPoly squarefree_part(const GaussPoly& p);

// ---------------------------------------------------------------------------
// Sturm machinery (exact, over Q).

// Sturm chain of the squarefree part, every term scaled to an
// integer-primitive representative (positive scaling preserves signs).
std::vector<RatPoly> sturm_chain(const RatPoly& p);

// Number of distinct real roots of p in the closed interval [a, b].
int sturm_count_closed(const RatPoly& p, const Rat& a, const Rat& b);

struct IsolatingInterval {
    Rat lo, hi;   // lo == hi means the root is found exactly
    int multiplicity = 1;
};

// Isolating intervals (with multiplicities from the squarefree
// decomposition) for all real roots of p in [a, b].
std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p, const Rat& a, const Rat& b);

}  // namespace curvepi
