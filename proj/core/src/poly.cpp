#include "curvepi/poly.hpp"

namespace curvepi {

namespace {

// Yun's algorithm over a field of characteristic 0.
template <class R, class GcdFn, class NormFn>
std::vector<std::pair<Poly<R>, int>> yun(const Poly<R>& p, GcdFn gcd_fn, NormFn norm_fn) {
    std::vector<std::pair<Poly<R>, int>> out;
    if (p.zero() || p.degree() == 0) return out;
    Poly<R> dp = p.derivative();
    Poly<R> g = gcd_fn(p, dp);
    if (g.degree() == 0) {
        out.emplace_back(norm_fn(p), 1);
        return out;
    }
    Poly<R> c = divrem(p, g).first;
    Poly<R> d = divrem(dp, g).first - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        Poly<R> fi = gcd_fn(c, d);
        if (fi.degree() > 0) out.emplace_back(norm_fn(fi), i);
        c = divrem(c, fi).first;
        d = divrem(d, fi).first - c.derivative();
    }
    return out;
}

}  // namespace

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    return yun<Rat>(
        p, [](const RatPoly& a, const RatPoly& b) { return poly_gcd(a, b); },
        [](const RatPoly& a) { return primitive_part(a); });
}

std::vector<std::pair<GaussPoly, int>> squarefree_decomposition(const GaussPoly& p) {
    return yun<GaussRat>(
        p, [](const GaussPoly& a, const GaussPoly& b) { return poly_gcd_field(a, b); },
        [](const GaussPoly& a) {
            GaussRat inv = GaussRat(1) / a.lc();
            return a * inv;
        });
}

RatPoly squarefree_part(const RatPoly& p) {
    RatPoly r(Rat(1));
    for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
    return primitive_part(r);
}

GaussPoly squarefree_part(const GaussPoly& p) {
    GaussPoly r(GaussRat(1));
    for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
    if (!r.zero()) {
        GaussRat inv = GaussRat(1) / r.lc();
        r = r * inv;
    }
    return r;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    RatPoly p0 = squarefree_part(p);
    if (p0.zero()) return chain;
    chain.push_back(p0);
    if (p0.degree() == 0) return chain;
    chain.push_back(primitive_part(p0.derivative()));
    while (chain.back().degree() > 0) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = pseudo_divrem(a, b).second;
        if (r.zero()) break;  // cannot happen for a squarefree chain head
        // The true Euclidean remainder is r / lc(b)^(delta+1); primitive
        // scaling normalizes lc positive, so put the sign back by hand.
        int delta = a.degree() - b.degree();
        int mult_sign = (sgn(b.lc()) < 0 && ((delta + 1) & 1)) ? -1 : 1;
        int rem_sign = sgn(r.lc());
        RatPoly pp = primitive_part(r);
        chain.push_back(mult_sign * rem_sign < 0 ? pp : -pp);
    }
    return chain;
}

namespace {

int sign_variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count_closed(const RatPoly& p, const Rat& a, const Rat& b) {
    if (a > b) throw error("sturm_count_closed: empty interval (a > b)");
    RatPoly q = squarefree_part(p);
    if (q.zero()) throw error("sturm_count_closed: zero polynomial");
    if (q.degree() == 0) return 0;
    int extra = 0;
    if (sgn(q.eval(a)) == 0) {
        ++extra;
        q = divexact(q, RatPoly(std::vector<Rat>{-a, Rat(1)}));
    }
    if (a != b && sgn(q.eval(b)) == 0) {
        ++extra;
        q = divexact(q, RatPoly(std::vector<Rat>{-b, Rat(1)}));
    }
    if (a == b || q.degree() == 0) return extra;
    auto chain = sturm_chain(q);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b) + extra;
}

namespace {

// p squarefree, p(a) != 0, p(b) != 0; splits [a,b] until each piece holds
// one root.
void isolate_rec(const std::vector<RatPoly>& chain, const RatPoly& p, const Rat& a,
                 const Rat& b, std::vector<IsolatingInterval>& out) {
    int n = sign_variations_at(chain, a) - sign_variations_at(chain, b);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({a, b, 1});
        return;
    }
    Rat m = (a + b) / 2;
    if (sgn(p.eval(m)) == 0) {
        out.push_back({m, m, 1});
        // Shrink a window around the exact root m until it holds no other
        // root, then recurse on the two outer pieces.
        Rat w = (b - a) / 4096;
        while (true) {
            Rat lo = m - w, hi = m + w;
            if (sgn(p.eval(lo)) != 0 && sgn(p.eval(hi)) != 0 &&
                sturm_count_closed(p, lo, hi) == 1) {
                isolate_rec(chain, p, a, lo, out);
                isolate_rec(chain, p, hi, b, out);
                break;
            }
            w /= 16;
        }
    } else {
        isolate_rec(chain, p, a, m, out);
        isolate_rec(chain, p, m, b, out);
    }
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p, const Rat& a, const Rat& b) {
    if (a > b) throw error("isolate_real_roots: empty interval (a > b)");
    if (p.zero()) throw error("isolate_real_roots: zero polynomial");
    auto factors = squarefree_decomposition(p);
    RatPoly sf = squarefree_part(p);
    std::vector<IsolatingInterval> out;
    if (sf.degree() <= 0) return out;

    Rat lo = a, hi = b;
    if (sgn(sf.eval(lo)) == 0) out.push_back({lo, lo, 1});
    if (hi != lo && sgn(sf.eval(hi)) == 0) out.push_back({hi, hi, 1});
    RatPoly q = sf;
    for (auto& iv : out) q = divexact(q, RatPoly(std::vector<Rat>{-iv.lo, Rat(1)}));
    if (q.degree() > 0 && lo != hi) {
        auto chain = sturm_chain(q);
        isolate_rec(chain, q, lo, hi, out);
    }

    // Assign multiplicities by locating each interval inside a Yun factor.
    for (auto& iv : out) {
        for (const auto& [f, m] : factors) {
            int cnt = sturm_count_closed(f, iv.lo, iv.hi);
            if (cnt > 0) {
                iv.multiplicity = m;
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& u, const IsolatingInterval& v) { return u.lo < v.lo; });
    return out;
}

}  // namespace curvepi
