#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "altcohom/alt.hpp"

namespace altcohom::alt {

namespace {

// H^*(BA_4) as F2[a, b+, b-]/(b+^2 + b+ b- + b-^2 + a^3), normal form with b+ exponent <= 1.
using A4Mono = std::array<int, 3>;
using A4Poly = std::set<A4Mono>;

void a4_toggle(A4Poly& p, const A4Mono& m) {
    auto it = p.find(m);
    if (it != p.end()) p.erase(it);
    else p.insert(m);
}

A4Poly a4_reduce(const A4Mono& m) {
    A4Poly out;
    if (m[1] <= 1) {
        out.insert(m);
        return out;
    }
    // b+^2 = b+ b- + b-^2 + a^3
    A4Mono base{m[0], m[1] - 2, m[2]};
    for (const A4Mono& t : {A4Mono{base[0], base[1] + 1, base[2] + 1}, A4Mono{base[0], base[1], base[2] + 2},
                            A4Mono{base[0] + 3, base[1], base[2]}})
        for (const auto& r : a4_reduce(t)) a4_toggle(out, r);
    return out;
}

A4Poly a4_mul(const A4Poly& x, const A4Poly& y) {
    A4Poly out;
    for (const auto& a : x)
        for (const auto& b : y)
            for (const auto& r : a4_reduce({a[0] + b[0], a[1] + b[1], a[2] + b[2]})) a4_toggle(out, r);
    return out;
}

A4Poly a4_nf(const AltMonomial& m) {
    if (m.tail) return a4_reduce({m.tail->exps.empty() ? 0 : m.tail->exps[0], 0, 0});
    const Piece& p = m.pieces.at(0);
    int n = p.exps[1];
    A4Poly out;
    for (int i = 0; 2 * i < n; ++i) {
        if (!binom_mod2(n, i)) continue;
        // positive lift: b-^i b+^(n-i); the negative one swaps b+ and b-
        A4Mono t = m.sign ? A4Mono{p.exps[0], i, n - i} : A4Mono{p.exps[0], n - i, i};
        for (const auto& r : a4_reduce(t)) a4_toggle(out, r);
    }
    return out;
}

AltClass a4_from_nf(const A4Poly& target, int d) {
    auto basis = basis_alt(4, d);
    std::vector<A4Mono> monos;
    std::vector<A4Poly> images;
    for (const auto& b : basis) {
        images.push_back(a4_nf(b));
        for (const auto& t : images.back()) monos.push_back(t);
    }
    for (const auto& t : target) monos.push_back(t);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    auto vec = [&](const A4Poly& p) {
        BitVec v(monos.size());
        for (const auto& t : p) v.set(static_cast<std::size_t>(std::lower_bound(monos.begin(), monos.end(), t) - monos.begin()));
        return v;
    };
    Echelon ech(monos.size(), true);
    for (const auto& im : images) ech.insert(vec(im));
    auto coeff = ech.express(vec(target));
    if (!coeff || ech.rank() != basis.size()) throw std::logic_error("A4 normal form outside the basis");
    AltClass r = zero_class(4, d);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeff->get(k)) r.toggle(basis[k]);
    return r;
}

std::size_t factor_count(const AltMonomial& m) { return m.pieces.size() + (m.tail ? 1 : 0); }

AltClass cup_rel(const AltMonomial& x, const AltMonomial& y);

AltClass cup_rel(const AltClass& x, const AltClass& y) {
    AltClass r = zero_class(x.n, x.d + y.d);
    for (const auto& a : x.terms)
        for (const auto& b : y.terms) r += cup_rel(a, b);
    return r;
}

AltMonomial column_mono(int width, const std::vector<int>& exps) {
    bool charged = false;
    for (std::size_t l = 1; l < exps.size(); ++l) charged |= exps[l] > 0;
    if (charged) return AltMonomial{0, {Piece{width, exps}}, {}};
    Tail t{width, std::vector<int>(width / 2 - 1, 0)};
    t.exps.back() = exps[0];
    return AltMonomial{0, {}, t};
}

// positive column (exps over levels) times gamma_{1,k;w/2} for k < w/2
AltClass column_times_scale_one(const Piece& c, int k) {
    int w = c.width, n = w;
    std::size_t lev = 1;
    while (lev < c.exps.size() && c.exps[lev] == 0) ++lev;
    int ell = static_cast<int>(lev) + 1;
    int m = w >> ell;
    int step = 1 << (ell - 1);
    if (k % step != 0) return zero_class(n, c.degree() + k);
    int q = k / step;
    AltClass w_part = odot(cup_rel(gamma_pm(ell, q, 0), scale_one(k, k)), gamma_pm(ell, m - q, 0));
    std::vector<int> rest = c.exps;
    rest[lev] -= 1;
    return cup_rel(of(column_mono(w, rest)), w_part);
}

// positive column times negative column, both charged
AltClass mixed_columns(const Piece& c, const Piece& d) {
    int w = c.width;
    int dc = c.degree() + d.degree();
    // only gamma_{2,m}^+ gamma_{2,m}^- survives
    for (std::size_t l = 2; l < c.exps.size(); ++l)
        if (c.exps[l] || d.exps[l]) return zero_class(w, dc);
    if (c.exps[1] == 0 || d.exps[1] == 0) return zero_class(w, dc);
    int m = w >> 2;
    AltClass rel;
    if (m == 1) {
        throw std::logic_error("width-4 products use the A4 normal form");
    } else {
        rel = odot(cup_rel(gamma_pm(2, m - 1, 0), gamma_pm(2, m - 1, 0)), cup_rel(scale_one(2, 2), cup_rel(scale_one(2, 2), scale_one(2, 2))));
        if (m % 2 == 1) {
            AltClass s = gamma_pm(2, m, 0) + gamma_pm(2, m, 1);
            rel += cup_rel(s, s);
        }
    }
    std::vector<int> ce = c.exps, de = d.exps;
    ce[1] -= 1;
    de[1] -= 1;
    AltMonomial cr = column_mono(w, ce), dr = column_mono(w, de);
    if (dr.polarity() != 0) dr.sign = 1;
    return cup_rel(cup_rel(of(cr), of(dr)), rel);
}

AltClass single_factors(const AltMonomial& x, const AltMonomial& y) {
    int n = x.width();
    int d = x.degree() + y.degree();
    if (n == 4) return a4_from_nf(a4_mul(a4_nf(x), a4_nf(y)), d);
    if (x.tail && y.tail) {
        Tail t = *x.tail;
        for (std::size_t k = 0; k < t.exps.size(); ++k) t.exps[k] += y.tail->exps[k];
        return of(AltMonomial{0, {}, t});
    }
    if (x.tail) return single_factors(y, x);
    const Piece& c = x.pieces[0];
    if (y.tail) {
        // peel one generator of the tail
        Tail t = *y.tail;
        std::size_t k = 0;
        while (t.exps[k] == 0) ++k;
        t.exps[k] -= 1;
        int kk = static_cast<int>(k) + 2;
        AltClass first;
        if (kk == n / 2) {
            Piece p = c;
            p.exps[0] += 1;
            first = of(AltMonomial{x.sign, {p}, {}});
        } else {
            first = column_times_scale_one(c, kk);
            if (x.sign) first = conjugate(first);
        }
        return cup_rel(first, of(AltMonomial{0, {}, t}));
    }
    const Piece& e = y.pieces[0];
    if (x.sign == y.sign) {
        Piece p = c;
        for (std::size_t l = 0; l < p.exps.size(); ++l) p.exps[l] += e.exps[l];
        return of(AltMonomial{x.sign, {p}, {}});
    }
    AltClass r = x.sign == 0 ? mixed_columns(c, e) : mixed_columns(e, c);
    return r;
}

AltClass cup_rel(const AltMonomial& x, const AltMonomial& y) {
    int n = x.width();
    if (y.width() != n) throw std::invalid_argument("cup product of classes on different components");
    if (n == 0) return x.sign == y.sign ? of(x) : zero_class(0, 0);
    if (x.degree() == 0) return of(y);
    if (y.degree() == 0) return of(x);
    thread_local std::map<std::pair<AltMonomial, AltMonomial>, AltClass> memo;
    if (auto it = memo.find({x, y}); it != memo.end()) return it->second;
    AltClass r;
    if (y.polarity() < 0) {
        AltMonomial xb = x, yb = y;
        if (xb.polarity() != 0) xb.sign ^= 1;
        yb.sign ^= 1;
        r = conjugate(cup_rel(xb, yb));
    } else if (factor_count(y) >= 2) {
        AltMonomial f{0, {y.pieces[0]}, {}};
        AltMonomial rest = y;
        rest.sign = 0;
        rest.pieces.erase(rest.pieces.begin());
        r = zero_class(n, x.degree() + y.degree());
        for (const auto& [a, b] : coproduct(of(x), f.width())) {
            if (a.degree() + f.degree() < 0) continue;
            r += odot(cup_rel(a, f), cup_rel(b, rest));
        }
    } else if (factor_count(x) >= 2) {
        r = cup_rel(y, x);
    } else {
        r = single_factors(x, y);
    }
    memo.emplace(std::make_pair(x, y), r);
    return r;
}

}  // namespace

AltClass cup_by_relations(const AltClass& x, const AltClass& y) {
    if (x.n != y.n) return zero_class(x.n, x.d + y.d);
    return cup_rel(x, y);
}

}  // namespace altcohom::alt
