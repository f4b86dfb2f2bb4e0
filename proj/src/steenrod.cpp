#include "altcohom/steenrod.hpp"

#include <algorithm>
#include <stdexcept>

namespace altcohom::steen {

using alt::Detection;

std::pair<int, int> bipartition_vector(int level, int p, int lp) {
    int s = 1 << p;
    return {s * ((1 << level) - (1 << lp)) + s - 1, s};
}

int BiPartition::coeff(int p, int lp) const {
    auto it = coeffs.find({p, lp});
    return it == coeffs.end() ? 0 : it->second;
}

std::string BiPartition::str() const {
    std::string out = "(" + std::to_string(j) + "," + std::to_string(m) + ") =";
    bool first = true;
    for (const auto& [key, c] : coeffs) {
        auto [vj, vm] = bipartition_vector(level, key.first, key.second);
        out += std::string(first ? " " : " + ") + std::to_string(c) + "*(" + std::to_string(vj) + "," + std::to_string(vm) + ")";
        first = false;
    }
    if (flag) out += std::string(first ? " " : " + ") + "(1,1)";
    else if (first) out += " 0";
    return out;
}

namespace {

struct VectorSpec {
    int p, lp, vj, vm;
};

void bipartition_rec(const std::vector<VectorSpec>& vs, std::size_t idx, int rj, int rm, BiPartition& cur,
                     std::vector<BiPartition>& out) {
    if (idx == vs.size()) {
        if (rj == 0 && rm == 0) out.push_back(cur);
        return;
    }
    const auto& v = vs[idx];
    for (int c = 0; c * v.vm <= rm && c * v.vj <= rj; ++c) {
        if (c > 0) cur.coeffs[{v.p, v.lp}] = c;
        bipartition_rec(vs, idx + 1, rj - c * v.vj, rm - c * v.vm, cur, out);
    }
    cur.coeffs.erase({v.p, v.lp});
}

}  // namespace

std::vector<BiPartition> enumerate_bipartitions(int j, int m, int level, bool modified) {
    if (level < 1) throw std::invalid_argument("bi-partitions need level >= 1");
    if (modified && level != 2) throw std::invalid_argument("modified bi-partitions are defined at level 2 only");
    std::vector<BiPartition> out;
    if (j < 0 || m < 0) return out;
    std::vector<VectorSpec> vs;
    for (int p = 0; (1 << p) <= std::max(m, 1); ++p)
        for (int lp = p == 0 ? 0 : 1; lp <= level; ++lp) {
            auto [vj, vm] = bipartition_vector(level, p, lp);
            vs.push_back({p, lp, vj, vm});
        }
    for (int f = 0; f <= (modified ? 1 : 0); ++f) {
        if (j < f || m < f) break;
        BiPartition cur;
        cur.level = level;
        cur.j = j;
        cur.m = m;
        cur.flag = f == 1;
        bipartition_rec(vs, 0, j - f, m - f, cur, out);
    }
    return out;
}

int Generator::points() const { return kind == Kind::Charged ? m << ell : 2 * m; }

int Generator::degree() const { return kind == Kind::Charged ? m * ((1 << ell) - 1) : k; }

AltClass Generator::cls() const {
    if (kind == Kind::Charged) return alt::gamma_pm(ell, m, sign);
    if (k == 0) return alt::unit(m);
    if (k == 1 || k > m) return alt::zero_class(2 * m, k);
    return alt::scale_one(k, m);
}

std::string Generator::str() const {
    if (kind == Kind::Charged)
        return std::string("g") + (sign ? "-" : "+") + "(" + std::to_string(ell) + "," + std::to_string(m) + ")";
    return "s(" + std::to_string(k) + ";" + std::to_string(m) + ")";
}

Factorization factorize(const AltMonomial& mono) {
    Factorization f;
    f.sign = mono.sign;
    for (const auto& piece : mono.pieces) {
        HopfFactor h{piece.width, {}};
        if (piece.width == 4) {
            // a^p sum_{2i<n} binom(n,i) b-^i b+^(n-i)
            int p = piece.exps[0], n = piece.exps[1];
            for (int i = 0; 2 * i < n; ++i) {
                if (!binom_mod2(n, i)) continue;
                CupMonomial c;
                if (p) c.push_back({Generator::scale_one(2, 2), p});
                if (i) c.push_back({Generator::charged(2, 1, 1), i});
                c.push_back({Generator::charged(2, 1, 0), n - i});
                h.terms.push_back(c);
            }
        } else {
            CupMonomial c;
            for (std::size_t l = 1; l <= piece.exps.size(); ++l) {
                int e = piece.exps[l - 1];
                if (!e) continue;
                if (l == 1) c.push_back({Generator::scale_one(piece.width / 2, piece.width / 2), e});
                else c.push_back({Generator::charged(static_cast<int>(l), piece.width >> l), e});
            }
            h.terms.push_back(c);
        }
        f.factors.push_back(h);
    }
    if (mono.tail) {
        int m = mono.tail->width / 2;
        CupMonomial c;
        for (std::size_t k = 0; k < mono.tail->exps.size(); ++k)
            if (mono.tail->exps[k]) c.push_back({Generator::scale_one(static_cast<int>(k) + 2, m), mono.tail->exps[k]});
        f.factors.push_back(HopfFactor{mono.tail->width, {c}});
    }
    return f;
}

namespace {

AltClass factor_class(const HopfFactor& h) {
    AltClass r;
    bool first = true;
    for (const auto& term : h.terms) {
        AltClass t = alt::unit(h.width / 2);
        for (const auto& [g, e] : term) t = alt::cup(t, alt::power(g.cls(), e));
        if (first) r = t;
        else r += t;
        first = false;
    }
    return r;
}

void add_terms(AltClass& acc, const AltClass& x) {
    for (const auto& t : x.terms) acc.toggle(t);
}

// binomial coefficient mod 2 extended to negative tops by binom(n,k) = (-1)^k binom(k-n-1,k)
bool binom_signed(long long n, long long k) {
    if (k < 0) return false;
    if (n < 0) return binom_mod2(k - n - 1, k);
    return binom_mod2(n, k);
}

}  // namespace

AltClass evaluate(const Factorization& f) {
    AltClass r = f.sign ? alt::sign_minus() : alt::sign_plus();
    for (const auto& h : f.factors) r = alt::odot(r, factor_class(h));
    return r;
}

AltClass wu_W(int i, int j, int m) {
    if (i == 0 && j == 0 && m == 0) return alt::sign_plus() + alt::sign_minus();
    AltClass r = alt::zero_class(2 * m, i + j);
    for (int l = 0; l <= std::min(j, m - i); ++l)
        if (binom_signed(i - j + l - 1, l))
            add_terms(r, alt::cup(Generator::scale_one(j - l, m).cls(), Generator::scale_one(i + l, m).cls()));
    return r;
}

namespace {

// gamma^+_{lambda,N} with gamma_{0,N} the unit on N points and gamma_{1,N} = gamma_{1,N;N}
AltClass lower_factor(int lambda, int count) {
    if (lambda == 0) return alt::unit(count / 2);
    if (lambda == 1) return alt::scale_one(count, count);
    return alt::gamma_pm(lambda, count, 0);
}

AltClass sq_charged(int j, int ell, int m) {
    AltClass r = alt::zero_class(m << ell, m * ((1 << ell) - 1) + j);
    for (const auto& bp : enumerate_bipartitions(j, m, ell, ell == 2)) {
        AltClass term = alt::sign_plus();
        for (const auto& [key, c] : bp.coeffs) {
            auto [p, lp] = key;
            term = alt::odot(term, alt::cup(alt::gamma_pm(ell + p, c, 0), lower_factor(ell - lp, c << (p + lp))));
        }
        if (bp.flag) term = alt::odot(term, alt::power(alt::scale_one(2, 2), 2));
        // at level 2 each copy of (2,1) exchanges the charge: Sq^2 b+ = a b- in F2[x,y]^{C3}
        if (ell == 2 && bp.coeff(0, 1) % 2 == 1) term = alt::conjugate(term);
        add_terms(r, term);
    }
    return r;
}

AltClass sq_scale_one(int j, int k, int m) {
    AltClass r = alt::zero_class(2 * m, k + j);
    for (const auto& bp : enumerate_bipartitions(j, k, 1)) {
        int a = bp.coeff(0, 0), b = bp.coeff(0, 1);
        AltClass term = wu_W(a + b, a, a + b + m - k);
        for (const auto& [key, c] : bp.coeffs)
            if (key.first > 0) term = alt::odot(term, alt::gamma_pm(1 + key.first, c, 0));
        add_terms(r, term);
    }
    return r;
}

}  // namespace

AltClass sq_generator(int j, const Generator& g) {
    int n = g.points(), d = g.degree();
    if (j < 0 || j > d) return alt::zero_class(n, d + std::max(j, 0));
    if (j == 0) return g.cls();
    if (g.kind == Generator::Kind::Charged) {
        if (g.ell < 2) throw std::invalid_argument("charged generators need level >= 2");
        AltClass r = sq_charged(j, g.ell, g.m);
        return g.sign ? alt::conjugate(r) : r;
    }
    if (g.k < 2 || g.k > g.m) return alt::zero_class(n, d + j);
    return sq_scale_one(j, g.k, g.m);
}

namespace {

// total square of a class of bidegree (n, d): entry t is Sq^t, t = 0..d
struct Graded {
    int n = 0, d = 0;
    std::vector<AltClass> s;
};

template <class Op>
Graded combine(const Graded& a, const Graded& b, int n, Op op) {
    Graded r{n, a.d + b.d, {}};
    for (int t = 0; t <= r.d; ++t) r.s.push_back(alt::zero_class(n, r.d + t));
    for (int u = 0; u <= a.d; ++u)
        for (int v = 0; v <= b.d; ++v)
            if (!a.s[u].zero() && !b.s[v].zero()) add_terms(r.s[u + v], op(a.s[u], b.s[v]));
    return r;
}

const Graded& total_generator(const Generator& g) {
    thread_local std::map<Generator, Graded> memo;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    Graded r{g.points(), g.degree(), {}};
    for (int t = 0; t <= r.d; ++t) r.s.push_back(sq_generator(t, g));
    return memo.emplace(g, std::move(r)).first->second;
}

Graded total_factor(const HopfFactor& h) {
    Graded sum;
    bool first = true;
    for (const auto& term : h.terms) {
        Graded t{h.width, 0, {alt::unit(h.width / 2)}};
        for (const auto& [g, e] : term)
            for (int k = 0; k < e; ++k) t = combine(t, total_generator(g), h.width, alt::cup);
        if (first) sum = t;
        else
            for (int u = 0; u <= sum.d; ++u) add_terms(sum.s[u], t.s[u]);
        first = false;
    }
    return sum;
}

const Graded& total_monomial(const AltMonomial& m) {
    thread_local std::map<AltMonomial, Graded> memo;
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    Factorization f = factorize(m);
    Graded acc{0, 0, {f.sign ? alt::sign_minus() : alt::sign_plus()}};
    for (const auto& h : f.factors) {
        Graded t = total_factor(h);
        acc = combine(acc, t, acc.n + t.n, alt::odot);
    }
    return memo.emplace(m, std::move(acc)).first->second;
}

}  // namespace

std::vector<AltClass> sq_total(const AltClass& x) {
    std::vector<AltClass> out;
    for (int t = 0; t <= x.d; ++t) out.push_back(alt::zero_class(x.n, x.d + t));
    for (const auto& m : x.terms) {
        const auto& g = total_monomial(m);
        for (int t = 0; t <= x.d; ++t) add_terms(out[t], g.s[t]);
    }
    return out;
}

AltClass sq(int j, const AltClass& x) {
    if (j < 0) return alt::zero_class(x.n, x.d);
    if (j > x.d) return alt::zero_class(x.n, x.d + j);
    AltClass r = alt::zero_class(x.n, x.d + j);
    for (const auto& m : x.terms) add_terms(r, total_monomial(m).s[j]);
    return r;
}

namespace {

template <class Sq>
AltTensor cartan_tensor(int j, const AltTensor& t, Sq sqf) {
    AltTensor out;
    for (const auto& [a, b] : t)
        for (int u = std::max(0, j - b.degree()); u <= std::min(j, a.degree()); ++u) {
            AltClass l = sqf(u, a), r = sqf(j - u, b);
            for (const auto& x : l.terms)
                for (const auto& y : r.terms) alt::toggle(out, x, y);
        }
    return out;
}

AltClass sq_detect_mono(int j, const AltMonomial& m) {
    int n = m.width(), d = m.degree();
    if (j == 0) return alt::of(m);
    if (j > d || n == 0) return alt::zero_class(n, d + j);
    thread_local std::map<std::pair<AltMonomial, int>, AltClass> memo;
    if (auto it = memo.find({m, j}); it != memo.end()) return it->second;
    Detection det = alt::detect(alt::of(m)), target;
    for (const auto& [i, t] : det.coproduct) target.coproduct[i] = cartan_tensor(j, t, sq_detect_mono);
    if (det.v_plus) target.v_plus = sq_poly(j, *det.v_plus);
    if (det.v_minus) target.v_minus = sq_poly(j, *det.v_minus);
    if (det.av) target.av = sq_poly(j, *det.av);
    auto r = alt::solve_detection(n, d + j, target);
    if (!r) throw std::logic_error("squared detection data of " + m.str() + " is not the data of a class");
    return memo.emplace(std::make_pair(m, j), *r).first->second;
}

}  // namespace

AltTensor sq_tensor(int j, const AltTensor& t) {
    return cartan_tensor(j, t, [](int u, const AltMonomial& a) { return sq(u, alt::of(a)); });
}

AltClass sq_by_detection(int j, const AltClass& x) {
    if (j < 0) return alt::zero_class(x.n, x.d);
    AltClass r = alt::zero_class(x.n, x.d + j);
    for (const auto& m : x.terms) add_terms(r, sq_detect_mono(j, m));
    return r;
}

MultiPoly sq_poly(int j, const MultiPoly& p) {
    MultiPoly r(p.nvars());
    if (j < 0) return r;
    for (const auto& e : p.terms())
        for (const auto& c : compositions(j, p.nvars())) {
            bool ok = true;
            for (std::size_t i = 0; i < c.size() && ok; ++i) ok = binom_mod2(e[i], c[i]);
            if (!ok) continue;
            std::vector<int> f = e;
            for (std::size_t i = 0; i < c.size(); ++i) f[i] += c[i];
            r.toggle(f);
        }
    return r;
}

}  // namespace altcohom::steen
