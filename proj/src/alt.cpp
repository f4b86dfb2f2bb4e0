#include "altcohom/alt.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace altcohom::alt {

namespace {

bool power_of_two(int w) { return w > 0 && (w & (w - 1)) == 0; }

int level_degree(int width, int ell) {
    if (ell == 1) return width / 2;
    return (width >> ell) * ((1 << ell) - 1);
}

std::string pow_str(const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); }

void check_points(int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("alternating components have an even number of points");
    if (n > kMaxPoints) throw ResourceError("alternating model is limited to " + std::to_string(kMaxPoints) + " points");
}

}  // namespace

int Piece::degree() const {
    if (width == 4) return 2 * exps.at(0) + 3 * exps.at(1);
    int d = 0;
    for (std::size_t l = 1; l <= exps.size(); ++l) d += exps[l - 1] * level_degree(width, static_cast<int>(l));
    return d;
}

std::string Piece::str() const {
    if (width == 4) {
        if (exps[1] != 1) return "L(" + std::to_string(exps[0]) + "," + std::to_string(exps[1]) + ")";
        std::string s = exps[0] ? pow_str("s(2;2)", exps[0]) + "*" : "";
        return s + "g+(2,1)";
    }
    std::string s;
    for (std::size_t l = 1; l <= exps.size(); ++l) {
        if (!exps[l - 1]) continue;
        if (!s.empty()) s += "*";
        int m = width >> l;
        if (l == 1) s += pow_str("s(" + std::to_string(m) + ";" + std::to_string(m) + ")", exps[0]);
        else s += pow_str("g+(" + std::to_string(l) + "," + std::to_string(m) + ")", exps[l - 1]);
    }
    return s;
}

int Tail::degree() const {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * static_cast<int>(i + 2);
    return d;
}

std::string Tail::str() const {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i]) continue;
        if (!s.empty()) s += "*";
        s += pow_str("s(" + std::to_string(i + 2) + ";" + std::to_string(width / 2) + ")", exps[i]);
    }
    return s.empty() ? "1(" + std::to_string(width / 2) + ")" : s;
}

int AltMonomial::width() const {
    int w = tail ? tail->width : 0;
    for (const auto& p : pieces) w += p.width;
    return w;
}

int AltMonomial::degree() const {
    int d = tail ? tail->degree() : 0;
    for (const auto& p : pieces) d += p.degree();
    return d;
}

int AltMonomial::polarity() const {
    if (tail) return 0;
    if (pieces.empty() && width() > 0) return 0;
    return sign ? -1 : 1;
}

std::string AltMonomial::str() const {
    if (width() == 0) return sign ? "1-" : "1+";
    std::vector<std::string> parts;
    if (sign) parts.push_back("1-");
    for (const auto& p : pieces) parts.push_back(p.str());
    if (tail) parts.push_back(tail->str());
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += " o ";
        s += p;
    }
    return s;
}

void AltClass::toggle(const AltMonomial& m) {
    auto it = terms.find(m);
    if (it != terms.end()) terms.erase(it);
    else terms.insert(m);
}

AltClass& AltClass::operator+=(const AltClass& o) {
    if (o.zero()) return *this;
    if (zero()) {
        n = o.n;
        d = o.d;
    } else if (n != o.n || d != o.d) {
        throw std::invalid_argument("sum of classes in different bidegrees");
    }
    for (const auto& m : o.terms) toggle(m);
    return *this;
}

std::string AltClass::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        s += t.str();
    }
    return s;
}

AltClass of(const AltMonomial& m) {
    AltClass c{m.width(), m.degree(), {}};
    c.terms.insert(m);
    return c;
}

AltClass zero_class(int n, int d) { return AltClass{n, d, {}}; }

void toggle(AltTensor& t, const AltMonomial& a, const AltMonomial& b) {
    auto [it, fresh] = t.insert({a, b});
    if (!fresh) t.erase(it);
}

std::string tensor_str(const AltTensor& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [a, b] : t) {
        if (!s.empty()) s += " + ";
        s += "(" + a.str() + ")|(" + b.str() + ")";
    }
    return s;
}

// ---------------------------------------------------------------- basis

namespace {

std::vector<std::vector<int>> exponent_vectors(const std::vector<int>& weights, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(weights.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == weights.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e * weights[i] <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e * weights[i]);
        }
        cur[i] = 0;
    };
    rec(0, d);
    return out;
}

std::vector<Tail> tails(int width, int d) {
    std::vector<Tail> out;
    if (width < 2) return out;
    int m = width / 2;
    std::vector<int> weights;
    for (int k = 2; k <= m; ++k) weights.push_back(k);
    for (auto& e : exponent_vectors(weights, d)) out.push_back(Tail{width, e});
    return out;
}

std::vector<Piece> pieces_up_to(int max_width, int max_degree) {
    std::vector<Piece> out;
    for (int w = 4; w <= max_width; w *= 2) {
        int k = 0;
        while ((1 << k) < w) ++k;
        for (int d = 1; d <= max_degree; ++d) {
            std::vector<int> weights;
            for (int l = 1; l <= k; ++l) weights.push_back(level_degree(w, l));
            for (auto& e : exponent_vectors(weights, d)) {
                bool charged = false;
                for (int l = 2; l <= k; ++l) charged |= e[l - 1] > 0;
                if (charged) out.push_back(Piece{w, e});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<AltMonomial> basis_alt(int n, int d) {
    check_points(n);
    std::vector<AltMonomial> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out = {AltMonomial{0, {}, {}}, AltMonomial{1, {}, {}}};
        return out;
    }
    auto cand = pieces_up_to(n, d);
    std::vector<Piece> chosen;
    std::sort(cand.begin(), cand.end());
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int w, int deg) {
        if (w < n) {
            for (auto& t : tails(n - w, d - deg)) out.push_back(AltMonomial{0, chosen, t});
        } else if (deg == d && !chosen.empty()) {
            out.push_back(AltMonomial{0, chosen, {}});
            out.push_back(AltMonomial{1, chosen, {}});
        }
        for (std::size_t j = i; j < cand.size(); ++j) {
            const Piece& p = cand[j];
            if (w + p.width > n || deg + p.degree() > d) continue;
            chosen.push_back(p);
            rec(j + 1, w + p.width, deg + p.degree());
            chosen.pop_back();
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> poincare_alt(int n, int max_degree) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= max_degree; ++d) out.push_back(basis_alt(n, d).size());
    return out;
}

// ---------------------------------------------------------------- generators

AltClass sign_plus() { return of(AltMonomial{0, {}, {}}); }
AltClass sign_minus() { return of(AltMonomial{1, {}, {}}); }

AltClass unit(int m) {
    if (m == 0) return sign_plus() + sign_minus();
    check_points(2 * m);
    return of(AltMonomial{0, {}, Tail{2 * m, std::vector<int>(std::max(0, m - 1), 0)}});
}

AltClass scale_one(int k, int m) {
    if (k == 0) return unit(m);
    if (k < 0 || k > m) throw std::invalid_argument("scale-one generator needs 0 <= k <= m");
    check_points(2 * m);
    if (k == 1) return zero_class(2 * m, 1);
    Tail t{2 * m, std::vector<int>(m - 1, 0)};
    t.exps[k - 2] = 1;
    return of(AltMonomial{0, {}, t});
}

AltClass gamma_pm(int ell, int m, int sign) {
    if (ell < 2 || m < 0) throw std::invalid_argument("charged generator needs ell >= 2, m >= 0");
    if (m == 0) return sign ? sign_minus() : sign_plus();
    int w = m << ell;
    check_points(w);
    if (!power_of_two(w)) throw ResourceError("charged generator width is not a power of two");
    if (w == 4) return of(AltMonomial{sign, {Piece{4, {0, 1}}}, {}});
    int k = 0;
    while ((1 << k) < w) ++k;
    Piece p{w, std::vector<int>(k, 0)};
    p.exps[ell - 1] = 1;
    return of(AltMonomial{sign, {p}, {}});
}

AltClass a4_lift(int p, int n, int sign) {
    if (p < 0 || n < 1) throw std::invalid_argument("A4 lift needs p >= 0, n >= 1");
    return of(AltMonomial{sign, {Piece{4, {p, n}}}, {}});
}

// ---------------------------------------------------------------- conjugation and transfer product

namespace {

AltMonomial conj_mono(const AltMonomial& m) {
    if (m.polarity() == 0) return m;
    AltMonomial r = m;
    r.sign ^= 1;
    return r;
}

AltClass odot_basis(const AltMonomial& a, const AltMonomial& b);
const std::map<int, AltTensor>& full_coproduct(const AltMonomial& x);
Detection detect_mono(const AltMonomial& x);
AltClass cup_basis(const AltMonomial& a, const AltMonomial& b);
AltClass solve_or_throw(int n, int d, const Detection& det, const char* what);

enum class Polarization { First, Last, None };

bool keep_term(const AltMonomial& a1, const AltMonomial& a2, const AltMonomial& b1, const AltMonomial& b2,
               Polarization pol) {
    int p[4] = {a1.polarity(), a2.polarity(), b1.polarity(), b2.polarity()};
    if (pol == Polarization::None) return true;
    if (pol == Polarization::First) {
        for (int v : p)
            if (v != 0) return v > 0;
    } else {
        for (int i = 3; i >= 0; --i)
            if (p[i] != 0) return p[i] > 0;
    }
    return false;
}

void add_products(AltTensor& out, const AltClass& l, const AltClass& r) {
    for (const auto& x : l.terms)
        for (const auto& y : r.terms) toggle(out, x, y);
}

// proper component i of Delta(alpha o beta) from the polarized formula
AltTensor polarized_component(const AltMonomial& alpha, const AltMonomial& beta, int i, Polarization pol) {
    AltTensor out;
    int na = alpha.width(), nb = beta.width();
    const auto& da = full_coproduct(alpha);
    const auto& db = full_coproduct(beta);
    for (int i1 = std::max(0, i - nb); i1 <= std::min(na, i); i1 += 2) {
        auto ita = da.find(i1);
        auto itb = db.find(i - i1);
        if (ita == da.end() || itb == db.end()) continue;
        for (const auto& [a1, a2] : ita->second)
            for (const auto& [b1, b2] : itb->second) {
                if (!keep_term(a1, a2, b1, b2, pol)) continue;
                add_products(out, odot_basis(a1, b1), odot_basis(a2, b2));
            }
    }
    return out;
}

Detection decomposable_detection(const AltMonomial& alpha, const AltMonomial& beta) {
    int n = alpha.width() + beta.width();
    Detection det;
    for (int i = 2; i <= n - 2; i += 2) det.coproduct[i] = polarized_component(alpha, beta, i, Polarization::First);
    int d = alpha.degree() + beta.degree();
    if (n == 4) det.v_plus = MultiPoly(2);
    if (n == 8) det.v_plus = det.v_minus = MultiPoly(3);
    det.av = MultiPoly(n / 2 - 1);
    (void)d;
    return det;
}

AltClass odot_basis(const AltMonomial& a, const AltMonomial& b) {
    if (a.width() == 0) return a.sign ? of(conj_mono(b)) : of(b);
    if (b.width() == 0) return b.sign ? of(conj_mono(a)) : of(a);
    int n = a.width() + b.width(), d = a.degree() + b.degree();
    check_points(n);
    if (a.tail && b.tail) return zero_class(n, d);
    thread_local std::map<std::pair<AltMonomial, AltMonomial>, AltClass> memo;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    AltMonomial r;
    r.pieces = a.pieces;
    r.pieces.insert(r.pieces.end(), b.pieces.begin(), b.pieces.end());
    std::sort(r.pieces.begin(), r.pieces.end());
    r.tail = a.tail ? a.tail : b.tail;
    r.sign = r.tail ? 0 : (a.sign ^ b.sign);
    AltClass out;
    if (std::adjacent_find(r.pieces.begin(), r.pieces.end()) == r.pieces.end()) {
        out = of(r);
    } else {
        out = solve_or_throw(n, d, decomposable_detection(a, b), "transfer product");
    }
    memo.emplace(key, out);
    return out;
}

}  // namespace

AltClass conjugate(const AltClass& x) {
    AltClass r{x.n, x.d, {}};
    for (const auto& m : x.terms) r.toggle(conj_mono(m));
    return r;
}

namespace {

// (ell, m) when m is gamma^+_{ell,m}
std::optional<std::pair<int, int>> positive_generator(const AltMonomial& m) {
    if (m.sign || m.tail || m.pieces.size() != 1) return std::nullopt;
    const Piece& p = m.pieces[0];
    if (p.width == 4) return p.exps == std::vector<int>{0, 1} ? std::optional(std::pair(2, 1)) : std::nullopt;
    std::optional<std::pair<int, int>> found;
    for (std::size_t l = 1; l <= p.exps.size(); ++l) {
        if (!p.exps[l - 1]) continue;
        if (found || p.exps[l - 1] != 1 || l == 1) return std::nullopt;
        found = std::pair(static_cast<int>(l), p.width >> l);
    }
    return found;
}

}  // namespace

AltClass odot(const AltClass& x, const AltClass& y) {
    AltClass r = zero_class(x.n + y.n, x.d + y.d);
    if (x.n + y.n > kMaxPoints && x.terms.size() == 1 && y.terms.size() == 1) {
        // beyond the model, only the vanishing case of the binomial merge rule is available
        auto a = positive_generator(*x.terms.begin()), b = positive_generator(*y.terms.begin());
        if (a && b && a->first == b->first && !binom_mod2(a->second + b->second, b->second)) return r;
    }
    for (const auto& a : x.terms)
        for (const auto& b : y.terms) r += odot_basis(a, b);
    return r;
}

// ---------------------------------------------------------------- coproduct

namespace {

AltMonomial unit_mono(int width) {
    return AltMonomial{0, {}, Tail{width, std::vector<int>(std::max(0, width / 2 - 1), 0)}};
}

AltTensor tensor_product(const AltTensor& x, const AltTensor& y) {
    AltTensor out;
    for (const auto& [a1, a2] : x)
        for (const auto& [b1, b2] : y) add_products(out, cup_basis(a1, b1), cup_basis(a2, b2));
    return out;
}

AltMonomial single(const AltClass& c) {
    if (c.terms.size() != 1) throw std::logic_error("expected a single monomial");
    return *c.terms.begin();
}

// proper component i of the coproduct of a generator of a column (level ell) or tail (gamma_{1,k;m})
AltTensor scale_one_component(int k, int m, int i) {
    AltTensor out;
    int a = i / 2, b = m - a;
    for (int p = 0; p <= std::min(k, a); ++p) {
        int q = k - p;
        if (p == 1 || q == 1 || q > b) continue;
        toggle(out, single(scale_one(p, a)), single(scale_one(q, b)));
    }
    return out;
}

AltTensor charged_component(int ell, int m, int i) {
    AltTensor out;
    int step = 1 << ell;
    if (i % step != 0) return out;
    int a = i / step, b = m - a;
    if (a < 1 || b < 1) return out;
    for (int s = 0; s < 2; ++s) toggle(out, single(gamma_pm(ell, a, s)), single(gamma_pm(ell, b, s)));
    return out;
}

AltTensor cup_monomial_component(const std::vector<std::pair<AltTensor, int>>& factors, int n, int i) {
    AltTensor acc;
    toggle(acc, unit_mono(i), unit_mono(n - i));
    for (const auto& [t, e] : factors)
        for (int r = 0; r < e; ++r) acc = tensor_product(acc, t);
    return acc;
}

std::map<int, AltTensor> compute_coproduct(const AltMonomial& x) {
    std::map<int, AltTensor> out;
    int n = x.width();
    if (n == 0) {
        AltMonomial p{0, {}, {}}, m{1, {}, {}};
        if (x.sign == 0) {
            toggle(out[0], p, p);
            toggle(out[0], m, m);
        } else {
            toggle(out[0], p, m);
            toggle(out[0], m, p);
        }
        return out;
    }
    AltMonomial xbar = conj_mono(x);
    toggle(out[0], AltMonomial{0, {}, {}}, x);
    toggle(out[0], AltMonomial{1, {}, {}}, xbar);
    toggle(out[n], x, AltMonomial{0, {}, {}});
    toggle(out[n], xbar, AltMonomial{1, {}, {}});
    for (int i = 2; i <= n - 2; i += 2) out[i];
    if (x.polarity() < 0) {
        for (const auto& [i, t] : full_coproduct(xbar)) {
            if (i == 0 || i == n) continue;
            for (const auto& [a, b] : t) toggle(out[i], conj_mono(a), b);
        }
        return out;
    }
    std::size_t factors = x.pieces.size() + (x.tail ? 1 : 0);
    if (factors >= 2) {
        AltMonomial alpha{0, {x.pieces[0]}, {}};
        AltMonomial beta = x;
        beta.sign = 0;
        beta.pieces.erase(beta.pieces.begin());
        for (int i = 2; i <= n - 2; i += 2) out[i] = polarized_component(alpha, beta, i, Polarization::First);
        return out;
    }
    for (int i = 2; i <= n - 2; i += 2) {
        std::vector<std::pair<AltTensor, int>> gens;
        if (x.tail) {
            for (std::size_t k = 0; k < x.tail->exps.size(); ++k)
                if (x.tail->exps[k]) gens.push_back({scale_one_component(static_cast<int>(k) + 2, n / 2, i), x.tail->exps[k]});
        } else {
            const Piece& p = x.pieces[0];
            if (p.width == 4) {
                out[i] = {};
                continue;
            }
            for (std::size_t l = 1; l <= p.exps.size(); ++l) {
                if (!p.exps[l - 1]) continue;
                int ell = static_cast<int>(l);
                if (ell == 1) gens.push_back({scale_one_component(n / 2, n / 2, i), p.exps[0]});
                else gens.push_back({charged_component(ell, n >> ell, i), p.exps[l - 1]});
            }
        }
        out[i] = cup_monomial_component(gens, n, i);
    }
    return out;
}

const std::map<int, AltTensor>& full_coproduct(const AltMonomial& x) {
    thread_local std::map<AltMonomial, std::map<int, AltTensor>> memo;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    auto v = compute_coproduct(x);
    return memo.emplace(x, std::move(v)).first->second;
}

}  // namespace

AltTensor coproduct(const AltClass& x, int i) {
    AltTensor out;
    for (const auto& m : x.terms) {
        const auto& c = full_coproduct(m);
        if (auto it = c.find(i); it != c.end())
            for (const auto& [a, b] : it->second) toggle(out, a, b);
    }
    return out;
}

AltTensor coproduct_of_product(const AltClass& x, const AltClass& y, int i, bool polarize) {
    AltTensor out;
    for (const auto& a : x.terms)
        for (const auto& b : y.terms)
            for (const auto& [l, r] : polarized_component(a, b, i, polarize ? Polarization::First : Polarization::None))
                toggle(out, l, r);
    return out;
}

AltTensor coproduct_alt_polarization(const AltClass& x, int i) {
    AltTensor out;
    for (const auto& m : x.terms) {
        AltTensor part;
        std::size_t factors = m.pieces.size() + (m.tail ? 1 : 0);
        if (m.polarity() >= 0 && factors >= 2 && i > 0 && i < m.width()) {
            AltMonomial alpha{0, {m.pieces[0]}, {}};
            AltMonomial beta = m;
            beta.sign = 0;
            beta.pieces.erase(beta.pieces.begin());
            part = polarized_component(alpha, beta, i, Polarization::Last);
        } else {
            part = coproduct(of(m), i);
        }
        for (const auto& [a, b] : part) toggle(out, a, b);
    }
    return out;
}

// ---------------------------------------------------------------- detection

namespace {

MultiPoly a4_lift_poly(int p, int n, int sign) {
    MultiPoly bp = sign ? a4_b_minus() : a4_b_plus();
    MultiPoly bm = sign ? a4_b_plus() : a4_b_minus();
    MultiPoly s(2);
    for (int i = 0; 2 * i < n; ++i)
        if (binom_mod2(n, i)) s += bm.pow(i) * bp.pow(n - i);
    return a4_a().pow(p) * s;
}

MultiPoly v4_image(const AltMonomial& x) {
    if (x.tail) return a4_a().pow(x.tail->exps.empty() ? 0 : x.tail->exps[0]);
    const Piece& p = x.pieces.at(0);
    return a4_lift_poly(p.exps[0], p.exps[1], x.sign);
}

std::pair<MultiPoly, MultiPoly> v8_image(const AltMonomial& x) {
    static const std::vector<MultiPoly> dk = dickson_gens(3);
    MultiPoly z(3);
    if (x.tail && x.pieces.empty()) {
        const auto& e = x.tail->exps;
        if (e[0] || e[1]) return {z, z};
        MultiPoly v = dk[0].pow(e[2]);
        return {v, v};
    }
    if (x.tail || x.pieces.size() != 1 || x.pieces[0].width != 8) return {z, z};
    const auto& e = x.pieces[0].exps;
    MultiPoly v = dk[0].pow(e[0]) * dk[1].pow(e[1]) * dk[2].pow(e[2]);
    if (x.sign) return {z, v};
    return {v, z};
}

MultiPoly av_image(const AltMonomial& x) {
    int n = x.width(), m = n / 2;
    if (n == 2) return MultiPoly::one(0);
    if (n == 4) {
        MultiPoly y = MultiPoly::var(1, 0);
        return v4_image(x).substitute({y, MultiPoly(1)});
    }
    if (!x.tail || !x.pieces.empty()) return MultiPoly(m - 1);
    MultiPoly r = MultiPoly::one(m - 1);
    for (std::size_t k = 0; k < x.tail->exps.size(); ++k)
        if (x.tail->exps[k]) r = r * av_sigma(m, static_cast<int>(k) + 2).pow(x.tail->exps[k]);
    return r;
}

Detection detect_mono(const AltMonomial& x) {
    thread_local std::map<AltMonomial, Detection> memo;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    Detection det;
    int n = x.width();
    if (n > 0) {
        const auto& c = full_coproduct(x);
        for (int i = 2; i <= n - 2; i += 2) det.coproduct[i] = c.at(i);
        if (n == 4) det.v_plus = v4_image(x);
        if (n == 8) {
            auto [p, m] = v8_image(x);
            det.v_plus = p;
            det.v_minus = m;
        }
        det.av = av_image(x);
    }
    memo.emplace(x, det);
    return det;
}

void toggle_poly(std::optional<MultiPoly>& acc, const std::optional<MultiPoly>& v) {
    if (!v) return;
    if (!acc) acc = *v;
    else *acc += *v;
}

void add_detection(Detection& acc, const Detection& v) {
    for (const auto& [i, t] : v.coproduct) {
        auto& dst = acc.coproduct[i];
        for (const auto& [a, b] : t) toggle(dst, a, b);
    }
    toggle_poly(acc.v_plus, v.v_plus);
    toggle_poly(acc.v_minus, v.v_minus);
    toggle_poly(acc.av, v.av);
}

// Coordinates of detection data in bidegree (n, d).
struct Layout {
    int n = 0, d = 0;
    std::map<std::pair<int, int>, std::size_t> block_offset;  // (i, d1)
    std::size_t v_offset = 0, vm_offset = 0, av_offset = 0, size = 0;
    std::vector<std::vector<int>> v_monos, av_monos;
};

struct BasisInfo {
    std::vector<AltMonomial> basis;
    std::map<AltMonomial, std::size_t> index;
    Layout layout;
    Echelon ech{0, true};
    std::vector<BitVec> vecs;
};

const BasisInfo& basis_info(int n, int d);

Layout make_layout(int n, int d) {
    Layout L;
    L.n = n;
    L.d = d;
    std::size_t off = 0;
    for (int i = 2; i <= n - 2; i += 2)
        for (int d1 = 0; d1 <= d; ++d1) {
            L.block_offset[{i, d1}] = off;
            off += basis_alt(i, d1).size() * basis_alt(n - i, d - d1).size();
        }
    if (n == 4 || n == 8) {
        L.v_monos = monomials_of_degree(n == 4 ? 2 : 3, d);
        std::sort(L.v_monos.begin(), L.v_monos.end());
    }
    L.v_offset = off;
    off += L.v_monos.size();
    L.vm_offset = off;
    if (n == 8) off += L.v_monos.size();
    L.av_monos = monomials_of_degree(n / 2 - 1, d);
    std::sort(L.av_monos.begin(), L.av_monos.end());
    L.av_offset = off;
    off += L.av_monos.size();
    L.size = off;
    return L;
}

std::size_t mono_index(const BasisInfo& info, const AltMonomial& m) {
    auto it = info.index.find(m);
    if (it == info.index.end()) throw std::logic_error("monomial outside basis: " + m.str());
    return it->second;
}

BitVec to_vec(const Layout& L, const Detection& det) {
    BitVec v(L.size);
    for (const auto& [i, t] : det.coproduct)
        for (const auto& [a, b] : t) {
            if (a.degree() + b.degree() != L.d) throw std::logic_error("detection degree mismatch");
            const auto& li = basis_info(i, a.degree());
            const auto& ri = basis_info(L.n - i, b.degree());
            std::size_t off = L.block_offset.at({i, a.degree()});
            v.flip(off + mono_index(li, a) * ri.basis.size() + mono_index(ri, b));
        }
    auto put = [&](const std::optional<MultiPoly>& p, std::size_t off, const std::vector<std::vector<int>>& monos) {
        if (!p) return;
        BitVec pv = poly_to_vec(*p, monos);
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (pv.get(k)) v.flip(off + k);
    };
    if (!L.v_monos.empty()) put(det.v_plus, L.v_offset, L.v_monos);
    if (L.n == 8) put(det.v_minus, L.vm_offset, L.v_monos);
    put(det.av, L.av_offset, L.av_monos);
    return v;
}

const BasisInfo& basis_info(int n, int d) {
    thread_local std::map<std::pair<int, int>, BasisInfo> memo;
    if (auto it = memo.find({n, d}); it != memo.end()) return it->second;
    BasisInfo info;
    info.basis = basis_alt(n, d);
    for (std::size_t k = 0; k < info.basis.size(); ++k) info.index[info.basis[k]] = k;
    info.layout = make_layout(n, d);
    info.ech = Echelon(info.layout.size, true);
    if (n > 0) {
        for (const auto& m : info.basis) {
            BitVec v = to_vec(info.layout, detect_mono(m));
            info.vecs.push_back(v);
            info.ech.insert(v);
        }
    }
    return memo.emplace(std::make_pair(n, d), std::move(info)).first->second;
}

std::optional<AltClass> solve_in_basis(int n, int d, const Detection& det) {
    const auto& info = basis_info(n, d);
    if (info.ech.rank() != info.basis.size()) throw std::logic_error("detection is not injective in bidegree (" +
                                                                    std::to_string(n) + "," + std::to_string(d) + ")");
    auto coeff = info.ech.express(to_vec(info.layout, det));
    if (!coeff) return std::nullopt;
    AltClass r = zero_class(n, d);
    for (std::size_t k = 0; k < info.basis.size(); ++k)
        if (coeff->get(k)) r.toggle(info.basis[k]);
    return r;
}

AltClass solve_or_throw(int n, int d, const Detection& det, const char* what) {
    auto r = solve_in_basis(n, d, det);
    if (!r) throw std::logic_error(std::string(what) + ": detection data outside the span of the basis");
    return *r;
}

Detection product_detection(const Detection& x, const Detection& y) {
    Detection r;
    for (const auto& [i, tx] : x.coproduct) {
        AltTensor& dst = r.coproduct[i];
        const auto& ty = y.coproduct.at(i);
        for (const auto& [a1, a2] : tx)
            for (const auto& [b1, b2] : ty) add_products(dst, cup_basis(a1, b1), cup_basis(a2, b2));
    }
    if (x.v_plus) r.v_plus = *x.v_plus * *y.v_plus;
    if (x.v_minus) r.v_minus = *x.v_minus * *y.v_minus;
    if (x.av) r.av = *x.av * *y.av;
    return r;
}

AltClass cup_basis(const AltMonomial& a, const AltMonomial& b) {
    int n = a.width();
    if (b.width() != n) throw std::invalid_argument("cup product of classes on different components");
    if (n == 0) return a.sign == b.sign ? of(a) : zero_class(0, 0);
    int d = a.degree() + b.degree();
    if (a.degree() == 0) return of(b);
    if (b.degree() == 0) return of(a);
    thread_local std::map<std::pair<AltMonomial, AltMonomial>, AltClass> memo;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    AltClass r = solve_or_throw(n, d, product_detection(detect_mono(a), detect_mono(b)), "cup product");
    memo.emplace(key, r);
    return r;
}

}  // namespace

Detection detect(const AltClass& x) {
    Detection acc;
    if (x.n > 0) {
        // zero classes still carry the shape of the data
        for (int i = 2; i <= x.n - 2; i += 2) acc.coproduct[i];
        if (x.n == 4) acc.v_plus = MultiPoly(2);
        if (x.n == 8) acc.v_plus = acc.v_minus = MultiPoly(3);
        acc.av = MultiPoly(x.n / 2 - 1);
    }
    for (const auto& m : x.terms) add_detection(acc, detect_mono(m));
    return acc;
}

std::size_t detection_rank(int n, int d) {
    check_points(n);
    return basis_info(n, d).ech.rank();
}

std::optional<AltClass> solve_detection(int n, int d, const Detection& target) { return solve_in_basis(n, d, target); }

AltClass cup(const AltClass& x, const AltClass& y) {
    AltClass r = zero_class(x.n, x.d + y.d);
    if (x.n != y.n) return r;
    for (const auto& a : x.terms)
        for (const auto& b : y.terms) r += cup_basis(a, b);
    return r;
}

AltClass power(const AltClass& x, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    AltClass r = x.n == 0 ? sign_plus() + sign_minus() : of(unit_mono(x.n));
    for (int k = 0; k < e; ++k) r = cup(r, x);
    return r;
}

// ---------------------------------------------------------------- symmetric groups

namespace {

using sym::NakaokaMonomial;
using sym::SymClass;

SymClass dual_class(int n, const NakaokaMonomial& m) {
    SymClass c{n, m.degree(), {}};
    c.dual.insert(m);
    return c;
}

// restriction to (V_1)^m as a polynomial in x_1..x_m
MultiPoly restrict_v1(const SymClass& y) {
    int m = y.n / 2;
    MultiPoly out(m);
    if (y.zero()) return out;
    if (m == 1) {
        out.toggle({y.d});
        return out;
    }
    for (const auto& [l, r] : sym::coproduct_dual(y, 2)) {
        MultiPoly rest = restrict_v1(dual_class(y.n - 2, r));
        for (const auto& t : rest.terms()) {
            std::vector<int> e{l.degree()};
            e.insert(e.end(), t.begin(), t.end());
            out.toggle(e);
        }
    }
    return out;
}

MultiPoly sym_v_image(const SymClass& y, int nvars) {
    MultiPoly out(nvars);
    if (y.zero()) return out;
    auto dk = dickson_gens(nvars);
    for (const auto& h : sym::sym_normalize(y)) {
        if (h.columns.size() != 1) continue;
        const auto& c = h.columns[0];
        MultiPoly t = MultiPoly::one(nvars);
        for (std::size_t l = 1; l <= c.exps.size(); ++l) t = t * dk[l - 1].pow(c.exps[l - 1]);
        out += t;
    }
    return out;
}

AltClass res_dual(int n, const NakaokaMonomial& mono);

AltClass res_sym(const SymClass& y) {
    AltClass r = zero_class(y.n, y.d);
    for (const auto& m : y.dual) r += res_dual(y.n, m);
    return r;
}

AltClass res_dual(int n, const NakaokaMonomial& mono) {
    thread_local std::map<std::pair<int, NakaokaMonomial>, AltClass> memo;
    if (auto it = memo.find({n, mono}); it != memo.end()) return it->second;
    SymClass y = dual_class(n, mono);
    AltClass r;
    if (n == 2) {
        r = y.d == 0 ? of(unit_mono(2)) : zero_class(2, y.d);
    } else {
        Detection det;
        for (int i = 2; i <= n - 2; i += 2) {
            AltTensor& dst = det.coproduct[i];
            for (const auto& [l, rr] : sym::coproduct_dual(y, i))
                add_products(dst, res_dual(i, l), res_dual(n - i, rr));
        }
        if (n == 4 || n == 8) {
            MultiPoly v = sym_v_image(y, n == 4 ? 2 : 3);
            det.v_plus = v;
            if (n == 8) det.v_minus = v;
        }
        int m = n / 2;
        std::vector<MultiPoly> images;
        for (int i = 0; i < m - 1; ++i) images.push_back(MultiPoly::var(m - 1, i));
        MultiPoly s(m - 1);
        for (int i = 0; i < m - 1; ++i) s += MultiPoly::var(m - 1, i);
        images.push_back(s);
        det.av = restrict_v1(y).substitute(images);
        r = solve_or_throw(n, y.d, det, "restriction");
    }
    memo.emplace(std::make_pair(n, mono), r);
    return r;
}

SymClass tr_piece(const Piece& p) {
    if (p.width == 4) return sym::cup(sym::evaluate(sym::SymColumn{4, {p.exps[0], 0}}), sym::evaluate(sym::SymColumn{4, {0, p.exps[1]}}));
    return sym::evaluate(sym::SymColumn{p.width, p.exps});
}

}  // namespace

AltClass res_from_sym(const sym::SymClass& y) {
    check_points(y.n);
    if (y.n == 0) return y.zero() ? zero_class(0, 0) : sign_plus() + sign_minus();
    return res_sym(y);
}

sym::SymClass tr_to_sym(const AltClass& x) {
    SymClass out{x.n, x.d, {}};
    for (const auto& m : x.terms) {
        if (m.polarity() == 0) continue;
        SymClass t = sym::unit(0);
        for (const auto& p : m.pieces) t = sym::odot(t, tr_piece(p));
        out += t;
    }
    return out;
}

AltClass lift_gysin(const sym::SymHopfMonomial& x) {
    AltClass r = sign_plus();
    for (const auto& c : x.columns) {
        if (c.scale() < 2) throw std::invalid_argument("lift_gysin: every column needs a generator of level >= 2");
        check_points(c.width);
        if (!power_of_two(c.width)) throw ResourceError("lift_gysin: column width is not a power of two");
        std::vector<int> e = c.exps;
        int k = 0;
        while ((1 << k) < c.width) ++k;
        e.resize(static_cast<std::size_t>(k), 0);
        if (c.width == 4) r = odot(r, a4_lift(e[0], e[1], 1));
        else r = odot(r, of(AltMonomial{0, {Piece{c.width, e}}, {}}));
    }
    return r;
}

}  // namespace altcohom::alt
