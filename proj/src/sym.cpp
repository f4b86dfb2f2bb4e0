#include "altcohom/sym.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>

#include "altcohom/fn.hpp"

namespace altcohom::sym {

int q_degree(const QSeq& I) {
    int d = 0;
    for (std::size_t j = 0; j < I.size(); ++j) d += I[j] << j;
    return d;
}

int q_width(const QSeq& I) { return 1 << I.size(); }

bool admissible(const QSeq& I) { return std::is_sorted(I.begin(), I.end()); }

bool strongly_admissible(const QSeq& I) {
    return admissible(I) && (I.empty() || I.front() >= 1);
}

namespace {

void toggle_seq(std::set<QSeq>& s, const QSeq& I) {
    auto [it, fresh] = s.insert(I);
    if (!fresh) s.erase(it);
}

std::set<QSeq> adem_rec(const QSeq& I, std::map<QSeq, std::set<QSeq>>& memo, int depth) {
    if (depth > 4096) throw std::runtime_error("Adem rewriting did not terminate");
    if (auto it = memo.find(I); it != memo.end()) return it->second;
    std::size_t p = 0;
    while (p + 1 < I.size() && I[p] <= I[p + 1]) ++p;
    std::set<QSeq> out;
    if (p + 1 >= I.size()) {
        out.insert(I);
    } else {
        const int m = I[p], n = I[p + 1];
        for (int i = (m + n + 1) / 2; i <= m - 1; ++i) {
            int outer = m + 2 * n - 2 * i;
            if (outer < 0) continue;
            if (!binom_mod2(i - n - 1, 2 * i - m - n)) continue;
            QSeq J = I;
            J[p] = outer;
            J[p + 1] = i;
            for (const auto& K : adem_rec(J, memo, depth + 1)) toggle_seq(out, K);
        }
    }
    memo.emplace(I, out);
    return out;
}

}  // namespace

std::set<QSeq> adem_reduce(const QSeq& I) {
    thread_local std::map<QSeq, std::set<QSeq>> memo;
    return adem_rec(I, memo, 0);
}

int NakaokaMonomial::width() const {
    int w = iota;
    for (const auto& f : factors) w += q_width(f);
    return w;
}

int NakaokaMonomial::degree() const {
    int d = 0;
    for (const auto& f : factors) d += q_degree(f);
    return d;
}

std::string NakaokaMonomial::str() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += "q(";
        for (std::size_t j = 0; j < f.size(); ++j) s += (j ? "," : "") + std::to_string(f[j]);
        s += ")";
    }
    if (iota > 0) {
        if (!s.empty()) s += "*";
        s += "i^" + std::to_string(iota);
    }
    return s.empty() ? "1" : s;
}

NakaokaMonomial nak_mul(const NakaokaMonomial& a, const NakaokaMonomial& b) {
    NakaokaMonomial r;
    r.iota = a.iota + b.iota;
    r.factors.reserve(a.factors.size() + b.factors.size());
    std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
               std::back_inserter(r.factors));
    return r;
}

void toggle(HomPoly& p, const NakaokaMonomial& m) {
    auto [it, fresh] = p.insert(m);
    if (!fresh) p.erase(it);
}

HomPoly q_eval(const QSeq& I) {
    thread_local std::map<QSeq, HomPoly> memo;
    if (auto it = memo.find(I); it != memo.end()) return it->second;
    HomPoly out;
    for (const auto& J : adem_reduce(I)) {
        std::size_t z = 0;
        while (z < J.size() && J[z] == 0) ++z;
        QSeq core(J.begin() + static_cast<std::ptrdiff_t>(z), J.end());
        const int copies = 1 << z;
        NakaokaMonomial m;
        if (core.empty()) m.iota = copies;
        else m.factors.assign(static_cast<std::size_t>(copies), core);
        toggle(out, m);
    }
    memo.emplace(I, out);
    return out;
}

namespace {

void strongly_admissible_rec(QSeq& cur, int max_len, int max_deg, int deg,
                             std::vector<QSeq>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_len) return;
    const int lo = cur.empty() ? 1 : cur.back();
    const int w = 1 << cur.size();
    for (int i = lo; deg + i * w <= max_deg; ++i) {
        cur.push_back(i);
        strongly_admissible_rec(cur, max_len, max_deg, deg + i * w, out);
        cur.pop_back();
    }
}

void multiset_rec(const std::vector<QSeq>& gens, std::size_t from, int n, int d,
                  NakaokaMonomial& cur, int width, int deg,
                  std::vector<NakaokaMonomial>& out) {
    if (deg == d) {
        NakaokaMonomial m = cur;
        m.iota = n - width;
        out.push_back(std::move(m));
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
        int gw = q_width(gens[g]), gd = q_degree(gens[g]);
        if (width + gw > n || deg + gd > d) continue;
        cur.factors.push_back(gens[g]);
        multiset_rec(gens, g, n, d, cur, width + gw, deg + gd, out);
        cur.factors.pop_back();
    }
}

}  // namespace

std::vector<NakaokaMonomial> nakaoka_basis(int n, int d) {
    thread_local std::map<std::pair<int, int>, std::vector<NakaokaMonomial>> memo;
    if (n < 0 || d < 0) return {};
    if (auto it = memo.find({n, d}); it != memo.end()) return it->second;
    int max_len = 0;
    while ((2 << max_len) <= n) ++max_len;
    std::vector<QSeq> gens;
    QSeq cur;
    strongly_admissible_rec(cur, max_len, d, 0, gens);
    std::sort(gens.begin(), gens.end());
    std::vector<NakaokaMonomial> out;
    NakaokaMonomial m;
    multiset_rec(gens, 0, n, d, m, 0, 0, out);
    std::sort(out.begin(), out.end());
    memo.emplace(std::make_pair(n, d), out);
    return out;
}

namespace {

using Pair = std::pair<NakaokaMonomial, NakaokaMonomial>;

void toggle_pair(std::set<Pair>& s, const Pair& p) {
    auto [it, fresh] = s.insert(p);
    if (!fresh) s.erase(it);
}

// Delta q_I = sum_{J+K=I} q_J (x) q_K
const std::set<Pair>& generator_coproduct(const QSeq& I) {
    thread_local std::map<QSeq, std::set<Pair>> memo;
    if (auto it = memo.find(I); it != memo.end()) return it->second;
    std::set<Pair> out;
    QSeq J(I.size(), 0);
    while (true) {
        QSeq K(I.size());
        for (std::size_t t = 0; t < I.size(); ++t) K[t] = I[t] - J[t];
        HomPoly left = q_eval(J), right = q_eval(K);
        for (const auto& a : left)
            for (const auto& b : right) toggle_pair(out, {a, b});
        std::size_t t = 0;
        while (t < I.size() && J[t] == I[t]) J[t++] = 0;
        if (t == I.size()) break;
        ++J[t];
    }
    return memo.emplace(I, std::move(out)).first->second;
}

}  // namespace

std::set<Pair> cup_coproduct(const NakaokaMonomial& h, int d1) {
    thread_local std::map<std::pair<NakaokaMonomial, int>, std::set<Pair>> memo;
    if (auto it = memo.find({h, d1}); it != memo.end()) return it->second;
    const int d2 = h.degree() - d1;
    std::set<Pair> acc;
    if (d2 >= 0 && d1 >= 0) {
        acc.insert({NakaokaMonomial{{}, h.iota}, NakaokaMonomial{{}, h.iota}});
        for (const auto& f : h.factors) {
            std::set<Pair> next;
            for (const auto& [a, b] : acc) {
                const int da = a.degree(), db = b.degree();
                for (const auto& [x, y] : generator_coproduct(f)) {
                    if (da + x.degree() > d1 || db + y.degree() > d2) continue;
                    toggle_pair(next, {nak_mul(a, x), nak_mul(b, y)});
                }
            }
            acc = std::move(next);
        }
        std::erase_if(acc, [&](const Pair& p) { return p.first.degree() != d1; });
    }
    memo.emplace(std::make_pair(h, d1), acc);
    return acc;
}

SymClass& SymClass::operator+=(const SymClass& o) {
    if (o.zero()) return *this;
    if (zero() && (n != o.n || d != o.d)) {
        *this = o;
        return *this;
    }
    if (n != o.n || d != o.d) throw std::invalid_argument("sum of classes in different bidegrees");
    for (const auto& m : o.dual) {
        auto [it, fresh] = dual.insert(m);
        if (!fresh) dual.erase(it);
    }
    return *this;
}

SymClass unit(int n) {
    SymClass c{n, 0, {}};
    c.dual.insert(NakaokaMonomial{{}, n});
    return c;
}

SymClass gamma(int ell, int m) {
    if (ell == 0 || m == 0) return unit(m << ell);
    SymClass c{m << ell, m * ((1 << ell) - 1), {}};
    NakaokaMonomial mon;
    mon.factors.assign(static_cast<std::size_t>(m), QSeq(static_cast<std::size_t>(ell), 1));
    c.dual.insert(mon);
    return c;
}

SymClass cup(const SymClass& a, const SymClass& b) {
    SymClass r{a.n, a.d + b.d, {}};
    if (a.n != b.n || a.zero() || b.zero()) return r;
    for (const auto& h : nakaoka_basis(a.n, r.d)) {
        bool c = false;
        for (const auto& [x, y] : cup_coproduct(h, a.d))
            if (a.dual.count(x) && b.dual.count(y)) c = !c;
        if (c) r.dual.insert(h);
    }
    return r;
}

SymClass odot(const SymClass& a, const SymClass& b) {
    SymClass r{a.n + b.n, a.d + b.d, {}};
    for (const auto& x : a.dual) {
        for (const auto& y : b.dual) {
            if (!binom_mod2(x.iota + y.iota, x.iota)) continue;
            std::map<QSeq, std::pair<int, int>> counts;
            for (const auto& f : x.factors) ++counts[f].first;
            for (const auto& f : y.factors) ++counts[f].second;
            bool ok = true;
            for (const auto& [f, c] : counts)
                if (!binom_mod2(c.first + c.second, c.first)) ok = false;
            if (!ok) continue;
            NakaokaMonomial z = nak_mul(x, y);
            auto [it, fresh] = r.dual.insert(z);
            if (!fresh) r.dual.erase(it);
        }
    }
    return r;
}

SymTensor coproduct_dual(const SymClass& x, int i) {
    SymTensor out;
    for (const auto& M : x.dual) {
        std::vector<std::pair<QSeq, int>> counts;
        for (const auto& f : M.factors) {
            if (!counts.empty() && counts.back().first == f) ++counts.back().second;
            else counts.push_back({f, 1});
        }
        std::vector<int> take(counts.size(), 0);
        while (true) {
            NakaokaMonomial L, R;
            int wl = 0;
            for (std::size_t g = 0; g < counts.size(); ++g) {
                for (int t = 0; t < counts[g].second; ++t)
                    (t < take[g] ? L : R).factors.push_back(counts[g].first);
                wl += take[g] * q_width(counts[g].first);
            }
            int iota_left = i - wl;
            if (iota_left >= 0 && iota_left <= M.iota) {
                L.iota = iota_left;
                R.iota = M.iota - iota_left;
                toggle_pair(out, {L, R});
            }
            std::size_t g = 0;
            while (g < counts.size() && take[g] == counts[g].second) take[g++] = 0;
            if (g == counts.size()) break;
            ++take[g];
        }
    }
    return out;
}

int SymColumn::degree() const {
    int d = 0;
    for (std::size_t l = 1; l <= exps.size(); ++l)
        d += exps[l - 1] * (width >> l) * ((1 << l) - 1);
    return d;
}

int SymColumn::scale() const {
    for (std::size_t l = exps.size(); l >= 1; --l)
        if (exps[l - 1] > 0) return static_cast<int>(l);
    return 1;
}

bool SymColumn::pure_level_one() const {
    for (std::size_t l = 2; l <= exps.size(); ++l)
        if (exps[l - 1] > 0) return false;
    return true;
}

std::string SymColumn::str() const {
    std::string s;
    for (std::size_t l = 1; l <= exps.size(); ++l) {
        if (exps[l - 1] == 0) continue;
        if (!s.empty()) s += "*";
        s += "g(" + std::to_string(l) + "," + std::to_string(width >> l) + ")";
        if (exps[l - 1] > 1) s += "^" + std::to_string(exps[l - 1]);
    }
    return s.empty() ? "1(" + std::to_string(width) + ")" : s;
}

int SymHopfMonomial::width() const {
    int w = 0;
    for (const auto& c : columns) w += c.width;
    return w;
}

int SymHopfMonomial::degree() const {
    int d = 0;
    for (const auto& c : columns) d += c.degree();
    return d;
}

int SymHopfMonomial::scale() const {
    int s = 1 << 30;
    for (const auto& c : columns) s = std::min(s, c.scale());
    return columns.empty() ? 1 : s;
}

std::string SymHopfMonomial::str() const {
    if (columns.empty()) return "1(0)";
    std::string s;
    for (const auto& c : columns) {
        if (!s.empty()) s += " o ";
        bool compound = c.str().find('*') != std::string::npos && columns.size() > 1;
        s += compound ? "(" + c.str() + ")" : c.str();
    }
    return s;
}

SymHopfMonomial canonical_order(SymHopfMonomial m) {
    for (auto& c : m.columns)
        while (!c.exps.empty() && c.exps.back() == 0) c.exps.pop_back();
    std::erase_if(m.columns, [](const SymColumn& c) { return c.width == 0; });
    std::sort(m.columns.begin(), m.columns.end(), [](const SymColumn& a, const SymColumn& b) {
        if (a.width != b.width) return a.width > b.width;
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.exps < b.exps;
    });
    return m;
}

SymClass evaluate(const SymColumn& c) {
    thread_local std::map<SymColumn, SymClass> memo;
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    SymClass r = unit(c.width);
    for (std::size_t l = 1; l <= c.exps.size(); ++l) {
        if (c.exps[l - 1] == 0) continue;
        if (c.width % (1 << l) != 0) throw std::invalid_argument("generator does not fit column");
        SymClass g = gamma(static_cast<int>(l), c.width >> l);
        for (int t = 0; t < c.exps[l - 1]; ++t) r = cup(r, g);
    }
    memo.emplace(c, r);
    return r;
}

SymClass evaluate(const SymHopfMonomial& m) {
    SymClass r = unit(0);
    for (const auto& c : m.columns) r = odot(r, evaluate(c));
    return r;
}

SymColumn block_for(const QSeq& I, int a) {
    SymColumn c;
    c.width = a << I.size();
    const std::size_t k = I.size();
    c.exps.assign(k, 0);
    for (std::size_t l = 1; l <= k; ++l) {
        int hi = I[k - l];
        int lo = (k >= l + 1) ? I[k - l - 1] : 0;
        c.exps[l - 1] = hi - lo;
    }
    return c;
}

SymHopfMonomial hopf_for(const NakaokaMonomial& m) {
    SymHopfMonomial h;
    for (std::size_t g = 0; g < m.factors.size();) {
        std::size_t e = g;
        while (e < m.factors.size() && m.factors[e] == m.factors[g]) ++e;
        h.columns.push_back(block_for(m.factors[g], static_cast<int>(e - g)));
        g = e;
    }
    if (m.iota > 0) h.columns.push_back(SymColumn{m.iota, {}});
    return canonical_order(h);
}

std::vector<SymHopfMonomial> hopf_basis(int n, int d) {
    std::vector<SymHopfMonomial> out;
    for (const auto& m : nakaoka_basis(n, d)) out.push_back(hopf_for(m));
    return out;
}

namespace {

struct BasisChange {
    std::vector<NakaokaMonomial> duals;
    std::map<NakaokaMonomial, std::size_t> index;
    std::vector<SymHopfMonomial> hopf;
    std::shared_ptr<Echelon> ech;
};

BitVec to_vec(const BasisChange& b, const SymClass& x) {
    BitVec v(b.duals.size());
    for (const auto& m : x.dual) v.set(b.index.at(m));
    return v;
}

const BasisChange& basis_change(int n, int d) {
    thread_local std::map<std::pair<int, int>, BasisChange> memo;
    if (auto it = memo.find({n, d}); it != memo.end()) return it->second;
    BasisChange b;
    b.duals = nakaoka_basis(n, d);
    for (std::size_t i = 0; i < b.duals.size(); ++i) b.index[b.duals[i]] = i;
    b.hopf = hopf_basis(n, d);
    b.ech = std::make_shared<Echelon>(b.duals.size(), true);
    for (const auto& h : b.hopf) b.ech->insert(to_vec(b, evaluate(h)));
    return memo.emplace(std::make_pair(n, d), std::move(b)).first->second;
}

}  // namespace

std::size_t hopf_basis_rank(int n, int d) { return basis_change(n, d).ech->rank(); }

SymSum sym_normalize(const SymClass& x) {
    SymSum out;
    if (x.zero()) return out;
    const BasisChange& b = basis_change(x.n, x.d);
    if (b.ech->rank() != b.hopf.size()) throw std::logic_error("canonical monomials are not a basis");
    auto c = b.ech->express(to_vec(b, x));
    if (!c) throw std::logic_error("class outside the span of the canonical basis");
    for (std::size_t i = 0; i < b.hopf.size(); ++i)
        if (c->get(i)) out.insert(b.hopf[i]);
    return out;
}

SymSum sym_normalize(const SymHopfMonomial& m) { return sym_normalize(evaluate(m)); }

SymHopfTensor coproduct_sym(const SymHopfMonomial& m) {
    SymHopfTensor out;
    SymClass x = evaluate(m);
    std::map<NakaokaMonomial, SymSum> cache;
    auto canon = [&](const NakaokaMonomial& y) -> const SymSum& {
        auto it = cache.find(y);
        if (it != cache.end()) return it->second;
        SymClass c{y.width(), y.degree(), {y}};
        return cache.emplace(y, sym_normalize(c)).first->second;
    };
    for (int i = 0; i <= x.n; ++i) {
        for (const auto& [l, r] : coproduct_dual(x, i)) {
            for (const auto& a : canon(l))
                for (const auto& b : canon(r)) {
                    auto [it, fresh] = out.insert({a, b});
                    if (!fresh) out.erase(it);
                }
        }
    }
    return out;
}

SymClass euler(int n) { return odot(gamma(1, 1), unit(n - 2)); }

std::vector<SymHopfMonomial> gysin_Ga(int n, int d) {
    std::vector<SymHopfMonomial> out;
    for (const auto& h : hopf_basis(n, d))
        if (!h.columns.empty() && h.scale() > 1) out.push_back(h);
    return out;
}

std::vector<SymHopfMonomial> gysin_Gq(int n, int d) {
    std::vector<SymHopfMonomial> out;
    for (const auto& h : hopf_basis(n, d)) {
        int best_k = -1, best_m = 0;
        for (const auto& c : h.columns) {
            if (!c.pure_level_one()) continue;
            int k = c.exps.empty() ? 0 : c.exps[0];
            if (k > best_k) {
                best_k = k;
                best_m = c.width / 2;
            }
        }
        if (best_k <= 0 || best_m > 1) out.push_back(h);
    }
    return out;
}

namespace {

class SymParser {
public:
    explicit SymParser(const std::string& s) : s_(s) {}

    SymClass parse() {
        SymClass r = sum();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected input", pos_);
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected non-negative integer", pos_);
        return std::stoi(s_.substr(start, pos_ - start));
    }

    SymClass sum() {
        SymClass r = transfer();
        while (eat('+')) {
            std::size_t at = pos_;
            SymClass t = transfer();
            try {
                r += t;
            } catch (const std::invalid_argument&) {
                throw ParseError("summands in different bidegrees", at);
            }
        }
        return r;
    }
    SymClass transfer() {
        SymClass r = product();
        while (eat('o')) r = odot(r, product());
        return r;
    }
    SymClass product() {
        SymClass r = power();
        while (eat('*')) {
            std::size_t at = pos_;
            SymClass t = power();
            if (t.n != r.n) throw ParseError("cup product across components", at);
            r = cup(r, t);
        }
        return r;
    }
    SymClass power() {
        SymClass r = atom();
        if (eat('^')) {
            int e = integer();
            SymClass base = r;
            r = unit(base.n);
            for (int t = 0; t < e; ++t) r = cup(r, base);
        }
        return r;
    }
    SymClass atom() {
        skip();
        if (eat('(')) {
            SymClass r = sum();
            expect(')');
            return r;
        }
        if (eat('g')) {
            expect('(');
            int l = integer();
            expect(',');
            int m = integer();
            expect(')');
            return gamma(l, m);
        }
        if (eat('1')) {
            expect('(');
            int m = integer();
            expect(')');
            return unit(m);
        }
        throw ParseError("expected g(l,m), 1(m) or '('", pos_);
    }
};

}  // namespace

SymClass parse_sym(const std::string& text) { return SymParser(text).parse(); }

}  // namespace altcohom::sym
