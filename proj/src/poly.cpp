#include "altcohom/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace altcohom {

MultiPoly MultiPoly::one(int nvars) {
    MultiPoly p(nvars);
    p.terms_.insert(std::vector<int>(nvars, 0));
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i) {
    MultiPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    p.terms_.insert(e);
    return p;
}

MultiPoly MultiPoly::monomial(const std::vector<int>& exps) {
    MultiPoly p(static_cast<int>(exps.size()));
    p.terms_.insert(exps);
    return p;
}

int MultiPoly::degree() const {
    int best = -1;
    for (const auto& t : terms_) {
        int d = 0;
        for (int e : t) d += e;
        best = std::max(best, d);
    }
    return best;
}

bool MultiPoly::homogeneous() const {
    int d = -1;
    for (const auto& t : terms_) {
        int s = 0;
        for (int e : t) s += e;
        if (d >= 0 && s != d) return false;
        d = s;
    }
    return true;
}

void MultiPoly::toggle(const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("MultiPoly: variable count");
    auto it = terms_.find(exps);
    if (it != terms_.end()) terms_.erase(it);
    else terms_.insert(exps);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.zero()) return *this;
    if (zero()) nvars_ = o.nvars_;
    for (const auto& t : o.terms_) toggle(t);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(std::max(nvars_, o.nvars_));
    if (zero() || o.zero()) return r;
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count");
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<int> e(a);
            for (int i = 0; i < nvars_; ++i) e[i] += b[i];
            r.toggle(e);
        }
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly r = one(nvars_), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: image count");
    int target = images.empty() ? 0 : images[0].nvars();
    MultiPoly r(target);
    for (const auto& t : terms_) {
        MultiPoly m = MultiPoly::one(target);
        for (int i = 0; i < nvars_; ++i)
            if (t[i]) m = m * images[i].pow(t[i]);
        r += m;
    }
    return r;
}

std::string MultiPoly::str(const std::string& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string t;
        for (int i = 0; i < nvars_; ++i) {
            if (!(*it)[i]) continue;
            if (!t.empty()) t += "*";
            t += name + std::to_string(i + 1);
            if ((*it)[i] > 1) t += "^" + std::to_string((*it)[i]);
        }
        if (t.empty()) t = "1";
        if (!out.empty()) out += " + ";
        out += t;
    }
    return out;
}

MultiPoly apply_linear(const MultiPoly& p, const LinearMap& m) {
    int n = p.nvars();
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) {
        MultiPoly img(n);
        for (int j = 0; j < n; ++j)
            if (m[i][j] & 1) img += MultiPoly::var(n, j);
        images.push_back(img);
    }
    return p.substitute(images);
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d) {
    std::vector<std::vector<int>> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    return compositions(d, nvars);
}

BitVec poly_to_vec(const MultiPoly& p, const std::vector<std::vector<int>>& monos) {
    BitVec v(monos.size());
    for (const auto& t : p.terms()) {
        auto it = std::lower_bound(monos.begin(), monos.end(), t);
        if (it == monos.end() || *it != t) throw std::invalid_argument("poly_to_vec: monomial outside basis");
        v.set(static_cast<std::size_t>(it - monos.begin()));
    }
    return v;
}

MultiPoly vec_to_poly(const BitVec& v, const std::vector<std::vector<int>>& monos, int nvars) {
    MultiPoly p(nvars);
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (v.get(i)) p.toggle(monos[i]);
    return p;
}

std::vector<MultiPoly> invariant_basis(int nvars, int d, const std::vector<LinearMap>& generators) {
    auto monos = monomials_of_degree(nvars, d);
    std::sort(monos.begin(), monos.end());
    std::size_t k = monos.size();
    // rows: for each generator and each output monomial, the coefficient of (g - id)
    BitMatrix m(generators.size() * k, k);
    for (std::size_t c = 0; c < k; ++c) {
        MultiPoly x = MultiPoly::monomial(monos[c]);
        for (std::size_t g = 0; g < generators.size(); ++g) {
            BitVec col = poly_to_vec(apply_linear(x, generators[g]) + x, monos);
            for (std::size_t r = 0; r < k; ++r)
                if (col.get(r)) m.set(g * k + r, c);
        }
    }
    std::vector<MultiPoly> out;
    for (const auto& v : kernel_basis(m)) out.push_back(vec_to_poly(v, monos, nvars));
    return out;
}

bool is_invariant(const MultiPoly& p, const std::vector<LinearMap>& generators) {
    for (const auto& g : generators)
        if (apply_linear(p, g) != p) return false;
    return true;
}

std::vector<LinearMap> gl_generators(int n) {
    std::vector<LinearMap> out;
    auto id = [n] {
        LinearMap m(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    };
    if (n >= 2) {
        LinearMap t = id();
        t[0][1] = 1;
        out.push_back(t);
        LinearMap c(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) c[i][(i + 1) % n] = 1;
        out.push_back(c);
        LinearMap s = id();
        s[0][0] = s[1][1] = 0;
        s[0][1] = s[1][0] = 1;
        out.push_back(s);
    }
    return out;
}

LinearMap c3_generator() { return {{0, 1}, {1, 1}}; }
LinearMap swap_generator() { return {{0, 1}, {1, 0}}; }

std::vector<MultiPoly> dickson_gens(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("dickson_gens: 1 <= n <= 3");
    // coefficients of prod_v (X + v.x) as a polynomial in X
    std::vector<MultiPoly> coeff{MultiPoly::one(n)};
    for (int v = 0; v < (1 << n); ++v) {
        MultiPoly lin(n);
        for (int i = 0; i < n; ++i)
            if (v >> i & 1) lin += MultiPoly::var(n, i);
        std::vector<MultiPoly> next(coeff.size() + 1, MultiPoly(n));
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] += coeff[k];
            next[k] += coeff[k] * lin;
        }
        coeff = std::move(next);
    }
    std::vector<MultiPoly> out;
    for (int k = n - 1; k >= 0; --k) out.push_back(coeff[std::size_t{1} << k]);
    return out;
}

std::vector<int> dickson_degrees(int n) {
    std::vector<int> out;
    for (int k = n - 1; k >= 0; --k) out.push_back((1 << n) - (1 << k));
    return out;
}

std::vector<MultiPoly> c3_invariants(int d) { return invariant_basis(2, d, {c3_generator()}); }

MultiPoly a4_a() {
    MultiPoly p(2);
    p.toggle({2, 0});
    p.toggle({1, 1});
    p.toggle({0, 2});
    return p;
}

MultiPoly a4_b_plus() {
    MultiPoly p(2);
    p.toggle({3, 0});
    p.toggle({2, 1});
    p.toggle({0, 3});
    return p;
}

MultiPoly a4_b_minus() {
    MultiPoly p(2);
    p.toggle({3, 0});
    p.toggle({1, 2});
    p.toggle({0, 3});
    return p;
}

MultiPoly elementary_symmetric(int nvars, int count, int k) {
    MultiPoly r(nvars);
    if (k < 0 || k > count) return r;
    for (int mask = 0; mask < (1 << count); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> e(nvars, 0);
        for (int i = 0; i < count; ++i)
            if (mask >> i & 1) e[i] = 1;
        r.toggle(e);
    }
    return r;
}

MultiPoly av_sigma(int m, int k) {
    int v = m - 1;
    if (v == 0) return k == 0 ? MultiPoly::one(0) : MultiPoly(0);
    return elementary_symmetric(v, v, k) + elementary_symmetric(v, v, k - 1) * elementary_symmetric(v, v, 1);
}

MultiPoly av_restrict_cocycle(const Cochain& x) {
    int n = x.n();
    if (n % 2 != 0 || x.variant() != Variant::FNA) throw std::invalid_argument("av_restrict_cocycle: FNA cochain on 2m points");
    int m = n / 2;
    // pattern cells [a1,0,a2,...,0,am]; a cocycle restricts to a label-symmetric cochain
    std::map<std::vector<int>, int> labels;
    for (const auto& c : x.terms()) {
        bool pattern = true;
        for (std::size_t i = 1; i < c.a.size(); i += 2)
            if (c.a[i] != 0) pattern = false;
        if (!pattern) continue;
        std::vector<int> e;
        for (std::size_t i = 0; i < c.a.size(); i += 2) e.push_back(c.a[i]);
        labels[e] ^= (1 << c.charge);
    }
    MultiPoly full(m);
    for (const auto& [e, mask] : labels) {
        if (mask == 3) full.toggle(e);
        else if (mask != 0) throw std::invalid_argument("av_restrict_cocycle: not a cocycle");
    }
    // x_m = y_1 + ... + y_{m-1}
    int v = m - 1;
    std::vector<MultiPoly> images;
    for (int i = 0; i < v; ++i) images.push_back(MultiPoly::var(v, i));
    MultiPoly s(v);
    for (int i = 0; i < v; ++i) s += MultiPoly::var(v, i);
    images.push_back(s);
    if (v == 0) {
        MultiPoly r(0);
        for (const auto& t : full.terms())
            if (t[0] == 0) r.toggle({});
        return r;
    }
    return full.substitute(images);
}

}  // namespace altcohom
