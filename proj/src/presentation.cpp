#include "altcohom/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "altcohom/fn.hpp"

namespace altcohom::present {

int columns(const AltMonomial& m) { return static_cast<int>(m.pieces.size()) + (m.tail ? 1 : 0); }

int charge(const AltClass& x) {
    std::set<int> seen;
    for (const auto& t : x.terms) seen.insert(t.polarity());
    if (seen.empty()) return 0;
    if (seen.size() > 1) return 2;
    return *seen.begin();
}

namespace {

std::string power_str(const std::string& base, int e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

std::string piece_name(const alt::Piece& p) {
    std::vector<std::string> f;
    if (p.width == 4) {
        if (p.exps[0]) f.push_back(power_str("sigma2", p.exps[0]));
        f.push_back(power_str("d3", p.exps[1]));
    } else {
        for (std::size_t l = 1; l <= p.exps.size(); ++l) {
            if (!p.exps[l - 1]) continue;
            int q = p.width >> l;
            if (l == 1) f.push_back(power_str("sigma" + std::to_string(q), p.exps[0]));
            else f.push_back(power_str("d" + std::to_string(q * ((1 << l) - 1)), p.exps[l - 1]));
        }
    }
    return join(f, "*");
}

}  // namespace

std::string hopf_name(const AltMonomial& m) {
    std::vector<std::string> cols;
    for (const auto& p : m.pieces) cols.push_back(piece_name(p));
    if (m.polarity() != 0 && !cols.empty()) {
        const char* s = m.polarity() > 0 ? "+" : "-";
        cols[0] = cols[0].find('*') == std::string::npos && cols[0].find('^') == std::string::npos ? cols[0] + s
                                                                                                    : "(" + cols[0] + ")" + s;
    }
    if (m.tail) {
        std::vector<std::string> f;
        for (std::size_t k = 0; k < m.tail->exps.size(); ++k)
            if (m.tail->exps[k]) f.push_back(power_str("sigma" + std::to_string(k + 2), m.tail->exps[k]));
        if (!f.empty()) cols.push_back(join(f, "*"));
        else if (cols.empty()) cols.push_back("1");
    }
    if (cols.empty()) return m.sign ? "1-" : "1+";
    return join(cols, " o ");
}

std::size_t PresentationReport::vanishing_relations() const {
    return static_cast<std::size_t>(std::count_if(relations.begin(), relations.end(), [](const Relation& r) { return r.vanishing_product; }));
}

std::vector<int> PresentationReport::generator_degrees() const {
    std::vector<int> out;
    for (const auto& g : generators) out.push_back(g.degree);
    return out;
}

std::vector<int> PresentationReport::relation_degrees() const {
    std::vector<int> out;
    for (const auto& r : relations) out.push_back(r.degree);
    return out;
}

std::string PresentationReport::monomial_str(const GenMonomial& m) const {
    std::vector<std::string> f;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) {
            const std::string& nm = generators[i].name;
            bool simple = nm.find(' ') == std::string::npos && nm.find('*') == std::string::npos;
            f.push_back(power_str(simple ? nm : "(" + nm + ")", m[i]));
        }
    return f.empty() ? "1" : join(f, "*");
}

std::string PresentationReport::poly_str(const GenPoly& p) const {
    if (p.empty()) return "0";
    std::vector<std::string> t;
    for (const auto& m : p) t.push_back(monomial_str(m));
    return join(t, " + ");
}

std::string PresentationReport::str() const {
    std::ostringstream os;
    os << "H^*(BA_" << n << ") through degree " << max_degree << (complete ? "" : " (incomplete: " + note + ")") << "\n";
    os << "generators (" << generators.size() << "):\n";
    for (const auto& g : generators) os << "  deg " << g.degree << "  " << g.name << "  = " << g.monomial << "\n";
    os << "relations (" << relations.size() << ", " << vanishing_relations() << " vanishing products):\n";
    for (const auto& r : relations) os << "  deg " << r.degree << "  " << poly_str(r.poly) << " = 0\n";
    return os.str();
}

namespace {

GenMonomial trimmed(GenMonomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

int factor_count(const GenMonomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

// monomials of total degree d in generators of the given degrees
std::vector<GenMonomial> monomials(const std::vector<int>& degs, int d) {
    std::vector<GenMonomial> out;
    GenMonomial cur(degs.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == degs.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e * degs[i] <= rest; ++e) {
            cur[i] = e;
            rec(i + 1, rest - e * degs[i]);
        }
        cur[i] = 0;
    };
    if (d > 0) rec(0, d);
    return out;
}

struct Evaluator {
    int n;
    const std::vector<PresGenerator>& gens;
    std::map<GenMonomial, AltClass> memo;
    AltClass operator()(const GenMonomial& m0) {
        GenMonomial m = trimmed(m0);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        AltClass r;
        if (m.empty()) {
            r = alt::unit(n / 2);
        } else {
            std::size_t i = 0;
            while (m[i] == 0) ++i;
            GenMonomial rest = m;
            --rest[i];
            r = alt::cup(gens[i].cls, (*this)(rest));
        }
        return memo.emplace(m, r).first->second;
    }
};

BitVec coordinates(const AltClass& x, const std::map<AltMonomial, std::size_t>& index) {
    BitVec v(index.size());
    for (const auto& t : x.terms) v.flip(index.at(t));
    return v;
}

std::map<AltMonomial, std::size_t> basis_index(int n, int d) {
    std::map<AltMonomial, std::size_t> idx;
    for (const auto& m : alt::basis_alt(n, d)) idx.emplace(m, idx.size());
    return idx;
}

}  // namespace

AltClass evaluate(const PresentationReport& r, const GenMonomial& m) {
    Evaluator ev{r.n, r.generators, {}};
    return ev(m);
}

PresentationReport derive_presentation(int n, int max_degree, TieBreak tie) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("derive_presentation: n must be even and positive");
    if (n > alt::kMaxPoints) throw ResourceError("derive_presentation: components above " + std::to_string(alt::kMaxPoints) + " points are out of range");
    if (max_degree < 0) throw std::invalid_argument("derive_presentation: negative degree");
    PresentationReport rep;
    rep.n = n;
    rep.max_degree = max_degree;
    int top = max_degree;
    if (top > kMaxPresentationDegree) {
        top = kMaxPresentationDegree;
        rep.complete = false;
        rep.note = "degrees above " + std::to_string(top) + " not computed";
    }
    Evaluator ev{n, rep.generators, {}};
    rep.poincare.push_back(alt::basis_alt(n, 0).size());
    rep.decomposable.push_back(0);
    for (int d = 1; d <= top; ++d) {
        auto index = basis_index(n, d);
        std::vector<int> degs;
        for (const auto& g : rep.generators) degs.push_back(g.degree);
        auto monos = monomials(degs, d);
        std::map<GenMonomial, std::size_t> mono_index;
        for (const auto& m : monos) mono_index.emplace(m, mono_index.size());

        // decomposables and the kernel of the evaluation map
        Echelon span(index.size(), true);
        std::vector<std::size_t> inserted_at;  // monomial index of each insertion
        std::vector<BitVec> kernel;
        for (std::size_t k = 0; k < monos.size(); ++k) {
            BitVec v = coordinates(ev(monos[k]), index);
            if (auto c = span.express(v)) {
                BitVec rel(monos.size());
                rel.flip(k);
                for (std::size_t t = 0; t < c->size(); ++t)
                    if (c->get(t)) rel.flip(inserted_at[t]);
                kernel.push_back(rel);
            }
            span.insert(v);
            inserted_at.push_back(k);
        }
        rep.poincare.push_back(index.size());
        rep.decomposable.push_back(span.rank());

        // relations already implied by lower ones
        Echelon ideal(monos.size());
        for (const auto& r : rep.relations)
            for (const auto& m : monomials(degs, d - r.degree)) {
                BitVec v(monos.size());
                for (const auto& t : r.poly) {
                    GenMonomial s = m;
                    for (std::size_t i = 0; i < t.size(); ++i) s[i] += t[i];
                    v.flip(mono_index.at(s));
                }
                ideal.insert(v);
            }
        if (d == 1 || monos.empty()) kernel.clear();
        std::stable_sort(kernel.begin(), kernel.end(), [&](const BitVec& a, const BitVec& b) {
            auto rank = [&](const BitVec& v) {
                if (v.popcount() != 1) return 2;
                return factor_count(monos[v.first()]) == 2 ? 0 : 1;
            };
            return rank(a) < rank(b);
        });
        for (const auto& k : kernel) {
            if (!ideal.insert(k)) continue;
            Relation r;
            r.degree = d;
            for (std::size_t t = 0; t < monos.size(); ++t)
                if (k.get(t)) r.poly.insert(monos[t]);
            r.vanishing_product = r.poly.size() == 1 && factor_count(*r.poly.begin()) == 2;
            rep.relations.push_back(r);
        }

        // new generators complete the decomposables
        auto candidates = alt::basis_alt(n, d);
        std::stable_sort(candidates.begin(), candidates.end(), [&](const AltMonomial& a, const AltMonomial& b) {
            int ca = columns(a), cb = columns(b);
            if (ca != cb) return tie == TieBreak::FewestColumns ? ca < cb : ca > cb;
            if (a.polarity() != b.polarity()) return a.polarity() > b.polarity();
            return tie == TieBreak::FewestColumns ? a.str() < b.str() : b.str() < a.str();
        });
        for (const auto& c : candidates) {
            AltClass x = alt::of(c);
            if (!span.insert(coordinates(x, index))) continue;
            rep.generators.push_back(PresGenerator{d, x, c.str(), hopf_name(c), charge(x)});
        }
    }
    for (auto& r : rep.relations) {
        GenPoly p;
        for (auto m : r.poly) {
            m.resize(rep.generators.size(), 0);
            p.insert(m);
        }
        r.poly = p;
    }
    return rep;
}

std::optional<GenPoly> express(const PresentationReport& r, const AltClass& x) {
    if (x.n != r.n || x.d > r.max_degree) return std::nullopt;
    if (x.zero()) return GenPoly{};
    std::vector<int> degs;
    for (const auto& g : r.generators) degs.push_back(g.degree);
    auto monos = monomials(degs, x.d);
    if (x.d == 0) monos.push_back(GenMonomial(degs.size(), 0));
    std::stable_sort(monos.begin(), monos.end(), [](const GenMonomial& a, const GenMonomial& b) { return factor_count(a) < factor_count(b); });
    auto index = basis_index(r.n, x.d);
    Evaluator ev{r.n, r.generators, {}};
    Echelon span(index.size(), true);
    for (const auto& m : monos) span.insert(coordinates(ev(m), index));
    auto c = span.express(coordinates(x, index));
    if (!c) return std::nullopt;
    GenPoly p;
    for (std::size_t t = 0; t < c->size(); ++t)
        if (c->get(t)) p.insert(monos[t]);
    return p;
}

}  // namespace altcohom::present
