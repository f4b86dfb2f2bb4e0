#include "altcohom/detect.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace altcohom::detect {

std::string Target::str() const {
    switch (kind) {
        case Kind::VPlus: return rank == 2 ? "V2" : "V" + std::to_string(rank) + "+";
        case Kind::VMinus: return "V" + std::to_string(rank) + "-";
        case Kind::AV: return "AV";
        case Kind::Young: {
            std::string s = "AI=";
            for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
            return s;
        }
    }
    return "";
}

Target parse_target(const std::string& text) {
    Target t;
    if (text == "AV") return t;
    if (text == "V2" || text == "V2+") return Target{Target::Kind::VPlus, 2, {}};
    if (text == "V3+") return Target{Target::Kind::VPlus, 3, {}};
    if (text == "V3-") return Target{Target::Kind::VMinus, 3, {}};
    if (text.rfind("AI=", 0) == 0) {
        t.kind = Target::Kind::Young;
        std::stringstream ss(text.substr(3));
        std::string part;
        while (std::getline(ss, part, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != part.size() || v <= 0 || v % 2 != 0)
                throw std::invalid_argument("target: parts must be positive even integers");
            t.parts.push_back(v);
        }
        if (t.parts.size() < 2) throw std::invalid_argument("target: a Young subgroup needs at least two parts");
        return t;
    }
    throw std::invalid_argument("unknown target '" + text + "' (expected V2, V3+, V3-, AI=i,j,... or AV)");
}

std::vector<Target> detection_targets(int n) {
    std::vector<Target> out;
    if (n == 4) out.push_back(Target{Target::Kind::VPlus, 2, {}});
    if (n == 8) {
        out.push_back(Target{Target::Kind::VPlus, 3, {}});
        out.push_back(Target{Target::Kind::VMinus, 3, {}});
    }
    for (int i = 2; i <= n - 2; i += 2) out.push_back(Target{Target::Kind::Young, 0, {i, n - i}});
    out.push_back(Target{});
    return out;
}

std::string multi_tensor_str(const MultiTensor& t) {
    if (t.empty()) return "0";
    std::string out;
    for (const auto& v : t) {
        if (!out.empty()) out += " + ";
        for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " (x) " : "") + v[k].str();
    }
    return out;
}

bool Restriction::zero() const {
    if (!determined) return false;
    if (poly) return poly->zero();
    return !tensor || tensor->empty();
}

std::string Restriction::str() const {
    if (!determined) return "undetermined (" + reason + ")";
    if (poly) return poly->str(target.kind == Target::Kind::AV ? "y" : "x");
    return tensor ? multi_tensor_str(*tensor) : "0";
}

namespace {

int factor_count(const AltMonomial& m) { return static_cast<int>(m.pieces.size()) + (m.tail ? 1 : 0); }

void toggle_vec(MultiTensor& t, const std::vector<AltMonomial>& v) {
    auto it = t.find(v);
    if (it != t.end()) t.erase(it);
    else t.insert(v);
}

MultiTensor young(const AltMonomial& m, const std::vector<int>& parts, std::size_t start) {
    MultiTensor out;
    if (start + 1 == parts.size()) {
        out.insert({m});
        return out;
    }
    for (const auto& [a, b] : alt::coproduct(alt::of(m), parts[start]))
        for (const auto& rest : young(b, parts, start + 1)) {
            std::vector<AltMonomial> v{a};
            v.insert(v.end(), rest.begin(), rest.end());
            toggle_vec(out, v);
        }
    return out;
}

// AV image of a basis monomial, if the restriction rules determine it
std::optional<MultiPoly> av_mono(const AltMonomial& m) {
    if (m.width() >= 6 && factor_count(m) >= 2) return std::nullopt;
    return alt::detect(alt::of(m)).av;
}

void check_ambient(const AltClass& x, const Target& t) {
    if (x.n < 2 || x.n % 2 != 0) throw std::invalid_argument("restriction needs a component with an even positive number of points");
    switch (t.kind) {
        case Target::Kind::VPlus:
        case Target::Kind::VMinus:
            if ((t.rank == 2 && x.n != 4) || (t.rank == 3 && x.n != 8) || (t.rank != 2 && t.rank != 3) ||
                (t.rank == 2 && t.kind == Target::Kind::VMinus))
                throw std::invalid_argument("target " + t.str() + " does not lie in A_" + std::to_string(x.n));
            break;
        case Target::Kind::Young: {
            int s = 0;
            for (int p : t.parts) s += p;
            if (s != x.n) throw std::invalid_argument("target " + t.str() + " does not lie in A_" + std::to_string(x.n));
            break;
        }
        case Target::Kind::AV: break;
    }
}

}  // namespace

Restriction restrict_class(const AltClass& x, const Target& target) {
    check_ambient(x, target);
    Restriction r;
    r.target = target;
    switch (target.kind) {
        case Target::Kind::VPlus:
        case Target::Kind::VMinus: {
            auto det = alt::detect(x);
            r.poly = target.kind == Target::Kind::VPlus ? *det.v_plus : *det.v_minus;
            break;
        }
        case Target::Kind::Young: {
            MultiTensor t;
            for (const auto& m : x.terms)
                for (const auto& v : young(m, target.parts, 0)) toggle_vec(t, v);
            r.tensor = t;
            break;
        }
        case Target::Kind::AV: {
            MultiPoly p(x.n / 2 - 1);
            for (const auto& m : x.terms) {
                auto img = av_mono(m);
                if (!img) {
                    r.determined = false;
                    r.reason = "transfer product " + m.str();
                    return r;
                }
                p += *img;
            }
            r.poly = p;
            break;
        }
    }
    return r;
}

namespace {

// Assigns coordinates to detection data keyed by printable labels.
struct Coordinates {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<std::size_t>> columns;
    void add(std::vector<std::string> keys) {
        std::vector<std::size_t> col;
        for (const auto& k : keys) col.push_back(index.emplace(k, index.size()).first->second);
        columns.push_back(col);
    }
    BitVec vec(std::size_t c) const {
        BitVec v(index.size());
        for (std::size_t i : columns[c]) v.flip(i);
        return v;
    }
};

std::vector<std::string> poly_keys(const std::string& tag, const MultiPoly& p) {
    std::vector<std::string> out;
    for (const auto& t : p.terms()) {
        std::string k = tag;
        for (int e : t) k += ":" + std::to_string(e);
        out.push_back(k);
    }
    return out;
}

std::size_t rank_of(const Coordinates& c, const std::vector<std::size_t>& cols) {
    Echelon e(c.index.size());
    for (std::size_t k : cols) e.insert(c.vec(k));
    return e.rank();
}

}  // namespace

std::string DetectionReport::str() const {
    std::ostringstream os;
    os << "A_" << n << " degree " << d << ": dim " << dim << ", V rank " << v_rank << ", coproduct rank " << coproduct_rank
       << ", AV rank " << av_rank << " (" << av_undetermined << " undetermined), V+coproduct rank " << combined_rank
       << ", " << (injective ? "injective" : "not injective");
    return os.str();
}

DetectionReport detection_report(int n, int d) {
    if (n < 2 || n % 2 != 0 || n > alt::kMaxPoints) throw std::invalid_argument("detection_report: n must be even, 2 <= n <= 8");
    DetectionReport rep;
    rep.n = n;
    rep.d = d;
    auto basis = alt::basis_alt(n, d);
    rep.dim = basis.size();
    Coordinates v, cop, av, all, full;
    std::vector<std::size_t> undet, det;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto data = alt::detect(alt::of(basis[k]));
        std::vector<std::string> vk, ck;
        if (data.v_plus) vk = poly_keys("V+", *data.v_plus);
        if (data.v_minus)
            for (auto& s : poly_keys("V-", *data.v_minus)) vk.push_back(s);
        for (const auto& [i, t] : data.coproduct)
            for (const auto& [a, b] : t) ck.push_back(std::to_string(i) + "|" + a.str() + "|" + b.str());
        auto img = av_mono(basis[k]);
        std::vector<std::string> ak = img ? poly_keys("AV", *img) : std::vector<std::string>{};
        (img ? det : undet).push_back(k);
        v.add(vk);
        cop.add(ck);
        av.add(ak);
        std::vector<std::string> both = vk;
        both.insert(both.end(), ck.begin(), ck.end());
        all.add(both);
        both.insert(both.end(), ak.begin(), ak.end());
        full.add(both);
    }
    std::vector<std::size_t> every(basis.size());
    for (std::size_t k = 0; k < every.size(); ++k) every[k] = k;
    rep.v_rank = rank_of(v, every);
    rep.coproduct_rank = rank_of(cop, every);
    rep.av_rank = rank_of(av, det);
    rep.av_undetermined = undet.size();
    rep.combined_rank = rank_of(all, every);
    bool undet_ok = rep.combined_rank - rank_of(all, det) == undet.size();
    bool det_ok = rank_of(full, det) == det.size();
    rep.injective = undet_ok && det_ok;
    return rep;
}

std::string verdict_str(RelationReport::Verdict v) {
    switch (v) {
        case RelationReport::Verdict::Pass: return "pass";
        case RelationReport::Verdict::Fail: return "fail";
        case RelationReport::Verdict::Inconclusive: return "inconclusive";
    }
    return "";
}

std::string RelationReport::str() const {
    std::string out = verdict_str(verdict);
    for (const auto& c : checks) {
        out += "; " + c.target.str() + ": ";
        out += c.status == TargetCheck::Status::Agree ? "agree" : c.status == TargetCheck::Status::Differ ? "differ" : "undetermined";
    }
    return out;
}

RelationReport verify_relation(const AltClass& lhs, const AltClass& rhs) {
    if (lhs.n != rhs.n || lhs.d != rhs.d) throw std::invalid_argument("verify_relation: sides differ in component or degree");
    RelationReport rep;
    bool differ = false, undetermined = false;
    for (const auto& t : detection_targets(lhs.n)) {
        TargetCheck c{t};
        if (t.kind == Target::Kind::AV) {
            auto r = restrict_class(lhs + rhs, t);
            if (!r.determined) c.status = TargetCheck::Status::Undetermined;
            else if (!r.zero()) c.status = TargetCheck::Status::Differ;
        } else {
            auto a = restrict_class(lhs, t), b = restrict_class(rhs, t);
            if (a.poly != b.poly || a.tensor != b.tensor) c.status = TargetCheck::Status::Differ;
        }
        differ |= c.status == TargetCheck::Status::Differ;
        undetermined |= c.status == TargetCheck::Status::Undetermined;
        rep.checks.push_back(c);
    }
    rep.verdict = differ ? RelationReport::Verdict::Fail
                         : undetermined ? RelationReport::Verdict::Inconclusive : RelationReport::Verdict::Pass;
    return rep;
}

}  // namespace altcohom::detect
