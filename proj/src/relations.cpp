#include "altcohom/relations.hpp"

#include <functional>

namespace altcohom::detect {

namespace {

using alt::AltTensor;
using Verdict = RelationReport::Verdict;

std::string g(const char* sign, int ell, int m) { return std::string("g") + sign + "(" + std::to_string(ell) + "," + std::to_string(m) + ")"; }
std::string s(int k, int m) { return "s(" + std::to_string(k) + ";" + std::to_string(m) + ")"; }

RelationOutcome ring(int number, const std::string& lhs, const std::string& rhs) {
    RelationOutcome out{number, lhs + " = " + rhs};
    AltClass l = alt::parse_alt(lhs);
    AltClass r = rhs == "0" ? alt::zero_class(l.n, l.d) : alt::parse_alt(rhs);
    if (l.n == 0 || r.n == 0) {
        // the formal component has no detecting subgroups; compare normal forms
        out.verdict = l == r ? Verdict::Pass : Verdict::Fail;
        out.detail = "formal component: " + l.str() + " vs " + r.str();
        return out;
    }
    auto rep = verify_relation(l, r);
    out.verdict = rep.verdict;
    out.detail = rep.str();
    return out;
}

void add(AltTensor& t, const AltClass& l, const AltClass& r) {
    for (const auto& a : l.terms)
        for (const auto& b : r.terms) alt::toggle(t, a, b);
}

// compares two families of coproduct components over i = 0, 2, ..., n
RelationOutcome tensors(int number, const std::string& label, int n, const std::function<AltTensor(int)>& lhs,
                        const std::function<AltTensor(int)>& rhs) {
    RelationOutcome out{number, label};
    for (int i = 0; i <= n; i += 2) {
        AltTensor a = lhs(i), b = rhs(i);
        if (a != b) {
            out.verdict = Verdict::Fail;
            out.detail = "component " + std::to_string(i) + ": " + alt::tensor_str(a) + " vs " + alt::tensor_str(b);
            return out;
        }
    }
    out.detail = "all components agree";
    return out;
}

std::vector<AltMonomial> neutral_monomials(int m, int max_degree) {
    std::vector<AltMonomial> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& b : alt::basis_alt(2 * m, d))
            if (b.tail && b.pieces.empty()) out.push_back(b);
    return out;
}

// charged generators that fit on at most 8 points
const std::vector<std::pair<int, int>> kCharged{{2, 1}, {2, 2}, {3, 1}};

}  // namespace

std::vector<RelationOutcome> relation_suite() {
    std::vector<RelationOutcome> out;
    // (1) with the convention gamma_{l,0} = 1^+
    out.push_back(ring(1, g("+", 2, 1) + " o " + g("+", 2, 1), "0"));
    for (auto [ell, m] : kCharged) out.push_back(ring(1, g("+", ell, 0) + " o " + g("+", ell, m), g("+", ell, m)));
    // (2)
    out.push_back(ring(2, "1- o 1-", "1+"));
    for (auto [ell, m] : kCharged) out.push_back(ring(2, "1- o (1- o " + g("+", ell, m) + ")", g("+", ell, m)));
    // (3) and (4) over neutral cup monomials, including units
    for (int m = 1; m <= 4; ++m)
        for (const auto& t : neutral_monomials(m, 4)) out.push_back(ring(3, "(1+ + 1-) o " + t.str(), "0"));
    for (int m = 1; m <= 3; ++m)
        for (int n = m; m + n <= 4; ++n)
            for (const auto& a : neutral_monomials(m, 4))
                for (const auto& b : neutral_monomials(n, 4)) out.push_back(ring(4, a.str() + " o " + b.str(), "0"));
    // (5)
    for (auto [ell, m] : kCharged)
        for (auto [k, n] : kCharged)
            if ((m << ell) == (n << k) && !(ell == 2 && k == 2)) out.push_back(ring(5, g("+", ell, m) + "*" + g("-", k, n), "0"));
    // (6)
    out.push_back(ring(6, g("+", 2, 1) + "*" + g("-", 2, 1), "(" + g("+", 2, 1) + " + " + g("-", 2, 1) + ")^2 + " + s(2, 2) + "^3"));
    out.push_back(ring(6, g("+", 2, 2) + "*" + g("-", 2, 2), g("+", 2, 1) + "^2 o " + s(2, 2) + "^3"));
    // (7), both charges
    for (auto [ell, m] : kCharged) {
        int scale = m << (ell - 1), step = 1 << (ell - 1);
        for (int k = 2; k <= scale; ++k)
            for (const char* sign : {"+", "-"}) {
                std::string lhs = g(sign, ell, m) + "*" + s(k, scale);
                if (k % step != 0) {
                    out.push_back(ring(7, lhs, "0"));
                    continue;
                }
                int q = k / step;
                out.push_back(ring(7, lhs, "(" + g(sign, ell, q) + "*" + s(k, k) + ") o " + g("+", ell, m - q)));
            }
    }
    // (8) on pairs of basis monomials
    for (int wa = 2; wa <= 6; wa += 2)
        for (int wb = 2; wa + wb <= 8; wb += 2)
            for (int da = 0; da <= 6; ++da)
                for (int db = 0; da + db <= 10; ++db)
                    for (const auto& a : alt::basis_alt(wa, da))
                        for (const auto& b : alt::basis_alt(wb, db)) {
                            if (a.polarity() == 0 && b.polarity() == 0) continue;
                            AltClass x = alt::of(a), y = alt::of(b);
                            out.push_back(tensors(8, "Delta((" + a.str() + ") o (" + b.str() + "))", wa + wb,
                                                  [&](int i) { return alt::coproduct(alt::odot(x, y), i); },
                                                  [&](int i) { return alt::coproduct_of_product(x, y, i); }));
                        }
    // (9)
    for (auto [ell, m] : kCharged) {
        int n = m << ell;
        out.push_back(tensors(9, "Delta " + g("+", ell, m), n, [&](int i) { return alt::coproduct(alt::gamma_pm(ell, m, 0), i); },
                              [&](int i) {
                                  AltTensor t;
                                  if (i % (1 << ell) != 0) return t;
                                  int a = i >> ell;
                                  for (int sg = 0; sg < 2; ++sg) add(t, alt::gamma_pm(ell, a, sg), alt::gamma_pm(ell, m - a, sg));
                                  return t;
                              }));
    }
    // (10) with gamma_{1,1;*} = 0 and gamma_{1,0;i} = 1_i
    for (int m = 2; m <= 4; ++m)
        for (int k = 2; k <= m; ++k)
            out.push_back(tensors(10, "Delta " + s(k, m), 2 * m, [&](int i) { return alt::coproduct(alt::scale_one(k, m), i); },
                                  [&](int i) {
                                      AltTensor t;
                                      int a = i / 2, b = m - a;
                                      for (int p = 0; p <= std::min(a, k); ++p) {
                                          int q = k - p;
                                          if (q > b || p == 1 || q == 1) continue;
                                          add(t, alt::scale_one(p, a), alt::scale_one(q, b));
                                      }
                                      return t;
                                  }));
    // (11) the cup-coproduct bialgebra law
    for (int n = 4; n <= 8; n += 2)
        for (int d1 = 1; d1 <= 6; ++d1)
            for (int d2 = d1; d1 + d2 <= 12; ++d2)
                for (const auto& a : alt::basis_alt(n, d1))
                    for (const auto& b : alt::basis_alt(n, d2)) {
                        AltClass x = alt::of(a), y = alt::of(b);
                        out.push_back(tensors(11, "Delta((" + a.str() + ") * (" + b.str() + "))", n,
                                              [&](int i) { return alt::coproduct(alt::cup(x, y), i); },
                                              [&](int i) {
                                                  AltTensor t;
                                                  for (const auto& [a1, a2] : alt::coproduct(x, i))
                                                      for (const auto& [b1, b2] : alt::coproduct(y, i))
                                                          add(t, alt::cup(alt::of(a1), alt::of(b1)), alt::cup(alt::of(a2), alt::of(b2)));
                                                  return t;
                                              }));
                    }
    return out;
}

std::vector<RelationOutcome> negative_controls() {
    std::vector<RelationOutcome> out;
    out.push_back(ring(6, g("+", 2, 1) + "*" + g("-", 2, 1), "0"));
    out.push_back(ring(6, g("+", 2, 2) + "*" + g("-", 2, 2), "0"));
    out.push_back(ring(5, g("+", 3, 1) + "*" + g("-", 3, 1), g("+", 3, 1) + "^2"));
    out.push_back(ring(7, g("+", 2, 2) + "*" + s(2, 4), "0"));
    out.push_back(ring(2, g("+", 3, 1), g("-", 3, 1)));
    out.push_back(ring(2, g("+", 2, 1) + " o " + g("+", 2, 1) + "^2", g("-", 2, 1) + " o " + g("+", 2, 1) + "^2"));
    out.push_back(ring(3, "1+ o " + s(3, 3), "0"));
    // transfer product of coproducts without polarization
    AltClass x = alt::gamma_pm(2, 1, 0), y = alt::unit(2);
    out.push_back(tensors(8, "Delta(g+(2,1) o 1(2)) without polarization", 8, [&](int i) { return alt::coproduct(alt::odot(x, y), i); },
                          [&](int i) { return alt::coproduct_of_product(x, y, i, false); }));
    return out;
}

}  // namespace altcohom::detect
