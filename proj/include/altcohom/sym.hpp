#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "altcohom/f2.hpp"

namespace altcohom::sym {

// Lower indices (i1,...,ik) of q_{i1} o ... o q_{ik} applied to iota; empty = iota.
using QSeq = std::vector<int>;

int q_degree(const QSeq& I);
int q_width(const QSeq& I);
bool admissible(const QSeq& I);
bool strongly_admissible(const QSeq& I);

// Adem rewriting to admissible sequences, GF(2) sum.
std::set<QSeq> adem_reduce(const QSeq& I);

// Monomial in the Nakaoka polynomial algebra H_*(BS_.) under *.
struct NakaokaMonomial {
    std::vector<QSeq> factors;  // strongly admissible, non-empty, sorted
    int iota = 0;
    auto operator<=>(const NakaokaMonomial&) const = default;
    int width() const;
    int degree() const;
    std::string str() const;
};

NakaokaMonomial nak_mul(const NakaokaMonomial& a, const NakaokaMonomial& b);

using HomPoly = std::set<NakaokaMonomial>;
void toggle(HomPoly& p, const NakaokaMonomial& m);

// q_I(iota) in the Nakaoka basis (any I, zeros allowed)
HomPoly q_eval(const QSeq& I);

std::vector<NakaokaMonomial> nakaoka_basis(int n, int d);
// diagonal coproduct of a homology monomial, restricted to left degree d1
std::set<std::pair<NakaokaMonomial, NakaokaMonomial>> cup_coproduct(const NakaokaMonomial& h,
                                                                      int d1);

// Cohomology class: GF(2) sum of duals of Nakaoka monomials of width n, degree d.
struct SymClass {
    int n = 0, d = 0;
    std::set<NakaokaMonomial> dual;
    bool zero() const { return dual.empty(); }
    bool operator==(const SymClass& o) const { return n == o.n && d == o.d && dual == o.dual; }
    SymClass& operator+=(const SymClass& o);
    SymClass operator+(const SymClass& o) const {
        SymClass r = *this;
        r += o;
        return r;
    }
};

SymClass unit(int n);
SymClass gamma(int ell, int m);
SymClass cup(const SymClass& a, const SymClass& b);
SymClass odot(const SymClass& a, const SymClass& b);

using SymTensor = std::set<std::pair<NakaokaMonomial, NakaokaMonomial>>;
// components of Delta x with i points on the left
SymTensor coproduct_dual(const SymClass& x, int i);

// Cup monomial on one component: prod_l gamma_{l, width/2^l}^{exps[l-1]}; no exponents = unit.
struct SymColumn {
    int width = 0;
    std::vector<int> exps;
    auto operator<=>(const SymColumn&) const = default;
    int degree() const;
    int scale() const;  // max level present, 1 for units
    bool pure_level_one() const;
    std::string str() const;
};

struct SymHopfMonomial {
    std::vector<SymColumn> columns;  // canonical order
    auto operator<=>(const SymHopfMonomial&) const = default;
    int width() const;
    int degree() const;
    int scale() const;
    std::string str() const;
};

// strip trailing zero exponents and sort columns
SymHopfMonomial canonical_order(SymHopfMonomial m);
SymClass evaluate(const SymColumn& c);
SymClass evaluate(const SymHopfMonomial& m);

// gathered block for (I, multiplicity a), and the basis induced by the Nakaoka monomials
SymColumn block_for(const QSeq& I, int a);
SymHopfMonomial hopf_for(const NakaokaMonomial& m);
std::vector<SymHopfMonomial> hopf_basis(int n, int d);

using SymSum = std::set<SymHopfMonomial>;
// coordinates over hopf_basis; throws if the candidate basis is not a basis
SymSum sym_normalize(const SymClass& x);
SymSum sym_normalize(const SymHopfMonomial& m);
// rank of the evaluated canonical monomials (basis certificate)
std::size_t hopf_basis_rank(int n, int d);

using SymHopfTensor = std::set<std::pair<SymHopfMonomial, SymHopfMonomial>>;
// all splits, both sides in canonical coordinates
SymHopfTensor coproduct_sym(const SymHopfMonomial& m);

// Euler class gamma_{1,1} o 1_{n-2} of the double cover BA_n -> BS_n
SymClass euler(int n);
std::vector<SymHopfMonomial> gysin_Ga(int n, int d);
std::vector<SymHopfMonomial> gysin_Gq(int n, int d);

// Parses "g(l,m)", "1(m)", products "*" (cup), "o" (transfer), sums "+", parentheses.
SymClass parse_sym(const std::string& text);

}  // namespace altcohom::sym
