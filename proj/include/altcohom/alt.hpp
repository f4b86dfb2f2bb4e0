#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "altcohom/poly.hpp"
#include "altcohom/sym.hpp"

namespace altcohom::alt {

// Largest number of points handled by the alternating model.
inline constexpr int kMaxPoints = 8;

// Positive, transfer-indecomposable piece on 2^k points.
// width 4: exps = {p, n}, the polarized lift of gamma_{1,2}^p gamma_{2,1}^n (n >= 1).
// width 2^k >= 8: exps[l-1] is the exponent of gamma_{1,w/2;w/2} (l = 1) or gamma^+_{l,w/2^l}.
struct Piece {
    int width = 0;
    std::vector<int> exps;
    auto operator<=>(const Piece&) const = default;
    int degree() const;
    std::string str() const;
};

// Neutral cup monomial prod_k gamma_{1,k;width/2}^{exps[k-2]}; no exponents is the unit 1_{width/2}.
struct Tail {
    int width = 0;
    std::vector<int> exps;
    auto operator<=>(const Tail&) const = default;
    int degree() const;
    std::string str() const;
};

// 1^sign o pieces o tail. Width 0 is the sign component {1^+, 1^-}.
struct AltMonomial {
    int sign = 0;  // 0: +, 1: -
    std::vector<Piece> pieces;  // sorted, distinct
    std::optional<Tail> tail;
    auto operator<=>(const AltMonomial&) const = default;
    int width() const;
    int degree() const;
    // +1, -1 or 0 (neutral)
    int polarity() const;
    std::string str() const;
};

struct AltClass {
    int n = 0, d = 0;
    std::set<AltMonomial> terms;
    bool zero() const { return terms.empty(); }
    bool operator==(const AltClass& o) const { return n == o.n && d == o.d && terms == o.terms; }
    void toggle(const AltMonomial& m);
    AltClass& operator+=(const AltClass& o);
    AltClass operator+(const AltClass& o) const {
        AltClass r = *this;
        r += o;
        return r;
    }
    std::string str() const;
};

AltClass of(const AltMonomial& m);
AltClass zero_class(int n, int d);

using AltTensor = std::set<std::pair<AltMonomial, AltMonomial>>;
void toggle(AltTensor& t, const AltMonomial& a, const AltMonomial& b);
std::string tensor_str(const AltTensor& t);

std::vector<AltMonomial> basis_alt(int n, int d);
std::vector<std::size_t> poincare_alt(int n, int max_degree);

// generators
AltClass sign_plus();
AltClass sign_minus();
AltClass unit(int m);                        // 1_m on 2m points
AltClass gamma_pm(int ell, int m, int sign);  // gamma^{+/-}_{ell,m}, ell >= 2; m = 0 gives 1^{+/-}
AltClass scale_one(int k, int m);            // gamma_{1,k;m}, 2 <= k <= m; k = 0 gives 1_m
AltClass a4_lift(int p, int n, int sign);     // polarized lift of gamma_{1,2}^p gamma_{2,1}^n

AltClass conjugate(const AltClass& x);
AltClass odot(const AltClass& x, const AltClass& y);
// cup product solved from detection data; classes on different components multiply to zero
// (reported on the component of x)
AltClass cup(const AltClass& x, const AltClass& y);
AltClass power(const AltClass& x, int e);
// cup product by Hopf distributivity and the cup relations
AltClass cup_by_relations(const AltClass& x, const AltClass& y);
// coproduct component with i points on the left, 0 <= i <= n
AltTensor coproduct(const AltClass& x, int i);
// component i of Delta x (o) Delta y, keeping only terms whose first charged factor is positive
// (or every term, without polarization)
AltTensor coproduct_of_product(const AltClass& x, const AltClass& y, int i, bool polarize = true);
// component computed with the alternative polarization (last non-neutral factor decides)
AltTensor coproduct_alt_polarization(const AltClass& x, int i);

// Detection data: proper coproducts, restrictions to V^+/V^- (4 or 8 points) and AV.
struct Detection {
    std::map<int, AltTensor> coproduct;
    std::optional<MultiPoly> v_plus, v_minus;
    std::optional<MultiPoly> av;
    bool operator==(const Detection&) const = default;
};
Detection detect(const AltClass& x);
// rank of the detection map on basis_alt(n, d)
std::size_t detection_rank(int n, int d);
// solve for the class with the given detection data
std::optional<AltClass> solve_detection(int n, int d, const Detection& target);

// comparison with the symmetric groups
AltClass res_from_sym(const sym::SymClass& y);
sym::SymClass tr_to_sym(const AltClass& x);
// lift of a monomial of the annihilator set, with the A4 pieces in the printed orientation
AltClass lift_gysin(const sym::SymHopfMonomial& x);

// g+(l,m), g-(l,m), s(k;m), 1(m), 1+, 1-, L(p,n); '^', '*', 'o', '+', parentheses
AltClass parse_alt(const std::string& text);

}  // namespace altcohom::alt
