#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "altcohom/alt.hpp"
#include "altcohom/poly.hpp"

namespace altcohom::steen {

using alt::AltClass;
using alt::AltMonomial;
using alt::AltTensor;

// (j, m) coordinates of x_{p,l'} = (2^p (2^l - 2^l') + 2^p - 1, 2^p) at level l.
std::pair<int, int> bipartition_vector(int level, int p, int lp);

// (j, m) = sum c_{p,l'} x_{p,l'} (+ (1,1) when flag is set, modified level 2 only).
struct BiPartition {
    int level = 0, j = 0, m = 0;
    std::map<std::pair<int, int>, int> coeffs;  // (p, l') -> c > 0
    bool flag = false;
    bool operator==(const BiPartition&) const = default;
    int coeff(int p, int lp) const;
    std::string str() const;
};

// All bi-partitions, ordered lexicographically on the coefficients of the vectors sorted by (p, l');
// with `modified` the partitions using the extra (1,1) follow those without it.
std::vector<BiPartition> enumerate_bipartitions(int j, int m, int level, bool modified = false);

// Hopf ring generators: gamma^{+/-}_{ell,m} (ell >= 2) and gamma_{1,k;m}.
struct Generator {
    enum class Kind { Charged, ScaleOne };
    Kind kind = Kind::Charged;
    int ell = 2, m = 1, sign = 0;
    int k = 0;  // scale-one only
    static Generator charged(int ell, int m, int sign = 0) { return {Kind::Charged, ell, m, sign, 0}; }
    static Generator scale_one(int k, int m) { return {Kind::ScaleOne, 1, m, 0, k}; }
    auto operator<=>(const Generator&) const = default;
    int points() const;
    int degree() const;
    AltClass cls() const;
    std::string str() const;
};

// A basis monomial as 1^sign o factor_1 o ... where each factor is a sum of cup monomials in
// generators on `width` points (the empty cup monomial is the unit).
using CupMonomial = std::vector<std::pair<Generator, int>>;
struct HopfFactor {
    int width = 0;
    std::vector<CupMonomial> terms;
};
struct Factorization {
    int sign = 0;
    std::vector<HopfFactor> factors;
};
Factorization factorize(const AltMonomial& m);
AltClass evaluate(const Factorization& f);

// W(0,0;0) = 1^+ + 1^-, otherwise sum_l binom(i-j+l-1, l) gamma_{1,j-l;m} gamma_{1,i+l;m}
AltClass wu_W(int i, int j, int m);

// Sq^j on a generator by the bi-partition formulas; zero for j < 0 or j > degree.
AltClass sq_generator(int j, const Generator& g);
// Sq^j by the Cartan formula over cup and transfer products.
AltClass sq(int j, const AltClass& x);
// Total square sum_j Sq^j x, indexed by j.
std::vector<AltClass> sq_total(const AltClass& x);
// Sq^j on each tensor factor by the Cartan formula.
AltTensor sq_tensor(int j, const AltTensor& t);

// Independent route: squares of the detection data (polynomial squares on restrictions, Cartan on
// coproducts, recursively) solved back into the basis.
AltClass sq_by_detection(int j, const AltClass& x);

// Sq^j on a polynomial ring with every variable of degree one.
MultiPoly sq_poly(int j, const MultiPoly& p);

}  // namespace altcohom::steen
