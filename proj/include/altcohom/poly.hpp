#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "altcohom/f2.hpp"
#include "altcohom/fn.hpp"

namespace altcohom {

// Polynomial over GF(2) in a fixed number of variables.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly one(int nvars);
    static MultiPoly var(int nvars, int i);
    static MultiPoly monomial(const std::vector<int>& exps);

    int nvars() const { return nvars_; }
    const std::set<std::vector<int>>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    // -1 for zero, else the largest total degree
    int degree() const;
    bool homogeneous() const;

    void toggle(const std::vector<int>& exps);
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        r += o;
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly pow(int e) const;
    auto operator<=>(const MultiPoly&) const = default;

    // replace variable i by images[i]
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    // variable names default to x1, x2, ...
    std::string str(const std::string& name = "x") const;

private:
    int nvars_ = 0;
    std::set<std::vector<int>> terms_;
};

// Linear substitution given by a matrix over GF(2): x_i -> sum_j m[i][j] x_j.
using LinearMap = std::vector<std::vector<int>>;
MultiPoly apply_linear(const MultiPoly& p, const LinearMap& m);

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d);
BitVec poly_to_vec(const MultiPoly& p, const std::vector<std::vector<int>>& monos);
MultiPoly vec_to_poly(const BitVec& v, const std::vector<std::vector<int>>& monos, int nvars);

// basis of the degree-d polynomials fixed by every generator
std::vector<MultiPoly> invariant_basis(int nvars, int d, const std::vector<LinearMap>& generators);
bool is_invariant(const MultiPoly& p, const std::vector<LinearMap>& generators);

std::vector<LinearMap> gl_generators(int n);
LinearMap c3_generator();
LinearMap swap_generator();

// Dickson generators of F2[x1..xn]^{GL_n}, ordered by increasing degree; 1 <= n <= 3
std::vector<MultiPoly> dickson_gens(int n);
std::vector<int> dickson_degrees(int n);

std::vector<MultiPoly> c3_invariants(int d);
MultiPoly a4_a();
MultiPoly a4_b_plus();
MultiPoly a4_b_minus();

// elementary symmetric polynomial sigma_k in the first `count` of nvars variables
MultiPoly elementary_symmetric(int nvars, int count, int k);
// image of sigma_k(x_1..x_m) in H^*(BAV_{1,m}) = F2[y_1..y_{m-1}]
MultiPoly av_sigma(int m, int k);

// Cochain-level restriction of an FNA cocycle on 2m points to AV_{1,m}, identified with a
// polynomial in y_1..y_{m-1}; the cochain must be a cocycle.
MultiPoly av_restrict_cocycle(const Cochain& x);

}  // namespace altcohom
