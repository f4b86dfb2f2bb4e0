#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "altcohom/alt.hpp"

namespace altcohom::present {

using alt::AltClass;
using alt::AltMonomial;

// Order in which basis monomials are tried as new generators.
enum class TieBreak { FewestColumns, MostColumns };

struct PresGenerator {
    int degree = 0;
    AltClass cls;
    std::string monomial;  // basis monomial in the expression grammar
    std::string name;      // sigma_k / d_i notation
    int charge = 0;        // +1, -1 or 0
};

// exponent of each generator, in generator order
using GenMonomial = std::vector<int>;
using GenPoly = std::set<GenMonomial>;

struct Relation {
    int degree = 0;
    GenPoly poly;  // poly = 0
    bool vanishing_product = false;  // a single product of two generators
};

struct PresentationReport {
    int n = 0, max_degree = 0;
    std::vector<PresGenerator> generators;
    std::vector<Relation> relations;
    std::vector<std::size_t> poincare;      // dim H^d
    std::vector<std::size_t> decomposable;  // dim of the span of products of lower generators
    bool complete = true;
    std::string note;

    std::size_t vanishing_relations() const;
    std::vector<int> generator_degrees() const;
    std::vector<int> relation_degrees() const;
    std::string monomial_str(const GenMonomial& m) const;
    std::string poly_str(const GenPoly& p) const;
    std::string str() const;
};

inline constexpr int kMaxPresentationDegree = 24;

// Minimal generators and relations of H^*(BA_n) in degrees <= max_degree, n even, n <= 8.
// Degrees above kMaxPresentationDegree are not computed and the report is flagged incomplete.
PresentationReport derive_presentation(int n, int max_degree, TieBreak tie = TieBreak::FewestColumns);

AltClass evaluate(const PresentationReport& r, const GenMonomial& m);
// x as a polynomial in the generators, preferring few factors; nullopt if x is not generated in range
std::optional<GenPoly> express(const PresentationReport& r, const AltClass& x);

// number of transfer-product factors (pieces and tail)
int columns(const AltMonomial& m);
// +1, -1, 0 for neutral, 2 for a mixture
int charge(const AltClass& x);
// name of a basis monomial in sigma_k / d_i notation, e.g. "d3 o sigma2", "d6+"
std::string hopf_name(const AltMonomial& m);

}  // namespace altcohom::present
