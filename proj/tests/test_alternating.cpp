#include <gtest/gtest.h>

#include <random>

#include "altcohom/alt.hpp"
#include "altcohom/detect.hpp"
#include "altcohom/fn.hpp"
#include "altcohom/relations.hpp"
#include "altcohom/sym.hpp"

using namespace altcohom;
using namespace altcohom::alt;

namespace {

AltClass gp(int ell, int m) { return gamma_pm(ell, m, 0); }
AltClass gm(int ell, int m) { return gamma_pm(ell, m, 1); }

AltClass random_class(std::mt19937& rng, int n, int d) {
    AltClass c = zero_class(n, d);
    for (const auto& m : basis_alt(n, d))
        if (rng() % 2) c.toggle(m);
    return c;
}

std::size_t sym_rank(const std::vector<sym::SymClass>& cs, int n, int d) {
    auto basis = sym::nakaoka_basis(n, d);
    Echelon e(basis.size());
    for (const auto& c : cs) {
        BitVec v(basis.size());
        for (const auto& m : c.dual) v.set(static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin()));
        e.insert(v);
    }
    return e.rank();
}

sym::SymClass sym_power(const sym::SymClass& x, int e) {
    sym::SymClass r = sym::unit(x.n);
    for (int k = 0; k < e; ++k) r = sym::cup(r, x);
    return r;
}

}  // namespace

TEST(AltBasis, DimensionsMatchCochainComplex) {
    for (int n : {4, 6, 8})
        for (int d = 0; d <= 8; ++d) EXPECT_EQ(basis_alt(n, d).size(), cohomology_dim(n, d, Variant::FNA)) << n << "," << d;
}

TEST(AltBasis, DimensionsMatchGysinCounts) {
    for (int n : {2, 4, 6, 8})
        for (int d = 0; d <= 12; ++d)
            EXPECT_EQ(basis_alt(n, d).size(), sym::gysin_Ga(n, d).size() + sym::gysin_Gq(n, d).size()) << n << "," << d;
    for (int d = 0; d <= 10; ++d) EXPECT_TRUE(sym::gysin_Ga(6, d).empty());
}

TEST(AltBasis, Examples) {
    auto b = basis_alt(4, 3);
    AltClass sum = zero_class(4, 3);
    for (const auto& m : b) sum.toggle(m);
    EXPECT_EQ(sum, gp(2, 1) + gm(2, 1));
    EXPECT_EQ(basis_alt(4, 6).size(), 3u);
    EXPECT_EQ(poincare_alt(4, 6), (std::vector<std::size_t>{1, 0, 1, 2, 1, 2, 3}));
    EXPECT_EQ(poincare_alt(8, 14), (std::vector<std::size_t>{1, 0, 1, 2, 2, 3, 6, 7, 8, 10, 12, 17, 20, 22, 29}));
}

TEST(AltBasis, NormalFormInvariants) {
    for (int n : {4, 6, 8})
        for (int d = 0; d <= 12; ++d)
            for (const auto& m : basis_alt(n, d)) {
                EXPECT_EQ(m.width(), n);
                EXPECT_EQ(m.degree(), d);
                EXPECT_TRUE(std::is_sorted(m.pieces.begin(), m.pieces.end()));
                EXPECT_EQ(std::adjacent_find(m.pieces.begin(), m.pieces.end()), m.pieces.end());
                if (m.tail) EXPECT_EQ(m.sign, 0) << m.str();
                for (const auto& p : m.pieces)
                    if (p.width == 4) EXPECT_GE(p.exps[1], 1);
            }
}

TEST(AltRing, WorkedProducts) {
    EXPECT_EQ(cup(gp(2, 1), gm(2, 1)), power(gp(2, 1), 2) + power(gm(2, 1), 2) + power(scale_one(2, 2), 3));
    EXPECT_TRUE(cup(gp(3, 1), gm(3, 1)).zero());
    EXPECT_TRUE(odot(gp(3, 1), gp(3, 1)).zero());
    EXPECT_EQ(odot(gp(3, 1), gp(3, 1)).n, 16);
    EXPECT_THROW(odot(gp(3, 1), gm(3, 1)), ResourceError);
    EXPECT_TRUE(odot(gp(2, 1), gp(2, 1)).zero());
    EXPECT_EQ(odot(sign_minus(), sign_minus()), sign_plus());
    EXPECT_TRUE(odot(sign_plus() + sign_minus(), scale_one(2, 3)).zero());
    EXPECT_TRUE(odot(unit(1), unit(2)).zero());
    // classes on different components multiply to zero
    EXPECT_TRUE(cup(gp(2, 1), gp(3, 1)).zero());
    EXPECT_TRUE(cup_by_relations(gp(2, 1), gp(3, 1)).zero());
}

TEST(AltRing, UnitsAndIdempotence) {
    std::mt19937 rng(1);
    for (int n : {4, 6, 8})
        for (int d = 0; d <= 8; ++d) {
            AltClass x = random_class(rng, n, d);
            EXPECT_EQ(cup(x, unit(n / 2)), x);
            EXPECT_EQ(odot(x, sign_plus()), x);
            EXPECT_EQ(odot(sign_plus(), x), x);
            AltClass y = zero_class(n, d);
            for (const auto& m : x.terms) y += of(m);
            EXPECT_EQ(y, x);
        }
}

TEST(AltRing, CupRoutesAgree) {
    std::size_t pairs = 0;
    for (int n : {2, 4, 6, 8})
        for (int d1 = 0; d1 <= 10; ++d1)
            for (int d2 = d1; d1 + d2 <= 14; ++d2)
                for (const auto& a : basis_alt(n, d1))
                    for (const auto& b : basis_alt(n, d2)) {
                        ++pairs;
                        EXPECT_EQ(cup(of(a), of(b)), cup_by_relations(of(a), of(b))) << a.str() << " * " << b.str();
                    }
    EXPECT_GT(pairs, 1000u);
}

TEST(AltRing, CupIsCommutativeAndAssociative) {
    std::mt19937 rng(2);
    for (int t = 0; t < 150; ++t) {
        int n = 2 * (2 + rng() % 3);
        AltClass x = random_class(rng, n, rng() % 5), y = random_class(rng, n, rng() % 5), z = random_class(rng, n, rng() % 4);
        EXPECT_EQ(cup(x, y), cup(y, x));
        EXPECT_EQ(cup(cup(x, y), z), cup(x, cup(y, z)));
    }
}

TEST(AltRing, TransferProductIsCommutativeAndAssociative) {
    std::mt19937 rng(3);
    for (int t = 0; t < 150; ++t) {
        int a = 2 * (1 + rng() % 2), b = 2 * (1 + rng() % 2), c = 2;
        if (a + b + c > 8) c = 0;
        AltClass x = random_class(rng, a, rng() % 6), y = random_class(rng, b, rng() % 6);
        AltClass z = c ? random_class(rng, c, 0) : (rng() % 2 ? sign_minus() : sign_plus());
        EXPECT_EQ(odot(x, y), odot(y, x));
        EXPECT_EQ(odot(odot(x, y), z), odot(x, odot(y, z)));
    }
}

TEST(AltRing, CupDistributesOverTransferThroughCoproduct) {
    std::size_t checked = 0;
    for (int n1 : {2, 4})
        for (int n2 : {2, 4}) {
            int n = n1 + n2;
            for (int dx = 0; dx <= 6; ++dx)
                for (const auto& xm : basis_alt(n, dx))
                    for (int d1 = 0; d1 <= 5; ++d1)
                        for (int d2 = 0; d2 <= 5; ++d2)
                            for (const auto& ym : basis_alt(n1, d1))
                                for (const auto& zm : basis_alt(n2, d2)) {
                                    AltClass x = of(xm), y = of(ym), z = of(zm);
                                    AltClass rhs = zero_class(n, dx + d1 + d2);
                                    for (const auto& [a, b] : coproduct(x, n1)) rhs += odot(cup(of(a), y), cup(of(b), z));
                                    EXPECT_EQ(cup(x, odot(y, z)), rhs) << xm.str() << " | " << ym.str() << " | " << zm.str();
                                    ++checked;
                                }
        }
    EXPECT_GT(checked, 500u);
}

TEST(AltRing, ConjugationRules) {
    EXPECT_EQ(conjugate(gp(3, 1)), gm(3, 1));
    EXPECT_EQ(conjugate(scale_one(2, 4)), scale_one(2, 4));
    std::mt19937 rng(4);
    for (int n : {4, 6, 8})
        for (int d = 0; d <= 10; ++d)
            for (const auto& m : basis_alt(n, d)) EXPECT_EQ(conjugate(conjugate(of(m))), of(m));
    for (int t = 0; t < 100; ++t) {
        int a = 2 * (1 + rng() % 2), b = 4;
        AltClass x = random_class(rng, a, rng() % 6), y = random_class(rng, b, rng() % 6);
        EXPECT_EQ(odot(x, conjugate(y)), odot(conjugate(x), y));
        EXPECT_EQ(odot(x, conjugate(y)), conjugate(odot(x, y)));
        int n = 2 * (2 + rng() % 3);
        AltClass u = random_class(rng, n, rng() % 6), v = random_class(rng, n, rng() % 6);
        EXPECT_EQ(conjugate(cup(u, v)), cup(conjugate(u), conjugate(v)));
    }
}

TEST(AltRing, NoNilpotentsInLowDegreesOfA8) {
    for (int d = 1; d <= 7; ++d) {
        auto basis = basis_alt(8, d);
        ASSERT_LT(basis.size(), 16u);
        for (std::size_t mask = 1; mask < (std::size_t{1} << basis.size()); ++mask) {
            AltClass x = zero_class(8, d);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (mask >> k & 1) x.toggle(basis[k]);
            EXPECT_FALSE(cup(x, x).zero()) << x.str();
        }
    }
}

TEST(AltCoproduct, Examples) {
    // Delta gamma^+_{2,2} on the (4,4) split
    AltTensor expect;
    for (auto [l, r] : {std::pair{gp(2, 1), gp(2, 1)}, std::pair{gm(2, 1), gm(2, 1)}})
        toggle(expect, *l.terms.begin(), *r.terms.begin());
    EXPECT_EQ(coproduct(gp(2, 2), 4), expect);
    AltTensor ends;
    toggle(ends, *sign_plus().terms.begin(), *gp(2, 2).terms.begin());
    toggle(ends, *sign_minus().terms.begin(), *gm(2, 2).terms.begin());
    EXPECT_EQ(coproduct(gp(2, 2), 0), ends);
    // Delta 1_m = sum 1_i (x) 1_j
    for (int m = 1; m <= 4; ++m)
        for (int i = 2; i < 2 * m; i += 2) {
            AltTensor u;
            toggle(u, *unit(i / 2).terms.begin(), *unit(m - i / 2).terms.begin());
            EXPECT_EQ(coproduct(unit(m), i), u);
        }
    // gamma_{1,2;2} (x) gamma_{1,0;2} and gamma_{1,0;2} (x) gamma_{1,2;2}; p = 1 or q = 1 terms vanish
    AltTensor s;
    toggle(s, *scale_one(2, 2).terms.begin(), *unit(2).terms.begin());
    toggle(s, *unit(2).terms.begin(), *scale_one(2, 2).terms.begin());
    EXPECT_EQ(coproduct(scale_one(2, 4), 4), s);
    EXPECT_TRUE(coproduct(gp(2, 1), 2).empty());
}

TEST(AltCoproduct, PolarizationChoiceDoesNotMatter) {
    for (int n : {6, 8})
        for (int d = 0; d <= 12; ++d)
            for (const auto& m : basis_alt(n, d))
                for (int i = 2; i < n; i += 2) EXPECT_EQ(coproduct(of(m), i), coproduct_alt_polarization(of(m), i)) << m.str();
}

TEST(AltCoproduct, CoassociativeAndCocommutativeUpToSwap) {
    for (int d = 0; d <= 8; ++d)
        for (const auto& m : basis_alt(8, d)) {
            // (Delta (x) 1) Delta = (1 (x) Delta) Delta on the (2,2,4) split
            std::set<std::vector<AltMonomial>> left, right;
            auto flip = [](std::set<std::vector<AltMonomial>>& s, std::vector<AltMonomial> v) {
                if (!s.erase(v)) s.insert(v);
            };
            for (const auto& [a, b] : coproduct(of(m), 4))
                for (const auto& [a1, a2] : coproduct(of(a), 2)) flip(left, {a1, a2, b});
            for (const auto& [a, b] : coproduct(of(m), 2))
                for (const auto& [b1, b2] : coproduct(of(b), 2)) flip(right, {a, b1, b2});
            EXPECT_EQ(left, right) << m.str();
            // the (i, n - i) and (n - i, i) components are swaps of each other
            AltTensor sw;
            for (const auto& [a, b] : coproduct(of(m), 2)) toggle(sw, b, a);
            EXPECT_EQ(sw, coproduct(of(m), 6)) << m.str();
        }
}

TEST(AltDetection, InjectiveThroughDegreeTwelve) {
    for (int n : {2, 4, 6, 8})
        for (int d = 0; d <= 12; ++d) EXPECT_EQ(detection_rank(n, d), basis_alt(n, d).size()) << n << "," << d;
}

TEST(AltDetection, SolveRecoversClasses) {
    std::mt19937 rng(6);
    for (int n : {4, 6, 8})
        for (int d = 0; d <= 9; ++d) {
            AltClass x = random_class(rng, n, d);
            auto y = solve_detection(n, d, alt::detect(x));
            ASSERT_TRUE(y.has_value());
            EXPECT_EQ(*y, x);
        }
}

TEST(AltGysin, RestrictionAndTransferIdentities) {
    for (int n : {4, 6, 8})
        for (int d = 0; d <= 10; ++d) {
            for (const auto& m : basis_alt(n, d)) EXPECT_EQ(res_from_sym(tr_to_sym(of(m))), of(m) + conjugate(of(m))) << m.str();
            for (const auto& h : sym::hopf_basis(n, d)) EXPECT_TRUE(tr_to_sym(res_from_sym(sym::evaluate(h))).zero()) << h.str();
        }
}

TEST(AltGysin, TransferImageAndRestrictionKernel) {
    for (int n : {4, 6, 8})
        for (int d = 0; d <= 8; ++d) {
            std::vector<sym::SymClass> images;
            for (const auto& m : basis_alt(n, d)) {
                auto t = tr_to_sym(of(m));
                // the image is annihilated by the Euler class
                EXPECT_TRUE(sym::cup(t, sym::euler(n)).zero()) << m.str();
                images.push_back(t);
            }
            EXPECT_EQ(sym_rank(images, n, d), sym::gysin_Ga(n, d).size()) << n << "," << d;
            // restriction kills the Euler-class multiples and has rank |G_q|
            std::vector<AltClass> res;
            Echelon e(basis_alt(n, d).size());
            auto basis = basis_alt(n, d);
            for (const auto& h : sym::hopf_basis(n, d)) {
                AltClass r = res_from_sym(sym::evaluate(h));
                BitVec v(basis.size());
                for (const auto& t : r.terms) v.set(static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), t) - basis.begin()));
                e.insert(v);
            }
            EXPECT_EQ(e.rank(), sym::gysin_Gq(n, d).size()) << n << "," << d;
            if (d >= 1)
                for (const auto& h : sym::hopf_basis(n, d - 1)) EXPECT_TRUE(res_from_sym(sym::cup(sym::euler(n), sym::evaluate(h))).zero());
        }
}

TEST(AltGysin, RestrictionIsARingMap) {
    for (int n : {4, 6, 8})
        for (int d1 = 1; d1 <= 4; ++d1)
            for (int d2 = d1; d1 + d2 <= 8; ++d2)
                for (const auto& h1 : sym::hopf_basis(n, d1))
                    for (const auto& h2 : sym::hopf_basis(n, d2)) {
                        auto a = sym::evaluate(h1), b = sym::evaluate(h2);
                        EXPECT_EQ(res_from_sym(sym::cup(a, b)), cup(res_from_sym(a), res_from_sym(b))) << h1.str() << " " << h2.str();
                    }
}

TEST(AltGysin, FrobeniusReciprocity) {
    for (int n : {4, 6, 8})
        for (int d1 = 0; d1 <= 4; ++d1)
            for (int d2 = 0; d2 <= 5; ++d2)
                for (const auto& h : sym::hopf_basis(n, d1))
                    for (const auto& m : basis_alt(n, d2)) {
                        auto y = sym::evaluate(h);
                        EXPECT_EQ(tr_to_sym(cup(res_from_sym(y), of(m))), sym::cup(y, tr_to_sym(of(m)))) << h.str() << " " << m.str();
                    }
}

TEST(AltGysin, RestrictionTransferProductFormula) {
    // res(a) o b = res(a o tr(b))
    for (int na : {2, 4})
        for (int nb : {2, 4}) {
            for (int da = 0; da <= 4; ++da)
                for (int db = 0; db <= 4; ++db)
                    for (const auto& h : sym::hopf_basis(na, da))
                        for (const auto& m : basis_alt(nb, db)) {
                            auto a = sym::evaluate(h);
                            EXPECT_EQ(odot(res_from_sym(a), of(m)), res_from_sym(sym::odot(a, tr_to_sym(of(m))))) << h.str() << " " << m.str();
                        }
        }
}

TEST(AltGysin, Examples) {
    EXPECT_EQ(tr_to_sym(gp(3, 1)), sym::gamma(3, 1));
    for (int m = 2; m <= 4; ++m) {
        auto y = m == 2 ? sym::gamma(1, 2) : sym::odot(sym::gamma(1, 2), sym::unit(2 * (m - 2)));
        EXPECT_EQ(res_from_sym(y), scale_one(2, m)) << m;
    }
    sym::SymHopfMonomial cube{{sym::SymColumn{4, {0, 3}}}};
    EXPECT_EQ(lift_gysin(cube), power(gm(2, 1), 3) + cup(gp(2, 1), power(gm(2, 1), 2)));
    for (int n = 1; n <= 4; ++n) {
        sym::SymHopfMonomial x{{sym::SymColumn{4, {0, n}}}};
        AltClass lift = lift_gysin(x);
        EXPECT_EQ(tr_to_sym(lift), sym_power(sym::gamma(2, 1), n)) << n;
        // in V_2: L_n(b+, b-) + L_n(b-, b+) = (b+ + b-)^n
        auto v = detect::parse_target("V2");
        EXPECT_EQ(*detect::restrict_class(lift + conjugate(lift), v).poly, (a4_b_plus() + a4_b_minus()).pow(n)) << n;
        EXPECT_EQ(*detect::restrict_class(res_from_sym(sym_power(sym::gamma(2, 1), n)), v).poly, (a4_b_plus() + a4_b_minus()).pow(n));
    }
    EXPECT_THROW(lift_gysin(sym::SymHopfMonomial{{sym::SymColumn{4, {2}}}}), std::invalid_argument);
}

TEST(AltGysin, LiftsOfAnnihilatorBasisTransferBack) {
    for (int n : {4, 8})
        for (int d = 0; d <= 10; ++d)
            for (const auto& x : sym::gysin_Ga(n, d)) {
                AltClass l = lift_gysin(x);
                EXPECT_EQ(l.n, n);
                EXPECT_EQ(sym::sym_normalize(tr_to_sym(l)), sym::SymSum{x}) << x.str();
            }
}

TEST(AltRelations, SuitePasses) {
    auto suite = detect::relation_suite();
    std::set<int> numbers;
    for (const auto& r : suite) {
        numbers.insert(r.number);
        EXPECT_EQ(r.verdict, detect::RelationReport::Verdict::Pass) << r.label << ": " << r.detail;
    }
    EXPECT_EQ(numbers, (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
}

TEST(AltRelations, NegativeControlsFail) {
    for (const auto& r : detect::negative_controls()) EXPECT_EQ(r.verdict, detect::RelationReport::Verdict::Fail) << r.label;
}

TEST(AltParse, Grammar) {
    EXPECT_EQ(parse_alt("g+(2,1)"), gp(2, 1));
    EXPECT_EQ(parse_alt("g-(3,1)"), gm(3, 1));
    EXPECT_EQ(parse_alt("s(2;4)"), scale_one(2, 4));
    EXPECT_EQ(parse_alt("1(3)"), unit(3));
    EXPECT_EQ(parse_alt("1+"), sign_plus());
    EXPECT_EQ(parse_alt("1-"), sign_minus());
    EXPECT_EQ(parse_alt("L(1,2)"), a4_lift(1, 2, 0));
    EXPECT_EQ(parse_alt("g+(2,1) * g-(2,1)"), cup(gp(2, 1), gm(2, 1)));
    EXPECT_EQ(parse_alt("g+(2,1) o s(2;2)^2 + g-(2,1) o s(2;2)^2"),
              odot(gp(2, 1), power(scale_one(2, 2), 2)) + odot(gm(2, 1), power(scale_one(2, 2), 2)));
    EXPECT_EQ(parse_alt("(g+(2,1) + g-(2,1))^2"), power(gp(2, 1) + gm(2, 1), 2));
    EXPECT_EQ(parse_alt("g+(2,1) o 1(2) * s(2;2)"), odot(gp(2, 1), scale_one(2, 2)));
    for (const auto& m : basis_alt(8, 7)) EXPECT_EQ(parse_alt(m.str()), of(m)) << m.str();
}

TEST(AltParse, ErrorsCarryPositions) {
    try {
        parse_alt("g+(2,1) + q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 10u);
    }
    for (const char* bad : {"", "g(2,1)", "g+(2,", "s(5;3)", "g+(2,1) + s(2;2)", "(g+(2,1)", "g+(1,1)", "1(9)"})
        EXPECT_ANY_THROW(parse_alt(bad)) << bad;
}
