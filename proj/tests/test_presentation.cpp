#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "altcohom/acceptance.hpp"
#include "altcohom/alt.hpp"
#include "altcohom/cache.hpp"
#include "altcohom/cli.hpp"
#include "altcohom/presentation.hpp"

using namespace altcohom;
using namespace altcohom::present;
using alt::AltClass;

namespace {

AltClass P(const std::string& s) { return alt::parse_alt(s); }

std::vector<GenMonomial> monomials_of(const std::vector<int>& degs, int d) {
    std::vector<GenMonomial> out;
    GenMonomial cur(degs.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == degs.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (cur[i] = 0; cur[i] * degs[i] <= rest; ++cur[i]) rec(i + 1, rest - cur[i] * degs[i]);
        cur[i] = 0;
    };
    rec(0, d);
    return out;
}

// dimension of the degree-d part of the ideal generated by all relations
std::size_t ideal_dim(const PresentationReport& r, int d) {
    auto degs = r.generator_degrees();
    auto monos = monomials_of(degs, d);
    std::map<GenMonomial, std::size_t> index;
    for (const auto& m : monos) index.emplace(m, index.size());
    Echelon e(monos.size());
    for (const auto& rel : r.relations)
        if (rel.degree <= d)
            for (const auto& m : monomials_of(degs, d - rel.degree)) {
                BitVec v(monos.size());
                for (auto t : rel.poly) {
                    for (std::size_t i = 0; i < t.size(); ++i) t[i] += m[i];
                    v.flip(index.at(t));
                }
                e.insert(v);
            }
    return e.rank();
}

std::map<int, int> count_by_degree(const std::vector<int>& degs) {
    std::map<int, int> c;
    for (int d : degs) ++c[d];
    return c;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("altcohom_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "altcohom");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Presentation, A8GeneratorsAndRelations) {
    auto r = derive_presentation(8, 14);
    EXPECT_EQ(r.generator_degrees(), (std::vector<int>{2, 3, 3, 4, 5, 6, 6, 7, 7}));
    EXPECT_EQ(r.relations.size(), 17u);
    EXPECT_EQ(r.vanishing_relations(), 15u);
    EXPECT_EQ(r.relation_degrees(), (std::vector<int>{6, 8, 9, 9, 9, 9, 10, 10, 10, 10, 10, 12, 12, 12, 13, 13, 14}));
    std::vector<std::string> names;
    for (const auto& g : r.generators) names.push_back(g.name);
    EXPECT_EQ(names, (std::vector<std::string>{"sigma2", "sigma3", "d3", "sigma4", "d3 o sigma2", "d6+", "d6-", "d7+", "d7-"}));
    EXPECT_EQ(r.generators[5].charge, 1);
    EXPECT_EQ(r.generators[6].charge, -1);
    EXPECT_EQ(r.generators[0].charge, 0);
    EXPECT_TRUE(r.complete);
}

TEST(Presentation, SmallComponents) {
    auto a4 = derive_presentation(4, 9);
    EXPECT_EQ(a4.generator_degrees(), (std::vector<int>{2, 3, 3}));
    EXPECT_EQ(a4.relation_degrees(), (std::vector<int>{6}));
    EXPECT_EQ(a4.poincare, (std::vector<std::size_t>{1, 0, 1, 2, 1, 2, 3, 2, 3, 4}));
    // the relation is b+^2 + b+b- + b-^2 + a^3 in some order of the generators
    EXPECT_EQ(a4.relations[0].poly.size(), 4u);

    auto a6 = derive_presentation(6, 12);
    EXPECT_EQ(a6.generator_degrees(), (std::vector<int>{2, 3, 3}));
    ASSERT_EQ(a6.relations.size(), 1u);
    EXPECT_TRUE(a6.relations[0].vanishing_product);

    auto a2 = derive_presentation(2, 6);
    EXPECT_TRUE(a2.generators.empty());
    EXPECT_TRUE(a2.relations.empty());
}

TEST(Presentation, DimensionBookkeepingAndRelationsSpanKernel) {
    for (int n : {4, 6, 8}) {
        auto r = derive_presentation(n, n == 8 ? 14 : 12);
        ASSERT_EQ(r.poincare.size(), static_cast<std::size_t>(r.max_degree + 1));
        const auto degs = r.generator_degrees();
        for (int d = 1; d <= r.max_degree; ++d) {
            std::size_t fresh = std::count(degs.begin(), degs.end(), d);
            EXPECT_EQ(r.poincare[d], alt::basis_alt(n, d).size());
            EXPECT_EQ(r.decomposable[d] + fresh, r.poincare[d]) << n << "," << d;
            // evaluation map on monomials in lower generators: kernel dimension = ideal dimension
            std::size_t monos = 0;
            for (const auto& m : monomials_of(degs, d)) {
                bool uses_fresh = false;
                for (std::size_t i = 0; i < m.size(); ++i) uses_fresh |= m[i] && degs[i] == d;
                monos += !uses_fresh;
            }
            EXPECT_EQ(ideal_dim(r, d), monos - r.decomposable[d]) << n << "," << d;
        }
        for (const auto& rel : r.relations) {
            AltClass sum = alt::zero_class(n, rel.degree);
            for (const auto& m : rel.poly) sum += evaluate(r, m);
            EXPECT_TRUE(sum.zero()) << r.poly_str(rel.poly);
        }
    }
}

TEST(Presentation, TieBreakInvariance) {
    for (int n : {4, 6, 8}) {
        auto a = derive_presentation(n, 14), b = derive_presentation(n, 14, TieBreak::MostColumns);
        EXPECT_EQ(count_by_degree(a.generator_degrees()), count_by_degree(b.generator_degrees())) << n;
        EXPECT_EQ(count_by_degree(a.relation_degrees()), count_by_degree(b.relation_degrees())) << n;
    }
    auto b = derive_presentation(8, 6, TieBreak::MostColumns);
    EXPECT_EQ(b.generators[4].monomial, "s(2;2)*g+(2,1) o 1(2)");
}

TEST(Presentation, PublishedA8RelationsHold) {
    auto r = derive_presentation(8, 14);
    auto s2 = P("s(2;4)"), s4 = P("s(4;4)"), d3 = P("g+(2,1) o 1(2)"), d5 = P("g+(2,1) o s(2;2)");
    auto D = P("g+(2,2) + g-(2,2)");
    auto c = [](const AltClass& x, const AltClass& y) { return alt::cup(x, y); };
    EXPECT_TRUE((c(d5, d5) + c(c(s2, d3), d5) + c(c(s2, s2), D) + c(c(d3, d3), s4)).zero());
    // degree-12 reading of the d6+ d6- relation
    auto rhs = c(c(c(s2, s2), d3), d5) + c(c(c(s2, s2), s2), D) + c(c(d3, s4), d5) + c(c(s2, s4), c(d3, d3) + D);
    EXPECT_EQ(c(P("g+(2,2)"), P("g-(2,2)")), rhs);
    for (const auto& g : r.generators) EXPECT_EQ(g.cls, alt::parse_alt(g.monomial));
}

TEST(Presentation, ExpressRoundTrip) {
    auto r = derive_presentation(8, 12);
    std::mt19937 rng(21);
    for (int d = 0; d <= 12; ++d) {
        for (int trial = 0; trial < 4; ++trial) {
            AltClass x = alt::zero_class(8, d);
            for (const auto& m : alt::basis_alt(8, d))
                if (rng() & 1) x.toggle(m);
            auto p = express(r, x);
            ASSERT_TRUE(p.has_value()) << x.str();
            AltClass back = alt::zero_class(8, d);
            for (const auto& m : *p) back += evaluate(r, m);
            EXPECT_EQ(back, x);
        }
    }
    EXPECT_FALSE(express(r, alt::zero_class(8, 13)).has_value());
    EXPECT_EQ(r.poly_str(*express(r, P("s(2;4)*g+(3,1) + s(3;4)*s(3;4)"))), "sigma3^2");
}

TEST(Presentation, Names) {
    EXPECT_EQ(hopf_name(*P("g+(2,1) o s(2;2)").terms.begin()), "d3 o sigma2");
    EXPECT_EQ(hopf_name(*P("g-(2,2)").terms.begin()), "d6-");
    EXPECT_EQ(hopf_name(*P("g+(2,1) o 1(2)").terms.begin()), "d3");
    EXPECT_EQ(hopf_name(*P("s(4;4)").terms.begin()), "sigma4");
    EXPECT_EQ(hopf_name(*P("1(4)").terms.begin()), "1");
    EXPECT_EQ(columns(*P("g+(2,1) o s(2;2)").terms.begin()), 2);
    EXPECT_EQ(charge(P("g+(2,2) + g-(2,2)")), 2);
    EXPECT_EQ(charge(P("s(2;4)")), 0);
}

TEST(Presentation, LimitsAndErrors) {
    auto r = derive_presentation(4, kMaxPresentationDegree + 3);
    EXPECT_FALSE(r.complete);
    EXPECT_FALSE(r.note.empty());
    EXPECT_EQ(r.poincare.size(), static_cast<std::size_t>(kMaxPresentationDegree + 1));
    EXPECT_THROW(derive_presentation(5, 4), std::invalid_argument);
    EXPECT_THROW(derive_presentation(10, 4), ResourceError);
    EXPECT_THROW(derive_presentation(4, -1), std::invalid_argument);
}

TEST(A8Table, ComparisonWithPublishedValues) {
    auto r = derive_presentation(8, 14);
    auto table = accept::a8_sq_table(r);
    ASSERT_EQ(table.size(), 43u);
    std::set<std::string> differ;
    for (const auto& e : table)
        if (!e.match) differ.insert("Sq" + std::to_string(e.j) + " " + e.generator);
    EXPECT_EQ(differ, (std::set<std::string>{"Sq1 sigma2", "Sq1 d3", "Sq3 sigma4", "Sq3 d3 o sigma2", "Sq4 d3 o sigma2", "Sq2 d6+", "Sq2 d6-",
                                             "Sq3 d6+", "Sq3 d6-", "Sq5 d6+", "Sq5 d6-"}));
    EXPECT_EQ(table.front().computed, "d3 + sigma3");
    EXPECT_FALSE(accept::a8_table_adem_violation(r).empty());
}

TEST(Cache, HexRoundTrip) {
    std::mt19937_64 rng(3);
    for (std::size_t bits : {0u, 1u, 63u, 64u, 65u, 200u}) {
        BitVec v(bits);
        for (std::size_t i = 0; i < bits; ++i)
            if (rng() & 1) v.set(i);
        auto h = cache::hex_encode(v);
        EXPECT_EQ(h.size(), 16 * ((bits + 63) / 64));
        EXPECT_EQ(cache::hex_decode(h, bits), v);
    }
    BitVec one(70);
    one.set(0);
    one.set(64);
    EXPECT_EQ(cache::hex_encode(one), "00000000000000010000000000000001");
    EXPECT_THROW(cache::hex_decode("zz", 3), std::runtime_error);
    EXPECT_THROW(cache::hex_decode("0000000000000010", 3), std::runtime_error);
}

TEST(Cache, JsonRoundTripIsCanonical) {
    for (auto [v, n, d] : std::vector<std::tuple<Variant, int, int>>{{Variant::FNA, 8, 6}, {Variant::FN, 5, 3}, {Variant::FNA, 4, 0}}) {
        auto rec = cache::record_of(cohomology(n, d, v));
        auto text = cache::to_json(rec);
        auto back = cache::from_json(text);
        EXPECT_EQ(back, rec);
        EXPECT_EQ(cache::to_json(back), text);
        auto j = nlohmann::json::parse(text);
        EXPECT_EQ(j["schema_version"], cache::kSchemaVersion);
        EXPECT_EQ(j.dump() + "\n", text);
        for (const auto& c : rec.representatives()) EXPECT_TRUE(differential(c).empty());
    }
    EXPECT_THROW(cache::from_json("{"), std::runtime_error);
    EXPECT_THROW(cache::from_json(R"({"schema_version": 1})"), std::runtime_error);
}

TEST(Cache, PutGetVersionCorruptionAndMissingDirectory) {
    TempDir tmp;
    cache::Key key{Variant::FNA, 8, 6};
    auto rec = cache::record_of(cohomology(8, 6, Variant::FNA));
    {
        cache::Cache c(tmp.path);
        ASSERT_TRUE(c.persistent());
        EXPECT_FALSE(c.get(key).has_value());
        c.put(rec);
    }
    ASSERT_TRUE(std::filesystem::exists(tmp.path / "FNA-n8-d6.json"));
    for (const auto& e : std::filesystem::directory_iterator(tmp.path)) EXPECT_EQ(e.path().extension(), ".json");
    {
        cache::Cache c(tmp.path);
        auto got = c.get(key);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, rec);
        EXPECT_TRUE(c.warnings().empty());
    }
    // a record written by another schema version is a miss
    {
        auto j = nlohmann::json::parse(cache::to_json(rec));
        j["schema_version"] = cache::kSchemaVersion + 1;
        std::ofstream(tmp.path / "FNA-n8-d6.json") << j.dump();
        cache::Cache c(tmp.path);
        EXPECT_FALSE(c.get(key).has_value());
        EXPECT_TRUE(c.warnings().empty());
    }
    // a corrupt file is reported, recomputed and overwritten
    {
        std::ofstream(tmp.path / "FNA-n8-d6.json") << "{\"schema_version\": 1, \"cells\": [";
        cache::Cache c(tmp.path);
        EXPECT_EQ(c.cohomology(key), rec);
        EXPECT_EQ(c.warnings().size(), 1u);
        cache::Cache again(tmp.path);
        EXPECT_EQ(again.get(key), rec);
    }
    // a record filed under the wrong name is rejected
    {
        std::filesystem::copy_file(tmp.path / "FNA-n8-d6.json", tmp.path / "FNA-n8-d7.json");
        cache::Cache c(tmp.path);
        EXPECT_FALSE(c.get({Variant::FNA, 8, 7}).has_value());
        EXPECT_EQ(c.warnings().size(), 1u);
    }
    cache::Cache mem(tmp.path / "missing");
    EXPECT_FALSE(mem.persistent());
    EXPECT_EQ(mem.warnings().size(), 1u);
    EXPECT_EQ(mem.cohomology(key), rec);
    EXPECT_EQ(mem.get(key), rec);
    EXPECT_FALSE(std::filesystem::exists(tmp.path / "missing"));
}

TEST(Cli, Examples) {
    auto p = run({"poincare", "--group", "A", "--n", "4", "--max-degree", "6"});
    EXPECT_EQ(p.code, 0);
    EXPECT_EQ(p.out, "[1,0,1,2,1,2,3]\n");

    auto c = run({"cohomology", "--group", "A", "--n", "8", "--degree", "3", "--json"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(nlohmann::json::parse(c.out)["dim"], 2);

    auto s = run({"poincare", "--group", "S", "--n", "4", "--max-degree", "4", "--json"});
    EXPECT_EQ(nlohmann::json::parse(s.out)["dims"], (std::vector<int>{1, 1, 2, 3, 3}));  // F2[s1,s2,c3]/(s1 c3)

    auto d = run({"diff", "--expr", "[1,0,1]^+"});
    EXPECT_EQ(d.out, "[1,0,2]^o + [2,0,1]^o\n");

    auto q = run({"steenrod", "--sq", "2", "--expr", "g+(2,1)", "--json"});
    EXPECT_EQ(alt::parse_alt(nlohmann::json::parse(q.out)["result"].get<std::string>()), alt::cup(alt::scale_one(2, 2), alt::gamma_pm(2, 1, 1)));

    auto pr = run({"product", "--kind", "cup", "--lhs", "g+(3,1)", "--rhs", "g-(3,1)"});
    EXPECT_EQ(pr.out, "0\n");

    auto r = run({"restrict", "--expr", "g+(3,1)", "--target", "V3-", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["determined"].get<bool>());

    auto cp = run({"coproduct", "--expr", "[1,0,1]^+", "--split", "2,2"});
    EXPECT_EQ(cp.code, 0);

    auto pres = run({"present", "--n", "8", "--max-degree", "14", "--json"});
    auto pj = nlohmann::json::parse(pres.out);
    EXPECT_EQ(pj["generators"].size(), 9u);
    EXPECT_EQ(pj["relations"].size(), 17u);

    auto det = run({"detect", "--n", "6", "--degree", "5", "--json"});
    EXPECT_TRUE(nlohmann::json::parse(det.out)["injective"].get<bool>());

    auto v = run({"verify-paper", "--criterion", "2", "--json"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(nlohmann::json::parse(v.out)["passed"], 1);
}

TEST(Cli, ErrorsAndExitCodes) {
    auto e = run({"diff", "--expr", "[2,0,1]^x"});
    EXPECT_EQ(e.code, cli::kParseError);
    EXPECT_NE(e.err.find("position 8"), std::string::npos);
    EXPECT_NE(e.err.find("          ^"), std::string::npos);

    auto j = run({"steenrod", "--sq", "1", "--expr", "s(2;4", "--json"});
    EXPECT_EQ(j.code, cli::kParseError);
    EXPECT_EQ(nlohmann::json::parse(j.out)["error"]["position"], 5);

    auto rhs = run({"product", "--lhs", "s(2;4)", "--rhs", "s(2;4)*?"});
    EXPECT_EQ(rhs.code, cli::kParseError);
    EXPECT_NE(rhs.err.find("s(2;4)*?"), std::string::npos);

    EXPECT_EQ(run({"present", "--n", "10", "--max-degree", "4"}).code, cli::kResourceCap);
    EXPECT_EQ(run({"product", "--kind", "odot", "--lhs", "g+(3,1)", "--rhs", "g+(3,1) + g-(3,1)"}).code, cli::kResourceCap);
    EXPECT_EQ(run({"coproduct", "--expr", "g+(2,1)", "--split", "2,4"}).code, cli::kUsage);
    EXPECT_EQ(run({"coproduct", "--expr", "g+(2,1)", "--split", "2;2"}).code, cli::kParseError);
    EXPECT_EQ(run({"restrict", "--expr", "g+(2,1)", "--target", "W"}).code, cli::kUsage);
    EXPECT_EQ(run({"nonsense"}).code, cli::kUsage);
    EXPECT_EQ(run({"poincare", "--group", "B", "--n", "4", "--max-degree", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}
