#include "altcohom/cli.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "altcohom/acceptance.hpp"
#include "altcohom/alt.hpp"
#include "altcohom/cache.hpp"
#include "altcohom/detect.hpp"
#include "altcohom/fn.hpp"
#include "altcohom/presentation.hpp"
#include "altcohom/steenrod.hpp"

namespace altcohom::cli {

using nlohmann::json;

namespace {

constexpr int kJsonSchema = 1;

struct Options {
    bool json = false;
    std::string group = "A";
    int n = 0, degree = 0, max_degree = 0, sq = 0;
    std::string expr, lhs, rhs, kind = "cup", split, target, tie = "fewest";
    bool reps = false;
    std::vector<int> criteria;
};

Variant variant_of(const std::string& group) { return group == "A" ? Variant::FNA : Variant::FN; }

// expressions starting with '[' are cochains, everything else an alternating class
bool is_cochain(const std::string& s) {
    auto p = s.find_first_not_of(" \t");
    return p != std::string::npos && s[p] == '[';
}

json envelope(const std::string& command) { return json{{"schema_version", kJsonSchema}, {"command", command}}; }

int emit(const Options& o, std::ostream& out, const json& j, const std::string& text) {
    if (o.json) out << j.dump(2) << "\n";
    else out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    return kOk;
}

int cmd_cohomology(const Options& o, std::ostream& out, std::ostream& err) {
    auto c = cache::Cache::from_env();
    cache::Key key{variant_of(o.group), o.n, o.degree};
    json j = envelope("cohomology");
    j.update({{"group", o.group}, {"n", o.n}, {"degree", o.degree}});
    std::ostringstream text;
    try {
        auto r = c.cohomology(key);
        j.update({{"dim", r.dim()}, {"cocycle_dim", r.cocycle_dim}, {"coboundary_rank", r.coboundary_rank}, {"cells", r.cells.size()}});
        json reps = json::array();
        for (const auto& x : r.representatives()) reps.push_back(x.str());
        j["representatives"] = o.reps ? reps : json(nullptr);
        text << "H^" << o.degree << "(B" << o.group << "_" << o.n << ") has dimension " << r.dim() << " (" << r.cells.size()
             << " cells, cocycles " << r.cocycle_dim << ", coboundaries " << r.coboundary_rank << ")\n";
        if (o.reps)
            for (const auto& x : r.representatives()) text << "  " << x.str() << "\n";
    } catch (const ResourceError&) {
        // too large for dense representatives; the dimension alone comes from sparse elimination
        std::size_t dim = cohomology_dim(o.n, o.degree, key.variant);
        j.update({{"dim", dim}, {"cocycle_dim", nullptr}, {"coboundary_rank", nullptr}, {"cells", enumerate_cells(o.n, o.degree, key.variant).size()},
                  {"representatives", nullptr}});
        text << "H^" << o.degree << "(B" << o.group << "_" << o.n << ") has dimension " << dim << " (sparse elimination, no representatives)\n";
    }
    for (const auto& w : c.warnings()) err << "warning: " << w << "\n";
    return emit(o, out, j, text.str());
}

int cmd_poincare(const Options& o, std::ostream& out) {
    std::vector<std::size_t> dims;
    for (int d = 0; d <= o.max_degree; ++d) dims.push_back(cohomology_dim(o.n, d, variant_of(o.group)));
    json j = envelope("poincare");
    j.update({{"group", o.group}, {"n", o.n}, {"max_degree", o.max_degree}, {"dims", dims}});
    std::string text = "[";
    for (std::size_t k = 0; k < dims.size(); ++k) text += (k ? "," : "") + std::to_string(dims[k]);
    return emit(o, out, j, text + "]");
}

int cmd_diff(const Options& o, std::ostream& out) {
    Cochain x = parse_cochain(o.expr);
    Cochain dx = differential(x);
    json j = envelope("diff");
    j.update({{"expr", x.str()}, {"differential", dx.str()}, {"cocycle", dx.empty()}});
    return emit(o, out, j, dx.str());
}

int cmd_product(const Options& o, std::ostream& out) {
    auto x = alt::parse_alt(o.lhs), y = alt::parse_alt(o.rhs);
    auto r = o.kind == "cup" ? alt::cup(x, y) : alt::odot(x, y);
    json j = envelope("product");
    j.update({{"kind", o.kind}, {"lhs", x.str()}, {"rhs", y.str()}, {"n", r.n}, {"degree", r.d}, {"result", r.str()}});
    return emit(o, out, j, r.str());
}

std::pair<int, int> parse_split(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("split must be i,j", 0);
    try {
        std::size_t u1 = 0, u2 = 0;
        int i = std::stoi(s.substr(0, comma), &u1), k = std::stoi(s.substr(comma + 1), &u2);
        if (u1 != comma || comma + 1 + u2 != s.size()) throw ParseError("trailing characters in split", comma);
        return {i, k};
    } catch (const std::logic_error&) {
        throw ParseError("split must be two integers i,j", 0);
    }
}

int cmd_coproduct(const Options& o, std::ostream& out) {
    auto [i, k] = parse_split(o.split);
    std::string result;
    if (is_cochain(o.expr)) {
        Cochain x = parse_cochain(o.expr);
        if (i < 1 || k < 1 || i + k != x.n()) throw std::invalid_argument("split must be positive and add up to " + std::to_string(x.n()) + " points");
        result = coproduct_chain(x, i, k).str();
    } else {
        auto x = alt::parse_alt(o.expr);
        if (i < 0 || k < 0 || i + k != x.n) throw std::invalid_argument("split must add up to " + std::to_string(x.n) + " points");
        result = alt::tensor_str(alt::coproduct(x, i));
    }
    json j = envelope("coproduct");
    j.update({{"expr", o.expr}, {"split", {i, k}}, {"result", result}});
    return emit(o, out, j, result);
}

int cmd_steenrod(const Options& o, std::ostream& out) {
    auto x = alt::parse_alt(o.expr);
    auto r = steen::sq(o.sq, x);
    json j = envelope("steenrod");
    j.update({{"sq", o.sq}, {"expr", x.str()}, {"n", r.n}, {"degree", r.d}, {"result", r.str()}});
    return emit(o, out, j, r.str());
}

int cmd_restrict(const Options& o, std::ostream& out) {
    auto x = alt::parse_alt(o.expr);
    auto t = detect::parse_target(o.target);
    auto r = detect::restrict_class(x, t);
    json j = envelope("restrict");
    j.update({{"expr", x.str()}, {"target", t.str()}, {"determined", r.determined}, {"reason", r.reason}, {"result", r.determined ? json(r.str()) : json(nullptr)}});
    return emit(o, out, j, r.str());
}

int cmd_detect(const Options& o, std::ostream& out) {
    auto r = detect::detection_report(o.n, o.degree);
    json j = envelope("detect");
    j.update({{"n", r.n}, {"degree", r.d}, {"dim", r.dim}, {"v_rank", r.v_rank}, {"coproduct_rank", r.coproduct_rank}, {"av_rank", r.av_rank},
              {"av_undetermined", r.av_undetermined}, {"combined_rank", r.combined_rank}, {"injective", r.injective}});
    return emit(o, out, j, r.str());
}

int cmd_present(const Options& o, std::ostream& out) {
    auto tie = o.tie == "most" ? present::TieBreak::MostColumns : present::TieBreak::FewestColumns;
    auto r = present::derive_presentation(o.n, o.max_degree, tie);
    json gens = json::array(), rels = json::array();
    for (const auto& g : r.generators)
        gens.push_back({{"degree", g.degree}, {"name", g.name}, {"monomial", g.monomial}, {"charge", g.charge}});
    for (const auto& rel : r.relations)
        rels.push_back({{"degree", rel.degree}, {"relation", r.poly_str(rel.poly)}, {"vanishing_product", rel.vanishing_product}});
    json j = envelope("present");
    j.update({{"n", r.n}, {"max_degree", r.max_degree}, {"complete", r.complete}, {"note", r.note}, {"generators", gens},
              {"relations", rels}, {"poincare", r.poincare}, {"decomposable", r.decomposable}});
    return emit(o, out, j, r.str());
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<int> which = o.criteria;
    if (which.empty())
        for (int k = 1; k <= accept::kCriteria; ++k) which.push_back(k);
    json crit = json::array();
    int passed = 0, hard = 0;
    for (int k : which) {
        auto r = accept::run_criterion(k);
        crit.push_back({{"number", r.number}, {"title", r.title}, {"pass", r.pass}, {"reference_inconsistent", r.source_inconsistent},
                        {"checks", r.checks}, {"failures", r.failures}, {"detail", r.detail}, {"seconds", r.seconds}});
        if (r.pass) ++passed;
        else if (!r.source_inconsistent) ++hard;
        if (!o.json) out << r.line() << std::endl;
    }
    json j = envelope("verify-paper");
    j.update({{"criteria", crit}, {"passed", passed}, {"total", which.size()}, {"hard_failures", hard}});
    std::string summary = std::to_string(passed) + "/" + std::to_string(which.size()) + " criteria pass";
    if (passed + hard < static_cast<int>(which.size()))
        summary += "; " + std::to_string(which.size() - passed - hard) + " fail only on an inconsistent reference value";
    if (o.json) out << j.dump(2) << "\n";
    else out << summary << "\n";
    return hard ? kFixtureFailure : kOk;
}

void error_report(bool as_json, std::ostream& out, std::ostream& err, const std::string& kind, const std::string& msg,
                  std::optional<std::size_t> pos, const std::string& input) {
    if (as_json) {
        json j = envelope("error");
        j["error"] = {{"kind", kind}, {"message", msg}, {"position", pos ? json(*pos) : json(nullptr)}};
        out << j.dump(2) << "\n";
        return;
    }
    err << kind << " error: " << msg << "\n";
    if (pos && !input.empty()) err << "  " << input << "\n  " << std::string(*pos, ' ') << "^\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mod-2 cohomology of symmetric and alternating groups"};
    app.require_subcommand(1);
    Options o;
    auto group = [&](CLI::App* s) { s->add_option("--group", o.group, "A (alternating) or S (symmetric)")->check(CLI::IsMember({"A", "S"})); };
    auto with_json = [&](CLI::App* s) {
        s->add_flag("--json", o.json, "machine-readable output");
        return s;
    };

    auto* coh = with_json(app.add_subcommand("cohomology", "dimension and representatives of one cochain-complex degree"));
    group(coh);
    coh->add_option("--n", o.n, "number of points")->required();
    coh->add_option("--degree", o.degree, "degree")->required();
    coh->add_flag("--reps", o.reps, "list cocycle representatives");

    auto* poi = with_json(app.add_subcommand("poincare", "dimensions in degrees 0..max-degree"));
    group(poi);
    poi->add_option("--n", o.n, "number of points")->required();
    poi->add_option("--max-degree", o.max_degree, "largest degree")->required();

    auto* dif = with_json(app.add_subcommand("diff", "differential of a cochain"));
    dif->add_option("--expr", o.expr, "cochain, e.g. \"[2,0,1]^+\"")->required();

    auto* pro = with_json(app.add_subcommand("product", "cup or transfer product of two alternating classes"));
    pro->add_option("--kind", o.kind, "cup or odot")->check(CLI::IsMember({"cup", "odot"}));
    pro->add_option("--lhs", o.lhs, "left factor")->required();
    pro->add_option("--rhs", o.rhs, "right factor")->required();

    auto* cop = with_json(app.add_subcommand("coproduct", "component of the coproduct of a class or cochain"));
    cop->add_option("--expr", o.expr, "alternating class or cochain")->required();
    cop->add_option("--split", o.split, "i,j points on the left and right")->required();

    auto* ste = with_json(app.add_subcommand("steenrod", "Steenrod square of an alternating class"));
    ste->add_option("--sq", o.sq, "index j of Sq^j")->required();
    ste->add_option("--expr", o.expr, "alternating class")->required();

    auto* res = with_json(app.add_subcommand("restrict", "restriction to a detecting subgroup"));
    res->add_option("--expr", o.expr, "alternating class")->required();
    res->add_option("--target", o.target, "V2, V3+, V3-, AI=p1,...,pk or AV")->required();

    auto* det = with_json(app.add_subcommand("detect", "injectivity report of the detection map"));
    det->add_option("--n", o.n, "number of points")->required();
    det->add_option("--degree", o.degree, "degree")->required();

    auto* pre = with_json(app.add_subcommand("present", "generators and relations of H^*(BA_n)"));
    pre->add_option("--n", o.n, "number of points (even)")->required();
    pre->add_option("--max-degree", o.max_degree, "largest degree")->required();
    pre->add_option("--tie", o.tie, "generator choice: fewest or most columns first")->check(CLI::IsMember({"fewest", "most"}));

    auto* ver = with_json(app.add_subcommand("verify-paper", "run the acceptance fixture set"));
    ver->add_option("--criterion", o.criteria, "run only these criteria (repeatable)")->check(CLI::Range(1, accept::kCriteria));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::string input = !o.expr.empty() ? o.expr : !o.lhs.empty() ? o.lhs : o.split;
    try {
        if (coh->parsed()) return cmd_cohomology(o, out, err);
        if (poi->parsed()) return cmd_poincare(o, out);
        if (dif->parsed()) return cmd_diff(o, out);
        if (pro->parsed()) {
            // report positions against whichever operand failed
            try {
                alt::parse_alt(o.lhs);
            } catch (const ParseError& e) {
                error_report(o.json, out, err, "parse", e.what(), e.position(), o.lhs);
                return kParseError;
            }
            input = o.rhs;
            return cmd_product(o, out);
        }
        if (cop->parsed()) return cmd_coproduct(o, out);
        if (ste->parsed()) return cmd_steenrod(o, out);
        if (res->parsed()) return cmd_restrict(o, out);
        if (det->parsed()) return cmd_detect(o, out);
        if (pre->parsed()) return cmd_present(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
    } catch (const ParseError& e) {
        error_report(o.json, out, err, "parse", e.what(), e.position(), input);
        return kParseError;
    } catch (const ResourceError& e) {
        error_report(o.json, out, err, "resource", e.what(), std::nullopt, "");
        return kResourceCap;
    } catch (const std::exception& e) {
        error_report(o.json, out, err, "usage", e.what(), std::nullopt, "");
        return kUsage;
    }
    return kUsage;
}

}  // namespace altcohom::cli
