#include "pcls/chromatic.hpp"
#include "pcls/corpus.hpp"
#include "pcls/racg.hpp"
#include "pcls/root_theory.hpp"
#include "pcls/trace_monoid.hpp"
#include "pcls/verify.hpp"

#include "json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace pcls;
using pcls::io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitEngineInapplicable = 3;
constexpr int kExitGuard = 4;

struct CommonOpts {
    std::string graph;
    std::string format = "text";
    int cap_vertex = 4;
    int cap_degree = 8;
    int height = 6;
    int length = 8;
    unsigned seed = 0;
};

Truncation region_for(const MarkedGraph& g, const CommonOpts& o) {
    return Truncation::of(g.n(), std::vector<int>(g.n(), o.cap_vertex), o.cap_degree);
}

json coeffs_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const Rational& c : v) a.push_back(rat_str(c));
    return a;
}

std::string classification_name(RootClass c) {
    switch (c) {
        case RootClass::SimpleRoot: return "SimpleRoot";
        case RootClass::DoubledOddRoot: return "DoubledOddRoot";
        case RootClass::GenericRoot: return "GenericRoot";
        case RootClass::NotRoot: return "NotRoot";
    }
    return "?";
}

int run_chromatic(const CommonOpts& o, const std::string& mtext, const std::string& engine,
                  std::optional<int> q) {
    MarkedGraph g = io::load_graph(o.graph);
    ExponentVec m = io::parse_multidegree(g, mtext);

    if (engine == "brute") {
        if (!q) throw InvalidInput("engine \"brute\" needs --q");
        Int count = count_colorings_bruteforce(g, m, *q);
        if (o.format == "json") {
            json j{{"m", io::multidegree_json(g, m)},
                   {"engine", engine},
                   {"q", *q},
                   {"count", count.str()}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "colorings with q=" << *q << ": " << count << "\n";
        }
        return kExitOk;
    }

    QPoly p;
    if (engine == "pk") {
        p = marked_chromatic(g, m);
    } else if (engine == "partitions") {
        p = marked_chromatic_via_partitions(g, m);
    } else if (engine == "peo") {
        auto order = find_peo(g, m.support());
        if (!order)
            throw EngineInapplicable("support of m induces a non-chordal subgraph");
        p = marked_chromatic_peo(g, m, *order);
    } else if (engine == "roots") {
        p = chromatic_from_multiplicities(g, m);
    } else {
        throw InvalidInput("unknown engine \"" + engine +
                           "\" (expected pk|partitions|peo|roots|brute)");
    }

    if (o.format == "json") {
        json j{{"m", io::multidegree_json(g, m)},
               {"engine", engine},
               {"binomial", coeffs_json(p.binomial_coeffs())},
               {"monomial", coeffs_json(p.monomial_coeffs())}};
        if (q) j["value"] = rat_str(p.eval(Rational(*q)));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "binomial: " << p.str_binomial() << "\n";
        std::cout << "monomial: " << p.str_monomial() << "\n";
        if (q) std::cout << "value at q=" << *q << ": " << rat_str(p.eval(Rational(*q))) << "\n";
    }
    return kExitOk;
}

int run_mult(const CommonOpts& o, const std::string& mtext) {
    MarkedGraph g = io::load_graph(o.graph);
    ExponentVec m = io::parse_multidegree(g, mtext);
    Int mult = multiplicity(g, m);
    RootVerdict v = root_verdict(g, m);
    json flags{{"support_connected", v.support_connected},
               {"neighbor_sum_ok", v.neighbor_sum_ok},
               {"in_P", v.in_P},
               {"is_star_element", v.is_star_element},
               {"in_K20", v.in_K20},
               {"in_K31", v.in_K31}};
    if (o.format == "json") {
        json j{{"m", io::multidegree_json(g, m)},
               {"multiplicity", mult.str()},
               {"parity", epsilon(g, m) < 0 ? "odd" : "even"},
               {"is_root", v.is_root},
               {"classification", classification_name(v.classification)},
               {"flags", flags}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "multiplicity: " << mult << "\n"
                  << "parity: " << (epsilon(g, m) < 0 ? "odd" : "even") << "\n"
                  << "is_root: " << (v.is_root ? "true" : "false") << "\n"
                  << "classification: " << classification_name(v.classification) << "\n"
                  << "flags: " << flags.dump() << "\n";
    }
    return kExitOk;
}

int run_roots(const CommonOpts& o) {
    MarkedGraph g = io::load_graph(o.graph);
    std::vector<SignedMult> roots = enumerate_roots(g, o.height);
    if (o.format == "json") {
        json arr = json::array();
        for (const SignedMult& r : roots)
            arr.push_back({{"m", io::multidegree_json(g, r.m)},
                           {"mult", r.mult.str()},
                           {"parity", r.odd_parity ? "odd" : "even"}});
        std::cout << json{{"height", o.height}, {"roots", arr}}.dump() << "\n";
    } else {
        const auto& names = g.names();
        for (const SignedMult& r : roots)
            std::cout << r.m.str(&names) << "  mult=" << r.mult
                      << "  parity=" << (r.odd_parity ? "odd" : "even") << "\n";
        std::cout << "total: " << roots.size() << " roots up to height " << o.height << "\n";
    }
    return kExitOk;
}

int run_series(const CommonOpts& o, const std::string& kind, const std::string& Kcsv) {
    MarkedGraph g = io::load_graph(o.graph);
    const auto& names = g.names();

    if (kind == "poincare") {
        std::vector<Rational> p = poincare(g, o.length);
        if (o.format == "json") {
            for (std::size_t i = 0; i < p.size(); ++i)
                std::cout << json{{"t", i}, {"c", rat_str(p[i])}}.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < p.size(); ++i)
                std::cout << "t^" << i << "  " << rat_str(p[i]) << "\n";
        }
        return kExitOk;
    }

    MSeries s;
    if (kind == "indep") {
        s = indep_series(g, region_for(g, o), +1);
    } else if (kind == "indep-alt") {
        s = indep_series(g, region_for(g, o), -1);
    } else if (kind == "mprime") {
        std::optional<std::vector<int>> K;
        if (!Kcsv.empty()) K = io::parse_vertex_list(g, Kcsv);
        s = enumerate_mprime(g, region_for(g, o), K);
    } else if (kind == "hilbert") {
        s = ug_hilbert(g, region_for(g, o));
    } else if (kind == "racg") {
        s = racg_growth_closed(g, Truncation::by_total(g.n(), o.length));
    } else if (kind == "racg-bfs") {
        s = racg_bfs(g, o.length);
    } else {
        throw InvalidInput("unknown series kind \"" + kind +
                           "\" (expected indep|indep-alt|mprime|hilbert|racg|racg-bfs|poincare)");
    }

    for (const auto& [m, c] : s.terms()) {
        if (o.format == "json")
            std::cout << json{{"m", io::multidegree_json(g, m)}, {"c", rat_str(c)}}.dump()
                      << "\n";
        else
            std::cout << m.str(&names) << "  " << rat_str(c) << "\n";
    }
    return kExitOk;
}

int run_verify(const CommonOpts& o, const std::string& Kcsv) {
    std::vector<std::pair<std::string, MarkedGraph>> targets;
    if (o.graph.empty()) {
        for (const CorpusEntry& e : corpus()) targets.emplace_back(e.key, e.graph);
    } else {
        targets.emplace_back(o.graph, io::load_graph(o.graph));
    }

    bool all_ok = true;
    json results = json::array();
    for (const auto& [key, g] : targets) {
        VerifyConfig cfg;
        cfg.vertex_cap = o.cap_vertex;
        cfg.total_cap = o.cap_degree;
        cfg.height = o.height;
        cfg.racg_length = o.length;
        cfg.seed = o.seed;
        if (!Kcsv.empty()) cfg.K = io::parse_vertex_list(g, Kcsv);
        for (const PropertyResult& r : verify_graph(g, cfg)) {
            all_ok = all_ok && r.pass;
            if (o.format == "json") {
                results.push_back({{"graph", key},
                                   {"property", r.name},
                                   {"pass", r.pass},
                                   {"detail", r.detail}});
            } else {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << key << " " << r.name;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
            }
        }
    }
    if (o.format == "json")
        std::cout << json{{"ok", all_ok}, {"results", results}}.dump() << "\n";
    else
        std::cout << (all_ok ? "verification passed" : "verification FAILED") << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with marked graphs: counting polynomials, "
                 "root multiplicities, trace counts, Coxeter growth"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string mtext, engine = "pk", kind = "hilbert", Kcsv;
    std::optional<int> qval;

    auto add_common = [&](CLI::App* c, bool graph_required) {
        auto* opt = c->add_option("--graph", o.graph,
                                  "graph JSON file, or corpus:KEY for a built-in");
        if (graph_required) opt->required();
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_option("--cap-vertex", o.cap_vertex, "per-vertex exponent cap");
        c->add_option("--cap-degree", o.cap_degree, "total degree cap");
        c->add_option("--height", o.height, "height cap for roots");
        c->add_option("--length", o.length, "length cap for group growth");
        c->add_option("--seed", o.seed, "seed for sampled checks");
    };

    auto* chrom = app.add_subcommand("chromatic", "counting polynomial of a multidegree");
    add_common(chrom, true);
    chrom->add_option("--m", mtext, "multidegree as JSON object")->required();
    chrom->add_option("--engine", engine, "pk|partitions|peo|roots|brute");
    chrom->add_option("--q", qval, "evaluate at integer q");

    auto* mult = app.add_subcommand("mult", "root multiplicity and verdict");
    add_common(mult, true);
    mult->add_option("--m", mtext, "multidegree as JSON object")->required();

    auto* roots = app.add_subcommand("roots", "enumerate roots up to a height");
    add_common(roots, true);

    auto* series = app.add_subcommand("series", "print a truncated series");
    add_common(series, true);
    series->add_option("--kind", kind,
                       "indep|indep-alt|mprime|hilbert|racg|racg-bfs|poincare");
    series->add_option("--K", Kcsv, "comma-separated vertex names (mprime restriction)");

    auto* verify = app.add_subcommand("verify", "run the cross-verification suite");
    add_common(verify, false);
    verify->add_option("--K", Kcsv, "restrict inversion checks to this K");

    try {
        app.parse(argc, argv);
        if (chrom->parsed()) return run_chromatic(o, mtext, engine, qval);
        if (mult->parsed()) return run_mult(o, mtext);
        if (roots->parsed()) return run_roots(o);
        if (series->parsed()) return run_series(o, kind, Kcsv);
        if (verify->parsed()) return run_verify(o, Kcsv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    } catch (const pcls::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const pcls::EngineInapplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngineInapplicable;
    } catch (const pcls::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const pcls::InternalCheckFailure& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitInvalidInput;
}
