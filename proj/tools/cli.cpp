#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tpk/canonical.hpp"
#include "tpk/constructions.hpp"
#include "tpk/errors.hpp"
#include "tpk/exact_turan.hpp"
#include "tpk/generators.hpp"
#include "tpk/graph6.hpp"
#include "tpk/proof_lab.hpp"
#include "tpk/subiso.hpp"

namespace tpk::cli {

namespace {

using nlohmann::ordered_json;

uint64_t default_budget(uint64_t fallback) {
    if (const char* env = std::getenv("TPK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("TPK_BUDGET must be a positive integer");
    }
    return fallback;
}

// Pattern mini-language: kN, cN, pN, tpN, f, else a graph file path.
Graph parse_pattern(const std::string& spec) {
    auto num = [&](size_t off) -> long {
        char* end = nullptr;
        long v = std::strtol(spec.c_str() + off, &end, 10);
        if (!end || *end != '\0' || v < 1) return -1;
        return v;
    };
    if (spec == "f") return graph_f();
    if (spec.size() >= 2 && spec[0] == 't' && spec[1] == 'p') {
        long k = num(2);
        if (k > 0) return triangular_pyramid((uint32_t)k).graph;
    } else if (spec.size() >= 2 && (spec[0] == 'k' || spec[0] == 'c' || spec[0] == 'p')) {
        long v = num(1);
        if (v > 0) {
            if (spec[0] == 'k') return complete_graph((uint32_t)v);
            if (spec[0] == 'c') return cycle_graph((uint32_t)v);
            return path_graph((uint32_t)v);
        }
    }
    return load_graph_file(spec);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& format) {
    if (format == "g6") {
        write_text_file(path, encode_graph6(g) + "\n");
    } else if (format == "edges") {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        write_edge_list(out, g);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
}

ordered_json vertex_set_json(const VertexSet& s) {
    ordered_json a = ordered_json::array();
    s.for_each([&](uint32_t v) { a.push_back(v); });
    return a;
}

ordered_json embedding_json(const Embedding& e) {
    ordered_json m = ordered_json::object();
    for (uint32_t p = 0; p < e.map.size(); ++p) m[std::to_string(p)] = e.map[p];
    return m;
}

ordered_json girth_json(uint32_t g) {
    if (g == kInfiniteGirth) return nullptr;
    return g;
}

ordered_json certificate_json(const PyramidFreeCertificate& c) {
    ordered_json j;
    j["method"] = to_string(c.method);
    j["g_host"] = girth_json(c.g_host);
    j["g_max"] = c.g_max;
    j["checked_patterns"] = c.checked_patterns;
    j["verdict"] = to_string(c.verdict);
    j["refutation"] = c.refutation ? embedding_json(*c.refutation) : ordered_json(nullptr);
    return j;
}

ordered_json manifest_json(const ConstructionManifest& m) {
    ordered_json j;
    j["n"] = m.n;
    j["a"] = m.a;
    j["b"] = m.b;
    if (const auto* alg = std::get_if<AlgebraicStrategy>(&m.planted_strategy)) {
        j["planted"] = {{"strategy", "algebraic"}, {"q", alg->q}};
    } else {
        const auto& gr = std::get<GreedyStrategy>(m.planted_strategy);
        j["planted"] = {{"strategy", "greedy"}, {"gmin", gr.gmin}, {"seed", gr.seed}};
    }
    j["planted_g6"] = m.planted_g6;
    j["total_edges"] = m.total_edges;
    j["excess"] = m.excess;
    j["certificate"] = m.certificate ? certificate_json(*m.certificate) : ordered_json(nullptr);
    return j;
}

int cmd_gen(const std::string& family, uint32_t k, uint32_t n, uint32_t parts, uint32_t a,
            uint32_t b, uint32_t q, uint32_t gmin, uint64_t seed, const std::string& format,
            const std::string& out, const std::string& layout_path) {
    Graph g;
    if (family == "tp") {
        PyramidLayout lay = triangular_pyramid(k);
        g = lay.graph;
        if (!layout_path.empty()) {
            ordered_json j = ordered_json::object();
            for (uint32_t v = 0; v < g.order(); ++v)
                j[std::to_string(v)] = {lay.layer_of[v], lay.pos_of[v]};
            write_text_file(layout_path, j.dump(2) + "\n");
        }
    } else if (family == "f") {
        g = graph_f();
    } else if (family == "turan") {
        g = turan_graph(n, parts);
    } else if (family == "kab") {
        g = complete_bipartite(a, b).graph;
    } else if (family == "hgb") {
        g = high_girth_bipartite(q).graph;
    } else if (family == "greedy") {
        g = greedy_high_girth(n, gmin, seed);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    write_graph_file(out, g, format);
    return 0;
}

int cmd_free_check(const std::string& pattern_spec, const std::string& host_path,
                   uint64_t budget, const std::string& witness_path) {
    Graph pattern = parse_pattern(pattern_spec);
    Graph host = load_graph_file(host_path);
    FreeResult r = is_free(host, pattern, budget);
    if (r.verdict == Freeness::Free) {
        std::cout << "free\n";
        return 0;
    }
    if (r.verdict == Freeness::Inconclusive) {
        std::cout << "inconclusive (budget exhausted after " << r.nodes << " nodes)\n";
        return kExitInconclusive;
    }
    ordered_json j;
    j["pattern"] = pattern_spec;
    j["host"] = host_path;
    j["map"] = embedding_json(r.witness);
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!witness_path.empty()) write_text_file(witness_path, text);
    return kExitFound;
}

int cmd_ex_exact(uint32_t n, const std::string& pattern_spec, uint64_t budget, uint32_t max_n,
                 const std::string& out) {
    Graph pattern = parse_pattern(pattern_spec);
    TuranRecord r = exact_ex(n, pattern, budget, max_n);
    ordered_json j;
    j["n"] = r.n;
    j["pattern_code"] = r.pattern_code;
    j["value"] = r.value;
    j["status"] = r.status == RecordStatus::Exact ? "EXACT" : "BUDGET_EXCEEDED";
    j["witnesses"] = r.witnesses;
    j["nodes_explored"] = r.nodes_explored;
    std::string text = j.dump(2) + "\n";
    if (!out.empty()) write_text_file(out, text);
    std::cout << text;
    return r.status == RecordStatus::Exact ? 0 : kExitInconclusive;
}

int cmd_analyze(const std::string& in, double epsilon, uint64_t seed, uint64_t budget,
                const std::string& out, const std::string& peel_csv) {
    Graph g = load_graph_file(in);
    StructureReport rep = structure_report(g, epsilon, std::nullopt, seed, budget);
    ordered_json j;
    j["epsilon"] = rep.epsilon;
    j["lambda"] = rep.lambda;
    j["partition_method"] = rep.partition_method;
    j["seed"] = rep.seed;
    j["x1"] = vertex_set_json(rep.x1);
    j["x2"] = vertex_set_json(rep.x2);
    j["r1"] = vertex_set_json(rep.r1);
    j["r2"] = vertex_set_json(rep.r2);
    j["w1"] = vertex_set_json(rep.w1);
    j["w2"] = vertex_set_json(rep.w2);
    j["cross_edges"] = rep.cross_edges;
    j["internal_edges"] = {rep.internal_edges_1, rep.internal_edges_2};
    j["eps_bound"] = rep.eps_bound;
    j["eps_ok"] = rep.eps_ok;
    j["claim1"] = {{"ok", rep.claim1_ok}, {"bound", rep.claim1_bound},
                   {"sizes", {rep.x1.size(), rep.x2.size()}}};
    j["claim2"] = {{"ok", rep.claim2_ok}, {"bound", rep.claim2_bound},
                   {"r_size", rep.r_size}, {"r_ratio", rep.r_ratio}};
    j["claim3"] = {{"ok", rep.claim3_ok},
                   {"bound", rep.claim3_bound},
                   {"min_cross_degree_w", {rep.min_cross_degree_w1, rep.min_cross_degree_w2}},
                   {"violator", rep.claim3_violator ? ordered_json(*rep.claim3_violator)
                                                    : ordered_json(nullptr)}};
    j["claim4"] = {{"ok", rep.claim4_ok},
                   {"conclusive", rep.claim4_conclusive},
                   {"side", rep.claim4_side},
                   {"witness", rep.claim4_witness ? embedding_json(*rep.claim4_witness)
                                                  : ordered_json(nullptr)}};
    std::string text = j.dump(2) + "\n";
    if (!out.empty()) write_text_file(out, text);
    std::cout << text;
    if (!peel_csv.empty()) {
        PeelTrace tr = turan_peel(g);
        std::string csv = "step,vertex,degree,threshold\n";
        for (size_t i = 0; i < tr.removed.size(); ++i)
            csv += std::to_string(i) + "," + std::to_string(tr.removed[i].vertex) + "," +
                   std::to_string(tr.removed[i].degree) + "," +
                   std::to_string(tr.removed[i].threshold) + "\n";
        write_text_file(peel_csv, csv);
    }
    return 0;
}

Strategy parse_strategy(const std::string& s) {
    if (s.rfind("algebraic:", 0) == 0) {
        long q = std::strtol(s.c_str() + 10, nullptr, 10);
        if (q < 2) throw std::invalid_argument("bad algebraic strategy: " + s);
        return AlgebraicStrategy{(uint32_t)q};
    }
    if (s.rfind("greedy:", 0) == 0) {
        size_t colon = s.find(':', 7);
        if (colon == std::string::npos)
            throw std::invalid_argument("greedy strategy needs gmin and seed: " + s);
        long gmin = std::strtol(s.substr(7, colon - 7).c_str(), nullptr, 10);
        unsigned long long seed = std::strtoull(s.c_str() + colon + 1, nullptr, 10);
        if (gmin < 8) throw std::invalid_argument("greedy strategy needs gmin >= 8");
        return GreedyStrategy{(uint32_t)gmin, seed};
    }
    throw std::invalid_argument("strategy must be algebraic:q or greedy:gmin:seed, got " + s);
}

int cmd_construct(uint32_t n, const std::string& strategy, uint64_t budget,
                  const std::string& out, const std::string& manifest_path) {
    auto [host, manifest] = lower_bound_graph(n, parse_strategy(strategy), budget);
    write_text_file(out, encode_graph6(host) + "\n");
    write_text_file(manifest_path, manifest_json(manifest).dump(2) + "\n");
    const auto& cert = *manifest.certificate;
    std::cout << "n=" << manifest.n << " total_edges=" << manifest.total_edges
              << " excess=" << manifest.excess << " certificate=" << to_string(cert.verdict)
              << "\n";
    return cert.verdict == CertVerdict::Certified ? 0 : kExitInconclusive;
}

int cmd_certify(const std::string& manifest_path, uint64_t budget, const std::string& out) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw parse_error(std::string("manifest is not valid JSON: ") + e.what(), 0);
    }
    uint32_t n = j.at("n"), a = j.at("a"), b = j.at("b");
    Graph planted = decode_graph6(j.at("planted_g6").get<std::string>());
    uint64_t total = j.at("total_edges"), excess = j.at("excess");
    if (total != (uint64_t)a * b + planted.edge_count())
        throw parse_error("manifest arithmetic broken: total_edges != a*b + e(planted)", 0);
    if (excess != total - h(n))
        throw parse_error("manifest arithmetic broken: excess != total_edges - h(n)", 0);
    PyramidFreeCertificate cert = pyramid_free_certificate({a, b, planted}, budget);
    j["certificate"] = certificate_json(cert);
    std::string text = j.dump(2) + "\n";
    if (!out.empty()) write_text_file(out, text);
    std::cout << "verdict=" << to_string(cert.verdict) << " method=" << to_string(cert.method)
              << " checked=" << cert.checked_patterns << "\n";
    switch (cert.verdict) {
        case CertVerdict::Certified: return 0;
        case CertVerdict::Refuted: return kExitFound;
        default: return kExitInconclusive;
    }
}

int cmd_verify_paper() {
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;
    auto add = [&](const std::string& name, bool ok) { checks.push_back({name, ok}); };

    // exact Turan values for the triangle, unique extremal witness
    {
        bool ok = true;
        for (uint32_t n = 3; n <= 8 && ok; ++n) {
            TuranRecord r = exact_ex(n, complete_graph(3));
            ok = r.status == RecordStatus::Exact && r.value == h(n) &&
                 r.witnesses.size() == 1 && r.witnesses[0] == canonical_code(turan_graph(n, 2));
        }
        add("triangle extremal values n=3..8", ok);
    }
    add("single-layer pyramid is the triangle",
        canonical_code(triangular_pyramid(1).graph) == canonical_code(complete_graph(3)));
    {
        const Graph tp2 = triangular_pyramid(2).graph;
        const Graph tp4 = triangular_pyramid(4).graph;
        add("pyramid sizes (2 and 4 layers)", tp2.order() == 6 && tp2.edge_count() == 9 &&
                                                  tp4.order() == 15 && tp4.edge_count() == 30);
    }
    {
        const Graph f = graph_f();
        add("chorded-path gadget: 10 vertices, 10 edges, girth 6",
            f.order() == 10 && f.edge_count() == 10 && girth(f) == 6);
        add("6-cycle embeds in the gadget",
            find_embedding(cycle_graph(6), f).status == FindStatus::Found);
    }
    {
        Tp4Witness w = embed_tp4_constructive(10, 10);
        bool ok = (bool)verify_embedding(triangular_pyramid(4).graph, w.host, w.embedding);
        ok = ok && find_embedding(triangular_pyramid(4).graph, w.host).status ==
                       FindStatus::Found;
        add("constructive pyramid witness in K_{10,10}+gadget", ok);
    }
    {
        Tp4Coloring col = tp4_coloring();
        const Graph tp4 = triangular_pyramid(4).graph;
        VertexSet u = col.v1;
        u |= col.v2;
        bool indep = true;
        col.v3.for_each([&](uint32_t v) {
            if (col.v3.intersects(tp4.row(v))) indep = false;
        });
        add("3-coloring splits into gadget + independent 5-set",
            u.size() == 10 && col.v3.size() == 5 && indep &&
                canonical_code(induced_subgraph(tp4, u).graph) == canonical_code(graph_f()));
    }
    {
        bool ok = true;
        for (uint32_t q : {2u, 3u}) {
            Bipartite hg = high_girth_bipartite(q);
            ok = ok && girth(hg.graph) >= 8 &&
                 hg.graph.edge_count() == (uint64_t)q * q * q * q &&
                 is_free(hg.graph, cycle_graph(6)).verdict == Freeness::Free;
        }
        add("algebraic bipartite girth gate (q=2,3)", ok);
    }
    {
        bool ok = true;
        uint32_t accepted = 0;
        for (uint64_t seed = 0; accepted < 25 && seed < 500; ++seed) {
            uint32_t n = 20 + (uint32_t)(seed % 21);
            Graph g = gnp_random_graph(n, 0.62, seed);
            if (g.edge_count() < h(n)) continue;
            ++accepted;
            PeelTrace tr = turan_peel(g);
            ok = ok && tr.final_edges >= h(tr.final_size) + n - tr.final_size;
            ok = ok && (tr.final_size == 0 ||
                        tr.final_graph.min_degree() >= tr.final_size / 2);
        }
        ok = ok && accepted == 25;
        add("peeling accounting on 25 dense seeded graphs", ok);
    }
    {
        bool ok = true;
        for (uint64_t seed = 0; seed < 25; ++seed) {
            uint32_t n = 10 + (uint32_t)(seed % 50);
            Graph g = gnp_random_graph(n, 0.3 + 0.01 * (seed % 40), seed);
            CutResult cut = local_max_cut(g, seed);
            for (uint32_t v = 0; v < n && ok; ++v) {
                const VertexSet& own = cut.side1.contains(v) ? cut.side1 : cut.side2;
                uint32_t internal = own.intersection_size(g.row(v));
                ok = g.degree(v) - internal >= internal;
            }
        }
        add("locally optimal cut property on 25 seeded graphs", ok);
    }
    {
        bool ok = true;
        for (uint64_t n = 1; n <= 10000; ++n) ok = ok && h(n) - h(n - 1) == n / 2;
        add("bipartite turan edge-count identity to n=10^4", ok);
    }

    size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.ok ? "PASS  " : "FAIL  ") << c.name << "\n";
        all = all && c.ok;
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact small-n Turan numbers, pyramid-freeness certificates, and "
                 "proof-procedure diagnostics for layered pyramid graphs"};
    app.require_subcommand(1);
    uint32_t threads = 1;
    app.add_option("--threads", threads, "worker cap (current build is single-threaded)")
        ->check(CLI::PositiveNumber);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    std::string family, format = "g6", out, layout;
    uint32_t k = 1, n = 1, parts = 2, a = 1, b = 1, q = 3, gmin = 8;
    uint64_t seed = 0;
    gen->add_option("--family", family, "tp | f | turan | kab | hgb | greedy")->required();
    gen->add_option("--k", k, "layer count (tp)");
    gen->add_option("--n", n, "vertex count (turan, greedy)");
    gen->add_option("--parts", parts, "part count (turan)");
    gen->add_option("--a", a, "first part size (kab)");
    gen->add_option("--b", b, "second part size (kab)");
    gen->add_option("--q", q, "prime parameter (hgb)");
    gen->add_option("--gmin", gmin, "girth bound (greedy)");
    gen->add_option("--seed", seed, "random seed (greedy)");
    gen->add_option("--format", format, "g6 | edges");
    gen->add_option("--out", out, "output file")->required();
    gen->add_option("--layout", layout, "layout sidecar JSON (tp only)");

    // free-check
    auto* fc = app.add_subcommand("free-check", "decide pattern-freeness of a host graph");
    std::string fc_pattern, fc_host, fc_witness;
    uint64_t fc_budget = 0;
    fc->add_option("--pattern", fc_pattern, "tpK | f | cK | pK | kK | file")->required();
    fc->add_option("--host", fc_host, "host graph file")->required();
    fc->add_option("--budget", fc_budget, "node-expansion budget");
    fc->add_option("--witness", fc_witness, "also write the witness JSON here");

    // ex-exact
    auto* ex = app.add_subcommand("ex-exact", "exact Turan number with witnesses");
    std::string ex_pattern, ex_out;
    uint32_t ex_n = 0, ex_max_n = kDefaultExactMaxN;
    uint64_t ex_budget = 0;
    ex->add_option("--n", ex_n, "host order")->required();
    ex->add_option("--pattern", ex_pattern, "forbidden pattern")->required();
    ex->add_option("--budget", ex_budget, "search budget");
    ex->add_option("--max-n", ex_max_n, "soft cap on n (hard limit 12)");
    ex->add_option("--out", ex_out, "record JSON file");

    // analyze
    auto* an = app.add_subcommand("analyze", "partition diagnostics and peel trace");
    std::string an_in, an_out, an_csv;
    double an_eps = 0.001;
    uint64_t an_seed = 0, an_budget = 0;
    an->add_option("--in", an_in, "input graph file")->required();
    an->add_option("--epsilon", an_eps, "epsilon parameter (default 0.001)");
    an->add_option("--seed", an_seed, "cut seed");
    an->add_option("--budget", an_budget, "freeness budget");
    an->add_option("--out", an_out, "report JSON file");
    an->add_option("--peel-csv", an_csv, "size-dependent peel trace CSV");

    // construct
    auto* co = app.add_subcommand("construct", "candidate dense pyramid-free construction");
    std::string co_strategy, co_out, co_manifest;
    uint32_t co_n = 0;
    uint64_t co_budget = 0;
    co->add_option("--n", co_n, "total vertex count")->required();
    co->add_option("--strategy", co_strategy, "algebraic:q | greedy:gmin:seed")->required();
    co->add_option("--out", co_out, "graph6 output")->required();
    co->add_option("--manifest", co_manifest, "manifest JSON output")->required();
    co->add_option("--budget", co_budget, "certificate budget");

    // certify
    auto* ce = app.add_subcommand("certify", "re-derive a manifest's certificate");
    std::string ce_manifest, ce_out;
    uint64_t ce_budget = 0;
    ce->add_option("--manifest", ce_manifest, "manifest JSON")->required();
    ce->add_option("--out", ce_out, "updated manifest JSON");
    ce->add_option("--budget", ce_budget, "certificate budget");

    // verify-paper
    app.add_subcommand("verify-paper", "run the proposition suite and print a table");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, k, n, parts, a, b, q, gmin, seed, format, out, layout);
        if (fc->parsed())
            return cmd_free_check(fc_pattern, fc_host,
                                  fc_budget ? fc_budget : default_budget(kDefaultBudget),
                                  fc_witness);
        if (ex->parsed())
            return cmd_ex_exact(ex_n, ex_pattern,
                                ex_budget ? ex_budget : default_budget(kDefaultExactBudget),
                                ex_max_n, ex_out);
        if (an->parsed())
            return cmd_analyze(an_in, an_eps, an_seed,
                               an_budget ? an_budget : default_budget(kDefaultBudget), an_out,
                               an_csv);
        if (co->parsed())
            return cmd_construct(co_n, co_strategy,
                                 co_budget ? co_budget : default_budget(kDefaultBudget), co_out,
                                 co_manifest);
        if (ce->parsed())
            return cmd_certify(ce_manifest,
                               ce_budget ? ce_budget : default_budget(kDefaultBudget), ce_out);
        return cmd_verify_paper();
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitData;
    } catch (const capability_error& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const construction_error& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return kExitFound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace tpk::cli
