#include "lexcycle/cli.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexcycle/generate.hpp"
#include "lexcycle/graph.hpp"
#include "lexcycle/lexpath.hpp"
#include "lexcycle/lsc.hpp"
#include "lexcycle/mcb.hpp"
#include "lexcycle/structure.hpp"

namespace lexcycle::cli {

namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void write_vertices(std::ostream& out, std::span<const Vertex> vs, const WeightedGraph& g) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? " " : "") << g.label(vs[i]);
}

json labeled(std::span<const Vertex> vs, const WeightedGraph& g) {
    json a = json::array();
    for (Vertex x : vs)
        a.push_back(g.label(x));
    return a;
}

json cycles_json(const WeightedGraph& g, const CycleSet& cycles) {
    json list = json::array();
    for (const Cycle& c : cycles) {
        json edges = json::array();
        for (auto [a, b] : labeled_edge_set(g, c))
            edges.push_back({a, b});
        list.push_back({{"vertices", labeled(c.vertices(), g)}, {"edges", edges}, {"weight", c.weight()}});
    }
    return {{"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"count", cycles.size()},
            {"total_weight", cycles.total_weight()},
            {"cycles", list}};
}

void cycles_text(std::ostream& out, const WeightedGraph& g, const CycleSet& cycles) {
    out << "n " << g.vertex_count() << "\nm " << g.edge_count() << '\n';
    for (const Cycle& c : cycles) {
        out << "cycle ";
        write_vertices(out, c.vertices(), g);
        out << " weight " << c.weight() << '\n';
    }
    out << "count " << cycles.size() << "\ntotal_weight " << cycles.total_weight() << '\n';
}

json report_json(const BasisReport& r) {
    return {{"cardinality_ok", r.cardinality_ok}, {"independent", r.independent}, {"spans", r.spans},
            {"rank", r.rank},                     {"size", r.size},               {"expected_dimension", r.expected_dimension},
            {"total_weight", r.total_weight}};
}

void report_text(std::ostream& out, const BasisReport& r, const std::string& prefix = "") {
    out << prefix << "cardinality_ok " << yes_no(r.cardinality_ok) << " (" << r.size << " of " << r.expected_dimension
        << ")\n"
        << prefix << "independent " << yes_no(r.independent) << " (rank " << r.rank << ")\n"
        << prefix << "spans " << yes_no(r.spans) << '\n'
        << prefix << "total_weight " << r.total_weight << '\n';
}

json graph_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({g.label(e.u), g.label(e.v), e.weight});
    return {{"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"vertices", std::vector<Vertex>(g.labels().begin(), g.labels().end())},
            {"edges", edges},
            {"graph", serialize_graph(g)}};
}

// Vertex labels of a re-indexed graph, as a comment the parser skips.
std::string labels_comment(const WeightedGraph& g) {
    std::string s = "# vertices:";
    for (Vertex l : g.labels())
        s += " " + std::to_string(l);
    return s + "\n";
}

Vertex checked_vertex(const WeightedGraph& g, long long v, const char* flag) {
    if (v < 0 || v >= g.vertex_count())
        throw InputError(std::string(flag) + " " + std::to_string(v) + " is not a vertex of the graph");
    return static_cast<Vertex>(v);
}

struct Options {
    std::string input;
    std::string format = "text";
    std::uint64_t seed = 1;
    bool oracle = false;
    bool horton = false;
    long long source = -1;
    long long target = -1;
    long long u = -1;
    long long v = -1;
    std::string family = "partial2tree";
    int n = 10;
    int delete_count = 0;
    long long max_weight = 100;
    long long rim_weight = 1;
    long long spoke_weight = 100;
};

int cmd_mcb(const Options& o, std::ostream& out) {
    WeightedGraph g = read_graph_file(o.input);
    CycleBasis b = o.horton ? horton_mcb(g) : mcb_partial_2tree(g);
    BasisReport r = verify_cycle_basis(g, b);
    if (o.format == "json") {
        json j = cycles_json(g, b.cycles);
        j["method"] = o.horton ? "horton" : "lex-short-cycles";
        j["report"] = report_json(r);
        out << j.dump() << '\n';
    } else {
        out << "method " << (o.horton ? "horton" : "lex-short-cycles") << '\n';
        cycles_text(out, g, b.cycles);
        report_text(out, r);
    }
    return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_lsc(const Options& o, std::ostream& out) {
    WeightedGraph g = read_graph_file(o.input);
    CycleSet cycles;
    if (o.oracle) {
        LspTable table(g);
        std::vector<Cycle> kept;
        for (const Cycle& c : enumerate_all_simple_cycles(g))
            if (is_lex_short(g, c, table))
                kept.push_back(c);
        cycles = CycleSet(g, std::move(kept));
    } else {
        cycles = enumerate_lex_short_cycles(g);
    }
    if (o.format == "json")
        out << cycles_json(g, cycles).dump() << '\n';
    else
        cycles_text(out, g, cycles);
    return kExitOk;
}

int cmd_lsp(const Options& o, std::ostream& out) {
    WeightedGraph g = read_graph_file(o.input);
    Vertex s = checked_vertex(g, o.source, "--source");
    Vertex t = checked_vertex(g, o.target, "--target");
    Path p = o.oracle ? brute_force_lsp(g, s, t) : lex_shortest_paths_from(g, s)[static_cast<std::size_t>(t)];
    if (o.format == "json") {
        out << json{{"source", s}, {"target", t}, {"vertices", labeled(p.vertices, g)},
                    {"weight", p.weight}, {"length", p.length()}}
                   .dump()
            << '\n';
    } else {
        out << "path ";
        write_vertices(out, p.vertices, g);
        out << "\nweight " << p.weight << "\nlength " << p.length() << '\n';
    }
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    WeightedGraph g = read_graph_file(o.input);
    bool p2t = is_partial_2tree(g);
    std::optional<bool> outer;
    std::optional<std::pair<Vertex, Vertex>> sep;
    if (p2t) {
        outer = is_outerplanar(g);
        sep = find_three_component_separator(g);
    }
    if (o.format == "json") {
        json j{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"simple", true}, {"connected", true},
               {"partial_2tree", p2t}};
        j["outerplanar"] = outer ? json(*outer) : json(nullptr);
        j["separator"] = sep ? json{g.label(sep->first), g.label(sep->second)} : json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << "n " << g.vertex_count() << "\nm " << g.edge_count() << "\nsimple yes\nconnected yes\n"
            << "partial_2tree " << yes_no(p2t) << '\n'
            << "outerplanar " << (outer ? yes_no(*outer) : "n/a") << '\n'
            << "separator ";
        if (sep)
            out << g.label(sep->first) << ' ' << g.label(sep->second) << '\n';
        else
            out << "none\n";
    }
    return kExitOk;
}

int cmd_decomp(const Options& o, std::ostream& out) {
    WeightedGraph g = read_graph_file(o.input);
    Vertex u = checked_vertex(g, o.u, "--u");
    Vertex v = checked_vertex(g, o.v, "--v");
    DecompResult d = decomp(g, u, v);
    if (o.format == "json") {
        out << json{{"separator", {g.label(d.separator.first), g.label(d.separator.second)}},
                    {"sep_path", labeled(d.sep_path.vertices, g)},
                    {"avoided", labeled(d.avoided, g)},
                    {"g1", graph_json(d.g1)},
                    {"g2", graph_json(d.g2)}}
                   .dump()
            << '\n';
    } else {
        out << "# separator " << g.label(d.separator.first) << ' ' << g.label(d.separator.second) << "\n# sep_path";
        for (Vertex x : d.sep_path.vertices)
            out << ' ' << g.label(x);
        out << "\n# avoided";
        for (Vertex x : d.avoided)
            out << ' ' << g.label(x);
        out << "\n# g1\n" << labels_comment(d.g1) << serialize_graph(d.g1);
        out << "# g2\n" << labels_comment(d.g2) << serialize_graph(d.g2);
    }
    return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
    GeneratorSpec spec;
    spec.family = parse_family(o.family);
    spec.n = o.n;
    spec.delete_count = o.delete_count;
    spec.max_weight = o.max_weight;
    spec.rim_weight = o.rim_weight;
    spec.spoke_weight = o.spoke_weight;
    spec.seed = o.seed;
    WeightedGraph g = generate(spec);
    if (o.format == "json") {
        json j = graph_json(g);
        j.erase("vertices");
        out << j.dump() << '\n';
    } else {
        out << "# lexcycle gen family=" << family_name(spec.family) << " n=" << spec.n << " seed=" << spec.seed
            << '\n'
            << serialize_graph(g);
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    WeightedGraph g = read_graph_file(o.input);
    if (!is_partial_2tree(g)) {
        out << "partial_2tree no\n";
        err << "verify: graph is not a partial 2-tree\n";
        return kExitInvalid;
    }
    CycleBasis lsc = mcb_partial_2tree(g);
    CycleBasis horton = horton_mcb(g);
    BasisReport r = verify_cycle_basis(g, lsc);
    bool weight_ok = lsc.total_weight == horton.total_weight;
    bool ok = weight_ok && r.ok();
    if (o.format == "json") {
        out << json{{"partial_2tree", true},
                    {"lsc_weight", lsc.total_weight},
                    {"horton_weight", horton.total_weight},
                    {"weights_match", weight_ok},
                    {"report", report_json(r)},
                    {"ok", ok}}
                   .dump()
            << '\n';
    } else {
        out << "partial_2tree yes\nlsc_weight " << lsc.total_weight << "\nhorton_weight " << horton.total_weight
            << "\nweights_match " << yes_no(weight_ok) << '\n';
        report_text(out, r);
        out << (ok ? "OK\n" : "MISMATCH\n");
    }
    return ok ? kExitOk : kExitMismatch;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum cycle bases of weighted partial 2-trees via lex short cycles", "lexcycle"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", o.input, "graph file");
        if (needs_input)
            in->required()->check(CLI::ExistingFile);
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", o.seed, "random seed");
    };

    auto* mcb = app.add_subcommand("mcb", "minimum cycle basis of a partial 2-tree");
    add_common(mcb, true);
    mcb->add_flag("--horton", o.horton, "use Horton's algorithm (any graph)");

    auto* lsc = app.add_subcommand("lsc", "list the lex short cycles");
    add_common(lsc, true);
    lsc->add_flag("--oracle", o.oracle, "brute-force enumeration of all simple cycles");

    auto* lsp = app.add_subcommand("lsp", "lex shortest path between two vertices");
    add_common(lsp, true);
    lsp->add_option("--source", o.source, "first endpoint")->required();
    lsp->add_option("--target", o.target, "second endpoint")->required();
    lsp->add_flag("--oracle", o.oracle, "exhaustive path enumeration");

    auto* check = app.add_subcommand("check", "structural report");
    add_common(check, true);

    auto* dec = app.add_subcommand("decomp", "split along a three-component separator");
    add_common(dec, true);
    dec->add_option("--u", o.u, "separator vertex")->required();
    dec->add_option("--v", o.v, "separator vertex")->required();

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    add_common(gen, false);
    gen->add_option("--family", o.family, "partial2tree | outerplanar | wheel")
        ->check(CLI::IsMember({"partial2tree", "outerplanar", "wheel"}));
    gen->add_option("--n", o.n, "vertex count");
    gen->add_option("--delete", o.delete_count, "edges to delete (partial2tree)");
    gen->add_option("--max-weight", o.max_weight, "largest edge weight");
    gen->add_option("--rim-weight", o.rim_weight, "rim weight (wheel)");
    gen->add_option("--spoke-weight", o.spoke_weight, "spoke weight (wheel)");

    auto* verify = app.add_subcommand("verify", "compare the lex short cycles with Horton's MCB");
    add_common(verify, true);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(std::move(argv));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitInvalid;
    }

    try {
        if (mcb->parsed())
            return cmd_mcb(o, out);
        if (lsc->parsed())
            return cmd_lsc(o, out);
        if (lsp->parsed())
            return cmd_lsp(o, out);
        if (check->parsed())
            return cmd_check(o, out);
        if (dec->parsed())
            return cmd_decomp(o, out);
        if (gen->parsed())
            return cmd_gen(o, out);
        if (verify->parsed())
            return cmd_verify(o, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InternalError& e) {
        err << "verification failure: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitInvalid;
}

} // namespace lexcycle::cli
