// primegraph: query character-degree sets of group families, build their
// prime/degree graphs, run the theorem verification scans, and classify
// user-supplied graphs.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primegraph/graphcore.hpp"
#include "primegraph/groupdata.hpp"
#include "primegraph/numtheory.hpp"
#include "primegraph/verify.hpp"

namespace nt = pg::numtheory;
namespace gd = pg::groupdata;
namespace gc = pg::graphcore;
namespace vf = pg::verify;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitDataGap = 3;

gd::GroupDescriptor parse_group_spec(const std::string& spec, const gd::NamedGroupTable& table) {
    if (spec.rfind("product:", 0) == 0) {
        std::string rest = spec.substr(8);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("product spec needs two comma-separated operands");
        return gd::make_product(parse_group_spec(rest.substr(0, comma), table),
                                parse_group_spec(rest.substr(comma + 1), table));
    }
    if (spec.rfind("PSL2:", 0) == 0) {
        return gd::make_psl2(std::stoull(spec.substr(5)));
    }
    table.entry(spec);  // throws with the id list if unknown
    return gd::make_named(spec);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string summarize_group(const gd::GroupDescriptor& desc, const gd::NamedGroupTable& table,
                            bool degree_graph) {
    gd::DegreeSet cd = gd::degrees_of(desc, table);
    gc::PrimeGraph delta = gc::build_prime_graph(cd);
    std::ostringstream out;
    out << "group: " << gd::describe(desc) << "\n";
    out << "cd = {";
    for (std::size_t i = 0; i < cd.degrees.size(); ++i)
        out << (i ? "," : "") << cd.degrees[i];
    out << "}\n";
    out << "rho = {";
    const auto& verts = delta.graph.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) out << (i ? "," : "") << verts[i];
    out << "}\n";
    out << "edges:";
    for (const auto& [u, v] : delta.graph.edges()) out << " " << u << "-" << v;
    out << "\ncomponents: " << gc::connected_components(delta).size() << "\n";
    if (auto t = gc::find_triangle(delta))
        out << "triangle: (" << (*t)[0] << "," << (*t)[1] << "," << (*t)[2] << ")\n";
    else
        out << "triangle: none\n";
    if (auto fig = gc::figure_a_match(delta))
        out << "figure-a: " << gc::figure_a_name(*fig) << "\n";
    if (degree_graph) {
        gc::DegreeGraph gamma = gc::build_degree_graph(cd);
        out << "degree-graph edges:";
        for (const auto& [u, v] : gamma.graph.edges()) out << " " << u << "-" << v;
        if (auto t = gc::find_triangle(gamma))
            out << "\ndegree-graph triangle: (" << (*t)[0] << "," << (*t)[1] << "," << (*t)[2]
                << ")\n";
        else
            out << "\ndegree-graph triangle: none\n";
    }
    return out.str();
}

gc::PrimeGraph parse_edge_graph(const std::string& edge_list) {
    std::vector<pg::graphcore::u64> vertices;
    std::vector<std::pair<pg::graphcore::u64, pg::graphcore::u64>> edges;
    std::stringstream ss(edge_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("bad edge token '" + tok + "', expected u-v");
        auto parse_vertex = [&](const std::string& s) {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("bad vertex label '" + s + "'");
            if (!nt::is_prime(v))
                throw std::invalid_argument("vertex label " + s + " is not prime");
            return static_cast<pg::graphcore::u64>(v);
        };
        auto u = parse_vertex(tok.substr(0, dash));
        auto v = parse_vertex(tok.substr(dash + 1));
        vertices.push_back(u);
        vertices.push_back(v);
        edges.emplace_back(u, v);
    }
    return gc::prime_graph_from_edges(vertices, edges);
}

int report_exit_code(const vf::VerificationReport& rep) {
    if (!rep.data_gaps.empty()) return kExitDataGap;
    if (!rep.counterexamples.empty()) return kExitCounterexample;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime graphs of character-degree sets: queries, scans, classification"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global options after a subcommand too

    std::string format = "text";
    std::string output_path;
    bool no_timing = false;
    app.add_option("--format", format, "output format: text | json | dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("-o,--output", output_path, "write output to a file instead of stdout");
    app.add_flag("--no-timing", no_timing, "omit elapsed-time fields (stable output for diffing)");

    auto* cmd_group = app.add_subcommand("group", "show degrees, rho and prime-graph summary");
    std::string group_spec;
    bool degree_graph = false;
    cmd_group->add_option("spec", group_spec, "PSL2:q | named id | product:A,B")->required();
    cmd_group->add_flag("--degree-graph", degree_graph, "also print the degree graph");

    auto* cmd_graph = app.add_subcommand("graph", "emit the prime graph (dot or json)");
    std::string graph_spec;
    cmd_graph->add_option("spec", graph_spec, "PSL2:q | named id | product:A,B")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a theorem verification scan");
    std::string check_id;
    unsigned max_f = 24;
    std::uint64_t max_q = 10000;
    unsigned max_suzuki = 13;
    std::uint64_t max_psl3_q = 100;
    cmd_verify
        ->add_option("check", check_id,
                     "thm-a | thm-b | thm-c | psl2-even | psl2-odd | excluded-families | "
                     "bipartite | palfy:<spec>")
        ->required();
    cmd_verify->add_option("--max-f", max_f, "upper bound for PSL2(2^f) scans");
    cmd_verify->add_option("--max-q", max_q, "upper bound for odd PSL2(q) scans");
    cmd_verify->add_option("--max-suzuki", max_suzuki, "Suzuki exponent bound (q^2 <= 2^e)");
    cmd_verify->add_option("--max-psl3-q", max_psl3_q, "PSL3/PSU3 q bound");

    auto* cmd_classify = app.add_subcommand("classify", "classify a user-supplied prime graph");
    std::string edges_arg, edges_file;
    cmd_classify->add_option("--edges", edges_arg, "edge list, e.g. \"2-3,3-5\"");
    cmd_classify->add_option("--file", edges_file, "file containing an edge list");

    CLI11_PARSE(app, argc, argv);

    try {
        const gd::NamedGroupTable& table = gd::NamedGroupTable::bundled();

        if (*cmd_group) {
            gd::GroupDescriptor desc = parse_group_spec(group_spec, table);
            write_output(summarize_group(desc, table, degree_graph), output_path);
            return kExitOk;
        }

        if (*cmd_graph) {
            gd::GroupDescriptor desc = parse_group_spec(graph_spec, table);
            gc::PrimeGraph g = gc::build_prime_graph(gd::degrees_of(desc, table));
            if (format == "json")
                write_output(gc::to_json(g) + "\n", output_path);
            else
                write_output(gc::to_dot(g), output_path);
            return kExitOk;
        }

        if (*cmd_verify) {
            if (check_id.rfind("palfy:", 0) == 0) {
                gd::GroupDescriptor desc = parse_group_spec(check_id.substr(6), table);
                auto r = vf::check_palfy(gd::degrees_of(desc, table));
                std::ostringstream out;
                out << "palfy(" << gd::describe(desc) << "): "
                    << (r.satisfied ? "satisfied" : "violated");
                if (r.violating_triple)
                    out << " by (" << (*r.violating_triple)[0] << "," << (*r.violating_triple)[1]
                        << "," << (*r.violating_triple)[2] << ")";
                out << "\n";
                write_output(out.str(), output_path);
                return r.satisfied ? kExitOk : kExitCounterexample;
            }
            vf::ScanConfig cfg{max_f, max_q, max_suzuki, max_psl3_q};
            vf::VerificationReport rep;
            if (check_id == "psl2-even")
                rep = vf::scan_psl2_even(max_f);
            else if (check_id == "psl2-odd")
                rep = vf::scan_psl2_odd(max_q);
            else if (check_id == "excluded-families")
                rep = vf::verify_excluded_simple_families(cfg, table);
            else if (check_id == "thm-a")
                rep = vf::verify_theorem_a(cfg, table);
            else if (check_id == "thm-b")
                rep = vf::verify_theorem_b(cfg, table);
            else if (check_id == "thm-c")
                rep = vf::verify_theorem_c(cfg, table);
            else if (check_id == "bipartite")
                rep = vf::verify_bipartite_bound(cfg, table);
            else {
                std::cerr << "unknown check id: " << check_id << "\n";
                return kExitUsage;
            }
            write_output(format == "json" ? vf::report_to_json(rep, !no_timing)
                                          : vf::report_to_text(rep, !no_timing),
                         output_path);
            return report_exit_code(rep);
        }

        if (*cmd_classify) {
            std::string edge_list = edges_arg;
            if (edge_list.empty() && !edges_file.empty()) {
                std::ifstream in(edges_file);
                if (!in) throw std::runtime_error("cannot read " + edges_file);
                std::getline(in, edge_list);
            }
            if (edge_list.empty()) {
                std::cerr << "classify: provide --edges or --file\n";
                return kExitUsage;
            }
            gc::PrimeGraph g = parse_edge_graph(edge_list);
            vf::ClassificationVerdict verdict = vf::classify(g, table);
            std::ostringstream out;
            out << vf::verdict_kind_name(verdict.kind);
            if (verdict.witness) out << " " << gd::describe(*verdict.witness);
            if (!verdict.citation.empty()) out << "\n" << verdict.citation;
            out << "\n";
            write_output(out.str(), output_path);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
