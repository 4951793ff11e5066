// Command-line surface of the workbench.  Graphs travel as graph6 lines
// (sparse6 accepted on input); structured results are JSON objects with
// "schema": 1.  Output is byte-identical across runs of the same invocation:
// sorted where order is not semantic, and no timestamps unless --timing.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minorham/enumerate.hpp"
#include "minorham/families.hpp"
#include "minorham/serialize.hpp"
#include "minorham/verify.hpp"

using namespace minorham;

namespace {

Graph parse_graph_line(std::string line) {
    const std::string s6 = ">>sparse6<<";
    if (line.rfind(s6, 0) == 0) line = line.substr(s6.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (!line.empty() && line[0] == ':') return from_sparse6(line);
    return from_graph6(line);
}

// All graphs from a file path, or stdin for "-".
std::vector<Graph> read_graphs(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open " + path);
        in = &file;
    }
    std::vector<Graph> out;
    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_graph_line(line));
    }
    if (out.empty()) throw std::runtime_error("no graphs in input");
    return out;
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

const char* yesno(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for K_{2,t} minors, Hamiltonicity, and "
                 "3-connected planar enumeration"};
    app.require_subcommand(1);

    bool json = false, certificate = false, timing = false;

    std::string input = "-";
    int t = 5, root_x = -1, root_y = -1;
    int en_n = 0, workers = 1;
    long fam_k = 0, fam_m = 0, fam_mask = 0, fam_rim = 0, fam_a = 0, fam_b = 0;
    std::string filter = "none", checkpoint_dir, level = "quick";
    std::string family_name, cycle_arg, component_arg;

    auto* props = app.add_subcommand("props", "basic properties per input graph");
    props->add_option("input", input, "graph6/sparse6 file, - for stdin");

    auto* minor = app.add_subcommand("minor", "K_{2,t} minor search");
    minor->add_option("input", input, "graph6/sparse6 file, - for stdin");
    minor->add_option("--t", t, "number of degree-2 branch vertices")->default_val(5);
    minor->add_option("--root-x", root_x, "pin this vertex into R1 (t=2 only)");
    minor->add_option("--root-y", root_y, "pin this vertex into R2 (t=2 only)");

    auto* ham = app.add_subcommand("ham", "Hamilton cycle search");
    ham->add_option("input", input, "graph6/sparse6 file, - for stdin");

    auto* reduce = app.add_subcommand("reduce", "cycle-preserving normalization trace");
    reduce->add_option("input", input, "graph6/sparse6 file, - for stdin");
    reduce->add_option("--cycle", cycle_arg, "comma-separated cycle vertices")->required();
    reduce->add_option("--component", component_arg, "kept off-cycle component")->required();

    auto* family = app.add_subcommand("family", "emit a named graph as graph6");
    family->add_option("name", family_name, "herschel | goldner-harary | gk | prism-chords | "
                                            "petersen | wheel | complete-bipartite")
        ->required();
    family->add_option("--k", fam_k, "gk: path length");
    family->add_option("--m", fam_m, "prism-chords: cycle length");
    family->add_option("--mask", fam_mask, "prism-chords: diagonal bitmask");
    family->add_option("--rim", fam_rim, "wheel: rim length");
    family->add_option("--a", fam_a, "complete-bipartite: first part");
    family->add_option("--b", fam_b, "complete-bipartite: second part");

    auto* enumerate = app.add_subcommand("enumerate", "3-connected planar classes at order n");
    enumerate->add_option("--n", en_n, "vertex count")->required();
    enumerate->add_option("--filter", filter, "none | k25-free | k26-free")
        ->check(CLI::IsMember({"none", "k25-free", "k26-free"}));
    bool count_only = false;
    enumerate->add_flag("--count-only", count_only, "print counts instead of graphs");
    enumerate->add_option("--checkpoint-dir", checkpoint_dir,
                          "write periodic resume checkpoints here");
    enumerate->add_option("--workers", workers, "worker threads")->default_val(1);

    auto* verify = app.add_subcommand("verify-paper", "replay all acceptance claims");
    verify->add_option("--level", level, "quick | full | extended")
        ->check(CLI::IsMember({"quick", "full", "extended"}));
    verify->add_option("--workers", workers, "worker threads")->default_val(1);

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->add_flag("--json", json, "structured JSON output");
        sub->add_flag("--certificate", certificate, "emit checkable witnesses");
        sub->add_flag("--timing", timing, "include elapsed seconds (non-reproducible)");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*props) {
            for (const Graph& g : read_graphs(input)) {
                bool planar = is_planar(g);
                int conn = vertex_connectivity(g);
                bool hamiltonian = g.n >= 3 && is_hamiltonian(g);
                if (json) {
                    print_json({{"schema", 1},
                                {"n", g.n},
                                {"edges", g.edge_count()},
                                {"planar", planar},
                                {"connectivity", conn},
                                {"hamiltonian", hamiltonian}});
                } else {
                    std::cout << "n=" << g.n << " edges=" << g.edge_count()
                              << " planar=" << yesno(planar) << " connectivity=" << conn
                              << " hamiltonian=" << yesno(hamiltonian) << "\n";
                }
            }
        } else if (*minor) {
            for (const Graph& g : read_graphs(input)) {
                nlohmann::json cert;
                bool present;
                if (root_x >= 0 || root_y >= 0) {
                    if (t != 2)
                        throw std::runtime_error("rooted search requires --t 2");
                    auto m = find_rooted_k22(g, root_x, root_y);
                    present = m.has_value();
                    if (m) cert = model_to_json({m->r1, m->r2, m->s}, 2);
                } else {
                    auto m = find_k2t_model(g, t);
                    present = m.has_value();
                    if (m) cert = model_to_json(*m, t);
                }
                if (json) {
                    nlohmann::json j = {{"schema", 1}, {"t", t}, {"present", present}};
                    if (certificate && present) j["model"] = cert;
                    print_json(j);
                } else {
                    std::cout << (present ? "present" : "absent") << "\n";
                    if (certificate && present) print_json(cert);
                }
            }
        } else if (*ham) {
            for (const Graph& g : read_graphs(input)) {
                auto res = hamilton_cycle(g);
                bool found = std::holds_alternative<Cycle>(res);
                nlohmann::json j = {{"schema", 1}, {"hamiltonian", found}};
                if (certificate) {
                    if (found) {
                        j["certificate"] = certificate_to_json(std::get<Cycle>(res));
                    } else {
                        j["certificate"] = certificate_to_json(std::get<ExhaustionProof>(res));
                        if (auto tc = find_tough_cut(g, std::min(g.n - 2, 5)))
                            j["tough_cut"] = certificate_to_json(*tc);
                    }
                }
                if (json) {
                    print_json(j);
                } else {
                    std::cout << (found ? "hamiltonian" : "non-hamiltonian") << "\n";
                    if (certificate) print_json(j);
                }
            }
        } else if (*reduce) {
            for (const Graph& g : read_graphs(input)) {
                ReductionTrace trace = normalize_claim3(g, Cycle{parse_id_list(cycle_arg)},
                                                        {parse_id_list(component_arg)});
                print_json(trace_to_json(trace));
            }
        } else if (*family) {
            FamilySpec spec{family_name, {}};
            if (family_name == "gk") spec.params = {fam_k};
            if (family_name == "prism-chords") spec.params = {fam_m, fam_mask};
            if (family_name == "wheel") spec.params = {fam_rim};
            if (family_name == "complete-bipartite") spec.params = {fam_a, fam_b};
            Graph g = named_graph(spec);
            std::cout << to_graph6(g) << "\n";
            if (json)
                print_json({{"schema", 1},
                            {"name", family_name},
                            {"n", g.n},
                            {"edges", g.edge_count()},
                            {"planar", is_planar(g)},
                            {"connectivity", vertex_connectivity(g)},
                            {"hamiltonian", g.n >= 3 && is_hamiltonian(g)}});
        } else if (*enumerate) {
            if (const char* env = std::getenv("MINORHAM_CHECKPOINT_DIR")) checkpoint_dir = env;
            if (count_only && filter == "k25-free") {
                CountReport rep = count_k25_free(en_n, workers);
                print_json(report_to_json(rep, timing));
            } else {
                std::uint64_t total = 0, kept = 0;
                for (const std::string& code :
                     generate_3c_planar_codes(en_n, workers, checkpoint_dir)) {
                    ++total;
                    if (filter != "none" &&
                        find_k2t_model(from_graph6(code), filter == "k25-free" ? 5 : 6))
                        continue;
                    ++kept;
                    if (!count_only) std::cout << code << "\n";
                }
                if (count_only)
                    print_json({{"schema", 1},
                                {"n", en_n},
                                {"filter", filter},
                                {"total_3c_planar", total},
                                {"kept", kept}});
            }
        } else if (*verify) {
            VerificationMatrix mx = verify_paper(verify_level_from_string(level), workers);
            if (json) {
                print_json(matrix_to_json(mx));
            } else {
                for (const VerificationItem& it : mx.items) {
                    std::cout << it.id << ": " << it.status << " - " << it.details << "\n";
                    for (const std::string& ce : it.counterexamples)
                        std::cout << "  counterexample: " << ce
                                  << "  (reproduce: minorham props then ham on this graph6)\n";
                }
            }
            return mx.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
