#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "gatex/enumerate.hpp"
#include "gatex/graph6.hpp"
#include "gatex/json_io.hpp"
#include "gatex/oracle.hpp"
#include "gatex/solve.hpp"
#include "gatex/twinwidth.hpp"
#include "gatex/twinwidth_verify.hpp"

using nlohmann::json;
using namespace gatex;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_usage = 2;

int env_int(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    return std::atoi(value);
}

struct GraphInput {
    std::string path;    // file path or "-" for stdin
    std::string inline_g6;
    bool batch = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "graph6 file, or - for stdin")->default_val("-");
        cmd->add_option("--g6", inline_g6, "inline graph6 record");
        cmd->add_flag("--batch", batch, "one graph6 record per line, JSON lines out");
    }

    std::string read_all() const {
        if (!inline_g6.empty()) return inline_g6;
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return buf.str();
        }
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        std::istringstream in(read_all());
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) out.push_back(line);
        }
        return out;
    }

    Graph single() const {
        std::string text = read_all();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return graph6_decode(text);
    }
};

// Batch lines are independent; process in parallel, print in input order.
int run_batch(const GraphInput& input, const std::function<json(const Graph&)>& fn) {
    std::vector<std::string> lines = input.lines();
    std::vector<std::string> out(lines.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> parse_error{false};
    unsigned jobs = static_cast<unsigned>(std::max(1, env_int("JOBS", static_cast<int>(
                                                   std::thread::hardware_concurrency()))));
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            try {
                out[i] = fn(graph6_decode(lines[i])).dump();
            } catch (const Graph6Error& e) {
                std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
                parse_error = true;
                out[i] = json{{"error", e.what()}}.dump();
            } catch (const NotGatexError& e) {
                out[i] = json{{"accepted", false},
                              {"witness_kind", "failing_module"},
                              {"failing_module", set_to_vector(e.failing_module())}}
                             .dump();
            } catch (const std::exception& e) {
                out[i] = json{{"error", e.what()}}.dump();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const std::string& line : out) std::cout << line << "\n";
    return parse_error ? exit_usage : exit_ok;
}

json recognize_json(const Graph& g, const std::string& backend) {
    if (backend == "structural") return verdict_json(recognize_gatex_structural(g));
    if (backend == "forbidden") return verdict_json(recognize_gatex_forbidden(g));
    GatexVerdict structural = recognize_gatex_structural(g);
    GatexVerdict forbidden = recognize_gatex_forbidden(g);
    if (structural.accepted != forbidden.accepted)
        throw std::logic_error("recognizer backends disagree");
    return {{"accepted", structural.accepted},
            {"structural", verdict_json(structural)},
            {"forbidden", verdict_json(forbidden)}};
}

json solve_json(const Graph& g, bool clique, bool chromatic, bool independence, bool orient) {
    json out;
    if (clique) {
        CliqueResult r = clique_number(g);
        out["omega"] = r.size;
        out["clique"] = r.witness;
    }
    if (independence) {
        IndependentSetResult r = independence_number(g);
        out["alpha"] = r.size;
        out["independent_set"] = r.witness;
    }
    if (chromatic) {
        ColoringResult r = chromatic_number(g);
        out["chi"] = r.colors;
        json coloring = json::object();
        for (int v = 0; v < g.order(); ++v) coloring[std::to_string(v)] = r.color[v];
        out["coloring"] = coloring;
    }
    if (orient) {
        Orientation r = transitive_orientation(g);
        json arcs = json::array();
        for (auto [u, v] : r.arcs) arcs.push_back({u, v});
        out["orientation"] = arcs;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"galled-tree explainable graphs: recognition, explanation, optimization"};
    app.require_subcommand(1);

    // recognize
    auto* recognize = app.add_subcommand("recognize", "dual-backend membership test");
    GraphInput rec_in;
    rec_in.attach(recognize);
    std::string backend = "both";
    recognize->add_option("--backend", backend, "structural | forbidden | both")
        ->check(CLI::IsMember({"structural", "forbidden", "both"}));

    // mdt
    auto* mdt_cmd = app.add_subcommand("mdt", "modular decomposition tree");
    GraphInput mdt_in;
    mdt_in.attach(mdt_cmd);
    std::string mdt_format = "json";
    mdt_cmd->add_option("--format", mdt_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // explain
    auto* explain_cmd = app.add_subcommand("explain", "pvr-network explaining the graph");
    GraphInput explain_in;
    explain_in.attach(explain_cmd);
    std::string explain_format = "json";
    explain_cmd->add_option("--format", explain_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "clique / coloring / independent set");
    GraphInput solve_in;
    solve_in.attach(solve_cmd);
    bool want_clique = false, want_chromatic = false, want_independence = false, want_all = false;
    solve_cmd->add_flag("--clique", want_clique);
    solve_cmd->add_flag("--chromatic", want_chromatic);
    solve_cmd->add_flag("--independence", want_independence);
    solve_cmd->add_flag("--all", want_all);

    // orient
    auto* orient_cmd = app.add_subcommand("orient", "transitive orientation");
    GraphInput orient_in;
    orient_in.attach(orient_cmd);

    // tww
    auto* tww_cmd = app.add_subcommand("tww", "twin-width contraction sequences");
    GraphInput tww_in;
    tww_in.attach(tww_cmd);
    bool tww_build = false;
    std::string verify_path;
    int tww_d = 1;
    tww_cmd->add_flag("--build", tww_build, "build a width-<=1 sequence");
    tww_cmd->add_option("--verify", verify_path, "replay a sequence JSON file");
    tww_cmd->add_option("--d", tww_d, "width bound for --verify");

    // mine
    auto* mine_cmd = app.add_subcommand("mine", "regenerate the forbidden catalog");
    int mine_min = 5, mine_max = 8, mine_jobs = 0;
    std::string mine_input, mine_g6_out;
    mine_cmd->add_option("--min", mine_min);
    mine_cmd->add_option("--max", mine_max);
    mine_cmd->add_option("--jobs", mine_jobs, "worker threads (default: JOBS env or all cores)");
    mine_cmd->add_option("--input", mine_input, "graph6 corpus file instead of the enumerator");
    mine_cmd->add_option("--g6-out", mine_g6_out, "also write members as graph6 lines");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "seeded random instances");
    bool gen_galled = false;
    int gen_n = 10;
    long long gen_seed = -1;
    std::string gen_format = "json";
    gen_cmd->add_flag("--galled-tree", gen_galled, "random labeled galled-tree");
    gen_cmd->add_option("-n", gen_n, "leaf count");
    gen_cmd->add_option("--seed", gen_seed, "default: SEED_DEFAULT env or 0");
    gen_cmd->add_option("--format", gen_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? exit_usage : exit_usage;
    }

    try {
        if (*recognize) {
            auto fn = [&](const Graph& g) { return recognize_json(g, backend); };
            if (rec_in.batch) return run_batch(rec_in, fn);
            json verdict = fn(rec_in.single());
            std::cout << verdict.dump(2) << "\n";
            return verdict["accepted"].get<bool>() ? exit_ok : exit_reject;
        }
        if (*mdt_cmd) {
            if (mdt_in.batch)
                return run_batch(mdt_in, [&](const Graph& g) { return mdt_json(build_mdt(g)); });
            ModularDecomposition mdt = build_mdt(mdt_in.single());
            std::cout << (mdt_format == "dot" ? mdt_dot(mdt) : mdt_json(mdt).dump(2) + "\n");
            return exit_ok;
        }
        if (*explain_cmd) {
            if (explain_in.batch)
                return run_batch(explain_in,
                                 [&](const Graph& g) { return network_json(build_pvr(g)); });
            LabeledNetwork nt = build_pvr(explain_in.single());
            std::cout << (explain_format == "dot" ? network_dot(nt)
                                                  : network_json(nt).dump(2) + "\n");
            return exit_ok;
        }
        if (*solve_cmd) {
            if (want_all) want_clique = want_chromatic = want_independence = true;
            bool orient = want_all;
            if (!want_clique && !want_chromatic && !want_independence)
                want_clique = want_chromatic = want_independence = true;
            auto fn = [&](const Graph& g) {
                return solve_json(g, want_clique, want_chromatic, want_independence, orient);
            };
            if (solve_in.batch) return run_batch(solve_in, fn);
            std::cout << fn(solve_in.single()).dump(2) << "\n";
            return exit_ok;
        }
        if (*orient_cmd) {
            auto fn = [&](const Graph& g) { return solve_json(g, false, false, false, true); };
            if (orient_in.batch) return run_batch(orient_in, fn);
            std::cout << fn(orient_in.single()).dump(2) << "\n";
            return exit_ok;
        }
        if (*tww_cmd) {
            if (!verify_path.empty()) {
                Graph g = tww_in.single();
                std::ifstream in(verify_path);
                if (!in) throw std::runtime_error("cannot open sequence file: " + verify_path);
                json j;
                in >> j;
                ReplayReport report = verify_sequence(g, sequence_from_json(j), tww_d);
                std::cout << replay_json(report, tww_d).dump(2) << "\n";
                return report.ok ? exit_ok : exit_reject;
            }
            auto fn = [&](const Graph& g) {
                return sequence_json(build_one_contraction_sequence(g));
            };
            if (tww_in.batch) return run_batch(tww_in, fn);
            std::cout << fn(tww_in.single()).dump(2) << "\n";
            return exit_ok;
        }
        if (*mine_cmd) {
            if (mine_jobs == 0) mine_jobs = env_int("JOBS", 0);
            ForbiddenCatalog catalog;
            if (mine_input.empty()) {
                catalog = mine_forbidden(mine_min, mine_max, mine_jobs);
            } else {
                std::ifstream in(mine_input);
                if (!in) throw std::runtime_error("cannot open corpus file: " + mine_input);
                std::vector<Graph> corpus;
                std::string line;
                while (std::getline(in, line)) {
                    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                        line.pop_back();
                    if (!line.empty()) corpus.push_back(graph6_decode(line));
                }
                catalog = mine_forbidden_from(corpus, mine_min, mine_max, mine_jobs);
            }
            if (!mine_g6_out.empty()) {
                std::ofstream out(mine_g6_out);
                for (const auto& m : catalog.members) out << graph6_encode(m.graph) << "\n";
            }
            std::cout << catalog_json(catalog).dump(2) << "\n";
            return exit_ok;
        }
        if (*gen_cmd) {
            if (!gen_galled) throw CLI::ValidationError("gen", "pass --galled-tree");
            std::uint64_t seed = gen_seed >= 0 ? static_cast<std::uint64_t>(gen_seed)
                                               : static_cast<std::uint64_t>(env_int("SEED_DEFAULT", 0));
            LabeledNetwork nt = random_galled_tree(gen_n, seed);
            if (gen_format == "dot") {
                std::cout << network_dot(nt);
                return exit_ok;
            }
            json out = {{"seed", seed}, {"leaves", gen_n}, {"network", network_json(nt)}};
            if (gen_n <= 62) out["graph6"] = graph6_encode(explain(nt.net, nt.labels));
            std::cout << out.dump(2) << "\n";
            return exit_ok;
        }
    } catch (const Graph6Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const NotGatexError& e) {
        json out = {{"accepted", false},
                    {"witness_kind", "failing_module"},
                    {"failing_module", set_to_vector(e.failing_module())}};
        std::cout << out.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return exit_reject;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
