// Command-line front end: analyze / oracle / verify / gen / prune-dump.
// Exit codes: 0 success, 1 validation or usage error, 2 internal invariant
// violation (a correctness finding, not bad input).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pairdom/pairdom.hpp"

namespace {

using namespace pairdom;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    Graph g;
    BlockCutStructure bc;
};

Loaded load_block_graph(const std::string& path) {
    Loaded l;
    l.g = parse_graph(read_file(path));
    l.bc = decompose(l.g);
    require_block_graph(l.g, l.bc);
    return l;
}

int oracle_cap(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PAIRDOM_ORACLE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20;
}

std::string verdict_line(Vertex v, const Verdict& verdict) {
    std::ostringstream out;
    out << "vertex=" << v << " in_all_min_pds=" << (verdict.in_all_min_pds ? "true" : "false")
        << " rule_fired=";
    if (verdict.rule_fired > 0)
        out << verdict.rule_fired;
    else
        out << "none";
    out << " L1=" << verdict.counts.l1 << " L2=" << verdict.counts.l2
        << " L3=" << verdict.counts.l3 << " L6=" << verdict.counts.l6
        << " L8=" << verdict.counts.l8 << " special_case=" << to_string(verdict.special_case);
    return out.str();
}

void dump_order(const RootedOrder& ro) {
    for (Vertex v = 0; v < static_cast<Vertex>(ro.order.size()); ++v)
        std::cout << v << '\t' << ro.pos[v] << '\t' << ro.father[v] << '\t' << ro.depth[v]
                  << '\n';
}

void dump_prune_trace(const PruneState& st) {
    for (const TraceEntry& te : st.trace) {
        std::cout << "step=" << te.step << " branch=" << to_string(te.branch);
        if (te.branch == BranchTag::Annotate) std::cout << ':' << to_string(te.annot);
        std::cout << " removed=[";
        for (std::size_t i = 0; i < te.removed.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << te.removed[i];
        }
        std::cout << "] D=" << te.d << '\n';
    }
}

int cmd_analyze(const std::string& path, std::optional<int> vertex, bool all_vertices,
                bool with_order, bool with_prune) {
    Loaded l = load_block_graph(path);
    std::vector<Vertex> targets;
    if (all_vertices) {
        targets.resize(l.g.n);
        for (Vertex v = 0; v < l.g.n; ++v) targets[v] = v;
    } else if (vertex) {
        if (*vertex < 0 || *vertex >= l.g.n) {
            std::cerr << "vertex " << *vertex << " out of range\n";
            return 1;
        }
        targets.push_back(*vertex);
    } else {
        std::cerr << "analyze needs --vertex or --all-vertices\n";
        return 1;
    }
    for (Vertex r : targets) {
        if ((with_order || with_prune) && l.g.n > 2 && l.bc.block_count() > 1 &&
            l.bc.is_cut[r]) {
            RootedOrder ro = vertex_ordering(l.g, l.bc, r);
            if (with_order) dump_order(ro);
            if (with_prune) {
                auto [pg, st] = prune(l.g, l.bc, ro, r, true);
                dump_prune_trace(st);
            }
        }
        std::cout << verdict_line(r, in_all_min_pds(l.g, l.bc, r)) << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& path, bool list_sets, int cap_flag) {
    Loaded l = load_block_graph(path);
    OracleResult res = solve(l.g, oracle_cap(cap_flag));
    std::cout << "gamma_pr=" << res.gamma_pr << " num_min_sets=" << res.num_min_sets
              << " core=[";
    for (std::size_t i = 0; i < res.core.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << res.core[i];
    }
    std::cout << "]\n";
    if (list_sets) {
        for (std::uint32_t s : res.min_sets) {
            bool first = true;
            for (Vertex v = 0; v < l.g.n; ++v) {
                if (!(s >> v & 1)) continue;
                if (!first) std::cout << ' ';
                std::cout << v;
                first = false;
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_prune_dump(const std::string& path, int vertex) {
    Loaded l = load_block_graph(path);
    if (vertex < 0 || vertex >= l.g.n) {
        std::cerr << "vertex " << vertex << " out of range\n";
        return 1;
    }
    if (l.g.n == 2 || l.bc.block_count() == 1 || !l.bc.is_cut[vertex]) {
        std::cerr << "prune-dump needs a cut vertex of a non-complete block graph\n";
        return 1;
    }
    RootedOrder ro = vertex_ordering(l.g, l.bc, vertex);
    auto [pg, st] = prune(l.g, l.bc, ro, vertex, true);
    dump_prune_trace(st);
    std::cout << "alive=" << st.alive_count << " removed_weight=" << st.removed_weight
              << '\n';
    return 0;
}

int cmd_gen(std::uint64_t seed, int blocks, int min_size, int max_size) {
    GenSpec spec{seed, blocks, min_size, max_size};
    Graph g = generate(spec);
    std::cout << "# seed=" << seed << " blocks=" << blocks << " min-size=" << min_size
              << " max-size=" << max_size << '\n'
              << format_edge_list(g);
    return 0;
}

bool parse_seed_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(text);
            return true;
        }
        lo = std::stoull(text.substr(0, dots));
        hi = std::stoull(text.substr(dots + 2));
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

int cmd_verify(const std::string& seeds, int max_n, int cap_flag) {
    std::uint64_t lo, hi;
    if (!parse_seed_range(seeds, lo, hi)) {
        std::cerr << "bad seed range '" << seeds << "', expected A..B\n";
        return 1;
    }
    int cap = oracle_cap(cap_flag);
    if (max_n > cap) {
        std::cerr << "max-n " << max_n << " exceeds the oracle cap " << cap << '\n';
        return 1;
    }
    std::int64_t graphs = 0, queries = 0, mismatches = 0, book_checks = 0, book_violations = 0;
    for (std::uint64_t seed = lo; seed <= hi; ++seed) {
        Graph g = generate(corpus_spec(seed, max_n));
        BlockCutStructure bc = decompose(g);
        require_block_graph(g, bc);
        OracleResult res = solve(g, cap);
        std::vector<char> in_core(g.n, 0);
        for (Vertex v : res.core) in_core[v] = 1;
        std::int64_t seed_mismatch = 0, seed_book = 0;
        for (Vertex v = 0; v < g.n; ++v) {
            ++queries;
            Verdict verdict = in_all_min_pds(g, bc, v);
            if (verdict.in_all_min_pds != static_cast<bool>(in_core[v])) ++seed_mismatch;
        }
        for (Vertex r : bc.cut_vertices) {
            if (bc.block_count() == 1) break;
            RootedOrder ro = vertex_ordering(g, bc, r);
            auto [pg, st] = prune(g, bc, ro, r);
            ++book_checks;
            if (solve(pg.graph, cap).gamma_pr + st.removed_weight != res.gamma_pr)
                ++seed_book;
        }
        mismatches += seed_mismatch;
        book_violations += seed_book;
        ++graphs;
        std::cout << "seed=" << seed << " n=" << g.n << " m=" << g.m
                  << " mismatches=" << seed_mismatch
                  << " bookkeeping_violations=" << seed_book << '\n';
    }
    std::cout << "graphs=" << graphs << " queries=" << queries << " mismatches=" << mismatches
              << " bookkeeping_checks=" << book_checks
              << " bookkeeping_violations=" << book_violations << '\n';
    return (mismatches == 0 && book_violations == 0) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"paired domination on block graphs: is a vertex in every minimum "
                 "paired-dominating set?"};
    app.require_subcommand(1);

    std::string graph_path;
    std::optional<int> vertex;
    bool all_vertices = false, with_order = false, with_prune = false;
    auto* analyze = app.add_subcommand("analyze", "run the full pipeline for one vertex");
    analyze->add_option("graph", graph_path, "edge-list file")->required();
    analyze->add_option("--vertex", vertex, "query vertex r");
    analyze->add_flag("--all-vertices", all_vertices, "query every vertex");
    analyze->add_flag("--dump-order", with_order, "dump the vertex ordering");
    analyze->add_flag("--dump-prune", with_prune, "dump the pruning trace");

    std::string oracle_path;
    bool list_sets = false;
    int cap_flag = 0;
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    oracle->add_option("graph", oracle_path, "edge-list file")->required();
    oracle->add_flag("--list-sets", list_sets, "print every minimum paired-dominating set");
    oracle->add_option("--cap", cap_flag, "vertex cap (default 20, env PAIRDOM_ORACLE_CAP)");

    std::string dump_path;
    int dump_vertex = -1;
    auto* prune_dump = app.add_subcommand("prune-dump", "dump the pruning trace");
    prune_dump->add_option("graph", dump_path, "edge-list file")->required();
    prune_dump->add_option("--vertex", dump_vertex, "query vertex r")->required();

    std::uint64_t gen_seed = 0;
    int gen_blocks = 1, gen_min = 2, gen_max = 2;
    auto* gen = app.add_subcommand("gen", "emit a seeded random block graph");
    gen->add_option("--seed", gen_seed, "64-bit seed")->required();
    gen->add_option("--blocks", gen_blocks, "number of cliques")->required();
    gen->add_option("--min-size", gen_min, "minimum clique size (>= 2)");
    gen->add_option("--max-size", gen_max, "maximum clique size");

    std::string verify_seeds = "0..499";
    int verify_max_n = 12, verify_cap = 0;
    auto* verify = app.add_subcommand("verify", "algorithm vs oracle over a seeded corpus");
    verify->add_option("--seeds", verify_seeds, "seed range A..B");
    verify->add_option("--max-n", verify_max_n, "largest graph order to generate");
    verify->add_option("--cap", verify_cap, "oracle vertex cap override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze)
            return cmd_analyze(graph_path, vertex, all_vertices, with_order, with_prune);
        if (*oracle) return cmd_oracle(oracle_path, list_sets, cap_flag);
        if (*prune_dump) return cmd_prune_dump(dump_path, dump_vertex);
        if (*gen) return cmd_gen(gen_seed, gen_blocks, gen_min, gen_max);
        if (*verify) return cmd_verify(verify_seeds, verify_max_n, verify_cap);
    } catch (const InternalInvariant& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 1;
}
