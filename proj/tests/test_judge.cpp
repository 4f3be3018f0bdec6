#include "doctest.h"
#include "fixtures.hpp"
#include "pairdom/gen.hpp"
#include "pairdom/judge.hpp"
#include "pairdom/oracle.hpp"

using namespace pairdom;

namespace {

Verdict analyze(const Graph& g, Vertex r) {
    BlockCutStructure bc = decompose(g);
    require_block_graph(g, bc);
    return in_all_min_pds(g, bc, r);
}

CategoryCounts counts(int l1, int l2, int l3, int l6, int l8) {
    CategoryCounts cc;
    cc.l1 = l1;
    cc.l2 = l2;
    cc.l3 = l3;
    cc.l6 = l6;
    cc.l8 = l8;
    return cc;
}

}  // namespace

TEST_SUITE("judge") {
    TEST_CASE("judgement rule table") {
        CHECK(viampds(counts(1, 0, 0, 0, 0)).rule_fired == 1);
        CHECK(viampds(counts(2, 5, 0, 0, 0)).rule_fired == 1);
        CHECK(viampds(counts(0, 2, 0, 0, 0)).rule_fired == 2);
        CHECK(viampds(counts(0, 1, 1, 0, 0)).rule_fired == 3);
        CHECK(viampds(counts(0, 1, 0, 1, 0)).rule_fired == 3);
        CHECK(viampds(counts(0, 1, 0, 0, 1)).rule_fired == 3);
        CHECK(viampds(counts(0, 0, 2, 0, 0)).rule_fired == 4);
        CHECK(viampds(counts(0, 0, 1, 1, 0)).rule_fired == 5);
        CHECK(viampds(counts(0, 0, 1, 0, 1)).rule_fired == 5);
        CHECK(!viampds(counts(0, 0, 0, 0, 0)).in_all_min_pds);
        CHECK(!viampds(counts(0, 1, 0, 0, 0)).in_all_min_pds);
        CHECK(!viampds(counts(0, 0, 1, 0, 0)).in_all_min_pds);
        CHECK(!viampds(counts(0, 0, 0, 3, 2)).in_all_min_pds);
    }

    TEST_CASE("order-two graphs force both vertices") {
        Graph k2 = fixtures::path(2);
        for (Vertex v : {0, 1}) {
            Verdict verdict = analyze(k2, v);
            CHECK(verdict.in_all_min_pds);
            CHECK(verdict.special_case == SpecialCase::OrderTwo);
        }
    }

    TEST_CASE("complete graphs force nobody") {
        for (int n = 3; n <= 6; ++n) {
            Graph g = fixtures::complete(n);
            for (Vertex v = 0; v < n; ++v) {
                Verdict verdict = analyze(g, v);
                CHECK(!verdict.in_all_min_pds);
                CHECK(verdict.special_case == SpecialCase::Complete);
            }
        }
    }

    TEST_CASE("non-cut vertices are never forced") {
        Graph g = fixtures::path(6);
        Verdict verdict = analyze(g, 0);
        CHECK(!verdict.in_all_min_pds);
        CHECK(verdict.special_case == SpecialCase::NotCutVertex);
    }

    TEST_CASE("P6: support vertices forced, inner vertices not") {
        Graph g = fixtures::path(6);
        CHECK(analyze(g, 1).in_all_min_pds);
        CHECK(analyze(g, 1).rule_fired == 1);
        CHECK(analyze(g, 4).in_all_min_pds);
        CHECK(!analyze(g, 2).in_all_min_pds);
        CHECK(!analyze(g, 3).in_all_min_pds);
        CHECK(!analyze(g, 0).in_all_min_pds);
    }

    TEST_CASE("star center is forced via L1 blocks") {
        Graph g = fixtures::star(3);
        Verdict verdict = analyze(g, 3);
        CHECK(verdict.in_all_min_pds);
        CHECK(verdict.rule_fired == 1);
        CHECK(verdict.counts.l1 == 3);
    }

    TEST_CASE("bowtie center is forced via two large end blocks") {
        Verdict verdict = analyze(fixtures::bowtie(), 2);
        CHECK(verdict.in_all_min_pds);
        CHECK(verdict.rule_fired == 2);
        CHECK(verdict.counts.l2 == 2);
    }

    TEST_CASE("two triangles with a bridge: both bridge ends forced") {
        Graph g = fixtures::triangle_edge_triangle();
        Verdict v2 = analyze(g, 2);
        CHECK(v2.in_all_min_pds);
        CHECK(v2.rule_fired == 3);
        CHECK(v2.counts.l2 == 1);
        CHECK(v2.counts.l6 == 1);
        CHECK(analyze(g, 3).in_all_min_pds);
    }

    TEST_CASE("single first-kind TYPE-1 residue alone is not enough") {
        Graph g = fixtures::type1_plus_type2();
        Verdict verdict = analyze(g, 0);
        CHECK(verdict.counts.l3 == 1);
        CHECK(verdict.counts.l4 == 1);
        CHECK(verdict.counts.l1 == 0);
        CHECK(!verdict.in_all_min_pds);
        CHECK(verdict.rule_fired == 0);
        // oracle agreement: {1,2,3,4,8,9} avoids 0
        CHECK(!core_membership(g, 0));
    }

    TEST_CASE("two first-kind TYPE-1 residues fire rule 4") {
        Graph g = fixtures::type1_first_double();
        Verdict verdict = analyze(g, 0);
        CHECK(verdict.counts.l3 == 2);
        CHECK(verdict.rule_fired == 4);
        CHECK(verdict.in_all_min_pds);
        CHECK(core_membership(g, 0));
    }

    TEST_CASE("TYPE-2 residue beside a pendant leaf: L1 wins") {
        Graph g = fixtures::type2_first_branch();
        Verdict verdict = analyze(g, 0);
        CHECK(verdict.counts.l1 == 1);
        CHECK(verdict.counts.l4 == 1);
        CHECK(verdict.rule_fired == 1);
        CHECK(core_membership(g, 0));
    }

    TEST_CASE("TYPE-1 residue plus an odd r1 block fires rule 5") {
        // branch 1: first-kind TYPE-1 shape below 0-1-2
        // branch 2: 0-7 with pendant 8-7 keeps l(7)=r1 and 7 a cut vertex
        Graph g = fixtures::type1_rule5();
        Verdict verdict = analyze(g, 0);
        CHECK(verdict.counts.l3 == 1);
        CHECK(verdict.counts.l6 == 1);
        CHECK(verdict.rule_fired == 5);
        CHECK(verdict.in_all_min_pds);
        CHECK(core_membership(g, 0));
    }

    TEST_CASE("void r1 mark: still forced through the pendant block") {
        Graph g = fixtures::r1_without_end_block();
        Verdict verdict = analyze(g, 0);
        CHECK(verdict.counts.l1 == 1);
        // vertex 1's r1 mark is void (its reason sits in the K4 next to
        // labeled vertices), so block {0,1} ends up an annotated residue
        CHECK(verdict.counts.l4 == 1);
        CHECK(verdict.counts.l6 == 0);
        CHECK(verdict.rule_fired == 1);
        CHECK(core_membership(g, 0));
    }

    TEST_CASE("verdict matches the oracle on fixtures") {
        for (const Graph& g : fixtures::acceptance_fixtures()) {
            if (g.n > 14) continue;
            OracleResult res = solve(g);
            for (Vertex v = 0; v < g.n; ++v) {
                bool in_core =
                    std::find(res.core.begin(), res.core.end(), v) != res.core.end();
                CHECK(analyze(g, v).in_all_min_pds == in_core);
            }
        }
    }

    TEST_CASE("verdict matches the oracle on a quick random corpus") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            Graph g = generate(corpus_spec(seed, 11));
            BlockCutStructure bc = decompose(g);
            OracleResult res = solve(g);
            for (Vertex v = 0; v < g.n; ++v) {
                bool in_core =
                    std::find(res.core.begin(), res.core.end(), v) != res.core.end();
                bool got = in_all_min_pds(g, bc, v).in_all_min_pds;
                if (got != in_core) {
                    CAPTURE(seed);
                    CAPTURE(v);
                    CHECK(got == in_core);
                }
            }
        }
    }

    TEST_CASE("classification is independent of block discovery order") {
        // relabeling vertices permutes block discovery; verdicts must agree
        Graph g = fixtures::triangle_path_triangle();
        std::vector<Vertex> perm{6, 5, 4, 3, 2, 1, 0};
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < g.n; ++u)
            for (Vertex w : g.adj[u])
                if (u < w) edges.emplace_back(perm[u], perm[w]);
        Graph h = make_graph(g.n, edges);
        for (Vertex v = 0; v < g.n; ++v)
            CHECK(analyze(g, v).in_all_min_pds == analyze(h, perm[v]).in_all_min_pds);
    }
}
