#include "doctest.h"
#include "fixtures.hpp"
#include "pairdom/block_cut.hpp"
#include "pairdom/gen.hpp"
#include "pairdom/oracle.hpp"

using namespace pairdom;

TEST_SUITE("oracle") {
    TEST_CASE("is_pds on paths and triangles") {
        Graph p4 = fixtures::path(4);
        CHECK(is_pds(p4, {1, 2}));
        CHECK(!is_pds(p4, {0, 3}));
        CHECK(!is_pds(p4, {1}));
        Graph k3 = fixtures::complete(3);
        CHECK(is_pds(k3, {0, 1}));
    }

    TEST_CASE("P4: unique minimum set") {
        OracleResult res = solve(fixtures::path(4));
        CHECK(res.gamma_pr == 2);
        CHECK(res.num_min_sets == 1);
        CHECK(res.core == std::vector<Vertex>{1, 2});
    }

    TEST_CASE("K3: three minimum sets, empty core") {
        OracleResult res = solve(fixtures::complete(3));
        CHECK(res.gamma_pr == 2);
        CHECK(res.num_min_sets == 3);
        CHECK(res.core.empty());
    }

    TEST_CASE("P6: the two support vertices are forced") {
        OracleResult res = solve(fixtures::path(6));
        CHECK(res.gamma_pr == 4);
        CHECK(res.core == std::vector<Vertex>{1, 4});
        CHECK(core_membership(fixtures::path(6), 1));
        CHECK(!core_membership(fixtures::path(6), 0));
    }

    TEST_CASE("K2: both vertices forced") {
        OracleResult res = solve(fixtures::path(2));
        CHECK(res.gamma_pr == 2);
        CHECK(res.core == std::vector<Vertex>{0, 1});
        CHECK(core_membership(fixtures::path(2), 0));
    }

    TEST_CASE("cap is enforced") {
        Graph g = fixtures::path(8);
        CHECK_THROWS_AS(solve(g, 6), TooLarge);
    }

    TEST_CASE("gamma_pr is even and at least two on the corpus") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Graph g = generate(corpus_spec(seed, 10));
            OracleResult res = solve(g);
            CHECK(res.gamma_pr >= 2);
            CHECK(res.gamma_pr % 2 == 0);
            CHECK(res.num_min_sets >= 1);
            // core vertices sit in every stored minimum set
            for (Vertex c : res.core)
                for (std::uint32_t s : res.min_sets) CHECK((s >> c & 1) == 1);
        }
    }

    TEST_CASE("tree leaves are never forced") {
        // every leaf of a tree of order >= 3 misses some minimum PDS
        for (int n = 3; n <= 8; ++n) {
            Graph t = fixtures::path(n);
            OracleResult res = solve(t);
            for (Vertex leaf : {0, n - 1}) {
                bool avoided = false;
                for (std::uint32_t s : res.min_sets) avoided |= !(s >> leaf & 1);
                CHECK(avoided);
            }
        }
        Graph st = fixtures::star(4);
        OracleResult res = solve(st);
        for (Vertex leaf = 0; leaf < 4; ++leaf) {
            bool avoided = false;
            for (std::uint32_t s : res.min_sets) avoided |= !(s >> leaf & 1);
            CHECK(avoided);
        }
    }

    TEST_CASE("every minimum set is a PDS and matches is_pds") {
        Graph g = fixtures::triangle_path_triangle();
        OracleResult res = solve(g);
        for (std::uint32_t s : res.min_sets) {
            std::vector<Vertex> set;
            for (Vertex v = 0; v < g.n; ++v)
                if (s >> v & 1) set.push_back(v);
            CHECK(is_pds(g, set));
            CHECK(static_cast<int>(set.size()) == res.gamma_pr);
        }
    }
}
