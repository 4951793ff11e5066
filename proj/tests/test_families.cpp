#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "minorham/families.hpp"
#include "minorham/hamilton.hpp"
#include "minorham/minors.hpp"
#include "minorham/topology.hpp"
#include "test_util.hpp"

using namespace minorham;

namespace {

int girth(const Graph& g) {
    int best = g.n + 1;
    for (auto& c : testutil::all_cycles(g)) best = std::min(best, (int)c.size());
    return best;
}

}  // namespace

TEST_CASE("herschel") {
    Graph h = herschel();
    REQUIRE(h.n == 11);
    REQUIRE(h.edge_count() == 18);
    SECTION("degree sequence 4,4,4 and eight 3s") {
        std::vector<int> degs;
        for (int v = 0; v < 11; ++v) degs.push_back(h.degree(v));
        std::sort(degs.begin(), degs.end());
        std::vector<int> want{3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4};
        REQUIRE(degs == want);
    }
    SECTION("bipartite with parts {x,u5,z,u4,y} vs rest") {
        std::uint64_t part = (1ULL << 7) | (1ULL << 4) | (1ULL << 9) | (1ULL << 3) | (1ULL << 8);
        for (auto [u, v] : h.edges())
            REQUIRE(((part >> u & 1) ^ (part >> v & 1)) == 1);
    }
    SECTION("order-3 automorphism (u4)(u1 u6 u3)(x u5 z)(u2 u7 v1)(y)") {
        std::vector<int> perm(11);
        perm[0] = 5;  // u1 -> u6
        perm[5] = 2;  // u6 -> u3
        perm[2] = 0;  // u3 -> u1
        perm[7] = 4;  // x -> u5
        perm[4] = 9;  // u5 -> z
        perm[9] = 7;  // z -> x
        perm[1] = 6;  // u2 -> u7
        perm[6] = 10; // u7 -> v1
        perm[10] = 1; // v1 -> u2
        perm[3] = 3;  // u4 fixed
        perm[8] = 8;  // y fixed
        Graph img = relabel(h, perm);
        img.labels = h.labels;
        REQUIRE(img == h);
    }
    SECTION("planar, 3-connected, girth 4, non-Hamiltonian") {
        REQUIRE(is_planar(h));
        REQUIRE(is_3_connected(h));
        REQUIRE(girth(h) == 4);
        REQUIRE(!is_hamiltonian(h));
        REQUIRE(longest_cycle(h).length() == 10);
    }
}

TEST_CASE("goldner_harary") {
    Graph gh = goldner_harary();
    REQUIRE(gh.n == 11);
    REQUIRE(gh.edge_count() == 27);
    SECTION("contains the Herschel graph as a spanning subgraph") {
        Graph h = herschel();
        for (auto [u, v] : h.edges()) REQUIRE(gh.has_edge(u, v));
    }
    SECTION("planar triangulation") {
        auto emb = std::get<PlanarEmbedding>(planar_embedding(gh));
        for (auto& f : emb.faces) REQUIRE(f.size() == 3);
    }
    SECTION("3-connected and non-Hamiltonian") {
        REQUIRE(is_3_connected(gh));
        REQUIRE(!is_hamiltonian(gh));
    }
}

TEST_CASE("g_k") {
    SECTION("k=1 is the Herschel graph") {
        REQUIRE(g_k(1) == herschel());
    }
    SECTION("k < 1 rejected") { REQUIRE_THROWS_AS(g_k(0), std::invalid_argument); }
    SECTION("shape: 10+k vertices, deg(y) = 2+k, planar") {
        for (int k = 1; k <= 6; ++k) {
            Graph g = g_k(k);
            REQUIRE(g.n == 10 + k);
            REQUIRE(g.degree(8) == 2 + k);
            REQUIRE(is_planar(g));
        }
    }
    SECTION("contracting any path edge of g_3 gives g_2") {
        Graph g3 = g_k(3), g2 = g_k(2);
        for (auto e : std::vector<Edge>{{10, 11}, {11, 12}}) {
            Graph c = contract_edge(g3, e).graph;
            REQUIRE(isomorphic(c, g2));
        }
    }
    SECTION("k = 1..4: 3-connected planar non-Hamiltonian with the 5-cut") {
        for (int k = 1; k <= 4; ++k) {
            Graph g = g_k(k);
            REQUIRE(is_3_connected(g));
            REQUIRE(is_planar(g));
            ToughnessCut cut{{{3, 4, 7, 8, 9}}, 6};  // {u4,u5,x,y,z} leaves 6 parts
            REQUIRE(verify_tough_cut(g, cut));
            REQUIRE(!is_hamiltonian(g));
        }
    }
    SECTION("k = 1..4: no K26 minor") {
        for (int k = 1; k <= 4; ++k) REQUIRE(!find_k2t_model(g_k(k), 6));
    }
}

TEST_CASE("herschel K25 models satisfy the three structural facts") {
    Graph h = herschel();
    auto models = enumerate_k2t_models(h, 5);
    REQUIRE(!models.empty());
    std::uint64_t deg4 = (1ULL << 7) | (1ULL << 4) | (1ULL << 9);  // x, u5, z
    for (auto& m : models) {
        std::uint64_t r1 = to_mask(m.r1.members), r2 = to_mask(m.r2.members),
                      s = to_mask(m.s.members);
        REQUIRE((r1 | r2 | s) == h.full_mask());          // (a) the model covers V
        REQUIRE(popcount64(r1 & deg4) == 1);              // (b) one degree-4 vertex per side
        REQUIRE(popcount64(r2 & deg4) == 1);
        for (int u : m.r1.members) REQUIRE(!(h.adj[u] & r2));  // (c) no R1-R2 edge
    }
}

TEST_CASE("prism_with_chords") {
    SECTION("m=5 zero mask: the plain prism") {
        Graph g = prism_with_chords(5, 0);
        REQUIRE(g == testutil::prism_graph(5));
        REQUIRE(is_3_connected(g));
        REQUIRE(is_planar(g));
        REQUIRE(is_hamiltonian(g));
    }
    SECTION("m=5: every mask is planar, 3-connected, K25-minor-free") {
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            Graph g = prism_with_chords(5, mask);
            REQUIRE(is_planar(g));
            REQUIRE(is_3_connected(g));
            REQUIRE(!find_k2t_model(g, 5));
        }
    }
    SECTION("m=5: 8 isomorphism classes over the 32 masks") {
        std::set<std::string> codes;
        for (std::uint64_t mask = 0; mask < 32; ++mask)
            codes.insert(canonical_code(prism_with_chords(5, mask)).bytes);
        REQUIRE(codes.size() == 8);
    }
    SECTION("bad parameters rejected") {
        REQUIRE_THROWS_AS(prism_with_chords(2, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(prism_with_chords(3, 8), std::invalid_argument);
    }
}

TEST_CASE("named_graph dispatch") {
    REQUIRE(named_graph({"herschel", {}}) == herschel());
    REQUIRE(named_graph({"goldner-harary", {}}) == goldner_harary());
    REQUIRE(named_graph({"gk", {3}}) == g_k(3));
    REQUIRE(named_graph({"prism-chords", {5, 6}}) == prism_with_chords(5, 6));
    REQUIRE(named_graph({"wheel", {5}}).n == 6);
    REQUIRE(named_graph({"complete-bipartite", {2, 3}}) == complete_bipartite(2, 3));
    SECTION("petersen: 3-regular, nonplanar, non-Hamiltonian, K25-minor-free") {
        Graph p = named_graph({"petersen", {}});
        REQUIRE(p.n == 10);
        for (int v = 0; v < 10; ++v) REQUIRE(p.degree(v) == 3);
        REQUIRE(!is_planar(p));
        REQUIRE(!is_hamiltonian(p));
        REQUIRE(!find_k2t_model(p, 5));
    }
    SECTION("wheel(5) is 3-connected planar Hamiltonian") {
        Graph w = named_graph({"wheel", {5}});
        REQUIRE(is_3_connected(w));
        REQUIRE(is_planar(w));
        REQUIRE(is_hamiltonian(w));
    }
    SECTION("K23 is non-Hamiltonian") { REQUIRE(!is_hamiltonian(complete_bipartite(2, 3))); }
    SECTION("unknown name / bad params rejected") {
        REQUIRE_THROWS_AS(named_graph({"mystery", {}}), std::invalid_argument);
        REQUIRE_THROWS_AS(named_graph({"gk", {}}), std::invalid_argument);
        REQUIRE_THROWS_AS(named_graph({"wheel", {1}}), std::invalid_argument);
    }
}
