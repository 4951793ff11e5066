#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "minorham/topology.hpp"
#include "test_util.hpp"

using namespace minorham;
using namespace testutil;

namespace {

// verify a returned embedding against the invariants: Euler's formula and
// each edge on exactly two face sides
void check_embedding(const Graph& g, const PlanarEmbedding& e) {
    REQUIRE(g.n - g.edge_count() + (int)e.faces.size() == 2);
    std::map<std::pair<int, int>, int> side_count;
    for (const auto& walk : e.faces) {
        int k = (int)walk.size();
        for (int i = 0; i < k; ++i) {
            int a = walk[i], b = walk[(i + 1) % k];
            REQUIRE(g.has_edge(a, b));
            side_count[{std::min(a, b), std::max(a, b)}]++;
        }
    }
    for (auto [u, v] : g.edges()) REQUIRE(side_count[{u, v}] == 2);
}

// witness must be a subdivision of K5 or K3,3: suppress degree-2 vertices
// and compare against the two Kuratowski graphs
void check_kuratowski(const NonplanarWitness& w) {
    std::uint64_t verts = 0;
    for (auto [u, v] : w.kuratowski_edges) verts |= (1ULL << u) | (1ULL << v);
    auto vs = mask_to_vec(verts);
    std::vector<int> local(64, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = (int)i;
    Graph h((int)vs.size());
    for (auto [u, v] : w.kuratowski_edges) h.add_edge(local[u], local[v]);
    // suppress degree-2 vertices
    for (;;) {
        int v2 = -1;
        for (int v = 0; v < h.n; ++v)
            if (h.degree(v) == 2) v2 = v;
        if (v2 < 0) break;
        auto nb = h.neighbors(v2);
        Graph h2 = delete_vertices(h, 1ULL << v2).graph;
        int a = nb[0] < v2 ? nb[0] : nb[0] - 1;
        int b = nb[1] < v2 ? nb[1] : nb[1] - 1;
        if (!h2.has_edge(a, b)) h2.add_edge(a, b);
        h = std::move(h2);
    }
    bool k5 = isomorphic(h, complete_graph(5));
    bool k33 = isomorphic(h, complete_bipartite(3, 3));
    REQUIRE((k5 || k33));
}

// subgraph consisting of cycle C and everything drawn inside it, via the
// dual-side partition induced by C's edges
Graph cycle_interior(const Graph& g, const PlanarEmbedding& e, const std::vector<int>& cyc) {
    std::set<std::pair<int, int>> cyc_edges;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }
    // incident faces per edge
    std::map<std::pair<int, int>, std::vector<int>> efaces;
    for (int f = 0; f < (int)e.faces.size(); ++f) {
        const auto& walk = e.faces[f];
        int k = (int)walk.size();
        for (int i = 0; i < k; ++i) {
            int a = walk[i], b = walk[(i + 1) % k];
            efaces[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    // dual components over non-C edges
    int F = (int)e.faces.size();
    std::vector<int> comp(F, -1);
    int ncomp = 0;
    for (int f = 0; f < F; ++f) {
        if (comp[f] >= 0) continue;
        std::vector<int> st = {f};
        comp[f] = ncomp;
        while (!st.empty()) {
            int c = st.back();
            st.pop_back();
            for (auto& [edge, fs] : efaces) {
                if (cyc_edges.count(edge)) continue;
                if (fs.size() == 2 && (fs[0] == c || fs[1] == c)) {
                    int other = fs[0] == c ? fs[1] : fs[0];
                    if (comp[other] < 0) {
                        comp[other] = ncomp;
                        st.push_back(other);
                    }
                }
            }
        }
        ++ncomp;
    }
    REQUIRE(ncomp == 2);  // Jordan: C separates the sphere into two sides
    int outside = comp[e.outer_face];
    Graph sub(g.n);
    for (auto& [edge, fs] : efaces) {
        if (cyc_edges.count(edge)) {
            sub.add_edge(edge.first, edge.second);
        } else if (comp[fs[0]] != outside && comp[fs[1]] != outside) {
            sub.add_edge(edge.first, edge.second);
        }
    }
    // drop vertices not touched
    std::uint64_t iso = 0;
    for (int v = 0; v < g.n; ++v)
        if (sub.degree(v) == 0) iso |= 1ULL << v;
    return delete_vertices(sub, iso).graph;
}

}  // namespace

TEST_CASE("planar_embedding") {
    SECTION("K4 has 4 faces") {
        auto r = planar_embedding(complete_graph(4));
        auto& e = std::get<PlanarEmbedding>(r);
        REQUIRE(e.faces.size() == 4);
        check_embedding(complete_graph(4), e);
    }
    SECTION("Petersen graph is nonplanar with a Kuratowski witness") {
        auto r = planar_embedding(petersen_graph());
        REQUIRE(std::holds_alternative<NonplanarWitness>(r));
        check_kuratowski(std::get<NonplanarWitness>(r));
    }
    SECTION("Herschel graph has 9 faces") {
        Graph h = herschel_graph();
        auto r = planar_embedding(h);
        auto& e = std::get<PlanarEmbedding>(r);
        REQUIRE(e.faces.size() == 9);
        check_embedding(h, e);
    }
    SECTION("K5 and K33 rejected, witnesses checked") {
        for (Graph g : {complete_graph(5), complete_bipartite(3, 3)}) {
            auto r = planar_embedding(g);
            REQUIRE(std::holds_alternative<NonplanarWitness>(r));
            check_kuratowski(std::get<NonplanarWitness>(r));
        }
    }
    SECTION("disconnected input rejected") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        REQUIRE_THROWS_AS(planar_embedding(g), std::invalid_argument);
    }
    SECTION("random connected planar graphs embed cleanly") {
        std::mt19937 rng(23);
        int embedded = 0;
        for (int iter = 0; iter < 300; ++iter) {
            Graph g = random_graph(rng, 4 + (int)(rng() % 6), 3);
            if (!is_connected(g)) continue;
            auto r = planar_embedding(g);
            if (std::holds_alternative<NonplanarWitness>(r)) {
                check_kuratowski(std::get<NonplanarWitness>(r));
                continue;
            }
            check_embedding(g, std::get<PlanarEmbedding>(r));
            ++embedded;
        }
        REQUIRE(embedded > 50);
    }
    SECTION("prisms and wheels embed") {
        for (int m = 3; m <= 8; ++m) {
            check_embedding(prism_graph(m),
                            std::get<PlanarEmbedding>(planar_embedding(prism_graph(m))));
            check_embedding(wheel_graph(m),
                            std::get<PlanarEmbedding>(planar_embedding(wheel_graph(m))));
        }
    }
}

TEST_CASE("vertex_connectivity") {
    REQUIRE(vertex_connectivity(complete_bipartite(2, 3)) == 2);
    REQUIRE(vertex_connectivity(herschel_graph()) == 3);
    REQUIRE(vertex_connectivity(complete_graph(5)) == 4);
    REQUIRE(vertex_connectivity(cycle_graph(6)) == 2);
    REQUIRE(vertex_connectivity(path_graph(4)) == 1);
    REQUIRE(vertex_connectivity(petersen_graph()) == 3);

    SECTION("agrees with brute-force pair removal on random graphs") {
        std::mt19937 rng(31);
        for (int iter = 0; iter < 200; ++iter) {
            Graph g = random_graph(rng, 4 + (int)(rng() % 6), 2);
            if (!is_connected(g)) continue;
            bool brute3 = true;
            if (g.n < 4) brute3 = false;
            for (int a = 0; a < g.n && brute3; ++a)
                for (int b = a; b < g.n && brute3; ++b) {
                    std::uint64_t keep = g.full_mask() & ~(1ULL << a) & ~(1ULL << b);
                    if (!is_connected_on(g, keep)) brute3 = false;
                }
            REQUIRE((vertex_connectivity(g) >= 3) == brute3);
            REQUIRE(is_3_connected(g) == brute3);
        }
    }
}

TEST_CASE("internally_disjoint_paths") {
    SECTION("K4 adjacent pair has three paths") {
        auto r = internally_disjoint_paths(complete_graph(4), 0, 1, 3, 1);
        REQUIRE(r.has_value());
        REQUIRE(r->paths.size() == 3);
        std::uint64_t interior = 0;
        for (auto& p : r->paths) {
            REQUIRE(is_valid_path(complete_graph(4), p));
            REQUIRE(p.front() == 0);
            REQUIRE(p.back() == 1);
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                REQUIRE(!(interior >> p[i] & 1));
                interior |= 1ULL << p[i];
            }
        }
    }
    SECTION("C5 has no three disjoint paths") {
        REQUIRE(!internally_disjoint_paths(cycle_graph(5), 0, 2, 3, 1).has_value());
    }
    SECTION("Herschel x to z: three paths of length >= 2") {
        Graph h = herschel_graph();
        auto r = internally_disjoint_paths(h, 7, 9, 3, 2);
        REQUIRE(r.has_value());
        for (auto& p : r->paths) {
            REQUIRE(is_valid_path(h, p));
            REQUIRE(p.size() >= 3);
        }
    }
    SECTION("same endpoints rejected") {
        REQUIRE_THROWS_AS(internally_disjoint_paths(complete_graph(4), 1, 1, 2, 1),
                          std::invalid_argument);
    }
}

TEST_CASE("is_block") {
    Graph k2(2);
    k2.add_edge(0, 1);
    REQUIRE(is_block(k2));
    REQUIRE(!is_block(path_graph(3)));
    REQUIRE(is_block(cycle_graph(6)));
    Graph k1(1);
    REQUIRE(is_block(k1));
    Graph disc(2);
    REQUIRE(!is_block(disc));
}

TEST_CASE("outerplanar_embedding") {
    SECTION("C5: outer face is the 5-cycle") {
        auto r = outerplanar_embedding(cycle_graph(5));
        REQUIRE(r.has_value());
        REQUIRE(r->faces[r->outer_face].size() == 5);
        check_embedding(cycle_graph(5), *r);
    }
    SECTION("K4 is not outerplanar") {
        REQUIRE(!outerplanar_embedding(complete_graph(4)).has_value());
    }
    SECTION("K23 is not outerplanar") {
        REQUIRE(!outerplanar_embedding(complete_bipartite(2, 3)).has_value());
    }
    SECTION("outer face covers all vertices") {
        std::mt19937 rng(41);
        for (int iter = 0; iter < 200; ++iter) {
            Graph g = random_graph(rng, 3 + (int)(rng() % 6), 3);
            if (!is_connected(g)) continue;
            auto r = outerplanar_embedding(g);
            if (!r) continue;
            REQUIRE(to_mask(r->faces[r->outer_face]) == g.full_mask());
        }
    }
}

TEST_CASE("xy_outerplanar_embedding") {
    SECTION("K2") {
        Graph k2(2);
        k2.add_edge(0, 1);
        auto r = xy_outerplanar_embedding(k2, 0, 1);
        REQUIRE(r.has_value());
        REQUIRE(r->outer_path == std::vector<int>{0, 1});
    }
    SECTION("C4 with adjacent roots") {
        auto r = xy_outerplanar_embedding(cycle_graph(4), 0, 1);
        REQUIRE(r.has_value());
        REQUIRE(r->outer_path.front() == 0);
        REQUIRE(r->outer_path.back() == 1);
        REQUIRE(r->outer_path.size() == 4);
        REQUIRE(is_valid_path(cycle_graph(4), r->outer_path));
    }
    SECTION("fan with x the path end and y the apex") {
        // path a=0, b=1, c=2 plus apex v=3
        Graph fan = build_graph(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
        auto r = xy_outerplanar_embedding(fan, 0, 3);
        REQUIRE(r.has_value());
        REQUIRE(r->outer_path == std::vector<int>{0, 1, 2, 3});
    }
    SECTION("K4 is not xy-outerplanar for any pair") {
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                if (x != y) REQUIRE(!xy_outerplanar_embedding(complete_graph(4), x, y));
    }
    SECTION("outer path is a Hamilton xy-path whenever present") {
        std::mt19937 rng(43);
        for (int iter = 0; iter < 300; ++iter) {
            Graph g = random_graph(rng, 2 + (int)(rng() % 6), 3);
            int x = (int)(rng() % g.n), y = (int)(rng() % g.n);
            if (x == y) continue;
            auto r = xy_outerplanar_embedding(g, x, y);
            if (!r) continue;
            REQUIRE(r->outer_path.size() == (std::size_t)g.n);
            REQUIRE(r->outer_path.front() == x);
            REQUIRE(r->outer_path.back() == y);
            REQUIRE(is_valid_path(g, r->outer_path));
        }
    }
}

TEST_CASE("cycle interiors are 2-connected") {
    // for 2-connected plane graphs and any cycle C, the subgraph of C plus
    // its interior is a block
    std::mt19937 rng(53);
    int checked = 0;
    for (int iter = 0; iter < 400 && checked < 60; ++iter) {
        Graph g = random_graph(rng, 4 + (int)(rng() % 5), 2);
        if (!is_connected(g) || !is_planar(g)) continue;
        if (vertex_connectivity(g) < 2) continue;
        auto emb = std::get<PlanarEmbedding>(planar_embedding(g));
        auto cycles = all_cycles(g);
        for (std::size_t i = 0; i < cycles.size(); i += 1 + cycles.size() / 10) {
            Graph inside = cycle_interior(g, emb, cycles[i]);
            REQUIRE(is_block(inside));
            ++checked;
        }
    }
    REQUIRE(checked >= 60);
}

TEST_CASE("embedding text round trip") {
    for (Graph g : {complete_graph(4), herschel_graph(), prism_graph(5)}) {
        auto e = std::get<PlanarEmbedding>(planar_embedding(g));
        auto e2 = embedding_from_text(g, embedding_to_text(e));
        REQUIRE(e2.rotation == e.rotation);
        REQUIRE(e2.faces.size() == e.faces.size());
    }
    SECTION("corrupt rotation rejected") {
        Graph g = complete_graph(4);
        REQUIRE_THROWS_AS(embedding_from_text(g, "0: 1 2\n1: 0 2 3\n2: 0 1 3\n3: 1 2\n"),
                          std::invalid_argument);
    }
}
