#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "minorham/minors.hpp"
#include "minorham/topology.hpp"
#include "test_util.hpp"

using namespace minorham;
using namespace testutil;

namespace {

// Independent oracle: K_{2,t} minor existence by trying every pair of
// disjoint connected vertex subsets and counting common attachments.
bool k2t_naive(const Graph& g, int t) {
    int n = g.n;
    std::vector<std::uint64_t> conn;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask)
        if (is_connected_on(g, mask)) conn.push_back(mask);
    for (std::uint64_t m1 : conn)
        for (std::uint64_t m2 : conn) {
            if ((m1 & m2) || m1 >= m2) continue;
            std::uint64_t c = 0;
            for (int v = 0; v < n; ++v)
                if (!((m1 | m2) >> v & 1) && (g.adj[v] & m1) && (g.adj[v] & m2)) c |= 1ULL << v;
            if (popcount64(c) >= t) return true;
        }
    return false;
}

bool has_model(const Graph& g, int t) { return find_k2t_model(g, t).has_value(); }

}  // namespace

TEST_CASE("find_k2t_model fixed instances") {
    SECTION("K25 itself has a K25 model") {
        Graph g = complete_bipartite(2, 5);
        auto m = find_k2t_model(g, 5);
        REQUIRE(m);
        REQUIRE(verify_standard_model(g, m->r1, m->r2, m->s, 5));
        REQUIRE(m->r1.members == std::vector<int>{0});
        REQUIRE(m->r2.members == std::vector<int>{1});
    }
    SECTION("Herschel: K25 model exists, K26 does not") {
        Graph h = herschel_graph();
        auto m = find_k2t_model(h, 5);
        REQUIRE(m);
        REQUIRE(verify_standard_model(h, m->r1, m->r2, m->s, 5));
        REQUIRE(!find_k2t_model(h, 6));
    }
    SECTION("Petersen is K25-minor-free") { REQUIRE(!find_k2t_model(petersen_graph(), 5)); }
    SECTION("t < 2 rejected") {
        REQUIRE_THROWS_AS(find_k2t_model(complete_graph(4), 1), std::invalid_argument);
    }
}

TEST_CASE("find_k2t_model agrees with naive oracle") {
    SECTION("exhaustively for n <= 5") {
        for (int n = 2; n <= 5; ++n) {
            int nbits = n * (n - 1) / 2;
            for (int bits = 0; bits < (1 << nbits); ++bits) {
                Graph g(n);
                int b = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j, ++b)
                        if (bits >> b & 1) g.add_edge(i, j);
                for (int t = 2; t <= 3; ++t) REQUIRE(has_model(g, t) == k2t_naive(g, t));
            }
        }
    }
    SECTION("random graphs on 6 and 7 vertices") {
        std::mt19937 rng(211);
        for (int iter = 0; iter < 300; ++iter) {
            Graph g = random_graph(rng, 6 + (int)(rng() % 2), 2);
            for (int t = 2; t <= 3; ++t) REQUIRE(has_model(g, t) == k2t_naive(g, t));
        }
    }
}

TEST_CASE("find_k2t_model monotonicity") {
    std::mt19937 rng(223);
    SECTION("in t") {
        for (int iter = 0; iter < 100; ++iter) {
            Graph g = random_graph(rng, 4 + (int)(rng() % 5), 2);
            for (int t = 2; t <= 4; ++t)
                if (!has_model(g, t)) REQUIRE(!has_model(g, t + 1));
        }
    }
    SECTION("under edge contraction") {
        for (int iter = 0; iter < 100; ++iter) {
            Graph g = random_graph(rng, 5 + (int)(rng() % 4), 2);
            auto es = g.edges();
            if (es.empty()) continue;
            Graph h = contract_edge(g, es[rng() % es.size()]).graph;
            for (int t = 2; t <= 3; ++t)
                if (has_model(h, t)) REQUIRE(has_model(g, t));
        }
    }
}

TEST_CASE("enumerate_k2t_models") {
    SECTION("C4 with t=2: the two opposite-pair models") {
        auto models = enumerate_k2t_models(cycle_graph(4), 2);
        REQUIRE(models.size() == 2);
        for (auto& m : models) {
            REQUIRE(verify_standard_model(cycle_graph(4), m.r1, m.r2, m.s, 2));
            REQUIRE(m.r1.members.size() == 1);
            REQUIRE(m.r2.members.size() == 1);
            REQUIRE((m.r2.members[0] - m.r1.members[0]) == 2);  // opposite vertices
        }
    }
    SECTION("all models valid, distinct, and consistent with find_k2t_model") {
        std::mt19937 rng(227);
        for (int iter = 0; iter < 60; ++iter) {
            Graph g = random_graph(rng, 4 + (int)(rng() % 4), 2);
            int t = 2 + (int)(rng() % 2);
            auto models = enumerate_k2t_models(g, t);
            REQUIRE(models.empty() == !has_model(g, t));
            std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> seen;
            for (auto& m : models) {
                REQUIRE(verify_standard_model(g, m.r1, m.r2, m.s, t));
                REQUIRE(m.r1.members.front() < m.r2.members.front());
                REQUIRE(seen.insert({m.r1.members, m.r2.members, m.s.members}).second);
            }
        }
    }
    SECTION("Herschel t=5: models exist and cover all of V") {
        Graph h = herschel_graph();
        auto models = enumerate_k2t_models(h, 5);
        REQUIRE(!models.empty());
        for (auto& m : models) {
            REQUIRE(verify_standard_model(h, m.r1, m.r2, m.s, 5));
            std::uint64_t all =
                to_mask(m.r1.members) | to_mask(m.r2.members) | to_mask(m.s.members);
            REQUIRE(all == h.full_mask());
        }
    }
}

TEST_CASE("find_rooted_k22") {
    SECTION("K2 has none") {
        Graph g = build_graph(2, {{0, 1}});
        REQUIRE(!find_rooted_k22(g, 0, 1));
    }
    SECTION("K4 has one for any roots") {
        Graph g = complete_graph(4);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                if (x == y) continue;
                auto m = find_rooted_k22(g, x, y);
                REQUIRE(m);
                REQUIRE(verify_standard_model(g, m->r1, m->r2, m->s, 2));
                REQUIRE(std::count(m->r1.members.begin(), m->r1.members.end(), x) == 1);
                REQUIRE(std::count(m->r2.members.begin(), m->r2.members.end(), y) == 1);
            }
    }
    SECTION("fan path a b c with apex v, roots a and v: none") {
        Graph g = build_graph(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
        REQUIRE(!find_rooted_k22(g, 0, 3));
    }
    SECTION("rejected when g+xy is not a block") {
        Graph g(4);  // edgeless
        REQUIRE_THROWS_AS(find_rooted_k22(g, 0, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(find_rooted_k22(g, 0, 0), std::invalid_argument);
    }
}

TEST_CASE("rooted K22 absence matches xy-outerplanarity (exhaustive n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        int nbits = n * (n - 1) / 2;
        for (int bits = 0; bits < (1 << nbits); ++bits) {
            Graph g(n);
            int b = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++b)
                    if (bits >> b & 1) g.add_edge(i, j);
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    Graph g2 = g;
                    if (!g2.has_edge(x, y)) g2.add_edge(x, y);
                    if (!is_block(g2)) continue;
                    // degenerate: edgeless K2-plus-xy has no Hamilton xy-path
                    // yet no rooted minor either; the equivalence needs g connected
                    if (!is_connected(g)) continue;
                    bool no_minor = !find_rooted_k22(g, x, y);
                    bool outer = xy_outerplanar_embedding(g, x, y).has_value();
                    REQUIRE(no_minor == outer);
                }
        }
    }
}
