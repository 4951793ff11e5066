#include <catch2/catch_amalgamated.hpp>

#include "minorham/serialize.hpp"
#include "minorham/verify.hpp"
#include "test_util.hpp"

using namespace minorham;

TEST_CASE("serialization round trips") {
    SECTION("standard model") {
        Graph h = herschel();
        auto m = find_k2t_model(h, 5);
        REQUIRE(m);
        nlohmann::json j = model_to_json(*m, 5);
        REQUIRE(j["schema"] == 1);
        REQUIRE(j["t"] == 5);
        StandardModel back = model_from_json(j);
        REQUIRE(verify_standard_model(h, back.r1, back.r2, back.s, 5));
    }
    SECTION("certificates carry kind tags") {
        REQUIRE(certificate_to_json(Cycle{{0, 1, 2}})["kind"] == "cycle");
        REQUIRE(certificate_to_json(ExhaustionProof{7, "x"})["kind"] == "exhausted");
        REQUIRE(certificate_to_json(ToughnessCut{{{1, 2}}, 3})["kind"] == "tough-cut");
        REQUIRE(certificate_to_json(HamPath{{0, 1}, 2})["kind"] == "ham-path");
    }
    SECTION("reduction trace") {
        Graph g = testutil::cube_graph();
        Cycle c{{0, 3, 2, 6, 5, 4}};  // 6-cycle leaving {1} and {7} outside
        ReductionTrace t = normalize_claim3(g, c, {{7}});
        ReductionTrace back = trace_from_json(trace_to_json(t));
        REQUIRE(back.original == t.original);
        REQUIRE(back.result == t.result);
        REQUIRE(back.cycle.vertices == t.cycle.vertices);
        REQUIRE(back.steps.size() == t.steps.size());
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            REQUIRE(back.steps[i].kind == t.steps[i].kind);
            REQUIRE(back.steps[i].id_map == t.steps[i].id_map);
        }
        // a lift through the deserialized trace still works
        Cycle z = longest_cycle(back.result);
        REQUIRE(lift_cycle(back, z).length() >= z.length());
    }
    SECTION("count report") {
        CountReport r{7, 34, 31, 31, 1.5};
        nlohmann::json j = report_to_json(r);
        REQUIRE(j["schema"] == 1);
        REQUIRE(j["k25_free"] == 31);
        REQUIRE(!j.contains("elapsed"));
        REQUIRE(report_to_json(r, true).contains("elapsed"));
    }
}

TEST_CASE("herschel witness check") {
    SECTION("the genuine graph passes") {
        REQUIRE(check_herschel_witness(herschel()).status == "pass");
    }
    SECTION("tampering with one edge is flagged as a connectivity failure") {
        Graph h = herschel();
        h.remove_edge(7, 0);  // drops a degree-3 vertex to degree 2
        VerificationItem it = check_herschel_witness(h);
        REQUIRE(it.status == "fail");
        REQUIRE(it.details.find("3-connected") != std::string::npos);
        REQUIRE(it.counterexamples == std::vector<std::string>{to_graph6(h)});
    }
    SECTION("a Hamiltonian substitute is flagged") {
        Graph w = wheel(10);
        REQUIRE(check_herschel_witness(w).status == "fail");
    }
}

TEST_CASE("verification matrix at quick level") {
    VerificationMatrix mx = verify_paper(VerifyLevel::Quick);
    REQUIRE(mx.items.size() == 10);
    std::vector<std::string> ids;
    for (const auto& it : mx.items) {
        CAPTURE(it.id, it.details);
        REQUIRE(it.status == "pass");
        REQUIRE(!it.details.empty());
        REQUIRE(it.counterexamples.empty());
        ids.push_back(it.id);
    }
    std::vector<std::string> want{"g-table",
                                  "k25-free-all-hamiltonian",
                                  "herschel-minimality",
                                  "herschel-k25-models",
                                  "gk-family",
                                  "petersen",
                                  "rooted-k22-outerplanarity",
                                  "outerplanar-ham-paths",
                                  "cycle-reductions",
                                  "prism-growth"};
    REQUIRE(ids == want);
    REQUIRE(mx.all_passed());
    nlohmann::json j = matrix_to_json(mx);
    REQUIRE(j["schema"] == 1);
    REQUIRE(j["items"].size() == 10);
}
