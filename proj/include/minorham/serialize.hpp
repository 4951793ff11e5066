// JSON forms for the artifact types that cross the CLI boundary: minor
// models, Hamiltonicity certificates, reduction traces, and count reports.
// Every object carries "schema": 1; graphs travel as graph6 strings.

#ifndef MINORHAM_SERIALIZE_HPP
#define MINORHAM_SERIALIZE_HPP

#include "json.hpp"
#include "minorham/enumerate.hpp"
#include "minorham/hamilton.hpp"
#include "minorham/minors.hpp"
#include "minorham/reductions.hpp"

namespace minorham {

inline nlohmann::json model_to_json(const StandardModel& m, int t) {
    return {{"schema", 1},
            {"t", t},
            {"R1", m.r1.members},
            {"R2", m.r2.members},
            {"S", m.s.members}};
}

inline StandardModel model_from_json(const nlohmann::json& j) {
    StandardModel m;
    m.r1.members = j.at("R1").get<std::vector<int>>();
    m.r2.members = j.at("R2").get<std::vector<int>>();
    m.s.members = j.at("S").get<std::vector<int>>();
    return m;
}

// Certificates carry a "kind" tag so a reader can dispatch without context.
inline nlohmann::json certificate_to_json(const Cycle& c) {
    return {{"schema", 1}, {"kind", "cycle"}, {"vertices", c.vertices}};
}

inline nlohmann::json certificate_to_json(const ExhaustionProof& p) {
    return {{"schema", 1}, {"kind", "exhausted"}, {"nodes", p.nodes}, {"graph", p.graph_code}};
}

inline nlohmann::json certificate_to_json(const ToughnessCut& tc) {
    return {{"schema", 1},
            {"kind", "tough-cut"},
            {"cut", tc.cut.members},
            {"components", tc.component_count}};
}

inline nlohmann::json certificate_to_json(const HamPath& p) {
    return {{"schema", 1},
            {"kind", "ham-path"},
            {"vertices", p.vertices},
            {"terminal_degree", p.terminal_degree}};
}

inline nlohmann::json trace_to_json(const ReductionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const ReductionStep& s : t.steps) {
        nlohmann::json js = {{"kind", step_kind_name(s.kind)}, {"id_map", s.id_map}};
        if (s.kind == ReductionStep::Kind::ContractComponent)
            js["component"] = s.component;
        else
            js["edge"] = {s.edge.first, s.edge.second};
        steps.push_back(std::move(js));
    }
    return {{"schema", 1},
            {"original", to_graph6(t.original)},
            {"cycle", t.cycle.vertices},
            {"steps", std::move(steps)},
            {"result", to_graph6(t.result)}};
}

inline ReductionTrace trace_from_json(const nlohmann::json& j) {
    ReductionTrace t;
    t.original = from_graph6(j.at("original").get<std::string>());
    t.cycle.vertices = j.at("cycle").get<std::vector<int>>();
    for (const auto& js : j.at("steps")) {
        ReductionStep s;
        std::string kind = js.at("kind").get<std::string>();
        if (kind == "contract-component") {
            s.kind = ReductionStep::Kind::ContractComponent;
            s.component = js.at("component").get<std::vector<int>>();
        } else if (kind == "contract-deg3-edge" || kind == "delete-edge") {
            s.kind = kind == "delete-edge" ? ReductionStep::Kind::DeleteEdge
                                           : ReductionStep::Kind::ContractDeg3Edge;
            auto e = js.at("edge").get<std::vector<int>>();
            if (e.size() != 2) throw std::invalid_argument("trace_from_json: bad edge");
            s.edge = {e[0], e[1]};
        } else {
            throw std::invalid_argument("trace_from_json: unknown step kind " + kind);
        }
        s.id_map = js.at("id_map").get<std::vector<int>>();
        t.steps.push_back(std::move(s));
    }
    t.result = from_graph6(j.at("result").get<std::string>());
    return t;
}

inline nlohmann::json report_to_json(const CountReport& r, bool with_timing = false) {
    nlohmann::json j = {{"schema", 1},
                        {"n", r.n},
                        {"total_3c_planar", r.total_3c_planar},
                        {"k25_free", r.k25_free},
                        {"k25_free_hamiltonian", r.k25_free_hamiltonian}};
    if (with_timing) j["elapsed"] = r.elapsed;
    return j;
}

}  // namespace minorham

#endif  // MINORHAM_SERIALIZE_HPP
