#pragma once

// JSON forms for certificates, deletion reports and suite reports.
// Field names and ordering are fixed; wall-clock timings stay in the
// human-readable output so identical seeds give identical bytes.

#include <nlohmann/json.hpp>

#include "meg/dynamic.hpp"
#include "meg/generators.hpp"
#include "meg/solver.hpp"
#include "meg/suites.hpp"

namespace meg {

using Json = nlohmann::ordered_json;

inline Json to_json(const EdgeId& e) { return Json::array({e.a, e.b}); }

inline Json to_json(const Prediction& p) {
    Json j;
    switch (p.kind) {
        case PredictionKind::exact: j["kind"] = "exact"; break;
        case PredictionKind::interval: j["kind"] = "interval"; break;
        default: j["kind"] = "not-covered"; break;
    }
    j["value"] = p.kind == PredictionKind::exact ? Json(p.value) : Json(nullptr);
    j["lower"] = p.kind == PredictionKind::not_covered ? Json(nullptr) : Json(p.lower);
    j["upper"] = p.kind == PredictionKind::not_covered ? Json(nullptr) : Json(p.upper);
    j["case"] = p.case_label;
    return j;
}

inline Json to_json(const DeletionReport& r) {
    Json j;
    j["graph"] = r.graph_id;
    if (r.deleted.size() == 1) {
        j["edge"] = to_json(r.deleted.front());
    } else {
        Json arr = Json::array();
        for (const EdgeId& e : r.deleted) arr.push_back(to_json(e));
        j["edge"] = arr;
    }
    j["meg_before"] = r.meg_before;
    j["meg_after"] = r.meg_after ? Json(*r.meg_after) : Json(nullptr);
    j["prediction"] = to_json(r.prediction);
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline Json certificate_json(const Graph& g, const MegCertificate& cert) {
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["meg"] = cert.size;
    j["set"] = cert.vertex_set;
    j["forced"] = cert.forced;
    j["optimal"] = cert.optimal;
    Json wit = Json::array();
    for (const Witness& w : cert.witnesses) {
        Json entry;
        entry["edge"] = to_json(w.edge);
        entry["pair"] = Json::array({w.u, w.v});
        wit.push_back(entry);
    }
    j["witnesses"] = wit;
    Json notes = Json::array();
    for (const auto& comp : connected_components(g)) {
        Subgraph sub = induced_subgraph(g, comp);
        if (sub.graph.vertex_count() == 2 && sub.graph.edge_count() == 1)
            notes.push_back("component {" + std::to_string(comp[0]) + "," + std::to_string(comp[1]) +
                            "} is a single edge; both endpoints are forced vacuously");
    }
    j["notes"] = notes;
    return j;
}

inline Json to_json(const TheoremReport& rep) {
    Json j;
    j["suite"] = rep.id;
    j["instances"] = rep.instances;
    j["matches"] = rep.matches;
    j["within_bounds"] = rep.within_bounds;
    j["not_covered"] = rep.not_covered;
    j["skipped"] = rep.skipped;
    j["violations"] = rep.violations;
    j["truncated"] = rep.truncated;
    Json cases;
    for (const auto& [label, count] : rep.case_counts) cases[label] = count;
    j["case_counts"] = cases;
    j["notes"] = rep.notes;
    if (!rep.details.empty()) {
        Json det = Json::array();
        for (const DeletionReport& r : rep.details) det.push_back(to_json(r));
        j["reports"] = det;
    }
    return j;
}

inline Json to_json(const GenTag& tag, std::uint64_t seed) {
    Json j;
    j["family"] = tag.family;
    for (const auto& [k, v] : tag.params) j[k] = v;
    if (!tag.designated.empty()) {
        Json arr = Json::array();
        for (const EdgeId& e : tag.designated) arr.push_back(to_json(e));
        j["designated"] = arr;
    }
    j["seed"] = seed;
    return j;
}

}  // namespace meg
