#pragma once

// Canonical JSON for pmfs, structures and reports. Exact probabilities are
// "num/den" strings; key order is fixed by nlohmann::ordered_json.

#include "json.hpp"
#include "rstir/oracles.hpp"
#include "rstir/pmf.hpp"
#include "rstir/stats.hpp"
#include "rstir/structures.hpp"

#include <string>

namespace rstir {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "rstir/1";

inline Json params_json(const ParamList& ps) {
    Json j = Json::object();
    for (const auto& [k, v] : ps) j[k] = v;
    return j;
}

template <class Point, class Prob>
Json to_json(const Pmf<Point, Prob>& p) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["family"] = p.family;
    j["params"] = params_json(p.params);
    j["mode"] = Pmf<Point, Prob>::exact ? "exact" : "float";
    Json sup = Json::array(), pr = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        sup.push_back(p.support[i]);
        if constexpr (std::is_same_v<Prob, Rational>) pr.push_back(p.probs[i].str());
        else pr.push_back(p.probs[i]);
    }
    j["support"] = sup;
    j["probs"] = pr;
    return j;
}

inline Json to_json(const ColoredPermutation& p) {
    Json cyc = Json::array();
    for (const auto& c : p.cycles) cyc.push_back(Json{{"color", c.color}, {"elems", c.elems}});
    return Json{{"n", p.n}, {"d", p.d}, {"cycles", cyc}};
}

inline Json to_json(const IncompletePermutation& p) {
    return Json{{"n", p.n}, {"red", p.red}, {"cycles", p.cycles}};
}

inline Json to_json(const IncompletePartition& p) { return Json{{"n", p.n}, {"red", p.red}, {"blocks", p.blocks}}; }

inline Json to_json(const IncompleteComposition& c) { return Json{{"b", c.b}}; }

inline Json to_json(const HoppeForest& f) {
    // roots as -1..-d, node l at index l-1
    std::vector<long> par(f.parent.begin() + 1, f.parent.end());
    return Json{{"n", f.n}, {"d", f.d}, {"parent", par}};
}

inline Json to_json(const EnumerationReport& r) {
    Json j = to_json(r.to_vector_pmf());
    j["object_count"] = r.object_count;
    j["total_weight"] = r.total_weight.str();
    return j;
}

inline Json to_json(const GofReport& g) {
    Json j;
    j["test"] = g.test;
    j["statistic"] = g.statistic;
    j["threshold"] = g.threshold;
    j["pass"] = g.pass;
    j["sample_size"] = g.sample_size;
    j["params"] = params_json(g.params);
    j["seed"] = g.seed;
    j["stream_base"] = g.stream_base;
    if (!g.note.empty()) j["note"] = g.note;
    return j;
}

// Fixed-format dump; doubles go through nlohmann's shortest round-trip printer.
inline std::string dump(const Json& j) { return j.dump(); }

}  // namespace rstir
