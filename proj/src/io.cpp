#include "forestcol/io.hpp"

#include <json.hpp>

namespace forestcol {

namespace {

using ordered_json = nlohmann::ordered_json;

int require_int(const nlohmann::json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ParseError(std::string("missing or non-integer field '") + key + "'");
    return obj[key].get<int>();
}

}  // namespace

ParsedGraph parse_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("params"))
        throw ParseError("document must be an object with a 'params' field");

    int d1 = require_int(doc["params"], "d1");
    int d2 = require_int(doc["params"], "d2");
    Params params = [&] {
        try {
            return Params(d1, d2);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();

    std::vector<VertexSpec> vertices;
    if (doc.contains("vertices")) {
        if (!doc["vertices"].is_array()) throw ParseError("'vertices' must be an array");
        for (const auto& v : doc["vertices"]) {
            VertexSpec spec;
            spec.id = require_int(v, "id");
            spec.w1 = v.contains("w1") ? require_int(v, "w1") : 0;
            spec.w2 = v.contains("w2") ? require_int(v, "w2") : 0;
            if (spec.w1 < 0 || spec.w2 < 0) throw ParseError("negative weight");
            vertices.push_back(spec);
        }
    }
    std::vector<EdgeRec> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
        for (const auto& e : doc["edges"]) {
            EdgeRec rec;
            rec.u = require_int(e, "u");
            rec.v = require_int(e, "v");
            rec.multiplicity = e.contains("multiplicity") ? require_int(e, "multiplicity") : 1;
            if (rec.multiplicity < 1) throw ParseError("edge multiplicity must be >= 1");
            edges.push_back(rec);
        }
    }

    NormalizationReport report;
    try {
        WeightedMultigraph g(params, std::move(vertices), std::move(edges), &report);
        return {std::move(g), std::move(report)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_graph(const WeightedMultigraph& g) {
    ordered_json doc;
    doc["params"] = {{"d1", g.params().d1()}, {"d2", g.params().d2()}};
    doc["vertices"] = ordered_json::array();
    for (VertexId id : g.vertices()) {
        ordered_json v;
        v["id"] = id;
        v["w1"] = g.weight(id, 1);
        v["w2"] = g.weight(id, 2);
        doc["vertices"].push_back(v);
    }
    doc["edges"] = ordered_json::array();
    for (const EdgeRec& e : g.edges()) {
        ordered_json rec;
        rec["u"] = e.u;
        rec["v"] = e.v;
        rec["multiplicity"] = e.multiplicity;
        doc["edges"].push_back(rec);
    }
    return doc.dump(2) + "\n";
}

std::string serialize_coloring(const Coloring& c, const CaseTrace* trace) {
    ordered_json doc;
    doc["assignments"] = ordered_json::array();
    for (const auto& [id, cls] : c.assignment) {
        ordered_json a;
        a["id"] = id;
        a["class"] = cls;
        doc["assignments"].push_back(a);
    }
    if (trace) {
        doc["trace"] = ordered_json::array();
        for (const CaseRecord& r : trace->records) {
            ordered_json rec;
            rec["case"] = r.case_id;
            rec["depth"] = r.depth;
            rec["size"] = r.recursion_size;
            rec["flips"] = r.flips;
            rec["detail"] = r.detail;
            doc["trace"].push_back(rec);
        }
    }
    return doc.dump(2) + "\n";
}

Coloring parse_coloring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed coloring: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("assignments") || !doc["assignments"].is_array())
        throw ParseError("coloring must have an 'assignments' array");
    Coloring c;
    for (const auto& a : doc["assignments"]) {
        int id = require_int(a, "id");
        int cls = require_int(a, "class");
        if (cls != 1 && cls != 2) throw ParseError("class must be 1 or 2");
        if (c.has(id)) throw ParseError("duplicate assignment for vertex " + std::to_string(id));
        c.set(id, cls);
    }
    return c;
}

}  // namespace forestcol
