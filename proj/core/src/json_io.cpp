#include "chvatal/json_io.hpp"

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chvatal/errors.hpp"

namespace chvatal {

namespace {

Face face_from_json(const Json& node, const GroundSet& ground) {
    if (!node.is_array()) throw ParseError("a face must be an array of vertex labels");
    if (node.empty()) throw ParseError("a face must hold at least one vertex");
    Face face;
    for (const Json& item : node) {
        if (!item.is_string()) throw ParseError("a face entry must be a vertex label");
        const std::string label = item.get<std::string>();
        const int id = ground.id_of(label);
        if (id < 0) throw ParseError("unknown vertex label \"" + label + "\"");
        if (face.contains(id)) throw ParseError("vertex \"" + label + "\" repeats inside a face");
        face = face.with(id);
    }
    return face;
}

} // namespace

Family family_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("a family document must be a JSON object");
    for (const auto& item : doc.items())
        if (item.key() != "vertices" && item.key() != "faces")
            throw ParseError("unknown key \"" + item.key() + "\" in family document");
    if (!doc.contains("vertices")) throw ParseError("family document misses \"vertices\"");
    if (!doc.contains("faces")) throw ParseError("family document misses \"faces\"");

    const Json& vertices = doc.at("vertices");
    if (!vertices.is_array()) throw ParseError("\"vertices\" must be an array of labels");
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (const Json& item : vertices) {
        if (!item.is_string()) throw ParseError("every vertex must be a string label");
        labels.push_back(item.get<std::string>());
    }
    GroundSet ground;
    try {
        ground = GroundSet(std::move(labels));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }

    const Json& faces_node = doc.at("faces");
    if (!faces_node.is_array()) throw ParseError("\"faces\" must be an array of faces");
    std::vector<Face> faces;
    std::unordered_set<std::uint64_t> seen;
    faces.reserve(faces_node.size());
    for (const Json& node : faces_node) {
        const Face face = face_from_json(node, ground);
        if (!seen.insert(face.bits()).second) throw ParseError("duplicate face in family document");
        faces.push_back(face);
    }
    return Family(std::move(ground), std::move(faces));
}

Family family_from_string(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    return family_from_json(doc);
}

Json face_to_json(const Face& face, const GroundSet& ground) {
    Json out = Json::array();
    for (int v : face.vertices()) out.push_back(ground.label(v));
    return out;
}

Json faces_to_json(const Family& family) {
    Json out = Json::array();
    for (Face f : family) out.push_back(face_to_json(f, family.ground()));
    return out;
}

Json family_to_json(const Family& family) {
    Json out = Json::object();
    out["vertices"] = family.ground().labels();
    out["faces"] = faces_to_json(family);
    return out;
}

const std::string& family_json_schema() {
    static const std::string schema = [] {
        Json s = Json::object();
        s["$schema"] = "http://json-schema.org/draft-07/schema#";
        s["title"] = "family";
        s["type"] = "object";
        s["required"] = Json::array({"vertices", "faces"});
        s["additionalProperties"] = false;
        Json vertices = Json::object();
        vertices["type"] = "array";
        vertices["maxItems"] = kMaxVertices;
        vertices["uniqueItems"] = true;
        vertices["items"] = Json{{"type", "string"}, {"minLength", 1}};
        Json face = Json::object();
        face["type"] = "array";
        face["minItems"] = 1;
        face["uniqueItems"] = true;
        face["items"] = Json{{"type", "string"}};
        Json faces = Json::object();
        faces["type"] = "array";
        faces["items"] = std::move(face);
        s["properties"] = Json{{"vertices", std::move(vertices)}, {"faces", std::move(faces)}};
        return s.dump(2);
    }();
    return schema;
}

Json trace_to_json(const CompressionTrace& trace, const GroundSet& ground) {
    Json out = Json::array();
    for (const CompressionStep& step : trace) {
        Json entry = Json::object();
        entry["v"] = ground.label(step.ctx.v);
        entry["a"] = ground.label(step.ctx.a);
        entry["b"] = ground.label(step.ctx.b);
        entry["removed"] = faces_to_json(step.removed);
        entry["added"] = faces_to_json(step.added);
        entry["size"] = step.size_after;
        entry["total_size"] = step.total_size_after;
        out.push_back(std::move(entry));
    }
    return out;
}

Json compression_result_to_json(const CompressionResult& result, const Family& input,
                                bool include_trace) {
    const GroundSet& ground = input.ground();
    Json out = Json::object();
    out["witness"] = ground.label(result.witness);
    out["input_size"] = input.size();
    out["final_size"] = result.final_family.size();
    out["steps"] = result.trace.size();
    out["final_family"] = family_to_json(result.final_family);
    if (include_trace) out["trace"] = trace_to_json(result.trace, ground);
    return out;
}

Json certificate_to_json(const Certificate& certificate, const GroundSet& ground) {
    Json out = Json::object();
    out["witness"] = ground.label(certificate.witness);
    out["star_size"] = certificate.star_size;
    out["family_size"] = certificate.family_size;
    Json steps = Json::array();
    for (const CertificateStep& step : certificate.steps) {
        Json entry = Json::object();
        entry["rule"] = step.rule;
        entry["faces_in"] = faces_to_json(step.faces_in);
        entry["faces_out"] = faces_to_json(step.faces_out);
        steps.push_back(std::move(entry));
    }
    out["steps"] = std::move(steps);
    out["final_family"] = family_to_json(certificate.final_family);
    return out;
}

Json verdict_to_json(const Verdict& verdict, const GroundSet& ground) {
    Json out = Json::object();
    out["max_intersecting_size"] = verdict.max_intersecting_size;
    out["max_intersecting_witness"] = faces_to_json(verdict.max_intersecting_witness);
    out["max_star_size"] = verdict.max_star_size;
    if (verdict.max_star_vertex)
        out["max_star_vertex"] = ground.label(*verdict.max_star_vertex);
    else
        out["max_star_vertex"] = nullptr;
    out["holds"] = verdict.holds;
    return out;
}

Json report_to_json(const EnumerationReport& report) {
    Json out = Json::object();
    out["n"] = report.n;
    out["total"] = report.total;
    if (report.canonical)
        out["canonical"] = *report.canonical;
    else
        out["canonical"] = nullptr;
    out["verified"] = report.verified;
    Json violations = Json::array();
    for (const Complex& bad : report.violations)
        violations.push_back(family_to_json(bad.generators));
    out["violations"] = std::move(violations);
    out["wall_seconds"] = report.wall_seconds;
    return out;
}

} // namespace chvatal
