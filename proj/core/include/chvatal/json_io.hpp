#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "chvatal/enumerate.hpp"
#include "chvatal/family.hpp"
#include "chvatal/oracle.hpp"
#include "chvatal/rank3.hpp"
#include "chvatal/transform.hpp"

namespace chvatal {

/// All documents are emitted with stable key order.
using Json = nlohmann::ordered_json;

/// Canonical family document:
///   {"vertices": ["a","b","c"], "faces": [["a","b"], ["b","c"]]}
/// Vertices are the ground labels; faces are arrays of labels. Parsing is
/// strict: unknown keys, unknown labels, empty faces, duplicate labels
/// inside a face, and duplicate faces are all ParseErrors.
Family family_from_json(const Json& doc);
Family family_from_string(const std::string& text);

Json family_to_json(const Family& family);

/// A face as an array of labels in id order.
Json face_to_json(const Face& face, const GroundSet& ground);
/// A list of faces (no surrounding ground-set document).
Json faces_to_json(const Family& family);

/// JSON Schema for the family document, served by the CLI's --schema flag.
const std::string& family_json_schema();

/// {"v","a","b","removed","added","size","total_size"} per step.
Json trace_to_json(const CompressionTrace& trace, const GroundSet& ground);

Json compression_result_to_json(const CompressionResult& result,
                                const Family& input, bool include_trace);

/// {"witness","star_size","family_size","steps":[{rule,faces_in,faces_out}]}
Json certificate_to_json(const Certificate& certificate, const GroundSet& ground);

Json verdict_to_json(const Verdict& verdict, const GroundSet& ground);

/// Violations are serialized as generator family documents; feeding one
/// back through the oracle reproduces the complex.
Json report_to_json(const EnumerationReport& report);

} // namespace chvatal
