#pragma once

#include <string>
#include <vector>

#include "zakfiber/rep.hpp"

/// JSON / CSV surface. All emitted files carry "schema": "zakfiber/1";
/// inputs may omit the tag but are rejected if they carry a different one.
/// Complex numbers are [re, im] pairs; element order is the documented
/// group element order. Malformed input throws SchemaError; mathematically
/// invalid input (a non-group table, a nonabelian dual request, broken
/// representation relations) surfaces as ContractError from the library.
namespace zakfiber::io {

inline constexpr const char* kSchemaTag = "zakfiber/1";

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Group spec:
///   {"kind":"abelian","invariants":[4,2],"weight":1.0}
///   {"kind":"dihedral","n":4,"weight":1.0}
///   {"kind":"axb","p":7,"q":3,"weight":1.0}
///   {"kind":"heisenberg","p":3,"weight":1.0}
///   {"kind":"table","mul":[[0,1],[1,0]],"weight":1.0}
/// weight is optional and defaults to 1.
GroupPtr group_from_json(const std::string& json_text);

struct SubgroupSpec {
    std::vector<int> generators;
    double weight = 1.0;
};

/// {"generators":[2],"weight":1.0} (weight optional).
SubgroupSpec subgroup_from_json(const std::string& json_text);

/// {"group":<spec object or path string>,"values":[[re,im],...]}.
/// A path string is resolved relative to base_dir.
GroupFunction function_from_json(const std::string& json_text, const std::string& base_dir);
GroupFunction function_from_file(const std::string& path);

/// {"group":<abelian spec object or path string>,"dim":2,
///  "generator_images":[ [[[re,im],[re,im]],[[re,im],[re,im]]] , ... ]}
/// one d x d matrix (rows of [re,im] pairs) per recorded basis element.
UnitaryRep rep_from_json(const std::string& json_text, const std::string& base_dir);
UnitaryRep rep_from_file(const std::string& path);

/// group_ref: inline spec JSON (anything starting with '{') is embedded as
/// an object; any other string is embedded verbatim as a path reference.
std::string function_to_json(const GroupFunction& f, const std::string& group_ref);

std::string zak_to_json(const ZakArray& Z);
std::string fiber_to_json(const FiberArray& F);
std::string frame_report_to_json(const FrameReport& rep, const std::string& mode);
std::string per_fiber_csv(const FrameReport& rep);
std::string range_report_to_json(const RangeFunction& J);

} // namespace zakfiber::io
