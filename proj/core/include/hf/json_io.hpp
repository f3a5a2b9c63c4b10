#pragma once

#include <string>

#include <json.hpp>

#include "hf/gradedroot.hpp"

namespace hf {

// Order-preserving json so serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

// {"manifold": ..., "d": ..., "towers": [{"bottom","length","mult"}, ...],
//  "odd_rank": ...} with towers in the module's canonical order.
Json module_json(const std::string& manifold, const HFPlusModule& m);

// Inverse of module_json.  Throws MalformedInput on any schema violation
// (missing or extra keys, wrong types, non-positive length/mult).  When
// manifold is non-null the label is written through it.
HFPlusModule module_from_json(const Json& j, std::string* manifold = nullptr);

// Parse raw text and convert; json syntax errors become MalformedInput.
HFPlusModule module_from_text(const std::string& text,
                              std::string* manifold = nullptr);

// Canonical dump: two-space indent, trailing newline.
std::string json_dump(const Json& j);

}  // namespace hf
