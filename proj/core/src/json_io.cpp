#include "hf/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hf/errors.hpp"

namespace hf {

namespace {

long long get_int(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw MalformedInput(std::string("module json is missing key '") + key +
                         "'");
  }
  const Json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw MalformedInput(std::string("module json key '") + key +
                         "' must be an integer");
  }
  return v.get<long long>();
}

}  // namespace

Json module_json(const std::string& manifold, const HFPlusModule& m) {
  Json j;
  j["manifold"] = manifold;
  j["d"] = m.d;
  Json towers = Json::array();
  for (const Tower& t : m.towers) {
    Json tj;
    tj["bottom"] = t.bottom;
    tj["length"] = t.length;
    tj["mult"] = t.mult;
    towers.push_back(std::move(tj));
  }
  j["towers"] = std::move(towers);
  j["odd_rank"] = m.odd_rank;
  return j;
}

HFPlusModule module_from_json(const Json& j, std::string* manifold) {
  if (!j.is_object()) {
    throw MalformedInput("module json must be an object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "manifold" && key != "d" && key != "towers" &&
        key != "odd_rank") {
      throw MalformedInput("module json has unknown key '" + key + "'");
    }
  }
  if (!j.contains("manifold") || !j.at("manifold").is_string()) {
    throw MalformedInput("module json needs a string 'manifold'");
  }
  if (manifold != nullptr) {
    *manifold = j.at("manifold").get<std::string>();
  }
  HFPlusModule m;
  m.d = get_int(j, "d");
  m.odd_rank = get_int(j, "odd_rank");
  if (m.odd_rank < 0) {
    throw MalformedInput("module json key 'odd_rank' must be non-negative");
  }
  if (!j.contains("towers") || !j.at("towers").is_array()) {
    throw MalformedInput("module json needs an array 'towers'");
  }
  for (const Json& tj : j.at("towers")) {
    if (!tj.is_object()) {
      throw MalformedInput("each tower must be an object");
    }
    for (const auto& [key, value] : tj.items()) {
      if (key != "bottom" && key != "length" && key != "mult") {
        throw MalformedInput("tower has unknown key '" + key + "'");
      }
    }
    Tower t;
    t.bottom = get_int(tj, "bottom");
    t.length = get_int(tj, "length");
    t.mult = get_int(tj, "mult");
    if (t.length < 1 || t.mult < 1) {
      throw MalformedInput("tower length and mult must be positive");
    }
    m.towers.push_back(t);
  }
  // Canonical order regardless of input order; merge exact duplicates.
  std::sort(m.towers.begin(), m.towers.end(),
            [](const Tower& a, const Tower& b) {
              if (a.bottom != b.bottom) return a.bottom < b.bottom;
              return a.length < b.length;
            });
  std::vector<Tower> merged;
  for (const Tower& t : m.towers) {
    if (!merged.empty() && merged.back().bottom == t.bottom &&
        merged.back().length == t.length) {
      merged.back().mult += t.mult;
    } else {
      merged.push_back(t);
    }
  }
  m.towers = std::move(merged);
  return m;
}

HFPlusModule module_from_text(const std::string& text, std::string* manifold) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("module json does not parse: ") +
                         e.what());
  }
  return module_from_json(j, manifold);
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hf
