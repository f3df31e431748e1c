// A small JSON Schema subset validator: type, required, properties, additionalProperties (boolean),
// items, minimum, pattern and local "#/definitions/..." references. Enough for the report schema.

#pragma once

#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

namespace schema {

using nlohmann::json;

inline bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  return false;
}

class Validator {
 public:
  explicit Validator(json root) : root_(std::move(root)) {}

  std::vector<std::string> validate(const json& doc) {
    errors_.clear();
    check(doc, root_, "$");
    return errors_;
  }

 private:
  const json& resolve(const json& s) const {
    if (!s.contains("$ref")) return s;
    const std::string ref = s["$ref"].get<std::string>();
    return root_.at(json::json_pointer(ref.substr(1)));
  }

  void fail(const std::string& where, const std::string& what) { errors_.push_back(where + ": " + what); }

  void check(const json& v, const json& raw, const std::string& where) {
    const json& s = resolve(raw);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) return fail(where, "expected type " + s["type"].dump());
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
      fail(where, "below minimum");
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
      fail(where, "does not match " + s["pattern"].get<std::string>());
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) fail(where, "missing " + k.get<std::string>());
      }
      const json props = s.value("properties", json::object());
      for (const auto& [k, child] : v.items()) {
        if (props.contains(k)) {
          check(child, props[k], where + "." + k);
        } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
          fail(where, "unexpected key " + k);
        }
      }
    }
    if (v.is_array() && s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], where + "[" + std::to_string(i) + "]");
    }
  }

  json root_;
  std::vector<std::string> errors_;
};

}  // namespace schema
