#pragma once

// Validator for the JSON-Schema subset used by docs/report.schema.json:
// $ref (local), oneOf, type (string or list), const, enum, required,
// properties, items.  Test-only.

#include <json.hpp>
#include <string>

namespace lpr_test {

using nlohmann::json;

inline const json& resolve_ref(const json& root, const std::string& ref) {
  if (ref.rfind("#/", 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
  const json* node = &root;
  std::size_t pos = 2;
  while (pos < ref.size()) {
    const auto next = ref.find('/', pos);
    const std::string key = ref.substr(pos, next == std::string::npos ? next : next - pos);
    node = &node->at(key);
    pos = next == std::string::npos ? ref.size() : next + 1;
  }
  return *node;
}

inline bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "null") return value.is_null();
  throw std::runtime_error("unsupported schema type: " + type);
}

inline std::string validate_node(const json& root, const json& schema, const json& value,
                                 const std::string& where) {
  if (schema.contains("$ref"))
    return validate_node(root, resolve_ref(root, schema["$ref"].get<std::string>()), value, where);

  if (schema.contains("oneOf")) {
    std::size_t matches = 0;
    for (const auto& option : schema["oneOf"])
      if (validate_node(root, option, value, where).empty()) ++matches;
    if (matches != 1)
      return where + ": expected exactly one oneOf branch to match, got " +
             std::to_string(matches);
    return {};
  }

  if (schema.contains("const") && value != schema["const"])
    return where + ": value does not match const " + schema["const"].dump();

  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& candidate : schema["enum"]) found = found || candidate == value;
    if (!found) return where + ": value " + value.dump() + " not in enum";
  }

  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else {
      for (const auto& option : t) ok = ok || type_matches(option.get<std::string>(), value);
    }
    if (!ok) return where + ": type mismatch for " + value.dump().substr(0, 40);
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return where + ": missing required key '" + key.get<std::string>() + "'";
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (!value.contains(key)) continue;
        const auto err = validate_node(root, sub, value.at(key), where + "/" + key);
        if (!err.empty()) return err;
      }
    }
  }

  if (value.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& item : value) {
      const auto err =
          validate_node(root, schema["items"], item, where + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
      ++i;
    }
  }
  return {};
}

// Empty string when the report validates against the schema document.
inline std::string validate_report(const json& schema_root, const json& report) {
  return validate_node(schema_root, schema_root, report, "report");
}

}  // namespace lpr_test
