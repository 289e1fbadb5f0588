// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal structural JSON-schema checker for the shipped schema files:
// understands type, required, properties, items, and enum -- exactly the
// vocabulary the schemas use.

#ifndef TREECENSUS_TESTS_SCHEMA_CHECK_HPP
#define TREECENSUS_TESTS_SCHEMA_CHECK_HPP

#include <string>

#include <json.hpp>

namespace schema_check {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  return false;
}

inline bool validate(const nlohmann::json& value, const nlohmann::json& schema, std::string* why) {
  if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>())) {
    *why = "expected type " + schema["type"].get<std::string>() + " got " + value.dump();
    return false;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == value) hit = true;
    if (!hit) {
      *why = "value " + value.dump() + " not in enum";
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          *why = "missing required key " + key.get<std::string>();
          return false;
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (value.contains(key) && !validate(value[key], sub, why)) {
          *why = "at ." + key + ": " + *why;
          return false;
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < value.size(); ++i) {
      if (!validate(value[i], schema["items"], why)) {
        *why = "at [" + std::to_string(i) + "]: " + *why;
        return false;
      }
    }
  }
  return true;
}

}  // namespace schema_check

#endif  // TREECENSUS_TESTS_SCHEMA_CHECK_HPP
