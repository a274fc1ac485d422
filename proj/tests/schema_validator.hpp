#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace testutil {

// Small draft-07 subset: type (string or list), required, properties, items,
// enum, additionalProperties:false, oneOf, $ref into #/definitions.  Enough to
// validate the run-report schema without pulling in a validator dependency.
class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::json schema) : root_(std::move(schema)) {}

  bool validate(const nlohmann::json& value,
                std::vector<std::string>* errors = nullptr) const {
    std::vector<std::string> errs;
    check(root_, value, "$", errs);
    if (errors) *errors = errs;
    return errs.empty();
  }

 private:
  nlohmann::json root_;

  const nlohmann::json& resolve(const nlohmann::json& node) const {
    if (node.is_object() && node.contains("$ref")) {
      const std::string ref = node.at("$ref").get<std::string>();
      const std::string prefix = "#/definitions/";
      if (ref.rfind(prefix, 0) != 0) {
        throw std::runtime_error("unsupported $ref: " + ref);
      }
      return root_.at("definitions").at(ref.substr(prefix.size()));
    }
    return node;
  }

  static bool type_matches(const std::string& t, const nlohmann::json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void check(const nlohmann::json& schema_in, const nlohmann::json& value,
             const std::string& path, std::vector<std::string>& errs) const {
    const nlohmann::json& schema = resolve(schema_in);

    if (schema.contains("oneOf")) {
      int matched = 0;
      for (const auto& alt : schema.at("oneOf")) {
        std::vector<std::string> sub;
        check(alt, value, path, sub);
        if (sub.empty()) ++matched;
      }
      if (matched != 1) {
        errs.push_back(path + ": oneOf matched " + std::to_string(matched) +
                       " alternatives");
      }
      return;
    }

    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& e : schema.at("enum")) {
        if (e == value) {
          found = true;
          break;
        }
      }
      if (!found) errs.push_back(path + ": value not in enum");
    }

    if (schema.contains("type")) {
      const nlohmann::json& t = schema.at("type");
      bool ok = false;
      if (t.is_string()) {
        ok = type_matches(t.get<std::string>(), value);
      } else {
        for (const auto& alt : t) {
          ok = ok || type_matches(alt.get<std::string>(), value);
        }
      }
      if (!ok) {
        errs.push_back(path + ": wrong type, got " +
                       std::string(value.type_name()));
        return;
      }
    }

    if (value.is_object()) {
      if (schema.contains("required")) {
        for (const auto& key : schema.at("required")) {
          if (!value.contains(key.get<std::string>())) {
            errs.push_back(path + ": missing required key " +
                           key.get<std::string>());
          }
        }
      }
      const bool closed = schema.contains("additionalProperties") &&
                          schema.at("additionalProperties").is_boolean() &&
                          !schema.at("additionalProperties").get<bool>();
      for (auto it = value.begin(); it != value.end(); ++it) {
        const bool declared = schema.contains("properties") &&
                              schema.at("properties").contains(it.key());
        if (declared) {
          check(schema.at("properties").at(it.key()), it.value(),
                path + "." + it.key(), errs);
        } else if (closed) {
          errs.push_back(path + ": unexpected key " + it.key());
        }
      }
    }

    if (value.is_array() && schema.contains("items")) {
      std::size_t i = 0;
      for (const auto& el : value) {
        check(schema.at("items"), el, path + "[" + std::to_string(i) + "]",
              errs);
        ++i;
      }
    }
  }
};

}  // namespace testutil
