#pragma once

// Just enough of JSON Schema draft-07 to enforce the report schema: type
// (object/array/string/number/integer/boolean), required, properties,
// additionalProperties: false, and items.  Returns false with a reason
// instead of throwing so tests can assert both directions.

#include <json.hpp>

#include <string>

namespace testutil {

inline bool validates(const nlohmann::json& schema, const nlohmann::json& value,
                      std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };

  if (schema.contains("type")) {
    const std::string t = schema["type"];
    const bool ok = (t == "object" && value.is_object()) ||
                    (t == "array" && value.is_array()) ||
                    (t == "string" && value.is_string()) ||
                    (t == "number" && value.is_number()) ||
                    (t == "integer" && value.is_number_integer()) ||
                    (t == "boolean" && value.is_boolean());
    if (!ok) return fail("expected type " + t);
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    const bool sealed = schema.contains("additionalProperties") &&
                        schema["additionalProperties"] == false;
    for (const auto& [key, sub] : value.items()) {
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        if (!validates(schema["properties"][key], sub, why)) {
          if (why) *why = key + ": " + *why;
          return false;
        }
      } else if (sealed) {
        return fail("unexpected key " + key);
      }
    }
  }

  if (value.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!validates(schema["items"], value[i], why)) {
        if (why) *why = "item " + std::to_string(i) + ": " + *why;
        return false;
      }

  if (why) why->clear();
  return true;
}

}  // namespace testutil
