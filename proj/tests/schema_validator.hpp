#pragma once

#include <string>
#include <vector>

#include "json.hpp"

// Minimal JSON-Schema (draft-07 subset) checker covering exactly the
// features report.schema.json uses: type (string or list), enum,
// properties, required, items, additionalProperties (bool or schema).
namespace schema {

inline bool type_matches(const std::string &type, const nlohmann::json &value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "null") return value.is_null();
    return false;
}

inline void validate(const nlohmann::json &schema, const nlohmann::json &value,
                     const std::string &path, std::vector<std::string> &errors) {
    if (schema.contains("type")) {
        const auto &type = schema["type"];
        bool ok = false;
        if (type.is_array()) {
            for (const auto &option : type) ok = ok || type_matches(option.get<std::string>(), value);
        } else {
            ok = type_matches(type.get<std::string>(), value);
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch (" + value.type_name() + ")");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto &option : schema["enum"]) ok = ok || option == value;
        if (!ok) errors.push_back(path + ": value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto &name : schema["required"]) {
                if (!value.contains(name.get<std::string>()))
                    errors.push_back(path + ": missing required key '" + name.get<std::string>() +
                                     "'");
            }
        }
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (schema.contains("properties") && schema["properties"].contains(it.key())) {
                validate(schema["properties"][it.key()], it.value(), path + "." + it.key(), errors);
            } else if (schema.contains("additionalProperties")) {
                const auto &extra = schema["additionalProperties"];
                if (extra.is_boolean()) {
                    if (!extra.get<bool>())
                        errors.push_back(path + ": unexpected key '" + it.key() + "'");
                } else {
                    validate(extra, it.value(), path + "." + it.key(), errors);
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (size_t i = 0; i < value.size(); ++i)
            validate(schema["items"], value[i], path + "[" + std::to_string(i) + "]", errors);
    }
}

inline std::vector<std::string> validate(const nlohmann::json &schema, const nlohmann::json &value) {
    std::vector<std::string> errors;
    validate(schema, value, "$", errors);
    return errors;
}

} // namespace schema
