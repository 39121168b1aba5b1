// JSON serialization of verdicts, block data, oracle reports and catalog
// records, plus a small structural validator for the shipped schema.
#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>

#include "msalg/algebra.hpp"
#include "msalg/criteria.hpp"
#include "msalg/oracle.hpp"
#include "msalg/structure.hpp"

namespace msalg {

using json = nlohmann::json;

inline json field_json(const std::optional<std::pair<std::uint64_t, std::uint32_t>>& pk) {
  if (!pk) return nullptr;
  return json{{"p", pk->first}, {"k", pk->second}};
}

inline json blocks_json(const BlockSummary& b) {
  json fd = json::array();
  for (auto f : b.full_defect) fd.push_back(f != 0);
  return json{{"traces", b.traces}, {"dims", b.dims}, {"full_defect", fd}};
}

inline json verdict_json(const MsVerdict& v) {
  json j{
      {"subject", subject_name(v.subject)},
      {"group", v.group_label},
      {"order", v.group_order},
      {"p", v.p},
      {"field", field_json(v.field_pk)},
      {"is_ms", v.is_ms},
      {"reason", reason_name(v.reason)},
      {"seed", v.seed},
      {"version", kVersion},
  };
  if (v.zero_sum_witness) {
    j["witness"] = json{{"type", "zero_sum"}, {"coefficients", v.zero_sum_witness->coefficients}};
  } else if (v.subset_witness) {
    j["witness"] = json{{"type", "subset"}, {"indices", *v.subset_witness}};
  } else if (v.sylow_witness) {
    j["witness"] = json{{"type", "sylow"},
                        {"p_elements", v.sylow_witness->p_element_count},
                        {"sylow_order", v.sylow_witness->sylow_order}};
  } else {
    j["witness"] = nullptr;
  }
  if (v.degrees) {
    j["degrees"] = *v.degrees;
    j["degrees_on_quotient"] = v.degrees_on_quotient;
    if (v.degrees_on_quotient) j["quotient_order"] = v.quotient_order;
  }
  if (v.blocks) j["blocks"] = blocks_json(*v.blocks);
  return j;
}

template <class Code>
inline json alg_elem_json(const AlgElem<Code>& e) {
  const auto& F = *e.alg.field;
  json coeffs = json::array();
  for (Code c : e.c) coeffs.push_back(F.digits(c));
  json modulus = F.modulus();
  return json{{"group", e.alg.group->label},
              {"field", {{"p", F.p()}, {"k", F.k()}, {"modulus", modulus}}},
              {"coeffs", coeffs}};
}

inline json checks_json(const std::vector<ImplicationCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back(json{{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

inline json implication_json(const ImplicationReport& r) {
  return json{{"all_pass", r.all_pass}, {"checks", checks_json(r.checks)}};
}

inline json cross_checks_json(const std::vector<CrossCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back(json{{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

inline json cross_report_json(const CrossReport& r) {
  return json{{"all_pass", r.all_pass},
              {"idempotents_seen", r.idempotents_seen},
              {"checks", cross_checks_json(r.checks)}};
}

template <class Code>
inline json idempotent_report_json(const IdempotentReport<Code>& r) {
  return json{{"element", alg_elem_json(r.element)},
              {"trace", r.element.alg.field->digits(r.trace_value)},
              {"central", r.central},
              {"nonzero", r.nonzero}};
}

inline std::string json_hash(const json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
  return buf;
}

// ---------------------------------------------------------------------------
// Minimal JSON-schema checker covering the subset the shipped schema uses:
// type, enum, required, properties, items, oneOf, $ref into #/$defs,
// additionalProperties as a boolean.

namespace detail {

inline bool schema_type_matches(const json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
  if (t == "number") return doc.is_number();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  return false;
}

inline bool schema_validate_node(const json& doc, const json& schema, const json& defs, std::string& err);

inline bool schema_validate_ref(const json& doc, const std::string& ref, const json& defs, std::string& err) {
  const std::string prefix = "#/$defs/";
  if (ref.rfind(prefix, 0) != 0) {
    err = "unsupported $ref " + ref;
    return false;
  }
  std::string name = ref.substr(prefix.size());
  if (!defs.contains(name)) {
    err = "missing $defs entry " + name;
    return false;
  }
  return schema_validate_node(doc, defs.at(name), defs, err);
}

inline bool schema_validate_node(const json& doc, const json& schema, const json& defs, std::string& err) {
  if (schema.contains("$ref")) return schema_validate_ref(doc, schema.at("$ref").get<std::string>(), defs, err);
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& sub : schema.at("oneOf")) {
      std::string scratch;
      if (schema_validate_node(doc, sub, defs, scratch)) ++hits;
    }
    if (hits != 1) {
      err = "oneOf matched " + std::to_string(hits) + " branches";
      return false;
    }
    return true;
  }
  if (schema.contains("type")) {
    const json& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) {
      ok = schema_type_matches(doc, t.get<std::string>());
    } else {
      for (const auto& alt : t) ok |= schema_type_matches(doc, alt.get<std::string>());
    }
    if (!ok) {
      err = "type mismatch (wanted " + t.dump() + ")";
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema.at("enum")) ok |= (v == doc);
    if (!ok) {
      err = "value " + doc.dump() + " not in enum";
      return false;
    }
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!doc.contains(key.get<std::string>())) {
          err = "missing required key " + key.get<std::string>();
          return false;
        }
      }
    }
    if (schema.contains("properties")) {
      for (auto it = schema.at("properties").begin(); it != schema.at("properties").end(); ++it) {
        if (doc.contains(it.key())) {
          if (!schema_validate_node(doc.at(it.key()), it.value(), defs, err)) {
            err = it.key() + ": " + err;
            return false;
          }
        }
      }
      if (schema.contains("additionalProperties") && schema.at("additionalProperties").is_boolean() &&
          !schema.at("additionalProperties").get<bool>()) {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
          if (!schema.at("properties").contains(it.key())) {
            err = "unexpected key " + it.key();
            return false;
          }
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (const auto& item : doc) {
      if (!schema_validate_node(item, schema.at("items"), defs, err)) {
        err = "items: " + err;
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

inline bool schema_validate(const json& doc, const json& schema, std::string& err) {
  json defs = schema.contains("$defs") ? schema.at("$defs") : json::object();
  return detail::schema_validate_node(doc, schema, defs, err);
}

}  // namespace msalg
