#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "binact/catalog.hpp"
#include "binact/dword.hpp"
#include "binact/group.hpp"
#include "binact/mat2.hpp"

namespace binact {

using Json = nlohmann::ordered_json;

/// Scenario/report semantic errors (bad references, invalid structures).
/// Malformed JSON text keeps nlohmann's own parse_error type.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw validation_error(e.what());
    }
  }
  throw validation_error("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Json rational_to_json(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1 && num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max())
    return Json(num.convert_to<long long>());
  return Json(to_string(r));
}

/// Matrix literal [[a,b],[c,d]] with integer or "p/q" entries.
inline Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2)
    throw validation_error("matrix literal must be [[a,b],[c,d]], got " + j.dump());
  return Mat2{rational_from_json(j[0][0]), rational_from_json(j[0][1]),
              rational_from_json(j[1][0]), rational_from_json(j[1][1])};
}

inline Json mat2_to_json(const Mat2& m) {
  return Json::array({Json::array({rational_to_json(m.a), rational_to_json(m.b)}),
                      Json::array({rational_to_json(m.c), rational_to_json(m.d)})});
}

/// Group input: a catalog name, {"elements": [...], "table": [[...]]}, or
/// {"permutation_generators": [[one-line images over 1..m]]}.
inline FiniteGroup group_from_json(const Json& j) {
  try {
    if (j.is_string()) return catalog_group(j.get<std::string>());
    if (!j.is_object()) throw validation_error("group must be a name or an object");
    if (j.contains("permutation_generators")) {
      std::vector<std::vector<int>> gens;
      for (const auto& row : j.at("permutation_generators")) gens.push_back(row.get<std::vector<int>>());
      return FiniteGroup::from_permutation_generators(gens);
    }
    if (j.contains("elements") && j.contains("table")) {
      auto names = j.at("elements").get<std::vector<std::string>>();
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      return FiniteGroup::from_table(std::move(names), table);
    }
    throw validation_error(
        "group object needs either permutation_generators or elements+table");
  } catch (const std::domain_error& e) {
    throw validation_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw validation_error(e.what());
  } catch (const Json::exception& e) {
    throw validation_error(std::string("group: ") + e.what());
  }
}

inline Json int_set_to_json(const FiniteGroup& g, const std::set<int>& s) {
  Json out = Json::array();
  for (int m : s) out.push_back(g.name(m));
  return out;
}

inline Json members_to_json(const FiniteGroup& g, const std::vector<int>& members) {
  Json out = Json::array();
  for (int m : members) out.push_back(g.name(m));
  return out;
}

/// Plain-text rendering of a report: same internal model as the structured
/// form, indented key/value lines.
inline void render_text(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_structured())) {
        out += pad + key + ":\n";
        render_text(value, out, indent + 2);
      } else if (value.is_array()) {
        out += pad + key + ": " + value.dump() + "\n";
      } else if (value.is_string()) {
        out += pad + key + ": " + value.get<std::string>() + "\n";
      } else {
        out += pad + key + ": " + value.dump() + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      out += pad + "-\n";
      render_text(item, out, indent + 2);
    }
  } else {
    out += pad + j.dump() + "\n";
  }
}

inline std::string render_text(const Json& j) {
  std::string out;
  render_text(j, out, 0);
  return out;
}

}  // namespace binact
