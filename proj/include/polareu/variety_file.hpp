#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crosscheck.hpp"
#include "errors.hpp"
#include "polar.hpp"

namespace polareu {

inline constexpr int kFormatVersion = 1;

struct ExpectedValues {
  std::optional<std::int64_t> eu;
  std::optional<std::vector<std::int64_t>> alphas;
  std::optional<std::int64_t> chi;  // Euler characteristic of a smooth Y
};

/// On-disk description of a variety (JSON):
///
///   {
///     "format_version": 1,
///     "name": "cusp",
///     "variables": ["x", "y"],
///     "polynomials": ["y^2 - x^3"],
///     "dimension": 1,
///     "strata": [
///       {"name": "regular", "top": true, "chi": 0, "local_eu": 1, "chi_slice": 3},
///       {"name": "origin", "chi": 1, "local_eu": "unknown", "chi_slice": 0}
///     ],
///     "expected": {"eu": 2, "alphas": [1, 3]}
///   }
///
/// "strata" and "expected" are optional, as are "name", "top" and "chi_slice".
struct VarietyFile {
  int format_version = kFormatVersion;
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> polynomials;
  int dimension = 0;
  std::optional<StrataTable> strata;
  std::optional<ExpectedValues> expected;
};

namespace detail {

template <class T>
T required(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

template <class T>
std::optional<T> optional_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return required<T>(obj, key, where);
}

}  // namespace detail

inline VarietyFile parse_variety_file(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("variety file is not valid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("variety file must be a JSON object");
  VarietyFile file;
  file.format_version = detail::required<int>(doc, "format_version", "variety file");
  if (file.format_version != kFormatVersion) {
    throw ParseError("unsupported format_version " + std::to_string(file.format_version));
  }
  file.name = detail::optional_field<std::string>(doc, "name", "variety file").value_or("");
  file.variables = detail::required<std::vector<std::string>>(doc, "variables", "variety file");
  file.polynomials = detail::required<std::vector<std::string>>(doc, "polynomials", "variety file");
  file.dimension = detail::required<int>(doc, "dimension", "variety file");
  if (file.polynomials.empty()) throw ParseError("variety file: 'polynomials' is empty");

  if (doc.contains("strata") && !doc["strata"].is_null()) {
    if (!doc["strata"].is_array()) throw ParseError("variety file: 'strata' must be an array");
    StrataTable table;
    table.dim = file.dimension;
    std::size_t index = 0;
    for (const auto& s : doc["strata"]) {
      const std::string where = "stratum " + std::to_string(index++);
      if (!s.is_object()) throw ParseError(where + ": must be an object");
      StratumData d;
      d.name = detail::optional_field<std::string>(s, "name", where).value_or(where);
      d.chi = detail::required<std::int64_t>(s, "chi", where);
      d.top = detail::optional_field<bool>(s, "top", where).value_or(false);
      d.chi_slice = detail::optional_field<std::int64_t>(s, "chi_slice", where);
      if (s.contains("local_eu")) {
        const auto& e = s["local_eu"];
        if (e.is_string() && e.get<std::string>() == "unknown") {
          d.local_eu = std::nullopt;
        } else if (e.is_number_integer()) {
          d.local_eu = e.get<std::int64_t>();
        } else {
          throw ParseError(where + ": 'local_eu' must be an integer or \"unknown\"");
        }
      } else if (!d.top) {
        throw ParseError(where + ": missing field 'local_eu'");
      }
      table.strata.push_back(std::move(d));
    }
    try {
      table.validate();
    } catch (const InvalidInput& e) {
      throw ParseError(std::string("strata: ") + e.what());
    }
    file.strata = std::move(table);
  }

  if (doc.contains("expected") && !doc["expected"].is_null()) {
    const auto& e = doc["expected"];
    if (!e.is_object()) throw ParseError("variety file: 'expected' must be an object");
    ExpectedValues ex;
    ex.eu = detail::optional_field<std::int64_t>(e, "eu", "expected");
    ex.alphas = detail::optional_field<std::vector<std::int64_t>>(e, "alphas", "expected");
    ex.chi = detail::optional_field<std::int64_t>(e, "chi", "expected");
    file.expected = ex;
  }
  return file;
}

inline VarietyFile load_variety_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open variety file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_variety_file(buffer.str());
}

/// Parses the polynomials over `field` and validates the declared dimension.
template <Field F>
VarietySpec<F> to_variety(const VarietyFile& file, const F& field,
                          const GroebnerOptions& options = {}) {
  validate_variable_names(file.variables);
  PolyRing<F> ring(field, file.variables.size());
  std::vector<Polynomial<F>> gens;
  for (std::size_t k = 0; k < file.polynomials.size(); ++k) {
    try {
      gens.push_back(parse_polynomial(file.polynomials[k], ring,
                                      std::span<const std::string>(file.variables)));
    } catch (const ParseError& e) {
      // e.what() already carries the position within the polynomial string.
      throw ParseError("polynomial " + std::to_string(k) + " ('" + file.polynomials[k] +
                       "'): " + e.what());
    }
  }
  VarietySpec<F> v{file.variables, file.dimension, Ideal<F>(ring, std::move(gens))};
  validate_variety(v, options);
  return v;
}

}  // namespace polareu
