// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracspec/errors.hpp"
#include "fracspec/selfsim.hpp"

namespace fracspec {

namespace {

std::vector<Rational> scalar_list(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("parameter document lacks \"") + key + "\"");
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw ValidationError(std::string("\"") + key + "\" must be an array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (item.is_string()) {
      try {
        out.push_back(parse_scalar(item.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("\"") + key + "\": " + e.what());
      }
    } else if (item.is_number_integer()) {
      out.emplace_back(static_cast<long>(item.get<std::int64_t>()));
    } else {
      // Floats are rejected: their decimal text may not be what the author meant.
      throw ValidationError(std::string("\"") + key +
                            "\": entries must be scalar strings such as \"1/3\" or \"0.5\"");
    }
  }
  return out;
}

}  // namespace

SimilaritySet parse_parameter_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("parameter document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("parameter document must be a JSON object");
  return SimilaritySet::validate(scalar_list(doc, "a"), scalar_list(doc, "d"),
                                 scalar_list(doc, "beta"));
}

SimilaritySet load_parameter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open parameter file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_parameter_json(buf.str());
}

std::string to_parameter_json(const SimilaritySet& s) {
  auto strings = [](std::span<const Rational> xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(x.to_string());
    return arr;
  };
  nlohmann::ordered_json doc;
  doc["a"] = strings(s.a());
  doc["d"] = strings(s.d());
  doc["beta"] = strings(s.beta());
  return doc.dump();
}

}  // namespace fracspec
