#include "leavitt/derivation_io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "leavitt/expression.hpp"
#include "leavitt/printing.hpp"

namespace leavitt {

namespace {

using nlohmann::json;

}  // namespace

DerivationFile parse_derivation_file(std::string_view json_text, Validation validation) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidDerivation(std::string("derivation file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("loops") || !doc["loops"].is_number_integer()) {
    throw InvalidDerivation("derivation file needs an integer \"loops\" field");
  }
  const AlgebraConfig cfg(doc["loops"].get<int>());
  const auto l = static_cast<std::size_t>(cfg.loops());

  std::map<int, Element> edge_entries;
  std::map<int, Element> dual_entries;
  Element vertex_value;
  if (doc.contains("values")) {
    const json& values = doc["values"];
    if (!values.is_object()) throw InvalidDerivation("\"values\" must be an object");
    static const std::regex key_pattern(R"(e([0-9]+)('?))");
    for (const auto& [key, expr] : values.items()) {
      if (!expr.is_string()) {
        throw InvalidDerivation("value of \"" + key + "\" must be an expression string");
      }
      const Element x = parse_element(expr.get<std::string>(), cfg);
      if (key == "v") {
        vertex_value = x;
        continue;
      }
      std::smatch m;
      if (!std::regex_match(key, m, key_pattern)) {
        throw InvalidDerivation("unknown generator name \"" + key + "\"");
      }
      const int index = std::stoi(m[1].str());
      cfg.require_index(index);
      (m[2].length() ? dual_entries : edge_entries)[index] = x;
    }
  }

  auto collect = [&](const std::map<int, Element>& entries) {
    std::vector<Element> out(l);
    for (const auto& [k, x] : entries) out[static_cast<std::size_t>(k - 1)] = x;
    return out;
  };

  if (!vertex_value.is_zero()) {
    throw InvalidDerivation("D(v) must be 0, got " + to_string(vertex_value));
  }
  if (dual_entries.empty()) {
    return {complete_from_edge_values(cfg, collect(edge_entries)),
            DerivationSource::CompletedFromEdges};
  }
  if (edge_entries.empty()) {
    return {complete_from_dual_values(cfg, collect(dual_entries)),
            DerivationSource::CompletedFromDuals};
  }
  DerivationSpec spec(cfg, collect(edge_entries), collect(dual_entries));
  if (validation == Validation::Strict) {
    const ViolationReport report = check_relations(spec);
    if (!report.empty()) {
      throw InvalidDerivation("derivation violates the relations: " +
                              describe(report.violations.front()));
    }
  }
  return {std::move(spec), DerivationSource::Explicit};
}

DerivationFile load_derivation_file(const std::filesystem::path& path, Validation validation) {
  std::ifstream in(path);
  if (!in) throw InvalidDerivation("cannot open derivation file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_derivation_file(buf.str(), validation);
}

std::string dump_derivation_file(const DerivationSpec& d) {
  json values = json::object();
  for (int i = 1; i <= d.config().loops(); ++i) {
    values["e" + std::to_string(i)] = to_string(d.edge_value(i));
    values["e" + std::to_string(i) + "'"] = to_string(d.dual_value(i));
  }
  json doc{{"loops", d.config().loops()}, {"values", values}};
  return doc.dump(2);
}

}  // namespace leavitt
