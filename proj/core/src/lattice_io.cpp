#include "ulat/lattice_io.hpp"

#include <json.hpp>

#include <map>

namespace ulat {

using nlohmann::json;

FiniteLattice load_finite_lattice(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("lattice document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw std::invalid_argument("lattice document needs an \"elements\" array");

  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw std::invalid_argument("element names must be strings");
    auto name = e.get<std::string>();
    if (!index.emplace(name, names.size()).second) throw std::invalid_argument("duplicate element '" + name + "'");
    names.push_back(std::move(name));
  }

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  if (doc.contains("covers")) {
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw std::invalid_argument("each cover must be a [lo, hi] pair of element names");
      const auto lo = index.find(c[0].get<std::string>());
      const auto hi = index.find(c[1].get<std::string>());
      if (lo == index.end() || hi == index.end())
        throw std::invalid_argument("cover " + c.dump() + " refers to an unknown element");
      covers.emplace_back(lo->second, hi->second);
    }
  }
  const auto name = doc.value("name", std::string("lattice"));
  return FiniteLattice::from_covers(name, std::move(names), covers);
}

std::string finite_lattice_to_json(const FiniteLattice& lattice) {
  nlohmann::ordered_json doc;
  doc["name"] = lattice.name();
  doc["elements"] = lattice.element_names();
  auto covers = nlohmann::ordered_json::array();
  for (auto [lo, hi] : lattice.covers())
    covers.push_back({lattice.element_name(lo), lattice.element_name(hi)});
  doc["covers"] = std::move(covers);
  return doc.dump(2);
}

}  // namespace ulat
