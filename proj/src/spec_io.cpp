#include "korn/spec_io.hpp"

#include "spec_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace korn {

namespace detail {

void require_known_keys(const nlohmann::json& doc,
                        const std::vector<std::string>& allowed,
                        const std::string& where) {
  for (const auto& item : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      throw config_error(where + ": unknown key '" + item.key() + "'");
  }
}

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw config_error("spec file: missing field '" + key + "'");
  return *it;
}

Vec parse_vector(const json& node, int expected, const std::string& what) {
  if (!node.is_array() || static_cast<int>(node.size()) != expected)
    throw config_error("spec file: " + what + " must be an array of length " +
                       std::to_string(expected));
  Vec v(expected);
  for (int i = 0; i < expected; ++i) {
    if (!node[static_cast<std::size_t>(i)].is_number())
      throw config_error("spec file: " + what + " entries must be numbers");
    v(i) = node[static_cast<std::size_t>(i)].get<double>();
  }
  return v;
}

Isometry parse_isometry(const json& node, int d, bool allow_name,
                        std::string* name_out) {
  if (!node.is_object())
    throw config_error("spec file: isometry entries must be objects");
  std::vector<std::string> allowed = {"rotation", "translation"};
  if (allow_name) allowed.push_back("name");
  require_known_keys(node, allowed, "isometry");
  const json& rot = require_field(node, "rotation");
  if (!rot.is_array() || static_cast<int>(rot.size()) != d * d)
    throw config_error(
        "spec file: rotation must be a row-major array of length d*d");
  Mat a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const json& entry = rot[static_cast<std::size_t>(r * d + c)];
      if (!entry.is_number())
        throw config_error("spec file: rotation entries must be numbers");
      a(r, c) = entry.get<double>();
    }
  Vec b = parse_vector(require_field(node, "translation"), d, "translation");
  if (name_out && node.contains("name"))
    *name_out = node["name"].get<std::string>();
  return {std::move(a), std::move(b)};
}

}  // namespace

GroupSpecData parse_group_spec_fields(const nlohmann::json& doc) {
  GroupSpecData data;
  const json& dim = require_field(doc, "dimension");
  require_known_keys(dim, {"d", "d1", "d2"}, "dimension");
  for (const char* key : {"d", "d1", "d2"})
    if (!dim.contains(key) || !dim[key].is_number_integer())
      throw config_error("spec file: dimension requires integer d, d1, d2");
  data.d = dim["d"].get<int>();
  data.d1 = dim["d1"].get<int>();
  data.d2 = dim["d2"].get<int>();
  if (data.d <= 0 || data.d1 < 0 || data.d2 < 0)
    throw config_error("spec file: invalid dimension values");

  const json& gens = require_field(doc, "generators");
  if (!gens.is_array() || gens.empty())
    throw config_error("spec file: generators must be a nonempty array");
  int unnamed = 0;
  for (const json& node : gens) {
    std::string name;
    Isometry iso = parse_isometry(node, data.d, true, &name);
    if (name.empty()) name = "g" + std::to_string(++unnamed);
    for (const auto& existing : data.generators)
      if (existing.name == name)
        throw config_error("spec file: duplicate generator name '" + name +
                           "'");
    data.generators.push_back({std::move(name), std::move(iso)});
  }

  const json& basis = require_field(doc, "translation_basis");
  if (!basis.is_array())
    throw config_error("spec file: translation_basis must be an array");
  for (const json& node : basis)
    data.translation_basis.push_back(
        parse_isometry(node, data.d, false, nullptr));

  const json& m0 = require_field(doc, "m0");
  if (!m0.is_number_integer())
    throw config_error("spec file: m0 must be an integer");
  data.m0 = m0.get<int>();

  const json& reps = require_field(doc, "coset_reps");
  if (!reps.is_array() || reps.empty())
    throw config_error("spec file: coset_reps must be a nonempty array");
  for (const json& node : reps)
    data.coset_reps.push_back(parse_isometry(node, data.d, false, nullptr));

  data.base_point =
      parse_vector(require_field(doc, "base_point"), data.d, "base_point");
  return data;
}

}  // namespace detail

GroupSpecPtr load_group_spec(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("spec file: JSON parse error: ") +
                       e.what());
  }
  detail::require_known_keys(doc, detail::kSpecKeys, "spec file");
  return GroupSpec::validate(detail::parse_group_spec_fields(doc));
}

GroupSpecPtr load_group_spec_text(const std::string& text) {
  std::istringstream in(text);
  return load_group_spec(in);
}

GroupSpecPtr load_group_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open spec file '" + path + "'");
  return load_group_spec(in);
}

}  // namespace korn
