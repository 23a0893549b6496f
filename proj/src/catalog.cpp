#include "korn/catalog.hpp"

#include "korn/seminorm.hpp"
#include "korn/subspace.hpp"
#include "spec_json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace korn {

namespace detail {
// Generated from catalog/*.json at configure time.
const std::map<std::string, const char*>& builtin_catalog();
}  // namespace detail

namespace {

Provenance parse_source(const std::string& text) {
  if (text == "paper") return Provenance::Paper;
  if (text == "trivial") return Provenance::Trivial;
  if (text == "derived") return Provenance::Derived;
  throw config_error("catalog: ground-truth source must be one of "
                     "paper/trivial/derived, got '" +
                     text + "'");
}

CatalogEntry parse_catalog_json(const nlohmann::json& doc) {
  std::vector<std::string> allowed = detail::kSpecKeys;
  allowed.insert(allowed.end(), {"name", "ranges", "ground_truth", "partner"});
  detail::require_known_keys(doc, allowed, "catalog entry");

  CatalogEntry entry;
  if (!doc.contains("name") || !doc["name"].is_string())
    throw config_error("catalog entry: missing name");
  entry.name = doc["name"].get<std::string>();
  if (doc.contains("partner")) entry.partner = doc["partner"].get<std::string>();

  entry.spec = GroupSpec::validate(detail::parse_group_spec_fields(doc));

  if (doc.contains("ranges")) {
    if (!doc["ranges"].is_object())
      throw config_error("catalog entry: ranges must be an object");
    for (const auto& item : doc["ranges"].items())
      entry.ranges.emplace(item.key(),
                           parse_range(*entry.spec,
                                       item.value().get<std::string>()));
  }

  if (doc.contains("ground_truth")) {
    if (!doc["ground_truth"].is_array())
      throw config_error("catalog entry: ground_truth must be an array");
    for (const auto& node : doc["ground_truth"]) {
      detail::require_known_keys(node, {"name", "value", "source"},
                                 "ground_truth record");
      for (const char* key : {"name", "value", "source"})
        if (!node.contains(key))
          throw config_error(
              "catalog entry: ground_truth records need name, value and a "
              "provenance source");
      GroundTruth truth;
      truth.value = node["value"].get<double>();
      truth.source = parse_source(node["source"].get<std::string>());
      entry.ground_truth.emplace(node["name"].get<std::string>(), truth);
    }
  }
  return entry;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::builtin_catalog())
    names.push_back(name);
  return names;
}

std::string default_catalog_dir() {
  const char* env = std::getenv("KORN_CATALOG_DIR");
  return env ? env : "";
}

CatalogEntry parse_catalog_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("catalog entry: JSON parse error: ") +
                       e.what());
  }
  return parse_catalog_json(doc);
}

CatalogEntry load_catalog_entry(const std::string& name,
                                const std::string& catalog_dir) {
  std::string dir = catalog_dir.empty() ? default_catalog_dir() : catalog_dir;
  if (!dir.empty()) {
    std::ifstream in(dir + "/" + name + ".json");
    if (in) {
      std::ostringstream text;
      text << in.rdbuf();
      CatalogEntry entry = parse_catalog_text(text.str());
      if (entry.name != name)
        throw config_error("catalog file name does not match entry name '" +
                           entry.name + "'");
      return entry;
    }
  }
  const auto& builtin = detail::builtin_catalog();
  auto it = builtin.find(name);
  if (it == builtin.end())
    throw config_error("unknown structure '" + name + "'");
  return parse_catalog_text(it->second);
}

bool rotation_group_finite(const GroupSpec& spec, std::size_t cap) {
  std::vector<Mat> closure;
  auto seen = [&](const Mat& r) {
    return std::any_of(closure.begin(), closure.end(), [&](const Mat& m) {
      return (m - r).norm() < 1e-8;
    });
  };
  std::vector<Mat> letters;
  for (const auto& gen : spec.generators()) {
    letters.push_back(gen.map.rotation);
    letters.push_back(gen.map.rotation.transpose());
  }
  closure.push_back(Mat::Identity(spec.d(), spec.d()));
  for (std::size_t head = 0; head < closure.size(); ++head) {
    Mat current = closure[head];
    for (const Mat& letter : letters) {
      Mat next = current * letter;
      if (!seen(next)) {
        if (closure.size() >= cap) return false;
        closure.push_back(std::move(next));
      }
    }
  }
  return true;
}

namespace {

long orbit_closure_size(const GroupSpec& spec) {
  std::size_t previous = 0;
  for (int radius = 2; radius <= 64; radius *= 2) {
    auto points = orbit(spec, radius);
    if (points.size() == previous) return static_cast<long>(points.size());
    previous = points.size();
  }
  throw numeric_error("orbit does not close (structure is infinite)");
}

long max_order_in_closure(const GroupSpec& spec) {
  long best = 0;
  for (const auto& e : word_ball(spec, 8, 256)) {
    long order = element_order(spec, e, 256);
    if (order == 0)
      throw numeric_error("element order exceeds cap (group not finite?)");
    best = std::max(best, order);
  }
  return best;
}

bool orbits_agree(const GroupSpec& a, const GroupSpec& b) {
  auto pa = orbit(a, 8);
  auto pb = orbit(b, 8);
  if (pa.size() != pb.size()) return false;
  for (const Vec& p : pa) {
    bool hit = false;
    for (const Vec& q : pb)
      if ((p - q).norm() <= 1e-8) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

const RangeSet& named_range(const CatalogEntry& entry,
                            const std::string& name) {
  auto it = entry.ranges.find(name);
  if (it == entry.ranges.end())
    throw config_error("catalog entry '" + entry.name +
                       "' lacks the range '" + name + "'");
  return it->second;
}

}  // namespace

void verify_ground_truth(const CatalogEntry& entry,
                         const std::string& catalog_dir) {
  const GroupSpec& spec = *entry.spec;
  const long check_period = 4 * spec.m0();
  for (const auto& [key, truth] : entry.ground_truth) {
    double computed = 0.0;
    if (key == "affine_dim") {
      computed = spec.affine_dim();
    } else if (key == "orbit_size") {
      computed = static_cast<double>(orbit_closure_size(spec));
    } else if (key == "max_element_order") {
      computed = static_cast<double>(max_order_in_closure(spec));
    } else if (key == "orbit_equals_partner") {
      if (entry.partner.empty())
        throw config_error("orbit_equals_partner without a partner entry");
      CatalogEntry partner = load_catalog_entry(entry.partner, catalog_dir);
      computed = orbits_agree(spec, *partner.spec) ? 1.0 : 0.0;
    } else if (key == "dim_u_trans") {
      computed = build_subspace(spec, named_range(entry, "p1"),
                                SubspaceKind::Trans)
                     .rank();
    } else if (key == "dim_u_rot") {
      computed =
          build_subspace(spec, named_range(entry, "p1"), SubspaceKind::Rot)
              .rank();
    } else if (key == "dim_u_rot0") {
      computed =
          build_subspace(spec, named_range(entry, "p1"), SubspaceKind::Rot0)
              .rank();
    } else if (key == "dim_u_rot00") {
      computed =
          build_subspace(spec, named_range(entry, "p1"), SubspaceKind::Rot00)
              .rank();
    } else if (key == "kernel_dim_patch_iso") {
      computed = kernel(spec, named_range(entry, "p2"), SeminormKind::PatchIso,
                        check_period)
                     .dimension;
    } else if (key == "kernel_dim_grad_plain") {
      computed = kernel(spec, named_range(entry, "p2"),
                        SeminormKind::GradPlain, check_period)
                     .dimension;
    } else if (key == "property_1_p1") {
      computed = has_property_1(spec, named_range(entry, "p1")) ? 1.0 : 0.0;
    } else if (key == "property_2_p1") {
      computed =
          property_2_status(spec, named_range(entry, "p1")) ==
                  Property2Status::Yes
              ? 1.0
              : 0.0;
    } else if (key == "property_2_p2") {
      computed =
          property_2_status(spec, named_range(entry, "p2")) ==
                  Property2Status::Yes
              ? 1.0
              : 0.0;
    } else {
      throw config_error("catalog entry '" + entry.name +
                         "': unknown ground-truth key '" + key + "'");
    }
    if (std::abs(computed - truth.value) > 1e-12)
      throw numeric_error("catalog entry '" + entry.name + "': " + key +
                          " evaluates to " + std::to_string(computed) +
                          ", expected " + std::to_string(truth.value));
  }
}

}  // namespace korn
