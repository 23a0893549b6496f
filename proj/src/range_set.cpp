#include "korn/range_set.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace korn {

namespace {

std::vector<long> key_of(const CanonicalElement& e) {
  std::vector<long> key;
  key.push_back(e.coset);
  for (int i = 0; i < e.exponents.size(); ++i) key.push_back(e.exponents(i));
  return key;
}

int rank_of_orbit_differences(const GroupSpec& spec,
                              const std::vector<CanonicalElement>& elements) {
  if (elements.empty()) return 0;
  Mat diffs(spec.d(), static_cast<Eigen::Index>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    diffs.col(static_cast<Eigen::Index>(i)) =
        spec.point(elements[i]) - spec.base_point();
  Eigen::JacobiSVD<Mat> svd(diffs);
  double cutoff = 1e-8 * std::max(1.0, svd.singularValues()(0));
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  return rank;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

CanonicalElement parse_factor(const GroupSpec& spec, const std::string& raw) {
  std::string token = strip(raw);
  if (token.empty()) throw config_error("range expression: empty factor");
  std::string name = token;
  long exponent = 1;
  if (auto caret = token.find('^'); caret != std::string::npos) {
    name = strip(token.substr(0, caret));
    std::string exp_str = strip(token.substr(caret + 1));
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_str, &used);
      if (used != exp_str.size()) throw std::invalid_argument(exp_str);
    } catch (const std::exception&) {
      throw config_error("range expression: bad exponent '" + exp_str + "'");
    }
  }
  if (name == "id") return spec.identity_element();
  for (std::size_t i = 0; i < spec.generators().size(); ++i)
    if (spec.generators()[i].name == name)
      return spec.pow(spec.generator_element(static_cast<int>(i)), exponent);
  throw config_error("range expression: unknown generator '" + name + "'");
}

CanonicalElement parse_word(const GroupSpec& spec, const std::string& raw) {
  CanonicalElement acc = spec.identity_element();
  std::size_t start = 0;
  std::string word = raw;
  while (start <= word.size()) {
    std::size_t star = word.find('*', start);
    std::string piece = word.substr(
        start, star == std::string::npos ? std::string::npos : star - start);
    acc = spec.multiply(acc, parse_factor(spec, piece));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return acc;
}

}  // namespace

RangeSet make_range(std::vector<CanonicalElement> elements) {
  std::set<std::vector<long>> seen;
  for (const auto& e : elements)
    if (!seen.insert(key_of(e)).second)
      throw config_error("range set contains duplicate elements");
  return RangeSet{std::move(elements)};
}

bool range_contains(const RangeSet& r, const CanonicalElement& e) {
  return std::any_of(r.elements.begin(), r.elements.end(),
                     [&](const CanonicalElement& x) { return x == e; });
}

RangeSet parse_range(const GroupSpec& spec, const std::string& expr) {
  std::vector<CanonicalElement> elements;
  std::size_t start = 0;
  while (start <= expr.size()) {
    std::size_t comma = expr.find(',', start);
    std::string term = expr.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (strip(term).empty())
      throw config_error("range expression: empty term");
    elements.push_back(parse_word(spec, term));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return make_range(std::move(elements));
}

bool has_property_1(const GroupSpec& spec, const RangeSet& r) {
  if (r.elements.empty()) return false;
  if (!range_contains(r, spec.identity_element())) return false;
  return rank_of_orbit_differences(spec, r.elements) == spec.affine_dim();
}

Property2Status property_2_status(const GroupSpec& spec, const RangeSet& r,
                                  int subset_cap) {
  const CanonicalElement id = spec.identity_element();
  if (!range_contains(r, id)) return Property2Status::No;

  std::set<std::vector<long>> members;
  for (const auto& e : r.elements) members.insert(key_of(e));
  auto in_range = [&](const CanonicalElement& e) {
    return members.count(key_of(e)) > 0;
  };

  // The two R' candidates fixed by the search: generators with identity,
  // optionally extended by the generator inverses.
  std::vector<std::vector<CanonicalElement>> rprime_candidates(2);
  rprime_candidates[0].push_back(id);
  rprime_candidates[1].push_back(id);
  for (std::size_t i = 0; i < spec.generators().size(); ++i) {
    CanonicalElement gen = spec.generator_element(static_cast<int>(i));
    rprime_candidates[0].push_back(gen);
    rprime_candidates[1].push_back(gen);
    rprime_candidates[1].push_back(spec.inverse(gen));
  }

  std::vector<CanonicalElement> others;
  for (const auto& e : r.elements)
    if (!(e == id)) others.push_back(e);

  auto admissible = [&](const std::vector<CanonicalElement>& rsecond) {
    if (rank_of_orbit_differences(spec, rsecond) != spec.affine_dim())
      return false;
    for (const auto& rp : rprime_candidates) {
      bool closed = true;
      for (const auto& a : rp) {
        for (const auto& b : rsecond)
          if (!in_range(spec.multiply(a, b))) {
            closed = false;
            break;
          }
        if (!closed) break;
      }
      if (closed) return true;
    }
    return false;
  };

  // Enumerate subsets containing the identity, smallest first, with a hard
  // budget so pathological ranges degrade to Unknown instead of stalling.
  const int max_extra = std::min<int>(subset_cap - 1,
                                      static_cast<int>(others.size()));
  long budget = 100000;
  std::vector<CanonicalElement> current{id};
  bool exhausted_within_cap =
      static_cast<int>(others.size()) <= subset_cap - 1;

  std::function<Property2Status(std::size_t, int)> search =
      [&](std::size_t next, int remaining) -> Property2Status {
    if (--budget < 0) return Property2Status::Unknown;
    if (admissible(current)) return Property2Status::Yes;
    if (remaining == 0) return Property2Status::No;
    for (std::size_t i = next; i < others.size(); ++i) {
      current.push_back(others[i]);
      Property2Status status = search(i + 1, remaining - 1);
      current.pop_back();
      if (status != Property2Status::No) return status;
    }
    return Property2Status::No;
  };

  Property2Status status = search(0, max_extra);
  if (status == Property2Status::Yes) return status;
  if (status == Property2Status::Unknown || !exhausted_within_cap)
    return Property2Status::Unknown;
  return Property2Status::No;
}

}  // namespace korn
