// Built-in reference structures with named ranges and ground-truth values.
//
// Entries are group-spec files extended with `name`, `ranges` (name ->
// range expression), `ground_truth` (value + source, one of
// paper/trivial/derived) and an optional `partner` cross-reference.  Users
// can override or add entries by dropping files into a catalog directory
// (--catalog-dir or KORN_CATALOG_DIR).

#pragma once

#include "korn/range_set.hpp"

#include <map>

namespace korn {

enum class Provenance { Paper, Trivial, Derived };

struct GroundTruth {
  double value = 0.0;
  Provenance source = Provenance::Derived;
};

struct CatalogEntry {
  std::string name;
  GroupSpecPtr spec;
  std::map<std::string, RangeSet> ranges;
  std::map<std::string, GroundTruth> ground_truth;
  std::string partner;  // entry sharing the same orbit, when applicable
};

/// Names of the built-in entries.
std::vector<std::string> catalog_names();

/// KORN_CATALOG_DIR when set, otherwise empty.
std::string default_catalog_dir();

/// Loads `<dir>/<name>.json` when the directory is given and the file
/// exists, the built-in entry otherwise.
CatalogEntry load_catalog_entry(const std::string& name,
                                const std::string& catalog_dir = "");

CatalogEntry parse_catalog_text(const std::string& text);

/// Recomputes every ground-truth value with the corresponding library
/// operation; throws numeric_error on the first mismatch.  Kernel dimensions
/// are checked at period 4*m0.
void verify_ground_truth(const CatalogEntry& entry,
                         const std::string& catalog_dir = "");

/// Whether the group generated by the rotation parts is finite (closure
/// search capped at `cap` distinct rotations).
bool rotation_group_finite(const GroupSpec& spec, std::size_t cap = 1024);

}  // namespace korn
