// Shared JSON-level parsing for spec files and catalog entries.

#pragma once

#include "korn/group_spec.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace korn::detail {

/// Rejects keys of `doc` outside `allowed`.
void require_known_keys(const nlohmann::json& doc,
                        const std::vector<std::string>& allowed,
                        const std::string& where);

/// Parses the group-spec fields of `doc` (dimension, generators,
/// translation_basis, m0, coset_reps, base_point).  Key checking is left to
/// the caller so the catalog format can extend the document.
GroupSpecData parse_group_spec_fields(const nlohmann::json& doc);

inline const std::vector<std::string> kSpecKeys = {
    "dimension", "generators", "translation_basis",
    "m0",        "coset_reps", "base_point"};

}  // namespace korn::detail
