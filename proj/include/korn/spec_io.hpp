// Group-spec file parsing.
//
// A spec file is a JSON document:
//   {
//     "dimension": {"d": 2, "d1": 1, "d2": 1},
//     "generators": [{"name": "t", "rotation": [1,0,0,1],
//                     "translation": [0,1]}],
//     "translation_basis": [{"rotation": [...], "translation": [...]}],
//     "m0": 1,
//     "coset_reps": [{"rotation": [...], "translation": [...]}],
//     "base_point": [0, 0]
//   }
// Rotations are row-major d x d, numbers are plain decimal literals and
// unknown keys are rejected.

#pragma once

#include "korn/group_spec.hpp"

#include <iosfwd>

namespace korn {

/// Parses and validates a spec document.  Throws config_error on malformed
/// input, unknown keys, or any violated structural invariant.
GroupSpecPtr load_group_spec(std::istream& in);
GroupSpecPtr load_group_spec_text(const std::string& text);
GroupSpecPtr load_group_spec_file(const std::string& path);

}  // namespace korn
