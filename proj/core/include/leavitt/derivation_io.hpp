#pragma once

// Derivation files are JSON documents:
//
//   { "loops": 2, "values": { "e1": "v", "e2": "-3 v" } }
//
// Keys of "values" are "e<k>" for D(e_k), "e<k>'" for D(e_k*) and optionally
// "v" (which must be 0); values use the expression grammar. With only edge
// entries the dual values are completed, with only dual entries the edge
// values are completed, and with entries on both sides the missing ones are
// zero and the result is validated against the relations.

#include <filesystem>
#include <string>
#include <string_view>

#include "leavitt/derivation.hpp"

namespace leavitt {

enum class DerivationSource { CompletedFromEdges, CompletedFromDuals, Explicit };

enum class Validation {
  Strict,   // explicit specs must pass check_relations
  Lenient,  // keep whatever the file says (for diagnostics)
};

struct DerivationFile {
  DerivationSpec spec;
  DerivationSource source;
};

/// Throws InvalidDerivation for malformed documents, ParseError/ConfigError
/// for bad expressions, and InvalidDerivation when a Strict load fails the
/// relation check.
DerivationFile parse_derivation_file(std::string_view json_text,
                                     Validation validation = Validation::Strict);
DerivationFile load_derivation_file(const std::filesystem::path& path,
                                    Validation validation = Validation::Strict);

/// Writes both edge and dual values.
std::string dump_derivation_file(const DerivationSpec& d);

}  // namespace leavitt
