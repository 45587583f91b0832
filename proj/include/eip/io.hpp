#pragma once

#include <string>

#include <json.hpp>

#include "eip/ermodule.hpp"
#include "eip/kronecker.hpp"
#include "eip/property.hpp"

namespace eip {

using Json = nlohmann::ordered_json;

// Representations: {"type": "beilinson", "p", "n", "r", "dims", "maps"} with
// maps[level][arrow] a list of rows. kE_r-modules: {"type": "er-module", "p",
// "r", "dim", "ops"}.

[[nodiscard]] Json to_json(const Matrix& m);
[[nodiscard]] Json to_json(const BeilinsonRep& rep);
[[nodiscard]] Json to_json(const ErModule& m);
[[nodiscard]] Json to_json(const ProjPoint& a);
[[nodiscard]] Json to_json(const JordanType& jt);
[[nodiscard]] Json to_json(const PropertyReport& rep);
[[nodiscard]] Json to_json(const TauOrbitReport& rep);
[[nodiscard]] Json to_json(const Classification& c);
[[nodiscard]] Json to_json(const EndAlgebra& e);
[[nodiscard]] Json to_json(const IsoResult& r);
[[nodiscard]] Json to_json(const IndecResult& r);

/// Both throw ParseError naming the offending JSON path.
[[nodiscard]] BeilinsonRep rep_from_json(const Json& j);
[[nodiscard]] ErModule ermodule_from_json(const Json& j);

/// Parses text, reporting syntax errors as "source:line:column: message".
[[nodiscard]] Json parse_json(const std::string& text, const std::string& source = "<input>");
[[nodiscard]] Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline; stable for identical input.
[[nodiscard]] std::string dump_canonical(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace eip
