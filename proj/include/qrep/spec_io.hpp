#pragma once

#include "qrep/system.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace qrep {

/// Builds a system from a JSON system-spec document:
///
///   {
///     "nb": {"kind": "empty" | "all" | "odd" | "even" | "list" | "residues" | "complement",
///            "members": [int], "modulus": int, "residues": [int], "start_k": int, "of": {nb}},
///     "columns": {"kind": "explicit",
///                 "list": [{"finite": ["p/q", ...]} | {"geometric": {"c": "p/q", "r": "p/q"}}
///                          | {"uniform": {"s": int}}],
///                 "extend": "cycle" | "repeat-last"}
///              | {"kind": "classic", "name": "s-adic" | "nega-s-adic" | "cantor" | "nega-cantor"
///                                            | "mixed" | "example-a" | "example-b",
///                 "params": {...}}
///   }
///
/// Throws SpecError with line/column for syntax errors and the offending
/// field path for semantic ones. Explicit columns are checked for
/// positivity and unit sum on load.
QSystem parse_spec(std::string_view text);

/// Reads and parses a spec file.
QSystem load_spec(const std::string& path);

NbSet parse_nb(const nlohmann::json& node, const std::string& path = "nb");

} // namespace qrep
