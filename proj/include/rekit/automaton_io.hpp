#pragma once

#include "rekit/automata.hpp"

#include <json.hpp>

#include <string>

namespace rekit {

/// {"states": n, "alphabet": [...], "initials": [...], "finals": [...],
///  "transitions": [[p, "symbol", q], ...]}
nlohmann::json toJson(const Nfa &a);

/// Throws Error on a malformed document.
Nfa nfaFromJson(const nlohmann::json &doc);

/// Graphviz rendering; final states are drawn as double circles.
std::string toDot(const Nfa &a, const std::string &name = "A");

} // namespace rekit
