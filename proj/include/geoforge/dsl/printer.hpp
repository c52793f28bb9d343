#pragma once

#include <string>

#include "geoforge/dsl/ast.hpp"

namespace geoforge::dsl {

std::string print(const Pexpr& e);
std::string print(const Lexpr& e);

/// Single-line canonical predicate text, also used in PASS/FAIL report lines.
std::string print(const Pred& pred);

/// Canonical script text; parse(print(parse(s))) reproduces parse(s).
std::string print(const Script& script);

}  // namespace geoforge::dsl
