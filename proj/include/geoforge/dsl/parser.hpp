#pragma once

#include <string_view>
#include <vector>

#include "geoforge/dsl/ast.hpp"
#include "geoforge/dsl/lexer.hpp"

namespace geoforge::dsl {

/// Recursive-descent parse of a token stream. Syntax errors throw
/// ScriptError anchored at the last consumed token and list the expected
/// tokens.
Script parse(const std::vector<Token>& tokens);

/// tokenize + parse.
Script parse_text(std::string_view source);

}  // namespace geoforge::dsl
