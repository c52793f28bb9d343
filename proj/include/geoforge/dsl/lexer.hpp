#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geoforge/dsl/ast.hpp"

namespace geoforge::dsl {

enum class TokKind {
    kw_point,
    kw_line,
    kw_assert,
    kw_render,
    kw_label,
    kw_intersect,
    kw_midpoint,
    kw_reflect,
    kw_foot,
    kw_circumcenter,
    kw_perp_bisector,
    kw_perp,
    kw_similar,
    kw_congruent,
    kw_concyclic,
    kw_collinear,
    kw_equals,
    kw_ratio_sq,
    ident,
    integer,
    decimal,
    string,
    lparen,
    rparen,
    lbrace,
    rbrace,
    comma,
    semicolon,
    slash,
    minus,
    eq,
    eqeq,
    end,
};

struct Token {
    TokKind kind = TokKind::end;
    std::string text;
    SourceSpan span;
};

/// Human-readable token name for error messages, e.g. "," or "identifier".
std::string token_name(TokKind kind);

/// Splits UTF-8 source into tokens; "#" starts a comment running to end of
/// line. Throws ScriptError on characters outside the language.
std::vector<Token> tokenize(std::string_view source);

}  // namespace geoforge::dsl
