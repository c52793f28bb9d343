#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geoforge/errors.hpp"

namespace geoforge::dsl {

struct SourceSpan {
    int line = 1;
    int column = 1;
};

inline std::string span_str(const SourceSpan& s) {
    return std::to_string(s.line) + ":" + std::to_string(s.column);
}

inline std::string span_phrase(const SourceSpan& s) {
    return "line " + std::to_string(s.line) + ", column " + std::to_string(s.column);
}

/// Script rejected before any geometry runs: bad syntax, or a statically
/// invalid program (unknown or duplicate identifier, wrong operand kind,
/// literal not available on the chosen backend).
class ScriptError : public Error {
public:
    ScriptError(SourceSpan span, const std::string& what) : Error(what), span_(span) {}
    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

/// A geometric construction failed while evaluating a statically valid
/// script (parallel lines fed to intersect, coincident points, and so on).
class EvalError : public Error {
public:
    EvalError(SourceSpan span, const std::string& what) : Error(what), span_(span) {}
    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

enum class LitKind { integer, fraction, decimal };

/// Numeric literal kept as written; the evaluator converts it with the
/// active backend's parser.
struct RatLit {
    std::string text;
    LitKind kind = LitKind::integer;
    SourceSpan span;
};

struct Lexpr;

enum class PexprKind { literal, intersect, midpoint, reflect, foot, circumcenter, ident };

struct Pexpr {
    PexprKind kind = PexprKind::ident;
    SourceSpan span;
    RatLit x, y;               // literal
    std::string name;          // ident
    std::vector<Pexpr> pargs;  // point arguments in call order
    std::vector<Lexpr> largs;  // line arguments in call order
};

enum class LexprKind { line, perp_bisector, perp, ident };

struct Lexpr {
    LexprKind kind = LexprKind::ident;
    SourceSpan span;
    std::string name;
    std::vector<Pexpr> pargs;
    std::vector<Lexpr> largs;
};

enum class PredKind { similar, congruent, concyclic, collinear, equals, ratio_sq };

struct Pred {
    PredKind kind = PredKind::equals;
    SourceSpan span;
    std::vector<Pexpr> points;  // triple2 flattened to six; concyclic holds n
    RatLit rhs;                 // ratio_sq comparison value
};

enum class DeclKind { point, line };

struct Decl {
    DeclKind kind = DeclKind::point;
    SourceSpan span;
    std::string name;
    std::optional<Pexpr> pexpr;
    std::optional<Lexpr> lexpr;
};

struct Assertion {
    SourceSpan span;
    Pred pred;
};

struct RenderItem {
    SourceSpan span;
    std::string name;
    std::optional<std::string> label;
};

struct RenderDirective {
    SourceSpan span;
    std::string title;
    std::vector<RenderItem> items;
};

using Stmt = std::variant<Decl, Assertion, RenderDirective>;

struct Script {
    std::vector<Stmt> statements;
};

}  // namespace geoforge::dsl
