#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geoforge/dsl/ast.hpp"
#include "geoforge/dsl/printer.hpp"
#include "geoforge/geometry.hpp"

namespace geoforge::dsl {

/// Statically checks a parsed script: identifiers declared before use and
/// unique, operand kinds match, literals legal for the chosen backend,
/// concyclic arity at least four. Throws ScriptError.
void validate(const Script& script, bool exact_backend);

template <class S>
struct Environment {
    using Value = std::variant<Point<S>, Line<S>>;
    std::vector<std::pair<std::string, Value>> entries;

    const Value* find(const std::string& name) const {
        for (const auto& [key, value] : entries)
            if (key == name) return &value;
        return nullptr;
    }

    /// Deterministic dump, one declaration per line in evaluation order.
    std::string serialized() const {
        std::string out;
        for (const auto& [key, value] : entries) {
            if (const auto* p = std::get_if<Point<S>>(&value))
                out += "point " + key + " = " + str(*p) + "\n";
            else
                out += "line " + key + " = " + str(std::get<Line<S>>(value)) + "\n";
        }
        return out;
    }
};

struct AssertionOutcome {
    SourceSpan span;
    std::string text;
    bool passed = false;
};

inline std::string outcome_line(const AssertionOutcome& o) {
    return (o.passed ? "PASS " : "FAIL ") + span_str(o.span) + " " + o.text;
}

template <class S>
struct EvalResult {
    Environment<S> env;
    std::vector<AssertionOutcome> assertions;
};

namespace detail {

template <class S>
class Evaluator {
public:
    Evaluator(const Script& script, S tol) : script_(script), tol_(std::move(tol)) {}

    EvalResult<S> run() {
        validate(script_, ScalarTraits<S>::exact);
        EvalResult<S> result;
        for (const Stmt& stmt : script_.statements) {
            if (const auto* decl = std::get_if<Decl>(&stmt)) {
                run_guarded(decl->span, [&] {
                    typename Environment<S>::Value value =
                        decl->kind == DeclKind::point
                            ? typename Environment<S>::Value(eval_pexpr(*decl->pexpr))
                            : typename Environment<S>::Value(eval_lexpr(*decl->lexpr));
                    env_.entries.emplace_back(decl->name, std::move(value));
                });
            } else if (const auto* assertion = std::get_if<Assertion>(&stmt)) {
                AssertionOutcome outcome{assertion->span, print(assertion->pred), false};
                run_guarded(assertion->span,
                            [&] { outcome.passed = eval_pred(assertion->pred); });
                result.assertions.push_back(std::move(outcome));
            }
            // Render directives carry no geometry of their own; the renderer
            // consumes them against the finished environment.
        }
        result.env = std::move(env_);
        return result;
    }

private:
    template <class F>
    void run_guarded(const SourceSpan& span, F&& body) {
        try {
            body();
        } catch (const EvalError&) {
            throw;
        } catch (const Error& e) {
            throw EvalError(span, "geometric error at " + span_phrase(span) + ": " + e.what());
        }
    }

    S literal(const RatLit& lit) const { return ScalarTraits<S>::parse(lit.text); }

    Point<S> eval_pexpr(const Pexpr& e) {
        switch (e.kind) {
            case PexprKind::literal: return {literal(e.x), literal(e.y)};
            case PexprKind::intersect:
                return intersect(eval_lexpr(e.largs[0]), eval_lexpr(e.largs[1]), tol_);
            case PexprKind::midpoint:
                return midpoint(eval_pexpr(e.pargs[0]), eval_pexpr(e.pargs[1]));
            case PexprKind::reflect:
                return reflect_across(eval_pexpr(e.pargs[0]), eval_lexpr(e.largs[0]), tol_);
            case PexprKind::foot:
                return foot_of_perpendicular(eval_pexpr(e.pargs[0]), eval_lexpr(e.largs[0]),
                                             tol_);
            case PexprKind::circumcenter:
                return circumcenter(triangle(e.pargs[0], e.pargs[1], e.pargs[2]), tol_);
            default: return std::get<Point<S>>(*env_.find(e.name));
        }
    }

    Line<S> eval_lexpr(const Lexpr& e) {
        switch (e.kind) {
            case LexprKind::line:
                return line_through(eval_pexpr(e.pargs[0]), eval_pexpr(e.pargs[1]));
            case LexprKind::perp_bisector:
                return perpendicular_bisector(eval_pexpr(e.pargs[0]), eval_pexpr(e.pargs[1]));
            case LexprKind::perp:
                return perpendicular_through(eval_pexpr(e.pargs[0]), eval_lexpr(e.largs[0]));
            default: return std::get<Line<S>>(*env_.find(e.name));
        }
    }

    Triangle<S> triangle(const Pexpr& a, const Pexpr& b, const Pexpr& c) {
        return {eval_pexpr(a), eval_pexpr(b), eval_pexpr(c), tol_};
    }

    bool eval_pred(const Pred& pred) {
        switch (pred.kind) {
            case PredKind::similar:
                return similar_sss(triangle(pred.points[0], pred.points[1], pred.points[2]),
                                   triangle(pred.points[3], pred.points[4], pred.points[5]), tol_)
                    .has_value();
            case PredKind::congruent: {
                const auto k_sq =
                    similar_sss(triangle(pred.points[0], pred.points[1], pred.points[2]),
                                triangle(pred.points[3], pred.points[4], pred.points[5]), tol_);
                return k_sq && approx_eq(*k_sq, ScalarTraits<S>::from_int(1), tol_);
            }
            case PredKind::ratio_sq: {
                const auto k_sq =
                    similar_sss(triangle(pred.points[0], pred.points[1], pred.points[2]),
                                triangle(pred.points[3], pred.points[4], pred.points[5]), tol_);
                return k_sq && approx_eq(*k_sq, literal(pred.rhs), tol_);
            }
            case PredKind::concyclic: {
                std::vector<Point<S>> pts;
                pts.reserve(pred.points.size());
                for (const Pexpr& e : pred.points) pts.push_back(eval_pexpr(e));
                for (std::size_t a = 0; a + 3 < pts.size(); ++a)
                    for (std::size_t b = a + 1; b + 2 < pts.size(); ++b)
                        for (std::size_t c = b + 1; c + 1 < pts.size(); ++c)
                            for (std::size_t d = c + 1; d < pts.size(); ++d)
                                if (!concyclic(pts[a], pts[b], pts[c], pts[d], tol_))
                                    return false;
                return true;
            }
            case PredKind::collinear:
                return collinear(eval_pexpr(pred.points[0]), eval_pexpr(pred.points[1]),
                                 eval_pexpr(pred.points[2]), tol_);
            default: {
                const Point<S> a = eval_pexpr(pred.points[0]);
                const Point<S> b = eval_pexpr(pred.points[1]);
                return approx_eq(a.x, b.x, tol_) && approx_eq(a.y, b.y, tol_);
            }
        }
    }

    const Script& script_;
    S tol_;
    Environment<S> env_;
};

}  // namespace detail

/// Evaluates declarations in order and every assertion against the geometry
/// kernel. Geometric failures abort with EvalError naming the statement.
template <class S>
EvalResult<S> evaluate(const Script& script, const S& tol = S{}) {
    return detail::Evaluator<S>(script, tol).run();
}

}  // namespace geoforge::dsl
