#include <map>

#include "geoforge/dsl/eval.hpp"

namespace geoforge::dsl {

namespace {

[[noreturn]] void reject(const SourceSpan& span, const std::string& detail) {
    throw ScriptError(span, "error at " + span_phrase(span) + ": " + detail);
}

class Validator {
public:
    explicit Validator(bool exact_backend) : exact_(exact_backend) {}

    void check(const Script& script) {
        for (const Stmt& stmt : script.statements) {
            if (const auto* decl = std::get_if<Decl>(&stmt)) {
                if (decl->kind == DeclKind::point)
                    check_pexpr(*decl->pexpr);
                else
                    check_lexpr(*decl->lexpr);
                if (!scope_.emplace(decl->name, decl->kind).second)
                    reject(decl->span, "duplicate identifier \"" + decl->name + "\"");
            } else if (const auto* assertion = std::get_if<Assertion>(&stmt)) {
                check_pred(assertion->pred);
            } else {
                for (const RenderItem& item : std::get<RenderDirective>(stmt).items)
                    if (scope_.find(item.name) == scope_.end())
                        reject(item.span, "unknown identifier \"" + item.name + "\"");
            }
        }
    }

private:
    void check_lit(const RatLit& lit) const {
        if (exact_ && lit.kind == LitKind::decimal)
            reject(lit.span, "decimal literal \"" + lit.text + "\" requires the float backend");
        if (!exact_ && lit.kind == LitKind::fraction)
            reject(lit.span, "fraction literal \"" + lit.text + "\" requires the exact backend");
    }

    void check_ref(const SourceSpan& span, const std::string& name, DeclKind want) const {
        const auto it = scope_.find(name);
        if (it == scope_.end()) reject(span, "unknown identifier \"" + name + "\"");
        if (it->second != want)
            reject(span, "\"" + name + "\" names a " +
                             (it->second == DeclKind::point ? "point" : "line") + ", expected a " +
                             (want == DeclKind::point ? "point" : "line"));
    }

    void check_pexpr(const Pexpr& e) const {
        if (e.kind == PexprKind::literal) {
            check_lit(e.x);
            check_lit(e.y);
            return;
        }
        if (e.kind == PexprKind::ident) {
            check_ref(e.span, e.name, DeclKind::point);
            return;
        }
        for (const Pexpr& p : e.pargs) check_pexpr(p);
        for (const Lexpr& l : e.largs) check_lexpr(l);
    }

    void check_lexpr(const Lexpr& e) const {
        if (e.kind == LexprKind::ident) {
            check_ref(e.span, e.name, DeclKind::line);
            return;
        }
        for (const Pexpr& p : e.pargs) check_pexpr(p);
        for (const Lexpr& l : e.largs) check_lexpr(l);
    }

    void check_pred(const Pred& pred) const {
        if (pred.kind == PredKind::concyclic && pred.points.size() < 4)
            reject(pred.span, "concyclic needs at least 4 points, got " +
                                  std::to_string(pred.points.size()));
        for (const Pexpr& p : pred.points) check_pexpr(p);
        if (pred.kind == PredKind::ratio_sq) check_lit(pred.rhs);
    }

    bool exact_;
    std::map<std::string, DeclKind> scope_;
};

}  // namespace

void validate(const Script& script, bool exact_backend) {
    Validator(exact_backend).check(script);
}

}  // namespace geoforge::dsl
