#include "geoforge/dsl/printer.hpp"

namespace geoforge::dsl {

namespace {

std::string join_points(const std::vector<Pexpr>& points, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) {
        if (i > from) out += ", ";
        out += print(points[i]);
    }
    return out;
}

std::string triple2_text(const std::vector<Pexpr>& points) {
    return "(" + join_points(points, 0, 3) + "; " + join_points(points, 3, 6) + ")";
}

}  // namespace

std::string print(const Pexpr& e) {
    switch (e.kind) {
        case PexprKind::literal: return "(" + e.x.text + ", " + e.y.text + ")";
        case PexprKind::intersect:
            return "intersect(" + print(e.largs[0]) + ", " + print(e.largs[1]) + ")";
        case PexprKind::midpoint:
            return "midpoint(" + print(e.pargs[0]) + ", " + print(e.pargs[1]) + ")";
        case PexprKind::reflect:
            return "reflect(" + print(e.pargs[0]) + ", " + print(e.largs[0]) + ")";
        case PexprKind::foot:
            return "foot(" + print(e.pargs[0]) + ", " + print(e.largs[0]) + ")";
        case PexprKind::circumcenter:
            return "circumcenter(" + print(e.pargs[0]) + ", " + print(e.pargs[1]) + ", " +
                   print(e.pargs[2]) + ")";
        default: return e.name;
    }
}

std::string print(const Lexpr& e) {
    switch (e.kind) {
        case LexprKind::line: return "line(" + print(e.pargs[0]) + ", " + print(e.pargs[1]) + ")";
        case LexprKind::perp_bisector:
            return "perp_bisector(" + print(e.pargs[0]) + ", " + print(e.pargs[1]) + ")";
        case LexprKind::perp:
            return "perp(" + print(e.pargs[0]) + ", " + print(e.largs[0]) + ")";
        default: return e.name;
    }
}

std::string print(const Pred& pred) {
    switch (pred.kind) {
        case PredKind::similar: return "similar" + triple2_text(pred.points);
        case PredKind::congruent: return "congruent" + triple2_text(pred.points);
        case PredKind::concyclic:
            return "concyclic(" + join_points(pred.points, 0, pred.points.size()) + ")";
        case PredKind::collinear:
            return "collinear(" + join_points(pred.points, 0, pred.points.size()) + ")";
        case PredKind::equals:
            return "equals(" + join_points(pred.points, 0, pred.points.size()) + ")";
        default: return "ratio_sq" + triple2_text(pred.points) + " == " + pred.rhs.text;
    }
}

std::string print(const Script& script) {
    std::string out;
    for (const Stmt& stmt : script.statements) {
        if (const auto* decl = std::get_if<Decl>(&stmt)) {
            if (decl->kind == DeclKind::point)
                out += "point " + decl->name + " = " + print(*decl->pexpr) + ";\n";
            else
                out += "line " + decl->name + " = " + print(*decl->lexpr) + ";\n";
        } else if (const auto* assertion = std::get_if<Assertion>(&stmt)) {
            out += "assert " + print(assertion->pred) + ";\n";
        } else {
            const auto& render = std::get<RenderDirective>(stmt);
            out += "render \"" + render.title + "\" {\n";
            for (const RenderItem& item : render.items) {
                out += "  " + item.name;
                if (item.label) out += " label \"" + *item.label + "\"";
                out += ";\n";
            }
            out += "}\n";
        }
    }
    return out;
}

}  // namespace geoforge::dsl
