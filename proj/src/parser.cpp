#include "geoforge/dsl/parser.hpp"

#include <initializer_list>

namespace geoforge::dsl {

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    Script parse_script() {
        Script script;
        while (!at(TokKind::end)) script.statements.push_back(parse_stmt());
        return script;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at(TokKind k) const { return peek().kind == k; }

    const Token& consume() {
        last_ = &toks_[pos_];
        return toks_[pos_++];
    }

    const Token& expect(TokKind k) {
        if (!at(k)) fail({k});
        return consume();
    }

    [[noreturn]] void fail(std::initializer_list<TokKind> expected) {
        const SourceSpan span = last_ ? last_->span : peek().span;
        std::string names;
        std::size_t n = 0;
        for (const TokKind k : expected) {
            if (n > 0) names += n + 1 == expected.size() ? " or " : ", ";
            names += token_name(k);
            ++n;
        }
        throw ScriptError(span, "syntax error at " + span_phrase(span) + ", expected " + names);
    }

    Stmt parse_stmt() {
        switch (peek().kind) {
            case TokKind::kw_point: return parse_decl(DeclKind::point);
            case TokKind::kw_line: return parse_decl(DeclKind::line);
            case TokKind::kw_assert: return parse_assertion();
            case TokKind::kw_render: return parse_render();
            default:
                fail({TokKind::kw_point, TokKind::kw_line, TokKind::kw_assert,
                      TokKind::kw_render});
        }
    }

    Decl parse_decl(DeclKind kind) {
        Decl decl;
        decl.kind = kind;
        decl.span = consume().span;
        decl.name = expect(TokKind::ident).text;
        expect(TokKind::eq);
        if (kind == DeclKind::point)
            decl.pexpr = parse_pexpr();
        else
            decl.lexpr = parse_lexpr();
        expect(TokKind::semicolon);
        return decl;
    }

    Assertion parse_assertion() {
        Assertion a;
        a.span = consume().span;
        a.pred = parse_pred();
        expect(TokKind::semicolon);
        return a;
    }

    Pred parse_pred() {
        Pred pred;
        pred.span = peek().span;
        switch (peek().kind) {
            case TokKind::kw_similar:
            case TokKind::kw_congruent:
                pred.kind = consume().kind == TokKind::kw_similar ? PredKind::similar
                                                                  : PredKind::congruent;
                pred.points = parse_triple2();
                break;
            case TokKind::kw_concyclic: {
                consume();
                pred.kind = PredKind::concyclic;
                expect(TokKind::lparen);
                pred.points.push_back(parse_pexpr());
                while (at(TokKind::comma)) {
                    consume();
                    pred.points.push_back(parse_pexpr());
                }
                expect(TokKind::rparen);
                break;
            }
            case TokKind::kw_collinear:
                consume();
                pred.kind = PredKind::collinear;
                pred.points = parse_point_call(3);
                break;
            case TokKind::kw_equals:
                consume();
                pred.kind = PredKind::equals;
                pred.points = parse_point_call(2);
                break;
            case TokKind::kw_ratio_sq:
                consume();
                pred.kind = PredKind::ratio_sq;
                pred.points = parse_triple2();
                expect(TokKind::eqeq);
                pred.rhs = parse_rat();
                break;
            default:
                fail({TokKind::kw_similar, TokKind::kw_congruent, TokKind::kw_concyclic,
                      TokKind::kw_collinear, TokKind::kw_equals, TokKind::kw_ratio_sq});
        }
        return pred;
    }

    std::vector<Pexpr> parse_point_call(int arity) {
        std::vector<Pexpr> points;
        expect(TokKind::lparen);
        for (int i = 0; i < arity; ++i) {
            if (i > 0) expect(TokKind::comma);
            points.push_back(parse_pexpr());
        }
        expect(TokKind::rparen);
        return points;
    }

    std::vector<Pexpr> parse_triple2() {
        std::vector<Pexpr> points;
        expect(TokKind::lparen);
        for (int i = 0; i < 3; ++i) {
            if (i > 0) expect(TokKind::comma);
            points.push_back(parse_pexpr());
        }
        expect(TokKind::semicolon);
        for (int i = 0; i < 3; ++i) {
            if (i > 0) expect(TokKind::comma);
            points.push_back(parse_pexpr());
        }
        expect(TokKind::rparen);
        return points;
    }

    RenderDirective parse_render() {
        RenderDirective render;
        render.span = consume().span;
        render.title = expect(TokKind::string).text;
        expect(TokKind::lbrace);
        while (!at(TokKind::rbrace)) {
            RenderItem item;
            const Token& name = expect(TokKind::ident);
            item.span = name.span;
            item.name = name.text;
            if (at(TokKind::kw_label)) {
                consume();
                item.label = expect(TokKind::string).text;
            }
            expect(TokKind::semicolon);
            render.items.push_back(std::move(item));
        }
        expect(TokKind::rbrace);
        return render;
    }

    Pexpr parse_pexpr() {
        Pexpr e;
        e.span = peek().span;
        switch (peek().kind) {
            case TokKind::lparen:
                consume();
                e.kind = PexprKind::literal;
                e.x = parse_rat();
                expect(TokKind::comma);
                e.y = parse_rat();
                expect(TokKind::rparen);
                break;
            case TokKind::kw_intersect:
                consume();
                e.kind = PexprKind::intersect;
                expect(TokKind::lparen);
                e.largs.push_back(parse_lexpr());
                expect(TokKind::comma);
                e.largs.push_back(parse_lexpr());
                expect(TokKind::rparen);
                break;
            case TokKind::kw_midpoint:
                consume();
                e.kind = PexprKind::midpoint;
                e.pargs = parse_point_call(2);
                break;
            case TokKind::kw_reflect:
            case TokKind::kw_foot:
                e.kind = consume().kind == TokKind::kw_reflect ? PexprKind::reflect
                                                               : PexprKind::foot;
                expect(TokKind::lparen);
                e.pargs.push_back(parse_pexpr());
                expect(TokKind::comma);
                e.largs.push_back(parse_lexpr());
                expect(TokKind::rparen);
                break;
            case TokKind::kw_circumcenter:
                consume();
                e.kind = PexprKind::circumcenter;
                e.pargs = parse_point_call(3);
                break;
            case TokKind::ident:
                e.kind = PexprKind::ident;
                e.name = consume().text;
                break;
            default:
                fail({TokKind::lparen, TokKind::kw_intersect, TokKind::kw_midpoint,
                      TokKind::kw_reflect, TokKind::kw_foot, TokKind::kw_circumcenter,
                      TokKind::ident});
        }
        return e;
    }

    Lexpr parse_lexpr() {
        Lexpr e;
        e.span = peek().span;
        switch (peek().kind) {
            case TokKind::kw_line:
                consume();
                e.kind = LexprKind::line;
                e.pargs = parse_point_call(2);
                break;
            case TokKind::kw_perp_bisector:
                consume();
                e.kind = LexprKind::perp_bisector;
                e.pargs = parse_point_call(2);
                break;
            case TokKind::kw_perp:
                consume();
                e.kind = LexprKind::perp;
                expect(TokKind::lparen);
                e.pargs.push_back(parse_pexpr());
                expect(TokKind::comma);
                e.largs.push_back(parse_lexpr());
                expect(TokKind::rparen);
                break;
            case TokKind::ident:
                e.kind = LexprKind::ident;
                e.name = consume().text;
                break;
            default:
                fail({TokKind::kw_line, TokKind::kw_perp_bisector, TokKind::kw_perp,
                      TokKind::ident});
        }
        return e;
    }

    RatLit parse_rat() {
        RatLit lit;
        lit.span = peek().span;
        std::string sign;
        if (at(TokKind::minus)) {
            consume();
            sign = "-";
        }
        if (at(TokKind::integer)) {
            lit.text = sign + consume().text;
            lit.kind = LitKind::integer;
            if (at(TokKind::slash)) {
                consume();
                lit.text += "/" + expect(TokKind::integer).text;
                lit.kind = LitKind::fraction;
            }
        } else if (at(TokKind::decimal)) {
            lit.text = sign + consume().text;
            lit.kind = LitKind::decimal;
        } else {
            fail({TokKind::integer, TokKind::decimal});
        }
        return lit;
    }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
    const Token* last_ = nullptr;
};

}  // namespace

Script parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_script(); }

Script parse_text(std::string_view source) { return parse(tokenize(source)); }

}  // namespace geoforge::dsl
