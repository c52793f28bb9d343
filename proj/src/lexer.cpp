#include "geoforge/dsl/lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace geoforge::dsl {

namespace {

constexpr std::pair<std::string_view, TokKind> kKeywords[] = {
    {"point", TokKind::kw_point},
    {"line", TokKind::kw_line},
    {"assert", TokKind::kw_assert},
    {"render", TokKind::kw_render},
    {"label", TokKind::kw_label},
    {"intersect", TokKind::kw_intersect},
    {"midpoint", TokKind::kw_midpoint},
    {"reflect", TokKind::kw_reflect},
    {"foot", TokKind::kw_foot},
    {"circumcenter", TokKind::kw_circumcenter},
    {"perp_bisector", TokKind::kw_perp_bisector},
    {"perp", TokKind::kw_perp},
    {"similar", TokKind::kw_similar},
    {"congruent", TokKind::kw_congruent},
    {"concyclic", TokKind::kw_concyclic},
    {"collinear", TokKind::kw_collinear},
    {"equals", TokKind::kw_equals},
    {"ratio_sq", TokKind::kw_ratio_sq},
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string token_name(TokKind kind) {
    for (const auto& [text, k] : kKeywords)
        if (k == kind) return '"' + std::string(text) + '"';
    switch (kind) {
        case TokKind::ident: return "identifier";
        case TokKind::integer: return "integer";
        case TokKind::decimal: return "decimal number";
        case TokKind::string: return "string";
        case TokKind::lparen: return "\"(\"";
        case TokKind::rparen: return "\")\"";
        case TokKind::lbrace: return "\"{\"";
        case TokKind::rbrace: return "\"}\"";
        case TokKind::comma: return "\",\"";
        case TokKind::semicolon: return "\";\"";
        case TokKind::slash: return "\"/\"";
        case TokKind::minus: return "\"-\"";
        case TokKind::eq: return "\"=\"";
        case TokKind::eqeq: return "\"==\"";
        default: return "end of input";
    }
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;

    const auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    const auto push = [&](TokKind kind, std::size_t len) {
        tokens.push_back({kind, std::string(source.substr(i, len)), {line, column}});
        advance(len);
    };

    while (i < source.size()) {
        const char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < source.size() && source[i] != '\n') advance(1);
            continue;
        }
        if (ident_start(c)) {
            std::size_t len = 1;
            while (i + len < source.size() && ident_char(source[i + len])) ++len;
            const std::string_view word = source.substr(i, len);
            TokKind kind = TokKind::ident;
            for (const auto& [text, k] : kKeywords)
                if (word == text) kind = k;
            push(kind, len);
            continue;
        }
        if (digit(c)) {
            std::size_t len = 1;
            while (i + len < source.size() && digit(source[i + len])) ++len;
            if (i + len < source.size() && source[i + len] == '.') {
                std::size_t frac = len + 1;
                if (frac >= source.size() || !digit(source[i + frac]))
                    throw ScriptError({line, column},
                                      "syntax error at " + span_phrase({line, column}) +
                                          ", malformed decimal literal");
                while (i + frac < source.size() && digit(source[i + frac])) ++frac;
                push(TokKind::decimal, frac);
            } else {
                push(TokKind::integer, len);
            }
            continue;
        }
        if (c == '"') {
            std::size_t len = 1;
            while (i + len < source.size() && source[i + len] != '"' && source[i + len] != '\n')
                ++len;
            if (i + len >= source.size() || source[i + len] != '"')
                throw ScriptError({line, column}, "syntax error at " + span_phrase({line, column}) +
                                                      ", unterminated string");
            Token tok{TokKind::string, std::string(source.substr(i + 1, len - 1)), {line, column}};
            tokens.push_back(std::move(tok));
            advance(len + 1);
            continue;
        }
        switch (c) {
            case '(': push(TokKind::lparen, 1); continue;
            case ')': push(TokKind::rparen, 1); continue;
            case '{': push(TokKind::lbrace, 1); continue;
            case '}': push(TokKind::rbrace, 1); continue;
            case ',': push(TokKind::comma, 1); continue;
            case ';': push(TokKind::semicolon, 1); continue;
            case '/': push(TokKind::slash, 1); continue;
            case '-': push(TokKind::minus, 1); continue;
            case '=':
                if (i + 1 < source.size() && source[i + 1] == '=')
                    push(TokKind::eqeq, 2);
                else
                    push(TokKind::eq, 1);
                continue;
            default:
                throw ScriptError({line, column},
                                  "syntax error at " + span_phrase({line, column}) +
                                      ", unexpected character '" + std::string(1, c) + "'");
        }
    }
    tokens.push_back({TokKind::end, "", {line, column}});
    return tokens;
}

}  // namespace geoforge::dsl
