#pragma once

#include <cctype>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumbing_tree.hpp"

namespace plumbook {

/// Syntax or validation failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column), message_(what) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_, column_;
    std::string message_;
};

namespace detail {

class DslLexer {
public:
    enum class Kind { ident, integer, lbrace, rbrace, colon, dash2, end };
    struct Token {
        Kind kind;
        std::string text;
        std::size_t line, column;
    };

    explicit DslLexer(std::string_view src) : src_(src) {}

    Token next() {
        skip();
        Token t{Kind::end, "", line_, col_};
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        if (c == '{') return single(t, Kind::lbrace);
        if (c == '}') return single(t, Kind::rbrace);
        if (c == ':') return single(t, Kind::colon);
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
            advance();
            advance();
            t.kind = Kind::dash2;
            t.text = "--";
            return t;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Kind::integer;
            t.text.push_back(c);
            advance();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t.text.push_back(src_[pos_]);
                advance();
            }
            if (t.text == "-" || t.text == "+") throw ParseError("expected digits after sign", t.line, t.column);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Kind::ident;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_' || src_[pos_] == '.' || src_[pos_] == '\'')) {
                t.text.push_back(src_[pos_]);
                advance();
            }
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }

private:
    Token single(Token t, Kind k) {
        t.kind = k;
        t.text = std::string(1, src_[pos_]);
        advance();
        return t;
    }
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

inline const char* kind_name(DslLexer::Kind k) {
    switch (k) {
        case DslLexer::Kind::ident: return "identifier";
        case DslLexer::Kind::integer: return "integer";
        case DslLexer::Kind::lbrace: return "'{'";
        case DslLexer::Kind::rbrace: return "'}'";
        case DslLexer::Kind::colon: return "':'";
        case DslLexer::Kind::dash2: return "'--'";
        case DslLexer::Kind::end: return "end of input";
    }
    return "?";
}

}  // namespace detail

/// Grammar: tree "{" (IDENT ":" INT | IDENT "--" IDENT)* "}"
inline PlumbingTree parse_tree(std::string_view text) {
    using Lexer = detail::DslLexer;
    using Kind = Lexer::Kind;
    Lexer lex(text);
    Lexer::Token tok = lex.next();

    auto fail = [](const Lexer::Token& t, const std::string& what) -> ParseError {
        return ParseError(what + ", found " + (t.kind == Kind::end ? std::string("end of input")
                                                                   : "'" + t.text + "'"),
                          t.line, t.column);
    };
    auto expect = [&](Kind k) {
        if (tok.kind != k) throw fail(tok, std::string("expected ") + detail::kind_name(k));
        Lexer::Token t = tok;
        tok = lex.next();
        return t;
    };

    Lexer::Token head = expect(Kind::ident);
    if (head.text != "tree") throw ParseError("expected keyword 'tree'", head.line, head.column);
    expect(Kind::lbrace);

    std::vector<PlumbingTree::Vertex> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<VertexId> declared;
    std::vector<Lexer::Token> edge_tokens;
    std::set<std::pair<VertexId, VertexId>> edge_set;

    while (tok.kind != Kind::rbrace) {
        if (tok.kind == Kind::end) throw fail(tok, "expected '}'");
        Lexer::Token name = expect(Kind::ident);
        if (tok.kind == Kind::colon) {
            tok = lex.next();
            Lexer::Token num = expect(Kind::integer);
            long long value;
            try {
                value = std::stoll(num.text);
            } catch (const std::out_of_range&) {
                throw ParseError("integer out of range", num.line, num.column);
            }
            if (value > -2)
                throw ParseError("euler number " + num.text + " > -2", num.line, num.column);
            if (!declared.insert(name.text).second)
                throw ParseError("duplicate vertex '" + name.text + "'", name.line, name.column);
            vertices.push_back({name.text, value});
        } else if (tok.kind == Kind::dash2) {
            tok = lex.next();
            Lexer::Token other = expect(Kind::ident);
            if (name.text == other.text)
                throw ParseError("self-loop at '" + name.text + "'", name.line, name.column);
            auto key = std::minmax(name.text, other.text);
            if (!edge_set.emplace(key.first, key.second).second)
                throw ParseError("duplicate edge '" + name.text + "' -- '" + other.text + "'",
                                 name.line, name.column);
            edges.emplace_back(name.text, other.text);
            edge_tokens.push_back(name);
            edge_tokens.push_back(other);
        } else {
            throw fail(tok, "expected ':' or '--'");
        }
    }
    Lexer::Token close = tok;
    tok = lex.next();
    if (tok.kind != Kind::end) throw fail(tok, "expected end of input");

    for (const auto& t : edge_tokens)
        if (!declared.count(t.text))
            throw ParseError("edge refers to undeclared vertex '" + t.text + "'", t.line, t.column);
    if (vertices.empty()) throw ParseError("tree has no vertices", close.line, close.column);
    try {
        return PlumbingTree(std::move(vertices), std::move(edges));
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), close.line, close.column);
    }
}

/// Canonical DSL text; parse_tree(to_dsl(t)) == t.
inline std::string to_dsl(const PlumbingTree& t) {
    std::string out = "tree {\n";
    for (const auto& v : t.vertices()) out += "  " + v.id + ":" + std::to_string(v.euler) + "\n";
    for (const auto& [a, b] : t.edge_ids()) out += "  " + a + " -- " + b + "\n";
    return out + "}\n";
}

}  // namespace plumbook
