// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/parser.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "gxrepair/error.hpp"

namespace gxrepair {

namespace {

enum class Tok {
    Ident,
    String,
    Dot,
    Plus,
    Amp,
    Star,
    Bang,
    BangEq,
    Eq,
    Implies,
    Inverse,
    LBrace,
    RBrace,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Less,
    Greater,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool ident_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
}

class Lexer {
  public:
    Lexer(std::string_view src, std::size_t line, std::size_t column) : src_(src), line_(line), col_(column) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            const std::size_t line = line_;
            const std::size_t col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            const char c = src_[pos_];
            auto punct = [&](Tok k, std::size_t len) {
                out.push_back({k, std::string(src_.substr(pos_, len)), line, col});
                advance(len);
            };
            switch (c) {
                case '.':
                    punct(Tok::Dot, 1);
                    break;
                case '+':
                    punct(Tok::Plus, 1);
                    break;
                case '&':
                    punct(Tok::Amp, 1);
                    break;
                case '*':
                    punct(Tok::Star, 1);
                    break;
                case '{':
                    punct(Tok::LBrace, 1);
                    break;
                case '}':
                    punct(Tok::RBrace, 1);
                    break;
                case ',':
                    punct(Tok::Comma, 1);
                    break;
                case '[':
                    punct(Tok::LBracket, 1);
                    break;
                case ']':
                    punct(Tok::RBracket, 1);
                    break;
                case '(':
                    punct(Tok::LParen, 1);
                    break;
                case ')':
                    punct(Tok::RParen, 1);
                    break;
                case '<':
                    punct(Tok::Less, 1);
                    break;
                case '>':
                    punct(Tok::Greater, 1);
                    break;
                case '!':
                    if (peek(1) == '=') {
                        punct(Tok::BangEq, 2);
                    } else {
                        punct(Tok::Bang, 1);
                    }
                    break;
                case '=':
                    if (peek(1) == '>') {
                        punct(Tok::Implies, 2);
                    } else {
                        punct(Tok::Eq, 1);
                    }
                    break;
                case '^':
                    if (peek(1) != '-') {
                        throw ParseError("expected '-' after '^'", line, col);
                    }
                    punct(Tok::Inverse, 2);
                    break;
                case '"':
                    out.push_back({Tok::String, string_literal(), line, col});
                    break;
                default:
                    if (!ident_char(static_cast<unsigned char>(c))) {
                        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
                    }
                    std::size_t len = 0;
                    while (pos_ + len < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_ + len]))) {
                        ++len;
                    }
                    punct(Tok::Ident, len);
            }
        }
    }

  private:
    [[nodiscard]] char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_space() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                      src_[pos_] == '\r')) {
            advance(1);
        }
    }

    std::string string_literal() {
        const std::size_t line = line_;
        const std::size_t col = col_;
        advance(1);
        std::string out;
        for (;;) {
            if (pos_ >= src_.size()) {
                throw ParseError("unterminated string", line, col);
            }
            const char c = src_[pos_];
            if (c == '"') {
                advance(1);
                return out;
            }
            if (c == '\\') {
                const char e = peek(1);
                switch (e) {
                    case '"':
                        out += '"';
                        break;
                    case '\\':
                        out += '\\';
                        break;
                    case 'n':
                        out += '\n';
                        break;
                    case 't':
                        out += '\t';
                        break;
                    default:
                        throw ParseError(std::string("unknown escape '\\") + e + "'", line_, col_);
                }
                advance(2);
                continue;
            }
            out += c;
            advance(1);
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    PathPtr whole_path() {
        auto e = path_impl();
        expect(Tok::End, "end of input");
        return e;
    }

    NodePtr whole_node() {
        auto e = node_impl();
        expect(Tok::End, "end of input");
        return e;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }

    bool accept(Tok k) {
        if (at(k)) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(Tok k, const char* what) {
        if (!at(k)) {
            fail(std::string("expected ") + what);
        }
        return toks_[pos_++];
    }

    [[noreturn]] void fail(const std::string& message) const {
        const auto& t = cur();
        const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(message + ", found " + found, t.line, t.column);
    }

    // ---- node expressions ----

    NodePtr node_impl() {
        auto lhs = node_or();
        if (accept(Tok::Implies)) {
            return node_implies(lhs, node_impl());
        }
        return lhs;
    }

    NodePtr node_or() {
        auto e = node_and();
        while (accept(Tok::Plus)) {
            e = lor(e, node_and());
        }
        return e;
    }

    NodePtr node_and() {
        auto e = node_unary();
        while (accept(Tok::Amp)) {
            e = land(e, node_unary());
        }
        return e;
    }

    NodePtr node_unary() {
        if (accept(Tok::Bang)) {
            return negate(node_unary());
        }
        return node_atom();
    }

    std::string constant() {
        if (at(Tok::String) || at(Tok::Ident)) {
            return toks_[pos_++].text;
        }
        fail("expected data value");
    }

    NodePtr node_atom() {
        if (accept(Tok::Eq)) {
            return data_eq(constant());
        }
        if (accept(Tok::BangEq)) {
            return data_neq(constant());
        }
        if (accept(Tok::Less)) {
            auto lhs = path_impl();
            NodePtr out;
            if (accept(Tok::Eq)) {
                out = exists_eq(lhs, path_impl());
            } else if (accept(Tok::BangEq)) {
                out = exists_neq(lhs, path_impl());
            } else {
                out = exists(lhs);
            }
            expect(Tok::Greater, "'>'");
            return out;
        }
        if (accept(Tok::LParen)) {
            auto e = node_impl();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail("expected node expression");
    }

    // ---- path expressions ----

    PathPtr path_impl() {
        auto lhs = path_union();
        if (accept(Tok::Implies)) {
            return path_implies(lhs, path_impl());
        }
        return lhs;
    }

    PathPtr path_union() {
        auto e = path_inter();
        while (accept(Tok::Plus)) {
            e = alt(e, path_inter());
        }
        return e;
    }

    PathPtr path_inter() {
        auto e = path_concat();
        while (accept(Tok::Amp)) {
            e = intersect(e, path_concat());
        }
        return e;
    }

    PathPtr path_concat() {
        auto e = path_unary();
        while (accept(Tok::Dot)) {
            e = concat(e, path_unary());
        }
        return e;
    }

    PathPtr path_unary() {
        if (accept(Tok::Bang)) {
            return complement(path_unary());
        }
        return path_postfix();
    }

    std::size_t number() {
        if (!at(Tok::Ident)) {
            fail("expected repetition bound");
        }
        const auto& text = cur().text;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            fail("expected repetition bound");
        }
        ++pos_;
        return value;
    }

    PathPtr path_postfix() {
        auto e = path_atom();
        for (;;) {
            if (accept(Tok::Star)) {
                e = star(e);
            } else if (at(Tok::LBrace)) {
                const auto& open = cur();
                const std::size_t line = open.line;
                const std::size_t column = open.column;
                ++pos_;
                const std::size_t lo = number();
                expect(Tok::Comma, "','");
                const std::size_t hi = number();
                expect(Tok::RBrace, "'}'");
                if (lo > hi) {
                    throw ParseError("repetition bounds {" + std::to_string(lo) + "," + std::to_string(hi) +
                                         "} have n > m",
                                     line, column);
                }
                e = repeat(e, lo, hi);
            } else if (at(Tok::Inverse)) {
                fail("inverse applies only to edge labels");
            } else {
                return e;
            }
        }
    }

    PathPtr path_atom() {
        if (at(Tok::Ident) || at(Tok::String)) {
            const Token t = toks_[pos_++];
            if (t.kind == Tok::Ident && t.text == "eps") {
                return eps();
            }
            if (t.kind == Tok::Ident && t.text == "_") {
                return wildcard();
            }
            if (accept(Tok::Inverse)) {
                return inverse(t.text);
            }
            return label(t.text);
        }
        if (accept(Tok::LBracket)) {
            auto phi = node_impl();
            expect(Tok::RBracket, "']'");
            return test(phi);
        }
        if (accept(Tok::LParen)) {
            auto e = path_impl();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail("expected path expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

PathPtr parse_path_at(std::string_view text, std::size_t line, std::size_t column) {
    return Parser(Lexer(text, line, column).run()).whole_path();
}

NodePtr parse_node_at(std::string_view text, std::size_t line, std::size_t column) {
    return Parser(Lexer(text, line, column).run()).whole_node();
}

// Offset of an unquoted '#', or npos.
std::size_t comment_start(std::string_view line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
        } else if (c == '"') {
            in_string = true;
        } else if (c == '#') {
            return i;
        }
    }
    return std::string_view::npos;
}

}  // namespace

PathPtr parse_path(std::string_view text) { return parse_path_at(text, 1, 1); }

NodePtr parse_node(std::string_view text) { return parse_node_at(text, 1, 1); }

ConstraintSet parse_constraints(std::string_view text) {
    ConstraintSet out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (auto hash = comment_start(line); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        std::string_view body = line.substr(first);
        if (body.starts_with("node:")) {
            out.add(parse_node_at(body.substr(5), line_no, first + 6));
        } else if (body.starts_with("path:")) {
            out.add(parse_path_at(body.substr(5), line_no, first + 6));
        } else {
            throw ParseError("constraint line must start with 'node:' or 'path:'", line_no, first + 1);
        }
        if (end == text.size()) {
            break;
        }
    }
    return out;
}

}  // namespace gxrepair
