#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tangle.hpp"

namespace tg {

namespace {

struct Token {
    enum class Kind { Id, Cup, Cap, Xp, Xm, LParen, RParen, Semi, Star, Nat, End };
    Kind kind;
    std::size_t value = 0;  // Nat
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_trivia();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        const char c = text_[pos_];
        if (c == '(') return consume(t, Token::Kind::LParen);
        if (c == ')') return consume(t, Token::Kind::RParen);
        if (c == ';') return consume(t, Token::Kind::Semi);
        if (c == '*') return consume(t, Token::Kind::Star);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t value = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
                advance();
            }
            t.kind = Token::Kind::Nat;
            t.value = value;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                word += text_[pos_];
                advance();
            }
            if (word == "id") {
                t.kind = Token::Kind::Id;
                return t;
            }
            if (word == "cup") {
                t.kind = Token::Kind::Cup;
                return t;
            }
            if (word == "cap") {
                t.kind = Token::Kind::Cap;
                return t;
            }
            if (word == "x" && pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                t.kind = text_[pos_] == '+' ? Token::Kind::Xp : Token::Kind::Xm;
                advance();
                return t;
            }
            fail(ErrorCode::Syntax, "unknown word '" + word + "' at line " +
                                        std::to_string(t.line) + ", column " +
                                        std::to_string(t.col));
        }
        fail(ErrorCode::Syntax, std::string("unexpected character '") + c + "' at line " +
                                    std::to_string(t.line) + ", column " +
                                    std::to_string(t.col));
    }

private:
    Token consume(Token t, Token::Kind kind) {
        t.kind = kind;
        advance();
        return t;
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { current_ = lexer_.next(); }

    Expr run() {
        Expr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) {
        fail(ErrorCode::Syntax, "expected " + what + " at line " + std::to_string(current_.line) +
                                    ", column " + std::to_string(current_.col));
    }

    Token take() {
        Token t = current_;
        current_ = lexer_.next();
        return t;
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (current_.kind != kind) error(what);
        return take();
    }

    bool accept(Token::Kind kind, SourcePos* pos = nullptr) {
        if (current_.kind != kind) return false;
        if (pos) *pos = {current_.line, current_.col};
        take();
        return true;
    }

    Expr expr() {
        Expr e = term();
        SourcePos pos;
        while (accept(Token::Kind::Semi, &pos)) {
            e = make_compose(std::move(e), term(), pos);
        }
        return e;
    }

    Expr term() {
        Expr e = factor();
        SourcePos pos;
        while (accept(Token::Kind::Star, &pos)) {
            e = make_tensor(std::move(e), factor(), pos);
        }
        return e;
    }

    Expr factor() {
        const SourcePos pos{current_.line, current_.col};
        switch (current_.kind) {
            case Token::Kind::Cup:
                take();
                return make_cup(pos);
            case Token::Kind::Cap:
                take();
                return make_cap(pos);
            case Token::Kind::Xp:
                take();
                return make_xp(pos);
            case Token::Kind::Xm:
                take();
                return make_xm(pos);
            case Token::Kind::Id: {
                take();
                expect(Token::Kind::LParen, "'(' after id");
                Token n = expect(Token::Kind::Nat, "a strand count");
                expect(Token::Kind::RParen, "')'");
                return make_id(n.value, pos);
            }
            case Token::Kind::LParen: {
                take();
                Expr e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            default:
                error("a tangle factor");
        }
    }

    Lexer lexer_;
    Token current_;
};

}  // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

}  // namespace tg
