#include "higgsgrass/parse.hpp"

#include "higgsgrass/errors.hpp"

#include <cctype>

namespace higgsgrass {

namespace {

class Parser {
public:
    Parser(std::string_view text, VarSetPtr vars) : text_(text), vars_(std::move(vars)) {}

    Poly run() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool at_name() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string read_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer literal");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly parse_expr() {
        Poly p = parse_term();
        for (;;) {
            if (accept('+'))
                p += parse_term();
            else if (accept('-'))
                p -= parse_term();
            else
                return p;
        }
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (accept('*')) p *= parse_factor();
        return p;
    }

    Poly parse_factor() {
        if (accept('-')) return -parse_factor();
        return parse_primary();
    }

    Poly parse_primary() {
        Poly base = parse_atom();
        if (accept('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                fail("exponent must be a nonnegative integer literal");
            if (!at_digit()) fail("exponent must be a nonnegative integer literal");
            std::string digits = read_integer();
            if (digits.size() > 6) fail("exponent too large");
            base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
            if (peek('^')) fail("chained '^' is not allowed; parenthesize");
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (at_digit()) {
            std::string num = read_integer();
            if (accept('/')) {
                std::size_t den_pos = pos_;
                std::string den = read_integer();
                Rat d = Rat::from_string(den);
                if (d.is_zero()) throw ParseError("rational literal with zero denominator", den_pos);
                return Poly::constant(vars_, Rat::from_string(num) / d);
            }
            return Poly::constant(vars_, Rat::from_string(num));
        }
        if (at_name()) {
            std::size_t name_pos = pos_;
            std::string name = read_name();
            auto idx = vars_->index_of(name);
            if (!idx) {
                throw DomainError("unknown variable '" + name + "' at position " +
                                  std::to_string(name_pos));
            }
            return Poly::variable(vars_, *idx);
        }
        if (accept('(')) {
            Poly p = parse_expr();
            expect(')', "')'");
            return p;
        }
        fail("expected number, variable or '('");
    }

    std::string_view text_;
    VarSetPtr vars_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, const VarSetPtr& vars) {
    return Parser(text, vars).run();
}

} // namespace higgsgrass
