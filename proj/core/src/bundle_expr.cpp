#include "a1/bundle_expr.hpp"

#include "a1/parse_error.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>

namespace a1 {

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    SplitBundle run() {
        SplitBundle e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    SplitBundle expr() {
        SplitBundle e = term();
        while (peek('+')) {
            ++pos_;
            e = direct_sum(e, term());
        }
        return e;
    }

    SplitBundle term() {
        SplitBundle e = factor();
        while (peek('*')) {
            ++pos_;
            e = tensor(e, factor());
        }
        return e;
    }

    SplitBundle factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected 'O' or '('", pos_);
        if (text_[pos_] == '(') {
            ++pos_;
            SplitBundle e = expr();
            expect(')');
            return e;
        }
        if (text_[pos_] == 'O') {
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(') {
                ++pos_;
                Deg d = integer();
                expect(')');
                return SplitBundle{d};
            }
            return SplitBundle{0};
        }
        throw ParseError("expected 'O' or '('", pos_);
    }

    Deg integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected integer", start);
        errno = 0;
        Deg value = std::strtoll(text_.c_str() + start, nullptr, 10);
        if (errno == ERANGE) throw ParseError("integer out of range", start);
        return value;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

SplitBundle parse_bundle(const std::string& text) {
    return ExprParser(text).run();
}

} // namespace a1
