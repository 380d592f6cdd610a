#include "hopfgl/expression.hpp"

#include <cctype>
#include <string>

#include "hopfgl/error.hpp"

namespace hopfgl
{

namespace
{

class Parser
{
public:
    Parser(const Ring &ring, std::string_view text) : ring_(ring), text_(text) {}

    PolyElement parse()
    {
        auto p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError("in expression '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " +
                         what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    PolyElement expr()
    {
        PolyElement acc(ring_);
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        auto t = term();
        acc = negate ? -t : t;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    PolyElement term()
    {
        auto acc = factor();
        while (accept('*')) {
            acc = mul(acc, factor());
        }
        return acc;
    }

    PolyElement factor()
    {
        auto base = primary();
        if (accept('^')) {
            const auto e = digits();
            if (e.size() > 6) {
                fail("exponent too large");
            }
            return pow(base, static_cast<std::uint32_t>(std::stoul(e)));
        }
        return base;
    }

    PolyElement primary()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto literal = digits();
            if (accept('/')) {
                literal += "/" + digits();
            }
            try {
                return PolyElement(ring_, parse_rational(literal));
            } catch (const ParseError &e) {
                fail(e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_' || text_[pos_] == '.')) {
                ++pos_;
            }
            const auto name = text_.substr(start, pos_ - start);
            const auto index = ring_->index_of(name);
            if (!index) {
                pos_ = start;
                fail("unknown generator '" + std::string(name) + "'");
            }
            return PolyElement::generator(ring_, *index);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const Ring &ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

PolyElement parse_polynomial(const Ring &ring, std::string_view text)
{
    return Parser(ring, text).parse();
}

} // namespace hopfgl
