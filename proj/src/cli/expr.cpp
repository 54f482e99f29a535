#include "fcq/cli/expr.hpp"

#include <cctype>

namespace fcq::cli {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::unique_ptr<Expr> parse()
    {
        auto e = sum();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    static std::unique_ptr<Expr> node(Expr::Kind k)
    {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        return e;
    }

    static std::unique_ptr<Expr> binary(Expr::Kind k, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b)
    {
        auto e = node(k);
        e->children.push_back(std::move(a));
        e->children.push_back(std::move(b));
        return e;
    }

    std::unique_ptr<Expr> sum()
    {
        auto lhs = product();
        for (;;) {
            if (accept('+'))
                lhs = binary(Expr::Kind::Add, std::move(lhs), product());
            else if (accept('-'))
                lhs = binary(Expr::Kind::Sub, std::move(lhs), product());
            else
                return lhs;
        }
    }

    std::unique_ptr<Expr> product()
    {
        auto lhs = unary();
        while (accept('*'))
            lhs = binary(Expr::Kind::Mul, std::move(lhs), unary());
        return lhs;
    }

    std::unique_ptr<Expr> unary()
    {
        if (accept('-')) {
            auto e = node(Expr::Kind::Neg);
            e->children.push_back(unary());
            return e;
        }
        if (accept('+'))
            return unary();
        return power();
    }

    std::unique_ptr<Expr> power()
    {
        auto base = atom();
        if (accept('^')) {
            auto e = node(Expr::Kind::Pow);
            e->children.push_back(std::move(base));
            e->argument = signed_integer("exponent");
            return e;
        }
        return base;
    }

    long signed_integer(const char* what)
    {
        skip();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else if (accept('('))
            return paren_integer(what);
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(std::string("expected an integer ") + what);
        const std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 9)
            fail(std::string(what) + " out of range");
        const long v = std::stol(digits);
        return neg ? -v : v;
    }

    long paren_integer(const char* what)
    {
        const long v = signed_integer(what);
        expect(')');
        return v;
    }

    std::unique_ptr<Expr> atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        const char c = s_[pos_];
        if (accept('(')) {
            auto e = sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            auto e = node(Expr::Kind::Integer);
            e->value = Integer(s_.substr(start, pos_ - start));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (accept('(')) {
                auto e = node(Expr::Kind::Call);
                e->name = name;
                e->argument = paren_integer("argument");
                return e;
            }
            auto e = node(Expr::Kind::Identifier);
            e->name = name;
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out)
{
    if (e.kind == Expr::Kind::Identifier)
        out.insert(e.name);
    for (const auto& c : e.children)
        collect(*c, out);
}

} // namespace

std::unique_ptr<Expr> parse_expression(const std::string& text) { return Parser(text).parse(); }

std::set<std::string> identifiers(const Expr& e)
{
    std::set<std::string> out;
    collect(e, out);
    return out;
}

} // namespace fcq::cli
