#include "pseudolin/parse.hpp"
#include "pseudolin/error.hpp"

#include <cctype>
#include <memory>

namespace pseudolin {

namespace {

struct Node {
    enum Kind { num, var_x, var_y, var_dx, add, sub, mul, div, pow, neg } kind;
    std::size_t pos;
    BigInt value;
    unsigned exponent = 0;
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr leaf(Node::Kind k, std::size_t pos)
{
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
}

NodePtr binary(Node::Kind k, std::size_t pos, NodePtr a, NodePtr b)
{
    auto n = leaf(k, pos);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
        return e;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    NodePtr expr()
    {
        NodePtr e = term();
        while (true) {
            skip();
            const std::size_t at = i_;
            if (accept('+'))
                e = binary(Node::add, at, std::move(e), term());
            else if (accept('-'))
                e = binary(Node::sub, at, std::move(e), term());
            else
                return e;
        }
    }

    NodePtr term()
    {
        NodePtr e = unary();
        while (true) {
            skip();
            const std::size_t at = i_;
            if (accept('*'))
                e = binary(Node::mul, at, std::move(e), unary());
            else if (accept('/'))
                e = binary(Node::div, at, std::move(e), unary());
            else
                return e;
        }
    }

    NodePtr unary()
    {
        skip();
        const std::size_t at = i_;
        if (accept('-')) {
            auto n = leaf(Node::neg, at);
            n->lhs = unary();
            return n;
        }
        if (accept('+')) return unary();
        return factor();
    }

    NodePtr factor()
    {
        NodePtr b = base();
        skip();
        const std::size_t at = i_;
        if (!accept('^')) return b;
        skip();
        const std::size_t digits = i_;
        std::string text = digits_run();
        if (text.empty()) throw ParseError(digits, "expected a natural number exponent");
        if (text.size() > 4) throw ParseError(digits, "exponent too large");
        auto n = leaf(Node::pow, at);
        n->lhs = std::move(b);
        n->exponent = static_cast<unsigned>(std::stoul(text));
        return n;
    }

    std::string digits_run()
    {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    NodePtr base()
    {
        skip();
        const std::size_t at = i_;
        if (i_ >= s_.size()) throw ParseError(at, "unexpected end of input");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = leaf(Node::num, at);
            n->value = BigInt(digits_run());
            return n;
        }
        if (c == '(') {
            ++i_;
            NodePtr e = expr();
            if (!accept(')')) throw ParseError(i_, "expected ')'");
            return e;
        }
        if (s_.substr(i_, 2) == "Dx") {
            i_ += 2;
            check_word_end(at);
            return leaf(Node::var_dx, at);
        }
        if (c == 'x' || c == 'y') {
            ++i_;
            check_word_end(at);
            return leaf(c == 'x' ? Node::var_x : Node::var_y, at);
        }
        throw ParseError(at, std::string("unexpected '") + c + "'");
    }

    void check_word_end(std::size_t start)
    {
        if (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])))
            throw ParseError(start, "unknown identifier");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

// Fraction of bivariate polynomials, reduced only at the end.
struct Frac {
    BiPoly num, den;
};

Frac eval_frac(const Node& n)
{
    switch (n.kind) {
    case Node::num: return {BiPoly(Poly(BigRational(n.value))), BiPoly(Poly(1))};
    case Node::var_x: return {BiPoly(Poly::x()), BiPoly(Poly(1))};
    case Node::var_y: return {BiPoly::y(), BiPoly(Poly(1))};
    case Node::var_dx: throw ParseError(n.pos, "Dx is not allowed in a rational function");
    case Node::neg: {
        Frac a = eval_frac(*n.lhs);
        return {-a.num, a.den};
    }
    case Node::pow: {
        Frac a = eval_frac(*n.lhs);
        Frac r{BiPoly(Poly(1)), BiPoly(Poly(1))};
        for (unsigned k = 0; k < n.exponent; ++k) r = {r.num * a.num, r.den * a.den};
        return r;
    }
    default: break;
    }
    Frac a = eval_frac(*n.lhs), b = eval_frac(*n.rhs);
    switch (n.kind) {
    case Node::add: return {a.num * b.den + b.num * a.den, a.den * b.den};
    case Node::sub: return {a.num * b.den - b.num * a.den, a.den * b.den};
    case Node::mul: return {a.num * b.num, a.den * b.den};
    default:
        if (b.num.is_zero()) throw ParseError(n.pos, "division by zero");
        return {a.num * b.den, a.den * b.num};
    }
}

// Operators with coefficients in Q(x); y is rejected.
OrePoly eval_operator(const Node& n)
{
    switch (n.kind) {
    case Node::num: return OrePoly(Generator::Dx, {RatFun(BigRational(n.value))});
    case Node::var_x: return OrePoly(Generator::Dx, {RatFun(Poly::x())});
    case Node::var_y: throw ParseError(n.pos, "y is not allowed in an operator");
    case Node::var_dx: return OrePoly::gen(Generator::Dx);
    case Node::neg: return -eval_operator(*n.lhs);
    case Node::pow: {
        OrePoly a = eval_operator(*n.lhs);
        OrePoly r(Generator::Dx, {RatFun(1)});
        for (unsigned k = 0; k < n.exponent; ++k) r = ore_mul(r, a);
        return r;
    }
    default: break;
    }
    OrePoly a = eval_operator(*n.lhs), b = eval_operator(*n.rhs);
    switch (n.kind) {
    case Node::add: return a + b;
    case Node::sub: return a - b;
    case Node::mul: return ore_mul(a, b);
    default:
        if (b.order() > 0) throw ParseError(n.rhs->pos, "cannot divide by an expression containing Dx");
        if (b.is_zero()) throw ParseError(n.pos, "division by zero");
        return RatFun(1) / b.coeff(0) * a;
    }
}

NodePtr parse_tree(std::string_view text) { return Parser(text).parse(); }

} // namespace

RatFun2 parse_ratfun2(std::string_view text)
{
    Frac f = eval_frac(*parse_tree(text));
    const BiPoly g = bipoly_gcd(f.num, f.den);
    BiPoly p = bipoly_exact_div(f.num, g), q = bipoly_exact_div(f.den, g);
    // bipoly_gcd(q, q) is the normalised associate of q
    const BiPoly unit = bipoly_exact_div(q, bipoly_gcd(q, q));
    return {bipoly_exact_div(p, unit), bipoly_exact_div(q, unit)};
}

BiPoly parse_bipoly(std::string_view text)
{
    RatFun2 f = parse_ratfun2(text);
    if (f.q.deg_y() != 0 || f.q.deg_x() != 0) throw ParseError(0, "expected a polynomial, got a fraction");
    return bipoly_exact_div(f.p, f.q);
}

OrePoly parse_operator(std::string_view text)
{
    OrePoly l = eval_operator(*parse_tree(text));
    for (const auto& c : l.coeffs())
        if (!c.is_poly()) throw ParseError(0, "operator coefficients must be polynomials in x");
    return l;
}

RatFun parse_ratfun(std::string_view text)
{
    RatFun2 f = parse_ratfun2(text);
    if (f.p.deg_y() > 0 || f.q.deg_y() > 0) throw ParseError(0, "expected a rational function of x alone");
    return RatFun(f.p.ycoeff(0), f.q.ycoeff(0));
}

} // namespace pseudolin
