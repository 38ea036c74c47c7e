#include "doctest.h"

#include "support.hpp"

#include "pseudolin/error.hpp"

using namespace pseudolin;
using namespace testgen;

TEST_CASE("poly gcd examples")
{
    Poly x = X();
    CHECK(poly_gcd(x * x - Poly(1), x - Poly(1)) == x - Poly(1));
    CHECK(poly_gcd(x, Poly()) == x);
    CHECK(poly_gcd(x * x + Poly(1), x * x - Poly(1)) == Poly(1));
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
    CHECK(poly_gcd(Poly(3) * x, Poly(6) * x * x) == x);
}

TEST_CASE("poly basic operations")
{
    Poly x = X();
    Poly p = x * x * x - Poly(2) * x + Poly(1);
    CHECK(p.degree() == 3);
    CHECK(Poly().degree() == kZeroDegree);
    CHECK(Poly().degree() < -1000000);
    CHECK(p.derivative() == Poly(3) * x * x - Poly(2));
    CHECK(p.eval(2) == 5);
    CHECK(p.shifted(1) == (x + Poly(1)) * (x + Poly(1)) * (x + Poly(1)) - Poly(2) * (x + Poly(1)) + Poly(1));
    auto [q, r] = divmod(p, x - Poly(1));
    CHECK(q * (x - Poly(1)) + r == p);
    CHECK(r.is_zero());
    CHECK(exact_div(p, x - Poly(1)) == q);
    CHECK_THROWS_AS(exact_div(p, x - Poly(2)), DomainError);
    CHECK(pow(x + Poly(1), 3) == (x + Poly(1)) * (x + Poly(1)) * (x + Poly(1)));
    CHECK(rational_content(Poly(BigRational(3, 2)) * x + Poly(3)) == BigRational(3, 2));
    CHECK(p.to_string() == "x^3 - 2*x + 1");
    CHECK((Poly(BigRational(-1, 2)) * x).to_string() == "-1/2*x");
}

TEST_CASE("ratfun normal form")
{
    Poly x = X();
    RatFun r(Poly(2) * x * x - Poly(2), Poly(4) * x - Poly(4));
    CHECK(r.num() == x * BigRational(1, 2) + Poly(BigRational(1, 2)));
    CHECK(r.den() == Poly(1));
    RatFun s(x, Poly(-2) * x * x);
    CHECK(s.den() == x);
    CHECK(s.num() == Poly(BigRational(-1, 2)));
    CHECK(RatFun(Poly(), x).den() == Poly(1));
    CHECK_THROWS_AS(RatFun(x, Poly()), DomainError);
    CHECK((RatFun(1) / RatFun(x)).derivative() == RatFun(Poly(-1), x * x));
}

TEST_CASE("ratfun field identities on random values")
{
    Gen g(11);
    for (int t = 0; t < 200; ++t) {
        RatFun a = g.ratfun(3), b = g.ratfun(3, 5, true), c = g.ratfun(2);
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK(poly_gcd(a.num(), a.den()) == Poly(1));
        CHECK(a.den().leading() == 1);
    }
}

TEST_CASE("gcd scales with a common factor")
{
    Gen g(12);
    for (int t = 0; t < 100; ++t) {
        Poly a = g.poly(4, 5, true), b = g.poly(4, 5, true), f = g.poly(3, 5, true);
        CHECK(poly_gcd(a * f, b * f) == (f.monic() * poly_gcd(a, b)));
        Poly gg = poly_gcd(a, b);
        CHECK(divides(gg, a));
        CHECK(divides(gg, b));
    }
}

TEST_CASE("large polynomials use the integer kernels consistently")
{
    Gen g(13);
    for (int t = 0; t < 20; ++t) {
        Poly a = g.poly_exact_degree(40, 1000), b = g.poly_exact_degree(35, 1000);
        Poly c = g.poly_exact_degree(20, 1000);
        Poly ab = a * b;
        CHECK(exact_div(ab, b) == a);
        CHECK(poly_gcd(a * c, b * c) == c.monic() * poly_gcd(a, b));
        // schoolbook cross-check for the product
        std::vector<BigRational> naive(a.coeffs().size() + b.coeffs().size() - 1);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            for (std::size_t j = 0; j < b.coeffs().size(); ++j) naive[i + j] += a.coeffs()[i] * b.coeffs()[j];
        CHECK(ab == Poly(naive));
    }
}

TEST_CASE("bivariate derivatives")
{
    Poly x = X();
    BiPoly y = Y();
    BiPoly q = y * y + BiPoly(x);
    CHECK(bipoly_derivative(q, Var::y) == BiPoly(Poly(2)) * y);
    CHECK(bipoly_derivative(q, Var::x) == BiPoly(Poly(1)));
    BiPoly m = BiPoly(x * x) * y * y * y;
    CHECK(bipoly_derivative(m, Var::x) == BiPoly(Poly(2) * x) * y * y * y);
}

TEST_CASE("bivariate derivative is linear and obeys Leibniz")
{
    Gen g(14);
    for (int t = 0; t < 50; ++t) {
        BiPoly a = g.bipoly(3, 3), b = g.bipoly(2, 3);
        for (Var v : {Var::x, Var::y}) {
            CHECK(bipoly_derivative(a + b, v) == bipoly_derivative(a, v) + bipoly_derivative(b, v));
            CHECK(bipoly_derivative(a * b, v) == bipoly_derivative(a, v) * b + a * bipoly_derivative(b, v));
        }
    }
}

TEST_CASE("resultant examples")
{
    Poly x = X();
    BiPoly y = Y();
    CHECK(resultant_y(y * y + BiPoly(x), BiPoly(Poly(2)) * y) == Poly(4) * x);
    CHECK(resultant_y(y - BiPoly(Poly(1)), y + BiPoly(Poly(1))) == Poly(2));
    CHECK(resultant_y(y * y - BiPoly(x), BiPoly(Poly(2)) * y) == Poly(-4) * x);
    CHECK_THROWS_AS(resultant_y(BiPoly(), y), DomainError);
}

TEST_CASE("resultant vanishes exactly on common factors")
{
    Gen g(15);
    for (int t = 0; t < 40; ++t) {
        BiPoly a = g.bipoly(2, 2), b = g.bipoly(2, 2), c = g.bipoly(1, 2);
        if (a.deg_y() < 1 || b.deg_y() < 1 || c.deg_y() < 1) continue;
        CHECK(resultant_y(a * c, b * c).is_zero());
        bool coprime = ypoly_gcd(YPoly(a), YPoly(b)).degree() == 0;
        CHECK(resultant_y(a, b).is_zero() == !coprime);
    }
}

TEST_CASE("square-free tests in y")
{
    Poly x = X();
    BiPoly y = Y();
    BiPoly one(Poly(1));
    CHECK(squarefree_y(y * y + BiPoly(x)));
    CHECK_FALSE(squarefree_y((y - one) * (y - one)));
    CHECK(squarefree_y(y * y - BiPoly(x * x)));
}

TEST_CASE("bivariate gcd and exact division")
{
    Poly x = X();
    BiPoly y = Y();
    BiPoly a = y * y - BiPoly(x * x);
    BiPoly b = (y - BiPoly(x)) * (y + BiPoly(Poly(1)));
    CHECK(bipoly_gcd(a, b) == y - BiPoly(x));
    CHECK(bipoly_exact_div(a, y - BiPoly(x)) == y + BiPoly(x));
    CHECK(bipoly_gcd(BiPoly(Poly(2) * x) * y, BiPoly(Poly(4) * x)) == BiPoly(x));
    CHECK_THROWS_AS(bipoly_exact_div(a, y), DomainError);
}

TEST_CASE("extended gcd over Q(x)[y]")
{
    Gen g(16);
    for (int t = 0; t < 20; ++t) {
        YPoly a(g.bipoly(3, 2)), b(g.bipoly(2, 2));
        if (a.is_zero() || b.is_zero()) continue;
        auto e = ypoly_extended_gcd(a, b);
        CHECK(e.u * a + e.v * b == e.g);
        CHECK(divmod(a, e.g).second.is_zero());
        CHECK(divmod(b, e.g).second.is_zero());
    }
}
