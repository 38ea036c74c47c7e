#include "doctest.h"

#include "oracle.hpp"
#include "support.hpp"

#include "pseudolin/error.hpp"
#include "pseudolin/instances.hpp"
#include "pseudolin/random_instance.hpp"

using namespace pseudolin;
using namespace testgen;

namespace {

BiPoly B(const Poly& p) { return BiPoly(p); }

OrePoly op(std::initializer_list<Poly> c) { return OrePoly::from_polys(Generator::Dx, std::vector<Poly>(c)); }

std::vector<RatFun> as_rat(const std::vector<Poly>& a) { return {a.begin(), a.end()}; }

bool same_up_to_sign(const Poly& a, const Poly& b) { return a == b || a == -b; }

} // namespace

TEST_CASE("hermite reduction examples")
{
    const Poly x = X();
    const BiPoly y = Y();
    const BiPoly q = y * y + B(x);

    auto red = hermite_reduce(YPoly(B(Poly(3)) * y + B(x)), 1, q, true);
    CHECK(red.r == YPoly(B(Poly(3)) * y + B(x)));
    CHECK(red.h->num.is_zero());

    red = hermite_reduce(YPoly(B(Poly(1))), 2, q, true);
    CHECK(red.r == YPoly(RatFun(Poly(1), Poly(2) * x)));
    CHECK(red.h->power == 1);
    CHECK(red.h->num == YPoly(y) * RatFun(Poly(1), Poly(2) * x));
    CHECK(check_hermite_identity(YPoly(B(Poly(1))), 2, q, red));

    red = hermite_reduce(YPoly(B(Poly(-2)) * y), 2, q, false);
    CHECK(red.r.is_zero());

    CHECK_THROWS_AS(hermite_reduce(YPoly(B(Poly(1))), 2, (y + B(x)) * (y + B(x)), false), DomainError);
}

TEST_CASE("hermite reduction on random inputs")
{
    Gen g(5);
    for (int t = 0; t < 30; ++t) {
        auto [p, q] = random_hermite(static_cast<int>(g.integer(1, 2)), static_cast<int>(g.integer(1, 2)), {}, 100 + t);
        const int power = static_cast<int>(g.integer(0, 4));
        const YPoly num(g.bipoly(q.deg_y() * std::max(power, 1) + 1, 2));
        auto red = hermite_reduce(num, power, q, true);
        CHECK(red.r.degree() < q.deg_y());
        CHECK(check_hermite_identity(num, power, q, red));
        // a derivative reduces to zero
        const YPoly d = YPoly(p).derivative_y() * YPoly(q) - YPoly(p) * YPoly(bipoly_derivative(q, Var::y));
        CHECK(hermite_reduce(d, 2, q, false).r.is_zero());
    }
}

TEST_CASE("hermite instance examples")
{
    const Poly x = X();
    const BiPoly y = Y();
    const BiPoly q = y * y + B(x);
    HermiteInstance inst = build_hermite(B(Poly(1)), q);
    CHECK(inst.map.T()(0, 0) == RatFun(Poly(-1), Poly(2) * x));
    CHECK(inst.map.T()(1, 0) == RatFun());
    CHECK(same_up_to_sign(inst.realisation.delta, Poly(4) * x));
    CHECK(same_up_to_sign(inst.realisation.delta, q.lc_y() * resultant_y(q, bipoly_derivative(q, Var::y))));
    CHECK(inst.realisation.reconstruct() == inst.map.T());

    TelescoperResult res = telescoper(inst, true);
    CHECK(res.op.to_string() == "2*x*Dx + 1");
    CHECK(res.verified);
    REQUIRE(res.certificate.has_value());

    // f = 1/(y - x): the telescoper is Dx
    HermiteInstance lin = build_hermite(B(Poly(1)), y - B(x));
    CHECK(telescoper(lin, false).op.to_string() == "Dx");

    CHECK(genericity_check(B(x) * (y * y - B(Poly(1))) + y));
    CHECK_FALSE(genericity_check(q));
    CHECK_FALSE(genericity_check(B(x) * (y - B(Poly(1))) * (y - B(Poly(1))) + B(Poly(1))));

    CHECK(bound_hermite(1, 1, 2) == 5);
    CHECK(bound_hermite(2, 1, 2) == 9);

    CHECK_THROWS_AS(build_hermite(y * y, q), DomainError);
    CHECK_THROWS_AS(build_hermite(B(Poly(1)), (y + B(x)) * (y + B(x))), DomainError);
    CHECK_THROWS_AS(build_hermite(y + B(x), (y + B(x)) * (y - B(x))), DomainError);
    CHECK_THROWS_AS(build_hermite(B(x * x), q), DomainError);
}

TEST_CASE("hermite instances: realisation, reduction and oracle agree")
{
    for (int t = 0; t < 25; ++t) {
        const int dx = 1 + t % 2, dy = 1 + (t / 2) % 3;
        RandomOptions opt;
        opt.generic = t % 3 != 0;
        auto [p, q] = random_hermite(dx, dy, opt, 900 + t);
        HermiteInstance inst = build_hermite(p, q);

        const BiPoly qx = bipoly_derivative(q, Var::x);
        for (int j = 0; j < dy; ++j) {
            std::vector<Poly> yj(static_cast<std::size_t>(j) + 1);
            yj.back() = Poly(1);
            auto red = hermite_reduce(YPoly(qx * BiPoly(yj)), 2, q, false);
            for (int i = 0; i < dy; ++i)
                CHECK(inst.map.T()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == -red.r.coeff(i));
        }
        CHECK(same_up_to_sign(inst.realisation.delta, q.lc_y() * resultant_y(q, bipoly_derivative(q, Var::y))));
        CHECK(inst.realisation.delta_degree() <= 2 * dx * dy);
        if (genericity_check(q)) CHECK(is_strictly_proper(inst.map.T()));

        TelescoperResult res = telescoper(inst, t < 6);
        CHECK(res.verified);
        CHECK(res.relation.rho <= dy);
        auto o = oracle::min_relation(inst.map.T(), as_rat(inst.a));
        CHECK(o.rho == res.relation.rho);
        CHECK(o.eta == res.relation.eta);
        BoundReport rep = hermite_report(inst, res.relation);
        CHECK(rep.asserted == genericity_check(q));
        if (rep.asserted) {
            CHECK(rep.holds());
            CHECK(res.op.degree() <= bound_hermite(res.relation.rho, dx, dy));
            CHECK(instance_realisation_report("hermite", inst.map, inst.realisation, inst.a, res.relation).holds());
        }
    }
}

TEST_CASE("genericity matches the resultant degree")
{
    int seen_true = 0, seen_false = 0;
    for (int t = 0; t < 60; ++t) {
        const int dx = 1 + t % 2, dy = 1 + (t / 2) % 3;
        Gen g(static_cast<std::uint64_t>(3000 + t));
        BiPoly q = g.bipoly(dy, dx, 2);
        if (q.deg_y() != dy || q.deg_x() != dx || !squarefree_y(q)) continue;
        const bool gen = genericity_check(q);
        (gen ? seen_true : seen_false)++;
        CHECK(gen == (resultant_y(q, bipoly_derivative(q, Var::y)).degree() == (2 * dy - 1) * dx));
    }
    CHECK(seen_true > 0);
    CHECK(seen_false > 0);
}

TEST_CASE("resolvent examples")
{
    const Poly x = X();
    const BiPoly y = Y();
    AlgebraicInstance inst = build_algebraic(y * y - B(x));
    CHECK(inst.map.T()(1, 1) == RatFun(Poly(1), Poly(2) * x));
    CHECK(inst.map.T()(0, 1) == RatFun());
    CHECK(same_up_to_sign(inst.realisation.delta, Poly(4) * x));
    CHECK(resolvent(inst).op.to_string() == "2*x*Dx - 1");
    CHECK(resolvent(inst).verified);

    CHECK(resolvent(build_algebraic(y - B(x * x))).op.to_string() == "x*Dx - 2");
    CHECK(resolvent(build_algebraic(y * y - B(x + Poly(1)))).op.to_string() == "2*x*Dx + 2*Dx - 1");
    CHECK(bound_algebraic(1, 1, 2) == 3);
    CHECK_THROWS_AS(build_algebraic((y - B(x)) * (y - B(x))), DomainError);
    CHECK_THROWS_AS(build_algebraic(B(x)), DomainError);
}

TEST_CASE("random resolvents")
{
    for (int t = 0; t < 12; ++t) {
        const int dx = 1 + t % 2, dy = 1 + (t / 2) % 3;
        RandomOptions opt;
        opt.generic = t % 4 != 0;
        BiPoly P = random_algebraic(dx, dy, opt, 500 + t);
        AlgebraicInstance inst = build_algebraic(P);
        CHECK(same_up_to_sign(inst.realisation.delta, resultant_y(P, bipoly_derivative(P, Var::y))));
        ResolventResult res = resolvent(inst);
        CHECK(res.verified);
        CHECK(res.op.order() <= dy);
        BoundReport rep = resolvent_report(inst, res.op);
        if (rep.asserted) CHECK(rep.holds());
        OrePoly broken = res.op + OrePoly::from_polys(Generator::Dx, {Poly(1)});
        CHECK_FALSE(verify_resolvent(broken, P));
    }
}

TEST_CASE("lclm examples")
{
    const Poly x = X();
    auto a = op({Poly(-1), x}), b = op({Poly(-2), x});
    ClosureInstance inst = build_lclm({a, b});
    CHECK(inst.map.T() == RatMatrix(2, 2, {RatFun(Poly(1), x), RatFun(), RatFun(), RatFun(Poly(2), x)}));
    CHECK(inst.a == std::vector<Poly>{Poly(1), Poly(1)});
    CHECK(inst.realisation.reconstruct() == inst.map.T());
    CHECK(lclm(inst).op.to_string() == "x^2*Dx^2 - 2*x*Dx + 2");
    CHECK(lclm(inst).verified);

    auto c = op({Poly(-1), Poly(1)}), d = op({Poly(1), Poly(1)});
    ClosureInstance irr = build_lclm({c, d});
    CHECK_FALSE(is_strictly_proper(irr.map.T()));
    CHECK(lclm(irr).op.to_string() == "Dx^2 - 1");
    CHECK_FALSE(lclm_report(irr, lclm(irr).relation).asserted);

    auto l2 = op({Poly(2), Poly(-2) * x, x * x});
    CHECK(lclm(build_lclm({l2, l2})).op == normalize_primitive(l2, true));
    CHECK(bound_lclm(2, {1, 1}, 1) == 7);
    CHECK(bound_lclm(3, {1, 1, 1}, 1) == 18);
    CHECK_THROWS_AS(build_lclm({OrePoly()}), DomainError);
}

TEST_CASE("random lclms")
{
    for (int t = 0; t < 10; ++t) {
        std::vector<int> orders{1 + t % 2, 1 + (t / 2) % 2};
        if (t % 5 == 4) orders.push_back(1);
        RandomOptions opt;
        opt.regular_infinity = true;
        auto ops = random_operators(orders, 1 + t % 2, opt, 70 + t);
        ClosureInstance inst = build_lclm(ops);
        CHECK(is_strictly_proper(inst.map.T()));
        CHECK(inst.realisation.reconstruct() == inst.map.T());
        ClosureResult res = lclm(inst);
        CHECK(res.verified);
        CHECK(verify_relation(inst.map, inst.a, res.relation));
        BoundReport rep = lclm_report(inst, res.relation);
        CHECK(rep.asserted);
        CHECK(rep.holds());
        CHECK(instance_realisation_report("lclm", inst.map, inst.realisation, inst.a, res.relation).holds());
    }
}

TEST_CASE("symmetric product examples")
{
    const Poly x = X();
    auto a = op({Poly(-1), x}), b = op({Poly(-2), x});
    ClosureInstance inst = build_symprod({a, b});
    CHECK(inst.map.T() == RatMatrix(1, 1, {RatFun(Poly(3), x)}));
    CHECK(inst.realisation.delta_degree() == 2);
    CHECK(inst.realisation.reconstruct() == inst.map.T());
    CHECK(symprod(inst).op.to_string() == "x*Dx - 3");
    CHECK(symprod(inst).verified);

    auto e = op({Poly(-1), Poly(1)});
    CHECK(symprod(build_symprod({e, e})).op.to_string() == "Dx - 2");

    auto l2 = op({Poly(2), Poly(-2) * x, x * x});
    ClosureInstance two = build_symprod({a, l2});
    CHECK(two.realisation.reconstruct() == two.map.T());
    CHECK(symprod(two).op.to_string() == "x^2*Dx^2 - 4*x*Dx + 6");
    CHECK(bound_symprod(1, {1, 1}, {1, 1}) == 4);
    CHECK(bound_symprod(2, {1, 2}, {1, 2}) == 15);
    CHECK_FALSE(verify_symprod(op({Poly(-4), x}), {a, b}, 1));
}

TEST_CASE("random symmetric products")
{
    for (int t = 0; t < 8; ++t) {
        std::vector<int> orders{1 + t % 2, 1 + (t / 2) % 2};
        if (t == 7) orders = {1, 1, 2};
        RandomOptions opt;
        opt.regular_infinity = true;
        auto ops = random_operators(orders, 1 + t % 2, opt, 40 + t);
        ClosureInstance inst = build_symprod(ops);
        CHECK(is_strictly_proper(inst.map.T()));
        CHECK(inst.realisation.reconstruct() == inst.map.T());
        ClosureResult res = symprod(inst, 9 + t);
        CHECK(res.verified);
        BoundReport rep = symprod_report(inst, res.relation);
        CHECK(rep.asserted);
        CHECK(rep.holds());
        CHECK(instance_realisation_report("symprod", inst.map, inst.realisation, inst.a, res.relation).holds());
    }
}
