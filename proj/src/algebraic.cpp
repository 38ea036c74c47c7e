#include "pseudolin/instances.hpp"
#include "pseudolin/error.hpp"

namespace pseudolin {

namespace {

BiPoly ymono(int k)
{
    std::vector<Poly> c(static_cast<std::size_t>(k) + 1);
    c.back() = Poly(1);
    return BiPoly(std::move(c));
}

// The single root of a polynomial of degree 1 in y.
RatFun linear_root(const BiPoly& P) { return RatFun(-P.ycoeff(0)) / RatFun(P.ycoeff(1)); }

} // namespace

AlgebraicInstance build_algebraic(const BiPoly& P)
{
    if (P.deg_y() < 1) throw DomainError("polynomial must have positive degree in y");
    if (!squarefree_y(P)) throw DomainError("polynomial is not square-free in y");

    AlgebraicInstance inst;
    inst.P = P;
    inst.d_x = P.deg_x();
    inst.d_y = P.deg_y();
    const auto dy = static_cast<std::size_t>(inst.d_y);
    const std::size_t m = 2 * dy - 1;

    const BiPoly Px = bipoly_derivative(P, Var::x);
    const BiPoly Py = bipoly_derivative(P, Var::y);

    // Columns: y^k P for k < d_y - 1, then y^k P_y for k < d_y.
    PolyMatrix M(m, m), Y(m, dy), X(dy, m), W(dy, dy);
    auto put = [](PolyMatrix& mat, std::size_t col, const BiPoly& v) {
        for (int j = 0; j <= v.deg_y(); ++j) mat(static_cast<std::size_t>(j), col) = v.ycoeff(j);
    };
    for (std::size_t k = 0; k + 1 < dy; ++k) put(M, k, ymono(static_cast<int>(k)) * P);
    for (std::size_t k = 0; k < dy; ++k) {
        put(M, dy - 1 + k, ymono(static_cast<int>(k)) * Py);
        if (k > 0) put(Y, k, -(BiPoly(Poly(static_cast<long>(k))) * ymono(static_cast<int>(k) - 1) * Px));
        X(k, dy - 1 + k) = Poly(1);
    }
    inst.realisation = Realisation::make(std::move(W), std::move(X), std::move(M), std::move(Y));

    const RatMatrix Mr = to_rat(inst.realisation.M);
    const RatMatrix Yr = to_rat(inst.realisation.Y);
    RatMatrix T(dy, dy);
    for (std::size_t j = 1; j < dy; ++j) {
        const auto v = solve_rational(Mr, Yr.column(j));
        if (!v) throw Error("Bezout system is inconsistent");
        for (std::size_t i = 0; i < dy; ++i) T(i, j) = (*v)[dy - 1 + i];
    }
    inst.map = PseudoLinearMap(std::move(T));
    if (dy >= 2) {
        inst.a.assign(dy, Poly());
        inst.a[1] = Poly(1);
    }
    return inst;
}

ResolventResult resolvent(const AlgebraicInstance& inst)
{
    ResolventResult res;
    if (inst.d_y == 1) {
        const RatFun root = linear_root(inst.P);
        if (root.is_zero()) throw DomainError("the root is identically zero");
        res.op = normalize_primitive(OrePoly(Generator::Dx, {-(root.derivative() / root), RatFun(1)}), true);
    } else {
        res.relation = solve_min_relation(inst.map, inst.a);
        res.op = res.relation->as_operator();
    }
    res.verified = verify_resolvent(res.op, inst.P);
    return res;
}

bool verify_resolvent(const OrePoly& l, const BiPoly& P)
{
    if (l.is_zero()) return false;
    if (P.deg_y() == 1) return ore_apply(l, linear_root(P)).is_zero();

    const YPoly Q(P);
    const YPoly Px(bipoly_derivative(P, Var::x));
    const ExtendedGcd eg = ypoly_extended_gcd(YPoly(bipoly_derivative(P, Var::y)), Q);
    if (eg.g.degree() != 0) return false;
    const YPoly slope = divmod(-(Px * eg.u), Q).second;

    YPoly d(std::vector<RatFun>{RatFun(0), RatFun(1)});
    YPoly sum;
    for (int i = 0; i <= l.order(); ++i) {
        sum += d * l.coeff(i);
        d = d.derivative_x() + divmod(d.derivative_y() * slope, Q).second;
    }
    return divmod(sum, Q).second.is_zero();
}

long bound_algebraic(int r, int d_x, int d_y)
{
    return bound_realisation(r, 0, (2 * d_y - 1) * d_x, r);
}

BoundReport resolvent_report(const AlgebraicInstance& inst, const OrePoly& op)
{
    BoundReport r;
    r.label = "resolvent";
    r.name = "algebraic";
    r.rho = op.order();
    r.observed = operator_degrees(op);
    for (int i = 0; i <= r.rho; ++i) r.bound.push_back(bound_realisation(r.rho, 0, (2 * inst.d_y - 1) * inst.d_x, i));
    r.asserted = inst.d_y >= 2 && genericity_check(inst.P);
    return r;
}

} // namespace pseudolin
