#include "pseudolin/instances.hpp"
#include "pseudolin/error.hpp"

#include <algorithm>

namespace pseudolin {

namespace {

BiPoly ymono(int k)
{
    std::vector<Poly> c(static_cast<std::size_t>(k) + 1);
    c.back() = Poly(1);
    return BiPoly(std::move(c));
}

YPoly ypow(const YPoly& q, int e)
{
    YPoly r(RatFun(1));
    for (int k = 0; k < e; ++k) r = r * q;
    return r;
}

bool is_constant(const BiPoly& p) { return p.deg_y() <= 0 && p.deg_x() <= 0; }

} // namespace

HermiteReduction hermite_reduce(const YPoly& num, int power, const BiPoly& q, bool want_certificate)
{
    if (q.deg_y() < 1 || !squarefree_y(q)) throw DomainError("hermite reduction needs q square-free of positive degree in y");
    const YPoly Q(q);
    const YPoly Qy = Q.derivative_y();
    const int top = std::max(power - 1, 0);

    YPoly h;
    auto add_h = [&](YPoly t, int e) {
        for (int k = e; k < top; ++k) t = t * Q;
        h += t;
    };
    auto done = [&](YPoly r) {
        HermiteReduction red{std::move(r), std::nullopt};
        if (want_certificate) red.h = Certificate{h, top};
        return red;
    };

    if (power <= 0) {
        if (want_certificate) add_h((num * ypow(Q, -power)).integral_y(), 0);
        return done(YPoly());
    }

    const ExtendedGcd eg = ypoly_extended_gcd(Q, Qy);
    if (eg.g.degree() != 0) throw DomainError("q is not square-free in y");

    YPoly a = num;
    for (int m = power; m >= 2; --m) {
        const YPoly t = divmod(a * eg.v, Q).second;
        auto [s, rest] = divmod(a - t * Qy, Q);
        if (!rest.is_zero()) throw Error("hermite step left a remainder");
        const RatFun inv(make_rational(1, m - 1));
        if (want_certificate) add_h(-(t * inv), m - 1);
        a = s + t.derivative_y() * inv;
    }
    auto [quo, rem] = divmod(a, Q);
    if (want_certificate) add_h(quo.integral_y(), 0);
    return done(rem);
}

bool check_hermite_identity(const YPoly& num, int power, const BiPoly& q, const HermiteReduction& red)
{
    const YPoly Q(q);
    YPoly H;
    int P = 0;
    if (red.h) {
        H = red.h->num;
        P = red.h->power;
    }
    const int K = std::max({power, P + 1, 1});
    const YPoly lhs = num * ypow(Q, K - power);
    const YPoly dh = H.derivative_y() * Q - H * Q.derivative_y() * RatFun(P);
    const YPoly rhs = dh * ypow(Q, K - P - 1) + red.r * ypow(Q, K - 1);
    return lhs == rhs;
}

bool genericity_check(const BiPoly& q)
{
    if (q.is_zero()) return false;
    const Poly lead = q.xcoeff(q.deg_x());
    if (lead.degree() != q.deg_y()) return false;
    return poly_gcd(lead, lead.derivative()).degree() == 0;
}

HermiteInstance build_hermite(const BiPoly& p, const BiPoly& q)
{
    if (p.is_zero()) throw DomainError("numerator is zero");
    if (q.deg_y() < 1) throw DomainError("denominator must have positive degree in y");
    if (!squarefree_y(q)) throw DomainError("denominator is not square-free in y");
    if (!is_constant(bipoly_gcd(p, q))) throw DomainError("numerator and denominator are not coprime");
    if (p.deg_y() >= q.deg_y()) throw DomainError("deg_y p must be below deg_y q");
    if (p.deg_x() > q.deg_x()) throw DomainError("deg_x p must not exceed deg_x q");

    HermiteInstance inst;
    inst.p = p;
    inst.q = q;
    inst.d_x = q.deg_x();
    inst.d_y = q.deg_y();
    const auto dy = static_cast<std::size_t>(inst.d_y);
    const std::size_t m = 2 * dy;

    const BiPoly qx = bipoly_derivative(q, Var::x);
    const BiPoly qy = bipoly_derivative(q, Var::y);

    PolyMatrix M(m, m), Y(m, dy), X(dy, m), W(dy, dy);
    auto put = [](PolyMatrix& mat, std::size_t col, const BiPoly& v) {
        for (int j = 0; j <= v.deg_y(); ++j) mat(static_cast<std::size_t>(j), col) = v.ycoeff(j);
    };
    for (std::size_t k = 0; k < dy; ++k) {
        const int ki = static_cast<int>(k);
        BiPoly a_col = -(ymono(ki) * qy);
        if (k > 0) a_col += BiPoly(Poly(static_cast<long>(k))) * ymono(ki - 1) * q;
        put(M, k, a_col);
        put(M, dy + k, ymono(ki) * q);
        put(Y, k, -(qx * ymono(ki)));
        X(k, dy + k) = Poly(1);
    }
    inst.realisation = Realisation::make(std::move(W), std::move(X), std::move(M), std::move(Y));

    const RatMatrix Mr = to_rat(inst.realisation.M);
    RatMatrix T(dy, dy);
    for (std::size_t j = 0; j < dy; ++j) {
        const std::vector<RatFun> rhs = to_rat(inst.realisation.Y).column(j);
        const auto v = solve_rational(Mr, rhs);
        if (!v) throw Error("hermite system is inconsistent");
        for (std::size_t i = 0; i < dy; ++i) T(i, j) = (*v)[dy + i];
    }
    inst.map = PseudoLinearMap(std::move(T));

    inst.a.resize(dy);
    for (std::size_t j = 0; j < dy; ++j) inst.a[j] = p.ycoeff(static_cast<int>(j));
    return inst;
}

bool verify_telescoper(const OrePoly& l, const BiPoly& p, const BiPoly& q, std::optional<Certificate>* certificate)
{
    if (l.is_zero()) return false;
    const OrePoly lp = normalize_primitive(l);
    const int rho = lp.order();
    const BiPoly qx = bipoly_derivative(q, Var::x);

    std::vector<BiPoly> qpow{BiPoly(Poly(1))};
    for (int k = 0; k < rho; ++k) qpow.push_back(qpow.back() * q);

    BiPoly n = p;
    BiPoly sum;
    for (int i = 0; i <= rho; ++i) {
        const Poly eta = lp.coeff(i).num();
        if (!eta.is_zero()) sum += BiPoly(eta) * n * qpow[static_cast<std::size_t>(rho - i)];
        n = bipoly_derivative(n, Var::x) * q - BiPoly(Poly(static_cast<long>(i + 1))) * n * qx;
    }

    const YPoly num(sum);
    const HermiteReduction red = hermite_reduce(num, rho + 1, q, certificate != nullptr);
    bool ok = red.r.is_zero();
    if (certificate) {
        ok = ok && check_hermite_identity(num, rho + 1, q, red);
        *certificate = red.h;
    }
    return ok;
}

TelescoperResult telescoper(const HermiteInstance& inst, bool want_certificate)
{
    TelescoperResult res;
    res.relation = solve_min_relation(inst.map, inst.a);
    res.op = res.relation.as_operator();
    res.verified = verify_telescoper(res.op, inst.p, inst.q, want_certificate ? &res.certificate : nullptr);
    return res;
}

long bound_hermite(int r, int d_x, int d_y)
{
    return bound_realisation(r, d_x, 2 * d_x * d_y, r);
}

BoundReport hermite_report(const HermiteInstance& inst, const Relation& rel)
{
    BoundReport r = realisation_report("hermite", rel, inst.d_x, 2 * inst.d_x * inst.d_y, genericity_check(inst.q));
    r.name = "hermite";
    return r;
}

BoundReport instance_realisation_report(const std::string& label, const PseudoLinearMap& map,
                                        const Realisation& real, const std::vector<Poly>& a, const Relation& rel)
{
    return realisation_report(label, rel, vector_degree(a), real.delta_degree(), is_strictly_proper(map.T()));
}

std::vector<int> operator_degrees(const OrePoly& op)
{
    const OrePoly p = normalize_primitive(op, true);
    std::vector<int> d;
    for (const auto& c : p.coeffs()) d.push_back(c.num().degree());
    return d;
}

} // namespace pseudolin
