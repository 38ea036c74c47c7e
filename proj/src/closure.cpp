#include "pseudolin/instances.hpp"
#include "pseudolin/error.hpp"

#include "rng.hpp"

#include <algorithm>
#include <numeric>

namespace pseudolin {

namespace {

struct EulerBlock {
    RatMatrix D;
    PolyMatrix X, M;
};

EulerBlock euler_block(const OrePoly& euler)
{
    const auto r = static_cast<std::size_t>(euler.order());
    std::vector<RatFun> low(euler.coeffs().begin(), euler.coeffs().end() - 1);
    EulerBlock b{companion(low, euler.leading()), PolyMatrix(r, r), PolyMatrix(r, r)};
    for (std::size_t j = 0; j < r; ++j) {
        if (j + 1 < r) b.X(j + 1, j) = Poly(1);
        b.X(j, r - 1) = low[j].num();
        b.M(j, j) = Poly::x();
    }
    b.M(r - 1, r - 1) = -(Poly::x() * euler.leading().num());
    return b;
}

void check_operators(const std::vector<OrePoly>& ops)
{
    if (ops.empty()) throw DomainError("no operators given");
    for (const auto& op : ops) {
        if (op.is_zero()) throw DomainError("zero operator");
        if (op.generator() != Generator::Dx) throw DomainError("operators must be given in Dx");
        if (op.order() < 1) throw DomainError("operators must have order at least 1");
    }
}

void fill_common(ClosureInstance& inst, ClosureKind kind, const std::vector<OrePoly>& ops)
{
    check_operators(ops);
    inst.kind = kind;
    inst.operators = ops;
    for (const auto& op : ops) inst.euler_forms.push_back(to_euler(op));
}

template <class T>
Matrix<T> hcat(const std::vector<Matrix<T>>& parts)
{
    std::size_t cols = 0;
    for (const auto& p : parts) cols += p.cols();
    Matrix<T> r(parts.front().rows(), cols);
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) r(i, c0 + j) = p(i, j);
        c0 += p.cols();
    }
    return r;
}

template <class T>
Matrix<T> vcat(const std::vector<Matrix<T>>& parts)
{
    return transpose(hcat([&] {
        std::vector<Matrix<T>> t;
        for (const auto& p : parts) t.push_back(transpose(p));
        return t;
    }()));
}

// I_left (x) m (x) I_right
template <class T>
Matrix<T> embed(const Matrix<T>& m, std::size_t left, std::size_t right)
{
    return kronecker(kronecker(Matrix<T>::identity(left), m), Matrix<T>::identity(right));
}

std::vector<int> orders_of(const std::vector<OrePoly>& ops)
{
    std::vector<int> r;
    for (const auto& op : ops) r.push_back(op.order());
    return r;
}

std::vector<int> degrees_of(const std::vector<OrePoly>& ops)
{
    std::vector<int> d;
    for (const auto& op : ops) d.push_back(normalize_primitive(op).degree());
    return d;
}

bool regular_at_infinity(const std::vector<OrePoly>& ops)
{
    return std::all_of(ops.begin(), ops.end(),
                       [](const OrePoly& op) { return infinity_not_irregular(normalize_primitive(op)); });
}

} // namespace

ClosureInstance build_lclm(const std::vector<OrePoly>& ops)
{
    ClosureInstance inst;
    fill_common(inst, ClosureKind::lclm, ops);

    std::vector<RatMatrix> t_blocks;
    std::vector<PolyMatrix> x_blocks, m_blocks;
    const RatFun inv_x(Poly(1), Poly::x());
    for (const auto& e : inst.euler_forms) {
        EulerBlock b = euler_block(e);
        t_blocks.push_back(scaled(b.D, inv_x));
        x_blocks.push_back(std::move(b.X));
        m_blocks.push_back(std::move(b.M));
        inst.a.push_back(Poly(1));
        inst.a.resize(inst.a.size() + static_cast<std::size_t>(e.order()) - 1);
    }
    const std::size_t R = inst.a.size();
    inst.map = PseudoLinearMap(block_diagonal(t_blocks));
    inst.realisation = Realisation::make(PolyMatrix(R, R), block_diagonal(x_blocks), block_diagonal(m_blocks),
                                         PolyMatrix::identity(R));
    return inst;
}

ClosureInstance build_symprod(const std::vector<OrePoly>& ops)
{
    ClosureInstance inst;
    fill_common(inst, ClosureKind::symprod, ops);

    const std::vector<int> r = orders_of(ops);
    const std::size_t R = std::accumulate(r.begin(), r.end(), std::size_t{1},
                                          [](std::size_t acc, int v) { return acc * static_cast<std::size_t>(v); });
    const RatFun inv_x(Poly(1), Poly::x());

    RatMatrix T(R, R);
    std::vector<PolyMatrix> xs, ms, ys;
    std::size_t left = 1;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto ri = static_cast<std::size_t>(r[i]);
        const std::size_t right = R / (left * ri);
        EulerBlock b = euler_block(inst.euler_forms[i]);
        T = T + embed(scaled(b.D, inv_x), left, right);
        xs.push_back(embed(b.X, left, right));
        ms.push_back(embed(b.M, left, right));
        ys.push_back(PolyMatrix::identity(R));
        left *= ri;
    }
    inst.map = PseudoLinearMap(std::move(T));
    inst.a.assign(R, Poly());
    inst.a[0] = Poly(1);
    inst.realisation = Realisation::make(PolyMatrix(R, R), hcat(xs), block_diagonal(ms), vcat(ys));
    return inst;
}

ClosureResult lclm(const ClosureInstance& inst)
{
    if (inst.kind != ClosureKind::lclm) throw Error("lclm needs an lclm instance");
    ClosureResult res;
    res.relation = solve_min_relation(inst.map, inst.a);
    res.op = res.relation.as_operator();
    res.verified = verify_lclm(res.op, inst.operators);
    return res;
}

bool verify_lclm(const OrePoly& l, const std::vector<OrePoly>& ops)
{
    if (l.is_zero()) return false;
    return std::all_of(ops.begin(), ops.end(), [&](const OrePoly& op) { return right_divide(l, op).second.is_zero(); });
}

ClosureResult symprod(const ClosureInstance& inst, std::uint64_t seed)
{
    if (inst.kind != ClosureKind::symprod) throw Error("symprod needs a symprod instance");
    ClosureResult res;
    res.relation = solve_min_relation(inst.map, inst.a);
    res.op = res.relation.as_operator();
    res.verified = verify_symprod(res.op, inst.operators, seed);
    return res;
}

bool verify_symprod(const OrePoly& l, const std::vector<OrePoly>& ops, std::uint64_t seed, int draws, int n)
{
    if (l.is_zero()) return false;
    std::vector<OrePoly> all{normalize_primitive(l)};
    for (const auto& op : ops) all.push_back(normalize_primitive(op));

    long c = 0;
    auto ordinary = [&](long at) {
        return std::all_of(all.begin(), all.end(),
                           [&](const OrePoly& op) { return op.leading().num().eval(BigRational(at)) != 0; });
    };
    while (!ordinary(c)) ++c;
    for (auto& op : all) op = shift_operator(op, BigRational(c));

    detail::Rng rng(seed);
    for (int draw = 0; draw < draws; ++draw) {
        TruncSeries prod;
        for (std::size_t k = 1; k < all.size(); ++k) {
            std::vector<BigRational> init(static_cast<std::size_t>(all[k].order()));
            do {
                for (auto& v : init) v = BigRational(rng.uniform(-9, 9));
            } while (std::all_of(init.begin(), init.end(), [](const BigRational& v) { return v == 0; }));
            TruncSeries s = series_solution(all[k], init, n);
            prod = k == 1 ? std::move(s) : series_product(prod, s);
        }
        for (const auto& v : apply_to_series(all[0], prod))
            if (v != 0) return false;
    }
    return true;
}

long bound_lclm(int r, const std::vector<int>& orders, int d)
{
    const long s = static_cast<long>(orders.size());
    const long R = std::accumulate(orders.begin(), orders.end(), 0L);
    if (s > 2) return R * (s * d + R);
    return bound_realisation(r, 0, static_cast<int>(R + s * d), r);
}

namespace {

long symprod_delta(const std::vector<int>& orders, const std::vector<int>& degrees)
{
    long R = 1;
    for (int v : orders) R *= v;
    long delta = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) delta += R / orders[i] * (orders[i] + degrees[i]);
    return delta;
}

long symprod_flat(const std::vector<int>& orders, const std::vector<int>& degrees)
{
    const long s = static_cast<long>(orders.size());
    long R = 1, rmax = 0, dmax = 0;
    for (int v : orders) {
        R *= v;
        rmax = std::max<long>(rmax, v);
    }
    for (int v : degrees) dmax = std::max<long>(dmax, v);
    long rp = 1;
    for (long k = 1; k < s; ++k) rp *= rmax;
    return s * R * (R + dmax * rp);
}

} // namespace

long bound_symprod(int r, const std::vector<int>& orders, const std::vector<int>& degrees)
{
    if (orders.size() > 2) return symprod_flat(orders, degrees);
    return bound_realisation(r, 0, static_cast<int>(symprod_delta(orders, degrees)), r);
}

long symprod_conjecture(const std::vector<int>& orders, const std::vector<int>& degrees)
{
    if (orders.size() != 2 || degrees.size() != 2) throw Error("the conjectured curve is for two factors");
    const long r1 = orders[0], r2 = orders[1], d1 = degrees[0], d2 = degrees[1];
    return (r1 * r2 - r1 - r2 + 2) * (d1 * r2 + d2 * r1);
}

BoundReport lclm_report(const ClosureInstance& inst, const Relation& rel)
{
    const std::vector<int> r = orders_of(inst.operators);
    const std::vector<int> d = degrees_of(inst.operators);
    const int dmax = *std::max_element(d.begin(), d.end());
    const long s = static_cast<long>(r.size());
    const long R = std::accumulate(r.begin(), r.end(), 0L);

    BoundReport rep;
    rep.label = "lclm";
    rep.name = "lclm";
    rep.rho = rel.rho;
    rep.observed = operator_degrees(rel.as_operator());
    for (int i = 0; i <= rel.rho; ++i)
        rep.bound.push_back(s > 2 ? bound_lclm(rel.rho, r, dmax)
                                  : bound_realisation(rel.rho, 0, static_cast<int>(R + s * dmax), i));
    rep.asserted = regular_at_infinity(inst.operators);
    return rep;
}

BoundReport symprod_report(const ClosureInstance& inst, const Relation& rel)
{
    const std::vector<int> r = orders_of(inst.operators);
    const std::vector<int> d = degrees_of(inst.operators);

    BoundReport rep;
    rep.label = "symprod";
    rep.name = "symprod";
    rep.rho = rel.rho;
    rep.observed = operator_degrees(rel.as_operator());
    for (int i = 0; i <= rel.rho; ++i)
        rep.bound.push_back(r.size() > 2 ? symprod_flat(r, d)
                                         : bound_realisation(rel.rho, 0, static_cast<int>(symprod_delta(r, d)), i));
    rep.asserted = regular_at_infinity(inst.operators);
    return rep;
}

} // namespace pseudolin
