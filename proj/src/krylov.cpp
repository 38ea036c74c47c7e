#include "pseudolin/krylov.hpp"
#include "pseudolin/error.hpp"

#include "eliminator.hpp"

#include <algorithm>

namespace pseudolin {

PseudoLinearMap::PseudoLinearMap(RatMatrix t) : t_(std::move(t))
{
    if (!t_.is_square()) throw Error("pseudo-linear map needs a square matrix");
}

Realisation Realisation::make(PolyMatrix w, PolyMatrix x, PolyMatrix m, PolyMatrix y)
{
    const std::size_t n = w.rows();
    if (!w.is_square() || !m.is_square() || x.rows() != n || x.cols() != m.rows() || y.rows() != m.rows() ||
        y.cols() != n)
        throw Error("realisation matrices have inconsistent dimensions");
    Poly d = det_fraction_free(m);
    if (d.is_zero()) throw DomainError("realisation with singular M");
    return {std::move(w), std::move(x), std::move(m), std::move(y), std::move(d)};
}

RatMatrix Realisation::reconstruct() const
{
    return to_rat(W) + to_rat(X) * inverse(to_rat(M)) * to_rat(Y);
}

OrePoly Relation::as_operator() const { return OrePoly::from_polys(Generator::Dx, eta); }

int Relation::degree() const { return vector_degree(eta); }

bool BoundReport::holds() const
{
    for (std::size_t i = 0; i < observed.size(); ++i)
        if (observed[i] != kZeroDegree && observed[i] > bound[i]) return false;
    return true;
}

int vector_degree(const std::vector<Poly>& a)
{
    int d = kZeroDegree;
    for (const auto& p : a) d = std::max(d, p.degree());
    return d;
}

std::vector<RatFun> theta_apply(const PseudoLinearMap& map, const std::vector<RatFun>& v)
{
    if (v.size() != map.n()) throw Error("vector length does not match the map");
    std::vector<RatFun> r = map.T() * v;
    for (std::size_t i = 0; i < v.size(); ++i) r[i] += v[i].derivative();
    return r;
}

std::vector<std::vector<RatFun>> iterates(const PseudoLinearMap& map, const std::vector<RatFun>& a, int count)
{
    std::vector<std::vector<RatFun>> out{a};
    for (int i = 0; i < count; ++i) out.push_back(theta_apply(map, out.back()));
    return out;
}

namespace {

// Iteration on numerators: theta^i a = b_i / den^i with
// b_{i+1} = den b_i' - i den' b_i + N b_i and N = den T.
class NumeratorIteration {
public:
    NumeratorIteration(const PseudoLinearMap& map, std::vector<Poly> a)
        : den_(common_denominator(map.T())), dden_(den_.derivative()), b_(std::move(a))
    {
        const RatMatrix& t = map.T();
        n_ = PolyMatrix(t.rows(), t.cols());
        for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j)
                if (!t(i, j).is_zero()) n_(i, j) = t(i, j).num() * exact_div(den_, t(i, j).den());
    }

    const std::vector<Poly>& current() const { return b_; }
    const Poly& den() const { return den_; }
    int step() const { return i_; }

    void advance()
    {
        std::vector<Poly> next = n_ * b_;
        for (std::size_t k = 0; k < b_.size(); ++k) {
            if (b_[k].is_zero()) continue;
            next[k] += den_ * b_[k].derivative();
            if (i_ > 0 && !dden_.is_zero()) next[k] -= dden_ * b_[k] * BigRational(i_);
        }
        b_ = std::move(next);
        ++i_;
    }

private:
    Poly den_, dden_;
    PolyMatrix n_;
    std::vector<Poly> b_;
    int i_ = 0;
};

Relation normalize_relation(std::vector<RatFun> eta)
{
    OrePoly op = normalize_primitive(OrePoly(Generator::Dx, std::move(eta)), true);
    Relation rel;
    rel.rho = op.order();
    for (const auto& c : op.coeffs()) rel.eta.push_back(c.num());
    return rel;
}

} // namespace

Relation solve_min_relation(const PseudoLinearMap& map, const std::vector<Poly>& a)
{
    if (a.size() != map.n()) throw Error("vector length does not match the map");
    if (std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); }))
        throw DomainError("minimal relation of the zero vector");
    NumeratorIteration it(map, a);
    detail::ColumnEliminator elim(map.n());
    std::vector<RatFun> scales;
    Poly den_power(1);
    while (true) {
        auto col = detail::clear_column(it.current());
        // z = scale * b_i = scale * den^i * theta^i a
        RatFun scale = col.scale * RatFun(den_power);
        auto red = elim.reduce(std::move(col.z));
        if (elim.in_span(red)) {
            auto y = elim.back_substitute(red);
            const std::size_t rho = scales.size();
            std::vector<RatFun> eta(rho + 1);
            for (std::size_t j = 0; j < rho; ++j)
                if (!y[j].is_zero()) eta[j] = RatFun(detail::to_poly(y[j])) * scales[j];
            eta[rho] = -RatFun(detail::to_poly(y[rho])) * scale;
            return normalize_relation(std::move(eta));
        }
        elim.push(std::move(red));
        scales.push_back(std::move(scale));
        it.advance();
        den_power *= it.den();
    }
}

bool verify_relation(const PseudoLinearMap& map, const std::vector<Poly>& a, const Relation& rel)
{
    if (a.size() != map.n()) return false;
    if (rel.eta.size() != static_cast<std::size_t>(rel.rho) + 1 || rel.rho < 0) return false;
    if (std::all_of(rel.eta.begin(), rel.eta.end(), [](const Poly& p) { return p.is_zero(); })) return false;
    NumeratorIteration it(map, a);
    // sum eta_i b_i / den^i = 0  <=>  sum eta_i den^(rho - i) b_i = 0
    std::vector<std::vector<Poly>> bs;
    for (int i = 0; i <= rel.rho; ++i) {
        bs.push_back(it.current());
        if (i < rel.rho) it.advance();
    }
    std::vector<Poly> acc(map.n());
    Poly power(1);
    for (int i = rel.rho; i >= 0; --i) {
        const Poly w = rel.eta[static_cast<std::size_t>(i)] * power;
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w * bs[static_cast<std::size_t>(i)][k];
        power *= it.den();
    }
    return std::all_of(acc.begin(), acc.end(), [](const Poly& p) { return p.is_zero(); });
}

Realisation trivial_realisation(const PseudoLinearMap& map)
{
    const std::size_t n = map.n();
    Poly den = common_denominator(map.T());
    PolyMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const RatFun& e = map.T()(i, j);
            if (!e.is_zero()) x(i, j) = e.num() * exact_div(den, e.den());
        }
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = den;
    return Realisation::make(PolyMatrix(n, n), std::move(x), std::move(m), PolyMatrix::identity(n));
}

bool is_strictly_proper(const RatMatrix& t)
{
    return std::all_of(t.entries().begin(), t.entries().end(),
                       [](const RatFun& f) { return f.num().degree() < f.den().degree(); });
}

long bound_realisation(int rho, int d_a, int delta, int i)
{
    const long r = rho;
    return r * d_a + r * delta - (r * (r + 1) / 2 - i);
}

std::pair<int, long> bound_direct(int rho, int d_a, int d, int D, int i)
{
    const long r = rho;
    const long dt = std::max(d - 1, D);
    return {i, r * d_a + (r * (r + 1) / 2 - i) * dt};
}

namespace {

std::vector<int> observed_degrees(const Relation& rel)
{
    std::vector<int> out;
    for (const auto& p : rel.eta) out.push_back(p.degree());
    return out;
}

} // namespace

BoundReport realisation_report(const std::string& label, const Relation& rel, int d_a, int delta, bool asserted)
{
    BoundReport r{label, "realisation", rel.rho, observed_degrees(rel), {}, asserted};
    for (int i = 0; i <= rel.rho; ++i) r.bound.push_back(bound_realisation(rel.rho, d_a, delta, i));
    return r;
}

BoundReport direct_report(const std::string& label, const Relation& rel, const PseudoLinearMap& map,
                          const std::vector<Poly>& a)
{
    Poly den = common_denominator(map.T());
    int big_d = kZeroDegree;
    for (std::size_t i = 0; i < map.n(); ++i)
        for (std::size_t j = 0; j < map.n(); ++j) {
            const RatFun& e = map.T()(i, j);
            if (!e.is_zero()) big_d = std::max(big_d, (e.num() * exact_div(den, e.den())).degree());
        }
    if (big_d == kZeroDegree) big_d = 0;
    const int d = den.degree();
    const int d_a = vector_degree(a);
    BoundReport r{label, "direct", rel.rho, observed_degrees(rel), {}, true};
    for (int i = 0; i <= rel.rho; ++i)
        r.bound.push_back(static_cast<long>(i) * d + bound_direct(rel.rho, d_a, d, big_d, i).second);
    return r;
}

RatMatrix krylov_matrix(const PseudoLinearMap& map, const std::vector<Poly>& a, const std::vector<int>& s)
{
    if (s.empty()) return RatMatrix(map.n(), 0);
    if (!std::is_sorted(s.begin(), s.end()) || s.front() < 0) throw Error("iterate indices must be nondecreasing");
    std::vector<RatFun> start(a.begin(), a.end());
    auto its = iterates(map, start, s.back());
    RatMatrix k(map.n(), s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t i = 0; i < map.n(); ++i) k(i, j) = its[static_cast<std::size_t>(s[j])][i];
    return k;
}

bool krylov_denominator_check(const PseudoLinearMap& map, const Realisation& real, const std::vector<Poly>& a,
                              const std::vector<int>& s, std::size_t l_max, bool allow_improper)
{
    if (!allow_improper && !is_strictly_proper(map.T()))
        throw DomainError("denominator check needs a strictly proper matrix");
    RatMatrix k = krylov_matrix(map, a, s);
    const Poly target = pow(real.delta, s.empty() ? 0U : static_cast<unsigned>(s.back()));
    auto phi = det_denominators(k, l_max);
    return std::all_of(phi.begin(), phi.end(), [&](const Poly& p) { return divides(p, target); });
}

} // namespace pseudolin
