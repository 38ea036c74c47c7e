#include "pseudolin/linalg.hpp"

#include "eliminator.hpp"

#include <algorithm>
#include <numeric>

namespace pseudolin {

namespace detail {

ClearedColumn clear_column(const std::vector<Poly>& v)
{
    std::vector<ZPoly> z(v.size());
    mpz_class lcm = 1;
    for (const auto& p : v)
        for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    for (std::size_t i = 0; i < v.size(); ++i) {
        z[i].c.resize(v[i].coeffs().size());
        for (std::size_t k = 0; k < z[i].c.size(); ++k) {
            const BigRational& c = v[i].coeffs()[k];
            mpz_divexact(z[i].c[k].get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
            z[i].c[k] *= c.get_num();
        }
    }
    mpz_class content = 0;
    ZPoly g;
    for (const auto& e : z) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? primitive_part(e) : gcd(g, e);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), detail::content(e).get_mpz_t());
    }
    if (g.is_zero()) return {std::move(z), RatFun(1)};
    for (auto& e : z) {
        if (e.is_zero()) continue;
        e = exact_div(e, content);
        if (g.degree() > 0) e = exact_div(e, g);
    }
    // g is primitive, so the integer content of each e / g is content(e) / 1
    RatFun scale(Poly(make_rational(lcm, content)), to_poly(g));
    return {std::move(z), std::move(scale)};
}

ClearedColumn clear_column(const std::vector<RatFun>& v)
{
    std::vector<Poly> p(v.size());
    Poly d(1);
    for (const auto& e : v)
        if (!e.is_poly() && !divides(e.den(), d)) d = poly_lcm(d, e.den());
    for (std::size_t i = 0; i < v.size(); ++i)
        p[i] = v[i].is_poly() ? v[i].num() * d : v[i].num() * exact_div(d, v[i].den());
    auto r = clear_column(p);
    r.scale *= RatFun(d);
    return r;
}

std::vector<ZPoly> ColumnEliminator::reduce(std::vector<ZPoly> c) const
{
    if (c.size() != rows_) throw Error("column length does not match the eliminator");
    ZPoly prev(1);
    std::vector<bool> done(rows_, false);
    for (const auto& s : steps_) {
        const ZPoly& p = s.column[s.pivot_row];
        done[s.pivot_row] = true;
        const ZPoly cp = c[s.pivot_row];
        for (std::size_t i = 0; i < rows_; ++i) {
            if (done[i]) continue;
            if (cp.is_zero()) {
                if (c[i].is_zero()) continue;
                c[i] = exact_div(c[i] * p, prev);
            } else if (s.column[i].is_zero()) {
                if (c[i].is_zero()) continue;
                c[i] = exact_div(c[i] * p, prev);
            } else {
                c[i] = exact_div(mul_sub(p, c[i], s.column[i], cp), prev);
            }
        }
        prev = p;
    }
    return c;
}

bool ColumnEliminator::in_span(const std::vector<ZPoly>& reduced) const
{
    for (std::size_t i = 0; i < rows_; ++i)
        if ((used_.empty() || !used_[i]) && !reduced[i].is_zero()) return false;
    return true;
}

void ColumnEliminator::push(std::vector<ZPoly> reduced)
{
    if (used_.empty()) used_.assign(rows_, false);
    std::size_t best = rows_;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (used_[i] || reduced[i].is_zero()) continue;
        if (best == rows_ || reduced[i].degree() < reduced[best].degree() ||
            (reduced[i].degree() == reduced[best].degree() && reduced[i].bit_size() < reduced[best].bit_size()))
            best = i;
    }
    if (best == rows_) throw Error("push of a column inside the current span");
    used_[best] = true;
    steps_.push_back({best, std::move(reduced)});
}

std::vector<ZPoly> ColumnEliminator::back_substitute(const std::vector<ZPoly>& reduced) const
{
    const std::size_t r = steps_.size();
    std::vector<ZPoly> y(r + 1);
    const ZPoly last = r == 0 ? ZPoly(1) : pivot(r - 1);
    y[r] = last;
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t row = steps_[k].pivot_row;
        ZPoly acc = reduced[row] * last;
        for (std::size_t j = k + 1; j < r; ++j)
            if (!steps_[j].column[row].is_zero() && !y[j].is_zero()) acc = acc - steps_[j].column[row] * y[j];
        y[k] = exact_div(acc, pivot(k));
    }
    return y;
}

bool ColumnEliminator::add(std::vector<ZPoly> c)
{
    auto red = reduce(std::move(c));
    if (in_span(red)) return false;
    push(std::move(red));
    return true;
}

} // namespace detail

RatMatrix to_rat(const PolyMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RatFun(m(i, j));
    return r;
}

Poly det_fraction_free(const PolyMatrix& m)
{
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    std::vector<detail::ZPoly> z(n * n);
    BigRational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Poly> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
        mpz_class lcm = 1;
        for (const auto& p : row)
            for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class unit;
            z[i * n + j] = detail::clear_denominators(row[j] * BigRational(lcm), unit);
        }
        scale /= lcm;
    }
    return detail::to_poly(detail::bareiss_det(std::move(z), n), scale);
}

namespace {

// Scales column j by its denominator lcm; returns the polynomial matrix and
// the product of the scalings.
PolyMatrix clear_columns(const RatMatrix& m, Poly& factor)
{
    PolyMatrix p(m.rows(), m.cols());
    factor = Poly(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Poly d(1);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_poly() && !divides(m(i, j).den(), d)) d = poly_lcm(d, m(i, j).den());
        for (std::size_t i = 0; i < m.rows(); ++i) p(i, j) = m(i, j).num() * exact_div(d, m(i, j).den());
        factor *= d;
    }
    return p;
}

} // namespace

RatFun det(const RatMatrix& m)
{
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    Poly factor;
    PolyMatrix p = clear_columns(m, factor);
    return RatFun(det_fraction_free(p), factor);
}

namespace {

struct ClearedSystem {
    detail::ColumnEliminator elim;
    std::vector<RatFun> scales;
};

ClearedSystem eliminate_columns(const RatMatrix& a)
{
    ClearedSystem s{detail::ColumnEliminator(a.rows()), {}};
    for (std::size_t j = 0; j < a.cols(); ++j) {
        auto col = detail::clear_column(a.column(j));
        if (!s.elim.add(std::move(col.z))) throw DomainError("linear system has dependent columns");
        s.scales.push_back(std::move(col.scale));
    }
    return s;
}

std::optional<std::vector<RatFun>> solve_with(const ClearedSystem& s, const std::vector<RatFun>& b)
{
    const std::size_t r = s.scales.size();
    auto col = detail::clear_column(b);
    auto red = s.elim.reduce(std::move(col.z));
    if (!s.elim.in_span(red)) return std::nullopt;
    if (col.scale.is_zero()) return std::vector<RatFun>(r);
    auto y = s.elim.back_substitute(red);
    // sum_j y_j (s_j A_j) = y_r (t b), so v_j = y_j s_j / (y_r t)
    std::vector<RatFun> v(r);
    const RatFun denom = RatFun(detail::to_poly(y[r])) * col.scale;
    for (std::size_t j = 0; j < r; ++j)
        if (!y[j].is_zero()) v[j] = RatFun(detail::to_poly(y[j])) * s.scales[j] / denom;
    return v;
}

} // namespace

std::optional<std::vector<RatFun>> solve_rational(const RatMatrix& a, const std::vector<RatFun>& b)
{
    if (b.size() != a.rows()) throw Error("right-hand side length does not match the matrix");
    auto s = eliminate_columns(a);
    return solve_with(s, b);
}

RatMatrix inverse(const RatMatrix& m)
{
    if (!m.is_square()) throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    ClearedSystem s{detail::ColumnEliminator(n), {}};
    try {
        s = eliminate_columns(m);
    } catch (const DomainError&) {
        throw DomainError("inverse of a singular matrix");
    }
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<RatFun> e(n);
        e[i] = RatFun(1);
        auto v = solve_with(s, e);
        for (std::size_t j = 0; j < n; ++j) inv(j, i) = (*v)[j];
    }
    return inv;
}

std::size_t rank(const RatMatrix& a)
{
    detail::ColumnEliminator elim(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (elim.rank() == a.rows()) break;
        elim.add(detail::clear_column(a.column(j)).z);
    }
    return elim.rank();
}

Poly common_denominator(const RatMatrix& m)
{
    return common_denominator(std::span<const RatFun>(m.entries()));
}

namespace {

// Calls f on every k-subset of {0..n-1}, as an increasing index list.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Poly> det_denominators(const RatMatrix& r, std::size_t l)
{
    std::vector<Poly> phi{Poly(1)};
    const std::size_t top = std::min({l, r.rows(), r.cols()});
    if (top >= 1) phi.push_back(common_denominator(r));
    for (std::size_t k = 2; k <= top; ++k) {
        Poly acc = phi.back();
        for_each_subset(r.rows(), k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(r.cols(), k, [&](const std::vector<std::size_t>& cols) {
                RatMatrix minor(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor(i, j) = r(rows[i], cols[j]);
                RatFun d = det(minor);
                if (!d.is_poly() && !divides(d.den(), acc)) acc = poly_lcm(acc, d.den());
            });
        });
        phi.push_back(std::move(acc));
    }
    while (phi.size() <= l) phi.push_back(phi.back());
    return phi;
}

Poly det_denominator(const RatMatrix& r, std::size_t l) { return det_denominators(r, l).back(); }

RatMatrix companion(const std::vector<RatFun>& coeffs, const RatFun& lead)
{
    if (lead.is_zero()) throw DomainError("companion matrix with zero leading coefficient");
    const std::size_t r = coeffs.size();
    if (r == 0) throw Error("companion matrix of order 0");
    RatMatrix c(r, r);
    for (std::size_t j = 0; j + 1 < r; ++j) c(j + 1, j) = RatFun(1);
    for (std::size_t j = 0; j < r; ++j) c(j, r - 1) = -coeffs[j] / lead;
    return c;
}

PolyMatrix sylvester_matrix(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero() || b.is_zero()) throw DomainError("Sylvester matrix of a zero polynomial");
    const std::size_t m = static_cast<std::size_t>(a.deg_y());
    const std::size_t n = static_cast<std::size_t>(b.deg_y());
    PolyMatrix s(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = a.ycoeff(static_cast<int>(m - k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = b.ycoeff(static_cast<int>(n - k));
    return s;
}

Poly resultant_y(const BiPoly& a, const BiPoly& b)
{
    return det_fraction_free(sylvester_matrix(a, b));
}

} // namespace pseudolin
