#pragma once

// Slow reference computations for cross-checking the library. Everything
// here goes through plain RatFun arithmetic and cofactor expansion, never the
// fraction-free kernels.

#include "pseudolin/arith.hpp"
#include "pseudolin/linalg.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using namespace pseudolin;

inline RatFun cofactor_det(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return RatFun(1);
    if (n == 1) return m(0, 0);
    RatFun sum;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        RatMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) sub(i - 1, c++) = m(i, k);
        RatFun term = m(0, j) * cofactor_det(sub);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

inline RatMatrix submatrix(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    RatMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

template <class F>
void subsets(std::size_t n, std::size_t k, F&& f)
{
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) idx.push_back(i);
        if (f(idx)) return;
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// Rows of a nonzero maximal minor of the first k columns, if any.
inline std::optional<std::vector<std::size_t>> independent_rows(const RatMatrix& m, std::size_t k)
{
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;
    std::optional<std::vector<std::size_t>> found;
    if (k > m.rows()) return found;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        if (!cofactor_det(submatrix(m, rows, cols)).is_zero()) {
            found = rows;
            return true;
        }
        return false;
    });
    return found;
}

inline std::vector<RatFun> theta(const RatMatrix& t, const std::vector<RatFun>& v)
{
    std::vector<RatFun> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        r[i] = v[i].derivative();
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += t(i, j) * v[j];
    }
    return r;
}

/// Primitive integer polynomials without common factor, positive leading
/// rational on the last entry.
inline std::vector<Poly> normalize(std::vector<RatFun> v)
{
    Poly l(1);
    for (const auto& f : v) l = poly_lcm(l, f.den());
    std::vector<Poly> p;
    for (const auto& f : v) p.push_back(f.num() * exact_div(l, f.den()));
    Poly g;
    for (const auto& q : p) g = poly_gcd(g, q);
    for (auto& q : p) q = exact_div(q, g);
    BigRational c = 0;
    // scale so that every coefficient is an integer with gcd 1
    BigInt den = 1, num = 0;
    for (const auto& q : p)
        for (const auto& x : q.coeffs()) {
            den = lcm(den, BigInt(x.get_den()));
            num = gcd(num, BigInt(x.get_num()));
        }
    c = make_rational(den, num);
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (sgn(p.back().leading()) < 0) c = -c;
    for (auto& q : p) q *= c;
    return p;
}

struct OracleRelation {
    int rho;
    std::vector<Poly> eta;
};

/// First dependency among a, theta a, ..., via maximal minors and the
/// generalized cross product of the dependent columns.
inline OracleRelation min_relation(const RatMatrix& t, const std::vector<RatFun>& a)
{
    const std::size_t n = t.rows();
    std::vector<std::vector<RatFun>> cols{a};
    for (std::size_t k = 1; k <= n + 1; ++k) {
        // columns 0..k-1 currently; test whether column k-1 is dependent
        RatMatrix km(n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) km(i, j) = cols[j][i];
        if (!independent_rows(km, k)) {
            const std::size_t rho = k - 1;
            auto rows = rho == 0 ? std::vector<std::size_t>{} : *independent_rows(km, rho);
            std::vector<RatFun> mu(k);
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<std::size_t> others;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) others.push_back(c);
                RatFun d = cofactor_det(submatrix(km, rows, others));
                mu[j] = (j % 2 == 0) ? d : -d;
            }
            return {static_cast<int>(rho), normalize(mu)};
        }
        cols.push_back(theta(t, cols.back()));
    }
    return {-1, {}};
}

} // namespace oracle
