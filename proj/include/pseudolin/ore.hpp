#pragma once

#include "pseudolin/arith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pseudolin {

/// Dx is the derivation d/dx, Euler is x d/dx.
enum class Generator { Dx, Euler };

/// Linear differential operator sum_j coeffs[j] * G^j, coefficients in Q(x)
/// written on the left.
class OrePoly {
public:
    explicit OrePoly(Generator g = Generator::Dx) : gen_(g) {}
    OrePoly(Generator g, std::vector<RatFun> coeffs);
    static OrePoly from_polys(Generator g, const std::vector<Poly>& coeffs);
    /// The generator itself as an operator.
    static OrePoly gen(Generator g);

    Generator generator() const { return gen_; }
    bool is_zero() const { return c_.empty(); }
    /// Order; -1 for the zero operator.
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<RatFun>& coeffs() const { return c_; }
    RatFun coeff(int j) const;
    const RatFun& leading() const;
    bool has_poly_coeffs() const;
    /// Largest x-degree among the coefficients; throws DomainError unless
    /// every coefficient is a polynomial.
    int degree() const;

    OrePoly operator-() const;
    OrePoly& operator+=(const OrePoly& o);
    OrePoly& operator-=(const OrePoly& o);
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
    /// Left multiplication by a function.
    friend OrePoly operator*(const RatFun& f, const OrePoly& a);
    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.gen_ == b.gen_ && a.c_ == b.c_; }

    /// Expanded form, e.g. "x^2*Dx^2 - 2*x*Dx + 2"; the Euler generator prints as "E".
    std::string to_string() const;

private:
    void trim();
    Generator gen_;
    std::vector<RatFun> c_;
};

/// Coefficients c_0..c_N of a truncated power series at 0.
struct TruncSeries {
    std::vector<BigRational> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
};

OrePoly ore_mul(const OrePoly& a, const OrePoly& b);
RatFun ore_apply(const OrePoly& l, const RatFun& f);
/// a = q b + r with order(r) < order(b).
std::pair<OrePoly, OrePoly> right_divide(const OrePoly& a, const OrePoly& b);

/// Polynomial coefficients with joint integer content 1 whose leading
/// coefficient has a positive leading rational; optionally also divides out
/// the gcd of the coefficients.
OrePoly normalize_primitive(const OrePoly& l, bool drop_poly_content = false);

/// x^r L rewritten in the Euler generator before any content is removed
/// (the input is first brought to primitive polynomial form).
OrePoly to_euler_unreduced(const OrePoly& l);
/// Euler form with the polynomial content removed.
OrePoly to_euler(const OrePoly& l);
/// Substitutes E = x Dx; only the integer content is removed.
OrePoly from_euler(const OrePoly& l);

/// deg p_j + (r - j) <= deg p_r for every nonzero p_j.
bool infinity_not_irregular(const OrePoly& l);

/// M with M(g)(x) = L(f)(x + c) for g(x) = f(x + c).
OrePoly shift_operator(const OrePoly& l, const BigRational& c);

/// Series solution with f^(j)(0) = init[j]; 0 must be an ordinary point.
TruncSeries series_solution(const OrePoly& l, const std::vector<BigRational>& init, int n);
/// Coefficients 0..N-r of L applied to s, the ones fully determined by s.
std::vector<BigRational> apply_to_series(const OrePoly& l, const TruncSeries& s);
TruncSeries series_product(const TruncSeries& a, const TruncSeries& b);

} // namespace pseudolin
