#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pseudolin {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// n / d in lowest terms.
inline BigRational make_rational(const BigInt& n, const BigInt& d)
{
    BigRational r(n, d);
    r.canonicalize();
    return r;
}

/// Degree of the zero polynomial. Compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over Q in x; coeffs()[i] is the coefficient of x^i.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const BigRational& c);
    explicit Poly(std::vector<BigRational> coeffs);

    static Poly x();
    static Poly monomial(const BigRational& c, int k);

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(int i) const;
    const BigRational& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigRational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
    friend Poly operator*(const BigRational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    BigRational eval(const BigRational& at) const;
    /// p(x + shift)
    Poly shifted(const BigRational& shift) const;
    /// Monic associate; zero stays zero.
    Poly monic() const;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<BigRational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throws DomainError unless b divides a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm; lcm with 0 is 0.
Poly poly_lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned e);
/// Positive rational c with p / c having coprime integer coefficients.
BigRational rational_content(const Poly& p);

/// Reduced fraction num/den, den monic, gcd(num, den) = 1, zero is 0/1.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(const BigRational& c) : num_(c), den_(1) {}
    RatFun(Poly p) : num_(std::move(p)), den_(1) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFun derivative() const;
    RatFun shifted(const BigRational& shift) const;
    std::string to_string() const;

private:
    struct Reduced {};
    RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

/// Monic lcm of the denominators.
Poly common_denominator(std::span<const RatFun> values);

/// Bivariate polynomial in Q[x][y]; ycoeffs()[j] is the coefficient of y^j.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(Poly c);
    explicit BiPoly(std::vector<Poly> ycoeffs);
    static BiPoly y();

    int deg_y() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    int deg_x() const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<Poly>& ycoeffs() const { return c_; }
    Poly ycoeff(int j) const;
    /// Leading coefficient in y.
    const Poly& lc_y() const;
    /// Coefficient of x^k, as a polynomial in y (stored in a Poly).
    Poly xcoeff(int k) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Poly> c_;
};

enum class Var { x, y };

BiPoly bipoly_derivative(const BiPoly& p, Var var);
/// Sylvester-matrix resultant in y; throws DomainError on zero input.
Poly resultant_y(const BiPoly& a, const BiPoly& b);
/// gcd in Q[x, y], normalised to positive leading rational coefficient and
/// integer content 1.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);
/// a / b in Q[x, y]; throws DomainError if inexact.
BiPoly bipoly_exact_div(const BiPoly& a, const BiPoly& b);

/// Polynomial in y with coefficients in Q(x).
class YPoly {
public:
    YPoly() = default;
    YPoly(RatFun c);
    explicit YPoly(std::vector<RatFun> ycoeffs);
    explicit YPoly(const BiPoly& p);

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFun>& ycoeffs() const { return c_; }
    RatFun coeff(int j) const;
    const RatFun& leading() const;

    YPoly operator-() const;
    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    YPoly& operator*=(const RatFun& s);
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(const YPoly& a, const YPoly& b);
    friend YPoly operator*(YPoly a, const RatFun& s) { return a *= s; }
    friend YPoly operator*(const RatFun& s, YPoly a) { return a *= s; }
    friend bool operator==(const YPoly& a, const YPoly& b) { return a.c_ == b.c_; }

    YPoly derivative_y() const;
    /// Coefficientwise d/dx.
    YPoly derivative_x() const;
    YPoly integral_y() const;
    /// Clears denominators: returns (p, d) with this = p / d, d monic.
    std::pair<BiPoly, Poly> to_bipoly() const;

private:
    void trim();
    std::vector<RatFun> c_;
};

std::pair<YPoly, YPoly> divmod(const YPoly& a, const YPoly& b);
/// Monic gcd over Q(x)[y].
YPoly ypoly_gcd(const YPoly& a, const YPoly& b);
/// Returns (g, u, v) with u a + v b = g = monic gcd.
struct ExtendedGcd {
    YPoly g, u, v;
};
ExtendedGcd ypoly_extended_gcd(const YPoly& a, const YPoly& b);

/// True iff gcd_y(q, dq/dy) is constant in y over Q(x).
bool squarefree_y(const BiPoly& q);

} // namespace pseudolin
