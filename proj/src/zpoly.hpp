#pragma once

// Integer-coefficient polynomial kernels used behind the Q[x] interface:
// fraction-free elimination, modular gcd and exact division all work here.

#include "pseudolin/arith.hpp"

#include <optional>
#include <vector>

namespace pseudolin::detail {

struct ZPoly {
    std::vector<mpz_class> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }
    explicit ZPoly(long v) { if (v != 0) c.emplace_back(v); }

    int degree() const { return c.empty() ? kZeroDegree : static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const mpz_class& lead() const { return c.back(); }
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    /// Sum of coefficient bit sizes; a cheap size measure for pivot choice.
    std::size_t bit_size() const;

    friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const mpz_class& s);
/// a*b - c*d, the Bareiss update numerator.
ZPoly mul_sub(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d);

/// Quotient when b divides a in Z[x], otherwise nullopt.
std::optional<ZPoly> try_div(const ZPoly& a, const ZPoly& b);
/// a / b where exactness is guaranteed by the caller (asserted).
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
ZPoly exact_div(const ZPoly& a, const mpz_class& s);

mpz_class content(const ZPoly& a);
/// Divides by the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& a);
ZPoly derivative(const ZPoly& a);

/// gcd of primitive parts, primitive with positive leading coefficient.
/// Modular algorithm with trial-division certification.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// p = scale * z with z primitive and positive leading coefficient
/// (scale = 0, z = 0 for p = 0).
struct Scaled {
    ZPoly z;
    BigRational scale;
};
Scaled to_zpoly(const Poly& p);
/// Clears denominators only: p = z / den with den > 0 minimal.
ZPoly clear_denominators(const Poly& p, mpz_class& den);
Poly to_poly(const ZPoly& z);
Poly to_poly(const ZPoly& z, const BigRational& scale);

/// Determinant of the n x n row-major matrix by Bareiss elimination.
ZPoly bareiss_det(std::vector<ZPoly> m, std::size_t n);

} // namespace pseudolin::detail
