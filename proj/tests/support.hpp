#pragma once

#include "pseudolin/arith.hpp"
#include "pseudolin/linalg.hpp"

#include <cstdint>
#include <random>

namespace testgen {

using namespace pseudolin;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }
    bool coin() { return integer(0, 1) == 1; }

    BigRational rational(long h = 5)
    {
        long num = integer(-h, h);
        long den = coin() ? 1 : integer(1, h);
        return make_rational(num, den);
    }

    Poly poly(int max_deg, long h = 5, bool nonzero = false)
    {
        while (true) {
            int d = static_cast<int>(integer(0, max_deg));
            std::vector<BigRational> c(static_cast<std::size_t>(d) + 1);
            for (auto& v : c) v = BigRational(integer(-h, h));
            Poly p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    Poly poly_exact_degree(int d, long h = 5)
    {
        std::vector<BigRational> c(static_cast<std::size_t>(d) + 1);
        for (auto& v : c) v = BigRational(integer(-h, h));
        c.back() = BigRational(integer(1, h) * (coin() ? 1 : -1));
        return Poly(std::move(c));
    }

    RatFun ratfun(int max_deg, long h = 5, bool nonzero = false)
    {
        while (true) {
            RatFun r(poly(max_deg, h), poly(max_deg, h, true));
            if (!nonzero || !r.is_zero()) return r;
        }
    }

    BiPoly bipoly(int dy, int dx, long h = 3)
    {
        std::vector<Poly> c(static_cast<std::size_t>(dy) + 1);
        for (auto& p : c) p = poly(dx, h);
        return BiPoly(std::move(c));
    }

    RatMatrix ratmatrix(std::size_t rows, std::size_t cols, int max_deg, long h = 3, int zero_bias = 0)
    {
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (integer(0, 9) >= zero_bias) m(i, j) = ratfun(max_deg, h);
        return m;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline Poly X() { return Poly::x(); }
inline BiPoly Y() { return BiPoly::y(); }
inline Poly P(std::initializer_list<long> c)
{
    std::vector<BigRational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

} // namespace testgen
