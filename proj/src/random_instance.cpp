#include "pseudolin/random_instance.hpp"
#include "pseudolin/error.hpp"
#include "pseudolin/instances.hpp"

#include "rng.hpp"

namespace pseudolin {

namespace {

using detail::Rng;

Poly draw_poly(Rng& rng, int deg, long h, bool exact)
{
    if (deg < 0) return Poly();
    std::vector<BigRational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = BigRational(rng.uniform(-h, h));
    if (exact)
        while (c.back() == 0) c.back() = BigRational(rng.uniform(-h, h));
    return Poly(std::move(c));
}

BiPoly draw_bipoly(Rng& rng, int d_x, int d_y, long h)
{
    std::vector<Poly> c(static_cast<std::size_t>(d_y) + 1);
    for (auto& p : c) p = draw_poly(rng, d_x, h, false);
    return BiPoly(std::move(c));
}

template <class F>
auto retry(const char* what, F&& draw)
{
    for (int attempt = 0; attempt < kRetryCap; ++attempt)
        if (auto v = draw()) return *v;
    throw DomainError(std::string("no ") + what + " found within the retry cap; sizes are over-constrained");
}

bool is_constant(const BiPoly& p) { return p.deg_y() <= 0 && p.deg_x() <= 0; }

void check_sizes(int a, int b)
{
    if (a < 1 || b < 1) throw DomainError("instance sizes must be at least 1");
}

} // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::pair<BiPoly, BiPoly> random_hermite(int d_x, int d_y, const RandomOptions& opt, std::uint64_t seed)
{
    check_sizes(d_x, d_y);
    Rng rng(seed);
    return retry("hermite instance", [&]() -> std::optional<std::pair<BiPoly, BiPoly>> {
        BiPoly q = draw_bipoly(rng, d_x, d_y, opt.height);
        if (q.deg_y() != d_y || q.deg_x() != d_x || !squarefree_y(q)) return std::nullopt;
        if (opt.generic && !genericity_check(q)) return std::nullopt;
        BiPoly p = draw_bipoly(rng, d_x, d_y - 1, opt.height);
        if (p.is_zero() || !is_constant(bipoly_gcd(p, q))) return std::nullopt;
        return std::pair{p, q};
    });
}

BiPoly random_algebraic(int d_x, int d_y, const RandomOptions& opt, std::uint64_t seed)
{
    check_sizes(d_x, d_y);
    Rng rng(seed);
    return retry("algebraic instance", [&]() -> std::optional<BiPoly> {
        BiPoly P = draw_bipoly(rng, d_x, d_y, opt.height);
        if (P.deg_y() != d_y || P.deg_x() != d_x || !squarefree_y(P)) return std::nullopt;
        if (opt.generic && !genericity_check(P)) return std::nullopt;
        if (d_y == 1 && P.ycoeff(0).is_zero()) return std::nullopt;
        return P;
    });
}

std::vector<OrePoly> random_operators(const std::vector<int>& orders, int d, const RandomOptions& opt,
                                      std::uint64_t seed)
{
    if (orders.empty()) throw DomainError("no operator orders given");
    if (d < 0) throw DomainError("operator degree must be nonnegative");
    Rng rng(seed);
    std::vector<OrePoly> ops;
    for (int r : orders) {
        if (r < 1) throw DomainError("operator orders must be at least 1");
        ops.push_back(retry("operator", [&]() -> std::optional<OrePoly> {
            std::vector<Poly> c(static_cast<std::size_t>(r) + 1);
            for (int j = 0; j < r; ++j) c[static_cast<std::size_t>(j)] = draw_poly(rng, opt.regular_infinity ? d - (r - j) : d, opt.height, false);
            c.back() = draw_poly(rng, d, opt.height, true);
            OrePoly op = normalize_primitive(OrePoly::from_polys(Generator::Dx, c));
            if (opt.regular_infinity && !infinity_not_irregular(op)) return std::nullopt;
            return op;
        }));
    }
    return ops;
}

ProperInstance random_proper(std::size_t n, int delta, const RandomOptions& opt, std::uint64_t seed,
                             bool polynomial_part)
{
    if (n < 1 || delta < 0) throw DomainError("invalid sizes for a proper instance");
    Rng rng(seed);
    std::vector<int> deg(n, 0);
    for (int k = 0; k < delta; ++k) ++deg[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))];

    PolyMatrix D(n, n), X(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        D(j, j) = draw_poly(rng, deg[j], opt.height, true);
        for (std::size_t i = 0; i < n; ++i) X(i, j) = draw_poly(rng, deg[j] - 1, opt.height, false);
    }
    PolyMatrix Y = retry("invertible mixing matrix", [&]() -> std::optional<PolyMatrix> {
        PolyMatrix y(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y(i, j) = Poly(rng.uniform(-2, 2));
        if (det_fraction_free(y).is_zero()) return std::nullopt;
        return y;
    });
    PolyMatrix W(n, n);
    if (polynomial_part)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) W(i, j) = draw_poly(rng, 1, opt.height, false);
    Realisation real = Realisation::make(std::move(W), std::move(X), std::move(D), std::move(Y));
    RatMatrix T = real.reconstruct();
    return {PseudoLinearMap(std::move(T)), std::move(real)};
}

RatMatrix random_matrix(std::size_t rows, std::size_t cols, int max_deg, const RandomOptions& opt, std::uint64_t seed)
{
    Rng rng(seed);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Poly den;
            while (den.is_zero()) den = draw_poly(rng, static_cast<int>(rng.uniform(0, max_deg)), opt.height, false);
            m(i, j) = RatFun(draw_poly(rng, static_cast<int>(rng.uniform(0, max_deg)), opt.height, false), den);
        }
    return m;
}

std::vector<Poly> random_vector(std::size_t n, int max_deg, const RandomOptions& opt, std::uint64_t seed)
{
    Rng rng(seed);
    return retry("nonzero vector", [&]() -> std::optional<std::vector<Poly>> {
        std::vector<Poly> a(n);
        for (auto& p : a) p = draw_poly(rng, static_cast<int>(rng.uniform(0, max_deg)), opt.height, false);
        if (vector_degree(a) == kZeroDegree) return std::nullopt;
        return a;
    });
}

} // namespace pseudolin
