#pragma once

#include "pseudolin/arith.hpp"
#include "pseudolin/krylov.hpp"
#include "pseudolin/ore.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pseudolin {

/// Draws are resampled at most this many times before giving up with a
/// DomainError.
inline constexpr int kRetryCap = 1000;

struct RandomOptions {
    /// Coefficients are drawn uniformly from [-height, height].
    long height = 3;
    /// Hermite and algebraic inputs: require genericity_check.
    bool generic = false;
    /// Operators: require x = infinity not to be an irregular singularity.
    bool regular_infinity = false;
};

/// (p, q) with deg_x q = d_x, deg_y q = d_y, q square-free in y, gcd(p, q) = 1,
/// deg_y p < d_y and deg_x p <= d_x.
std::pair<BiPoly, BiPoly> random_hermite(int d_x, int d_y, const RandomOptions& opt, std::uint64_t seed);
/// P square-free in y with deg_x P = d_x, deg_y P = d_y.
BiPoly random_algebraic(int d_x, int d_y, const RandomOptions& opt, std::uint64_t seed);
/// One operator in Dx per entry of orders, each with leading coefficient of
/// degree exactly d.
std::vector<OrePoly> random_operators(const std::vector<int>& orders, int d, const RandomOptions& opt,
                                      std::uint64_t seed);

struct ProperInstance {
    PseudoLinearMap map;
    Realisation realisation;
};

/// T = X D^{-1} Y with D diagonal, deg det D = delta, deg X(i, j) < deg D(j, j)
/// and Y a constant invertible matrix, so T is strictly proper. With
/// polynomial_part a random W of degree <= 1 is added and T is no longer
/// strictly proper.
ProperInstance random_proper(std::size_t n, int delta, const RandomOptions& opt, std::uint64_t seed,
                             bool polynomial_part = false);
/// Small matrix with independent random rational entries of degree <= max_deg.
RatMatrix random_matrix(std::size_t rows, std::size_t cols, int max_deg, const RandomOptions& opt,
                        std::uint64_t seed);
std::vector<Poly> random_vector(std::size_t n, int max_deg, const RandomOptions& opt, std::uint64_t seed);

/// Seed of trial `trial` in a run seeded by `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

} // namespace pseudolin
