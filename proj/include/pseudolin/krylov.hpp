#pragma once

#include "pseudolin/linalg.hpp"
#include "pseudolin/ore.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pseudolin {

/// theta = d/dx + T acting on Q(x)^n.
class PseudoLinearMap {
public:
    explicit PseudoLinearMap(RatMatrix t);
    const RatMatrix& T() const { return t_; }
    std::size_t n() const { return t_.rows(); }

private:
    RatMatrix t_;
};

/// T = W + X M^{-1} Y with polynomial matrices; delta = det M.
struct Realisation {
    PolyMatrix W, X, M, Y;
    Poly delta;

    /// Checks dimensions and computes det M; throws DomainError when singular.
    static Realisation make(PolyMatrix w, PolyMatrix x, PolyMatrix m, PolyMatrix y);
    int delta_degree() const { return delta.degree(); }
    RatMatrix reconstruct() const;
};

/// eta[0] a + eta[1] theta a + ... + eta[rho] theta^rho a = 0.
struct Relation {
    int rho = 0;
    std::vector<Poly> eta;

    /// sum eta_i Dx^i
    OrePoly as_operator() const;
    /// Largest degree among the eta_i.
    int degree() const;
};

/// Per-coefficient comparison of observed degrees against a bound.
struct BoundReport {
    std::string label;
    std::string name;
    int rho = 0;
    /// kZeroDegree marks a zero coefficient.
    std::vector<int> observed;
    std::vector<long> bound;
    bool asserted = true;

    /// bound[i] - observed[i]; meaningless for zero coefficients.
    long slack(std::size_t i) const { return bound[i] - observed[i]; }
    /// Every nonzero coefficient is within its bound.
    bool holds() const;
};

std::vector<RatFun> theta_apply(const PseudoLinearMap& map, const std::vector<RatFun>& v);
/// theta^0 a, ..., theta^count a.
std::vector<std::vector<RatFun>> iterates(const PseudoLinearMap& map, const std::vector<RatFun>& a, int count);

/// Minimal relation among the iterates of a (a != 0), normalised so that
/// the eta_i have no common factor, joint integer content 1 and eta_rho has
/// a positive leading coefficient.
Relation solve_min_relation(const PseudoLinearMap& map, const std::vector<Poly>& a);
bool verify_relation(const PseudoLinearMap& map, const std::vector<Poly>& a, const Relation& rel);

/// W = 0, X = den T, M = den I, Y = I.
Realisation trivial_realisation(const PseudoLinearMap& map);
bool is_strictly_proper(const RatMatrix& t);

/// rho d_a + rho delta - (rho (rho + 1) / 2 - i)
long bound_realisation(int rho, int d_a, int delta, int i);
/// (i, rho d_a + (rho (rho + 1) / 2 - i) max(d - 1, D)): eta_i = den^i p_i
/// with deg p_i at most the second entry.
std::pair<int, long> bound_direct(int rho, int d_a, int d, int D, int i);

/// Largest entry degree of a polynomial vector.
int vector_degree(const std::vector<Poly>& a);

BoundReport realisation_report(const std::string& label, const Relation& rel, int d_a, int delta, bool asserted);
/// Observed degrees against i d + (direct bound on p_i), d = deg den.
BoundReport direct_report(const std::string& label, const Relation& rel, const PseudoLinearMap& map,
                          const std::vector<Poly>& a);

/// [theta^{s_1} a ... theta^{s_r} a]
RatMatrix krylov_matrix(const PseudoLinearMap& map, const std::vector<Poly>& a, const std::vector<int>& s);
/// phi_l(K) divides delta^{s_r} for every l <= l_max. Throws DomainError if T
/// is not strictly proper unless allow_improper is set.
bool krylov_denominator_check(const PseudoLinearMap& map, const Realisation& real, const std::vector<Poly>& a,
                              const std::vector<int>& s, std::size_t l_max, bool allow_improper = false);

} // namespace pseudolin
