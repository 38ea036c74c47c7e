#pragma once

#include "pseudolin/krylov.hpp"
#include "pseudolin/ore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pseudolin {

// ---------------------------------------------------------------- telescoping

/// h = num / q^power for the q of the reduction.
struct Certificate {
    YPoly num;
    int power = 0;
};

struct HermiteReduction {
    YPoly r;
    std::optional<Certificate> h;
};

/// Writes num / q^power = d/dy(h) + r / q with deg_y r < deg_y q.
/// Throws DomainError unless q is square-free in y.
HermiteReduction hermite_reduce(const YPoly& num, int power, const BiPoly& q, bool want_certificate);

/// num = d/dy(H) q - P H q_y + r q^P for h = H / q^P and power = P + 1.
bool check_hermite_identity(const YPoly& num, int power, const BiPoly& q, const HermiteReduction& red);

struct HermiteInstance {
    BiPoly p, q;
    int d_x = 0, d_y = 0;
    PseudoLinearMap map{RatMatrix()};
    Realisation realisation;
    /// Coefficients of p in the basis 1, y, ..., y^(d_y - 1).
    std::vector<Poly> a;
};

/// The coefficient of x^(d_x) in q has y-degree d_y and is square-free.
bool genericity_check(const BiPoly& q);
HermiteInstance build_hermite(const BiPoly& p, const BiPoly& q);

struct TelescoperResult {
    Relation relation;
    OrePoly op;
    /// L(f) = d/dy(h) when requested.
    std::optional<Certificate> certificate;
    bool verified = false;
};

TelescoperResult telescoper(const HermiteInstance& inst, bool want_certificate);
/// Hermite reduction of L(p / q) computed from scratch; true iff it is 0.
bool verify_telescoper(const OrePoly& l, const BiPoly& p, const BiPoly& q,
                       std::optional<Certificate>* certificate = nullptr);

long bound_hermite(int r, int d_x, int d_y);

// ---------------------------------------------------------------- resolvent

struct AlgebraicInstance {
    BiPoly P;
    int d_x = 0, d_y = 0;
    PseudoLinearMap map{RatMatrix()};
    Realisation realisation;
    /// The root y in the basis 1, y, ..., y^(d_y - 1); empty when d_y = 1.
    std::vector<Poly> a;
};

/// Throws DomainError unless P is square-free in y with d_y >= 1.
AlgebraicInstance build_algebraic(const BiPoly& P);

struct ResolventResult {
    /// Present when d_y >= 2 (the relation of the pseudo-linear problem).
    std::optional<Relation> relation;
    OrePoly op;
    bool verified = false;
};

ResolventResult resolvent(const AlgebraicInstance& inst);
/// Checks sum eta_i D_i = 0 mod P, with D_i from the recursion
/// D_{i+1} = d/dx D_i - d/dy(D_i) P_x / P_y mod P (inverse by extended gcd).
bool verify_resolvent(const OrePoly& l, const BiPoly& P);

long bound_algebraic(int r, int d_x, int d_y);

// ---------------------------------------------------------------- closures

enum class ClosureKind { lclm, symprod };

struct ClosureInstance {
    ClosureKind kind = ClosureKind::lclm;
    std::vector<OrePoly> operators;
    std::vector<OrePoly> euler_forms;
    PseudoLinearMap map{RatMatrix()};
    std::vector<Poly> a;
    Realisation realisation;
};

ClosureInstance build_lclm(const std::vector<OrePoly>& ops);
ClosureInstance build_symprod(const std::vector<OrePoly>& ops);

struct ClosureResult {
    Relation relation;
    OrePoly op;
    bool verified = false;
};

ClosureResult lclm(const ClosureInstance& inst);
/// Zero remainder under right division by every input.
bool verify_lclm(const OrePoly& l, const std::vector<OrePoly>& ops);

ClosureResult symprod(const ClosureInstance& inst, std::uint64_t seed = 1);
/// L kills products of series solutions of the factors: draws random
/// initial conditions, expands to order n at the first natural number that
/// is an ordinary point of every operator.
bool verify_symprod(const OrePoly& l, const std::vector<OrePoly>& ops, std::uint64_t seed, int draws = 3, int n = 40);

/// s = 2: r (r_1 + r_2 + 2 d) - r (r - 1) / 2; s > 2: R (s d + R).
long bound_lclm(int r, const std::vector<int>& orders, int d);
/// s = 2: r (2 r_1 r_2 + d_1 r_2 + d_2 r_1) - r (r - 1) / 2;
/// s > 2: s R (R + d r^(s - 1)) with r the largest order.
long bound_symprod(int r, const std::vector<int>& orders, const std::vector<int>& degrees);
/// (r_1 r_2 - r_1 - r_2 + 2)(d_1 r_2 + d_2 r_1): reported, never asserted.
long symprod_conjecture(const std::vector<int>& orders, const std::vector<int>& degrees);

// ---------------------------------------------------------------- bound reports

/// Per-coefficient instance bounds. The asserted flag records whether the
/// side condition of the corresponding degree theorem holds.
BoundReport hermite_report(const HermiteInstance& inst, const Relation& rel);
BoundReport resolvent_report(const AlgebraicInstance& inst, const OrePoly& op);
BoundReport lclm_report(const ClosureInstance& inst, const Relation& rel);
BoundReport symprod_report(const ClosureInstance& inst, const Relation& rel);
/// Realisation bound with the instance realisation, asserted iff T is
/// strictly proper.
BoundReport instance_realisation_report(const std::string& label, const PseudoLinearMap& map,
                                        const Realisation& real, const std::vector<Poly>& a, const Relation& rel);

/// Degree of the operator in its primitive form, per coefficient.
std::vector<int> operator_degrees(const OrePoly& op);

} // namespace pseudolin
