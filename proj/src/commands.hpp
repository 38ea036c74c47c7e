#pragma once

#include "format.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pseudolin {

struct CommandOptions {
    std::uint64_t seed = 1;
    bool certificate = false;
    int trials = 20;
    int dx = 2, dy = 2;
    int order = 2, degree = 2, factors = 2;
    int n = 2, delta = 3;
    bool generic = false;
    bool regular_infinity = false;
    bool allow_improper = false;
    std::string instance = "hermite";
};

struct CommandResult {
    Json report;
    std::string text;
    std::string csv;
    bool ok = true;
};

CommandResult run_telescoper(const std::string& f, const CommandOptions& opt);
CommandResult run_resolvent(const std::string& poly, const CommandOptions& opt);
CommandResult run_lclm(const std::vector<std::string>& ops, const CommandOptions& opt);
CommandResult run_symprod(const std::vector<std::string>& ops, const CommandOptions& opt);
/// One random instance of opt.instance per trial, tabulated per coefficient.
CommandResult run_bounds_table(const CommandOptions& opt);
CommandResult run_check_props(const std::string& prop, const CommandOptions& opt);

/// One solved instance with its bound comparison.
struct Outcome {
    std::string instance;
    Json params;
    OrePoly op;
    BoundReport bound;
    /// Realisation-bound comparison against the instance realisation; absent when the
    /// map has no polynomial starting vector.
    std::optional<BoundReport> realisation_bound;
    std::string method;
    bool verified = false;
    Json extra;
};

Outcome solve_hermite(const BiPoly& p, const BiPoly& q, bool certificate);
Outcome solve_resolvent(const BiPoly& P);
Outcome solve_lclm(const std::vector<OrePoly>& ops);
Outcome solve_symprod(const std::vector<OrePoly>& ops, std::uint64_t seed);

struct PropResult {
    int passed = 0, total = 0;
    /// False when the property is an unproven conjecture being probed.
    bool asserted = true;
    std::vector<std::uint64_t> failed_seeds;
};

/// phi_l(K) | Delta^{s_r} on random strictly proper instances of size opt.n
/// and deg Delta = opt.delta (W added when allow_improper).
PropResult prop_krylov_denominator(const CommandOptions& opt);
/// Sum, product and inverse laws of determinantal denominators, and
/// phi_l(T) | Delta for instance realisations.
PropResult prop_det_den_laws(const CommandOptions& opt);
/// Delta = +-lc(q) res_y(q, q_y) and genericity <=> deg res = (2 d_y - 1) d_x.
PropResult prop_lemma2_delta(const CommandOptions& opt);
/// Bound soundness and verification over all four instance kinds.
PropResult prop_bounds(const CommandOptions& opt);

} // namespace pseudolin
