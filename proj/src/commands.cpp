#include "commands.hpp"

#include "pseudolin/error.hpp"
#include "pseudolin/parse.hpp"
#include "pseudolin/random_instance.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace pseudolin {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool bound_ok(const BoundReport& r) { return !r.asserted || r.holds(); }

bool outcome_ok(const Outcome& o)
{
    return o.verified && bound_ok(o.bound) && (!o.realisation_bound || bound_ok(*o.realisation_bound));
}

std::vector<std::string> texts(const std::vector<OrePoly>& ops)
{
    std::vector<std::string> r;
    for (const auto& op : ops) r.push_back(op.to_string());
    return r;
}

Json closure_params(const std::vector<OrePoly>& ops)
{
    Json p;
    p["operators"] = texts(ops);
    std::vector<int> orders, degrees;
    bool regular = true;
    for (const auto& op : ops) {
        const OrePoly n = normalize_primitive(op);
        orders.push_back(n.order());
        degrees.push_back(n.degree());
        regular = regular && infinity_not_irregular(n);
    }
    p["orders"] = orders;
    p["degrees"] = degrees;
    p["regular_infinity"] = regular;
    return p;
}

std::string outcome_text(const Outcome& o)
{
    std::ostringstream os;
    os << "operator: " << o.op.to_string() << "\n";
    os << "order: " << o.op.order() << "  degree: " << o.op.degree() << "\n";
    os << "verification (" << o.method << "): " << (o.verified ? "ok" : "FAILED") << "\n";
    os << bounds_text(o.bound);
    if (o.realisation_bound) os << bounds_text(*o.realisation_bound);
    for (auto it = o.extra.begin(); it != o.extra.end(); ++it)
        if (it.key() != "certificate") os << it.key() << ": " << it.value().dump() << "\n";
    return os.str();
}

CommandResult single(const std::string& command, Outcome o, const CommandOptions& opt, Clock::time_point start)
{
    CommandResult r;
    r.ok = outcome_ok(o);
    r.text = outcome_text(o);
    Json& j = r.report;
    j["command"] = command;
    j["params"] = o.params;
    j["operator"] = operator_json(o.op);
    j["bounds"] = bounds_json(o.bound);
    if (o.realisation_bound) j["realisation_bounds"] = bounds_json(*o.realisation_bound);
    j["verification"] = {{"method", o.method}, {"ok", o.verified}};
    for (auto it = o.extra.begin(); it != o.extra.end(); ++it) j[it.key()] = it.value();
    j["seed"] = opt.seed;
    j["wall_ms"] = elapsed_ms(start);
    return r;
}

std::vector<OrePoly> parse_operators(const std::vector<std::string>& ops)
{
    if (ops.empty()) throw std::invalid_argument("at least one --op is required");
    std::vector<OrePoly> r;
    for (const auto& s : ops) r.push_back(parse_operator(s));
    return r;
}

void require_positive(int v, const char* what)
{
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

RandomOptions random_options(const CommandOptions& opt)
{
    RandomOptions r;
    r.generic = opt.generic;
    r.regular_infinity = opt.regular_infinity;
    return r;
}

Outcome random_outcome(const std::string& kind, const CommandOptions& opt, std::uint64_t seed)
{
    const RandomOptions ro = random_options(opt);
    if (kind == "hermite") {
        auto [p, q] = random_hermite(opt.dx, opt.dy, ro, seed);
        return solve_hermite(p, q, false);
    }
    if (kind == "resolvent") return solve_resolvent(random_algebraic(opt.dx, opt.dy, ro, seed));
    const std::vector<int> orders(static_cast<std::size_t>(opt.factors), opt.order);
    if (kind == "lclm") return solve_lclm(random_operators(orders, opt.degree, ro, seed));
    if (kind == "symprod") return solve_symprod(random_operators(orders, opt.degree, ro, seed), seed);
    throw std::invalid_argument("unknown instance kind '" + kind + "' (hermite, resolvent, lclm, symprod)");
}

bool divides_all(const std::vector<Poly>& phis, const Poly& target)
{
    for (const auto& phi : phis)
        if (!divides(phi, target)) return false;
    return true;
}

} // namespace

Outcome solve_hermite(const BiPoly& p, const BiPoly& q, bool certificate)
{
    HermiteInstance inst = build_hermite(p, q);
    TelescoperResult res = telescoper(inst, certificate);
    Outcome o;
    o.instance = "hermite";
    o.params = {{"p", p.to_string()}, {"q", q.to_string()}, {"d_x", inst.d_x}, {"d_y", inst.d_y},
                {"generic", genericity_check(q)}};
    o.op = res.op;
    o.bound = hermite_report(inst, res.relation);
    o.realisation_bound = instance_realisation_report("hermite", inst.map, inst.realisation, inst.a, res.relation);
    o.method = "hermite-reduction";
    o.verified = res.verified;
    if (res.certificate) o.extra["certificate"] = certificate_json(*res.certificate);
    return o;
}

Outcome solve_resolvent(const BiPoly& P)
{
    AlgebraicInstance inst = build_algebraic(P);
    ResolventResult res = resolvent(inst);
    Outcome o;
    o.instance = "resolvent";
    o.params = {{"P", P.to_string()}, {"d_x", inst.d_x}, {"d_y", inst.d_y}, {"generic", genericity_check(P)}};
    o.op = res.op;
    o.bound = resolvent_report(inst, res.op);
    if (res.relation)
        o.realisation_bound =
            instance_realisation_report("resolvent", inst.map, inst.realisation, inst.a, *res.relation);
    o.method = "cockle-recursion";
    o.verified = res.verified;
    if (inst.d_x == inst.d_y) {
        const long d = inst.d_x;
        const long empirical = d * (2 * d * d - 3 * d + 3);
        const long proven = (4 * d * d * d - 3 * d * d + d) / 2;
        const int observed = res.op.degree();
        o.extra["curves"] = {{"d", d},
                             {"observed_degree", observed},
                             {"empirical", empirical},
                             {"within_empirical", observed <= empirical},
                             {"proven", proven},
                             {"within_proven", observed <= proven}};
    }
    return o;
}

Outcome solve_lclm(const std::vector<OrePoly>& ops)
{
    ClosureInstance inst = build_lclm(ops);
    ClosureResult res = lclm(inst);
    Outcome o;
    o.instance = "lclm";
    o.params = closure_params(ops);
    o.op = res.op;
    o.bound = lclm_report(inst, res.relation);
    o.realisation_bound = instance_realisation_report("lclm", inst.map, inst.realisation, inst.a, res.relation);
    o.method = "right-division";
    o.verified = res.verified;
    return o;
}

Outcome solve_symprod(const std::vector<OrePoly>& ops, std::uint64_t seed)
{
    ClosureInstance inst = build_symprod(ops);
    ClosureResult res = symprod(inst, seed);
    Outcome o;
    o.instance = "symprod";
    o.params = closure_params(ops);
    o.op = res.op;
    o.bound = symprod_report(inst, res.relation);
    o.realisation_bound = instance_realisation_report("symprod", inst.map, inst.realisation, inst.a, res.relation);
    o.method = "series";
    o.verified = res.verified;
    if (ops.size() == 2) {
        const std::vector<int> orders = o.params["orders"].get<std::vector<int>>();
        const std::vector<int> degrees = o.params["degrees"].get<std::vector<int>>();
        const long c = symprod_conjecture(orders, degrees);
        o.extra["conjecture"] = {{"value", c}, {"observed_degree", res.op.degree()},
                                 {"within", res.op.degree() <= c}};
    }
    return o;
}

CommandResult run_telescoper(const std::string& f, const CommandOptions& opt)
{
    const auto start = Clock::now();
    RatFun2 r = parse_ratfun2(f);
    Outcome o = solve_hermite(r.p, r.q, opt.certificate);
    o.params["f"] = f;
    return single("telescoper", std::move(o), opt, start);
}

CommandResult run_resolvent(const std::string& poly, const CommandOptions& opt)
{
    const auto start = Clock::now();
    Outcome o = solve_resolvent(parse_bipoly(poly));
    return single("resolvent", std::move(o), opt, start);
}

CommandResult run_lclm(const std::vector<std::string>& ops, const CommandOptions& opt)
{
    const auto start = Clock::now();
    return single("lclm", solve_lclm(parse_operators(ops)), opt, start);
}

CommandResult run_symprod(const std::vector<std::string>& ops, const CommandOptions& opt)
{
    const auto start = Clock::now();
    return single("symprod", solve_symprod(parse_operators(ops), opt.seed), opt, start);
}

CommandResult run_bounds_table(const CommandOptions& opt)
{
    const auto start = Clock::now();
    require_positive(opt.trials, "--trials");
    require_positive(opt.factors, "--factors");
    CommandResult r;
    r.csv = csv_header();
    Json rows = Json::array();
    std::ostringstream os;
    os << "instance " << opt.instance << ", " << opt.trials << " trials, seed " << opt.seed << "\n";
    os << "trial  rho  degree  bound  asserted  holds  verified\n";
    int violations = 0, failures = 0;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t s = trial_seed(opt.seed, static_cast<std::uint64_t>(t));
        Outcome o = random_outcome(opt.instance, opt, s);
        const BoundReport& b = o.bound;
        const std::string params = o.params.dump();
        for (std::size_t i = 0; i < b.bound.size(); ++i)
            r.csv += csv_line({o.instance, params, static_cast<int>(i), b.observed[i], b.bound[i], b.asserted});
        if (!o.verified) ++failures;
        if (!bound_ok(b)) ++violations;
        r.ok = r.ok && outcome_ok(o);
        os << t << "  " << b.rho << "  " << o.op.degree() << "  " << b.bound.back() << "  " << yes_no(b.asserted)
           << "  " << yes_no(b.holds()) << "  " << yes_no(o.verified) << "\n";
        Json row = {{"trial", t}, {"seed", s}, {"params", o.params}, {"operator", operator_json(o.op)},
                    {"bounds", bounds_json(b)}, {"verified", o.verified}};
        if (o.realisation_bound) row["realisation_bounds"] = bounds_json(*o.realisation_bound);
        for (auto it = o.extra.begin(); it != o.extra.end(); ++it) row[it.key()] = it.value();
        rows.push_back(row);
    }
    os << "verification failures: " << failures << ", asserted bound violations: " << violations << "\n";
    r.text = os.str();
    Json& j = r.report;
    j["command"] = "bounds-table";
    j["params"] = {{"instance", opt.instance}, {"trials", opt.trials}, {"dx", opt.dx},        {"dy", opt.dy},
                   {"order", opt.order},       {"degree", opt.degree}, {"factors", opt.factors}, {"generic", opt.generic},
                   {"regular_infinity", opt.regular_infinity}};
    j["rows"] = rows;
    j["verification"] = {{"method", "per-instance"}, {"ok", r.ok}};
    j["seed"] = opt.seed;
    j["wall_ms"] = elapsed_ms(start);
    return r;
}

PropResult prop_krylov_denominator(const CommandOptions& opt)
{
    require_positive(opt.n, "--n");
    if (opt.delta < 0) throw std::invalid_argument("--delta must be nonnegative");
    PropResult r;
    r.asserted = !opt.allow_improper;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t s = trial_seed(opt.seed, static_cast<std::uint64_t>(t));
        const auto n = static_cast<std::size_t>(opt.n);
        ProperInstance inst = random_proper(n, opt.delta, {}, s, opt.allow_improper);
        const std::vector<Poly> a = random_vector(n, 2, {}, s + 1);
        std::vector<int> steps;
        for (int k = 0; k <= 1 + t % 4; ++k) steps.push_back(k);
        const bool ok = krylov_denominator_check(inst.map, inst.realisation, a, steps, std::min(n, steps.size()),
                                                 opt.allow_improper);
        ++r.total;
        if (ok)
            ++r.passed;
        else
            r.failed_seeds.push_back(s);
    }
    return r;
}

PropResult prop_det_den_laws(const CommandOptions& opt)
{
    PropResult r;
    RandomOptions ro;
    ro.height = 2;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t s = trial_seed(opt.seed, static_cast<std::uint64_t>(t));
        const std::size_t m = 2 + static_cast<std::size_t>(t % 2);
        const RatMatrix r1 = random_matrix(m, m, 1, ro, s);
        const RatMatrix r2 = random_matrix(m, m, 1, ro, s + 1);
        const auto p1 = det_denominators(r1, m), p2 = det_denominators(r2, m);
        const auto sum = det_denominators(r1 + r2, m), prod = det_denominators(r1 * r2, m);
        const bool coprime = poly_gcd(p1[1], p2[1]).degree() == 0;
        bool ok = true;
        for (std::size_t l = 0; l <= m; ++l) {
            const Poly bound = p1[l] * p2[l];
            ok = ok && divides(sum[l], bound) && divides(prod[l], bound);
            if (coprime) ok = ok && sum[l] == bound.monic();
        }
        const RatFun d = det(r1);
        if (!d.is_zero()) {
            const Poly alpha = d.num().monic(), beta = d.den();
            ok = ok && beta * det_denominator(inverse(r1), m) == alpha * det_denominator(r1, m);
        }

        // phi_l(T) | Delta on an instance realisation
        const PseudoLinearMap* map = nullptr;
        const Realisation* real = nullptr;
        HermiteInstance h;
        AlgebraicInstance al;
        ClosureInstance cl;
        const int dx = 1 + t % 2, dy = 1 + (t / 2) % 2;
        switch (t % 4) {
        case 0: {
            auto [p, q] = random_hermite(dx, dy, {}, s);
            h = build_hermite(p, q);
            map = &h.map;
            real = &h.realisation;
            break;
        }
        case 1:
            al = build_algebraic(random_algebraic(dx, dy + 1, {}, s));
            map = &al.map;
            real = &al.realisation;
            break;
        default: {
            auto ops = random_operators({dx, dy}, 1 + t % 3, {}, s);
            cl = t % 4 == 2 ? build_lclm(ops) : build_symprod(ops);
            map = &cl.map;
            real = &cl.realisation;
        }
        }
        ok = ok && divides_all(det_denominators(map->T(), map->n()), real->delta);

        ++r.total;
        if (ok)
            ++r.passed;
        else
            r.failed_seeds.push_back(s);
    }
    return r;
}

PropResult prop_lemma2_delta(const CommandOptions& opt)
{
    require_positive(opt.dx, "--dx");
    require_positive(opt.dy, "--dy");
    PropResult r;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t s = trial_seed(opt.seed, static_cast<std::uint64_t>(t));
        RandomOptions ro;
        ro.generic = t % 2 == 0;
        ro.height = 2;
        auto [p, q] = random_hermite(opt.dx, opt.dy, ro, s);
        HermiteInstance inst = build_hermite(p, q);
        const Poly res = resultant_y(q, bipoly_derivative(q, Var::y));
        const Poly expected = q.lc_y() * res;
        bool ok = inst.realisation.delta == expected || inst.realisation.delta == -expected;
        ok = ok && genericity_check(q) == (res.degree() == (2 * opt.dy - 1) * opt.dx);
        ++r.total;
        if (ok)
            ++r.passed;
        else
            r.failed_seeds.push_back(s);
    }
    return r;
}

PropResult prop_bounds(const CommandOptions& opt)
{
    static const char* kinds[] = {"hermite", "resolvent", "lclm", "symprod"};
    PropResult r;
    CommandOptions o = opt;
    o.generic = true;
    o.regular_infinity = true;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t s = trial_seed(opt.seed, static_cast<std::uint64_t>(t));
        Outcome out = random_outcome(kinds[t % 4], o, s);
        const bool ok = out.verified && out.bound.asserted && out.bound.holds() &&
                        (!out.realisation_bound || bound_ok(*out.realisation_bound));
        ++r.total;
        if (ok)
            ++r.passed;
        else
            r.failed_seeds.push_back(s);
    }
    return r;
}

CommandResult run_check_props(const std::string& prop, const CommandOptions& opt)
{
    const auto start = Clock::now();
    require_positive(opt.trials, "--trials");
    PropResult p;
    if (prop == "krylov-denominator")
        p = prop_krylov_denominator(opt);
    else if (prop == "det-den-laws")
        p = prop_det_den_laws(opt);
    else if (prop == "lemma2-delta")
        p = prop_lemma2_delta(opt);
    else if (prop == "bounds")
        p = prop_bounds(opt);
    else
        throw std::invalid_argument("unknown property '" + prop +
                                    "' (krylov-denominator, det-den-laws, lemma2-delta, bounds)");

    CommandResult r;
    r.ok = !p.asserted || p.passed == p.total;
    std::ostringstream os;
    os << prop << ": " << p.passed << "/" << p.total << " pass";
    if (!p.asserted) os << " (not asserted)";
    os << "\n";
    r.text = os.str();
    Json& j = r.report;
    j["command"] = "check-props";
    j["params"] = {{"prop", prop}, {"trials", opt.trials}, {"n", opt.n}, {"delta", opt.delta},
                   {"dx", opt.dx},  {"dy", opt.dy},        {"allow_improper", opt.allow_improper}};
    j["trials"] = {{"total", p.total}, {"passed", p.passed}, {"failed_seeds", p.failed_seeds}};
    j["verification"] = {{"method", prop}, {"ok", p.passed == p.total}};
    j["asserted"] = p.asserted;
    j["seed"] = opt.seed;
    j["wall_ms"] = elapsed_ms(start);
    return r;
}

} // namespace pseudolin
