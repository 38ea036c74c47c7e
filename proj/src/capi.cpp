#include "pseudolin/pseudolin.h"

#include "commands.hpp"
#include "pseudolin/error.hpp"
#include "pseudolin/parse.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>

using namespace pseudolin;

struct pl_report {
    std::string text, json, csv;
    bool ok;
};

struct pl_operator {
    OrePoly op;
};

struct pl_relation {
    PseudoLinearMap map;
    std::vector<Poly> a;
    Relation rel;
};

namespace {

thread_local std::string last_error;

template <class F>
pl_status guarded(F&& f)
{
    try {
        last_error.clear();
        f();
        return PL_OK;
    } catch (const ParseError& e) {
        last_error = e.what();
        return PL_ERR_PARSE;
    } catch (const DomainError& e) {
        last_error = e.what();
        return PL_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return PL_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PL_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PL_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return PL_ERR_INTERNAL;
    }
}

pl_status invalid(const char* what)
{
    last_error = what;
    return PL_ERR_INVALID_ARGUMENT;
}

char* dup(const std::string& s)
{
    char* r = static_cast<char*>(std::malloc(s.size() + 1));
    if (!r) throw std::bad_alloc();
    std::memcpy(r, s.c_str(), s.size() + 1);
    return r;
}

CommandOptions convert(const pl_options* o)
{
    CommandOptions c;
    if (!o) return c;
    c.seed = o->seed;
    c.certificate = o->certificate != 0;
    c.trials = o->trials;
    c.dx = o->dx;
    c.dy = o->dy;
    c.order = o->order;
    c.degree = o->degree;
    c.factors = o->factors;
    c.n = o->n;
    c.delta = o->delta;
    c.generic = o->generic != 0;
    c.regular_infinity = o->regular_infinity != 0;
    c.allow_improper = o->allow_improper != 0;
    if (o->instance) c.instance = o->instance;
    return c;
}

std::vector<std::string> strings(const char* const* v, std::size_t count)
{
    std::vector<std::string> r;
    for (std::size_t i = 0; i < count; ++i) {
        if (!v[i]) throw std::invalid_argument("NULL operator string");
        r.emplace_back(v[i]);
    }
    return r;
}

template <class F>
pl_status report(pl_report** out, F&& run)
{
    if (!out) return invalid("NULL output pointer");
    *out = nullptr;
    return guarded([&] {
        CommandResult r = run();
        *out = new pl_report{r.text, r.report.dump(2), r.csv, r.ok};
    });
}

std::vector<OrePoly> operators(const pl_operator* const* ops, std::size_t count)
{
    if (!ops || count == 0) throw std::invalid_argument("no operators given");
    std::vector<OrePoly> r;
    for (std::size_t i = 0; i < count; ++i) {
        if (!ops[i]) throw std::invalid_argument("NULL operator handle");
        r.push_back(ops[i]->op);
    }
    return r;
}

} // namespace

extern "C" {

const char* pl_last_error(void) { return last_error.c_str(); }

const char* pl_version(void) { return "0.1.0"; }

void pl_string_free(char* s) { std::free(s); }

void pl_options_init(pl_options* opt)
{
    if (!opt) return;
    const CommandOptions c;
    opt->seed = c.seed;
    opt->certificate = c.certificate;
    opt->trials = c.trials;
    opt->dx = c.dx;
    opt->dy = c.dy;
    opt->order = c.order;
    opt->degree = c.degree;
    opt->factors = c.factors;
    opt->n = c.n;
    opt->delta = c.delta;
    opt->generic = c.generic;
    opt->regular_infinity = c.regular_infinity;
    opt->allow_improper = c.allow_improper;
    opt->instance = "hermite";
}

pl_status pl_telescoper(const char* f, const pl_options* opt, pl_report** out)
{
    if (!f) return invalid("NULL expression");
    return report(out, [&] { return run_telescoper(f, convert(opt)); });
}

pl_status pl_resolvent(const char* poly, const pl_options* opt, pl_report** out)
{
    if (!poly) return invalid("NULL expression");
    return report(out, [&] { return run_resolvent(poly, convert(opt)); });
}

pl_status pl_lclm(const char* const* ops, size_t count, const pl_options* opt, pl_report** out)
{
    if (!ops && count > 0) return invalid("NULL operator list");
    return report(out, [&] { return run_lclm(strings(ops, count), convert(opt)); });
}

pl_status pl_symprod(const char* const* ops, size_t count, const pl_options* opt, pl_report** out)
{
    if (!ops && count > 0) return invalid("NULL operator list");
    return report(out, [&] { return run_symprod(strings(ops, count), convert(opt)); });
}

pl_status pl_bounds_table(const pl_options* opt, pl_report** out)
{
    return report(out, [&] { return run_bounds_table(convert(opt)); });
}

pl_status pl_check_props(const char* prop, const pl_options* opt, pl_report** out)
{
    if (!prop) return invalid("NULL property name");
    return report(out, [&] { return run_check_props(prop, convert(opt)); });
}

int pl_report_ok(const pl_report* r) { return r && r->ok ? 1 : 0; }
const char* pl_report_text(const pl_report* r) { return r ? r->text.c_str() : ""; }
const char* pl_report_json(const pl_report* r) { return r ? r->json.c_str() : ""; }
const char* pl_report_csv(const pl_report* r) { return r ? r->csv.c_str() : ""; }
void pl_report_free(pl_report* r) { delete r; }

pl_status pl_operator_parse(const char* text, pl_operator** out)
{
    if (!text || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new pl_operator{parse_operator(text)}; });
}

pl_status pl_operator_to_string(const pl_operator* op, char** out)
{
    if (!op || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = dup(op->op.to_string()); });
}

int pl_operator_order(const pl_operator* op) { return op ? op->op.order() : -1; }

pl_status pl_operator_lclm(const pl_operator* const* ops, size_t count, pl_operator** out)
{
    if (!out) return invalid("NULL output pointer");
    *out = nullptr;
    return guarded([&] { *out = new pl_operator{lclm(build_lclm(operators(ops, count))).op}; });
}

pl_status pl_operator_symprod(const pl_operator* const* ops, size_t count, uint64_t seed, pl_operator** out)
{
    if (!out) return invalid("NULL output pointer");
    *out = nullptr;
    return guarded([&] { *out = new pl_operator{symprod(build_symprod(operators(ops, count)), seed).op}; });
}

void pl_operator_free(pl_operator* op) { delete op; }

pl_status pl_relation_solve(const char* const* t, const char* const* a, size_t n, pl_relation** out)
{
    if (!t || !a || !out || n == 0) return invalid("invalid relation input");
    *out = nullptr;
    return guarded([&] {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n * n; ++i) {
            if (!t[i]) throw std::invalid_argument("NULL matrix entry");
            m(i / n, i % n) = parse_ratfun(t[i]);
        }
        std::vector<Poly> v;
        for (std::size_t i = 0; i < n; ++i) {
            if (!a[i]) throw std::invalid_argument("NULL vector entry");
            const RatFun f = parse_ratfun(a[i]);
            if (!f.is_poly()) throw DomainError("vector entries must be polynomials");
            v.push_back(f.num());
        }
        PseudoLinearMap map(std::move(m));
        Relation rel = solve_min_relation(map, v);
        *out = new pl_relation{std::move(map), std::move(v), std::move(rel)};
    });
}

int pl_relation_order(const pl_relation* rel) { return rel ? rel->rel.rho : -1; }

pl_status pl_relation_coeff(const pl_relation* rel, int i, char** out)
{
    if (!rel || !out) return invalid("NULL argument");
    if (i < 0 || i > rel->rel.rho) return invalid("coefficient index out of range");
    *out = nullptr;
    return guarded([&] { *out = dup(rel->rel.eta[static_cast<std::size_t>(i)].to_string()); });
}

int pl_relation_verify(const pl_relation* rel)
{
    if (!rel) return 0;
    try {
        return verify_relation(rel->map, rel->a, rel->rel) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

void pl_relation_free(pl_relation* rel) { delete rel; }

} // extern "C"
