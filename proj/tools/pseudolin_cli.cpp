#include "pseudolin/pseudolin.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Args {
    pl_options opt;
    std::string instance = "hermite";
    std::string f, poly, prop, json_path, csv_path;
    std::vector<std::string> ops;
    bool certificate = false, generic = false, regular = false, improper = false;
};

bool write_file(const std::string& path, const char* content)
{
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return static_cast<bool>(out);
}

int finish(pl_status st, pl_report* rep, const Args& a)
{
    if (st != PL_OK) {
        std::cerr << "error: " << pl_last_error() << "\n";
        return st == PL_ERR_INTERNAL ? 1 : 2;
    }
    std::cout << pl_report_text(rep);
    bool written = true;
    if (!a.json_path.empty()) written = write_file(a.json_path, pl_report_json(rep)) && written;
    if (!a.csv_path.empty()) written = write_file(a.csv_path, pl_report_csv(rep)) && written;
    const int code = pl_report_ok(rep) ? 0 : 1;
    pl_report_free(rep);
    return written ? code : 2;
}

void seed_and_json(CLI::App* sub, Args& a)
{
    sub->add_option("--seed", a.opt.seed, "random seed")->capture_default_str();
    sub->add_option("--json", a.json_path, "write the JSON report to PATH");
}

std::vector<const char*> c_strings(const std::vector<std::string>& v)
{
    std::vector<const char*> r;
    for (const auto& s : v) r.push_back(s.c_str());
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    Args a;
    pl_options_init(&a.opt);

    CLI::App app{"Minimal relations of pseudo-linear maps: telescopers, resolvents, LCLMs, symmetric products"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pl_version()));

    auto* tel = app.add_subcommand("telescoper", "minimal telescoper of p/q by Hermite reduction");
    tel->add_option("--f", a.f, "rational function p/q in x and y")->required();
    tel->add_flag("--certificate", a.certificate, "also return h with L(f) = d/dy(h)");
    seed_and_json(tel, a);

    auto* res = app.add_subcommand("resolvent", "differential resolvent of P(x, y) = 0");
    res->add_option("--poly", a.poly, "polynomial P in x and y")->required();
    seed_and_json(res, a);

    auto* lc = app.add_subcommand("lclm", "least common left multiple");
    lc->add_option("--op", a.ops, "operator in x and Dx (repeatable)")->required();
    seed_and_json(lc, a);

    auto* sp = app.add_subcommand("symprod", "symmetric product");
    sp->add_option("--op", a.ops, "operator in x and Dx (repeatable)")->required();
    seed_and_json(sp, a);

    auto* bt = app.add_subcommand("bounds-table", "observed degrees against the degree bounds on random instances");
    bt->add_option("--instance", a.instance, "hermite, resolvent, lclm or symprod")
        ->check(CLI::IsMember({"hermite", "resolvent", "lclm", "symprod"}))
        ->capture_default_str();
    bt->add_option("--csv", a.csv_path, "write the table as CSV to PATH");

    auto* cp = app.add_subcommand("check-props", "randomized property checks");
    cp->add_option("--prop", a.prop, "krylov-denominator, det-den-laws, lemma2-delta or bounds")
        ->required()
        ->check(CLI::IsMember({"krylov-denominator", "det-den-laws", "lemma2-delta", "bounds"}));
    cp->add_option("--n", a.opt.n, "matrix size")->capture_default_str();
    cp->add_option("--delta", a.opt.delta, "degree of det M")->capture_default_str();
    cp->add_flag("--allow-improper", a.improper, "probe instances that are not strictly proper");

    for (auto* sub : {bt, cp}) {
        sub->add_option("--trials", a.opt.trials, "number of random trials")->capture_default_str();
        sub->add_option("--dx", a.opt.dx, "degree in x")->capture_default_str();
        sub->add_option("--dy", a.opt.dy, "degree in y")->capture_default_str();
        sub->add_option("--order", a.opt.order, "operator order")->capture_default_str();
        sub->add_option("--degree", a.opt.degree, "operator degree")->capture_default_str();
        sub->add_option("--factors", a.opt.factors, "number of operators")->capture_default_str();
        sub->add_flag("--generic", a.generic, "sample only generic bivariate inputs");
        sub->add_flag("--regular-infinity", a.regular, "sample operators without an irregular singularity at infinity");
        seed_and_json(sub, a);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    a.opt.certificate = a.certificate;
    a.opt.generic = a.generic;
    a.opt.regular_infinity = a.regular;
    a.opt.allow_improper = a.improper;
    a.opt.instance = a.instance.c_str();

    pl_report* rep = nullptr;
    pl_status st;
    if (*tel)
        st = pl_telescoper(a.f.c_str(), &a.opt, &rep);
    else if (*res)
        st = pl_resolvent(a.poly.c_str(), &a.opt, &rep);
    else if (*lc) {
        auto v = c_strings(a.ops);
        st = pl_lclm(v.data(), v.size(), &a.opt, &rep);
    } else if (*sp) {
        auto v = c_strings(a.ops);
        st = pl_symprod(v.data(), v.size(), &a.opt, &rep);
    } else if (*bt)
        st = pl_bounds_table(&a.opt, &rep);
    else
        st = pl_check_props(a.prop.c_str(), &a.opt, &rep);
    return finish(st, rep, a);
}
