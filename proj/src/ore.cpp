#include "pseudolin/ore.hpp"
#include "pseudolin/error.hpp"

#include <algorithm>
#include <sstream>

namespace pseudolin {

OrePoly::OrePoly(Generator g, std::vector<RatFun> coeffs) : gen_(g), c_(std::move(coeffs)) { trim(); }

OrePoly OrePoly::from_polys(Generator g, const std::vector<Poly>& coeffs)
{
    std::vector<RatFun> c(coeffs.begin(), coeffs.end());
    return OrePoly(g, std::move(c));
}

OrePoly OrePoly::gen(Generator g) { return OrePoly(g, {RatFun(), RatFun(1)}); }

void OrePoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatFun OrePoly::coeff(int j) const
{
    if (j < 0 || j >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(j)];
}

const RatFun& OrePoly::leading() const
{
    static const RatFun zero;
    return c_.empty() ? zero : c_.back();
}

bool OrePoly::has_poly_coeffs() const
{
    return std::all_of(c_.begin(), c_.end(), [](const RatFun& f) { return f.is_poly(); });
}

int OrePoly::degree() const
{
    int d = kZeroDegree;
    for (const auto& f : c_) {
        if (!f.is_poly()) throw DomainError("operator degree needs polynomial coefficients");
        d = std::max(d, f.num().degree());
    }
    return d;
}

OrePoly OrePoly::operator-() const
{
    OrePoly r = *this;
    for (auto& f : r.c_) f = -f;
    return r;
}

OrePoly& OrePoly::operator+=(const OrePoly& o)
{
    if (gen_ != o.gen_) throw Error("operators use different generators");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) { return *this += -o; }

OrePoly operator*(const RatFun& f, const OrePoly& a)
{
    OrePoly r = a;
    if (f.is_zero()) return OrePoly(a.gen_);
    for (auto& c : r.c_) c = f * c;
    return r;
}

std::string OrePoly::to_string() const
{
    if (is_zero()) return "0";
    const std::string g = gen_ == Generator::Dx ? "Dx" : "E";
    std::ostringstream os;
    bool first = true;
    auto sign = [&](bool neg) {
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
    };
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j].is_zero()) continue;
        std::string gp = j == 0 ? "" : (j == 1 ? g : g + "^" + std::to_string(j));
        if (!c_[j].is_poly()) {
            sign(false);
            os << "(" << c_[j].to_string() << ")" << (gp.empty() ? "" : "*" + gp);
            continue;
        }
        const auto& p = c_[j].num().coeffs();
        for (std::size_t k = p.size(); k-- > 0;) {
            if (p[k] == 0) continue;
            sign(sgn(p[k]) < 0);
            BigRational mag = abs(p[k]);
            std::string xp = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
            std::string mono = xp;
            if (!gp.empty()) mono = mono.empty() ? gp : mono + "*" + gp;
            if (mono.empty())
                os << mag.get_str();
            else if (mag == 1)
                os << mono;
            else
                os << mag.get_str() << "*" << mono;
        }
    }
    return os.str();
}

namespace {

RatFun delta(Generator g, const RatFun& f)
{
    RatFun d = f.derivative();
    return g == Generator::Dx ? d : RatFun(Poly::x()) * d;
}

// G * b for the generator G of b.
OrePoly gen_times(const OrePoly& b)
{
    const Generator g = b.generator();
    std::vector<RatFun> r(b.coeffs().size() + 1);
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
        r[j] += delta(g, b.coeffs()[j]);
        r[j + 1] += b.coeffs()[j];
    }
    return OrePoly(g, std::move(r));
}

} // namespace

OrePoly ore_mul(const OrePoly& a, const OrePoly& b)
{
    if (a.generator() != b.generator()) throw Error("operators use different generators");
    OrePoly result(a.generator());
    OrePoly power = b;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i > 0) power = gen_times(power);
        if (!a.coeffs()[i].is_zero()) result += a.coeffs()[i] * power;
    }
    return result;
}

RatFun ore_apply(const OrePoly& l, const RatFun& f)
{
    RatFun acc;
    RatFun d = f;
    for (std::size_t j = 0; j < l.coeffs().size(); ++j) {
        if (j > 0) d = delta(l.generator(), d);
        if (!l.coeffs()[j].is_zero()) acc += l.coeffs()[j] * d;
    }
    return acc;
}

std::pair<OrePoly, OrePoly> right_divide(const OrePoly& a, const OrePoly& b)
{
    if (b.is_zero()) throw DomainError("right division by the zero operator");
    if (a.generator() != b.generator()) throw Error("operators use different generators");
    const Generator g = a.generator();
    const int rb = b.order();
    OrePoly q(g);
    OrePoly r = a;
    if (r.order() < rb) return {q, r};
    std::vector<OrePoly> shifted{b};
    while (static_cast<int>(shifted.size()) <= a.order() - rb) shifted.push_back(gen_times(shifted.back()));
    const RatFun inv = RatFun(1) / b.leading();
    while (!r.is_zero() && r.order() >= rb) {
        const int k = r.order() - rb;
        RatFun t = r.leading() * inv;
        std::vector<RatFun> mono(static_cast<std::size_t>(k) + 1);
        mono.back() = t;
        q += OrePoly(g, std::move(mono));
        OrePoly sub = t * shifted[static_cast<std::size_t>(k)];
        r -= sub;
    }
    return {q, r};
}

OrePoly normalize_primitive(const OrePoly& l, bool drop_poly_content)
{
    if (l.is_zero()) return l;
    Poly den = common_denominator(l.coeffs());
    std::vector<Poly> p;
    p.reserve(l.coeffs().size());
    for (const auto& c : l.coeffs()) p.push_back(c.num() * exact_div(den, c.den()));
    if (drop_poly_content) {
        Poly g;
        for (const auto& c : p) {
            g = poly_gcd(g, c);
            if (g.degree() == 0) break;
        }
        if (g.degree() > 0)
            for (auto& c : p) c = exact_div(c, g);
    }
    // Joint integer content: lcm of denominators over gcd of numerators.
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& c : p)
        for (const auto& v : c.coeffs()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
        }
    BigRational s(den_lcm, num_gcd);
    s.canonicalize();
    if (sgn(p.back().leading()) < 0) s = -s;
    for (auto& c : p) c *= s;
    return OrePoly::from_polys(l.generator(), p);
}

OrePoly to_euler_unreduced(const OrePoly& l)
{
    if (l.is_zero()) throw DomainError("conversion of the zero operator");
    if (l.generator() != Generator::Dx) throw Error("to_euler expects an operator in Dx");
    OrePoly n = normalize_primitive(l);
    const int r = n.order();
    // falling[j] holds the coefficients of t(t-1)...(t-j+1)
    std::vector<std::vector<BigRational>> falling{{BigRational(1)}};
    for (int j = 1; j <= r; ++j) {
        const auto& prev = falling.back();
        std::vector<BigRational> next(prev.size() + 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            next[k + 1] += prev[k];
            next[k] -= prev[k] * (j - 1);
        }
        falling.push_back(std::move(next));
    }
    std::vector<Poly> q(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) {
        Poly base = n.coeffs()[static_cast<std::size_t>(j)].num() * Poly::monomial(1, r - j);
        if (base.is_zero()) continue;
        const auto& f = falling[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < f.size(); ++k)
            if (f[k] != 0) q[k] += base * f[k];
    }
    return OrePoly::from_polys(Generator::Euler, q);
}

OrePoly to_euler(const OrePoly& l) { return normalize_primitive(to_euler_unreduced(l), true); }

OrePoly from_euler(const OrePoly& l)
{
    if (l.is_zero()) throw DomainError("conversion of the zero operator");
    if (l.generator() != Generator::Euler) throw Error("from_euler expects an operator in the Euler generator");
    const OrePoly e(Generator::Dx, {RatFun(), RatFun(Poly::x())});
    OrePoly power(Generator::Dx, {RatFun(1)});
    OrePoly result(Generator::Dx);
    for (std::size_t j = 0; j < l.coeffs().size(); ++j) {
        if (j > 0) power = ore_mul(e, power);
        if (!l.coeffs()[j].is_zero()) result += l.coeffs()[j] * power;
    }
    return normalize_primitive(result);
}

bool infinity_not_irregular(const OrePoly& l)
{
    if (l.is_zero()) throw DomainError("singularity test on the zero operator");
    OrePoly n = normalize_primitive(l);
    const int r = n.order();
    const int dr = n.leading().num().degree();
    for (int j = 0; j < r; ++j) {
        const Poly& p = n.coeffs()[static_cast<std::size_t>(j)].num();
        if (!p.is_zero() && p.degree() + (r - j) > dr) return false;
    }
    return true;
}

OrePoly shift_operator(const OrePoly& l, const BigRational& c)
{
    std::vector<RatFun> r;
    r.reserve(l.coeffs().size());
    for (const auto& f : l.coeffs()) r.push_back(f.shifted(c));
    return OrePoly(l.generator(), std::move(r));
}

namespace {

std::vector<Poly> poly_coeffs(const OrePoly& l, const char* what)
{
    if (l.generator() != Generator::Dx) throw Error(std::string(what) + " expects an operator in Dx");
    if (!l.has_poly_coeffs()) throw DomainError(std::string(what) + " needs polynomial coefficients");
    std::vector<Poly> p;
    for (const auto& c : l.coeffs()) p.push_back(c.num());
    return p;
}

// Coefficient of x^n in L(f), with f given by the coefficient list c
// (missing entries read as zero).
BigRational recurrence_term(const std::vector<Poly>& p, const std::vector<BigRational>& c, int n, int skip_top)
{
    BigRational sum = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const auto& pj = p[j].coeffs();
        for (std::size_t k = 0; k < pj.size() && static_cast<int>(k) <= n; ++k) {
            if (pj[k] == 0) continue;
            const int m = n - static_cast<int>(k) + static_cast<int>(j);
            if (skip_top >= 0 && m == skip_top) continue;
            if (m >= static_cast<int>(c.size()) || c[static_cast<std::size_t>(m)] == 0) continue;
            BigInt falling = 1;
            for (int t = 0; t < static_cast<int>(j); ++t) falling *= (m - t);
            sum += pj[k] * c[static_cast<std::size_t>(m)] * BigRational(falling);
        }
    }
    return sum;
}

} // namespace

TruncSeries series_solution(const OrePoly& l, const std::vector<BigRational>& init, int n)
{
    auto p = poly_coeffs(l, "series_solution");
    const int r = l.order();
    if (r < 0) throw DomainError("series solution of the zero operator");
    if (static_cast<int>(init.size()) != r) throw Error("series solution needs one initial value per order");
    const BigRational lead0 = p.back().coeff(0);
    if (lead0 == 0) throw DomainError("0 is a singular point of the operator");
    TruncSeries s;
    s.c.assign(static_cast<std::size_t>(std::max(n, r - 1)) + 1, BigRational(0));
    BigInt fact = 1;
    for (int j = 0; j < r; ++j) {
        if (j > 0) fact *= j;
        s.c[static_cast<std::size_t>(j)] = init[static_cast<std::size_t>(j)] / BigRational(fact);
    }
    for (int m = 0; m + r <= n; ++m) {
        // the x^m coefficient is lead0 * (m+r)!/m! * c_{m+r} + (terms in lower c)
        BigRational rest = recurrence_term(p, s.c, m, m + r);
        BigInt falling = 1;
        for (int t = 1; t <= r; ++t) falling *= (m + t);
        s.c[static_cast<std::size_t>(m + r)] = -rest / (lead0 * BigRational(falling));
    }
    s.c.resize(static_cast<std::size_t>(n) + 1);
    return s;
}

std::vector<BigRational> apply_to_series(const OrePoly& l, const TruncSeries& s)
{
    auto p = poly_coeffs(l, "apply_to_series");
    const int top = s.order() - l.order();
    std::vector<BigRational> out;
    for (int m = 0; m <= top; ++m) out.push_back(recurrence_term(p, s.c, m, -1));
    return out;
}

TruncSeries series_product(const TruncSeries& a, const TruncSeries& b)
{
    const std::size_t n = std::min(a.c.size(), b.c.size());
    TruncSeries r;
    r.c.assign(n, BigRational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

} // namespace pseudolin
