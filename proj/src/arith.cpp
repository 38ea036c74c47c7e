#include "pseudolin/arith.hpp"
#include "pseudolin/error.hpp"

#include "zpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pseudolin {

namespace {

// Schoolbook over Q is faster than converting tiny operands to Z[x].
constexpr std::size_t kIntegerKernelThreshold = 4;

std::string rational_text(const BigRational& c) { return c.get_str(); }

// Appends "c*v^k" style terms in descending order; used by Poly and BiPoly.
void append_term(std::ostringstream& os, bool first, const BigRational& c, const std::string& mono)
{
    const bool neg = sgn(c) < 0;
    BigRational mag = abs(c);
    if (first) {
        if (neg) os << "-";
    } else {
        os << (neg ? " - " : " + ");
    }
    if (mono.empty()) {
        os << rational_text(mag);
    } else if (mag == 1) {
        os << mono;
    } else {
        os << rational_text(mag) << "*" << mono;
    }
}

std::string power_text(char var, int k)
{
    if (k == 0) return {};
    if (k == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(k);
}

} // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(long c)
{
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const BigRational& c)
{
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const BigRational& c, int k)
{
    if (c == 0) return {};
    std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const BigRational& Poly::leading() const
{
    static const BigRational zero(0);
    return c_.empty() ? zero : c_.back();
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (std::min(a.c_.size(), b.c_.size()) >= kIntegerKernelThreshold) {
        auto za = detail::to_zpoly(a);
        auto zb = detail::to_zpoly(b);
        return detail::to_poly(za.z * zb.z, za.scale * zb.scale);
    }
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const BigRational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<BigRational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

BigRational Poly::eval(const BigRational& at) const
{
    BigRational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
    return r;
}

Poly Poly::shifted(const BigRational& shift) const
{
    // Horner in the ring: p(x + s) = (...(c_n (x+s) + c_{n-1}) (x+s) + ...)
    Poly lin(std::vector<BigRational>{shift, BigRational(1)});
    Poly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
    return r;
}

Poly Poly::monic() const
{
    if (is_zero()) return {};
    BigRational inv = 1 / leading();
    return *this * inv;
}

std::string Poly::to_string(char var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        append_term(os, first, c_[i], power_text(var, static_cast<int>(i)));
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<BigRational> rem = a.coeffs();
    std::vector<BigRational> q(rem.size() - b.coeffs().size() + 1);
    const BigRational inv = 1 / b.leading();
    const std::size_t nb = b.coeffs().size();
    for (std::size_t k = q.size(); k-- > 0;) {
        BigRational t = rem[k + nb - 1] * inv;
        if (t == 0) continue;
        for (std::size_t i = 0; i < nb; ++i) rem[k + i] -= t * b.coeffs()[i];
        q[k] = t;
    }
    rem.resize(nb - 1);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return {};
    auto za = detail::to_zpoly(a);
    auto zb = detail::to_zpoly(b);
    auto q = detail::try_div(za.z, zb.z);
    if (!q) throw DomainError("polynomial division is not exact");
    return detail::to_poly(*q, za.scale / zb.scale);
}

bool divides(const Poly& d, const Poly& a)
{
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return detail::try_div(detail::to_zpoly(a).z, detail::to_zpoly(d).z).has_value();
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero() && b.is_zero()) return {};
    auto g = detail::gcd(detail::to_zpoly(a).z, detail::to_zpoly(b).z);
    return detail::to_poly(g).monic();
}

Poly poly_lcm(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    Poly g = poly_gcd(a, b);
    return (exact_div(a, g) * b).monic();
}

Poly pow(const Poly& p, unsigned e)
{
    Poly r(1);
    Poly base = p;
    while (e) {
        if (e & 1U) r *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return r;
}

BigRational rational_content(const Poly& p)
{
    if (p.is_zero()) return 0;
    return abs(detail::to_zpoly(p).scale);
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(Poly num, Poly den)
{
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den.degree() == 0) {
        num_ = num * (1 / den.leading());
        den_ = Poly(1);
        return;
    }
    auto zn = detail::to_zpoly(num);
    auto zd = detail::to_zpoly(den);
    detail::ZPoly g = detail::gcd(zn.z, zd.z);
    if (g.degree() > 0) {
        zn.z = detail::exact_div(zn.z, g);
        zd.z = detail::exact_div(zd.z, g);
    }
    const BigRational lead(zd.z.lead());
    num_ = detail::to_poly(zn.z, zn.scale / (zd.scale * lead));
    den_ = detail::to_poly(zd.z, 1 / lead);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun& RatFun::operator+=(const RatFun& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_poly() && o.is_poly()) {
        num_ += o.num_;
        return *this;
    }
    if (o.is_poly()) {
        // gcd(a + c b, b) = gcd(a, b) = 1
        num_ += o.num_ * den_;
        return *this;
    }
    if (is_poly()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;
    }
    if (den_ == o.den_) {
        *this = RatFun(num_ + o.num_, den_);
        return *this;
    }
    Poly g = poly_gcd(den_, o.den_);
    if (g.degree() == 0) {
        // denominators coprime: the sum is already reduced
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        return *this;
    }
    Poly dg = exact_div(o.den_, g);
    Poly bg = exact_div(den_, g);
    *this = RatFun(num_ * dg + o.num_ * bg, den_ * dg);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o)
{
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun();
    if (is_poly() && o.is_poly()) {
        num_ *= o.num_;
        return *this;
    }
    Poly g1 = o.den_.degree() > 0 ? poly_gcd(num_, o.den_) : Poly(1);
    Poly g2 = den_.degree() > 0 ? poly_gcd(o.num_, den_) : Poly(1);
    Poly n1 = g1.degree() > 0 ? exact_div(num_, g1) : num_;
    Poly d2 = g1.degree() > 0 ? exact_div(o.den_, g1) : o.den_;
    Poly n2 = g2.degree() > 0 ? exact_div(o.num_, g2) : o.num_;
    Poly d1 = g2.degree() > 0 ? exact_div(den_, g2) : den_;
    Poly n = n1 * n2;
    Poly d = d1 * d2;
    const BigRational lead = d.leading();
    if (lead != 1) {
        n *= 1 / lead;
        d *= 1 / lead;
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o)
{
    if (o.is_zero()) throw DomainError("rational function division by zero");
    return *this *= RatFun(o.den_, o.num_);
}

RatFun RatFun::derivative() const
{
    if (is_poly()) return RatFun(num_.derivative());
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::shifted(const BigRational& shift) const
{
    return RatFun(num_.shifted(shift), den_.shifted(shift));
}

std::string RatFun::to_string() const
{
    if (is_poly()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.coeffs().size() > 1 && std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                                                  [](const BigRational& c) { return c != 0; }) > 1)
        n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

Poly common_denominator(std::span<const RatFun> values)
{
    Poly l(1);
    for (const auto& v : values)
        if (v.den().degree() > 0 && !divides(v.den(), l)) l = poly_lcm(l, v.den());
    return l;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(Poly c)
{
    if (!c.is_zero()) c_.push_back(std::move(c));
}

BiPoly::BiPoly(std::vector<Poly> ycoeffs) : c_(std::move(ycoeffs)) { trim(); }

BiPoly BiPoly::y() { return BiPoly(std::vector<Poly>{Poly{}, Poly(1)}); }

void BiPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::deg_x() const
{
    int d = kZeroDegree;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

Poly BiPoly::ycoeff(int j) const
{
    if (j < 0 || j >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(j)];
}

const Poly& BiPoly::lc_y() const
{
    static const Poly zero;
    return c_.empty() ? zero : c_.back();
}

Poly BiPoly::xcoeff(int k) const
{
    std::vector<BigRational> v(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) v[j] = c_[j].coeff(k);
    return Poly(std::move(v));
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(std::move(r));
}

std::string BiPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg_x(); k >= 0; --k) {
        for (std::size_t j = c_.size(); j-- > 0;) {
            BigRational c = c_[j].coeff(k);
            if (c == 0) continue;
            std::string mono = power_text('x', k);
            std::string ym = power_text('y', static_cast<int>(j));
            if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
            append_term(os, first, c, mono);
            first = false;
        }
    }
    return os.str();
}

BiPoly bipoly_derivative(const BiPoly& p, Var var)
{
    const auto& c = p.ycoeffs();
    std::vector<Poly> r;
    if (var == Var::y) {
        if (c.size() <= 1) return {};
        r.resize(c.size() - 1);
        for (std::size_t j = 1; j < c.size(); ++j) r[j - 1] = c[j] * BigRational(static_cast<long>(j));
    } else {
        r.resize(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) r[j] = c[j].derivative();
    }
    return BiPoly(std::move(r));
}

namespace {

Poly y_content(const BiPoly& a)
{
    Poly g;
    for (const auto& c : a.ycoeffs()) {
        g = poly_gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

BiPoly scale_bipoly(const BiPoly& a, const Poly& s)
{
    std::vector<Poly> r;
    r.reserve(a.ycoeffs().size());
    for (const auto& c : a.ycoeffs()) r.push_back(c * s);
    return BiPoly(std::move(r));
}

BiPoly divide_bipoly(const BiPoly& a, const Poly& s)
{
    std::vector<Poly> r;
    r.reserve(a.ycoeffs().size());
    for (const auto& c : a.ycoeffs()) r.push_back(exact_div(c, s));
    return BiPoly(std::move(r));
}

// Integer content 1 and positive leading rational of the leading y-coefficient.
BiPoly normalize_integer(const BiPoly& a)
{
    if (a.is_zero()) return a;
    BigInt den = 1;
    BigInt num = 0;
    for (const auto& c : a.ycoeffs())
        for (const auto& v : c.coeffs()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
        }
    BigRational s(den, num);
    s.canonicalize();
    if (sgn(a.lc_y().leading()) < 0) s = -s;
    return scale_bipoly(a, Poly(s));
}

} // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero()) return normalize_integer(b);
    if (b.is_zero()) return normalize_integer(a);
    Poly ca = y_content(a);
    Poly cb = y_content(b);
    Poly cg = poly_gcd(ca, cb);
    BiPoly pa = divide_bipoly(a, ca);
    BiPoly pb = divide_bipoly(b, cb);
    BiPoly g(Poly(1));
    if (pa.deg_y() > 0 && pb.deg_y() > 0) {
        YPoly gy = ypoly_gcd(YPoly(pa), YPoly(pb));
        auto [gb, den] = gy.to_bipoly();
        (void)den;
        g = divide_bipoly(gb, y_content(gb));
    }
    return normalize_integer(scale_bipoly(g, cg));
}

BiPoly bipoly_exact_div(const BiPoly& a, const BiPoly& b)
{
    if (b.is_zero()) throw DomainError("bivariate division by zero");
    auto [q, r] = divmod(YPoly(a), YPoly(b));
    if (!r.is_zero()) throw DomainError("bivariate division is not exact");
    std::vector<Poly> out;
    for (const auto& c : q.ycoeffs()) {
        if (!c.is_poly()) throw DomainError("bivariate division is not exact");
        out.push_back(c.num());
    }
    return BiPoly(std::move(out));
}

// ---------------------------------------------------------------- YPoly

YPoly::YPoly(RatFun c)
{
    if (!c.is_zero()) c_.push_back(std::move(c));
}

YPoly::YPoly(std::vector<RatFun> ycoeffs) : c_(std::move(ycoeffs)) { trim(); }

YPoly::YPoly(const BiPoly& p)
{
    c_.reserve(p.ycoeffs().size());
    for (const auto& c : p.ycoeffs()) c_.emplace_back(c);
    trim();
}

void YPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatFun YPoly::coeff(int j) const
{
    if (j < 0 || j >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(j)];
}

const RatFun& YPoly::leading() const
{
    static const RatFun zero;
    return c_.empty() ? zero : c_.back();
}

YPoly YPoly::operator-() const
{
    YPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

YPoly& YPoly::operator+=(const YPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator*=(const RatFun& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RatFun> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return YPoly(std::move(r));
}

YPoly YPoly::derivative_y() const
{
    if (c_.size() <= 1) return {};
    std::vector<RatFun> r(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) r[j - 1] = c_[j] * RatFun(static_cast<long>(j));
    return YPoly(std::move(r));
}

YPoly YPoly::derivative_x() const
{
    std::vector<RatFun> r(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) r[j] = c_[j].derivative();
    return YPoly(std::move(r));
}

YPoly YPoly::integral_y() const
{
    if (c_.empty()) return {};
    std::vector<RatFun> r(c_.size() + 1);
    for (std::size_t j = 0; j < c_.size(); ++j)
        r[j + 1] = c_[j] * RatFun(BigRational(1, static_cast<unsigned long>(j + 1)));
    return YPoly(std::move(r));
}

std::pair<BiPoly, Poly> YPoly::to_bipoly() const
{
    Poly den = common_denominator(c_);
    std::vector<Poly> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c.num() * exact_div(den, c.den()));
    return {BiPoly(std::move(r)), den};
}

std::pair<YPoly, YPoly> divmod(const YPoly& a, const YPoly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {YPoly{}, a};
    std::vector<RatFun> rem = a.ycoeffs();
    std::vector<RatFun> q(rem.size() - b.ycoeffs().size() + 1);
    const RatFun inv = RatFun(1) / b.leading();
    const std::size_t nb = b.ycoeffs().size();
    for (std::size_t k = q.size(); k-- > 0;) {
        RatFun t = rem[k + nb - 1] * inv;
        if (t.is_zero()) continue;
        for (std::size_t i = 0; i + 1 < nb; ++i) rem[k + i] -= t * b.ycoeffs()[i];
        rem[k + nb - 1] = RatFun();
        q[k] = t;
    }
    rem.resize(nb - 1);
    return {YPoly(std::move(q)), YPoly(std::move(rem))};
}

YPoly ypoly_gcd(const YPoly& a, const YPoly& b)
{
    return ypoly_extended_gcd(a, b).g;
}

ExtendedGcd ypoly_extended_gcd(const YPoly& a, const YPoly& b)
{
    YPoly r0 = a, r1 = b;
    YPoly s0(RatFun(1)), s1;
    YPoly t0, t1(RatFun(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        YPoly s2 = s0 - q * s1;
        YPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    RatFun inv = RatFun(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

bool squarefree_y(const BiPoly& q)
{
    if (q.is_zero()) throw DomainError("squarefree_y: zero polynomial");
    if (q.deg_y() <= 0) return true;
    return ypoly_gcd(YPoly(q), YPoly(bipoly_derivative(q, Var::y))).degree() == 0;
}

} // namespace pseudolin
