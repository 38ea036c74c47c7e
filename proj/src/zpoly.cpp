#include "zpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace pseudolin::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Kronecker substitution pays off once both operands have a few terms.
constexpr std::size_t kKroneckerThreshold = 6;

std::size_t max_bits(const ZPoly& a)
{
    std::size_t m = 0;
    for (const auto& v : a.c)
        if (v != 0) m = std::max(m, mpz_sizeinbase(v.get_mpz_t(), 2));
    return m;
}

std::size_t bit_length(std::size_t v)
{
    std::size_t b = 0;
    while (v) { ++b; v >>= 1; }
    return b;
}

// Evaluates a at 2^(64*limbs) with signed coefficients.
mpz_class pack(const ZPoly& a, std::size_t limbs)
{
    std::vector<u64> pos(a.c.size() * limbs, 0);
    std::vector<u64> neg(a.c.size() * limbs, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const int s = sgn(a.c[i]);
        if (s == 0) continue;
        std::size_t count = 0;
        u64* dst = (s > 0 ? pos.data() : neg.data()) + i * limbs;
        mpz_export(dst, &count, -1, sizeof(u64), 0, 0, a.c[i].get_mpz_t());
        assert(count <= limbs);
        any_neg |= s < 0;
    }
    mpz_class p, n;
    mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(u64), 0, 0, pos.data());
    if (any_neg) {
        mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(u64), 0, 0, neg.data());
        p -= n;
    }
    return p;
}

// Inverse of pack for a value whose digits lie in (-2^(B-1), 2^(B-1)).
ZPoly unpack(const mpz_class& v, std::size_t limbs, std::size_t terms)
{
    ZPoly out;
    out.c.resize(terms);
    const int s = sgn(v);
    if (s == 0) { out.c.clear(); return out; }
    std::vector<u64> buf(terms * limbs + 1, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(u64), 0, 0, v.get_mpz_t());
    assert(count <= buf.size());
    mpz_class half, full;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, 64 * limbs);
    half = full / 2;
    int carry = 0;
    for (std::size_t i = 0; i < terms; ++i) {
        mpz_class d;
        mpz_import(d.get_mpz_t(), limbs, -1, sizeof(u64), 0, 0, buf.data() + i * limbs);
        if (carry) d += 1;
        if (d >= half) { d -= full; carry = 1; } else { carry = 0; }
        out.c[i] = s > 0 ? d : mpz_class(-d);
    }
    out.trim();
    return out;
}

ZPoly kronecker_mul(const ZPoly& a, const ZPoly& b)
{
    const std::size_t bits = max_bits(a) + max_bits(b) + bit_length(std::min(a.c.size(), b.c.size())) + 2;
    const std::size_t limbs = (bits + 63) / 64;
    mpz_class prod = pack(a, limbs) * pack(b, limbs);
    return unpack(prod, limbs, a.c.size() + b.c.size() - 1);
}

ZPoly schoolbook_mul(const ZPoly& a, const ZPoly& b)
{
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    r.trim();
    return r;
}

// ---- word-size modular arithmetic for the gcd ----

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 prime_at(std::size_t k)
{
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard lock(mu);
    u64 next = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
    while (primes.size() <= k) {
        while (!is_prime_u64(next)) next -= 2;
        primes.push_back(next);
        next -= 2;
    }
    return primes[k];
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

using ModPoly = std::vector<u64>;

void trim(ModPoly& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }

ModPoly reduce(const ZPoly& a, u64 p)
{
    ModPoly r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r[i] = mpz_fdiv_ui(a.c[i].get_mpz_t(), p);
    trim(r);
    return r;
}

// a <- a mod b, b nonzero
void rem_in_place(ModPoly& a, const ModPoly& b, u64 p)
{
    const u64 inv = invmod(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const u64 q = mulmod(a.back(), inv, p);
        const std::size_t shift = a.size() - b.size();
        if (q != 0) {
            for (std::size_t i = 0; i < db; ++i) {
                const u64 t = mulmod(q, b[i], p);
                u64& dst = a[i + shift];
                dst = dst >= t ? dst - t : dst + p - t;
            }
        }
        a.pop_back();
        trim(a);
    }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p)
{
    while (!b.empty()) {
        rem_in_place(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto& v : a) v = mulmod(v, inv, p);
    }
    return a;
}

} // namespace

std::size_t ZPoly::bit_size() const
{
    std::size_t s = 0;
    for (const auto& v : c) s += v == 0 ? 1 : mpz_sizeinbase(v.get_mpz_t(), 2);
    return s;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b)
{
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] + b.c[i];
        else if (i < a.c.size()) r.c[i] = a.c[i];
        else r.c[i] = b.c[i];
    }
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a)
{
    ZPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (std::min(a.c.size(), b.c.size()) >= kKroneckerThreshold) return kronecker_mul(a, b);
    return schoolbook_mul(a, b);
}

ZPoly operator*(const ZPoly& a, const mpz_class& s)
{
    if (s == 0) return {};
    ZPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

ZPoly mul_sub(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d)
{
    return a * b - c * d;
}

std::optional<ZPoly> try_div(const ZPoly& a, const ZPoly& b)
{
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return ZPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<mpz_class> rem = a.c;
    ZPoly q;
    q.c.assign(a.c.size() - b.c.size() + 1, mpz_class(0));
    const mpz_class& lb = b.lead();
    for (std::size_t k = q.c.size(); k-- > 0;) {
        mpz_class& top = rem[k + b.c.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_divexact(q.c[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t i = 0; i < b.c.size(); ++i)
            mpz_submul(rem[k + i].get_mpz_t(), q.c[k].get_mpz_t(), b.c[i].get_mpz_t());
    }
    for (std::size_t i = 0; i + 1 < b.c.size() && i < rem.size(); ++i)
        if (rem[i] != 0) return std::nullopt;
    q.trim();
    return q;
}

ZPoly exact_div(const ZPoly& a, const mpz_class& s)
{
    ZPoly r = a;
    for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    return r;
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b)
{
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.degree() == 0) return exact_div(a, b.c[0]);
    const std::size_t qterms = a.c.size() - b.c.size() + 1;
    if (std::min(qterms, b.c.size()) >= kKroneckerThreshold) {
        // Quotient coefficients obey Mignotte's bound 2^deg(q) * |a|_2.
        const std::size_t bits = max_bits(a) + qterms + bit_length(a.c.size()) + 2;
        const std::size_t limbs = (bits + 63) / 64;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), pack(a, limbs).get_mpz_t(), pack(b, limbs).get_mpz_t());
        return unpack(q, limbs, qterms);
    }
    auto q = try_div(a, b);
    assert(q.has_value());
    if (!q) throw std::logic_error("inexact polynomial division");
    return *q;
}

mpz_class content(const ZPoly& a)
{
    mpz_class g = 0;
    for (const auto& v : a.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& a)
{
    if (a.is_zero()) return a;
    mpz_class g = content(a);
    if (a.lead() < 0) g = -g;
    return exact_div(a, g);
}

ZPoly derivative(const ZPoly& a)
{
    ZPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * static_cast<unsigned long>(i);
    r.trim();
    return r;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0)
{
    if (a0.is_zero()) return primitive_part(b0);
    if (b0.is_zero()) return primitive_part(a0);
    ZPoly a = primitive_part(a0);
    ZPoly b = primitive_part(b0);
    if (a.degree() == 0 || b.degree() == 0) return ZPoly(1);
    if (a.degree() < b.degree()) std::swap(a, b);

    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), a.lead().get_mpz_t(), b.lead().get_mpz_t());

    int best = b.degree() + 1;
    std::vector<mpz_class> acc;
    mpz_class modulus;
    std::optional<ZPoly> previous;
    for (std::size_t k = 0;; ++k) {
        const u64 p = prime_at(k);
        if (mpz_fdiv_ui(a.lead().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lead().get_mpz_t(), p) == 0)
            continue;
        ModPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) return ZPoly(1);
        if (dg > best) continue;
        const u64 gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& v : g) v = mulmod(v, gm, p);
        if (dg < best) {
            best = dg;
            acc.assign(g.size(), mpz_class(0));
            for (std::size_t i = 0; i < g.size(); ++i) acc[i] = g[i];
            modulus = p;
            previous.reset();
        } else {
            const u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
            for (std::size_t i = 0; i < g.size(); ++i) {
                const u64 cur = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
                const u64 diff = g[i] >= cur ? g[i] - cur : g[i] + p - cur;
                const u64 t = mulmod(diff, minv, p);
                mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), t);
            }
            modulus *= p;
        }
        const mpz_class half = modulus / 2;
        ZPoly cand;
        cand.c = acc;
        for (auto& v : cand.c)
            if (v > half) v -= modulus;
        cand = primitive_part(cand);
        if (previous && *previous == cand) {
            if (try_div(a, cand) && try_div(b, cand)) return cand;
        }
        previous = std::move(cand);
    }
}

Scaled to_zpoly(const Poly& p)
{
    if (p.is_zero()) return {ZPoly{}, BigRational(0)};
    mpz_class den;
    ZPoly z = clear_denominators(p, den);
    mpz_class g = content(z);
    if (z.lead() < 0) g = -g;
    z = exact_div(z, g);
    BigRational scale(g, den);
    scale.canonicalize();
    return {std::move(z), std::move(scale)};
}

ZPoly clear_denominators(const Poly& p, mpz_class& den)
{
    den = 1;
    for (const auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    ZPoly z;
    z.c.resize(p.coeffs().size());
    for (std::size_t i = 0; i < z.c.size(); ++i) {
        const auto& v = p.coeffs()[i];
        mpz_divexact(z.c[i].get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        z.c[i] *= v.get_num();
    }
    return z;
}

Poly to_poly(const ZPoly& z)
{
    std::vector<BigRational> c(z.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = z.c[i];
    return Poly(std::move(c));
}

Poly to_poly(const ZPoly& z, const BigRational& scale)
{
    std::vector<BigRational> c(z.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = BigRational(z.c[i]) * scale;
    return Poly(std::move(c));
}

ZPoly bareiss_det(std::vector<ZPoly> m, std::size_t n)
{
    if (m.size() != n * n) throw std::invalid_argument("bareiss_det: not square");
    if (n == 0) return ZPoly(1);
    auto at = [&](std::size_t i, std::size_t j) -> ZPoly& { return m[i * n + j]; };
    bool negate = false;
    ZPoly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (at(i, k).is_zero()) continue;
            if (piv == n || at(i, k).degree() < at(piv, k).degree() ||
                (at(i, k).degree() == at(piv, k).degree() && at(i, k).bit_size() < at(piv, k).bit_size()))
                piv = i;
        }
        if (piv == n) return {};
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = exact_div(mul_sub(at(k, k), at(i, j), at(i, k), at(k, j)), prev);
        }
        prev = at(k, k);
    }
    return negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

} // namespace pseudolin::detail
