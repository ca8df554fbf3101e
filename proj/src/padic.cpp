#include "dworkhg/padic.hpp"

#include <map>
#include <mutex>

namespace dworkhg {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// modular inverse for gcd(a, m) = 1
uint64_t invmod(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    int64_t r = (int64_t)m, nr = (int64_t)(a % m);
    while (nr != 0) {
        int64_t qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw config_error("modular inverse of a non-unit");
    return (uint64_t)(t < 0 ? t + (int64_t)m : t);
}

// p^k as uint64 bounded to 2^62 so signed helpers stay safe
uint64_t pow_u64_checked(uint32_t p, unsigned k) {
    uint64_t m = 1;
    const uint64_t cap = (uint64_t)1 << 62;
    for (unsigned i = 0; i < k; ++i) {
        if (m > cap / p) throw budget_error("p-adic working modulus too large");
        m *= p;
    }
    return m;
}

}  // namespace

mpq_class frac_part(const mpq_class& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - mpq_class(fl);
}

namespace {

// floor of a rational
long floor_long(const mpq_class& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (!fl.fits_slong_p()) throw config_error("rational floor out of range");
    return fl.get_si();
}

uint64_t rational_mod(const mpq_class& a, uint64_t m) {
    mpz_class mm((unsigned long)m);
    mpz_class num = a.get_num() % mm;
    if (num < 0) num += mm;
    mpz_class den = a.get_den() % mm;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw config_error("denominator not invertible modulo p^k");
    mpz_class r = (num * inv) % mm;
    return r.get_ui();
}

}  // namespace

uint64_t gamma_p(const mpq_class& a, uint32_t p, unsigned k) {
    if (k == 0) throw config_error("precision must be positive");
    uint64_t M = pow_u64_checked(p, k);
    uint64_t n = rational_mod(a, M);
    static std::map<std::tuple<uint32_t, unsigned, uint64_t>, uint64_t> cache;
    static std::mutex mtx;
    auto key = std::make_tuple(p, k, n);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    if (n > 2000000000ull) throw budget_error("p-adic Gamma product too long");
    uint64_t r = 1;
    for (uint64_t j = 1; j < n; ++j)
        if (j % p) r = mulmod(r, j, M);
    if (n % 2) r = (M - r) % M;  // (-1)^n sign
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(key, r);
    return r;
}

GResult mccarthy_G(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                   uint64_t t, uint32_t p, unsigned k) {
    if (upper.size() != lower.size() || upper.empty())
        throw config_error("nGn needs equally many upper and lower parameters");
    if (k == 0) throw config_error("precision must be positive");
    if (t % p == 0) throw config_error("nGn argument must be a unit mod p");
    size_t n = upper.size();
    uint32_t pm1 = p - 1;

    // per-term exponent of (-p): nu_j = sum_i (-floor(<a_i> - j/(p-1)) - floor(<-b_i> + j/(p-1)))
    std::vector<long> nus(pm1);
    long numin = 0;
    for (uint32_t j = 0; j < pm1; ++j) {
        mpq_class jj((long)j, (long)pm1);
        jj.canonicalize();
        long nu = 0;
        for (size_t i = 0; i < n; ++i) {
            nu -= floor_long(frac_part(upper[i]) - jj);
            nu -= floor_long(frac_part(-lower[i]) + jj);
        }
        nus[j] = nu;
        if (nu < numin) numin = nu;
    }
    long g = numin < 0 ? -numin : 0;
    unsigned K = k + (unsigned)g + 1;
    uint64_t M = pow_u64_checked(p, K);
    uint64_t u = teichmuller(t, p, K);
    uint64_t uinv = invmod(u, M);

    uint64_t S = 0;
    for (uint32_t j = 0; j < pm1; ++j) {
        mpq_class jj((long)j, (long)pm1);
        jj.canonicalize();
        uint64_t c = powmod(uinv, j, M);
        if (((uint64_t)j * n) % 2) c = (M - c) % M;  // (-1)^{jn}
        for (size_t i = 0; i < n; ++i) {
            // Gamma_p arguments are wrapped into [0,1) BEFORE evaluation;
            // Gamma_p is not periodic, so <a - j/(p-1)> and <a> - j/(p-1)
            // differ by more than a sign once the latter goes negative.
            c = mulmod(c, gamma_p(frac_part(upper[i] - jj), p, K), M);
            c = mulmod(c, invmod(gamma_p(frac_part(upper[i]), p, K), M), M);
            c = mulmod(c, gamma_p(frac_part(-lower[i] + jj), p, K), M);
            c = mulmod(c, invmod(gamma_p(frac_part(-lower[i]), p, K), M), M);
        }
        long e = nus[j] + g;  // >= 0
        uint64_t pk = powmod(p, (uint64_t)e, M);
        if (e % 2) pk = (M - pk) % M;  // (-p)^e
        c = mulmod(c, pk, M);
        S = (S + c) % M;
    }
    uint64_t pg = pow_u64_checked(p, (unsigned)g);
    GResult res;
    if (S % pg) return res;  // not divisible: value not p-integral here
    uint64_t mk = pow_u64_checked(p, k);
    uint64_t V = (S / pg) % pow_u64_checked(p, K - (unsigned)g);
    res.integral = true;
    res.value = mulmod(mk - V % mk, invmod(pm1, mk), mk) % mk;  // -V/(p-1) mod p^k
    return res;
}

uint32_t truncated_hgf_mod_p(const std::vector<mpq_class>& upper,
                             const std::vector<mpq_class>& lower, uint64_t x, unsigned m,
                             uint32_t p) {
    if (m > p) throw config_error("truncation beyond p is not invertible mod p");
    uint64_t tot = 0, term = 1;
    x %= p;
    for (unsigned j = 0; j < m; ++j) {
        tot = (tot + term) % p;
        if (j + 1 == m) break;  // do not form the next term: (1)_{p-1}+1 hits p
        uint64_t num = 1, den = (j + 1) % p;
        for (const auto& a : upper) {
            mpq_class v = a + (long)j;
            num = mulmod(num, rational_mod(v, p), p);
        }
        for (const auto& b : lower) {
            mpq_class v = b + (long)j;
            if (v.get_num() % p == 0)
                throw config_error("pole in a lower parameter within truncation range");
            den = mulmod(den, rational_mod(v, p), p);
        }
        term = mulmod(term, num, p);
        term = mulmod(term, invmod(den, p), p);
        term = mulmod(term, x, p);
    }
    return (uint32_t)tot;
}

mpq_class classical_hgf_partial(const std::vector<mpq_class>& upper,
                                const std::vector<mpq_class>& lower, const mpq_class& x,
                                unsigned N) {
    mpq_class tot = 0, term = 1;
    for (unsigned j = 0; j < N; ++j) {
        tot += term;
        if (j + 1 == N) break;
        mpq_class num = 1, den = mpq_class((long)j + 1);
        for (const auto& a : upper) num *= a + (long)j;
        for (const auto& b : lower) {
            mpq_class v = b + (long)j;
            if (v == 0) throw config_error("pole in a lower parameter of the classical series");
            den *= v;
        }
        term *= num * x;
        term /= den;
    }
    return tot;
}

VerificationReport pochhammer_identity_check(uint32_t m, uint32_t d, uint32_t p, uint32_t j) {
    if (d < 2 || m == 0 || m >= d) throw config_error("need 1 <= m < d");
    if ((p - 1) % d != 0) throw config_error("need p = 1 mod d");
    uint32_t t = (p - 1) / d;
    if (j > m * t) throw config_error("index beyond the stated range");
    mpq_class md((long)m, (long)d);
    md.canonicalize();
    // lhs = Gamma(m/d+j) Gamma(1-m/d+j) / Gamma(1+j)^2 mod p
    uint64_t lhs = gamma_p(md + (long)j, p, 1);
    lhs = mulmod(lhs, gamma_p(1 - md + (long)j, p, 1), p);
    uint64_t g1 = gamma_p(mpq_class(1 + (long)j), p, 1);
    lhs = mulmod(lhs, invmod(mulmod(g1, g1, p), p), p);

    // rhs = (-1)^{mt+1} (m/d)_j ((d-m)/d)_j / j!^2 mod p
    mpq_class poch = 1;
    mpq_class dmd((long)(d - m), (long)d);
    dmd.canonicalize();
    for (uint32_t i = 0; i < j; ++i) poch *= (md + (long)i) * (dmd + (long)i);
    mpq_class fact = 1;
    for (uint32_t i = 1; i <= j; ++i) fact *= (long)i;
    mpq_class rhs_q = poch / (fact * fact);
    if (((uint64_t)m * t + 1) % 2) rhs_q = -rhs_q;
    uint64_t rhs = rational_mod(rhs_q, p);
    return make_report(
        "pochhammer-gamma-identity",
        {{"m", std::to_string(m)}, {"d", std::to_string(d)}, {"p", std::to_string(p)},
         {"j", std::to_string(j)}},
        std::to_string(lhs), std::to_string(rhs), lhs == rhs,
        lhs == rhs ? "0" : std::to_string((lhs + p - rhs) % p));
}

}  // namespace dworkhg
