#include "dworkhg/cyclotomic.hpp"

#include <map>

namespace dworkhg {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<mpz_class> poly_divide_exact(const std::vector<mpz_class>& num,
                                         const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem(num);
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    for (size_t i = quot.size(); i-- > 0;) {
        mpz_class c = rem[i + den.size() - 1];  // den is monic
        quot[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); j++) rem[i + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw config_error("cyclotomic division left a remainder");
    return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(uint32_t n) {
    static std::map<uint32_t, std::vector<mpz_class>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<mpz_class> result;
    if (n == 1) {
        result = {mpz_class(-1), mpz_class(1)};  // x - 1
    } else {
        std::vector<mpz_class> xn1(n + 1, mpz_class(0));
        xn1[0] = -1;
        xn1[n] = 1;
        result = xn1;
        for (uint32_t d = 1; d < n; d++)
            if (n % d == 0) result = poly_divide_exact(result, cyclotomic_polynomial(d));
    }
    memo[n] = result;
    return result;
}

CycloContext::CycloContext(uint32_t nn, uint32_t phi_bound) : n(nn) {
    if (n < 1) throw config_error("conductor must be positive");
    phi = cyclotomic_polynomial(n);
    deg = (uint32_t)phi.size() - 1;
    if (deg > phi_bound) throw config_error("cyclotomic degree exceeds the bound");
    uint32_t rows = std::max(n, 2 * deg > 0 ? 2 * deg - 1 : 1);
    pow_red.assign(rows, {});
    std::vector<mpq_class> cur(deg, mpq_class(0));
    for (uint32_t m = 0; m < rows; m++) {
        if (m < deg) {
            cur.assign(deg, mpq_class(0));
            cur[m] = 1;
        } else {
            // multiply previous row by x and reduce by the monic Phi_n
            std::vector<mpq_class> nxt(deg + 1, mpq_class(0));
            for (uint32_t i = 0; i < deg; i++) nxt[i + 1] = pow_red[m - 1][i];
            mpq_class lead = nxt[deg];
            cur.assign(deg, mpq_class(0));
            for (uint32_t i = 0; i < deg; i++) cur[i] = nxt[i] - lead * mpq_class(phi[i]);
        }
        pow_red[m] = cur;
    }
}

bool CycloNumber::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < c.size(); i++)
        if (c[i] != 0) return false;
    return true;
}

bool CycloNumber::integer_coeffs() const {
    for (const auto& x : c)
        if (x.get_den() != 1) return false;
    return true;
}

mpq_class CycloNumber::rational_value() const {
    if (!is_rational()) throw config_error("value is not rational");
    return c.empty() ? mpq_class(0) : c[0];
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    CycloNumber r(*this);
    r += o;
    return r;
}
CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    CycloNumber r(*this);
    r -= o;
    return r;
}
CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    for (size_t i = 0; i < c.size(); i++) c[i] += o.c[i];
    return *this;
}
CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
    for (size_t i = 0; i < c.size(); i++) c[i] -= o.c[i];
    return *this;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    uint32_t d = ctx->deg;
    std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
    for (uint32_t i = 0; i < d; i++)
        if (c[i] != 0)
            for (uint32_t j = 0; j < d; j++)
                if (o.c[j] != 0) prod[i + j] += c[i] * o.c[j];
    CycloNumber out(*ctx);
    for (uint32_t m = 0; m < prod.size(); m++) {
        if (prod[m] == 0) continue;
        if (m < d) {
            out.c[m] += prod[m];
        } else {
            const auto& row = ctx->pow_red[m];
            for (uint32_t i = 0; i < d; i++)
                if (row[i] != 0) out.c[i] += prod[m] * row[i];
        }
    }
    return out;
}

bool CycloNumber::operator==(const CycloNumber& o) const { return c == o.c; }

CycloNumber CycloNumber::scaled(const mpq_class& r) const {
    CycloNumber out(*ctx);
    for (size_t i = 0; i < c.size(); i++) out.c[i] = c[i] * r;
    return out;
}

CycloNumber CycloNumber::divided(const mpq_class& r) const {
    if (r == 0) throw config_error("division by zero rational");
    return scaled(mpq_class(1) / r);
}

CycloNumber CycloNumber::galois(uint32_t s) const {
    CycloNumber out(*ctx);
    for (uint32_t i = 0; i < ctx->deg; i++) {
        if (c[i] == 0) continue;
        const auto& row = ctx->monomial((uint64_t)i * s % ctx->n);
        for (uint32_t j = 0; j < ctx->deg; j++)
            if (row[j] != 0) out.c[j] += c[i] * row[j];
    }
    return out;
}

CycloNumber CycloNumber::conjugate() const { return galois(ctx->n - 1); }

size_t CycloNumber::coord_bits() const {
    size_t best = 0;
    for (const auto& x : c) {
        best = std::max(best, mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
        best = std::max(best, mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    }
    return best;
}

uint32_t reduce_mod_p(const CycloNumber& v, const FieldContext& ctx) {
    if (ctx.e != 1) throw config_error("reduction requires a prime field");
    if (v.ctx->n != ctx.p - 1) throw config_error("conductor must be p-1");
    mpz_class p(ctx.p);
    mpz_class acc(0), gp(ctx.generator), gpow(1);
    for (uint32_t i = 0; i < v.ctx->deg; i++) {
        const mpq_class& x = v.c[i];
        if (x != 0) {
            mpz_class den = x.get_den() % p;
            if (den == 0) throw config_error("coefficient denominator divisible by p");
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw config_error("denominator not invertible mod p");
            acc = (acc + (x.get_num() % p) * dinv % p * gpow) % p;
        }
        gpow = gpow * gp % p;
    }
    acc %= p;
    if (acc < 0) acc += p;
    return (uint32_t)acc.get_ui();
}

}  // namespace dworkhg
