#pragma once
// Exact arithmetic in Q(zeta_n): dense rational coordinates in the power
// basis modulo the n-th cyclotomic polynomial, plus the reduction map to F_p
// determined by zeta_{p-1} -> g (the Teichmuller-compatible prime above p).
#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "dworkhg/field.hpp"

namespace dworkhg {

class CycloContext {
public:
    uint32_t n = 1;
    uint32_t deg = 1;                       // phi(n)
    std::vector<mpz_class> phi;             // coefficients of Phi_n, low to high, monic
    std::vector<std::vector<mpq_class>> pow_red;  // zeta^m reduced, m < max(n, 2deg-1)

    explicit CycloContext(uint32_t n, uint32_t phi_bound = 4096);

    const std::vector<mpq_class>& monomial(uint32_t m) const {
        return pow_red[m % n];
    }
};

// Cyclotomic polynomial Phi_n over Z (low-to-high), by iterated exact division
// of x^n - 1 by Phi_d for proper divisors d | n.
std::vector<mpz_class> cyclotomic_polynomial(uint32_t n);

class CycloNumber {
public:
    const CycloContext* ctx = nullptr;
    std::vector<mpq_class> c;  // size ctx->deg

    CycloNumber() = default;
    explicit CycloNumber(const CycloContext& cc) : ctx(&cc), c(cc.deg, mpq_class(0)) {}
    static CycloNumber rational(const CycloContext& cc, const mpq_class& r) {
        CycloNumber v(cc);
        v.c[0] = r;
        return v;
    }
    static CycloNumber root_power(const CycloContext& cc, uint32_t m, const mpq_class& scale = 1) {
        CycloNumber v(cc);
        const auto& row = cc.monomial(m);
        for (uint32_t i = 0; i < cc.deg; i++) v.c[i] = scale * row[i];
        return v;
    }

    bool is_zero() const;
    bool is_rational() const;      // only the constant coordinate nonzero
    bool integer_coeffs() const;   // all coordinates integers
    mpq_class rational_value() const;  // requires is_rational()

    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    bool operator==(const CycloNumber& o) const;
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    CycloNumber scaled(const mpq_class& r) const;   // r * this
    CycloNumber divided(const mpq_class& r) const;  // this / r, r != 0
    CycloNumber conjugate() const;                  // zeta -> zeta^{-1}
    CycloNumber galois(uint32_t s) const;           // zeta -> zeta^s, gcd(s, n) = 1

    // max absolute value of any coordinate numerator/denominator, for gating
    size_t coord_bits() const;
};

// Ring homomorphism Q(zeta_{p-1}) -> F_p with zeta_{p-1} -> ctx.generator.
// Requires ctx.e == 1 and v.ctx->n == p - 1; throws config_error if a
// coefficient denominator is divisible by p (value not p-integral).
uint32_t reduce_mod_p(const CycloNumber& v, const FieldContext& ctx);

}  // namespace dworkhg
