#pragma once
// p-adic Gamma function, the p-adic hypergeometric sum nGn built from
// Teichmuller twists and Gamma_p ratios, truncated classical hypergeometric
// series modulo p, and exact classical partial sums for periods.
#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dworkhg/field.hpp"
#include "dworkhg/report.hpp"

namespace dworkhg {

// Gamma_p at a rational argument with denominator coprime to p, mod p^k:
// evaluated at the congruent integer n in [0, p^k) via the defining product
// (-1)^n prod_{0<j<n, p∤j} j. Memoized. The working modulus p^k must fit
// uint64 and the product length is budget-gated.
uint64_t gamma_p(const mpq_class& a, uint32_t p, unsigned k);

// <x>: fractional part in [0, 1)
mpq_class frac_part(const mpq_class& x);

// Defining-sum evaluation of nGn[upper; lower | t] mod p^k.
// integral=false flags a sum not divisible by the expected power of p
// (the value is then not a p-adic integer at this precision).
struct GResult {
    bool integral = false;
    uint64_t value = 0;  // in [0, p^k) when integral
};
GResult mccarthy_G(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                   uint64_t t, uint32_t p, unsigned k);

// sum_{j=0}^{m-1} prod(a_i)_j / (j! prod(b_i)_j) x^j mod p; requires m <= p
// so every factorial stays invertible.
uint32_t truncated_hgf_mod_p(const std::vector<mpq_class>& upper,
                             const std::vector<mpq_class>& lower, uint64_t x, unsigned m,
                             uint32_t p);

// Exact partial sum of the classical series, N terms.
mpq_class classical_hgf_partial(const std::vector<mpq_class>& upper,
                                const std::vector<mpq_class>& lower, const mpq_class& x,
                                unsigned N);

// Gamma_p(m/d + j) Gamma_p(1 - m/d + j) / Gamma_p(1+j)^2 versus
// (-1)^{mt+1} (m/d)_j ((d-m)/d)_j / j!^2, compared mod p.
VerificationReport pochhammer_identity_check(uint32_t m, uint32_t d, uint32_t p, uint32_t j);

}  // namespace dworkhg
