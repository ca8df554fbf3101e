#pragma once
// Multiplicative characters of F_q^*, Gauss sums (high-precision complex
// backend), exact Jacobi sums and Greene hypergeometric functions (cyclotomic
// backend), and the classical Gauss-sum identity suite.
//
// Characters are indexed k in [0, q-2]: chi_k = T^k where T(g) = zeta_{q-1}
// for the field generator g. Every character, including the trivial one,
// takes the value 0 at x = 0.
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dworkhg/approx.hpp"
#include "dworkhg/cyclotomic.hpp"
#include "dworkhg/field.hpp"
#include "dworkhg/report.hpp"

namespace dworkhg {

inline uint32_t mod_q1(int64_t k, uint32_t q1) {
    int64_t r = k % (int64_t)q1;
    return (uint32_t)(r < 0 ? r + q1 : r);
}

struct HgfSpec {
    std::vector<uint32_t> upper;  // A_0 ... A_n
    std::vector<uint32_t> lower;  // B_1 ... B_n  (|upper| = |lower| + 1)
    elem argument;
};

// ---------------------------------------------------------------------------
// Approximate backend: complex character values and Gauss sums.
// Lazy per-index Gauss-sum cache; not safe for concurrent use.
class CharTable {
public:
    const FieldContext& F;
    unsigned precision_bits;
    RootTable zq1;  // (q-1)-th roots of unity
    RootTable zp;   // p-th roots of unity

    CharTable(const FieldContext& F, unsigned precision_bits);

    // T^k(x); zero (exactly) for x = 0.
    CApprox chi(uint32_t k, elem x) const;
    // g(T^k) = sum_x T^k(x) zeta_p^{tr(x)}; g(eps) = -1.
    const CApprox& gauss(uint32_t k) const;
    // Two-character Jacobi sum via the Gauss-sum quotient with the degenerate
    // cases J(eps,eps) = q-2, J(A,eps) = -1, J(A, conj A) = -A(-1).
    CApprox jacobi2(uint32_t a, uint32_t b) const;
    // Normalized Jacobi sum ("binomial") B(-1)/q * J(A, conj B), memoized.
    CApprox binom(uint32_t a, uint32_t b) const;

private:
    mutable std::vector<std::optional<CApprox>> gauss_cache_;
    mutable std::map<std::pair<uint32_t, uint32_t>, CApprox> binom_cache_;
};

// chi_k(-1) as an exact sign: +1 if k even, -1 if k odd (dlog(-1) = (q-1)/2).
inline int char_sign_at_minus_one(uint32_t k) { return (k % 2 == 0) ? 1 : -1; }

// ---------------------------------------------------------------------------
// Exact backend: values in Q(zeta_{q-1}) represented as CycloNumber.
// Jacobi sums and Greene hypergeometric sums are always exact here.
class GreeneContext {
public:
    const FieldContext& F;
    const CycloContext& cyclo;  // conductor q-1

    GreeneContext(const FieldContext& F, const CycloContext& cyclo);

    // T^k(x) as an exact root of unity; 0 for x = 0.
    CycloNumber char_value(uint32_t k, elem x) const;
    // J(T^a, T^b) by direct summation over x + y = 1 (double-nonzero terms).
    const CycloNumber& jacobi2(uint32_t a, uint32_t b) const;
    // Multivariate J(chi_1,...,chi_n): simplex enumeration for n <= 3,
    // coordinate-convolution dynamic program for n >= 4.
    CycloNumber jacobi(const std::vector<uint32_t>& ks) const;
    CycloNumber jacobi_simplex(const std::vector<uint32_t>& ks) const;
    CycloNumber jacobi_convolution(const std::vector<uint32_t>& ks) const;
    // binom(A,B) = B(-1)/q * J(A, conj B), memoized.
    const CycloNumber& binom(uint32_t a, uint32_t b) const;
    // Greene's (n+1)F(n): (q/(q-1)) sum_k binom(A_0+k, k) prod_i
    // binom(A_i+k, B_i+k) * chi_k(x).
    CycloNumber hgf(const std::vector<uint32_t>& upper, const std::vector<uint32_t>& lower,
                    elem x) const;
    CycloNumber hgf(const HgfSpec& spec) const { return hgf(spec.upper, spec.lower, spec.argument); }
    // Alternate single-sum 2F1: eps(x) BC(-1)/q sum_y B(y) conj(B)C(1-y) conj(A)(1-xy).
    CycloNumber hgf_2f1_alt(uint32_t A, uint32_t B, uint32_t C, elem x) const;

private:
    CycloNumber counts_to_number(const std::vector<int64_t>& counts) const;
    mutable std::map<std::pair<uint32_t, uint32_t>, CycloNumber> jcache_, bcache_;
};

// Complex embedding zeta_n -> exp(2 pi i / n) of an exact value, for bridging
// the two backends. The RootTable order must equal v's conductor.
CApprox embed_complex(const CycloNumber& v, const RootTable& roots);

// Exact Gauss sum in Q(zeta_{p(q-1)}). The needed context (conductor p(q-1))
// is supplied by the caller, which also enforces the degree bound.
CycloNumber gauss_sum_exact(const FieldContext& F, uint32_t k, const CycloContext& big);

// ---------------------------------------------------------------------------
// Identity suite: Hasse-Davenport product relation, Helversen-Pasotto
// four-character identity (both delta branches), the paired Gauss-sum lemma
// used for the K3 cosets (both lambda branches), |g(chi)|^2 = q.
std::vector<VerificationReport> identity_suite(const CharTable& C);

}  // namespace dworkhg
