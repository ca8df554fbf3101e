#pragma once
// Point counts on the degree-d Dwork hypersurface
//   x_1^d + ... + x_d^d = d lambda x_1 ... x_d   in P^{d-1} over F_q,
// by brute force and by the character-sum / p-adic closed formulas, plus the
// theorem verification suites over desk-scale parameter grids.
#include <cstdint>
#include <string>
#include <vector>

#include "dworkhg/approx.hpp"
#include "dworkhg/charsums.hpp"
#include "dworkhg/cyclotomic.hpp"
#include "dworkhg/field.hpp"
#include "dworkhg/padic.hpp"
#include "dworkhg/report.hpp"

namespace dworkhg {

struct DworkParams {
    uint32_t d = 4;
    elem lambda = 0;
    const FieldContext* ctx = nullptr;
};

// --------------------------------------------------------------------------
// Brute-force projective counts, (N_affine - 1)/(q - 1).
// Serial reference: plain odometer over the last d-1 coordinates with lazy
// per-v lookup tables for the first coordinate.
int64_t count_naive_serial(const FieldContext& F, uint32_t d, elem lambda,
                           uint64_t budget = 100000000ull);
// Parallel kernel: groups tuples by v = d*lambda*prod(x_i); zero-containing
// tuples handled by convolution of d-th-power count vectors. Same contract.
int64_t count_naive(const FieldContext& F, uint32_t d, elem lambda,
                    uint64_t budget = 100000000ull);

// --------------------------------------------------------------------------
// Coset decomposition of the character-sum count.
struct CosetLabel {
    std::vector<uint32_t> w;  // canonical representative, sorted, w[i] in [0,d)
    uint64_t multiplicity;    // orbit size / d (distinct summand count per shift class)
    uint64_t tuple_count() const { return multiplicity * w.size(); }
};
// All labels for exponent tuples w in [0,d)^d with sum = 0 mod d, up to
// permutation and diagonal shifts; multiplicities sum to d^{d-2} and
// tuple_count sums to d^{d-1}.
std::vector<CosetLabel> coset_labels(uint32_t d);

// S_[w] = (multiplicity/(q-1)) sum_j prod_i g(T^{w_i t + j}) / g(T^{dj}) T^{dj}(d lambda)
CApprox coset_term(const CharTable& C, uint32_t d, const CosetLabel& label, elem lambda);

// lambda = 0 count: (q^{d-1}-1)/(q-1) + (1/q) sum over nonzero exponent
// tuples. For d = 4 the closed form q^2 + 7q + 1 + (1/q) sum g^4 + 12q T^t(-1)
// is evaluated too and both are required to agree within the error budget.
CApprox n0_term(const CharTable& C, uint32_t d);

// Full coset-sum count; rounds through the integer gate, throws
// precision_error when the gate fails at this table's precision.
int64_t count_koblitz(const CharTable& C, uint32_t d, elem lambda, double gate = 1e-6,
                      double* residual_out = nullptr);
// Convenience wrapper: builds tables at auto precision, retries twice at
// doubled precision on gate failure before giving up.
int64_t count_koblitz(const FieldContext& F, uint32_t d, elem lambda, unsigned bits = 0,
                      double gate = 1e-6);

// --------------------------------------------------------------------------
// Exact K3 count (d = 4, q = 1 mod 4, lambda != 0) via the hypergeometric
// closed formula; both the general and the lambda^4 = 1 specialization are
// evaluated and cross-asserted when applicable. Exact integer, no rounding.
int64_t count_k3_greene(elem lambda, const FieldContext& F);
// Same, reusing a caller-owned exact context (cheaper inside lambda sweeps).
int64_t count_k3_greene(elem lambda, const GreeneContext& E);

// p-adic K3 count mod p^k (e = 1, lambda != 0 mod p); branch on p mod 4.
uint64_t count_k3_padic(uint64_t lambda, uint32_t p, unsigned k);

// General-d count via the degree-d formula: exact hypergeometric main term
// plus approximate coset remainder, compared against count_naive.
VerificationReport count_general_greene(uint32_t d, elem lambda, const FieldContext& F,
                                        uint64_t budget = 100000000ull);

// trace of Frobenius for the K3 family: #X - p^2 - 1 (exact path).
int64_t trace_frobenius_k3(uint32_t lambda, uint32_t p);

// N-term partial sum of the period series  F(1/d, ..., (d-1)/d; 1, ..., 1 | z).
mpq_class period_value(uint32_t d, const mpq_class& z, unsigned N);

// --------------------------------------------------------------------------
// Verification suites. Every row carries exact lhs/rhs strings.
struct SuiteOptions {
    std::vector<std::string> theorems;  // empty = all applicable
    bool strict_conjectures = false;
    uint64_t budget = 100000000ull;
    bool want(const std::string& id) const;
};

// Congruence and count-formula checks for one prime p (e = 1 paths) —
// truncated-series reductions, trace/period congruences, the p-adic count
// theorems, the vanishing lemma, the Greene<->p-adic bridge, and the two
// general-d conjectures.
std::vector<VerificationReport> congruence_suite(uint32_t p, const SuiteOptions& opt);

// Coset closed forms at one q = 1 mod 4 (both lambda branches, all lambda).
std::vector<VerificationReport> coset_closed_form_suite(const FieldContext& F, unsigned bits = 0);

// Pochhammer/Gamma_p product identity swept over its provable range
// j <= min(m, d-m) * t for each 1 <= m < d.
std::vector<VerificationReport> pochhammer_suite(uint32_t p, uint32_t d);

// Property suites: generator/modulus invariance of counts, Gamma_p
// reflection + continuity, nGn precision soundness, dual 2F1 definitions.
std::vector<VerificationReport> property_suite_field_invariance();
std::vector<VerificationReport> property_suite_padic();
std::vector<VerificationReport> property_suite_dual_definition();

}  // namespace dworkhg
