#include "dworkhg/dwork.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dworkhg {

namespace {

// q^(d-1)步 budget check without overflow
void check_budget(uint32_t q, uint32_t d, uint64_t budget) {
    uint64_t steps = 1;
    for (uint32_t i = 0; i + 1 < d; ++i) {
        if (steps > budget / q) throw budget_error("enumeration budget exceeded");
        steps *= q;
    }
    if (steps > budget) throw budget_error("enumeration budget exceeded");
}

std::vector<elem> dth_powers(const FieldContext& F, uint32_t d) {
    std::vector<elem> powd(F.q);
    powd[0] = 0;
    for (elem x = 1; x < F.q; ++x) powd[x] = F.pow(x, d);
    return powd;
}

int64_t finish_projective(int64_t n_affine, uint32_t q) {
    if ((n_affine - 1) % (int64_t)(q - 1) != 0)
        throw std::logic_error("affine count is not 1 mod q-1");
    return (n_affine - 1) / (int64_t)(q - 1);
}

// additive convolution over (F_q, +): out[i (+) j] += a[i] * b[j]
std::vector<int64_t> field_convolve(const FieldContext& F, const std::vector<int64_t>& a,
                                    const std::vector<int64_t>& b) {
    std::vector<int64_t> out(F.q, 0);
    for (elem i = 0; i < F.q; ++i) {
        if (!a[i]) continue;
        for (elem j = 0; j < F.q; ++j)
            if (b[j]) out[F.add(i, j)] += a[i] * b[j];
    }
    return out;
}

std::vector<int64_t> field_convolve_power(const FieldContext& F, const std::vector<int64_t>& a,
                                          uint32_t m) {
    std::vector<int64_t> out(F.q, 0);
    out[0] = 1;
    for (uint32_t i = 0; i < m; ++i) out = field_convolve(F, out, a);
    return out;
}

}  // namespace

int64_t count_naive_serial(const FieldContext& F, uint32_t d, elem lambda, uint64_t budget) {
    if (d < 3) throw config_error("degree must be at least 3");
    check_budget(F.q, d, budget);
    uint32_t q = F.q;
    std::vector<elem> powd = dth_powers(F, d);
    elem dl = F.mul(F.from_int(d), lambda);

    // lazy tables: cnt[v][B] = #{u : u^d - v*u = B}
    std::vector<std::vector<uint32_t>> cnt(q);
    auto table = [&](elem v) -> const std::vector<uint32_t>& {
        auto& t = cnt[v];
        if (t.empty()) {
            t.assign(q, 0);
            for (elem u = 0; u < q; ++u) t[F.add(powd[u], F.neg(F.mul(v, u)))]++;
        }
        return t;
    };

    std::vector<elem> xs(d - 1, 0);
    int64_t n_affine = 0;
    while (true) {
        elem b = 0, prod = 1;
        for (elem x : xs) {
            b = F.add(b, powd[x]);
            prod = F.mul(prod, x);
        }
        n_affine += table(F.mul(dl, prod))[F.neg(b)];
        size_t i = 0;
        while (i < xs.size() && ++xs[i] == q) xs[i++] = 0;
        if (i == xs.size()) break;
    }
    return finish_projective(n_affine, q);
}

int64_t count_naive(const FieldContext& F, uint32_t d, elem lambda, uint64_t budget) {
    if (d < 3) throw config_error("degree must be at least 3");
    check_budget(F.q, d, budget);
    uint32_t q = F.q;
    std::vector<elem> powd = dth_powers(F, d);
    elem dl = F.mul(F.from_int(d), lambda);

    // c_all[B] = #{x : x^d = B}; c_nz excludes x = 0
    std::vector<int64_t> c_all(q, 0), c_nz(q, 0);
    for (elem x = 0; x < q; ++x) c_all[powd[x]]++;
    for (elem x = 1; x < q; ++x) c_nz[powd[x]]++;

    int64_t n_affine = 0;
    if (dl == 0) {
        // every tuple contributes through x_1^d = -B: Fermat-type count
        std::vector<int64_t> f_all = field_convolve_power(F, c_all, d - 1);
        for (elem b = 0; b < q; ++b) n_affine += f_all[b] * c_all[F.neg(b)];
        return finish_projective(n_affine, q);
    }

    // tuples (x_2..x_d) containing a zero: the product term vanishes
    {
        std::vector<int64_t> f_all = field_convolve_power(F, c_all, d - 1);
        std::vector<int64_t> f_nz = field_convolve_power(F, c_nz, d - 1);
        for (elem b = 0; b < q; ++b) n_affine += (f_all[b] - f_nz[b]) * c_all[F.neg(b)];
    }

    // all-nonzero tuples, grouped by v = d*lambda*prod(x_i) in F_q^*
    elem inv_dl = F.inv(dl);
    int64_t n_nonzero = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : n_nonzero) schedule(dynamic)
#endif
    for (int64_t vi = 1; vi < (int64_t)q; ++vi) {
        elem v = (elem)vi;
        std::vector<uint32_t> tab(q, 0);  // #{u : u^d - v*u = B}
        for (elem u = 0; u < q; ++u) tab[F.add(powd[u], F.neg(F.mul(v, u)))]++;
        elem target = F.mul(v, inv_dl);  // required product of x_2..x_d

        std::vector<elem> xs(d - 2, 1);  // free nonzero coordinates
        int64_t local = 0;
        while (true) {
            elem b = 0, prod = 1;
            for (elem x : xs) {
                b = F.add(b, powd[x]);
                prod = F.mul(prod, x);
            }
            elem xd = F.mul(target, F.inv(prod));
            b = F.add(b, powd[xd]);
            local += tab[F.neg(b)];
            size_t i = 0;
            while (i < xs.size() && ++xs[i] == q) xs[i++] = 1;
            if (i == xs.size()) break;
        }
        n_nonzero += local;
    }
    return finish_projective(n_affine + n_nonzero, q);
}

// ---------------------------------------------------------------------------

std::vector<CosetLabel> coset_labels(uint32_t d) {
    if (d < 3 || d > 8) throw config_error("coset enumeration supports 3 <= d <= 8");
    std::map<std::vector<uint32_t>, std::set<std::vector<uint32_t>>> orbits;
    std::vector<uint32_t> w(d, 0);
    while (true) {
        uint32_t s = 0;
        for (uint32_t x : w) s += x;
        if (s % d == 0) {
            std::vector<uint32_t> canon;
            for (uint32_t c = 0; c < d; ++c) {
                std::vector<uint32_t> shifted(d);
                for (uint32_t i = 0; i < d; ++i) shifted[i] = (w[i] + c) % d;
                std::sort(shifted.begin(), shifted.end());
                if (canon.empty() || shifted < canon) canon = shifted;
            }
            orbits[canon].insert(w);
        }
        size_t i = 0;
        while (i < d && ++w[i] == d) w[i++] = 0;
        if (i == d) break;
    }
    std::vector<CosetLabel> out;
    uint64_t mult_total = 0, tuple_total = 0;
    for (auto& [canon, members] : orbits) {
        if (members.size() % d != 0) throw std::logic_error("orbit size not divisible by d");
        CosetLabel lab;
        lab.w = canon;
        lab.multiplicity = members.size() / d;
        mult_total += lab.multiplicity;
        tuple_total += lab.tuple_count();
        out.push_back(std::move(lab));
    }
    uint64_t expect_mult = 1, expect_tuples = 1;
    for (uint32_t i = 0; i + 2 < d; ++i) expect_mult *= d;
    for (uint32_t i = 0; i + 1 < d; ++i) expect_tuples *= d;
    if (mult_total != expect_mult || tuple_total != expect_tuples)
        throw std::logic_error("coset multiplicities do not cover the exponent lattice");
    return out;
}

CApprox coset_term(const CharTable& C, uint32_t d, const CosetLabel& label, elem lambda) {
    const FieldContext& F = C.F;
    uint32_t q1 = F.q - 1;
    if (q1 % d != 0) throw config_error("need q = 1 mod d");
    uint32_t t = q1 / d;
    elem dl = F.mul(F.from_int(d), lambda);
    std::vector<CApprox> terms(q1);
    for (uint32_t j = 0; j < q1; ++j) {
        CApprox num = CApprox::exact_int(1);
        for (uint32_t wi : label.w) num = num * C.gauss((wi * t + j) % q1);
        uint32_t dj = (uint32_t)(((uint64_t)d * j) % q1);
        terms[j] = num / C.gauss(dj) * C.chi(dj, dl);
    }
    return sum_pairwise(terms).scaled((int64_t)label.multiplicity) /
           CApprox::exact_int((int64_t)q1);
}

CApprox n0_term(const CharTable& C, uint32_t d) {
    const FieldContext& F = C.F;
    uint32_t q = F.q, q1 = q - 1;
    if (q1 % d != 0) throw config_error("need q = 1 mod d");
    uint32_t t = q1 / d;

    mpz_class base_z = 0;  // (q^{d-1} - 1)/(q - 1) = 1 + q + ... + q^{d-2}
    mpz_class qp = 1;
    for (uint32_t i = 0; i + 1 < d; ++i) {
        base_z += qp;
        qp *= q;
    }
    CApprox base = CApprox::exact_real(mpq_to_bigfloat(mpq_class(base_z)));

    std::vector<CApprox> terms;
    std::vector<uint32_t> w(d, 1);
    while (true) {
        uint32_t s = 0;
        for (uint32_t x : w) s += x;
        if (s % d == 0) {
            CApprox prod = CApprox::exact_int(1);
            for (uint32_t wi : w) prod = prod * C.gauss((wi * t) % q1);
            terms.push_back(prod);
        }
        size_t i = 0;
        while (i < d && ++w[i] == d) w[i++] = 1;
        if (i == d) break;
    }
    CApprox def = base + sum_pairwise(terms) / CApprox::exact_int((int64_t)q);

    if (d == 4) {
        CApprox g4 = CApprox::exact_int(0);
        for (uint32_t i = 1; i <= 3; ++i) {
            CApprox g = C.gauss((i * t) % q1);
            g4 = g4 + g * g * g * g;
        }
        CApprox closed = CApprox::exact_int((int64_t)q * q + 7 * (int64_t)q + 1) +
                         g4 / CApprox::exact_int((int64_t)q) +
                         CApprox::exact_int(12 * (int64_t)q * char_sign_at_minus_one(t));
        CApprox diff = def - closed;
        if (diff.mag_upper() > diff.err + BigFloat("1e-20"))
            throw precision_error("zero-parameter closed form disagrees with definitional sum");
        return closed;
    }
    return def;
}

int64_t count_koblitz(const CharTable& C, uint32_t d, elem lambda, double gate,
                      double* residual_out) {
    if (lambda == 0) throw config_error("coset count formula needs lambda != 0");
    CApprox tot = n0_term(C, d);
    for (const auto& lab : coset_labels(d)) tot = tot + coset_term(C, d, lab, lambda);
    int64_t out;
    if (!round_to_integer(tot, out, gate, residual_out))
        throw precision_error("rounding gate failed in the coset count");
    return out;
}

int64_t count_koblitz(const FieldContext& F, uint32_t d, elem lambda, unsigned bits, double gate) {
    if (bits == 0) bits = auto_precision_bits(F.q, d);
    for (int attempt = 0; attempt < 3; ++attempt) {
        CharTable C(F, bits);
        try {
            return count_koblitz(C, d, lambda, gate);
        } catch (const precision_error&) {
            if (attempt == 2) throw;
            bits *= 2;
        }
    }
    throw precision_error("unreachable");
}

// ---------------------------------------------------------------------------

namespace {

// T^{2t}(x) for 2t = (q-1)/2: +-1 depending on the parity of dlog(x); 0 at 0.
int quadratic_sign(const FieldContext& F, elem x) {
    if (x == 0) return 0;
    return F.dlog[x] % 2 == 0 ? 1 : -1;
}

int64_t cyclo_to_int(const CycloNumber& v) {
    if (!v.is_rational()) throw std::logic_error("hypergeometric total is not rational");
    mpq_class r = v.rational_value();
    if (r.get_den() != 1) throw std::logic_error("hypergeometric total is not an integer");
    mpz_class n = r.get_num();
    if (!n.fits_slong_p()) throw std::logic_error("count does not fit a 64-bit integer");
    return n.get_si();
}

}  // namespace

int64_t count_k3_greene(elem lambda, const GreeneContext& E) {
    const FieldContext& F = E.F;
    uint32_t q = F.q, q1 = q - 1;
    if (q1 % 4 != 0) throw config_error("need q = 1 mod 4");
    if (lambda == 0) throw config_error("closed formula needs lambda != 0");
    uint32_t t = q1 / 4;
    elem l4 = F.pow(lambda, 4);
    elem inv_l4 = F.inv(l4);
    elem one_m_l4 = F.add(1, F.neg(l4));

    const CycloContext& cc = E.cyclo;
    mpq_class base((long)q * q + q + 1);
    CycloNumber total = CycloNumber::rational(cc, base);

    int s1 = char_sign_at_minus_one(t);               // T^t(-1)
    int s2 = quadratic_sign(F, one_m_l4);             // T^{2t}(1 - lambda^4)
    total += CycloNumber::rational(cc, mpq_class(12 * (long)q * s1 * s2));

    CycloNumber f32 = E.hgf({t, 2 * t, 3 * t}, {0, 0}, inv_l4);
    total += f32.scaled(mpq_class((long)q * q));

    CycloNumber b2f1 = E.binom(3 * t, t) * E.hgf({3 * t, t}, {2 * t}, inv_l4);
    total += b2f1.scaled(mpq_class(3 * (long)q * q));

    int64_t n = cyclo_to_int(total);

    if (l4 == 1) {
        // the specialization must agree with the general formula
        CycloNumber alt = CycloNumber::rational(cc, base + mpq_class(3 * (long)q * s1));
        alt += E.hgf({t, 2 * t, 3 * t}, {0, 0}, 1).scaled(mpq_class((long)q * q));
        if (cyclo_to_int(alt) != n)
            throw std::logic_error("singular-branch formula disagrees with the general branch");
    }
    return n;
}

int64_t count_k3_greene(elem lambda, const FieldContext& F) {
    CycloContext cc(F.q - 1);
    GreeneContext E(F, cc);
    return count_k3_greene(lambda, E);
}

uint64_t count_k3_padic(uint64_t lambda, uint32_t p, unsigned k) {
    if (p < 3 || !is_prime_u32(p)) throw config_error("p must be an odd prime");
    if (k == 0) throw config_error("precision must be positive");
    lambda %= p;
    if (lambda == 0) throw config_error("p-adic count formula needs lambda != 0");
    uint64_t M = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (M > (1ull << 62) / p) throw budget_error("p-adic working modulus too large");
        M *= p;
    }

    uint64_t l4 = 1;
    for (int i = 0; i < 4; ++i) l4 = l4 * lambda % p;

    std::vector<mpq_class> up3 = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4)};
    std::vector<mpq_class> lo3 = {0, 0, 0};
    GResult g3 = mccarthy_G(up3, lo3, l4, p, k);
    std::vector<mpq_class> up2 = {mpq_class(3, 4), mpq_class(1, 4)};
    std::vector<mpq_class> lo2 = {0, mpq_class(1, 2)};
    GResult g2 = mccarthy_G(up2, lo2, l4, p, k);
    if (!g3.integral || !g2.integral)
        throw precision_error("p-adic hypergeometric value is not p-integral");

    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) {
        return (uint64_t)((unsigned __int128)a * b % m);
    };
    uint64_t base = ((uint64_t)p % M) * p % M;  // p^2
    base = (base + p + 1) % M;                  // p^2 + p + 1
    uint64_t res;
    if (p % 4 == 3) {
        uint64_t sub = mulmod(3ull * p % M, g2.value, M);
        res = (base + g3.value + (M - sub)) % M;
    } else {
        uint32_t t = (p - 1) / 4;
        // Legendre symbol of 1 - lambda^4
        uint64_t arg = (1 + p - l4 % p) % p;
        int leg = 0;
        if (arg != 0) {
            uint64_t e = (p - 1) / 2, b = arg, r = 1;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            leg = (r == 1) ? 1 : -1;
        }
        int64_t extra = 12ll * p * (t % 2 ? -1 : 1) * leg;
        uint64_t extra_m = (uint64_t)(((extra % (int64_t)M) + (int64_t)M) % (int64_t)M);
        uint64_t add = mulmod(3ull * p % M, g2.value, M);
        res = ((base + extra_m) % M + (g3.value + add) % M) % M;
    }
    return res;
}

VerificationReport count_general_greene(uint32_t d, elem lambda, const FieldContext& F,
                                        uint64_t budget) {
    uint32_t q = F.q, q1 = q - 1;
    if (q1 % d != 0) throw config_error("need q = 1 mod d");
    if (lambda == 0) throw config_error("closed formula needs lambda != 0");
    uint32_t t = q1 / d;

    int64_t naive = count_naive(F, d, lambda, budget);

    CycloContext cc(q1);
    GreeneContext E(F, cc);
    std::vector<uint32_t> upper, lower;
    for (uint32_t i = 1; i < d; ++i) upper.push_back((i * t) % q1);
    lower.assign(d - 2, 0);
    elem inv_ld = F.inv(F.pow(lambda, d));
    CycloNumber f_exact = E.hgf(upper, lower, inv_ld);

    unsigned bits = auto_precision_bits(q, d);
    int64_t rounded = 0;
    double resid = 0;
    bool ok_round = false;
    for (int attempt = 0; attempt < 3 && !ok_round; ++attempt, bits *= 2) {
        CharTable C(F, bits);
        CApprox val = CApprox::exact_real(mpq_to_bigfloat(mpq_class(
            [&] {
                mpz_class b = 0, qp = 1;
                for (uint32_t i = 0; i + 1 < d; ++i) {
                    b += qp;
                    qp *= q;
                }
                return b;
            }())));
        // q^{d-2} * F
        mpz_class qd2 = 1;
        for (uint32_t i = 0; i + 2 < d; ++i) qd2 *= q;
        CApprox femb = embed_complex(f_exact, C.zq1);
        val = val + femb * CApprox::exact_real(mpq_to_bigfloat(mpq_class(qd2)));
        // (1/q) * sum over mixed nonzero exponent tuples
        std::vector<CApprox> terms;
        std::vector<uint32_t> w(d, 1);
        while (true) {
            uint32_t s = 0;
            bool all_equal = true;
            for (uint32_t x : w) {
                s += x;
                if (x != w[0]) all_equal = false;
            }
            if (s % d == 0 && !all_equal) {
                CApprox prod = CApprox::exact_int(1);
                for (uint32_t wi : w) prod = prod * C.gauss((wi * t) % q1);
                terms.push_back(prod);
            }
            size_t i = 0;
            while (i < d && ++w[i] == d) w[i++] = 1;
            if (i == d) break;
        }
        if (!terms.empty()) val = val + sum_pairwise(terms) / CApprox::exact_int((int64_t)q);
        // nonconstant coset contributions
        for (const auto& lab : coset_labels(d)) {
            bool all_equal = true;
            for (uint32_t x : lab.w)
                if (x != lab.w[0]) all_equal = false;
            if (all_equal) continue;
            val = val + coset_term(C, d, lab, lambda);
        }
        ok_round = round_to_integer(val, rounded, 1e-6, &resid);
    }
    if (!ok_round) throw precision_error("rounding gate failed in the general count formula");

    return make_report("general-count-formula",
                       {{"d", std::to_string(d)},
                        {"q", std::to_string(q)},
                        {"lambda", std::to_string(lambda)}},
                       std::to_string(naive), std::to_string(rounded), naive == rounded,
                       naive == rounded ? "0" : std::to_string(naive - rounded));
}

int64_t trace_frobenius_k3(uint32_t lambda, uint32_t p) {
    if (p % 4 != 1) throw config_error("trace path needs p = 1 mod 4");
    FieldContext F = build_field(p, 1);
    elem lam = F.from_int(lambda);
    if (lam == 0) throw config_error("trace needs lambda != 0");
    return count_k3_greene(lam, F) - (int64_t)p * p - 1;
}

mpq_class period_value(uint32_t d, const mpq_class& z, unsigned N) {
    if (d < 3) throw config_error("degree must be at least 3");
    std::vector<mpq_class> upper, lower;
    for (uint32_t i = 1; i < d; ++i) {
        mpq_class a((long)i, (long)d);
        a.canonicalize();
        upper.push_back(a);
    }
    lower.assign(d - 2, mpq_class(1));
    return classical_hgf_partial(upper, lower, z, N);
}

}  // namespace dworkhg
