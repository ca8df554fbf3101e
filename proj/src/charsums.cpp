#include "dworkhg/charsums.hpp"

#include <algorithm>
#include <random>

namespace dworkhg {

// ---------------------------------------------------------------------------
// Approximate backend

CharTable::CharTable(const FieldContext& f, unsigned bits)
    : F(f),
      precision_bits((set_float_precision_bits(bits), bits)),
      zq1(f.q - 1),
      zp(f.p),
      gauss_cache_(f.q - 1) {}

CApprox CharTable::chi(uint32_t k, elem x) const {
    if (x == 0) return CApprox();  // chi(0) = 0 for every character
    uint32_t q1 = F.q - 1;
    return zq1[(uint32_t)(((uint64_t)k * F.dlog[x]) % q1)];
}

const CApprox& CharTable::gauss(uint32_t k) const {
    uint32_t q1 = F.q - 1;
    k %= q1;
    if (!gauss_cache_[k]) {
        set_float_precision_bits(precision_bits);
        std::vector<CApprox> terms(q1);
        for (uint32_t j = 0; j < q1; ++j) {
            elem x = F.exp_tab[j];
            terms[j] = zq1[(uint32_t)(((uint64_t)k * j) % q1)] * zp[F.trace_tab[x]];
        }
        gauss_cache_[k] = sum_pairwise(terms);
    }
    return *gauss_cache_[k];
}

CApprox CharTable::jacobi2(uint32_t a, uint32_t b) const {
    uint32_t q1 = F.q - 1;
    a %= q1;
    b %= q1;
    if (a == 0 && b == 0) return CApprox::exact_int((int64_t)F.q - 2);
    if (a == 0 || b == 0) return CApprox::exact_int(-1);
    if ((a + b) % q1 == 0) return CApprox::exact_int(-char_sign_at_minus_one(a));
    return gauss(a) * gauss(b) / gauss((a + b) % q1);
}

CApprox CharTable::binom(uint32_t a, uint32_t b) const {
    uint32_t q1 = F.q - 1;
    a %= q1;
    b %= q1;
    auto key = std::make_pair(a, b);
    auto it = binom_cache_.find(key);
    if (it != binom_cache_.end()) return it->second;
    CApprox v = jacobi2(a, (q1 - b) % q1).scaled(char_sign_at_minus_one(b)) /
                CApprox::exact_int((int64_t)F.q);
    binom_cache_.emplace(key, v);
    return v;
}

// ---------------------------------------------------------------------------
// Exact backend

GreeneContext::GreeneContext(const FieldContext& f, const CycloContext& cc) : F(f), cyclo(cc) {
    if (cc.n != f.q - 1)
        throw config_error("cyclotomic conductor must equal q-1 for Jacobi-sum arithmetic");
}

CycloNumber GreeneContext::char_value(uint32_t k, elem x) const {
    if (x == 0) return CycloNumber(cyclo);
    uint32_t q1 = F.q - 1;
    return CycloNumber::root_power(cyclo, (uint32_t)(((uint64_t)k * F.dlog[x]) % q1));
}

CycloNumber GreeneContext::counts_to_number(const std::vector<int64_t>& counts) const {
    CycloNumber acc(cyclo);
    for (uint32_t m = 0; m < counts.size(); ++m)
        if (counts[m]) acc += CycloNumber::root_power(cyclo, m, mpq_class((long)counts[m]));
    return acc;
}

const CycloNumber& GreeneContext::jacobi2(uint32_t a, uint32_t b) const {
    uint32_t q1 = F.q - 1;
    a %= q1;
    b %= q1;
    auto key = std::make_pair(a, b);
    auto it = jcache_.find(key);
    if (it != jcache_.end()) return it->second;
    std::vector<int64_t> counts(q1, 0);
    for (elem x = 2; x < F.q; ++x) {  // x != 0 and 1-x != 0
        uint64_t e1 = (uint64_t)a * F.dlog[x];
        uint64_t e2 = (uint64_t)b * F.dlog[F.add(1, F.neg(x))];
        counts[(uint32_t)((e1 + e2) % q1)]++;
    }
    return jcache_.emplace(key, counts_to_number(counts)).first->second;
}

CycloNumber GreeneContext::jacobi_simplex(const std::vector<uint32_t>& ks) const {
    uint32_t q1 = F.q - 1;
    size_t n = ks.size();
    if (n < 2) throw config_error("jacobi sum needs at least 2 characters");
    if (n > 3) throw config_error("simplex path limited to 3 characters");
    std::vector<int64_t> counts(q1, 0);
    if (n == 2) {
        for (elem x = 0; x < F.q; ++x) {
            elem y = F.add(1, F.neg(x));
            if (x == 0 || y == 0) continue;
            counts[(uint32_t)(((uint64_t)ks[0] * F.dlog[x] + (uint64_t)ks[1] * F.dlog[y]) % q1)]++;
        }
    } else {
        for (elem x1 = 1; x1 < F.q; ++x1) {
            for (elem x2 = 1; x2 < F.q; ++x2) {
                elem x3 = F.add(1, F.neg(F.add(x1, x2)));
                if (x3 == 0) continue;
                uint64_t e = (uint64_t)ks[0] * F.dlog[x1] + (uint64_t)ks[1] * F.dlog[x2] +
                             (uint64_t)ks[2] * F.dlog[x3];
                counts[(uint32_t)(e % q1)]++;
            }
        }
    }
    return counts_to_number(counts);
}

CycloNumber GreeneContext::jacobi_convolution(const std::vector<uint32_t>& ks) const {
    uint32_t q = F.q, q1 = q - 1;
    if (ks.size() < 2) throw config_error("jacobi sum needs at least 2 characters");
    // dp[s][m]: number of nonzero tuples with running field-sum s and
    // character-exponent m. Fold one coordinate at a time.
    std::vector<int64_t> dp((size_t)q * q1, 0), nxt((size_t)q * q1);
    dp[0 * q1 + 0] = 1;
    for (uint32_t k : ks) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (elem x = 1; x < q; ++x) {
            uint32_t dm = (uint32_t)(((uint64_t)k * F.dlog[x]) % q1);
            for (elem s = 0; s < q; ++s) {
                const int64_t* row = &dp[(size_t)s * q1];
                elem s2 = F.add(s, x);
                int64_t* out = &nxt[(size_t)s2 * q1];
                for (uint32_t m = 0; m < q1; ++m)
                    if (row[m]) out[(m + dm) % q1] += row[m];
            }
        }
        dp.swap(nxt);
    }
    std::vector<int64_t> counts(dp.begin() + 1 * q1, dp.begin() + 2 * q1);  // field-sum = 1
    return counts_to_number(counts);
}

CycloNumber GreeneContext::jacobi(const std::vector<uint32_t>& ks) const {
    if (ks.size() < 2) throw config_error("jacobi sum needs at least 2 characters");
    return ks.size() <= 3 ? jacobi_simplex(ks) : jacobi_convolution(ks);
}

const CycloNumber& GreeneContext::binom(uint32_t a, uint32_t b) const {
    uint32_t q1 = F.q - 1;
    a %= q1;
    b %= q1;
    auto key = std::make_pair(a, b);
    auto it = bcache_.find(key);
    if (it != bcache_.end()) return it->second;
    mpq_class scale(char_sign_at_minus_one(b), (long)F.q);
    scale.canonicalize();
    CycloNumber v = jacobi2(a, (q1 - b) % q1).scaled(scale);
    return bcache_.emplace(key, std::move(v)).first->second;
}

CycloNumber GreeneContext::hgf(const std::vector<uint32_t>& upper,
                               const std::vector<uint32_t>& lower, elem x) const {
    if (upper.size() != lower.size() + 1)
        throw config_error("hypergeometric parameter counts must satisfy |upper| = |lower| + 1");
    uint32_t q1 = F.q - 1;
    CycloNumber tot(cyclo);
    if (x == 0) return tot;  // every chi_k(0) = 0
    for (uint32_t k = 0; k < q1; ++k) {
        CycloNumber term = binom((upper[0] + k) % q1, k);
        for (size_t i = 0; i + 1 < upper.size(); ++i)
            term = term * binom((upper[i + 1] + k) % q1, (lower[i] + k) % q1);
        term = term * CycloNumber::root_power(
                          cyclo, (uint32_t)(((uint64_t)k * F.dlog[x]) % q1));
        tot += term;
    }
    mpq_class scale((long)F.q, (long)q1);
    scale.canonicalize();
    return tot.scaled(scale);
}

CycloNumber GreeneContext::hgf_2f1_alt(uint32_t A, uint32_t B, uint32_t C, elem x) const {
    uint32_t q1 = F.q - 1;
    if (x == 0) return CycloNumber(cyclo);
    std::vector<int64_t> counts(q1, 0);
    uint32_t cb = (C + q1 - B % q1) % q1;   // C - B
    uint32_t abar = (q1 - A % q1) % q1;     // -A
    for (elem y = 1; y < F.q; ++y) {
        elem u = F.add(1, F.neg(y));
        if (u == 0) continue;
        elem w = F.add(1, F.neg(F.mul(x, y)));
        if (w == 0) continue;
        uint64_t e = (uint64_t)B * F.dlog[y] + (uint64_t)cb * F.dlog[u] + (uint64_t)abar * F.dlog[w];
        counts[(uint32_t)(e % q1)]++;
    }
    mpq_class scale(char_sign_at_minus_one(B + C), (long)F.q);
    scale.canonicalize();
    return counts_to_number(counts).scaled(scale);
}

CApprox embed_complex(const CycloNumber& v, const RootTable& roots) {
    if (!v.ctx || v.ctx->n != roots.n)
        throw config_error("root table order does not match the value's conductor");
    std::vector<CApprox> terms;
    terms.reserve(v.c.size());
    for (uint32_t i = 0; i < v.c.size(); ++i) {
        if (v.c[i] == 0) continue;
        CApprox coef = CApprox::exact_real(mpq_to_bigfloat(v.c[i]));
        coef.err = CApprox::ulp_of(coef.re);
        terms.push_back(coef * roots[i]);
    }
    return sum_pairwise(terms);
}

CycloNumber gauss_sum_exact(const FieldContext& F, uint32_t k, const CycloContext& big) {
    uint32_t q1 = F.q - 1;
    uint64_t n = (uint64_t)F.p * q1;
    if (big.n != n)
        throw config_error("exact Gauss sum needs conductor p(q-1)");
    k %= q1;
    std::vector<int64_t> counts(n, 0);
    for (uint32_t j = 0; j < q1; ++j) {
        elem x = F.exp_tab[j];
        uint64_t e = ((uint64_t)F.p * (((uint64_t)k * j) % q1) + (uint64_t)q1 * F.trace_tab[x]) % n;
        counts[e]++;
    }
    CycloNumber acc(big);
    for (uint64_t m = 0; m < n; ++m)
        if (counts[m]) acc += CycloNumber::root_power(big, (uint32_t)m, mpq_class((long)counts[m]));
    return acc;
}

// ---------------------------------------------------------------------------
// Identity suite

namespace {

std::string capprox_str(const CApprox& v) {
    return bigfloat_to_string(v.re, 25) + (v.im < 0 ? "" : "+") + bigfloat_to_string(v.im, 25) +
           "i";
}

// pass iff |lhs-rhs| within the combined propagated error bounds (plus the
// absolute floor), recording the discrepancy string
bool approx_equal(const CApprox& lhs, const CApprox& rhs, std::string& disc) {
    CApprox d = lhs - rhs;
    BigFloat mag = d.mag_upper();
    disc = bigfloat_to_string(mag, 8);
    return mag <= d.err + BigFloat("1e-30");
}

void push_row(std::vector<VerificationReport>& out, const std::string& id,
              std::vector<std::pair<std::string, std::string>> params, const CApprox& lhs,
              const CApprox& rhs) {
    std::string disc;
    bool ok = approx_equal(lhs, rhs, disc);
    out.push_back(make_report(id, std::move(params), capprox_str(lhs), capprox_str(rhs), ok, disc));
}

}  // namespace

std::vector<VerificationReport> identity_suite(const CharTable& C) {
    const FieldContext& F = C.F;
    uint32_t q = F.q, q1 = q - 1;
    std::vector<VerificationReport> out;
    std::string qs = std::to_string(q);

    // |g(chi)|^2 = q for every nontrivial chi
    for (uint32_t k = 1; k < q1; ++k) {
        CApprox g = C.gauss(k);
        push_row(out, "gauss-magnitude", {{"q", qs}, {"k", std::to_string(k)}}, g * g.conj(),
                 CApprox::exact_int((int64_t)q));
    }
    // g(chi) g(conj chi) = chi(-1) q for nontrivial chi
    for (uint32_t k = 1; k < q1; ++k) {
        CApprox lhs = C.gauss(k) * C.gauss(q1 - k);
        CApprox rhs = CApprox::exact_int((int64_t)q * char_sign_at_minus_one(k));
        push_row(out, "gauss-reflection", {{"q", qs}, {"k", std::to_string(k)}}, lhs, rhs);
    }

    // Hasse-Davenport product relation, exact-order-m character against all shifts
    for (uint32_t m : {2u, 3u, 4u}) {
        if (q1 % m != 0) {
            VerificationReport r;
            r.theorem = "hasse-davenport";
            r.params = {{"q", qs}, {"m", std::to_string(m)}};
            r.lhs = r.rhs = "";
            r.status = "vacuous";
            r.discrepancy = "order does not divide q-1";
            out.push_back(r);
            continue;
        }
        uint32_t t = q1 / m;
        for (uint32_t s = 0; s < q1; ++s) {
            CApprox lhs = CApprox::exact_int(1);
            for (uint32_t i = 0; i < m; ++i) lhs = lhs * C.gauss((i * t + s) % q1);
            CApprox rhs = C.gauss(((uint64_t)m * s) % q1).scaled(-1) *
                          C.chi(mod_q1(-(int64_t)m * s, q1), F.from_int(m));
            for (uint32_t i = 0; i < m; ++i) rhs = rhs * C.gauss((i * t) % q1);
            push_row(out, "hasse-davenport",
                     {{"q", qs}, {"m", std::to_string(m)}, {"s", std::to_string(s)}}, lhs, rhs);
        }
    }

    // Helversen-Pasotto four-character identity, both delta branches
    {
        std::vector<std::array<uint32_t, 4>> tuples = {
            {1, 2, 3, 4}, {0, 1, 2, 3}, {2, 2, 2, 2}, {1, 1, 1, 1}, {3, 5, 7, 9}};
        std::mt19937 rng(7);
        for (int i = 0; i < 8; ++i) {
            std::array<uint32_t, 4> t{};
            for (auto& v : t) v = (uint32_t)(rng() % q1);
            tuples.push_back(t);
        }
        for (auto [a, b, c] : std::initializer_list<std::array<uint32_t, 3>>{
                 {1, 2, 3}, {2, 3, 4}, {0, 0, 0}, {5, 6, 7}})
            tuples.push_back({a, b, c, mod_q1(-(int64_t)(a + b + c), q1)});
        for (auto [a, b, c, d] : tuples) {
            a %= q1; b %= q1; c %= q1; d %= q1;
            std::vector<CApprox> terms(q1);
            for (uint32_t x = 0; x < q1; ++x)
                terms[x] = C.gauss((a + x) % q1) * C.gauss(mod_q1((int64_t)b - x, q1)) *
                           C.gauss((c + x) % q1) * C.gauss(mod_q1((int64_t)d - x, q1));
            CApprox lhs = sum_pairwise(terms) / CApprox::exact_int((int64_t)q1);
            CApprox rhs = C.gauss((a + b) % q1) * C.gauss((a + d) % q1) * C.gauss((b + c) % q1) *
                          C.gauss((c + d) % q1) / C.gauss((a + b + c + d) % q1);
            if ((a + b + c + d) % q1 == 0)
                rhs = rhs + CApprox::exact_int((int64_t)q * q1 * char_sign_at_minus_one(a + c));
            push_row(out, "helversen-pasotto",
                     {{"q", qs},
                      {"a", std::to_string(a)},
                      {"b", std::to_string(b)},
                      {"c", std::to_string(c)},
                      {"d", std::to_string(d)}},
                     lhs, rhs);
        }
    }

    // Paired Gauss-sum lemma behind the K3 cosets: for a+b = 2t,
    // g(T^{2t}) sum_x g(T^{x+a}) g(T^{-x+b}) T^x(-1) T^{4x}(lambda)
    //   = q(q-1) T^b(-1) T^{2t}(1-lambda^4), both branches of 1-lambda^4.
    if (q1 % 4 == 0) {
        uint32_t t = q1 / 4;
        elem neg1 = F.neg(1);
        for (auto [a, b] : std::initializer_list<std::array<uint32_t, 2>>{
                 {0, 2 * t}, {t, t}, {2 * t, 0}, {3 * t, 3 * t}}) {
            for (elem lam = 1; lam < q; ++lam) {
                std::vector<CApprox> terms(q1);
                for (uint32_t x = 0; x < q1; ++x)
                    terms[x] = C.gauss((x + a) % q1) * C.gauss(mod_q1((int64_t)b - x, q1)) *
                               C.chi(x, neg1) * C.chi((4 * x) % q1, lam);
                CApprox lhs = C.gauss(2 * t) * sum_pairwise(terms);
                elem l4 = F.pow(lam, 4);
                elem one_m_l4 = F.add(1, F.neg(l4));
                CApprox rhs = CApprox::exact_int((int64_t)q * q1)
                                  .scaled(char_sign_at_minus_one(b)) *
                              C.chi(2 * t, one_m_l4);
                push_row(out, "gauss-pair-lemma",
                         {{"q", qs},
                          {"a", std::to_string(a)},
                          {"b", std::to_string(b)},
                          {"lambda", std::to_string(lam)},
                          {"branch", one_m_l4 ? "general" : "singular"}},
                         lhs, rhs);
            }
        }
    }
    return out;
}

}  // namespace dworkhg
