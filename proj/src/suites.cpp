// Theorem / congruence / conjecture verification suites over desk-scale grids.
#include <algorithm>
#include <optional>
#include <sstream>

#include "dworkhg/dwork.hpp"

namespace dworkhg {

namespace {

mpq_class frac(long a, long b) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

std::string u32s(uint64_t v) { return std::to_string(v); }

// residue of a rational with p-free denominator
uint64_t rational_residue(const mpq_class& x, uint64_t M) {
    mpz_class m((unsigned long)M);
    mpz_class num = x.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = x.get_den() % m, inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw config_error("denominator not invertible modulo p^k");
    mpz_class r = num * inv % m;
    return r.get_ui();
}

std::string capprox_str(const CApprox& v) { return bigfloat_to_string(v.re, 30); }

}  // namespace

bool SuiteOptions::want(const std::string& id) const {
    if (theorems.empty()) return true;
    return std::find(theorems.begin(), theorems.end(), id) != theorems.end();
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> congruence_suite(uint32_t p, const SuiteOptions& opt) {
    if (p < 3 || !is_prime_u32(p)) throw config_error("congruence suite needs an odd prime");
    std::vector<VerificationReport> rows;
    const bool explicit_req = !opt.theorems.empty();

    FieldContext F = build_field(p, 1);
    uint32_t q1 = p - 1;
    std::optional<CycloContext> cc;
    std::optional<GreeneContext> Eopt;
    auto exact = [&]() -> GreeneContext& {
        if (!Eopt) {
            cc.emplace(q1);
            Eopt.emplace(F, *cc);
        }
        return *Eopt;
    };
    auto vacuous_row = [&](const std::string& id, const std::string& why) {
        if (!explicit_req || !opt.want(id)) return;
        VerificationReport r = make_report(id, {{"p", u32s(p)}}, "-", "-", true, why);
        r.status = "vacuous";
        rows.push_back(r);
    };
    auto conjecture_row = [&](VerificationReport r) {
        r.status = "conjecture";
        rows.push_back(std::move(r));
    };

    // reduction of Greene 2F1 to the truncated classical series mod p
    if (opt.want("trunc-2f1-reduction")) {
        for (uint32_t d = 2; d <= 6; ++d) {
            if (q1 % d != 0) continue;
            uint32_t t = q1 / d;
            for (uint32_t m = 1; m < d; ++m) {
                for (uint32_t x = 1; x < p; ++x) {
                    uint32_t lhs = truncated_hgf_mod_p({frac(m, d), frac(d - m, d)}, {1}, x, p, p);
                    CycloNumber v = exact().hgf({(m * t) % q1, (q1 - (m * t) % q1) % q1}, {0}, x);
                    uint32_t rhs = reduce_mod_p(v.scaled(mpq_class(-(long)p)), F);
                    rows.push_back(make_report(
                        "trunc-2f1-reduction",
                        {{"p", u32s(p)}, {"d", u32s(d)}, {"m", u32s(m)}, {"x", u32s(x)}},
                        u32s(lhs), u32s(rhs), lhs == rhs));
                }
            }
        }
    }

    // quadratic-character special case with the chi(-1) sign factor
    if (opt.want("trunc-2f1-quadratic")) {
        uint32_t phi = q1 / 2;
        int sgn_phi = ((uint64_t)phi * (q1 / 2)) % q1 == 0 ? 1 : -1;  // chi_phi(-1)
        int sgn_half = (q1 / 2) % 2 == 0 ? 1 : -1;                    // (-1)^{(p-1)/2}
        for (uint32_t lam = 1; lam < p; ++lam) {
            CycloNumber v = exact().hgf({phi, phi}, {0}, lam);
            uint32_t r = reduce_mod_p(v.scaled(mpq_class(-(long)sgn_phi * (long)p)), F);
            uint32_t tr = truncated_hgf_mod_p({frac(1, 2), frac(1, 2)}, {1}, lam, p, p);
            uint32_t lhs = sgn_half == 1 ? tr : (p - tr) % p;
            rows.push_back(make_report("trunc-2f1-quadratic", {{"p", u32s(p)}, {"lambda", u32s(lam)}},
                                       u32s(lhs), u32s(r), lhs == r));
        }
    }

    // reduction of the (d-1)F(d-2) family mod p, sign (-1)^d
    if (opt.want("trunc-hgf-reduction")) {
        for (uint32_t d = 3; d <= 6; ++d) {
            if (q1 % d != 0) continue;
            uint32_t t = q1 / d;
            std::vector<uint32_t> upper;
            for (uint32_t i = 1; i < d; ++i) upper.push_back((i * t) % q1);
            std::vector<uint32_t> lower(d - 2, 0);
            std::vector<mpq_class> cup;
            for (uint32_t i = 1; i < d; ++i) cup.push_back(frac(i, d));
            std::vector<mpq_class> clo(d - 2, mpq_class(1));
            mpz_class scale = 1;
            for (uint32_t i = 0; i + 2 < d; ++i) scale *= p;
            for (uint32_t x = 1; x < p; ++x) {
                CycloNumber v = exact().hgf(upper, lower, x);
                uint32_t r = reduce_mod_p(v.scaled(mpq_class(scale)), F);
                uint32_t tr = truncated_hgf_mod_p(cup, clo, x, p, p);
                uint32_t rhs = d % 2 == 0 ? tr : (p - tr) % p;
                rows.push_back(make_report("trunc-hgf-reduction",
                                           {{"p", u32s(p)}, {"d", u32s(d)}, {"x", u32s(x)}},
                                           u32s(rhs), u32s(r), rhs == r));
            }
        }
    }

    // the 3F2 instance of the reduction (K3 main term)
    if (opt.want("trunc-3f2-reduction")) {
        if (q1 % 4 == 0) {
            uint32_t t = q1 / 4;
            for (uint32_t x = 1; x < p; ++x) {
                CycloNumber v = exact().hgf({t, 2 * t, 3 * t}, {0, 0}, x);
                uint32_t r = reduce_mod_p(v.scaled(mpq_class((long)p * p)), F);
                uint32_t tr = truncated_hgf_mod_p({frac(1, 4), frac(2, 4), frac(3, 4)},
                                                  {mpq_class(1), mpq_class(1)}, x, p, p);
                rows.push_back(make_report("trunc-3f2-reduction", {{"p", u32s(p)}, {"x", u32s(x)}},
                                           u32s(tr), u32s(r), tr == r));
            }
        } else {
            vacuous_row("trunc-3f2-reduction", "needs p = 1 mod 4");
        }
    }

    // vanishing of the scaled binomial 2F1 term mod p
    if (opt.want("binom-2f1-vanishing")) {
        if (q1 % 4 == 0) {
            uint32_t t = q1 / 4;
            for (uint32_t x = 1; x < p; ++x) {
                CycloNumber v = exact().binom(3 * t, t) * exact().hgf({3 * t, t}, {2 * t}, x);
                uint32_t r = reduce_mod_p(v.scaled(mpq_class(3 * (long)p * p)), F);
                rows.push_back(make_report("binom-2f1-vanishing", {{"p", u32s(p)}, {"x", u32s(x)}},
                                           "0", u32s(r), r == 0));
            }
        } else {
            vacuous_row("binom-2f1-vanishing", "needs p = 1 mod 4");
        }
    }

    // scaled Greene 3F2 agrees with the 3G3 p-adic sum mod p
    if (opt.want("greene-padic-bridge")) {
        if (q1 % 4 == 0) {
            uint32_t t = q1 / 4;
            for (uint32_t x = 1; x < p; ++x) {
                CycloNumber v = exact().hgf({t, 2 * t, 3 * t}, {0, 0}, x);
                uint32_t r = reduce_mod_p(v.scaled(mpq_class((long)p * p)), F);
                uint64_t lam4 = F.inv((elem)x);  // x = 1/lambda^4
                GResult g3 = mccarthy_G({frac(1, 4), frac(2, 4), frac(3, 4)},
                                        {mpq_class(0), mpq_class(0), mpq_class(0)}, lam4, p, 1);
                bool pass = g3.integral && r == g3.value;
                rows.push_back(make_report("greene-padic-bridge", {{"p", u32s(p)}, {"x", u32s(x)}},
                                           u32s(r), g3.integral ? u32s(g3.value) : "non-integral",
                                           pass));
            }
        } else {
            vacuous_row("greene-padic-bridge", "needs p = 1 mod 4");
        }
    }

    // K3 trace of Frobenius = truncated 3F2 period mod p
    if (opt.want("k3-trace-period")) {
        if (p % 4 == 1) {
            for (uint32_t lam = 1; lam < p; ++lam) {
                int64_t a = count_k3_greene((elem)lam, exact()) - (int64_t)p * p - 1;
                uint32_t x = F.inv(F.pow((elem)lam, 4));
                uint32_t per = truncated_hgf_mod_p({frac(1, 4), frac(2, 4), frac(3, 4)},
                                                   {mpq_class(1), mpq_class(1)}, x, p, p);
                uint32_t lhs = (uint32_t)(((a % p) + p) % p);
                rows.push_back(make_report("k3-trace-period", {{"p", u32s(p)}, {"lambda", u32s(lam)}},
                                           u32s(lhs), u32s(per), lhs == per));
            }
        } else {
            vacuous_row("k3-trace-period", "needs p = 1 mod 4");
        }
    }

    // p-adic K3 count formulas against brute force, both residue branches
    auto padic_count_rows = [&](const char* id, std::vector<unsigned> ks) {
        std::vector<int64_t> naive(p, 0);
        for (uint32_t lam = 1; lam < p; ++lam) naive[lam] = count_naive(F, 4, lam, opt.budget);
        for (unsigned k : ks) {
            uint64_t M = 1;
            for (unsigned i = 0; i < k; ++i) M *= p;
            for (uint32_t lam = 1; lam < p; ++lam) {
                uint64_t lhs = (uint64_t)naive[lam] % M;
                uint64_t rhs = count_k3_padic(lam, p, k);
                rows.push_back(make_report(
                    id, {{"p", u32s(p)}, {"k", u32s(k)}, {"lambda", u32s(lam)}}, u32s(lhs),
                    u32s(rhs), lhs == rhs));
            }
        }
    };
    if (opt.want("k3-count-padic-3mod4")) {
        if (p % 4 == 3)
            padic_count_rows("k3-count-padic-3mod4", {1, 2, 3});
        else
            vacuous_row("k3-count-padic-3mod4", "needs p = 3 mod 4");
    }
    if (opt.want("k3-count-padic-1mod4")) {
        if (p % 4 == 1)
            padic_count_rows("k3-count-padic-1mod4", {1, 2});
        else
            vacuous_row("k3-count-padic-1mod4", "needs p = 1 mod 4");
    }

    // conjectural d = 5 p-adic count (sign as verified: the 4G4 term enters
    // negatively), mod p^2; stated for p != 1 mod d with d an odd prime;
    // reported with status "conjecture"
    if (opt.want("count-padic-general-conjecture")) {
        if (p != 5 && p % 5 != 1) {
            unsigned k = 2;
            uint64_t M = (uint64_t)p * p;
            for (uint32_t lam = 1; lam < p; ++lam) {
                int64_t naive = count_naive(F, 5, lam, opt.budget);
                uint64_t l5 = F.pow((elem)lam, 5);
                GResult g4 = mccarthy_G({frac(1, 5), frac(2, 5), frac(3, 5), frac(4, 5)},
                                        std::vector<mpq_class>(4, mpq_class(0)), l5, p, k);
                uint64_t base = ((uint64_t)p * p % M * p + (uint64_t)p * p + p + 1) % M;
                bool pass = false;
                std::string rhs = "non-integral";
                if (g4.integral) {
                    uint64_t val = (base + M - g4.value % M) % M;
                    rhs = u32s(val);
                    pass = (uint64_t)naive % M == val;
                }
                auto r = make_report("count-padic-general-conjecture",
                                     {{"d", "5"}, {"p", u32s(p)}, {"k", u32s(k)}, {"lambda", u32s(lam)}},
                                     u32s((uint64_t)naive % M), rhs, pass);
                conjecture_row(std::move(r));
            }
        } else {
            vacuous_row("count-padic-general-conjecture", "stated for p != 1 mod 5, p != 5");
        }
    }

    // conjectural d = 5 trace / truncated-period congruence mod p
    if (opt.want("trace-period-general-conjecture")) {
        if (p % 5 == 1) {
            for (uint32_t lam = 1; lam < p; ++lam) {
                int64_t naive = count_naive(F, 5, lam, opt.budget);
                int64_t a = (int64_t)p * p * p + 25ll * p * p - 100ll * p + 1 - naive;
                uint32_t x = F.inv(F.pow((elem)lam, 5));
                uint32_t per = truncated_hgf_mod_p({frac(1, 5), frac(2, 5), frac(3, 5), frac(4, 5)},
                                                   std::vector<mpq_class>(3, mpq_class(1)), x, p, p);
                uint32_t lhs = (uint32_t)(((a % p) + p) % p);
                auto r = make_report("trace-period-general-conjecture",
                                     {{"d", "5"}, {"p", u32s(p)}, {"lambda", u32s(lam)}}, u32s(lhs),
                                     u32s(per), lhs == per);
                conjecture_row(std::move(r));
            }
        } else {
            vacuous_row("trace-period-general-conjecture", "needs p = 1 mod 5");
        }
    }

    return rows;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> coset_closed_form_suite(const FieldContext& F, unsigned bits) {
    uint32_t q = F.q, q1 = q - 1;
    if (q1 % 4 != 0) throw config_error("coset closed forms need q = 1 mod 4");
    if (bits == 0) bits = auto_precision_bits(q, 4);
    std::vector<VerificationReport> rows;

    CharTable C(F, bits);
    CycloContext cc(q1);
    GreeneContext E(F, cc);
    uint32_t t = q1 / 4;
    int s1 = char_sign_at_minus_one(t);  // T^t(-1)

    const double gate = 1e-10;
    auto push = [&](const std::string& w, const std::string& branch, uint32_t lam,
                    const CApprox& lhs, const CApprox& rhs) {
        CApprox diff = lhs - rhs;
        BigFloat disc = diff.mag_upper();
        std::vector<std::pair<std::string, std::string>> params = {{"q", u32s(q)}, {"w", w}};
        if (!branch.empty()) params.push_back({"branch", branch});
        if (lam) params.push_back({"lambda", u32s(lam)});
        rows.push_back(make_report("coset-closed-form", std::move(params), capprox_str(lhs),
                                   capprox_str(rhs), disc < BigFloat(gate),
                                   bigfloat_to_string(disc, 3)));
    };

    // zero-lambda term: definitional double sum vs the closed form
    {
        mpz_class base_z = (mpz_class((unsigned long)q) * q * q - 1) / (q - 1);
        CApprox base = CApprox::exact_real(mpq_to_bigfloat(mpq_class(base_z)));
        std::vector<CApprox> terms;
        std::vector<uint32_t> w(4, 1);
        while (true) {
            uint32_t s = w[0] + w[1] + w[2] + w[3];
            if (s % 4 == 0) {
                CApprox prod = CApprox::exact_int(1);
                for (uint32_t wi : w) prod = prod * C.gauss((wi * t) % q1);
                terms.push_back(prod);
            }
            size_t i = 0;
            while (i < 4 && ++w[i] == 4) w[i++] = 1;
            if (i == 4) break;
        }
        CApprox def = base + sum_pairwise(terms) / CApprox::exact_int((int64_t)q);
        CApprox g4 = CApprox::exact_int(0);
        for (uint32_t i = 1; i <= 3; ++i) {
            CApprox g = C.gauss((i * t) % q1);
            g4 = g4 + g * g * g * g;
        }
        CApprox closed = CApprox::exact_int((int64_t)q * q + 7 * (int64_t)q + 1) +
                         g4 / CApprox::exact_int((int64_t)q) +
                         CApprox::exact_int(12 * (int64_t)q * s1);
        push("zero-term", "", 0, def, closed);
    }

    // locate the three labels by multiplicity: 1 (constant), 12, 3
    auto labels = coset_labels(4);
    const CosetLabel *l1 = nullptr, *l12 = nullptr, *l3 = nullptr;
    for (const auto& lab : labels) {
        if (lab.multiplicity == 1) l1 = &lab;
        if (lab.multiplicity == 12) l12 = &lab;
        if (lab.multiplicity == 3) l3 = &lab;
    }
    if (!l1 || !l12 || !l3) throw std::logic_error("unexpected coset label structure for d = 4");

    CApprox g4 = CApprox::exact_int(0);
    for (uint32_t i = 1; i <= 3; ++i) {
        CApprox g = C.gauss((i * t) % q1);
        g4 = g4 + g * g * g * g;
    }

    for (uint32_t lam = 1; lam < q; ++lam) {
        elem l4 = F.pow((elem)lam, 4);
        elem inv_l4 = F.inv(l4);
        elem one_m_l4 = F.add(1, F.neg(l4));
        int s2 = one_m_l4 ? (F.dlog[one_m_l4] % 2 == 0 ? 1 : -1) : 0;  // T^{2t}(1-lambda^4)
        std::string branch = (l4 == 1) ? "singular" : "general";

        CApprox s0000 = coset_term(C, 4, *l1, lam);
        CApprox c0000 = CApprox::exact_int(0) - g4 / CApprox::exact_int((int64_t)q) +
                        embed_complex(E.hgf({t, 2 * t, 3 * t}, {0, 0}, inv_l4), C.zq1) *
                            CApprox::exact_int((int64_t)q * q);
        push("0,0,0,0", branch, lam, s0000, c0000);

        CApprox s0112 = coset_term(C, 4, *l12, lam);
        CApprox c0112 = CApprox::exact_int(12 * (int64_t)q * s1 * (s2 - 1));
        push("0,0,1,3", branch, lam, s0112, c0112);

        CApprox s0022 = coset_term(C, 4, *l3, lam);
        CApprox c0022 =
            CApprox::exact_int(-6 * (int64_t)q) +
            embed_complex(E.binom(3 * t, t) * E.hgf({3 * t, t}, {2 * t}, inv_l4), C.zq1) *
                CApprox::exact_int(3 * (int64_t)q * q);
        push("0,0,2,2", branch, lam, s0022, c0022);

        if (l4 == 1) {
            // specialization formulas at lambda^4 = 1
            push("0,0,1,3", "singular-closed", lam, s0112,
                 CApprox::exact_int(-12 * (int64_t)q * s1));
            push("0,0,2,2", "singular-closed", lam, s0022,
                 CApprox::exact_int(-6 * (int64_t)q + 3 * (int64_t)q * s1));
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> pochhammer_suite(uint32_t p, uint32_t d) {
    if (p < 3 || !is_prime_u32(p)) throw config_error("pochhammer suite needs an odd prime");
    if (d < 2) throw config_error("pochhammer suite needs d >= 2");
    std::vector<VerificationReport> rows;
    if ((p - 1) % d != 0) {
        VerificationReport r =
            make_report("pochhammer-gamma-identity", {{"p", u32s(p)}, {"d", u32s(d)}}, "-", "-",
                        true, "needs d | p - 1");
        r.status = "vacuous";
        rows.push_back(r);
        return rows;
    }
    uint32_t t = (p - 1) / d;
    for (uint32_t m = 1; m < d; ++m) {
        uint32_t jmax = std::min(m, d - m) * t;
        for (uint32_t j = 0; j <= jmax; ++j) rows.push_back(pochhammer_identity_check(m, d, p, j));
    }
    return rows;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> property_suite_field_invariance() {
    std::vector<VerificationReport> rows;

    // same prime field, two generators: every count must agree
    {
        FieldContext F1 = build_field(13, 1);
        elem g2 = F1.exp_tab[5];  // second generator (power coprime to q-1)
        FieldContext F2 = FieldContext::build(13, 1, nullptr, &g2);
        CycloContext cc(12);
        GreeneContext E1(F1, cc), E2(F2, cc);
        for (uint32_t lam = 1; lam < 13; ++lam) {
            int64_t a = count_k3_greene((elem)lam, E1);
            int64_t b = count_k3_greene((elem)lam, E2);
            rows.push_back(make_report("generator-invariance",
                                       {{"q", "13"},
                                        {"generators", u32s(F1.generator) + "," + u32s(F2.generator)},
                                        {"lambda", u32s(lam)}},
                                       u32s(a), u32s(b), a == b));
        }
    }
    // tower field, two generators, through the approximate coset formula
    {
        FieldContext F1 = build_field(3, 2);
        elem h = F1.exp_tab[3];
        FieldContext F2 = FieldContext::build(3, 2, nullptr, &h);
        for (uint32_t lam = 1; lam < 9; ++lam) {
            int64_t a = count_koblitz(F1, 4, (elem)lam);
            int64_t b = count_koblitz(F2, 4, (elem)lam);
            rows.push_back(make_report("generator-invariance",
                                       {{"q", "9"},
                                        {"generators", u32s(F1.generator) + "," + u32s(F2.generator)},
                                        {"lambda", u32s(lam)}},
                                       u32s(a), u32s(b), a == b));
        }
    }
    // same field under two moduli: the multiset of counts over all lambda is
    // representation-independent
    {
        FieldContext F1 = build_field(5, 2);
        std::vector<uint32_t> mod2 = {1, 1, 1};  // x^2 + x + 1, also irreducible over F_5
        FieldContext F2 = FieldContext::build(5, 2, &mod2, nullptr);
        auto multiset = [&](const FieldContext& F, bool coset_path) {
            std::vector<int64_t> out;
            for (uint32_t lam = 0; lam < 25; ++lam) {
                if (coset_path && lam == 0) continue;
                out.push_back(coset_path ? count_koblitz(F, 4, (elem)lam)
                                         : count_naive(F, 4, (elem)lam));
            }
            std::sort(out.begin(), out.end());
            std::string s;
            for (size_t i = 0; i < out.size(); ++i)
                s += (i ? "," : "") + std::to_string(out[i]);
            return s;
        };
        std::string a1 = multiset(F1, false), b1 = multiset(F2, false);
        rows.push_back(make_report("modulus-invariance",
                                   {{"q", "25"}, {"modulus_a", "[2,0,1]"}, {"modulus_b", "[1,1,1]"},
                                    {"method", "naive"}},
                                   a1, b1, a1 == b1));
        std::string a2 = multiset(F1, true), b2 = multiset(F2, true);
        rows.push_back(make_report("modulus-invariance",
                                   {{"q", "25"}, {"modulus_a", "[2,0,1]"}, {"modulus_b", "[1,1,1]"},
                                    {"method", "coset"}},
                                   a2, b2, a2 == b2));
    }
    // Jacobi sums: Gauss-quotient evaluation vs the defining simplex sum
    {
        FieldContext F9 = build_field(3, 2);
        CharTable C9(F9, auto_precision_bits(9, 4));
        CycloContext cc8(8);
        GreeneContext E9(F9, cc8);
        for (uint32_t a = 0; a < 8; ++a) {
            uint32_t good = 0;
            for (uint32_t b = 0; b < 8; ++b) {
                CApprox lhs = C9.jacobi2(a, b);
                CApprox rhs = embed_complex(E9.jacobi2(a, b), C9.zq1);
                if ((lhs - rhs).mag_upper() < BigFloat(1e-9)) ++good;
            }
            rows.push_back(make_report("jacobi-quotient-agreement", {{"q", "9"}, {"a", u32s(a)}},
                                       u32s(good), "8", good == 8));
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> property_suite_padic() {
    std::vector<VerificationReport> rows;
    const std::vector<mpq_class> samples = {mpq_class(0),  mpq_class(1),  mpq_class(5),
                                            frac(1, 2),    frac(1, 3),    frac(2, 3),
                                            frac(1, 4),    frac(3, 4),    frac(7, 9),
                                            frac(-3, 8),   frac(11, 6)};

    // Gamma_p(x) Gamma_p(1-x) = (-1)^{a0}, a0 in {1..p} congruent to x mod p
    for (uint32_t p : {5u, 7u, 13u}) {
        for (unsigned k = 1; k <= 3; ++k) {
            uint64_t M = 1;
            for (unsigned i = 0; i < k; ++i) M *= p;
            for (const auto& x : samples) {
                uint64_t n0 = rational_residue(x, p);
                uint64_t a0 = n0 == 0 ? p : n0;
                uint64_t lhs = gamma_p(x, p, k) * gamma_p(1 - x, p, k) % M;
                uint64_t rhs = a0 % 2 ? M - 1 : 1;
                rows.push_back(make_report(
                    "gamma-reflection",
                    {{"p", u32s(p)}, {"k", u32s(k)}, {"x", x.get_str()}},
                    u32s(lhs), u32s(rhs), lhs == rhs));
            }
        }
    }
    // x = y mod p^m implies Gamma_p(x) = Gamma_p(y) mod p^m
    for (uint32_t p : {5u, 7u, 13u}) {
        for (unsigned m = 1; m <= 3; ++m) {
            uint64_t pm = 1;
            for (unsigned i = 0; i < m; ++i) pm *= p;
            for (const auto& x : {frac(1, 2), frac(3, 4), frac(7, 9), frac(-3, 8)}) {
                for (long r : {1l, 2l}) {
                    mpq_class y = x + mpq_class((unsigned long)(r * (long)pm));
                    uint64_t a = gamma_p(x, p, m), b = gamma_p(y, p, m);
                    rows.push_back(make_report(
                        "gamma-continuity",
                        {{"p", u32s(p)}, {"m", u32s(m)}, {"x", x.get_str()}, {"r", u32s(r)}},
                        u32s(a), u32s(b), a == b));
                }
            }
        }
    }
    // nGn computed at precision k+1 reduces to the value at precision k
    for (uint32_t p : {7u, 13u}) {
        struct Spec {
            const char* name;
            std::vector<mpq_class> up, lo;
            uint32_t power;
        };
        std::vector<Spec> specs = {
            {"3g3", {frac(1, 4), frac(2, 4), frac(3, 4)}, std::vector<mpq_class>(3, mpq_class(0)), 4},
            {"2g2", {frac(3, 4), frac(1, 4)}, {mpq_class(0), frac(1, 2)}, 4},
            {"4g4",
             {frac(1, 5), frac(2, 5), frac(3, 5), frac(4, 5)},
             std::vector<mpq_class>(4, mpq_class(0)),
             5},
        };
        for (const auto& sp : specs) {
            for (uint32_t lam = 1; lam <= 3; ++lam) {
                uint64_t targ = 1;
                for (uint32_t i = 0; i < sp.power; ++i) targ = targ * lam % p;
                for (unsigned k = 1; k <= 2; ++k) {
                    uint64_t M = 1;
                    for (unsigned i = 0; i < k; ++i) M *= p;
                    GResult v1 = mccarthy_G(sp.up, sp.lo, targ, p, k);
                    GResult v2 = mccarthy_G(sp.up, sp.lo, targ, p, k + 1);
                    bool pass = v1.integral && v2.integral && v2.value % M == v1.value;
                    rows.push_back(make_report(
                        "padic-precision-soundness",
                        {{"p", u32s(p)}, {"series", sp.name}, {"lambda", u32s(lam)}, {"k", u32s(k)}},
                        v1.integral ? u32s(v1.value) : "non-integral",
                        v2.integral ? u32s(v2.value % M) : "non-integral", pass));
                }
            }
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> property_suite_dual_definition() {
    std::vector<VerificationReport> rows;
    auto run = [&](uint32_t pq, const std::vector<std::array<uint32_t, 3>>& triples,
                   const std::vector<elem>& xs) {
        FieldContext F = build_field(pq, 1);
        CycloContext cc(pq - 1);
        GreeneContext E(F, cc);
        for (const auto& tr : triples) {
            uint32_t good = 0;
            for (elem x : xs) {
                CycloNumber v1 = E.hgf({tr[0], tr[1]}, {tr[2]}, x);
                CycloNumber v2 = E.hgf_2f1_alt(tr[0], tr[1], tr[2], x);
                if (v1 == v2) ++good;
            }
            rows.push_back(make_report(
                "hgf-dual-definition",
                {{"q", u32s(pq)},
                 {"A", u32s(tr[0])}, {"B", u32s(tr[1])}, {"C", u32s(tr[2])}},
                u32s(good), u32s(xs.size()), good == xs.size()));
        }
    };

    // exhaustive at q = 5
    {
        std::vector<std::array<uint32_t, 3>> triples;
        for (uint32_t a = 0; a < 4; ++a)
            for (uint32_t b = 0; b < 4; ++b)
                for (uint32_t c = 0; c < 4; ++c) triples.push_back({a, b, c});
        run(5, triples, {0, 1, 2, 3, 4});
    }
    // sampled at q = 13 and q = 17
    run(13,
        {{1, 5, 3}, {2, 7, 9}, {11, 4, 6}, {3, 3, 0}, {8, 2, 2}, {0, 5, 7}, {6, 6, 6}, {1, 0, 11},
         {5, 5, 10}, {12, 1, 4}},
        {1, 2, 6, 12});
    run(17, {{1, 9, 5}, {3, 12, 7}, {15, 2, 8}, {4, 4, 0}, {10, 3, 3}, {0, 7, 11}, {8, 8, 8},
             {2, 0, 13}},
        {1, 3, 16});
    return rows;
}

}  // namespace dworkhg
