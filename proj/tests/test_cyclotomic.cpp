#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dworkhg/approx.hpp"
#include "dworkhg/charsums.hpp"
#include "dworkhg/cyclotomic.hpp"
#include "dworkhg/field.hpp"

using namespace dworkhg;

static std::vector<mpz_class> zpoly(std::vector<long> v) {
    std::vector<mpz_class> out;
    for (long x : v) out.push_back(mpz_class(x));
    return out;
}

TEST_CASE("cyclotomic polynomials (low-to-high coefficients)") {
    CHECK(cyclotomic_polynomial(1) == zpoly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == zpoly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == zpoly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == zpoly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == zpoly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == zpoly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == zpoly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(16) == zpoly({1, 0, 0, 0, 0, 0, 0, 0, 1}));
    // phi(105) = 48; first coefficient of magnitude 2 appears at n = 105
    auto p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    bool has_two = false;
    for (const auto& c : p105)
        if (c == -2 || c == 2) has_two = true;
    CHECK(has_two);
}

TEST_CASE("context degree and root relations") {
    for (uint32_t n : {4u, 8u, 12u, 16u, 24u, 48u}) {
        CycloContext cc(n);
        CHECK(cc.n == n);
        CHECK(cc.phi.size() == cc.deg + 1);
        CycloNumber z = CycloNumber::root_power(cc, 1);
        // zeta^n = 1 and zeta^{n/2} = -1
        CycloNumber pw = CycloNumber::rational(cc, 1);
        for (uint32_t i = 0; i < n; ++i) pw = pw * z;
        CHECK(pw == CycloNumber::rational(cc, 1));
        CHECK(CycloNumber::root_power(cc, n / 2) == CycloNumber::rational(cc, -1));
        // sum of all n-th roots of unity vanishes
        CycloNumber s(cc);
        for (uint32_t m = 0; m < n; ++m) s += CycloNumber::root_power(cc, m);
        CHECK(s.is_zero());
        // power map consistency: root_power(a) * root_power(b) = root_power(a+b)
        CHECK(CycloNumber::root_power(cc, 3) * CycloNumber::root_power(cc, n - 1) ==
              CycloNumber::root_power(cc, (3 + n - 1) % n));
    }
}

TEST_CASE("arithmetic, conjugation, Galois action") {
    CycloContext cc(12);
    CycloNumber a = CycloNumber::root_power(cc, 1, mpq_class(3, 2));
    CycloNumber b = CycloNumber::root_power(cc, 5) + CycloNumber::rational(cc, mpq_class(-7, 3));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a.scaled(mpq_class(2)) == a + a);
    CHECK(a.divided(mpq_class(1, 2)) == a + a);
    // conjugate is the s = n-1 Galois map; galois is multiplicative
    CHECK(a.conjugate() == a.galois(11));
    CHECK((a * b).galois(5) == a.galois(5) * b.galois(5));
    CHECK((a + b).galois(7) == a.galois(7) + b.galois(7));
    // conjugation fixes rationals
    CycloNumber r = CycloNumber::rational(cc, mpq_class(9, 4));
    CHECK(r.conjugate() == r);
    CHECK(r.is_rational());
    CHECK(r.rational_value() == mpq_class(9, 4));
    CHECK_FALSE(a.is_rational());
    // x * conj(x) of a root of unity is 1
    CycloNumber z = CycloNumber::root_power(cc, 7);
    CHECK(z * z.conjugate() == CycloNumber::rational(cc, 1));
}

TEST_CASE("degree bound is enforced before any table is built") {
    CHECK_THROWS_AS(CycloContext(5003), config_error);  // phi = 5002 > 4096
    CHECK_NOTHROW(CycloContext(48));
}

TEST_CASE("reduction to F_p via zeta -> generator") {
    FieldContext F = build_field(13, 1);
    CycloContext cc(12);
    // zeta -> 2 (the canonical generator)
    CHECK(reduce_mod_p(CycloNumber::root_power(cc, 1), F) == 2);
    CHECK(reduce_mod_p(CycloNumber::root_power(cc, 2), F) == 4);
    CHECK(reduce_mod_p(CycloNumber::rational(cc, mpq_class(7)), F) == 7);
    CHECK(reduce_mod_p(CycloNumber::rational(cc, mpq_class(1, 2)), F) == 7);  // 2^{-1} = 7 mod 13
    CHECK(reduce_mod_p(CycloNumber::rational(cc, mpq_class(-1)), F) == 12);
    // zeta^6 = -1 must map to -1 = 12
    CHECK(reduce_mod_p(CycloNumber::root_power(cc, 6), F) == 12);
    // denominator divisible by p is rejected
    CHECK_THROWS_AS(reduce_mod_p(CycloNumber::rational(cc, mpq_class(1, 13)), F), config_error);
    // conductor mismatch is rejected
    CycloContext cc8(8);
    CHECK_THROWS_AS(reduce_mod_p(CycloNumber::root_power(cc8, 1), F), config_error);
}

TEST_CASE("exact Gauss sums embed to the approximate ones") {
    FieldContext F = build_field(5, 1);
    CycloContext big(20);  // conductor p(q-1) = 20
    CharTable C(F, 128);
    RootTable roots(20);
    for (uint32_t k = 0; k < 4; ++k) {
        CycloNumber ge = gauss_sum_exact(F, k, big);
        CApprox emb = embed_complex(ge, roots);
        CApprox diff = emb - C.gauss(k);
        CHECK(diff.mag_upper() < BigFloat(1e-25));
    }
    // g(eps) = -1 exactly
    CHECK(gauss_sum_exact(F, 0, big) == CycloNumber::rational(big, -1));
}

TEST_CASE("exact Gauss sum magnitude |g|^2 = q via conjugation") {
    FieldContext F = build_field(5, 1);
    CycloContext big(20);
    for (uint32_t k = 1; k < 4; ++k) {
        CycloNumber g = gauss_sum_exact(F, k, big);
        CycloNumber m = g * g.conjugate();
        CHECK(m == CycloNumber::rational(big, mpq_class(5)));
    }
}
