#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "dworkhg/field.hpp"

using namespace dworkhg;

TEST_CASE("canonical moduli and generators match the frozen tables") {
    struct Row {
        uint32_t p, e;
        std::vector<uint32_t> modulus;
        elem gen;
    };
    const std::vector<Row> rows = {
        {3, 2, {1, 0, 1}, 4},          {5, 2, {2, 0, 1}, 6},
        {7, 2, {1, 0, 1}, 9},          {3, 3, {1, 2, 0, 1}, 3},
        {3, 4, {2, 1, 0, 0, 1}, 3},    {11, 2, {1, 0, 1}, 15},
        {3, 8, {2, 0, 1, 0, 0, 0, 0, 0, 1}, 38},
    };
    for (const auto& r : rows) {
        CAPTURE(r.p);
        CAPTURE(r.e);
        FieldContext F = build_field(r.p, r.e);
        CHECK(F.modulus == r.modulus);
        CHECK(F.generator == r.gen);
        CHECK(F.q == (uint32_t)std::pow((double)r.p, (double)r.e));
    }
}

TEST_CASE("prime-field tables") {
    FieldContext F = build_field(13, 1);
    CHECK(F.generator == 2);
    CHECK(F.q == 13);
    for (elem a = 1; a < 13; ++a) CHECK(F.exp_tab[F.dlog[a]] == a);
    CHECK(F.dlog[0] == DLOG_ZERO);
}

TEST_CASE("field axioms and table consistency on sampled fields") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{13, 1}, {3, 2}, {5, 2}, {7, 2}, {3, 3}}) {
        FieldContext F = build_field(p, e);
        uint32_t q = F.q;
        std::mt19937 rng(17);
        auto rnd = [&]() { return (elem)(rng() % q); };
        for (int i = 0; i < 200; ++i) {
            elem a = rnd(), b = rnd(), c = rnd();
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(a, b) == F.mul_raw(a, b));
            CHECK(F.sub(a, a) == 0);
        }
        for (elem a = 1; a < q; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, (int64_t)q - 1) == 1);
            CHECK(F.pow(a, -1) == F.inv(a));
        }
        // dlog/exp are inverse bijections
        for (uint32_t k = 0; k + 1 < q; ++k) CHECK(F.dlog[F.exp_tab[k]] == k);
        // digits roundtrip
        for (elem a = 0; a < q; ++a) CHECK(F.from_digits(F.digits_of(a)) == a);
        // frobenius is an additive and multiplicative endomorphism fixing F_p
        for (int i = 0; i < 60; ++i) {
            elem a = rnd(), b = rnd();
            CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
            CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
        }
        for (elem a = 0; a < p; ++a) CHECK(F.frobenius(a) == a);
        // trace: F_p-linear, Galois-invariant, balanced fibers
        std::vector<uint32_t> fiber(p, 0);
        for (elem a = 0; a < q; ++a) {
            CHECK(F.trace(a) == F.trace(F.frobenius(a)));
            fiber[F.trace(a)]++;
        }
        for (uint32_t v = 0; v < p; ++v) CHECK(fiber[v] == q / p);
    }
}

TEST_CASE("from_int wraps integers into the prime subfield") {
    FieldContext F = build_field(7, 2);
    CHECK(F.from_int(0) == 0);
    CHECK(F.from_int(7) == 0);
    CHECK(F.from_int(-1) == 6);
    CHECK(F.from_int(23) == 2);
}

TEST_CASE("negative of -1 has dlog (q-1)/2") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{13, 1}, {5, 2}, {3, 2}}) {
        FieldContext F = build_field(p, e);
        CHECK(F.dlog[F.neg(1)] == (F.q - 1) / 2);
    }
}

TEST_CASE("construction rejects invalid input") {
    CHECK_THROWS_AS(build_field(4, 1), config_error);
    CHECK_THROWS_AS(build_field(2, 3), config_error);
    CHECK_THROWS_AS(build_field(9, 1), config_error);
    CHECK_THROWS_AS(build_field(101, 2), config_error);  // q = 10201 > 10^4
    CHECK_THROWS_AS(build_field(13, 0), config_error);
    // reducible modulus override: x^2 - 1 over F_5
    std::vector<uint32_t> bad = {4, 0, 1};
    CHECK_THROWS_AS(FieldContext::build(5, 2, &bad, nullptr), config_error);
    // non-generator override: 1 never generates
    elem one = 1;
    CHECK_THROWS_AS(FieldContext::build(13, 1, nullptr, &one), config_error);
}

TEST_CASE("explicit generator override is accepted and changes dlog only") {
    FieldContext F1 = build_field(13, 1);
    elem g = 6;
    FieldContext F2 = FieldContext::build(13, 1, nullptr, &g);
    CHECK(F2.generator == 6);
    for (elem a = 0; a < 13; ++a)
        for (elem b = 0; b < 13; ++b) CHECK(F1.mul(a, b) == F2.mul(a, b));
}

TEST_CASE("is_prime_u32") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(3));
    CHECK(is_prime_u32(9973));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(0));
    CHECK_FALSE(is_prime_u32(9991));  // 97 * 103
    CHECK_FALSE(is_prime_u32(6561));
}

TEST_CASE("teichmuller lifts match the frozen values and satisfy the defining equations") {
    CHECK(teichmuller(2, 5, 2) == 7);
    CHECK(teichmuller(3, 7, 2) == 31);
    CHECK(teichmuller(2, 13, 2) == 80);
    CHECK(teichmuller(5, 11, 3) == 632);
    CHECK(teichmuller(2, 7, 4) == 1353);
    CHECK(teichmuller(0, 13, 3) == 0);
    for (uint32_t p : {5u, 7u, 13u}) {
        for (uint32_t k = 1; k <= 3; ++k) {
            uint64_t M = 1;
            for (uint32_t i = 0; i < k; ++i) M *= p;
            for (uint32_t x = 1; x < p; ++x) {
                uint64_t w = teichmuller(x, p, k);
                CHECK(w % p == x);
                // w^{p-1} = 1 mod p^k
                uint64_t r = 1;
                for (uint32_t i = 0; i + 1 < p; ++i) r = (unsigned __int128)r * w % M;
                CHECK(r == 1);
            }
        }
    }
}

TEST_CASE("dlog cache file roundtrip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "dworkhg_cache_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    FieldContext F1 = build_field_cached(5, 2, dir.string());
    FieldContext F0 = build_field(5, 2);
    CHECK(F1.dlog == F0.dlog);
    // second construction must load the cached tables and agree
    FieldContext F2 = build_field_cached(5, 2, dir.string());
    CHECK(F2.dlog == F0.dlog);
    CHECK(F2.modulus == F0.modulus);
    CHECK(F2.generator == F0.generator);

    // corrupt cache: loader must reject it and the builder must recover
    bool found = false;
    for (auto& ent : fs::directory_iterator(dir)) {
        std::ofstream f(ent.path(), std::ios::binary | std::ios::trunc);
        f << "garbage";
        found = true;
    }
    CHECK(found);
    FieldContext F3 = build_field_cached(5, 2, dir.string());
    CHECK(F3.dlog == F0.dlog);
    fs::remove_all(dir);
}
