#pragma once
// Finite field F_q, q = p^e odd, with canonical modulus/generator and full
// dlog/exp/trace tables. Elements are uint32 indices encoding base-p digit
// vectors (value = sum c_i p^i, power basis of the modulus).
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dworkhg {

using elem = uint32_t;                  // field element index in [0, q)
constexpr uint32_t DLOG_ZERO = 0xffffffffu;  // dlog sentinel for 0

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FieldContext {
public:
    uint32_t p = 0, e = 0, q = 0;
    std::vector<uint32_t> modulus;   // e+1 coefficients, low to high, monic
    elem generator = 0;
    std::vector<uint32_t> dlog;      // size q, dlog[0] = DLOG_ZERO
    std::vector<elem> exp_tab;       // size q-1, exp_tab[k] = g^k
    std::vector<uint32_t> trace_tab; // size q, values in [0,p)

    // Canonical construction: smallest modulus / smallest generator under the
    // base-p integer encoding. An explicit modulus or generator may be passed
    // to exercise invariance properties.
    static FieldContext build(uint32_t p, uint32_t e,
                              const std::vector<uint32_t>* modulus_override = nullptr,
                              const elem* generator_override = nullptr,
                              uint32_t q_bound = 10000);

    bool is_zero(elem a) const { return a == 0; }
    elem zero() const { return 0; }
    elem one() const { return 1; }

    elem add(elem a, elem b) const {
        if (e == 1) {
            uint32_t s = a + b;
            return s >= p ? s - p : s;
        }
        return add_slow(a, b);
    }
    elem neg(elem a) const {
        if (e == 1) return a ? p - a : 0;
        return neg_slow(a);
    }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t k = dlog[a] + dlog[b];
        if (k >= q - 1) k -= q - 1;
        return exp_tab[k];
    }
    elem inv(elem a) const {
        if (a == 0) throw config_error("division by zero field element");
        uint32_t k = dlog[a];
        return exp_tab[k == 0 ? 0 : q - 1 - k];
    }
    elem pow(elem a, int64_t n) const {
        if (a == 0) {
            if (n <= 0) throw config_error("0 raised to nonpositive power");
            return 0;
        }
        int64_t m = (int64_t)(q - 1);
        int64_t k = ((int64_t)dlog[a] * (n % m)) % m;
        if (k < 0) k += m;
        return exp_tab[k];
    }
    elem from_int(int64_t n) const {
        int64_t r = n % (int64_t)p;
        if (r < 0) r += p;
        return (elem)r;
    }
    // frobenius x -> x^p
    elem frobenius(elem a) const { return pow(a, p); }
    uint32_t trace(elem a) const { return trace_tab[a]; }

    std::vector<uint32_t> digits_of(elem a) const {
        std::vector<uint32_t> d(e);
        for (uint32_t i = 0; i < e; i++) { d[i] = a % p; a /= p; }
        return d;
    }
    elem from_digits(const std::vector<uint32_t>& d) const {
        elem v = 0;
        for (uint32_t i = e; i-- > 0;) v = v * p + d[i] % p;
        return v;
    }

    // polynomial-representation product (independent of the dlog tables; used
    // during construction and by invariance tests)
    elem mul_raw(elem a, elem b) const;
    elem pow_raw(elem a, uint64_t n) const;

    // dlog table persistence ("DWFF" cache); loading returns false on absence
    // or mismatch, never throws for a missing file
    void save_cache(const std::string& path) const;
    static bool try_load_cached_tables(FieldContext& ctx, const std::string& path);

private:
    elem add_slow(elem a, elem b) const;
    elem neg_slow(elem a) const;
    void build_tables();
    friend FieldContext build_field_uncached(uint32_t, uint32_t,
                                             const std::vector<uint32_t>*,
                                             const elem*, uint32_t);
};

// Convenience wrapper matching the canonical defaults.
FieldContext build_field(uint32_t p, uint32_t e, uint32_t q_bound = 10000);

// Same, but consults/maintains a dlog-table cache file under cache_dir.
FieldContext build_field_cached(uint32_t p, uint32_t e, const std::string& cache_dir,
                                uint32_t q_bound = 10000);

// Teichmuller lift: unique w mod p^k with w = x (mod p), w^{p-1} = 1 (x != 0);
// 0 for x = 0. Returned as a nonnegative integer < p^k (p^k must fit uint64).
uint64_t teichmuller(uint32_t x, uint32_t p, uint32_t k);

bool is_prime_u32(uint32_t n);

}  // namespace dworkhg
