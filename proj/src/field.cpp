#include "dworkhg/field.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>

namespace dworkhg {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

elem FieldContext::add_slow(elem a, elem b) const {
    elem out = 0, mul = 1;
    for (uint32_t i = 0; i < e; i++) {
        uint32_t da = a % p, db = b % p;
        a /= p; b /= p;
        uint32_t s = da + db;
        if (s >= p) s -= p;
        out += s * mul;
        mul *= p;
    }
    return out;
}

elem FieldContext::neg_slow(elem a) const {
    elem out = 0, mul = 1;
    for (uint32_t i = 0; i < e; i++) {
        uint32_t da = a % p;
        a /= p;
        out += (da ? p - da : 0) * mul;
        mul *= p;
    }
    return out;
}

elem FieldContext::mul_raw(elem a, elem b) const {
    // schoolbook product of digit polynomials, reduced mod the monic modulus
    std::vector<uint32_t> da(e), db(e), prod(2 * e - 1, 0);
    for (uint32_t i = 0; i < e; i++) { da[i] = a % p; a /= p; }
    for (uint32_t i = 0; i < e; i++) { db[i] = b % p; b /= p; }
    for (uint32_t i = 0; i < e; i++)
        if (da[i])
            for (uint32_t j = 0; j < e; j++)
                prod[i + j] = (prod[i + j] + (uint64_t)da[i] * db[j]) % p;
    for (uint32_t i = 2 * e - 2; i + 1 > e; i--) {
        uint32_t c = prod[i];
        if (c) {
            prod[i] = 0;
            for (uint32_t j = 0; j < e; j++) {
                uint64_t t = prod[i - e + j] + (uint64_t)c * (p - modulus[j] % p);
                prod[i - e + j] = (uint32_t)(t % p);
            }
        }
    }
    elem out = 0;
    for (uint32_t i = e; i-- > 0;) out = out * p + prod[i];
    return out;
}

elem FieldContext::pow_raw(elem a, uint64_t n) const {
    elem r = 1;
    while (n) {
        if (n & 1) r = mul_raw(r, a);
        a = mul_raw(a, a);
        n >>= 1;
    }
    return r;
}

namespace {

// gcd of polynomials over F_p, coefficients low-to-high
std::vector<uint32_t> poly_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b, uint32_t p) {
    auto norm = [](std::vector<uint32_t>& u) {
        while (!u.empty() && u.back() == 0) u.pop_back();
    };
    auto inv_mod = [p](uint32_t x) {
        uint32_t r = 1, b = x, n = p - 2;
        while (n) {
            if (n & 1) r = (uint64_t)r * b % p;
            b = (uint64_t)b * b % p;
            n >>= 1;
        }
        return r;
    };
    norm(a); norm(b);
    while (!b.empty()) {
        uint32_t il = inv_mod(b.back());
        while (a.size() >= b.size()) {
            uint32_t c = (uint64_t)a.back() * il % p;
            if (c) {
                size_t off = a.size() - b.size();
                for (size_t j = 0; j < b.size(); j++) {
                    uint64_t t = a[off + j] + (uint64_t)c * (p - b[j]);
                    a[off + j] = (uint32_t)(t % p);
                }
            }
            a.pop_back();
            norm(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool modulus_irreducible(const FieldContext& probe, uint32_t p, uint32_t e) {
    // f irreducible over F_p iff gcd(f, x^{p^i} - x) = 1 for 1 <= i <= e/2,
    // computed with x^{p^i} evaluated by repeated Frobenius in F_p[x]/(f)
    if (e == 1) return true;
    elem x = probe.from_digits([&] {
        std::vector<uint32_t> d(e, 0);
        d[1] = 1;
        return d;
    }());
    elem a = x;
    for (uint32_t i = 1; i <= e / 2; i++) {
        a = probe.pow_raw(a, p);
        elem diff = probe.add(a, probe.neg(x));  // e > 1 here: digit-wise path
        std::vector<uint32_t> da(e);
        elem t = diff;
        for (uint32_t j = 0; j < e; j++) { da[j] = t % p; t /= p; }
        std::vector<uint32_t> f(probe.modulus);
        auto g = poly_gcd(f, da, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<uint32_t> factor_u32(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; (uint64_t)d * d <= n; d++)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

FieldContext build_field_uncached(uint32_t p, uint32_t e,
                                  const std::vector<uint32_t>* modulus_override,
                                  const elem* generator_override, uint32_t q_bound) {
    if (!is_prime_u32(p)) throw config_error("p must be prime: " + std::to_string(p));
    if (p == 2) throw config_error("p must be odd");
    if (e < 1) throw config_error("e must be positive");
    uint64_t q64 = 1;
    for (uint32_t i = 0; i < e; i++) {
        q64 *= p;
        if (q64 > q_bound) throw config_error("q exceeds the size bound");
    }
    FieldContext ctx;
    ctx.p = p;
    ctx.e = e;
    ctx.q = (uint32_t)q64;
    if (e == 1) {
        ctx.modulus = {0, 1};
    } else if (modulus_override) {
        ctx.modulus = *modulus_override;
        if (ctx.modulus.size() != e + 1 || ctx.modulus[e] != 1)
            throw config_error("modulus must be monic of degree e");
        for (auto c : ctx.modulus)
            if (c >= p) throw config_error("modulus coefficient out of range");
        if (!modulus_irreducible(ctx, p, e)) throw config_error("modulus is reducible");
    } else {
        // smallest monic irreducible under the base-p integer encoding
        bool found = false;
        for (uint32_t v = 1; v < ctx.q && !found; v++) {
            std::vector<uint32_t> cand(e + 1);
            uint32_t t = v;
            for (uint32_t i = 0; i < e; i++) { cand[i] = t % p; t /= p; }
            cand[e] = 1;
            if (cand[0] == 0) continue;  // root at 0
            ctx.modulus = cand;
            if (modulus_irreducible(ctx, p, e)) found = true;
        }
        if (!found) throw config_error("no irreducible modulus found");
    }

    uint32_t qm1 = ctx.q - 1;
    auto fac = factor_u32(qm1);
    auto has_full_order = [&](elem c) {
        for (auto r : fac)
            if (ctx.pow_raw(c, qm1 / r) == 1) return false;
        return true;
    };
    if (generator_override) {
        ctx.generator = *generator_override;
        if (ctx.generator == 0 || ctx.generator >= ctx.q || !has_full_order(ctx.generator))
            throw config_error("generator override does not have order q-1");
    } else {
        bool found = false;
        for (elem c = 1; c < ctx.q; c++)
            if (has_full_order(c)) { ctx.generator = c; found = true; break; }
        if (!found) throw config_error("no generator found");
    }
    ctx.build_tables();
    return ctx;
}

void FieldContext::build_tables() {
    uint32_t qm1 = q - 1;
    exp_tab.assign(qm1, 0);
    dlog.assign(q, DLOG_ZERO);
    elem a = 1;
    for (uint32_t k = 0; k < qm1; k++) {
        exp_tab[k] = a;
        if (dlog[a] != DLOG_ZERO) throw config_error("generator order defect");
        dlog[a] = k;
        a = mul_raw(a, generator);
    }
    if (a != 1) throw config_error("generator order defect");
    trace_tab.assign(q, 0);
    for (elem x = 0; x < q; x++) {
        elem s = 0, y = x;
        for (uint32_t i = 0; i < e; i++) {
            s = add_slow(s, y);
            y = pow_raw(y, p);
        }
        if (s >= p) throw config_error("trace landed outside the prime field");
        trace_tab[x] = s;
    }
}

FieldContext FieldContext::build(uint32_t p, uint32_t e,
                                 const std::vector<uint32_t>* modulus_override,
                                 const elem* generator_override, uint32_t q_bound) {
    return build_field_uncached(p, e, modulus_override, generator_override, q_bound);
}

FieldContext build_field(uint32_t p, uint32_t e, uint32_t q_bound) {
    return FieldContext::build(p, e, nullptr, nullptr, q_bound);
}

void FieldContext::save_cache(const std::string& path) const {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return;
    auto w32 = [&](uint32_t v) {
        unsigned char b[4] = {(unsigned char)(v & 0xff), (unsigned char)((v >> 8) & 0xff),
                              (unsigned char)((v >> 16) & 0xff), (unsigned char)((v >> 24) & 0xff)};
        std::fwrite(b, 1, 4, f);
    };
    std::fwrite("DWFF", 1, 4, f);
    w32(p);
    w32(e);
    for (uint32_t i = 0; i <= e; i++) w32(modulus[i]);
    for (elem x = 1; x < q; x++) w32(dlog[x]);
    std::fclose(f);
}

bool FieldContext::try_load_cached_tables(FieldContext& ctx, const std::string& path) {
    // Fills dlog/exp/generator from a DWFF file if it matches (p, e, modulus)
    // and passes validation. ctx must already carry p, e, q, modulus.
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return false;
    auto r32 = [&](uint32_t& v) {
        unsigned char b[4];
        if (std::fread(b, 1, 4, f) != 4) return false;
        v = (uint32_t)b[0] | ((uint32_t)b[1] << 8) | ((uint32_t)b[2] << 16) | ((uint32_t)b[3] << 24);
        return true;
    };
    char magic[4];
    bool ok = std::fread(magic, 1, 4, f) == 4 && std::memcmp(magic, "DWFF", 4) == 0;
    uint32_t fp = 0, fe = 0;
    ok = ok && r32(fp) && r32(fe) && fp == ctx.p && fe == ctx.e;
    for (uint32_t i = 0; ok && i <= ctx.e; i++) {
        uint32_t c = 0;
        ok = r32(c) && c == ctx.modulus[i];
    }
    std::vector<uint32_t> loaded(ctx.q, DLOG_ZERO);
    for (elem x = 1; ok && x < ctx.q; x++) ok = r32(loaded[x]);
    std::fclose(f);
    if (!ok) return false;
    uint32_t qm1 = ctx.q - 1;
    std::vector<elem> exp(qm1, 0);
    std::vector<bool> seen(qm1, false);
    for (elem x = 1; x < ctx.q; x++) {
        uint32_t k = loaded[x];
        if (k >= qm1 || seen[k]) return false;
        seen[k] = true;
        exp[k] = x;
    }
    if (exp[0] != 1) return false;
    elem g = exp[1 % qm1];
    // homomorphism check: successive powers must chain by mul_raw
    for (uint32_t k = 0; k < std::min<uint32_t>(qm1, 64); k++)
        if (ctx.mul_raw(exp[k], g) != exp[(k + 1) % qm1]) return false;
    ctx.generator = g;
    ctx.dlog = std::move(loaded);
    ctx.exp_tab = std::move(exp);
    return true;
}

FieldContext build_field_cached(uint32_t p, uint32_t e, const std::string& cache_dir,
                                uint32_t q_bound) {
    FieldContext fresh = build_field(p, e, q_bound);
    if (cache_dir.empty()) return fresh;
    std::string path = cache_dir + "/dwff-" + std::to_string(p) + "-" + std::to_string(e) + ".tbl";
    FieldContext probe;
    probe.p = fresh.p;
    probe.e = fresh.e;
    probe.q = fresh.q;
    probe.modulus = fresh.modulus;
    if (FieldContext::try_load_cached_tables(probe, path)) {
        probe.trace_tab = fresh.trace_tab;
        return probe;
    }
    fresh.save_cache(path);
    return fresh;
}

uint64_t teichmuller(uint32_t x, uint32_t p, uint32_t k) {
    if (k < 1) throw config_error("precision must be positive");
    uint64_t M = 1;
    for (uint32_t i = 0; i < k; i++) {
        if (M > UINT64_MAX / p) throw config_error("p^k does not fit in 64 bits");
        M *= p;
    }
    uint64_t w = x % M;
    auto mulmod = [M](uint64_t a, uint64_t b) { return (unsigned __int128)a * b % M; };
    for (uint32_t i = 0; i < k; i++) {
        uint64_t r = 1, b = w, n = p;
        while (n) {
            if (n & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            n >>= 1;
        }
        w = r;
    }
    return w;
}

}  // namespace dworkhg
