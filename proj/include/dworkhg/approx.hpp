#pragma once
// High-precision complex arithmetic with conservative absolute-error bounds.
// Every operation over-approximates the propagated error; a value can be
// rounded to an integer only through the gate in round_to_integer().
#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "dworkhg/field.hpp"

namespace dworkhg {

using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline unsigned bits_to_digits10(unsigned bits) { return (unsigned)(bits * 0.30103) + 4; }

// Sets the construction-default precision for BigFloat. Call before building
// any table at the target precision; existing values keep their precision.
inline void set_float_precision_bits(unsigned bits) {
    BigFloat::default_precision(bits_to_digits10(bits));
}

inline unsigned auto_precision_bits(uint32_t q, uint32_t d) {
    double need = std::log2((double)q) * (d + 3) + 40;
    unsigned bits = (unsigned)need + 1;
    return bits < 100 ? 100 : bits;
}

struct CApprox {
    BigFloat re, im, err;  // err: absolute error bound on the complex value

    CApprox() : re(0), im(0), err(0) {}
    CApprox(const BigFloat& r, const BigFloat& i, const BigFloat& e) : re(r), im(i), err(e) {}
    static CApprox exact_int(int64_t v) { return CApprox(BigFloat(v), BigFloat(0), BigFloat(0)); }
    static CApprox exact_real(const BigFloat& v) { return CApprox(v, BigFloat(0), BigFloat(0)); }

    BigFloat mag_upper() const {  // cheap upper bound on |z|
        return abs(re) + abs(im);
    }
    // rounding slop: a few ulps at the value's own working precision
    static BigFloat ulp_of(const BigFloat& m) {
        BigFloat scale = pow(BigFloat(10), -(int)m.precision() + 2);
        return abs(m) * scale;
    }

    CApprox operator+(const CApprox& o) const {
        CApprox r(re + o.re, im + o.im, err + o.err);
        r.err += ulp_of(r.re) + ulp_of(r.im);
        return r;
    }
    CApprox operator-(const CApprox& o) const {
        CApprox r(re - o.re, im - o.im, err + o.err);
        r.err += ulp_of(r.re) + ulp_of(r.im);
        return r;
    }
    CApprox operator*(const CApprox& o) const {
        CApprox r(re * o.re - im * o.im, re * o.im + im * o.re,
                  mag_upper() * o.err + o.mag_upper() * err + err * o.err);
        r.err += ulp_of(r.re) + ulp_of(r.im);
        return r;
    }
    CApprox operator/(const CApprox& o) const {
        BigFloat d = o.re * o.re + o.im * o.im;
        if (d == 0) throw precision_error("division by an approximate zero");
        CApprox r((re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d, BigFloat(0));
        // |1/w| error magnification: e/|w| + |z| e_w / |w|^2, with |w| lower-bounded
        BigFloat wmag = sqrt(d);
        if (o.err >= wmag) throw precision_error("divisor error bound covers zero");
        BigFloat wlow = wmag - o.err;
        r.err = err / wlow + mag_upper() * o.err / (wlow * wlow) + ulp_of(r.re) + ulp_of(r.im);
        return r;
    }
    CApprox conj() const { return CApprox(re, -im, err); }
    CApprox scaled(int64_t k) const {
        CApprox r(re * k, im * k, err * abs(BigFloat(k)));
        r.err += ulp_of(r.re) + ulp_of(r.im);
        return r;
    }
};

// Deterministic pairwise tree reduction, independent of thread count.
CApprox sum_pairwise(std::vector<CApprox>& terms);

// Rounds a real-valued CApprox to the nearest integer; the distance to that
// integer plus err must clear the gate (default 1e-6), and the imaginary part
// must be below the same gate. Returns false on gate failure.
bool round_to_integer(const CApprox& v, int64_t& out, double gate = 1e-6,
                      double* residual_out = nullptr);

// Roots of unity and additive-character tables at the current precision.
class RootTable {
public:
    uint32_t n;
    std::vector<CApprox> zeta;  // zeta[k] = exp(2 pi i k / n), err = ulp

    explicit RootTable(uint32_t n);
    const CApprox& operator[](uint32_t k) const { return zeta[k % n]; }
};

std::string bigfloat_to_string(const BigFloat& v, unsigned digits = 30);

// Exact rational -> BigFloat at the current default precision.
BigFloat mpq_to_bigfloat(const mpq_class& r);

}  // namespace dworkhg
