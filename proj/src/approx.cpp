#include "dworkhg/approx.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <sstream>

namespace dworkhg {

CApprox sum_pairwise(std::vector<CApprox>& terms) {
    if (terms.empty()) return CApprox();
    size_t n = terms.size();
    while (n > 1) {
        size_t half = n / 2;
        for (size_t i = 0; i < half; ++i) terms[i] = terms[2 * i] + terms[2 * i + 1];
        if (n % 2) {
            terms[half] = terms[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    CApprox r = terms[0];
    terms.clear();
    return r;
}

bool round_to_integer(const CApprox& v, int64_t& out, double gate, double* residual_out) {
    BigFloat rounded = round(v.re);
    BigFloat resid = abs(v.re - rounded) + abs(v.im) + v.err;
    if (residual_out) *residual_out = resid.convert_to<double>();
    if (resid >= BigFloat(gate)) return false;
    if (abs(rounded) > BigFloat("9e18")) throw precision_error("rounded value exceeds int64 range");
    out = rounded.convert_to<int64_t>();
    return true;
}

RootTable::RootTable(uint32_t n_) : n(n_) {
    if (n == 0) throw config_error("root table order must be positive");
    zeta.resize(n);
    BigFloat two_pi = 8 * atan(BigFloat(1));
    for (uint32_t k = 0; k < n; ++k) {
        BigFloat ang = two_pi * k / n;
        CApprox z(cos(ang), sin(ang), BigFloat(0));
        z.err = CApprox::ulp_of(BigFloat(4));
        zeta[k] = z;
    }
}

std::string bigfloat_to_string(const BigFloat& v, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

BigFloat mpq_to_bigfloat(const mpq_class& r) {
    BigFloat num(r.get_num().get_str());
    BigFloat den(r.get_den().get_str());
    return num / den;
}

}  // namespace dworkhg
