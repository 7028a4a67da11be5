#pragma once

// 50-digit reimplementation of the log-space constant formulas, used as an
// independent oracle for the double-precision library path.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

namespace mp_oracle {

using mpfloat = boost::multiprecision::cpp_dec_float_50;

inline const mpfloat kPi = boost::math::constants::pi<mpfloat>();

inline mpfloat log10mp(const mpfloat& x) { return log(x) / log(mpfloat(10)); }

inline mpfloat nu_log10(const mpfloat& t, const mpfloat& K) {
    const mpfloat beta = 1 + t;
    return 8 * beta + log10mp(2 * t) - log10mp(1 + 2 * t) +
           2 * beta * log10mp(24 * kPi * kPi * K * K);
}

inline mpfloat cbeta_log10(const mpfloat& t, const mpfloat& K) {
    const mpfloat g = nu_log10(t, K);
    return 6 - (log10mp(1 + 2 * t) + log10mp(1 - pow(mpfloat(10), g))) /
                   (2 * (1 + t));
}

inline mpfloat inner_log10(const mpfloat& q, const mpfloat& t) {
    const mpfloat p = 2 - q;
    const mpfloat beta = 1 + t;
    return (2 * (p - 1) / p) * log10mp((1 - q) / q) -
           ((beta + 1) / (2 * beta)) * log10mp(kPi) - log10mp(mpfloat(4)) / p -
           log10mp(boost::math::tgamma(2 / p) * boost::math::tgamma(3 - 2 / p));
}

inline mpfloat exp_factor_log10(const mpfloat& K) {
    const mpfloat pi2 = kPi * kPi;
    return K * K * pi2 * (2 + pi2) * (2 + pi2) / (4 * log(mpfloat(3))) /
           log(mpfloat(10));
}

// full outer objective of M_beta at (t, q)
inline mpfloat outer_log10(const mpfloat& t, const mpfloat& q, const mpfloat& K,
                           const mpfloat& area) {
    const mpfloat beta = 1 + t;
    const mpfloat big = cbeta_log10(t, K) + log10mp(K) -
                        t / (2 * beta) * log10mp(kPi) - log10mp(mpfloat(2)) +
                        exp_factor_log10(K) + log10mp(area) / 2;
    const mpfloat addend = log10mp(kPi) / (2 * beta);
    const mpfloat hi = (std::max)(big, addend), lo = (std::min)(big, addend);
    return inner_log10(q, t) + hi + log10mp(1 + pow(mpfloat(10), lo - hi));
}

}  // namespace mp_oracle
