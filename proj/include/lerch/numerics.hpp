#ifndef LERCH_NUMERICS_HPP
#define LERCH_NUMERICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "branch.hpp"
#include "error.hpp"

namespace lerch
{

namespace detail
{

using lcplx = std::complex<long double>;

// log Gamma(s) for Re(s) >= 1/2 in extended precision: shift until |s| >= 18,
// then eight terms of the Stirling series. Only exp() of it is used, so the
// imaginary part is not normalised.
inline lcplx log_gamma_right(lcplx s)
{
    constexpr std::array<long double, 8> b2k = {1.0L / 6,    -1.0L / 30,  1.0L / 42,      -1.0L / 30,
                                                5.0L / 66,   -691.0L / 2730, 7.0L / 6, -3617.0L / 510};
    lcplx prod = 1.0L;
    while (std::abs(s) < 18.0L) {
        prod *= s;
        s += 1.0L;
    }
    const lcplx inv = 1.0L / s, inv2 = inv * inv;
    lcplx series = 0.0L, p = inv;
    for (std::size_t k = 1; k <= b2k.size(); ++k) {
        series += b2k[k - 1] / static_cast<long double>(2 * k * (2 * k - 1)) * p;
        p *= inv2;
    }
    const long double half_log_2pi = 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
    return (s - 0.5L) * std::log(s) - s + half_log_2pi + series - std::log(prod);
}

inline cplx narrow(lcplx v)
{
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Gamma for Re(s) >= 1/2.
inline cplx gamma_right(cplx s)
{
    return narrow(std::exp(log_gamma_right(lcplx(s))));
}

// sin(pi s) with the argument reduced by the nearest integer, so that zeros at
// integers are reproduced with full relative accuracy.
inline cplx sin_pi(cplx s)
{
    const double n = std::round(s.real());
    const cplx r(s.real() - n, s.imag());
    const cplx v = std::sin(pi * r);
    return (static_cast<long long>(n) % 2 == 0) ? v : -v;
}

inline lcplx sin_pi_ld(cplx s)
{
    const double n = std::round(s.real());
    const lcplx r(static_cast<long double>(s.real()) - n, s.imag());
    const lcplx v = std::sin(std::numbers::pi_v<long double> * r);
    return (static_cast<long long>(n) % 2 == 0) ? v : -v;
}

inline cplx cos_pi(cplx s)
{
    return sin_pi(s + 0.5);
}

} // namespace detail

/// Complex gamma function; reflection below Re(s) = 1/2.
inline cplx gamma(cplx s)
{
    if (is_nonpositive_integer(s)) {
        throw error(errc::argument_excluded, "gamma has a pole at nonpositive integers");
    }
    if (s.real() < 0.5) {
        const detail::lcplx g = std::exp(detail::log_gamma_right(detail::lcplx(1.0 - s)));
        return detail::narrow(std::numbers::pi_v<long double> / (detail::sin_pi_ld(s) * g));
    }
    return detail::gamma_right(s);
}

/// 1/Gamma(s); exactly zero at the nonpositive integers.
inline cplx recip_gamma(cplx s)
{
    if (is_nonpositive_integer(s)) {
        return 0.0;
    }
    if (s.real() < 0.5) {
        const detail::lcplx g = std::exp(detail::log_gamma_right(detail::lcplx(1.0 - s)));
        return detail::narrow(detail::sin_pi_ld(s) * g / std::numbers::pi_v<long double>);
    }
    return detail::narrow(std::exp(-detail::log_gamma_right(detail::lcplx(s))));
}

/// 1 / ((s + r - 1) Gamma(s)), finite everywhere for r >= 1.
///
/// Uses s (s + 1) ... (s + r - 2) / Gamma(s + r), which is the same function with
/// the removable singularity at s = 1 - r cancelled.
inline cplx q_factor(int r, cplx s)
{
    if (r < 0) {
        throw error(errc::invalid_params, "q_factor needs r >= 0");
    }
    if (r == 0) {
        if (std::abs(s - 1.0) <= geometric_tol) {
            throw error(errc::pole_at_one, "simple pole at s=1");
        }
        return recip_gamma(s) / (s - 1.0);
    }
    cplx prod = 1.0;
    for (int k = 0; k <= r - 2; ++k) {
        prod *= s + static_cast<double>(k);
    }
    return prod * recip_gamma(s + static_cast<double>(r));
}

} // namespace lerch

#endif
