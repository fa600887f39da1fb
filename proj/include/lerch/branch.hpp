#ifndef LERCH_BRANCH_HPP
#define LERCH_BRANCH_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>

#include "error.hpp"

namespace lerch
{

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Absolute distance under which a point counts as lying on a cut or on a
/// distinguished value (z = 1, w = -n, ...).
inline constexpr double geometric_tol = 1e-12;

/// The pair of angles fixing every branch choice.
///
/// `phi` selects the argument range [phi, phi + 2 pi) used by log and all complex
/// powers, and with it the family of cuts -n + e^{i phi} R_{>=0} in the w-plane.
/// `phi_prime` fixes the direction of the single cut 1 + e^{i phi'} R_{>=0} in the
/// z-plane. The defaults give the classical principal branch with the cut [1, inf).
class BranchConfig
{
public:
    BranchConfig() = default;

    BranchConfig(double phi, double phi_prime) : m_phi(phi), m_phi_prime(phi_prime)
    {
        if (!std::isfinite(phi) || !std::isfinite(phi_prime)) {
            throw error(errc::branch_config_invalid, "branch angles must be finite");
        }
        const double k = phi / two_pi;
        if (std::abs(k - std::round(k)) * two_pi < geometric_tol) {
            throw error(errc::branch_config_invalid, "phi must not be a multiple of 2*pi");
        }
        if (std::cos(phi_prime) < -geometric_tol) {
            throw error(errc::branch_config_invalid, "phi_prime must satisfy Re(exp(i*phi_prime)) >= 0");
        }
    }

    double phi() const noexcept
    {
        return m_phi;
    }
    double phi_prime() const noexcept
    {
        return m_phi_prime;
    }

    /// True when phi_prime is a multiple of 2 pi, i.e. the z-cut is [1, inf).
    bool z_cut_is_real_axis() const noexcept
    {
        const double k = m_phi_prime / two_pi;
        return std::abs(k - std::round(k)) * two_pi < geometric_tol;
    }

    friend bool operator==(const BranchConfig &, const BranchConfig &) = default;

private:
    double m_phi = -pi;
    double m_phi_prime = 0.0;
};

/// Argument of lambda taken in [phi, phi + 2 pi).
inline double principal_arg(cplx lambda, const BranchConfig &cfg)
{
    if (lambda == cplx(0.0, 0.0)) {
        throw error(errc::argument_excluded, "argument of zero is undefined");
    }
    const double phi = cfg.phi();
    double offset = std::fmod(std::arg(lambda) - phi, two_pi);
    if (offset < 0.0) {
        offset += two_pi;
    }
    double theta = phi + offset;
    if (theta >= phi + two_pi) {
        theta -= two_pi;
    }
    if (theta < phi) {
        theta = phi;
    }
    return theta;
}

inline cplx principal_log(cplx lambda, const BranchConfig &cfg)
{
    return {std::log(std::abs(lambda)), principal_arg(lambda, cfg)};
}

/// base^exponent = exp(exponent * log base) on the configured branch.
inline cplx cpow(cplx base, cplx exponent, const BranchConfig &cfg)
{
    if (base == cplx(0.0, 0.0)) {
        throw error(errc::argument_excluded, "complex power of zero");
    }
    const double a = std::arg(base);
    const double k = std::round((principal_arg(base, cfg) - a) / two_pi);
    if (k == 0.0) {
        return std::exp(exponent * cplx(std::log(std::abs(base)), a));
    }
    // A shifted argument such as 2 pi + a carries an absolute rounding error that
    // the exponent multiplies; form it in extended precision.
    using lcplx = std::complex<long double>;
    const long double arg = static_cast<long double>(a) + k * 2.0L * std::numbers::pi_v<long double>;
    const lcplx v = std::exp(lcplx(exponent) * lcplx(std::log(static_cast<long double>(std::abs(base))), arg));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// The integer nu with log r = ln r + 2 pi i nu for every r > 0.
inline int nu(const BranchConfig &cfg)
{
    return static_cast<int>(std::ceil(cfg.phi() / two_pi));
}

namespace detail
{

// Distance from p to the ray origin + r * dir, r >= 0, |dir| = 1.
inline double distance_to_ray(cplx p, cplx origin, cplx dir)
{
    const cplx rel = (p - origin) * std::conj(dir);
    if (rel.real() <= 0.0) {
        return std::abs(p - origin);
    }
    return std::abs(rel.imag());
}

inline bool near_integer(double x)
{
    return std::abs(x - std::round(x)) <= geometric_tol;
}

} // namespace detail

/// Membership of w in the family of half lines -n + e^{i phi} R_{>=0}, n >= 0.
inline bool on_cut_w(cplx w, const BranchConfig &cfg)
{
    const cplx dir = std::polar(1.0, cfg.phi());
    auto hits = [&](double n) { return n >= 0.0 && detail::distance_to_ray(w, cplx(-n, 0.0), dir) <= geometric_tol; };

    // Candidates: the copy starting at 0, the copy nearest to w horizontally, and the
    // copies whose line passes through w.
    double candidates[6] = {0.0, std::floor(-w.real()), std::ceil(-w.real()), 0.0, 0.0, 0.0};
    int count = 3;
    const double s = dir.imag();
    if (std::abs(s) > 1e-300) {
        // (w + n) conj(dir) has zero imaginary part when n = Im(w conj dir) / sin(phi).
        const double n_star = (w * std::conj(dir)).imag() / s;
        candidates[count++] = std::floor(n_star);
        candidates[count++] = std::ceil(n_star);
    }
    for (int i = 0; i < count; ++i) {
        if (hits(std::max(candidates[i], 0.0))) {
            return true;
        }
    }
    return false;
}

/// Membership of z in the half line 1 + e^{i phi'} R_{>=0}.
inline bool on_cut_z(cplx z, const BranchConfig &cfg)
{
    return detail::distance_to_ray(z, cplx(1.0, 0.0), std::polar(1.0, cfg.phi_prime())) <= geometric_tol;
}

/// Membership of w in the symmetrised cut: the copies n + 1 - e^{i phi} R_{>=0}
/// together with the w-cut itself. The first family is exactly 1 - (w-cut).
inline bool on_cut_sym(cplx w, const BranchConfig &cfg)
{
    return on_cut_w(w, cfg) || on_cut_w(cplx(1.0, 0.0) - w, cfg);
}

enum class DomainVariant { full, w_on_cut, z_on_cut, both_on_cut };

inline const char *to_string(DomainVariant v)
{
    switch (v) {
        case DomainVariant::full:
            return "D1_full";
        case DomainVariant::w_on_cut:
            return "D1_w_on_cut";
        case DomainVariant::z_on_cut:
            return "D1_z_on_cut";
        case DomainVariant::both_on_cut:
            return "D1_both_on_cut";
    }
    return "unknown";
}

struct DomainClass {
    DomainVariant variant = DomainVariant::full;
    bool excluded = false; // w is a nonpositive integer
    bool pole = false;     // z = 1 and s = 1

    friend bool operator==(const DomainClass &, const DomainClass &) = default;
};

inline bool is_nonpositive_integer(cplx x)
{
    return std::abs(x.imag()) <= geometric_tol && x.real() <= geometric_tol && detail::near_integer(x.real());
}

inline DomainClass classify(cplx z, cplx s, cplx w, const BranchConfig &cfg)
{
    const bool w_cut = on_cut_w(w, cfg);
    const bool z_cut = on_cut_z(z, cfg);
    DomainClass out;
    if (w_cut && z_cut) {
        out.variant = DomainVariant::both_on_cut;
    } else if (w_cut) {
        out.variant = DomainVariant::w_on_cut;
    } else if (z_cut) {
        out.variant = DomainVariant::z_on_cut;
    }
    out.excluded = is_nonpositive_integer(w);
    out.pole = std::abs(z - 1.0) <= geometric_tol && std::abs(s - 1.0) <= geometric_tol;
    return out;
}

namespace detail
{

inline void require_real_z_cut(const BranchConfig &cfg)
{
    if (!cfg.z_cut_is_real_axis()) {
        throw error(errc::branch_config_invalid, "functional-equation domains need phi_prime in 2*pi*Z");
    }
}

// Open strip 0 < Re x < 1 minus the closure of the symmetrised cut; the part of it
// connected to (0, 1).
inline bool in_strip_component(cplx x, const BranchConfig &cfg)
{
    if (!(x.real() > geometric_tol && x.real() < 1.0 - geometric_tol)) {
        return false;
    }
    const double c = std::cos(cfg.phi());
    if (c <= 0.0) {
        // The half lines all head left (w-cut) or right (mirrored copies) away from the
        // strip, so nothing inside it is removed.
        return true;
    }
    // Otherwise the copies starting at 0 and at 1 cross the strip and bound the
    // component of (0, 1); every other copy lies beyond them.
    const double slope = std::tan(cfg.phi());
    const double lower0 = x.real() * slope;
    const double lower1 = (x.real() - 1.0) * slope;
    const double lo = std::min(lower0, lower1);
    const double hi = std::max(lower0, lower1);
    return x.imag() > lo + geometric_tol && x.imag() < hi - geometric_tol;
}

} // namespace detail

/// Both a and w in the component U of C \ (symmetrised cut U (Z + iR)) that
/// contains (0, 1).
inline bool in_domain_eq(cplx a, cplx w, const BranchConfig &cfg)
{
    detail::require_real_z_cut(cfg);
    return detail::in_strip_component(a, cfg) && detail::in_strip_component(w, cfg);
}

/// The open-set condition under which both sides of Lerch's transformation
/// formula are holomorphic.
inline bool in_domain_lerch(cplx a, cplx w, const BranchConfig &cfg)
{
    detail::require_real_z_cut(cfg);
    const bool a_on_lines = detail::near_integer(a.real()) && a.imag() <= geometric_tol;
    const bool w_on_lines = detail::near_integer(w.real());
    return !on_cut_sym(a, cfg) && !a_on_lines && !on_cut_w(w, cfg) && !w_on_lines;
}

} // namespace lerch

#endif
