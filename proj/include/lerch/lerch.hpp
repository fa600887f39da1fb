#ifndef LERCH_LERCH_HPP
#define LERCH_LERCH_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "apostol.hpp"
#include "branch.hpp"
#include "error.hpp"
#include "numerics.hpp"
#include "quadrature.hpp"

namespace lerch
{

/// Free constants of the continuation formula.
///
/// `eps` is an upper bound on the contour lift; the contour chooser may shrink it
/// to keep the lifted path clear of poles and of the t-plane branch cut.
/// `quad_tol` and `series_tol` are relative tolerances.
struct EvalParams {
    double alpha = 1.0;
    int N = 0;
    int m = 0;
    double eps = 0.5;
    double quad_tol = 1e-12;
    double series_tol = 1e-12;

    friend bool operator==(const EvalParams &, const EvalParams &) = default;
};

enum class Method { series, continuation, special_value, closed_form };

inline const char *to_string(Method m)
{
    switch (m) {
        case Method::series:
            return "series";
        case Method::continuation:
            return "continuation";
        case Method::special_value:
            return "special_value";
        case Method::closed_form:
            return "closed_form";
    }
    return "unknown";
}

struct EvalResult {
    cplx value{0.0, 0.0};
    double abs_err_est = 0.0;
    Method method = Method::series;
    DomainClass domain;
    EvalParams params;
    // Set when z is within 1e-3 of 1 but not equal: the Taylor subtraction then
    // amplifies rounding by roughly `amplification`.
    bool ill_conditioned = false;
    double amplification = 1.0;
};

namespace detail
{

inline cplx int_power(cplx z, int n)
{
    cplx out = 1.0;
    for (int i = 0; i < n; ++i) {
        out *= z;
    }
    return out;
}

// log(x) on the configured branch differs from the standard principal log by
// exactly 2 pi i nu. This is what lets the tail terms n >= N be written as one
// Laplace-type integral.
inline bool branch_consistent(cplx x, const BranchConfig &cfg)
{
    if (x.real() <= 0.0) {
        return false;
    }
    const double shift = principal_arg(x, cfg) - std::arg(x);
    return std::abs(shift - two_pi * nu(cfg)) < 1e-9;
}

inline bool near_one(cplx z)
{
    return std::abs(z - 1.0) <= geometric_tol;
}

inline void check_excluded(cplx z, cplx s, cplx w)
{
    if (is_nonpositive_integer(w)) {
        throw error(errc::argument_excluded, "w is a nonpositive integer");
    }
    if (near_one(z) && std::abs(s - 1.0) <= geometric_tol) {
        throw error(errc::pole_at_one, "simple pole at s=1");
    }
}

} // namespace detail

/// Parameters used when the caller supplies none.
inline EvalParams default_params(cplx z, cplx s, cplx w, const BranchConfig &cfg)
{
    EvalParams p;
    p.alpha = (z == cplx(0.0, 0.0)) ? 1.0 : std::max(1.0, std::log(std::abs(z)) + 1.0);
    p.N = std::max(0, static_cast<int>(std::ceil(1.0 - w.real())) + 2);
    while (!detail::branch_consistent(w + static_cast<double>(p.N), cfg)) {
        ++p.N;
        if (p.N > 1000000) {
            throw error(errc::invalid_params, "no admissible head length N");
        }
    }
    p.m = std::max(0, static_cast<int>(std::ceil(-s.real())) + 2);
    return p;
}

inline void validate_params(const EvalParams &p, cplx z, cplx s, cplx w, const BranchConfig &cfg)
{
    if (!(p.alpha >= 1.0)) {
        throw error(errc::invalid_params, "alpha must be >= 1");
    }
    if (z != cplx(0.0, 0.0) && !(p.alpha > std::log(std::abs(z)))) {
        throw error(errc::invalid_params, "alpha must exceed ln|z|");
    }
    if (p.N < 0 || p.m < 0) {
        throw error(errc::invalid_params, "N and m must be nonnegative");
    }
    if (!(p.N + w.real() > 0.0)) {
        throw error(errc::invalid_params, "N + Re(w) must be positive");
    }
    if (!detail::branch_consistent(w + static_cast<double>(p.N), cfg)) {
        throw error(errc::invalid_params, "N too small: log(n + w) for n >= N crosses the w-cut");
    }
    if (!(p.m + s.real() > 0.0)) {
        throw error(errc::invalid_params, "m + Re(s) must be positive");
    }
    if (!(p.eps > 0.0) || !(p.quad_tol > 0.0) || !(p.series_tol > 0.0)) {
        throw error(errc::invalid_params, "eps and tolerances must be positive");
    }
}

/// Direct summation of z^n (n + w)^{-s} inside the region of absolute convergence.
inline EvalResult phi_series(cplx z, cplx s, cplx w, const BranchConfig &cfg, double tol)
{
    if (is_nonpositive_integer(w)) {
        throw error(errc::argument_excluded, "w is a nonpositive integer");
    }
    const double az = std::abs(z);
    const bool on_circle = std::abs(az - 1.0) <= 1e-15;
    if (!(az < 1.0 || (on_circle && s.real() > 1.0))) {
        throw error(errc::outside_series_region, "series needs |z| < 1, or |z| = 1 with Re(s) > 1");
    }
    EvalResult out;
    out.method = Method::series;
    out.domain = classify(z, s, w, cfg);
    out.params.series_tol = tol;

    const double sigma = s.real();
    const double tau = s.imag();
    const int nu_v = nu(cfg);
    constexpr long max_terms = 20000000;

    cplx sum = 0.0;
    cplx zn = 1.0;
    double abs_sum = 0.0;
    for (long n = 0; n < max_terms; ++n) {
        const cplx x = w + static_cast<double>(n);
        if (n > 0 && detail::branch_consistent(x, cfg) && x.real() > 0.0) {
            // Majorant for every k >= n, with |arg_std(k + w)| <= atan(|Im w| / (k + Re w)).
            const double theta = std::atan(std::abs(w.imag()) / x.real());
            const double branch = std::exp(two_pi * nu_v * tau + std::abs(tau) * theta);
            double tail;
            if (az == 0.0) {
                tail = 0.0;
            } else if (!on_circle) {
                double f, ratio;
                if (sigma >= 0.0) {
                    f = std::pow(x.real(), -sigma);
                    ratio = az;
                } else {
                    const double base = static_cast<double>(n) + std::abs(w);
                    f = std::pow(base, -sigma);
                    ratio = az * std::pow((base + 1.0) / base, -sigma);
                }
                tail = (ratio < 1.0) ? branch * std::pow(az, static_cast<double>(n)) * f / (1.0 - ratio)
                                     : std::numeric_limits<double>::infinity();
            } else {
                const double xr = x.real();
                tail = branch * (std::pow(xr, -sigma) + std::pow(xr, 1.0 - sigma) / (sigma - 1.0));
            }
            if (tail <= tol * std::max(std::abs(sum), 1e-300)) {
                out.value = sum;
                out.abs_err_est = tail + 4.0 * std::numeric_limits<double>::epsilon() * abs_sum;
                return out;
            }
        }
        if (az == 0.0 && n > 0) {
            break;
        }
        const cplx term = zn * cpow(x, -s, cfg);
        sum += term;
        abs_sum += std::abs(term);
        zn *= z;
    }
    if (az == 0.0) {
        out.value = sum;
        return out;
    }
    throw error(errc::convergence_failure, "series did not reach the tolerance within the term budget");
}

/// t e^{-t (N + w)} / (1 - e^{-t} z), with the removable value at t = 0 for z = 1.
inline cplx phi_integrand(cplx z, cplx w, cplx t, int N)
{
    const cplx x = w + static_cast<double>(N);
    if (detail::near_one(z)) {
        if (t == cplx(0.0, 0.0)) {
            return 1.0;
        }
        if (std::abs(t) < 0.1) {
            // t / (1 - e^{-t})
            const cplx t2 = t * t;
            const cplx ratio =
                1.0 + t / 2.0 + t2 * (1.0 / 12.0 + t2 * (-1.0 / 720.0 + t2 * (1.0 / 30240.0 - t2 / 1209600.0)));
            return ratio * std::exp(-t * x);
        }
    }
    if (t == cplx(0.0, 0.0)) {
        return 0.0;
    }
    const cplx den = 1.0 - std::exp(-t) * z;
    if (std::abs(den) < 1e-13) {
        throw error(errc::pole_on_path, "integrand pole e^t = z hit");
    }
    return t * std::exp(-t * x) / den;
}

/// Order-m Taylor polynomial of phi_integrand around t = 0.
inline cplx phi_taylor(cplx z, cplx w, cplx t, int N, int m)
{
    const cplx x = w + static_cast<double>(N);
    cplx sum = 0.0;
    cplx power = 1.0; // (-t)^r / r!
    for (int r = 0; r <= m; ++r) {
        sum += apostol_eval(r, z, x) * power;
        power *= -t / static_cast<double>(r + 1);
    }
    return sum;
}

namespace detail
{

// Taylor coefficients c_k of phi_integrand at t = 0, k = 0..K, by numeric
// power-series division. c_k = B_k(z, N + w) (-1)^k / k!.
inline std::vector<cplx> integrand_taylor_coefficients(cplx z, cplx x, int K)
{
    std::vector<cplx> num(K + 1), den(K + 1), out(K + 1);
    if (near_one(z)) {
        // e^{-tx} / ((1 - e^{-t}) / t)
        cplx p = 1.0;
        double sign = 1.0;
        double fact = 1.0;
        for (int k = 0; k <= K; ++k) {
            num[k] = p;
            p *= -x / static_cast<double>(k + 1);
            fact *= static_cast<double>(k + 1);
            den[k] = sign / fact; // (-1)^k / (k + 1)!
            sign = -sign;
        }
    } else {
        // t e^{-tx} / (1 - z e^{-t})
        cplx p = 1.0;
        double inv_fact = 1.0;
        for (int k = 0; k <= K; ++k) {
            if (k >= 1) {
                num[k] = p;
                p *= -x / static_cast<double>(k);
                inv_fact /= static_cast<double>(k);
                den[k] = -z * ((k % 2 == 0) ? inv_fact : -inv_fact);
            }
        }
        den[0] = 1.0 - z;
    }
    for (int k = 0; k <= K; ++k) {
        cplx acc = num[k];
        for (int j = 1; j <= k; ++j) {
            acc -= den[j] * out[k - j];
        }
        out[k] = acc / den[0];
    }
    return out;
}

// Distance from t = 0 to the nearest pole of phi_integrand.
inline double integrand_pole_radius(cplx z)
{
    if (z == cplx(0.0, 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    if (near_one(z)) {
        return two_pi;
    }
    const cplx L = std::log(z);
    return std::min({std::abs(L), std::abs(L + cplx(0.0, two_pi)), std::abs(L - cplx(0.0, two_pi))});
}

// phi_N(t) - phi_{N,m}(t), switching to the Taylor tail near t = 0 where the
// direct difference cancels catastrophically.
class TaylorRemainder
{
public:
    TaylorRemainder(cplx z, cplx w, int N, int m, double alpha) : m_z(z), m_w(w), m_N(N), m_m(m)
    {
        const cplx x = w + static_cast<double>(N);
        const double rho = integrand_pole_radius(z);
        m_switch = std::min({0.5 * rho, 1.5 / std::max(std::abs(x), 1e-300), alpha});
        int extra = 60;
        if (std::isfinite(rho) && rho < 1.0) {
            extra = std::min(extra, static_cast<int>(280.0 / std::log10(1.0 / rho)) - m - 1);
        }
        extra = std::max(extra, 8);
        m_coeffs = integrand_taylor_coefficients(z, x, m + 1 + extra);
    }

    cplx operator()(cplx t) const
    {
        if (std::abs(t) < m_switch) {
            cplx acc = 0.0;
            for (int k = static_cast<int>(m_coeffs.size()) - 1; k > m_m; --k) {
                acc = acc * t + m_coeffs[k];
            }
            // acc holds sum_{k > m} c_k t^{k - m - 1}
            return acc * std::pow(t, m_m + 1);
        }
        return phi_integrand(m_z, m_w, t, m_N) - phi_taylor(m_z, m_w, t, m_N, m_m);
    }

private:
    cplx m_z, m_w;
    int m_N, m_m;
    double m_switch = 0.0;
    std::vector<cplx> m_coeffs;
};

} // namespace detail

/// The tail integral over [alpha, inf) of e^{-t(N+w)} / (1 - e^{-t} z) t^{s-1}.
inline QuadResult compute_H(cplx z, cplx s, cplx w, const EvalParams &p, const BranchConfig &cfg,
                            std::optional<Tolerance> tol = std::nullopt)
{
    const cplx x = w + static_cast<double>(p.N);
    const double decay = x.real();
    if (!(decay > 0.0)) {
        throw error(errc::argument_excluded, "N + Re(w) must be positive");
    }
    const double zr = std::abs(z) * std::exp(-p.alpha);
    if (!(zr < 1.0)) {
        throw error(errc::invalid_params, "|z| must be below e^alpha");
    }
    auto g = [&](cplx t) { return std::exp(-t * x) / (1.0 - std::exp(-t) * z) * cpow(t, s - 1.0, cfg); };
    TailMajorant bound;
    bound.C = std::exp(-decay * p.alpha - two_pi * nu(cfg) * s.imag()) / (1.0 - zr);
    bound.power = s.real() - 1.0;
    return integrate_tail(g, p.alpha, decay, tol.value_or(Tolerance{1e-300, p.quad_tol}), bound);
}

/// Closed-form integral of the Taylor polynomial against t^{s-2} over [0, alpha].
/// Has poles at s = 1 - r; use compute_J_over_gamma near them.
inline cplx compute_J(cplx z, cplx s, cplx w, const EvalParams &p, const BranchConfig &cfg)
{
    const cplx x = w + static_cast<double>(p.N);
    cplx sum = 0.0;
    double fact = 1.0;
    for (int r = 0; r <= p.m; ++r) {
        if (r > 0) {
            fact *= r;
        }
        const cplx b = apostol_eval(r, z, x);
        if (b == cplx(0.0, 0.0)) {
            continue;
        }
        const cplx e = s + static_cast<double>(r - 1);
        if (std::abs(e) <= geometric_tol) {
            if (r == 0) {
                throw error(errc::pole_at_one, "simple pole at s=1");
            }
            throw error(errc::argument_excluded, "J has a pole at s = 1 - r; use the gamma-combined form");
        }
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        sum += b / fact * sign * cpow(cplx(p.alpha, 0.0), e, cfg) / e;
    }
    return sum;
}

/// J / Gamma(s) with each pole 1/(s + r - 1) paired with 1/Gamma(s) through
/// q_factor, so the sum is finite at every nonpositive integer s.
namespace detail
{

// J / Gamma(s) with the polynomial integrated up to `upper` instead of alpha.
inline cplx j_over_gamma_to(cplx z, cplx s, cplx w, const EvalParams &p, const BranchConfig &cfg, double upper)
{
    const cplx x = w + static_cast<double>(p.N);
    const bool z_is_one = detail::near_one(z);
    cplx sum = 0.0;
    double fact = 1.0;
    for (int r = 0; r <= p.m; ++r) {
        if (r > 0) {
            fact *= r;
        }
        if (r == 0 && !z_is_one) {
            continue; // B_0 = 0 away from z = 1
        }
        const cplx b = apostol_eval(r, z, x);
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        sum += b / fact * sign * cpow(cplx(upper, 0.0), s + static_cast<double>(r - 1), cfg) * q_factor(r, s);
    }
    return sum;
}

} // namespace detail

inline cplx compute_J_over_gamma(cplx z, cplx s, cplx w, const EvalParams &p, const BranchConfig &cfg)
{
    return detail::j_over_gamma_to(z, s, w, p, cfg, p.alpha);
}

/// Integration path for the near-origin integral.
struct Contour {
    std::vector<cplx> vertices;
    // Nonzero when the straight path lies on the wrong side of the pole and the
    // result must be corrected by residue_sign * 2 pi i * residue.
    int residue_sign = 0;
    std::optional<cplx> pole; // the pole log z nearest the segment, when relevant
    double eps = 0.0;         // lift parameter actually used (0 for straight paths)
    bool lifted = false;
};

/// Picks the path from 0 to alpha for the near-origin integral.
///
/// The relevant pole of the integrand is t0 = log z. The side on which the path
/// must pass t0 is fixed by continuity from |z| < 1 inside the z-plane cut along
/// 1 + e^{i phi'} R_{>=0}: with theta = arg(z - 1) taken in [phi', phi' + 2 pi),
/// the path runs below t0 when theta < pi and above it otherwise. Points on the
/// cut take theta = phi', i.e. the boundary value from the counter-clockwise side.
inline Contour choose_contour(cplx z, const EvalParams &p, const BranchConfig &cfg)
{
    Contour c;
    const double alpha = p.alpha;
    c.vertices = {cplx(0.0, 0.0), cplx(alpha, 0.0)};
    if (z == cplx(0.0, 0.0) || detail::near_one(z)) {
        return c;
    }
    if (!(std::abs(z) < std::exp(alpha))) {
        throw error(errc::invalid_params, "|z| must be below e^alpha");
    }
    const cplx t0 = std::log(z);
    c.pole = t0;
    if (t0.real() <= 0.0 || t0.real() >= alpha) {
        const double d = (t0.real() <= 0.0) ? std::abs(t0) : std::abs(t0 - alpha);
        if (d < 1e-10) {
            throw error(errc::pole_on_path, "integrand pole at an endpoint of the path");
        }
        return c;
    }

    const double phi_p = std::remainder(cfg.phi_prime(), two_pi);
    double theta = phi_p;
    if (!on_cut_z(z, cfg)) {
        double off = std::fmod(std::arg(z - 1.0) - phi_p, two_pi);
        if (off < 0.0) {
            off += two_pi;
        }
        theta = phi_p + off;
    }
    const int straight_side = (t0.imag() > 0.0) ? -1 : ((t0.imag() < 0.0) ? +1 : 0);
    int side = (theta < pi) ? -1 : +1; // -1: path below t0, +1: path above
    if (std::abs(theta - pi) <= 1e-12 && straight_side != 0) {
        // z on the line opposite the cut, where arg(z - 1) rounds to pi: the limit
        // from the side std::log assigns the pole to
        side = straight_side;
    }

    if (alpha - t0.real() < 1e-10 && std::abs(t0.imag()) < 1e-10) {
        throw error(errc::pole_on_path, "integrand pole at the end of the path");
    }
    double eps = std::min({p.eps, alpha / 2.0, t0.real() / 2.0});
    const double c_phi = std::cos(cfg.phi());
    if (c_phi > 0.0) {
        // keep the lifted corner, at angle up to atan(2 eps), off the ray e^{i phi} R_{>0}
        eps = std::min(eps, 0.999 * 0.5 * std::sqrt(1.0 / (c_phi * c_phi) - 1.0));
    }
    const double d = std::abs(t0.imag());
    if (d >= eps * eps) {
        if (straight_side != side) {
            // The straight path and the required path enclose the pole; both must stay
            // clear of the ray e^{i phi} R_{>0} for the residue correction to hold.
            const double ray = std::remainder(cfg.phi(), two_pi);
            const double at0 = std::arg(t0);
            if ((ray > 0.0 && ray < at0) || (ray < 0.0 && ray > at0)) {
                throw error(errc::argument_excluded,
                            "no pole-avoiding path in the cut t-plane for this z and branch");
            }
            c.residue_sign = -side;
        }
        return c;
    }
    if (eps < 1e-8) {
        throw error(errc::ill_conditioned, "pole too close to the path to lift around it");
    }
    const double h = (side * t0.imag() <= 0.0) ? eps * eps : d + eps * eps;
    const cplx lift(0.0, side * h);
    c.vertices = {cplx(0.0, 0.0), cplx(eps, 0.0), cplx(eps, 0.0) + lift, cplx(alpha, 0.0) + lift, cplx(alpha, 0.0)};
    c.eps = eps;
    c.lifted = true;
    return c;
}

namespace detail
{

// With `split` set, the Taylor polynomial is subtracted on [0, split] only and
// the plain integrand is used from there on; the caller then owes J taken up to
// split rather than alpha. split must not exceed the first vertex after 0.
inline QuadResult integrate_near_origin(cplx z, cplx s, cplx w, const EvalParams &p, const BranchConfig &cfg,
                                        const Contour &contour, Tolerance tol,
                                        std::optional<double> split = std::nullopt)
{
    const TaylorRemainder remainder(z, w, p.N, p.m, split ? *split : p.alpha);
    auto f = [&](cplx t) { return remainder(t) * cpow(t, s - 2.0, cfg); };
    QuadResult q;
    if (!split) {
        q = integrate_polyline(f, std::span<const cplx>(contour.vertices), tol);
    } else {
        const std::vector<cplx> inner{cplx(0.0, 0.0), cplx(*split, 0.0)};
        std::vector<cplx> outer{cplx(*split, 0.0)};
        outer.insert(outer.end(), contour.vertices.begin() + 1, contour.vertices.end());
        q = integrate_polyline(f, std::span<const cplx>(inner), tol);
        auto g = [&](cplx t) { return phi_integrand(z, w, t, p.N) * cpow(t, s - 2.0, cfg); };
        const QuadResult q2 = integrate_polyline(g, std::span<const cplx>(outer), tol);
        q.value += q2.value;
        q.abs_err_est += q2.abs_err_est;
        q.evaluations += q2.evaluations;
    }
    if (contour.residue_sign != 0) {
        const cplx t0 = *contour.pole;
        const cplx x = w + static_cast<double>(p.N);
        const cplx residue = t0 * std::exp(-t0 * x) * cpow(t0, s - 2.0, cfg);
        q.value += static_cast<double>(contour.residue_sign) * cplx(0.0, two_pi) * residue;
    }
    return q;
}

} // namespace detail

/// The Taylor-subtracted integral over a pole-avoiding path from 0 to alpha.
inline QuadResult compute_I(cplx z, cplx s, cplx w, const EvalParams &p, const BranchConfig &cfg)
{
    if (!(p.m + s.real() > 0.0)) {
        throw error(errc::invalid_params, "m + Re(s) must be positive");
    }
    return detail::integrate_near_origin(z, s, w, p, cfg, choose_contour(z, p, cfg), Tolerance{1e-300, p.quad_tol});
}

/// Evaluates the continuation formula
///   head + z^N e^{-4 pi i nu s} [ (H + I) / Gamma(s) + J / Gamma(s) ]
/// regardless of where (z, s, w) lies.
inline EvalResult lerch_phi_continuation(cplx z, cplx s, cplx w, const BranchConfig &cfg,
                                         std::optional<EvalParams> params = std::nullopt)
{
    detail::check_excluded(z, s, w);
    const EvalParams p = params ? *params : default_params(z, s, w, cfg);
    validate_params(p, z, s, w, cfg);

    EvalResult out;
    out.method = Method::continuation;
    out.domain = classify(z, s, w, cfg);
    out.params = p;

    cplx head = 0.0;
    double head_abs = 0.0;
    cplx zn = 1.0;
    for (int n = 0; n < p.N; ++n) {
        const cplx term = zn * cpow(w + static_cast<double>(n), -s, cfg);
        head += term;
        head_abs += std::abs(term);
        zn *= z;
    }
    const cplx prefactor = zn * std::exp(cplx(0.0, -2.0 * two_pi * nu(cfg)) * s);
    const cplx rg = recip_gamma(s);

    // Beyond the pole radius the Taylor polynomial is large and cancels against J.
    // Subtracting it only on [0, split] and taking J up to split is the same sum.
    const Contour contour = choose_contour(z, p, cfg);
    const bool boundary_value = contour.lifted && out.domain.variant != DomainVariant::full &&
                                out.domain.variant != DomainVariant::w_on_cut;
    double split = std::min(p.alpha, 0.5 * detail::integrand_pole_radius(z));
    if (contour.lifted) {
        split = std::min(split, boundary_value ? contour.eps / 2.0 : contour.eps);
    }
    const std::optional<double> inner = (split < p.alpha) ? std::optional<double>(split) : std::nullopt;
    const cplx j = detail::j_over_gamma_to(z, s, w, p, cfg, split);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    cplx integrals = 0.0;
    double integrals_err = 0.0;
    if (rg != cplx(0.0, 0.0)) {
        auto integrate = [&](Tolerance tol) {
            const QuadResult H = compute_H(z, s, w, p, cfg, tol);
            QuadResult I = detail::integrate_near_origin(z, s, w, p, cfg, contour, tol, inner);
            if (boundary_value) {
                // On the z-cut the value is the boundary value of lifted-path integrals;
                // the lift is immaterial by Cauchy, so a halved lift must agree.
                EvalParams half = p;
                half.eps = contour.eps / 2.0;
                const QuadResult I2 =
                    detail::integrate_near_origin(z, s, w, half, cfg, choose_contour(z, half, cfg), tol, inner);
                I.abs_err_est += std::abs(I.value - I2.value);
            }
            return QuadResult{H.value + I.value, H.abs_err_est + I.abs_err_est, H.evaluations + I.evaluations};
        };
        QuadResult HI = integrate(Tolerance{1e-300, p.quad_tol});
        // 1/Gamma(s) and the prefactor can be large while Phi is not, so H + I may
        // cancel heavily against J. Retighten against the assembled value.
        const double scale = std::abs(prefactor * rg);
        for (int pass = 0; pass < 2; ++pass) {
            const double value = std::abs(head + prefactor * (rg * HI.value + j));
            const double target = 0.5 * p.quad_tol * value / scale;
            if (!(scale * HI.abs_err_est > p.quad_tol * value) || !(target > 0.0)) {
                break;
            }
            try {
                HI = integrate(Tolerance{target, 0.0});
            } catch (const error &e) {
                if (e.code() != errc::convergence_failure) {
                    throw;
                }
                break;
            }
        }
        integrals = rg * HI.value;
        integrals_err = std::abs(rg) * HI.abs_err_est;
    }
    out.value = head + prefactor * (integrals + j);
    out.abs_err_est = std::abs(prefactor) * (integrals_err + 8.0 * eps * (std::abs(integrals) + std::abs(j))) +
                      4.0 * eps * head_abs;

    const double dz = std::abs(z - 1.0);
    if (dz > geometric_tol && dz < 1e-3) {
        out.ill_conditioned = true;
        out.amplification = std::pow(dz, -(p.m + 1));
        out.abs_err_est *= out.amplification;
    }
    return out;
}

/// Phi(z, 1 - r, w) = -B_r(z, w) / r.
inline cplx special_value(cplx z, int r, cplx w)
{
    if (r < 1) {
        throw error(errc::invalid_params, "special values need r >= 1");
    }
    return -apostol_eval(r, z, w) / static_cast<double>(r);
}

/// Lerch zeta function on its maximal single-valued domain.
///
/// Nonpositive integer s use the Apostol-Bernoulli special values, |z| <= 0.95
/// uses the defining series and everything else the continuation formula.
inline EvalResult lerch_phi(cplx z, cplx s, cplx w, const BranchConfig &cfg,
                            std::optional<EvalParams> params = std::nullopt)
{
    detail::check_excluded(z, s, w);
    if (is_nonpositive_integer(s)) {
        EvalResult out;
        const int r = 1 - static_cast<int>(std::lround(s.real()));
        out.value = special_value(z, r, w);
        out.abs_err_est = 16.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value) *
                          apostol_amplification(r, z);
        out.method = Method::special_value;
        out.domain = classify(z, s, w, cfg);
        if (params) {
            out.params = *params;
        }
        return out;
    }
    if (std::abs(z) <= 0.95) {
        const double tol = params ? params->series_tol : EvalParams{}.series_tol;
        EvalResult out = phi_series(z, s, w, cfg, tol);
        if (params) {
            out.params = *params;
        }
        return out;
    }
    return lerch_phi_continuation(z, s, w, cfg, params);
}

/// Hurwitz zeta function zeta(s, w) = Phi(1, s, w).
inline EvalResult hurwitz(cplx s, cplx w, const BranchConfig &cfg, std::optional<EvalParams> params = std::nullopt)
{
    if (std::abs(s - 1.0) <= geometric_tol) {
        throw error(errc::pole_at_one, "simple pole at s=1");
    }
    return lerch_phi(cplx(1.0, 0.0), s, w, cfg, params);
}

/// Polylogarithm Li_s(z) = z Phi(z, s, 1).
inline EvalResult polylog(cplx s, cplx z, const BranchConfig &cfg, std::optional<EvalParams> params = std::nullopt)
{
    if (z == cplx(0.0, 0.0)) {
        EvalResult out;
        out.method = Method::closed_form;
        out.domain = classify(z, s, cplx(1.0, 0.0), cfg);
        return out;
    }
    EvalResult out = lerch_phi(z, s, cplx(1.0, 0.0), cfg, params);
    out.value *= z;
    out.abs_err_est *= std::abs(z);
    return out;
}

/// Closed form of z Phi(z, 1, 1) on the complement of the z-cut:
/// i arg(-e^{i(phi - phi')}) - log((z - 1) e^{i(phi - phi')}).
inline cplx li1_closed(cplx z, const BranchConfig &cfg)
{
    if (on_cut_z(z, cfg)) {
        throw error(errc::argument_excluded, "z lies on the cut");
    }
    const cplx rot = std::polar(1.0, cfg.phi() - cfg.phi_prime());
    return cplx(0.0, principal_arg(-rot, cfg)) - principal_log((z - 1.0) * rot, cfg);
}

} // namespace lerch

#endif
