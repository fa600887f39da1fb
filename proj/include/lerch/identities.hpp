#ifndef LERCH_IDENTITIES_HPP
#define LERCH_IDENTITIES_HPP

#include <complex>
#include <optional>

#include "branch.hpp"
#include "error.hpp"
#include "lerch.hpp"
#include "numerics.hpp"

namespace lerch
{

enum class Equation { lerch, apostol, apostol_minus, diff_diff_1, diff_diff_2, diff_diff_3, diff_diff_4 };

inline const char *to_string(Equation e)
{
    switch (e) {
        case Equation::lerch:
            return "lerch";
        case Equation::apostol:
            return "apostol";
        case Equation::apostol_minus:
            return "apostol-minus";
        case Equation::diff_diff_1:
            return "diffdiff-1";
        case Equation::diff_diff_2:
            return "diffdiff-2";
        case Equation::diff_diff_3:
            return "diffdiff-3";
        case Equation::diff_diff_4:
            return "diffdiff-4";
    }
    return "unknown";
}

struct FEReport {
    Equation equation = Equation::lerch;
    cplx a, s, w;
    cplx lhs, rhs;
    cplx residual; // lhs - rhs
    bool in_domain = false;
};

namespace detail
{

inline cplx expi(cplx x)
{
    return std::exp(cplx(0.0, 1.0) * x);
}

inline cplx phi_value(cplx z, cplx s, cplx w, const BranchConfig &cfg, const std::optional<EvalParams> &p)
{
    return lerch_phi(z, s, w, cfg, p).value;
}

// (2 pi)^{-s} with log(2 pi) taken on the configured branch.
inline cplx two_pi_pow_neg(cplx s, const BranchConfig &cfg)
{
    return std::exp(-s * cplx(std::log(two_pi), two_pi * nu(cfg)));
}

inline FEReport make_report(Equation e, cplx a, cplx s, cplx w, cplx lhs, cplx rhs, bool in_domain)
{
    return {e, a, s, w, lhs, rhs, lhs - rhs, in_domain};
}

inline void require_domain(bool in_domain, bool override_domain)
{
    if (!in_domain && !override_domain) {
        throw error(errc::argument_excluded, "point outside the functional-equation domain");
    }
}

} // namespace detail

/// Phi(e^{2 pi i a}, s, w) + e^{-2 pi i a} Phi(e^{-2 pi i a}, s, 1 - w).
inline cplx lambda_plus(cplx a, cplx s, cplx w, const BranchConfig &cfg,
                        const std::optional<EvalParams> &p = std::nullopt)
{
    const cplx e = detail::expi(two_pi * a);
    return detail::phi_value(e, s, w, cfg, p) + detail::phi_value(1.0 / e, s, 1.0 - w, cfg, p) / e;
}

/// Phi(e^{2 pi i a}, s, w) - e^{-2 pi i a} Phi(e^{-2 pi i a}, s, 1 - w).
inline cplx lambda_minus(cplx a, cplx s, cplx w, const BranchConfig &cfg,
                         const std::optional<EvalParams> &p = std::nullopt)
{
    const cplx e = detail::expi(two_pi * a);
    return detail::phi_value(e, s, w, cfg, p) - detail::phi_value(1.0 / e, s, 1.0 - w, cfg, p) / e;
}

/// 2 (2 pi)^{-s} cos(pi s / 2) Gamma(s).
inline cplx omega(cplx s, const BranchConfig &cfg = BranchConfig{})
{
    if (is_nonpositive_integer(s)) {
        throw error(errc::argument_excluded, "gamma has a pole at nonpositive integers");
    }
    return 2.0 * detail::two_pi_pow_neg(s, cfg) * detail::cos_pi(s / 2.0) * gamma(s);
}

/// Lerch's transformation formula
///   Phi(e^{2 pi i a}, 1 - s, w) = Gamma(s) (2 pi)^{-s} { e^{pi i (s/2 - 2 a w)} Phi(e^{-2 pi i w}, s, a)
///                                 + e^{pi i (-s/2 + 2 (1 - a) w)} Phi(e^{2 pi i w}, s, 1 - a) }.
inline FEReport lerch_fe_residual(cplx a, cplx s, cplx w, const BranchConfig &cfg, bool override_domain = false,
                                  const std::optional<EvalParams> &p = std::nullopt)
{
    const bool in_domain = in_domain_lerch(a, w, cfg);
    detail::require_domain(in_domain, override_domain);
    const cplx lhs = detail::phi_value(detail::expi(two_pi * a), 1.0 - s, w, cfg, p);
    const cplx t1 = detail::expi(pi * (s / 2.0 - 2.0 * a * w)) *
                    detail::phi_value(detail::expi(-two_pi * w), s, a, cfg, p);
    const cplx t2 = detail::expi(pi * (-s / 2.0 + 2.0 * (1.0 - a) * w)) *
                    detail::phi_value(detail::expi(two_pi * w), s, 1.0 - a, cfg, p);
    const cplx rhs = gamma(s) * detail::two_pi_pow_neg(s, cfg) * (t1 + t2);
    return detail::make_report(Equation::lerch, a, s, w, lhs, rhs, in_domain);
}

/// Apostol's equation Lambda(a, 1 - s, w) = Omega(s) e^{-2 pi i a w} Lambda(-w, s, a).
inline FEReport apostol_fe_residual(cplx a, cplx s, cplx w, const BranchConfig &cfg, bool override_domain = false,
                                    const std::optional<EvalParams> &p = std::nullopt)
{
    const bool in_domain = in_domain_eq(a, w, cfg);
    detail::require_domain(in_domain, override_domain);
    const cplx lhs = lambda_plus(a, 1.0 - s, w, cfg, p);
    const cplx rhs = omega(s, cfg) * detail::expi(-two_pi * a * w) * lambda_plus(-w, s, a, cfg, p);
    return detail::make_report(Equation::apostol, a, s, w, lhs, rhs, in_domain);
}

/// Lambda^-(a, 1 - s, w) = 2 i (2 pi)^{-s} sin(pi s / 2) Gamma(s) e^{-2 pi i a w} Lambda^-(-w, s, a).
inline FEReport apostol_minus_fe_residual(cplx a, cplx s, cplx w, const BranchConfig &cfg,
                                          bool override_domain = false,
                                          const std::optional<EvalParams> &p = std::nullopt)
{
    const bool in_domain = in_domain_eq(a, w, cfg);
    detail::require_domain(in_domain, override_domain);
    if (is_nonpositive_integer(s)) {
        throw error(errc::argument_excluded, "gamma has a pole at nonpositive integers");
    }
    const cplx lhs = lambda_minus(a, 1.0 - s, w, cfg, p);
    const cplx factor = cplx(0.0, 2.0) * detail::two_pi_pow_neg(s, cfg) * detail::sin_pi(s / 2.0) * gamma(s);
    const cplx rhs = factor * detail::expi(-two_pi * a * w) * lambda_minus(-w, s, a, cfg, p);
    return detail::make_report(Equation::apostol_minus, a, s, w, lhs, rhs, in_domain);
}

/// Central difference in a of one of the four differential-difference relations,
/// against the right side evaluated directly:
///   k=1: d/da Phi(e^{2 pi i a}, 1-s, w)    = 2 pi i {Phi(e^{2 pi i a}, -s, w) - w Phi(e^{2 pi i a}, 1-s, w)}
///   k=2: d/da Phi(e^{-2 pi i a}, 1-s, 1-w) = -2 pi i {Phi(e^{-2 pi i a}, -s, 1-w) + (w-1) Phi(e^{-2 pi i a}, 1-s, 1-w)}
///   k=3: d/da Phi(e^{-2 pi i w}, s, a)     = -s Phi(e^{-2 pi i w}, s+1, a)
///   k=4: d/da Phi(e^{2 pi i w}, s, 1-a)    = s Phi(e^{2 pi i w}, s+1, 1-a)
///
/// The residual is O(h^2) only if Phi is evaluated far more accurately than h^3;
/// by default the series tolerance is tightened accordingly.
inline FEReport diff_diff_residual(int k, cplx a, cplx s, cplx w, const BranchConfig &cfg, double h,
                                   std::optional<EvalParams> p = std::nullopt)
{
    if (k < 1 || k > 4) {
        throw error(errc::invalid_params, "relation index must be 1..4");
    }
    if (!(h >= 1e-6 && h <= 1e-3)) {
        throw error(errc::invalid_params, "step must lie in [1e-6, 1e-3]");
    }
    auto value = [&](cplx z, cplx s_, cplx w_) -> cplx {
        if (p) {
            return detail::phi_value(z, s_, w_, cfg, p);
        }
        EvalParams tight = default_params(z, s_, w_, cfg);
        tight.series_tol = 1e-17;
        return detail::phi_value(z, s_, w_, cfg, tight);
    };
    const cplx I(0.0, 1.0);
    auto left = [&](cplx x) -> cplx {
        switch (k) {
            case 1:
                return value(detail::expi(two_pi * x), 1.0 - s, w);
            case 2:
                return value(detail::expi(-two_pi * x), 1.0 - s, 1.0 - w);
            case 3:
                return value(detail::expi(-two_pi * w), s, x);
            default:
                return value(detail::expi(two_pi * w), s, 1.0 - x);
        }
    };
    const cplx lhs = (left(a + h) - left(a - h)) / (2.0 * h);
    cplx rhs;
    switch (k) {
        case 1: {
            const cplx z = detail::expi(two_pi * a);
            rhs = two_pi * I * (value(z, -s, w) - w * value(z, 1.0 - s, w));
            break;
        }
        case 2: {
            const cplx z = detail::expi(-two_pi * a);
            rhs = -two_pi * I * (value(z, -s, 1.0 - w) + (w - 1.0) * value(z, 1.0 - s, 1.0 - w));
            break;
        }
        case 3:
            rhs = -s * value(detail::expi(-two_pi * w), s + 1.0, a);
            break;
        default:
            rhs = s * value(detail::expi(two_pi * w), s + 1.0, 1.0 - a);
            break;
    }
    const auto eq = static_cast<Equation>(static_cast<int>(Equation::diff_diff_1) + k - 1);
    return detail::make_report(eq, a, s, w, lhs, rhs, in_domain_eq(a, w, cfg));
}

} // namespace lerch

#endif
