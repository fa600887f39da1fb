#ifndef LERCH_TOOLS_SELFTEST_HPP
#define LERCH_TOOLS_SELFTEST_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <lerch.hpp>

namespace lerch::tools
{

struct Triple {
    cplx z, s, w;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    double worst = 0.0; // largest discrepancy seen
    int checks = 0;
    std::string detail;
};

namespace detail
{

inline void record(SuiteResult &r, double discrepancy, double limit, const std::string &where)
{
    ++r.checks;
    r.worst = std::max(r.worst, discrepancy);
    if (!(discrepancy <= limit) && r.pass) {
        r.pass = false;
        r.detail = where;
    }
}

inline std::string describe(const Triple &t)
{
    return "z=" + std::to_string(t.z.real()) + std::to_string(t.z.imag()) + "i s=" + std::to_string(t.s.real()) +
           " w=" + std::to_string(t.w.real());
}

} // namespace detail

/// Evaluations with alpha in {1, 2, 3} (or ln|z| + {1, 2, 3} when ln|z| is close to 1 or above),
/// N in {N0, N0 + 3} and m in {m0, m0 + 4} agree pairwise within `limit`.
inline SuiteResult parameter_independence(const std::vector<Triple> &points, const BranchConfig &cfg,
                                          double limit = 1e-8)
{
    SuiteResult out;
    out.name = "parameter-independence";
    for (const auto &t : points) {
        try {
            const EvalParams base = default_params(t.z, t.s, t.w, cfg);
            const double a0 = (t.z == cplx(0.0, 0.0)) ? 0.0 : std::max(0.0, std::log(std::abs(t.z)));
            std::vector<cplx> values;
            for (double alpha : {1.0, 2.0, 3.0}) {
                for (int dn : {0, 3}) {
                    for (int dm : {0, 4}) {
                        EvalParams p = base;
                        p.alpha = (a0 < 0.99) ? alpha : a0 + alpha;
                        p.N = base.N + dn;
                        p.m = base.m + dm;
                        values.push_back(lerch_phi_continuation(t.z, t.s, t.w, cfg, p).value);
                    }
                }
            }
            double spread = 0.0;
            for (const auto &a : values) {
                for (const auto &b : values) {
                    spread = std::max(spread, std::abs(a - b));
                }
            }
            detail::record(out, spread, limit, detail::describe(t));
        } catch (const error &e) {
            detail::record(out, INFINITY, limit, detail::describe(t) + ": " + to_string(e.code()));
        }
    }
    return out;
}

/// e^{4 pi i nu s} Gamma(s) (Phi - head) / z^N = H + I + J at N = m = 2.
inline SuiteResult decomposition(const std::vector<Triple> &points, const BranchConfig &cfg, double limit = 1e-9)
{
    SuiteResult out;
    out.name = "decomposition";
    for (const auto &t : points) {
        try {
            EvalParams p = default_params(t.z, t.s, t.w, cfg);
            p.N = 2;
            p.m = 2;
            const cplx phi = phi_series(t.z, t.s, t.w, cfg, 1e-16).value;
            cplx head = 0.0;
            for (int n = 0; n < p.N; ++n) {
                head += std::pow(t.z, n) * cpow(t.w + static_cast<double>(n), -t.s, cfg);
            }
            const cplx lhs = std::exp(cplx(0.0, 2.0 * two_pi * nu(cfg)) * t.s) * gamma(t.s) * (phi - head) /
                             std::pow(t.z, p.N);
            const cplx rhs = compute_H(t.z, t.s, t.w, p, cfg).value + compute_I(t.z, t.s, t.w, p, cfg).value +
                             compute_J(t.z, t.s, t.w, p, cfg);
            detail::record(out, std::abs(lhs - rhs), limit, detail::describe(t));
        } catch (const error &e) {
            detail::record(out, INFINITY, limit, detail::describe(t) + ": " + to_string(e.code()));
        }
    }
    return out;
}

/// Phi(z, s, w) = z Phi(z, s, w + 1) + w^{-s}.
inline SuiteResult contiguous(const std::vector<Triple> &points, const BranchConfig &cfg, double limit = 1e-8)
{
    SuiteResult out;
    out.name = "contiguous";
    for (const auto &t : points) {
        try {
            const cplx lhs = lerch_phi(t.z, t.s, t.w, cfg).value;
            const cplx rhs = t.z * lerch_phi(t.z, t.s, t.w + 1.0, cfg).value + cpow(t.w, -t.s, cfg);
            detail::record(out, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), limit, detail::describe(t));
        } catch (const error &e) {
            detail::record(out, INFINITY, limit, detail::describe(t) + ": " + to_string(e.code()));
        }
    }
    return out;
}

/// The continuation formula evaluated at s = 1 - r equals -B_r(z, w) / r.
inline SuiteResult special_values(const std::vector<Triple> &points, int max_r, const BranchConfig &cfg,
                                  double limit = 1e-8)
{
    SuiteResult out;
    out.name = "special-values";
    for (const auto &t : points) {
        for (int r = 1; r <= max_r; ++r) {
            try {
                const cplx s(1.0 - r, 0.0);
                const cplx cont = lerch_phi_continuation(t.z, s, t.w, cfg).value;
                const cplx exact = special_value(t.z, r, t.w);
                detail::record(out, std::abs(cont - exact) / std::max(1.0, std::abs(exact)), limit,
                               detail::describe(t) + " r=" + std::to_string(r));
            } catch (const error &e) {
                detail::record(out, INFINITY, limit, detail::describe(t) + ": " + to_string(e.code()));
            }
        }
    }
    return out;
}

inline std::vector<std::string> suite_names()
{
    return {"parameter-independence", "decomposition", "contiguous", "special-values"};
}

/// Desk-scale run of one named suite with fixed points.
inline SuiteResult run_suite(const std::string &name, const BranchConfig &cfg)
{
    if (name == "parameter-independence") {
        return parameter_independence({{{0.5, 0.5}, {1.5, 1.0}, {0.7, 0.0}},
                                       {{0.5, 0.0}, {2.5, 0.0}, {-0.5, 0.0}},
                                       {{2.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}},
                                       {{2.5, 0.0}, {0.5, 1.0}, {-1.5, 0.0}}},
                                      cfg);
    }
    if (name == "decomposition") {
        return decomposition({{{0.5, 0.0}, {2.0, 0.0}, {1.0, 0.0}},
                              {{0.3, -0.4}, {1.5, 2.0}, {0.4, 0.3}},
                              {{-0.8, 0.1}, {3.0, -1.0}, {2.5, -1.0}}},
                             cfg);
    }
    if (name == "contiguous") {
        return contiguous({{{1.5, 0.5}, {1.5, 1.0}, {0.7, 0.2}},
                           {{-2.0, 1.0}, {-1.5, 0.5}, {1.3, 0.0}},
                           {{0.99, 0.0}, {0.5, -2.0}, {0.25, 1.0}}},
                          cfg);
    }
    return special_values({{{2.0, 0.0}, {}, {1.0, 0.0}}, {{-1.5, 0.5}, {}, {0.3, 0.2}}}, 12, cfg);
}

} // namespace lerch::tools

#endif
