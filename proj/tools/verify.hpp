#ifndef LERCH_TOOLS_VERIFY_HPP
#define LERCH_TOOLS_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <lerch.hpp>

namespace lerch::tools
{

struct SamplePoint {
    cplx a, s, w;
};

inline double uniform(std::mt19937_64 &rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline bool near_gamma_pole(cplx s, double margin)
{
    if (s.real() > margin) {
        return false;
    }
    const double n = std::min(0.0, std::round(s.real()));
    return std::abs(s - cplx(n, 0.0)) < margin;
}

/// Points of the strip component with |Im| <= 0.4 and s in [-3, 3]^2 away from
/// the gamma poles on the right-hand sides.
inline SamplePoint sample_equation_point(std::mt19937_64 &rng)
{
    SamplePoint p;
    p.a = {uniform(rng, 0.05, 0.95), uniform(rng, -0.4, 0.4)};
    p.w = {uniform(rng, 0.05, 0.95), uniform(rng, -0.4, 0.4)};
    do {
        p.s = {uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0)};
    } while (near_gamma_pole(p.s, 0.1));
    return p;
}

/// Points for the k-th differential-difference relation. The imaginary part that
/// enters the exponential is signed so that every Phi involved has |z| < 1; the
/// series there is smooth in a to rounding level, which the h^2 ratio needs.
inline SamplePoint sample_diff_diff_point(int k, std::mt19937_64 &rng)
{
    SamplePoint p;
    p.a = {uniform(rng, 0.15, 0.85), 0.0};
    p.w = {uniform(rng, 0.15, 0.85), 0.0};
    const double im = uniform(rng, 0.05, 0.35);
    switch (k) {
        case 1:
            p.a.imag(im);
            break;
        case 2:
            p.a.imag(-im);
            break;
        case 3:
            p.w.imag(-im);
            break;
        default:
            p.w.imag(im);
            break;
    }
    p.s = {uniform(rng, 0.5, 3.0), uniform(rng, -1.0, 1.0)};
    return p;
}

struct DiffDiffCheck {
    FEReport coarse, fine;
    double ratio = 0.0;
    cplx extrapolated; // (4 r(h/2) - r(h)) / 3
};

inline DiffDiffCheck diff_diff_convergence(int k, const SamplePoint &p, const BranchConfig &cfg, double h = 1e-4)
{
    DiffDiffCheck out;
    out.coarse = diff_diff_residual(k, p.a, p.s, p.w, cfg, h);
    out.fine = diff_diff_residual(k, p.a, p.s, p.w, cfg, h / 2.0);
    out.ratio = std::abs(out.coarse.residual) / std::abs(out.fine.residual);
    out.extrapolated = (4.0 * out.fine.residual - out.coarse.residual) / 3.0;
    return out;
}

/// One row of a verification sweep.
struct SweepRow {
    std::string equation;
    SamplePoint point;
    double residual = 0.0; // |residual| / (1 + |lhs|)
    bool ok = true;
    std::string note;
};

inline std::vector<std::string> expand_equations(const std::string &which)
{
    if (which == "all") {
        return {"lerch", "apostol", "apostol-minus", "diffdiff"};
    }
    return {which};
}

inline double median(std::vector<double> v)
{
    if (v.empty()) {
        return 0.0;
    }
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Deterministic sweep. For the differential-difference relations the residual is
/// the h^2-extrapolated one, and a row fails when the halving ratio leaves [3, 5].
inline std::vector<SweepRow> run_sweep(const std::string &equation, int samples, unsigned long long seed,
                                       const BranchConfig &cfg)
{
    std::vector<SweepRow> rows;
    std::mt19937_64 rng(seed);
    for (const auto &eq : expand_equations(equation)) {
        for (int i = 0; i < samples; ++i) {
            SweepRow row;
            row.equation = eq;
            try {
                if (eq == "diffdiff") {
                    const int k = 1 + i % 4;
                    row.equation = "diffdiff-" + std::to_string(k);
                    row.point = sample_diff_diff_point(k, rng);
                    const auto chk = diff_diff_convergence(k, row.point, cfg);
                    row.residual = std::abs(chk.extrapolated) / (1.0 + std::abs(chk.fine.lhs));
                    row.ok = chk.ratio >= 3.0 && chk.ratio <= 5.0;
                    if (!row.ok) {
                        row.note = "ratio " + std::to_string(chk.ratio);
                    }
                } else {
                    row.point = sample_equation_point(rng);
                    FEReport rep;
                    if (eq == "lerch") {
                        rep = lerch_fe_residual(row.point.a, row.point.s, row.point.w, cfg, true);
                    } else if (eq == "apostol") {
                        rep = apostol_fe_residual(row.point.a, row.point.s, row.point.w, cfg, true);
                    } else {
                        rep = apostol_minus_fe_residual(row.point.a, row.point.s, row.point.w, cfg, true);
                    }
                    row.residual = std::abs(rep.residual) / (1.0 + std::abs(rep.lhs));
                }
            } catch (const error &e) {
                row.ok = false;
                row.residual = std::numeric_limits<double>::infinity();
                row.note = to_string(e.code());
            }
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace lerch::tools

#endif
