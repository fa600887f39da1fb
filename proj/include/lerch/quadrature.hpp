#ifndef LERCH_QUADRATURE_HPP
#define LERCH_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "branch.hpp"
#include "error.hpp"

namespace lerch
{

struct QuadResult {
    cplx value{0.0, 0.0};
    double abs_err_est = 0.0;
    long evaluations = 0;
};

/// Accept when the error estimate is below max(abs, rel * |value|).
struct Tolerance {
    double abs = 1e-12;
    double rel = 0.0;
};

namespace detail
{

// 15-point Kronrod nodes on [0, 1] (symmetric half) with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> gk_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    cplx a;
    cplx b;
    cplx value;
    double err;
    double abs_value;
    bool mapped = false; // a, b are in the u variable of the first segment

    bool operator<(const Panel &o) const
    {
        return err < o.err;
    }
};

template <typename F>
Panel gauss_kronrod(F &f, cplx a, cplx b)
{
    const cplx centre = 0.5 * (a + b);
    const cplx half = 0.5 * (b - a);
    const cplx fc = f(centre);
    cplx kronrod = fc * gk_weights[7];
    cplx gauss = fc * gauss_weights[3];
    double abs_sum = std::abs(fc) * gk_weights[7];
    for (int i = 0; i < 7; ++i) {
        const cplx dx = half * gk_nodes[i];
        const cplx f1 = f(centre - dx);
        const cplx f2 = f(centre + dx);
        kronrod += (f1 + f2) * gk_weights[i];
        abs_sum += (std::abs(f1) + std::abs(f2)) * gk_weights[i];
        if (i % 2 == 1) {
            gauss += (f1 + f2) * gauss_weights[i / 2];
        }
    }
    const double scale = std::abs(half);
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * scale};
}

} // namespace detail

/// Adaptive Gauss-Kronrod (7/15) integration of f along the polygon through
/// `vertices`. Panels are bisected globally by largest error estimate. The first
/// segment is traversed as t = v0 + (v1 - v0) u^2, which turns an endpoint
/// singularity t^beta, beta > -1, at v0 into u^{2 beta + 1}.
template <typename F>
QuadResult integrate_polyline(F &&f, std::span<const cplx> vertices, Tolerance tol, long max_evaluations = 400000)
{
    if (vertices.size() < 2) {
        throw error(errc::invalid_params, "a path needs at least two vertices");
    }
    const cplx v0 = vertices[0], d0 = vertices[1] - vertices[0];
    auto mapped = [&](cplx u) {
        const double x = u.real();
        return f(v0 + d0 * (x * x)) * (2.0 * x) * d0;
    };
    auto panel = [&](cplx a, cplx b, bool first) {
        detail::Panel p = first ? detail::gauss_kronrod(mapped, a, b) : detail::gauss_kronrod(f, a, b);
        p.mapped = first;
        return p;
    };
    std::priority_queue<detail::Panel> heap;
    QuadResult out;
    cplx total = 0.0;
    double total_err = 0.0;
    double total_abs = 0.0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (vertices[i] == vertices[i + 1]) {
            continue;
        }
        auto p = (i == 0) ? panel(0.0, 1.0, true) : panel(vertices[i], vertices[i + 1], false);
        out.evaluations += 15;
        total += p.value;
        total_err += p.err;
        total_abs += p.abs_value;
        heap.push(p);
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto target = [&] { return std::max({tol.abs, tol.rel * std::abs(total), 50.0 * eps * total_abs}); };
    while (!heap.empty() && total_err > target()) {
        if (out.evaluations >= max_evaluations) {
            throw error(errc::convergence_failure, "quadrature tolerance not met within the evaluation budget");
        }
        const detail::Panel worst = heap.top();
        heap.pop();
        const cplx mid = 0.5 * (worst.a + worst.b);
        if (std::abs(worst.b - worst.a) < 1e-15 * std::max(1.0, std::abs(mid))) {
            throw error(errc::convergence_failure, "quadrature panel collapsed below resolution");
        }
        const auto left = panel(worst.a, mid, worst.mapped);
        const auto right = panel(mid, worst.b, worst.mapped);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().err;
        heap.pop();
    }
    out.value = total;
    out.abs_err_est = total_err;
    return out;
}

template <typename F>
QuadResult integrate_polyline(F &&f, std::span<const cplx> vertices, double abs_tol)
{
    return integrate_polyline(std::forward<F>(f), vertices, Tolerance{abs_tol, 0.0});
}

/// Bound |g(t)| <= C e^{-decay (t - alpha)} t^power on [alpha, inf).
struct TailMajorant {
    double C = 1.0;
    double power = 0.0;
};

/// Integral of g over [alpha, inf) for exponentially decaying g. The range is
/// truncated where the majorant drops below a tenth of the tolerance.
template <typename F>
QuadResult integrate_tail(F &&g, double alpha, double decay_rate, Tolerance tol, TailMajorant bound = {})
{
    if (!(decay_rate > 0.0)) {
        throw error(errc::argument_excluded, "tail integral needs a positive decay rate");
    }
    if (!(alpha > 0.0)) {
        throw error(errc::invalid_params, "tail integral needs alpha > 0");
    }
    // Absolute target for the truncation: scale relative requests by the size of
    // the integrand at the start of the range.
    const double scale = std::abs(g(cplx(alpha, 0.0))) / decay_rate;
    const double abs_target = std::max({tol.abs, tol.rel * scale, std::numeric_limits<double>::min()});
    const double trunc_tol = abs_target / 10.0;
    const double C = std::max(bound.C, std::numeric_limits<double>::min());
    double T = alpha + 40.0 / decay_rate;
    for (int i = 0; i < 2; ++i) {
        T = alpha + (std::log(C / trunc_tol) + (bound.power + 2.0) * std::log(T)) / decay_rate;
    }
    T = std::max(T, alpha + 1.0 / decay_rate);

    // Panels of roughly one decay length so the first pass already resolves the shape.
    const int pieces = std::clamp(static_cast<int>(std::ceil((T - alpha) * decay_rate / 2.0)), 1, 64);
    std::vector<cplx> vertices;
    vertices.reserve(pieces + 1);
    for (int i = 0; i <= pieces; ++i) {
        vertices.emplace_back(alpha + (T - alpha) * i / pieces, 0.0);
    }
    auto result = integrate_polyline(std::forward<F>(g), std::span<const cplx>(vertices),
                                     Tolerance{std::max(tol.abs, 0.0) * 0.9, tol.rel * 0.9});
    result.evaluations += 1;
    result.abs_err_est += trunc_tol;
    return result;
}

} // namespace lerch

#endif
