// Reference computations that share no code with the evaluator beyond the
// exact rational type.
#ifndef LERCH_TESTS_ORACLES_HPP
#define LERCH_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <lerch/rational.hpp>

namespace oracle
{

using ld = long double;
using lcplx = std::complex<long double>;

/// log on the branch arg in [phi, phi + 2 pi), long double.
inline lcplx log_branch(lcplx x, ld phi)
{
    constexpr ld tau = 2.0L * std::numbers::pi_v<long double>;
    ld a = std::atan2(x.imag(), x.real());
    while (a < phi) {
        a += tau;
    }
    while (a >= phi + tau) {
        a -= tau;
    }
    return {std::log(std::abs(x)), a};
}

/// Direct summation of z^n (n + w)^{-s} in long double until the remaining terms
/// are negligible; only for |z| <= 0.95.
inline std::complex<double> lerch_series(std::complex<double> z, std::complex<double> s, std::complex<double> w,
                                         double phi = -std::numbers::pi)
{
    const lcplx Z(z), S(s), W(w);
    lcplx sum = 0.0L, zn = 1.0L;
    const ld az = std::abs(Z);
    int small_run = 0;
    for (int n = 0; n < 200000; ++n) {
        const lcplx term = zn * std::exp(-S * log_branch(W + static_cast<ld>(n), phi));
        sum += term;
        if (az == 0.0L) {
            break;
        }
        // Terms eventually decrease geometrically; stop after a long run of tiny ones.
        const bool past_peak = n > 20 + 4 * static_cast<int>(std::abs(S) + std::abs(W));
        if (past_peak && std::abs(term) < 1e-22L * std::abs(sum)) {
            if (++small_run > 40) {
                break;
            }
        } else {
            small_run = 0;
        }
        zn *= Z;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// Coefficients of t e^{tw} / (e^t z - 1) times r!, r = 0..R, by exact power-series
/// division (z != 1).
inline std::vector<lerch::rational> apostol_by_division(int R, const lerch::rational &z, const lerch::rational &w)
{
    using lerch::rational;
    std::vector<rational> num(R + 2), den(R + 2), q(R + 1);
    rational fact = 1, wp = 1;
    for (int k = 0; k <= R + 1; ++k) {
        if (k > 0) {
            fact *= k;
        }
        // e^t z - 1 = (z - 1) + z t + z t^2/2 + ...
        den[k] = (k == 0) ? rational(z - 1) : rational(z / fact);
        if (k >= 1) {
            num[k] = wp / (fact / k); // t * w^{k-1} t^{k-1} / (k-1)!
            wp *= w;
        }
    }
    for (int k = 0; k <= R; ++k) {
        rational acc = num[k];
        for (int j = 1; j <= k; ++j) {
            acc -= den[j] * q[k - j];
        }
        q[k] = acc / den[0];
    }
    rational f = 1;
    for (int k = 0; k <= R; ++k) {
        if (k > 0) {
            f *= k;
        }
        q[k] *= f;
    }
    return q;
}

/// Bernoulli polynomials B_r(w), r = 0..R, from t e^{tw} / (e^t - 1) by exact division.
inline std::vector<lerch::rational> bernoulli_by_division(int R, const lerch::rational &w)
{
    using lerch::rational;
    // (e^t - 1)/t = sum t^k/(k+1)!
    std::vector<rational> num(R + 1), den(R + 1), q(R + 1);
    rational fact = 1, wp = 1;
    for (int k = 0; k <= R; ++k) {
        if (k > 0) {
            fact *= k;
        }
        num[k] = wp / fact;
        wp *= w;
        den[k] = rational(1) / (fact * (k + 1));
    }
    for (int k = 0; k <= R; ++k) {
        rational acc = num[k];
        for (int j = 1; j <= k; ++j) {
            acc -= den[j] * q[k - j];
        }
        q[k] = acc / den[0];
    }
    rational f = 1;
    for (int k = 0; k <= R; ++k) {
        if (k > 0) {
            f *= k;
        }
        q[k] *= f;
    }
    return q;
}

/// Region flood on a grid: is x connected to (0, 1) inside the strip window
/// without touching the symmetrised cut or the lines Re = integer?
/// Cells of size h; the window is Re in (-3, 4), Im in (-6, 6).
class StripFlood
{
public:
    StripFlood(double phi, double h = 0.02) : m_h(h)
    {
        m_nx = static_cast<int>(7.0 / h);
        m_ny = static_cast<int>(12.0 / h);
        std::vector<char> blocked(static_cast<std::size_t>(m_nx) * m_ny, 0);
        const std::complex<double> dir = std::polar(1.0, phi);
        auto near_ray = [&](std::complex<double> p, std::complex<double> o, std::complex<double> d) {
            const double t = std::max(0.0, std::real((p - o) * std::conj(d)));
            return std::abs(p - (o + t * d)) < 0.75 * h;
        };
        for (int i = 0; i < m_nx; ++i) {
            for (int j = 0; j < m_ny; ++j) {
                const std::complex<double> p = centre(i, j);
                bool b = std::abs(p.real() - std::round(p.real())) < 0.75 * h;
                for (int n = -4; n <= 4 && !b; ++n) {
                    b = n >= 0 && (near_ray(p, std::complex<double>(-n, 0), dir) ||
                                   near_ray(p, std::complex<double>(n + 1, 0), -dir));
                }
                blocked[index(i, j)] = b;
            }
        }
        m_reach.assign(blocked.size(), 0);
        std::vector<std::pair<int, int>> stack;
        const int j0 = m_ny / 2;
        for (int i = 0; i < m_nx; ++i) {
            const double re = centre(i, j0).real();
            if (re > 0.1 && re < 0.9 && !blocked[index(i, j0)]) {
                stack.emplace_back(i, j0);
            }
        }
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            if (i < 0 || j < 0 || i >= m_nx || j >= m_ny || blocked[index(i, j)] || m_reach[index(i, j)]) {
                continue;
            }
            m_reach[index(i, j)] = 1;
            stack.emplace_back(i + 1, j);
            stack.emplace_back(i - 1, j);
            stack.emplace_back(i, j + 1);
            stack.emplace_back(i, j - 1);
        }
    }

    bool reachable(std::complex<double> x) const
    {
        const int i = static_cast<int>((x.real() + 3.0) / m_h);
        const int j = static_cast<int>((x.imag() + 6.0) / m_h);
        if (i < 0 || j < 0 || i >= m_nx || j >= m_ny) {
            return false;
        }
        return m_reach[index(i, j)];
    }

private:
    std::complex<double> centre(int i, int j) const
    {
        return {-3.0 + (i + 0.5) * m_h, -6.0 + (j + 0.5) * m_h};
    }
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * m_ny + j;
    }

    double m_h;
    int m_nx = 0, m_ny = 0;
    std::vector<char> m_reach;
};

} // namespace oracle

#endif
