#ifndef LERCH_APOSTOL_HPP
#define LERCH_APOSTOL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "branch.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace lerch
{

/// Apostol-Bernoulli rational function B_r(z, w) written in the basis
/// u^j w^k with u = 1/(z - 1).
///
/// coeffs[j][k] is the coefficient of u^j w^k, 0 <= j <= r, 0 <= k <= max(r - 1, 0).
/// B_0 is the zero element: the z != 1 convention of the generating function.
struct ApostolRational {
    int r = 0;
    std::vector<std::vector<rational>> coeffs;

    int u_degree() const
    {
        int d = -1;
        for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
            for (const auto &c : coeffs[j]) {
                if (c != 0) {
                    d = j;
                }
            }
        }
        return d;
    }

    int w_degree() const
    {
        int d = -1;
        for (const auto &row : coeffs) {
            for (int k = 0; k < static_cast<int>(row.size()); ++k) {
                if (row[k] != 0 && k > d) {
                    d = k;
                }
            }
        }
        return d;
    }

    bool is_zero() const
    {
        return u_degree() < 0;
    }
};

namespace detail
{

inline rational binomial(int n, int k)
{
    bigint num = 1;
    bigint den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return rational(num, den);
}

inline rational factorial(int n)
{
    bigint f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return rational(f);
}

// Coefficients of (w + shift)^d in ascending powers of w.
inline std::vector<rational> shifted_power(int d, int shift)
{
    std::vector<rational> out(d + 1);
    rational sp = 1;
    for (int i = 0; i <= d; ++i) {
        // coefficient of w^{d-i} is C(d, i) shift^i
        out[d - i] = binomial(d, i) * sp;
        sp *= shift;
    }
    return out;
}

inline ApostolRational make_zero(int r)
{
    ApostolRational b;
    b.r = r;
    b.coeffs.assign(r + 1, std::vector<rational>(std::max(r - 1, 0) + 1));
    return b;
}

// B_r = sum_{k<r} (-1)^{r-k-1} C(r,k) B_k [ (u + 1)(w - 1)^{r-k} - u w^{r-k} ],
// which is the generating-function recurrence multiplied through by u with
// z = 1 + 1/u substituted.
inline ApostolRational apostol_from_recurrence(int r, const std::vector<std::shared_ptr<const ApostolRational>> &lower)
{
    ApostolRational out = make_zero(r);
    if (r == 0) {
        return out;
    }
    if (r == 1) {
        out.coeffs[1][0] = 1;
        return out;
    }
    for (int k = 1; k < r; ++k) {
        const ApostolRational &bk = *lower[k];
        const int d = r - k;
        rational scale = binomial(r, k);
        if ((r - k - 1) % 2 != 0) {
            scale = -scale;
        }
        const auto wm1 = shifted_power(d, -1);
        for (int j = 0; j < static_cast<int>(bk.coeffs.size()); ++j) {
            for (int kk = 0; kk < static_cast<int>(bk.coeffs[j].size()); ++kk) {
                const rational &c = bk.coeffs[j][kk];
                if (c == 0) {
                    continue;
                }
                const rational sc = scale * c;
                // (u + 1)(w - 1)^d
                for (int e = 0; e <= d; ++e) {
                    const rational t = sc * wm1[e];
                    if (t == 0) {
                        continue;
                    }
                    out.coeffs[j + 1][kk + e] += t;
                    out.coeffs[j][kk + e] += t;
                }
                // - u w^d
                out.coeffs[j + 1][kk + d] -= sc;
            }
        }
    }
    return out;
}

class ApostolMemo
{
public:
    std::shared_ptr<const ApostolRational> get(int r)
    {
        {
            std::shared_lock lock(m_mutex);
            if (r < static_cast<int>(m_table.size())) {
                return m_table[r];
            }
        }
        std::unique_lock lock(m_mutex);
        while (static_cast<int>(m_table.size()) <= r) {
            const int next = static_cast<int>(m_table.size());
            m_table.push_back(std::make_shared<const ApostolRational>(apostol_from_recurrence(next, m_table)));
            m_numeric.push_back(nullptr);
        }
        return m_table[r];
    }

    // Extended-precision copy of the coefficients, built on demand.
    std::shared_ptr<const std::vector<std::vector<long double>>> numeric(int r)
    {
        get(r);
        {
            std::shared_lock lock(m_mutex);
            if (m_numeric[r]) {
                return m_numeric[r];
            }
        }
        std::unique_lock lock(m_mutex);
        if (!m_numeric[r]) {
            auto table = std::make_shared<std::vector<std::vector<long double>>>();
            for (const auto &row : m_table[r]->coeffs) {
                std::vector<long double> drow;
                drow.reserve(row.size());
                for (const auto &c : row) {
                    drow.push_back(c.convert_to<long double>());
                }
                table->push_back(std::move(drow));
            }
            m_numeric[r] = std::move(table);
        }
        return m_numeric[r];
    }

private:
    std::shared_mutex m_mutex;
    std::vector<std::shared_ptr<const ApostolRational>> m_table;
    std::vector<std::shared_ptr<const std::vector<std::vector<long double>>>> m_numeric;
};

inline ApostolMemo &apostol_memo()
{
    static ApostolMemo memo;
    return memo;
}

// Bernoulli polynomial coefficients (ascending in w), from t/(e^t - 1).
class BernoulliMemo
{
public:
    std::shared_ptr<const std::vector<rational>> get(int r)
    {
        {
            std::shared_lock lock(m_mutex);
            if (r < static_cast<int>(m_polys.size())) {
                return m_polys[r];
            }
        }
        std::unique_lock lock(m_mutex);
        // Bernoulli numbers by series division of 1 / (sum_k t^k / (k+1)!).
        while (static_cast<int>(m_numbers.size()) <= r) {
            const int n = static_cast<int>(m_numbers.size());
            rational acc = (n == 0) ? rational(1) : rational(0);
            for (int j = 1; j <= n; ++j) {
                acc -= m_numbers[n - j] / factorial(n - j) / factorial(j + 1);
            }
            m_numbers.push_back(acc * factorial(n));
        }
        while (static_cast<int>(m_polys.size()) <= r) {
            const int n = static_cast<int>(m_polys.size());
            auto poly = std::make_shared<std::vector<rational>>(n + 1);
            for (int k = 0; k <= n; ++k) {
                (*poly)[n - k] = binomial(n, k) * m_numbers[k];
            }
            m_polys.push_back(std::move(poly));
        }
        return m_polys[r];
    }

private:
    std::shared_mutex m_mutex;
    std::vector<rational> m_numbers;
    std::vector<std::shared_ptr<const std::vector<rational>>> m_polys;
};

inline BernoulliMemo &bernoulli_memo()
{
    static BernoulliMemo memo;
    return memo;
}

} // namespace detail

/// Exact B_r(z, w) in the (u, w) basis, from B_0 = 0, B_1 = u and the
/// generating-function recurrence. Results are memoised.
inline const ApostolRational &apostol_exact(int r)
{
    if (r < 0) {
        throw error(errc::invalid_params, "order r must be nonnegative");
    }
    return *detail::apostol_memo().get(r);
}

/// Exact coefficients of the degree-r Bernoulli polynomial, ascending in w.
inline const std::vector<rational> &bernoulli_exact(int r)
{
    if (r < 0) {
        throw error(errc::invalid_params, "order r must be nonnegative");
    }
    return *detail::bernoulli_memo().get(r);
}

namespace detail
{

template <typename T>
T lift(const rational &q)
{
    if constexpr (std::is_same_v<T, cplx>) {
        return cplx(to_double(q), 0.0);
    } else {
        return T(q);
    }
}

} // namespace detail

/// Evaluates an exact Apostol-Bernoulli function over any field-like T
/// (rational, exact_complex, std::complex<double>) at u = 1/(z - 1).
template <typename T>
T apostol_evaluate(const ApostolRational &b, const T &u, const T &w)
{
    T result(0);
    for (int j = static_cast<int>(b.coeffs.size()) - 1; j >= 0; --j) {
        T inner(0);
        const auto &row = b.coeffs[j];
        for (int k = static_cast<int>(row.size()) - 1; k >= 0; --k) {
            inner = inner * w + detail::lift<T>(row[k]);
        }
        result = result * u + inner;
    }
    return result;
}

template <typename T>
T bernoulli_evaluate(int r, const T &w)
{
    const auto &poly = bernoulli_exact(r);
    T result(0);
    for (int k = r; k >= 0; --k) {
        result = result * w + detail::lift<T>(poly[k]);
    }
    return result;
}

/// Coefficient of t^r / r! in t e^{tw} / (e^t z - 1), computed by exact
/// truncated power-series division. Independent of the recurrence.
inline rational gf_taylor_oracle(int r, const rational &z, const rational &w)
{
    if (z == 1) {
        throw error(errc::argument_excluded, "z = 1 has no pole-free generating function in this form");
    }
    std::vector<rational> num(r + 1), den(r + 1), quo(r + 1);
    rational wp = 1; // w^{k-1}
    for (int k = 0; k <= r; ++k) {
        if (k >= 1) {
            num[k] = wp / detail::factorial(k - 1);
            wp *= w;
        }
        den[k] = z / detail::factorial(k);
    }
    den[0] = z - 1;
    for (int k = 0; k <= r; ++k) {
        rational acc = num[k];
        for (int j = 1; j <= k; ++j) {
            acc -= den[j] * quo[k - j];
        }
        quo[k] = acc / den[0];
    }
    return quo[r] * detail::factorial(r);
}

/// Same oracle for the z = 1 specialisation, t e^{tw} / (e^t - 1).
inline rational bernoulli_oracle(int r, const rational &w)
{
    std::vector<rational> num(r + 1), den(r + 1), quo(r + 1);
    rational wp = 1;
    for (int k = 0; k <= r; ++k) {
        num[k] = wp / detail::factorial(k);
        wp *= w;
        den[k] = rational(1) / detail::factorial(k + 1);
    }
    for (int k = 0; k <= r; ++k) {
        rational acc = num[k];
        for (int j = 1; j <= k; ++j) {
            acc -= den[j] * quo[k - j];
        }
        quo[k] = acc;
    }
    return quo[r] * detail::factorial(r);
}

inline cplx bernoulli_poly(int r, cplx w)
{
    if (r < 0) {
        throw error(errc::invalid_params, "order r must be nonnegative");
    }
    const auto &poly = bernoulli_exact(r);
    const std::complex<long double> x(w);
    std::complex<long double> result = 0.0L;
    for (int k = r; k >= 0; --k) {
        result = result * x + poly[k].convert_to<long double>();
    }
    return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

/// Numeric B_r(z, w). Switches to the Bernoulli polynomial only when z is 1
/// within the geometric tolerance.
inline cplx apostol_eval(int r, cplx z, cplx w)
{
    if (r < 0) {
        throw error(errc::invalid_params, "order r must be nonnegative");
    }
    if (std::abs(z - 1.0) <= geometric_tol) {
        return bernoulli_poly(r, w);
    }
    // The monomial basis cancels for larger r; extended precision absorbs it.
    using lcplx = std::complex<long double>;
    const auto table = detail::apostol_memo().numeric(r);
    const lcplx u = 1.0L / (lcplx(z) - 1.0L), x(w);
    lcplx result = 0.0L;
    for (int j = static_cast<int>(table->size()) - 1; j >= 0; --j) {
        const auto &row = (*table)[j];
        lcplx inner = 0.0L;
        for (int k = static_cast<int>(row.size()) - 1; k >= 0; --k) {
            inner = inner * x + row[k];
        }
        result = result * u + inner;
    }
    return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

/// Relative error amplification of the numeric evaluation near the pole z = 1.
inline double apostol_amplification(int r, cplx z)
{
    const double d = std::abs(z - 1.0);
    if (d <= geometric_tol || d >= 0.1) {
        return 1.0;
    }
    return std::pow(d, -r);
}

/// z B_r(z, N + 1 + w) - B_r(z, N + w) - r (N + w)^{r-1}, exactly.
inline rational lemma_b_lhs_minus_rhs(int r, int N, const rational &z, const rational &w)
{
    if (r < 1 || N < 0) {
        throw error(errc::invalid_params, "need r >= 1 and N >= 0");
    }
    if (z == 1) {
        throw error(errc::argument_excluded, "z = 1 is the Bernoulli specialisation");
    }
    const auto &b = apostol_exact(r);
    const rational u = rational(1) / (z - 1);
    const rational x = w + N;
    rational power = 1;
    for (int i = 0; i < r - 1; ++i) {
        power *= x;
    }
    return z * apostol_evaluate<rational>(b, u, x + 1) - apostol_evaluate<rational>(b, u, x) - r * power;
}

/// Canonical text form: signed terms (num/den)·u^j·w^k, by descending w-degree
/// and ascending u-degree within a w-degree.
inline std::string apostol_to_string(const ApostolRational &b)
{
    struct term {
        int j, k;
        rational c;
    };
    std::vector<term> terms;
    for (int j = 0; j < static_cast<int>(b.coeffs.size()); ++j) {
        for (int k = 0; k < static_cast<int>(b.coeffs[j].size()); ++k) {
            if (b.coeffs[j][k] != 0) {
                terms.push_back({j, k, b.coeffs[j][k]});
            }
        }
    }
    if (terms.empty()) {
        return "0";
    }
    std::stable_sort(terms.begin(), terms.end(), [](const term &a, const term &c) {
        if (a.k != c.k) {
            return a.k > c.k;
        }
        return a.j < c.j;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms) {
        const bool negative = t.c < 0;
        const rational mag = negative ? rational(-t.c) : t.c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << mag.str();
        if (t.j > 0) {
            os << "·u";
            if (t.j > 1) {
                os << '^' << t.j;
            }
        }
        if (t.k > 0) {
            os << "·w";
            if (t.k > 1) {
                os << '^' << t.k;
            }
        }
    }
    return os.str();
}

} // namespace lerch

#endif
