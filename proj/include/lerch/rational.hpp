#ifndef LERCH_RATIONAL_HPP
#define LERCH_RATIONAL_HPP

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lerch
{

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline double to_double(const rational &q)
{
    return static_cast<double>(q);
}

inline std::string to_string(const rational &q)
{
    return q.str();
}

/// Gaussian rationals: just enough field arithmetic to evaluate the exact
/// Apostol-Bernoulli polynomials at complex rational points.
struct exact_complex {
    rational re{0};
    rational im{0};

    exact_complex() = default;
    exact_complex(rational r) : re(std::move(r)) {}
    exact_complex(rational r, rational i) : re(std::move(r)), im(std::move(i)) {}
    exact_complex(int r) : re(r) {}

    friend exact_complex operator+(const exact_complex &a, const exact_complex &b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend exact_complex operator-(const exact_complex &a, const exact_complex &b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend exact_complex operator-(const exact_complex &a)
    {
        return {-a.re, -a.im};
    }
    friend exact_complex operator*(const exact_complex &a, const exact_complex &b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend exact_complex operator/(const exact_complex &a, const exact_complex &b)
    {
        const rational den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    exact_complex &operator+=(const exact_complex &o)
    {
        return *this = *this + o;
    }
    exact_complex &operator*=(const exact_complex &o)
    {
        return *this = *this * o;
    }
    friend bool operator==(const exact_complex &a, const exact_complex &b)
    {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_complex() const
    {
        return {to_double(re), to_double(im)};
    }
};

} // namespace lerch

#endif
