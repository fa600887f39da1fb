#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <lerch/lerch.hpp>

#include "oracles.hpp"

using namespace lerch;

namespace
{

const BranchConfig standard{};
const BranchConfig rotated{pi / 2.0, pi / 2.0};
const double e = std::numbers::e;
const double zeta2 = pi * pi / 6.0;

double rel(cplx a, cplx b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

EvalParams params(double alpha, int N, int m, double eps = 0.5)
{
    EvalParams p;
    p.alpha = alpha;
    p.N = N;
    p.m = m;
    p.eps = eps;
    return p;
}

errc code_of(auto &&fn)
{
    try {
        fn();
    } catch (const error &err) {
        return err.code();
    }
    ADD_FAILURE() << "no error raised";
    return errc::invalid_params;
}

} // namespace

TEST(Lerch, SeriesExamples)
{
    EXPECT_EQ(phi_series(0.0, 2.0, 1.0, standard, 1e-14).value, 1.0);
    EXPECT_LT(rel(phi_series(0.5, 1.0, 1.0, standard, 1e-14).value, 2.0 * std::log(2.0)), 1e-13);
    EXPECT_LT(rel(phi_series(0.5, 2.0, 1.0, standard, 1e-14).value, oracle::lerch_series(0.5, 2.0, 1.0)), 1e-13);
    EXPECT_EQ(phi_series(0.5, 2.0, 1.0, standard, 1e-14).method, Method::series);
}

TEST(Lerch, SeriesRegionErrors)
{
    EXPECT_EQ(code_of([] { phi_series(2.0, 2.0, 1.0, standard, 1e-12); }), errc::outside_series_region);
    EXPECT_EQ(code_of([] { phi_series(-1.0, 0.5, 1.0, standard, 1e-12); }), errc::outside_series_region);
    EXPECT_EQ(code_of([] { phi_series(0.5, 2.0, -3.0, standard, 1e-12); }), errc::argument_excluded);
}

TEST(Lerch, IntegrandExamples)
{
    EXPECT_EQ(phi_integrand(0.5, cplx(0.3, 1.0), 0.0, 3), 0.0);
    EXPECT_LT(std::abs(phi_integrand(1.0, 0.7, 1e-9, 0) - 1.0), 1e-8);
    EXPECT_EQ(phi_integrand(1.0, 0.7, 0.0, 0), 1.0);
    EXPECT_LT(rel(phi_integrand(0.0, 1.0, 1.0, 0), 1.0 / e), 1e-15);
    EXPECT_EQ(code_of([] { phi_integrand(2.0, 1.0, std::log(2.0), 0); }), errc::pole_on_path);
}

TEST(Lerch, TaylorExamples)
{
    EXPECT_EQ(phi_taylor(2.0, 0.4, cplx(0.3, 0.1), 2, 0), 0.0);
    const cplx t(0.3, 0.1);
    EXPECT_LT(std::abs(phi_taylor(2.0, 0.4, t, 2, 1) + t), 1e-15);
    EXPECT_EQ(phi_taylor(1.0, 0.4, t, 2, 0), 1.0);
}

TEST(Lerch, TailExamples)
{
    EXPECT_LT(rel(compute_H(0.0, 1.0, 1.0, params(1, 0, 0), standard).value, 1.0 / e), 1e-12);
    EXPECT_LT(rel(compute_H(0.0, 2.0, 1.0, params(1, 0, 0), standard).value, 2.0 / e), 1e-12);
    EXPECT_LT(rel(compute_H(0.5, 1.0, 1.0, params(1, 0, 1), standard).value, -2.0 * std::log(1.0 - 0.5 / e)), 1e-12);
}

TEST(Lerch, PoleSumExamples)
{
    const cplx s(0.4, 1.3);
    EXPECT_EQ(compute_J(2.0, s, 0.5, params(1, 0, 0), standard), 0.0);
    EXPECT_LT(rel(compute_J(1.0, s, 0.5, params(1, 0, 0), standard), 1.0 / (s - 1.0)), 1e-15);
    EXPECT_LT(rel(compute_J(2.0, s, 0.5, params(1, 0, 1), standard), -1.0 / s), 1e-14);
    EXPECT_EQ(code_of([] { compute_J(1.0, 1.0, 0.5, params(1, 0, 0), standard); }), errc::pole_at_one);
    // the Gamma-combined form is finite where J itself has a pole
    const cplx jg = compute_J_over_gamma(2.0, -1.0, 0.5, params(1, 0, 3), standard);
    EXPECT_TRUE(std::isfinite(std::abs(jg)));
}

TEST(Lerch, ContourExamples)
{
    const auto straight = choose_contour(0.5, params(1, 0, 0), standard);
    EXPECT_EQ(straight.vertices, (std::vector<cplx>{0.0, 1.0}));
    EXPECT_EQ(choose_contour(cplx(1.0, 0.5), params(1, 0, 0), standard).vertices, (std::vector<cplx>{0.0, 1.0}));

    // Just below the cut the lift goes above the pole at ln 2 ...
    const auto below = choose_contour(cplx(2.0, -1e-6), params(1, 0, 0, 0.3), standard);
    ASSERT_EQ(below.vertices.size(), 5u);
    const std::vector<cplx> up{0.0, 0.3, cplx(0.3, 0.09), cplx(1.0, 0.09), 1.0};
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_LT(std::abs(below.vertices[i] - up[i]), 1e-15) << i;
    }
    // ... and on the cut the path is the one continuous from the +i side.
    const auto on = choose_contour(2.0, params(1, 0, 0, 0.3), standard);
    ASSERT_EQ(on.vertices.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_LT(std::abs(on.vertices[i] - std::conj(up[i])), 1e-15) << i;
    }
    EXPECT_TRUE(on.lifted);
    EXPECT_EQ(on.eps, 0.3);
}

TEST(Lerch, ContourKeepsClearOfPoles)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> d(-2.5, 2.5);
    for (int i = 0; i < 300; ++i) {
        const cplx z(d(rng), d(rng));
        const EvalParams p = default_params(z, 2.0, 1.0, standard);
        const Contour c = choose_contour(z, p, standard);
        if (std::abs(z - 1.0) < 1e-3) {
            continue;
        }
        const cplx t0 = std::log(z);
        for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k) {
            const cplx a = c.vertices[k], b = c.vertices[k + 1];
            for (int j = -1; j <= 1; ++j) {
                const cplx pole = t0 + cplx(0.0, two_pi * j);
                const double u = std::clamp(std::real((pole - a) * std::conj(b - a)) / std::norm(b - a), 0.0, 1.0);
                EXPECT_GT(std::abs(pole - (a + u * (b - a))), 1e-10) << "z=" << z;
            }
        }
    }
}

TEST(Lerch, NearOriginExamples)
{
    EXPECT_LT(std::abs(compute_I(0.0, 2.0, 1.0, params(1, 0, 0), standard).value - (1.0 - 2.0 / e)), 1e-12);
    EXPECT_LT(std::abs(compute_I(0.0, 2.0, 1.0, params(1, 0, 1), standard).value - (0.5 - 2.0 / e)), 1e-12);
    EXPECT_LT(std::abs(compute_I(0.0, 3.0, 1.0, params(1, 0, 0), standard).value - (2.0 - 5.0 / e)), 1e-12);
    EXPECT_EQ(code_of([] { compute_I(0.5, -2.0, 1.0, params(1, 0, 1), standard); }), errc::invalid_params);
}

TEST(Lerch, EvaluationExamples)
{
    const cplx s(2.0, 3.0);
    EXPECT_LT(rel(lerch_phi(0.0, s, 5.0, standard).value, cpow(5.0, -s, standard)), 1e-15);
    EXPECT_LT(rel(lerch_phi(1.0, 2.0, 1.0, standard).value, zeta2), 1e-10);
    const EvalResult m = lerch_phi(2.0, -1.0, 1.0, standard);
    EXPECT_LT(std::abs(m.value - 1.0), 1e-12);
    EXPECT_EQ(m.method, Method::special_value);

    const cplx expected = oracle::lerch_series(0.5, 2.0, 1.0);
    const EvalResult series = lerch_phi(0.5, 2.0, 1.0, standard);
    const EvalResult forced = lerch_phi_continuation(0.5, 2.0, 1.0, standard);
    EXPECT_EQ(series.method, Method::series);
    EXPECT_EQ(forced.method, Method::continuation);
    EXPECT_LT(rel(series.value, expected), 1e-12);
    EXPECT_LT(rel(forced.value, expected), 1e-10);
    EXPECT_LE(std::abs(forced.value - expected), 10.0 * forced.abs_err_est + 1e-15);
}

TEST(Lerch, EvaluationErrors)
{
    EXPECT_EQ(code_of([] { lerch_phi(0.5, 2.0, -3.0, standard); }), errc::argument_excluded);
    EXPECT_EQ(code_of([] { lerch_phi(1.0, 1.0, 0.5, standard); }), errc::pole_at_one);
    EXPECT_EQ(code_of([] { hurwitz(1.0, 0.5, standard); }), errc::pole_at_one);
    EvalParams bad = params(1, 0, 0);
    EXPECT_EQ(code_of([&] { lerch_phi_continuation(0.5, 2.0, -0.5, standard, bad); }), errc::invalid_params);
}

TEST(Lerch, NearOneIsFlagged)
{
    const EvalResult r = lerch_phi(cplx(1.0, 5e-4), cplx(0.5, 0.5), 1.0, standard);
    EXPECT_TRUE(r.ill_conditioned);
    EXPECT_GT(r.amplification, 1.0);
    EXPECT_FALSE(lerch_phi(cplx(0.5, 0.5), cplx(0.5, 0.5), 1.0, standard).ill_conditioned);
}

TEST(Lerch, SpecialValueExamples)
{
    EXPECT_LT(std::abs(special_value(2.0, 1, cplx(0.3, 0.2)) + 1.0), 1e-15);
    EXPECT_LT(std::abs(special_value(2.0, 2, 1.0) - 1.0), 1e-14);
    EXPECT_LT(std::abs(special_value(1.0, 1, 1.0) + 0.5), 1e-15);
}

TEST(Lerch, HurwitzExamples)
{
    EXPECT_LT(std::abs(hurwitz(2.0, 1.0, standard).value - zeta2), 1e-10);
    EXPECT_LT(std::abs(hurwitz(0.0, 0.25, standard).value - 0.25), 1e-14);
    EXPECT_LT(std::abs(hurwitz(-1.0, 1.0, standard).value + 1.0 / 12.0), 1e-14);
}

TEST(Lerch, PolylogExamples)
{
    EXPECT_LT(std::abs(polylog(1.0, 0.5, standard).value - std::log(2.0)), 1e-12);
    EXPECT_LT(std::abs(polylog(2.0, 1.0, standard).value - zeta2), 1e-10);
    EXPECT_LT(std::abs(polylog(-1.0, 2.0, standard).value - 2.0), 1e-12);
    const EvalResult zero = polylog(cplx(0.3, 2.0), 0.0, standard);
    EXPECT_EQ(zero.value, 0.0);
    EXPECT_EQ(zero.method, Method::closed_form);
}

TEST(Lerch, ClosedFormLogExamples)
{
    EXPECT_LT(std::abs(li1_closed(0.5, standard) - std::log(2.0)), 1e-15);
    EXPECT_EQ(li1_closed(0.0, standard), 0.0);
    EXPECT_LT(std::abs(li1_closed(-1.0, standard) + std::log(2.0)), 1e-15);
    EXPECT_EQ(code_of([] { li1_closed(3.0, standard); }), errc::argument_excluded);
}

// arg(z - 1) rounds to pi on the negative real axis
TEST(Lerch, NegativeRealAxisIsContinuous)
{
    const cplx expected(-0.04895798643856158796, 0.0);
    for (const cplx z : {cplx(-2.0, 0.0), cplx(-2.0, 1e-15), cplx(-2.0, -1e-15)}) {
        EXPECT_LT(std::abs(lerch_phi(z, -1.5, 0.75, standard).value - expected), 1e-12) << z;
    }
    const cplx minus_one = std::exp(cplx(0.0, pi));
    EXPECT_LT(std::abs(lerch_phi(minus_one, -1.5, 0.75, standard).value - lerch_phi(-1.0, -1.5, 0.75, standard).value),
              1e-12);
}

TEST(LerchProperty, ContinuationMatchesSeries)
{
    for (const BranchConfig &cfg : {standard, rotated}) {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> u(0.0, 1.0), ang(-pi, pi), box(-5.0, 5.0), wre(0.1, 5.0),
            wim(-3.0, 3.0);
        for (int i = 0; i < 60; ++i) {
            const cplx z = std::polar(0.9 * std::sqrt(u(rng)), ang(rng));
            const cplx s(box(rng), box(rng)), w(wre(rng), wim(rng));
            const cplx expected = oracle::lerch_series(z, s, w, cfg.phi());
            const cplx got = lerch_phi_continuation(z, s, w, cfg).value;
            EXPECT_LT(rel(got, expected), 1e-9) << "z=" << z << " s=" << s << " w=" << w << " nu=" << nu(cfg);
        }
    }
}

TEST(LerchProperty, ContiguousRelation)
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> zd(-2.5, 2.5), sd(-3.0, 3.0), wre(0.2, 3.0), wim(-1.5, 1.5);
    int tested = 0, continued = 0;
    while (tested < 50) {
        const cplx z(zd(rng), zd(rng)), s(sd(rng), sd(rng)), w(wre(rng), wim(rng));
        if (std::abs(z - 1.0) < 0.2 || on_cut_z(z, standard)) {
            continue;
        }
        ++tested;
        const EvalResult lhs = lerch_phi(z, s, w, standard);
        continued += lhs.method == Method::continuation;
        const cplx rhs = z * lerch_phi(z, s, w + 1.0, standard).value + cpow(w, -s, standard);
        EXPECT_LT(std::abs(lhs.value - rhs) / std::max(1.0, std::abs(rhs)), 1e-8) << "z=" << z << " s=" << s;
    }
    EXPECT_GT(continued, 20);
}

TEST(LerchProperty, ContinuationAtNonpositiveIntegers)
{
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> d(-2.0, 2.0), wre(0.1, 2.0);
    for (int i = 0; i < 6; ++i) {
        cplx z;
        do {
            z = cplx(d(rng), d(rng));
        } while (std::abs(z - 1.0) < 0.1 || on_cut_z(z, standard));
        const cplx w(wre(rng), d(rng));
        for (int r = 1; r <= 12; ++r) {
            const cplx s(1.0 - r, 0.0);
            const cplx exact = special_value(z, r, w);
            const cplx got = lerch_phi_continuation(z, s, w, standard).value;
            EXPECT_LT(std::abs(got - exact) / std::max(1.0, std::abs(exact)), 1e-8) << "r=" << r << " z=" << z;
        }
    }
}

TEST(LerchProperty, HurwitzResidue)
{
    for (const cplx w : {cplx(1.0), cplx(0.3), cplx(2.0, 1.0)}) {
        for (int k = 0; k < 4; ++k) {
            const cplx s = 1.0 + 1e-4 * std::polar(1.0, k * pi / 2.0);
            EXPECT_LT(std::abs((s - 1.0) * hurwitz(s, w, standard).value - 1.0), 1e-3) << "w=" << w << " k=" << k;
        }
    }
}

TEST(LerchProperty, ParameterIndependence)
{
    const std::vector<std::array<cplx, 3>> points{{cplx(0.5, 0.5), cplx(1.5, 1.0), cplx(0.7, 0.0)},
                                                  {cplx(-1.5, 0.8), cplx(-0.7, 2.0), cplx(1.2, -0.4)},
                                                  {cplx(1.8, -0.9), cplx(2.5, 0.0), cplx(0.3, 0.2)}};
    for (const auto &[z, s, w] : points) {
        const EvalParams base = default_params(z, s, w, standard);
        const double a0 = std::max(0.0, std::log(std::abs(z)));
        std::vector<cplx> values;
        for (double alpha : {1.0, 2.0, 3.0}) {
            for (int dn : {0, 3}) {
                for (int dm : {0, 4}) {
                    EvalParams p = base;
                    p.alpha = std::max(alpha, a0 + alpha - 1.0 + 0.5);
                    p.N += dn;
                    p.m += dm;
                    values.push_back(lerch_phi_continuation(z, s, w, standard, p).value);
                }
            }
        }
        for (const cplx &a : values) {
            for (const cplx &b : values) {
                EXPECT_LT(std::abs(a - b), 1e-8) << "z=" << z;
            }
        }
    }
}

TEST(LerchProperty, DecompositionIdentity)
{
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> u(0.0, 1.0), ang(-pi, pi), sre(1.1, 4.0), sim(-3.0, 3.0),
        wre(0.2, 3.0);
    for (const BranchConfig &cfg : {standard, rotated}) {
        for (int i = 0; i < 10; ++i) {
            const cplx z = std::polar(0.9 * u(rng), ang(rng));
            const cplx s(sre(rng), sim(rng)), w(wre(rng), sim(rng) / 2.0);
            EvalParams p = default_params(z, s, w, cfg);
            p.N = 2;
            p.m = 2;
            const cplx phi = oracle::lerch_series(z, s, w, cfg.phi());
            const cplx head = cpow(w, -s, cfg) + z * cpow(w + 1.0, -s, cfg);
            const cplx lhs = std::exp(cplx(0.0, 2.0 * two_pi * nu(cfg)) * s) * lerch::gamma(s) * (phi - head) / (z * z);
            const cplx rhs = compute_H(z, s, w, p, cfg).value + compute_I(z, s, w, p, cfg).value +
                             compute_J(z, s, w, p, cfg);
            // e^{4 pi i nu s} scales both sides when nu != 0
            const double scale = (nu(cfg) == 0) ? 1.0 : std::max(1.0, std::abs(lhs));
            EXPECT_LT(std::abs(lhs - rhs), 1e-9 * scale) << "z=" << z << " s=" << s << " nu=" << nu(cfg);
        }
    }
}

TEST(LerchProperty, CutDiscontinuity)
{
    const EvalResult above = lerch_phi(cplx(2.0, 1e-6), 2.0, 1.0, standard);
    const EvalResult below = lerch_phi(cplx(2.0, -1e-6), 2.0, 1.0, standard);
    const EvalResult on = lerch_phi(2.0, 2.0, 1.0, standard);
    EXPECT_GT(std::abs(above.value - below.value), 10.0 * (above.abs_err_est + below.abs_err_est));
    EXPECT_LT(std::abs(on.value - above.value), 1e-6);
    EXPECT_EQ(on.domain.variant, DomainVariant::z_on_cut);
}
