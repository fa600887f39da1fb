// Evaluates Phi on both sides of the z-cut and on it, plus a few classical values.
#include <cstdio>

#include <lerch.hpp>

int main()
{
    using namespace lerch;
    const BranchConfig cfg; // phi = -pi, phi' = 0

    auto show = [](const char *label, const EvalResult &r) {
        std::printf("%-28s % .15f %+.15fi  err %.1e  %s\n", label, r.value.real(), r.value.imag(), r.abs_err_est,
                    to_string(r.method));
    };

    show("zeta(2)", hurwitz(2.0, 1.0, cfg));
    show("zeta(-1)", hurwitz(-1.0, 1.0, cfg));
    show("zeta(1/2, 1/3)", hurwitz(0.5, 1.0 / 3.0, cfg));
    show("Li_2(1/2)", polylog(2.0, 0.5, cfg));
    show("Li_1(3 + 4i)", polylog(1.0, cplx(3.0, 4.0), cfg));
    show("Phi(2 + 1e-6i, 2, 1)", lerch_phi(cplx(2.0, 1e-6), 2.0, 1.0, cfg));
    show("Phi(2, 2, 1)  [on cut]", lerch_phi(cplx(2.0, 0.0), 2.0, 1.0, cfg));
    show("Phi(2 - 1e-6i, 2, 1)", lerch_phi(cplx(2.0, -1e-6), 2.0, 1.0, cfg));

    // Same point on another sheet: arguments in [pi/2, 5pi/2), z-cut along 1 + iR+.
    const BranchConfig rotated(pi / 2.0, pi / 2.0);
    show("Phi(0.3+0.4i, 1.5+i, 0.7)", lerch_phi(cplx(0.3, 0.4), cplx(1.5, 1.0), 0.7, rotated));

    std::printf("B_3 exact: %s\n", apostol_to_string(apostol_exact(3)).c_str());
    return 0;
}
