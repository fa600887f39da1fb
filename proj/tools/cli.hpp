#ifndef LERCH_TOOLS_CLI_HPP
#define LERCH_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lerch.hpp>

#include "parse.hpp"
#include "selftest.hpp"
#include "verify.hpp"

namespace lerch::tools
{

enum exit_code : int { ok = 0, verify_failed = 1, excluded = 2, numeric_failure = 3, usage = 64 };

struct CliConfig {
    double phi = -pi;
    double phi_prime = 0.0;
    std::optional<double> alpha;
    std::optional<int> N;
    std::optional<int> m;
    double tol = 1e-12;
    unsigned long long seed = 0;
    std::string format = "text";
    std::string out;
    std::string method = "auto";
};

inline int exit_code_for(errc code)
{
    switch (code) {
        case errc::argument_excluded:
        case errc::pole_at_one:
            return excluded;
        case errc::invalid_params:
        case errc::branch_config_invalid:
            return usage;
        default:
            return numeric_failure;
    }
}

/// Tolerance from LERCH_DEFAULT_TOL when set to a positive number.
inline double default_tolerance()
{
    if (const char *env = std::getenv("LERCH_DEFAULT_TOL")) {
        char *end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) {
            return v;
        }
    }
    return 1e-12;
}

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline cplx require_complex(const std::string &flag, const std::string &text)
{
    const auto v = parse_complex(text);
    if (!v) {
        throw usage_error("cannot parse " + flag + " '" + text + "' as a complex literal like 1.5-0.25i");
    }
    return *v;
}

inline bool has_overrides(const CliConfig &c)
{
    return c.alpha || c.N || c.m || c.tol != 1e-12;
}

inline EvalParams build_params(const CliConfig &c, cplx z, cplx s, cplx w, const BranchConfig &cfg)
{
    EvalParams p = default_params(z, s, w, cfg);
    if (c.alpha) {
        p.alpha = *c.alpha;
    }
    if (c.N) {
        p.N = *c.N;
    }
    if (c.m) {
        p.m = *c.m;
    }
    p.quad_tol = c.tol;
    p.series_tol = c.tol;
    return p;
}

inline EvalResult evaluate(const CliConfig &c, cplx z, cplx s, cplx w, const BranchConfig &cfg)
{
    if (c.method == "series") {
        return phi_series(z, s, w, cfg, c.tol);
    }
    std::optional<EvalParams> p;
    if (c.method == "continuation") {
        p = build_params(c, z, s, w, cfg);
        return lerch_phi_continuation(z, s, w, cfg, p);
    }
    if (has_overrides(c) && !is_nonpositive_integer(s) && !is_nonpositive_integer(w)) {
        p = build_params(c, z, s, w, cfg);
    }
    return lerch_phi(z, s, w, cfg, p);
}

inline nlohmann::json to_json(cplx v)
{
    return {{"re", v.real()}, {"im", v.imag()}};
}

inline nlohmann::json to_json(const EvalParams &p)
{
    return {{"alpha", p.alpha}, {"N", p.N},           {"m", p.m},
            {"eps", p.eps},     {"quad_tol", p.quad_tol}, {"series_tol", p.series_tol}};
}

inline void print_result(std::ostream &os, const CliConfig &c, const EvalResult &r)
{
    if (c.format == "json") {
        nlohmann::json j = {{"value", to_json(r.value)},
                            {"err", r.abs_err_est},
                            {"method", to_string(r.method)},
                            {"domain", to_string(r.domain.variant)},
                            {"params", to_json(r.params)},
                            {"ill_conditioned", r.ill_conditioned}};
        os << j.dump() << "\n";
    } else if (c.format == "csv") {
        os << "value_re,value_im,err,method,domain\n"
           << format_real(r.value.real()) << "," << format_real(r.value.imag()) << "," << format_real(r.abs_err_est)
           << "," << to_string(r.method) << "," << to_string(r.domain.variant) << "\n";
    } else {
        os << "value   " << format_complex(r.value) << "\n"
           << "err     " << format_real(r.abs_err_est) << "\n"
           << "method  " << to_string(r.method) << "\n"
           << "domain  " << to_string(r.domain.variant) << "\n";
        if (r.ill_conditioned) {
            os << "warning ill-conditioned near z = 1, amplification " << format_real(r.amplification) << "\n";
        }
    }
}

inline int cmd_bernoulli(std::ostream &os, const CliConfig &c, int r, bool exact, const std::string &z_text,
                         const std::string &w_text)
{
    if (r < 0) {
        throw usage_error("--r must be nonnegative");
    }
    nlohmann::json j = {{"r", r}};
    std::string text;
    if (exact) {
        text = apostol_to_string(apostol_exact(r));
        j["exact"] = text;
    } else {
        if (z_text.empty() || w_text.empty()) {
            throw usage_error("numeric output needs --z and --w (or pass --exact)");
        }
        const cplx v = apostol_eval(r, require_complex("--z", z_text), require_complex("--w", w_text));
        text = format_complex(v);
        j["value"] = to_json(v);
    }
    if (c.format == "json") {
        os << j.dump() << "\n";
    } else {
        os << text << "\n";
    }
    return ok;
}

inline int cmd_verify(std::ostream &os, const CliConfig &c, const BranchConfig &cfg, const std::string &equation,
                      int samples, double threshold)
{
    if (samples < 0) {
        throw usage_error("--samples must be nonnegative");
    }
    const auto rows = run_sweep(equation, samples, c.seed, cfg);
    bool pass = true;
    nlohmann::json summary = nlohmann::json::array();
    if (c.format == "csv") {
        os << "equation,a_re,a_im,s_re,s_im,w_re,w_im,residual\n";
        for (const auto &r : rows) {
            os << r.equation << "," << format_real(r.point.a.real()) << "," << format_real(r.point.a.imag()) << ","
               << format_real(r.point.s.real()) << "," << format_real(r.point.s.imag()) << ","
               << format_real(r.point.w.real()) << "," << format_real(r.point.w.imag()) << ","
               << format_real(r.residual) << "\n";
        }
    }
    for (const auto &eq : expand_equations(equation)) {
        std::vector<double> res;
        int failures = 0;
        for (const auto &r : rows) {
            if (r.equation.rfind(eq, 0) == 0) {
                res.push_back(r.residual);
                if (!r.ok || !(r.residual <= threshold)) {
                    ++failures;
                }
            }
        }
        const double mx = res.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
        pass = pass && failures == 0;
        summary.push_back({{"equation", eq},
                           {"samples", res.size()},
                           {"max", mx},
                           {"median", median(res)},
                           {"failures", failures}});
        if (c.format == "text") {
            os << eq << ": samples " << res.size() << ", max " << format_real(mx) << ", median "
               << format_real(median(res)) << ", failures " << failures << "\n";
        }
    }
    if (c.format == "json") {
        os << nlohmann::json{{"equations", summary}, {"threshold", threshold}, {"pass", pass}}.dump() << "\n";
    } else if (c.format == "text") {
        os << (pass ? "PASS" : "FAIL") << " (threshold " << format_real(threshold) << ")\n";
    }
    return pass ? ok : verify_failed;
}

inline int cmd_selftest(std::ostream &os, const CliConfig &c, const BranchConfig &cfg, const std::string &suite)
{
    std::vector<std::string> names = (suite == "all") ? suite_names() : std::vector<std::string>{suite};
    bool pass = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto &name : names) {
        const SuiteResult r = run_suite(name, cfg);
        pass = pass && r.pass;
        if (c.format == "json") {
            j.push_back({{"suite", r.name}, {"pass", r.pass}, {"worst", r.worst}, {"checks", r.checks}});
        } else {
            os << (r.pass ? "pass " : "FAIL ") << r.name << " (" << r.checks << " checks, worst "
               << format_real(r.worst) << ")" << (r.detail.empty() ? "" : " at " + r.detail) << "\n";
        }
    }
    if (c.format == "json") {
        os << nlohmann::json{{"suites", j}, {"pass", pass}}.dump() << "\n";
    }
    return pass ? ok : verify_failed;
}

inline int cmd_table(std::ostream &os, const CliConfig &c, const BranchConfig &cfg, const std::string &grid_text)
{
    const auto grid = parse_grid(grid_text);
    if (!grid) {
        throw usage_error("malformed --grid; expected z=a:b:n,s=a:b:n,w=a:b:n");
    }
    os << "z_re,z_im,s_re,s_im,w_re,w_im,phi_re,phi_im,err,method\n";
    if (grid->empty()) {
        return ok;
    }
    std::vector<cplx> zs, ss, ws;
    for (const auto &axis : *grid) {
        (axis.name == 'z' ? zs : axis.name == 's' ? ss : ws) = axis.points();
    }
    for (const auto &z : zs) {
        for (const auto &s : ss) {
            for (const auto &w : ws) {
                os << format_real(z.real()) << "," << format_real(z.imag()) << "," << format_real(s.real()) << ","
                   << format_real(s.imag()) << "," << format_real(w.real()) << "," << format_real(w.imag()) << ",";
                const DomainClass d = classify(z, s, w, cfg);
                std::string note;
                if (d.excluded) {
                    note = "excluded";
                } else if (d.pole) {
                    note = "pole";
                } else if (d.variant != DomainVariant::full) {
                    note = to_string(d.variant);
                }
                if (note.empty()) {
                    try {
                        const EvalResult r = evaluate(c, z, s, w, cfg);
                        os << format_real(r.value.real()) << "," << format_real(r.value.imag()) << ","
                           << format_real(r.abs_err_est) << "," << to_string(r.method) << "\n";
                        continue;
                    } catch (const error &e) {
                        note = to_string(e.code());
                    }
                }
                os << ",,," << note << "\n";
            }
        }
    }
    return ok;
}

/// Runs the command line; output goes to `out` unless --out names a file.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Lerch zeta function evaluator", "lerch"};
    app.require_subcommand(1);
    app.fallthrough();
    CliConfig c;
    c.tol = default_tolerance();
    app.add_option("--phi", c.phi, "argument range is [phi, phi + 2 pi)");
    app.add_option("--phi-prime", c.phi_prime, "angle of the z-plane cut from 1");
    app.add_option("--alpha", c.alpha, "integral split point");
    app.add_option("--N", c.N, "series head length");
    app.add_option("--m", c.m, "Taylor subtraction order");
    app.add_option("--tol", c.tol, "relative tolerance (env LERCH_DEFAULT_TOL)")->check(CLI::PositiveNumber);
    app.add_option("--seed", c.seed, "seed for verify sampling");
    app.add_option("--format", c.format)->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", c.out, "write output to this file");

    std::string z_text, s_text, w_text;
    auto *eval = app.add_subcommand("eval", "evaluate Phi(z, s, w)");
    eval->add_option("--z", z_text)->required();
    eval->add_option("--s", s_text)->required();
    eval->add_option("--w", w_text)->required();
    eval->add_option("--method", c.method)->check(CLI::IsMember({"auto", "series", "continuation"}));

    auto *hurw = app.add_subcommand("hurwitz", "Hurwitz zeta(s, w)");
    hurw->add_option("--s", s_text)->required();
    hurw->add_option("--w", w_text)->required();

    auto *poly = app.add_subcommand("polylog", "polylogarithm Li_s(z)");
    poly->add_option("--s", s_text)->required();
    poly->add_option("--z", z_text)->required();

    int r = 0;
    bool exact = false;
    auto *bern = app.add_subcommand("bernoulli", "Apostol-Bernoulli function B_r(z, w)");
    bern->add_option("--r", r)->required();
    bern->add_flag("--exact", exact, "print the exact (u, w) form, u = 1/(z - 1)");
    bern->add_option("--z", z_text);
    bern->add_option("--w", w_text);

    std::string equation = "all";
    int samples = 50;
    double threshold = 1e-7;
    auto *verify = app.add_subcommand("verify", "functional-equation residual sweep");
    verify->add_option("--equation", equation)
        ->check(CLI::IsMember({"lerch", "apostol", "apostol-minus", "diffdiff", "all"}));
    verify->add_option("--samples", samples);
    verify->add_option("--threshold", threshold);

    std::string suite = "all";
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    auto *self = app.add_subcommand("selftest", "internal consistency suites");
    self->add_option("--suite", suite)->check(CLI::IsMember(suites));

    std::string grid_text;
    auto *table = app.add_subcommand("table", "CSV table over a grid");
    table->add_option("--grid", grid_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    std::ostringstream buffer;
    int code = ok;
    try {
        const BranchConfig cfg(c.phi, c.phi_prime);
        if (eval->parsed()) {
            const cplx z = require_complex("--z", z_text);
            const cplx s = require_complex("--s", s_text);
            const cplx w = require_complex("--w", w_text);
            print_result(buffer, c, evaluate(c, z, s, w, cfg));
        } else if (hurw->parsed()) {
            print_result(buffer, c, hurwitz(require_complex("--s", s_text), require_complex("--w", w_text), cfg));
        } else if (poly->parsed()) {
            print_result(buffer, c, polylog(require_complex("--s", s_text), require_complex("--z", z_text), cfg));
        } else if (bern->parsed()) {
            code = cmd_bernoulli(buffer, c, r, exact, z_text, w_text);
        } else if (verify->parsed()) {
            code = cmd_verify(buffer, c, cfg, equation, samples, threshold);
        } else if (self->parsed()) {
            code = cmd_selftest(buffer, c, cfg, suite);
        } else if (table->parsed()) {
            code = cmd_table(buffer, c, cfg, grid_text);
        }
    } catch (const usage_error &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const error &e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    }

    if (c.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(c.out);
        if (!file) {
            err << "error: cannot open " << c.out << "\n";
            return usage;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace lerch::tools

#endif
