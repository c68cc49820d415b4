#include "tempus/verify.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "tempus/expr.hpp"
#include "tempus/format.hpp"

namespace tempus::verify {

namespace {

using Clock = std::chrono::steady_clock;

double rel_error(double lhs, double rhs)
{
    return std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
}

Report finish(Report r, Clock::time_point started)
{
    r.abs_err = std::fabs(r.lhs - r.rhs);
    r.rel_err = rel_error(r.lhs, r.rhs);
    const bool within =
        r.abs_err <= r.tolerance || r.rel_err <= r.tolerance;
    r.pass = r.expect_mismatch ? !within : within;
    r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now()
                                                             - started)
                       .count();
    return r;
}

struct SuiteScale {
    std::string label;
    TimeScale ts;
    double a;
    double t;
    bool pure_discrete;
    std::vector<double> samples; // interior points for derivative checks
};

std::vector<SuiteScale> suite_scales()
{
    std::vector<SuiteScale> scales;

    GeneratorSpec zspec{IntegersSpec{0, 8}};
    scales.push_back({"Z[0,8]", generate(zspec), 0.0, 3.0, true,
                      {1.0, 2.0, 3.0}});

    GeneratorSpec rspec{RealIntervalSpec{0.0, 1.0}};
    scales.push_back({"R[0,1]", generate(rspec), 0.0, 1.0, false,
                      {0.25, 0.5, 0.75}});

    GeneratorSpec qspec{QScaleSpec{0.5, 0, 6}};
    scales.push_back({"q(0.5)^[0,6]", generate(qspec), std::pow(0.5, 6), 1.0,
                      true,
                      {0.03125, 0.125, 0.5}});

    TimeScale mixed = TimeScale::from_pieces({{0, 1}, {2, 2}, {3, 3}});
    scales.push_back({"[0,1]u{2,3}", mixed, 0.0, 3.0, false,
                      {0.5, 1.0, 2.0}});

    return scales;
}

std::vector<ScaleFunction> suite_functions()
{
    return {expr::make_function("1"), expr::make_function("t"),
            expr::make_function("t^2"), expr::make_function("sin(t)")};
}

bool selected(const SuiteConfig& cfg, const std::string& name)
{
    if (cfg.only.empty())
        return true;
    for (const auto& pat : cfg.only)
        if (name.find(pat) != std::string::npos)
            return true;
    return false;
}

} // namespace

int SuiteReport::passed() const
{
    int n = 0;
    for (const auto& r : reports)
        n += r.pass ? 1 : 0;
    return n;
}

int SuiteReport::failed() const
{
    return static_cast<int>(reports.size()) - passed();
}

void SuiteReport::write_text(std::ostream& out) const
{
    for (const auto& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << r.check << " scale=" << r.scale
            << " f=" << r.func << " " << r.order
            << " lhs=" << format_sig12(r.lhs) << " rhs=" << format_sig12(r.rhs)
            << " abs_err=" << format_sig12(r.abs_err);
        if (r.expect_mismatch)
            out << " (expect: mismatch)";
        out << "\n";
    }
    out << passed() << " passed, " << failed() << " failed\n";
}

void SuiteReport::write_csv(std::ostream& out) const
{
    out << "check,scale,f,order,lhs,rhs,abs_err,rel_err,pass\n";
    for (const auto& r : reports) {
        out << r.check << "," << r.scale << "," << r.func << "," << r.order
            << "," << format_roundtrip(r.lhs) << "," << format_roundtrip(r.rhs)
            << "," << format_roundtrip(r.abs_err) << ","
            << format_roundtrip(r.rel_err) << "," << (r.pass ? "1" : "0")
            << "\n";
    }
}

Report check_cauchy(const ScaleFunction& f, const TimeScale& ts, double a,
                    double t, int n, double tol,
                    const std::string& scale_label)
{
    const auto started = Clock::now();
    Report r;
    r.check = "cauchy";
    r.scale = scale_label;
    r.func = f.label;
    r.order = "n=" + std::to_string(n);
    r.tolerance = tol;
    r.lhs = repeated_integral(f, ts, a, t, n);
    r.rhs = frac_integral(f, ts, a, t, FracOrder(static_cast<double>(n)),
                          KernelVariant::Sigma);
    return finish(r, started);
}

Report counterexample_n3(long long t)
{
    const auto started = Clock::now();
    Report r;
    r.check = "counterexample_n3";
    r.scale = "Z[0," + std::to_string(t) + "]";
    r.func = "1";
    r.order = "n=3";
    r.tolerance = 1e-9;
    r.expect_mismatch = true;

    // Brute-force triple nested sum for the repeated integral of 1 on Z.
    long long triple = 0;
    for (long long t2 = 0; t2 < t; ++t2)
        for (long long t1 = 0; t1 < t2; ++t1)
            triple += t1;
    r.lhs = static_cast<double>(triple);

    // Kernel form: (1/2!) sum_{s=0}^{t-1} (t - s - 1)^2.
    double kernel = 0.0;
    for (long long s = 0; s < t; ++s) {
        const double d = static_cast<double>(t - s - 1);
        kernel += d * d;
    }
    r.rhs = 0.5 * kernel;
    return finish(r, started);
}

Report check_real_reduction(double alpha, double t, double tol)
{
    const auto started = Clock::now();
    Report r;
    r.check = "real_reduction";
    r.scale = "R[0," + format_sig12(t) + "]";
    r.func = "1";
    r.order = "alpha=" + format_sig12(alpha);
    r.tolerance = tol;

    GeneratorSpec spec{RealIntervalSpec{0.0, t}};
    const TimeScale ts = generate(spec);
    const ScaleFunction one = expr::make_function("1");
    r.lhs = frac_integral(one, ts, 0.0, t, FracOrder(alpha),
                          KernelVariant::Sigma);
    r.rhs = std::pow(t, alpha) / gamma_fn(alpha + 1.0);
    return finish(r, started);
}

Report check_expansion_equivalence(const ScaleFunction& f, const TimeScale& ts,
                                   double a, double t, int n, double tol,
                                   const std::string& scale_label)
{
    const auto started = Clock::now();
    Report r;
    r.check = "expansion";
    r.scale = scale_label;
    r.func = f.label;
    r.order = "n=" + std::to_string(n);
    r.tolerance = tol;
    r.lhs = frac_integral(f, ts, a, t, FracOrder(static_cast<double>(n)),
                          KernelVariant::Sigma);
    r.rhs = binomial_expanded_g(f, ts, a, t, n);
    return finish(r, started);
}

SuiteReport run_suite(const SuiteConfig& cfg)
{
    SuiteReport suite;
    const auto scales = suite_scales();
    const auto funcs = suite_functions();

    if (selected(cfg, "cauchy")) {
        for (const auto& sc : scales)
            for (const auto& f : funcs)
                for (int n : {1, 2}) {
                    const double tol = sc.pure_discrete ? 1e-12 : 1e-7;
                    suite.reports.push_back(
                        check_cauchy(f, sc.ts, sc.a, sc.t, n, tol, sc.label));
                }
        // On the real line the classical formula holds for every n.
        {
            GeneratorSpec spec{RealIntervalSpec{0.0, 1.0}};
            const TimeScale real = generate(spec);
            Report r = check_cauchy(expr::make_function("1"), real, 0.0, 1.0,
                                    3, 1e-7, "R[0,1]");
            r.check = "cauchy_n3_real";
            suite.reports.push_back(r);
        }
    }

    if (selected(cfg, "counterexample"))
        for (long long t = 3; t <= 8; ++t)
            suite.reports.push_back(counterexample_n3(t));

    if (selected(cfg, "real_reduction"))
        for (double alpha : {0.5, 1.5, 2.5})
            for (double t : {0.5, 1.0, 2.0})
                suite.reports.push_back(check_real_reduction(alpha, t, 1e-6));

    if (selected(cfg, "expansion"))
        for (const auto& sc : scales)
            for (int n = 1; n <= 5; ++n)
                suite.reports.push_back(check_expansion_equivalence(
                    funcs[1], sc.ts, sc.a, sc.t, n, 1e-7, sc.label));

    if (selected(cfg, "alternating_sum")) {
        for (int n = 2; n <= 6; ++n) {
            const auto started = Clock::now();
            Report r;
            r.check = "alternating_sum";
            r.scale = "-";
            r.func = "-";
            r.order = "n=" + std::to_string(n);
            r.tolerance = 1e-15;
            double sum = 0.0;
            double kfac = 1.0;
            for (int k = 0; k <= n - 1; ++k) {
                if (k > 0)
                    kfac *= k;
                double nfac = 1.0;
                for (int i = 2; i <= n - 1 - k; ++i)
                    nfac *= i;
                sum += ((k % 2 == 0) ? 1.0 : -1.0) / (kfac * nfac);
            }
            r.lhs = sum;
            r.rhs = 0.0;
            suite.reports.push_back(finish(r, started));
        }
    }

    if (selected(cfg, "motivating")) {
        const ScaleFunction sq = expr::make_function("t^2");
        for (const auto& sc : scales) {
            const auto started = Clock::now();
            Report r;
            r.check = "motivating_sq_derivative";
            r.scale = sc.label;
            r.func = "t^2";
            r.order = "-";
            r.tolerance = sc.pure_discrete ? 1e-12 : 1e-6;
            double worst = -1.0;
            for (double p : sc.samples) {
                const double lhs = delta_derivative(sq, sc.ts, p);
                const double rhs = p + sc.ts.sigma(p);
                if (std::fabs(lhs - rhs) > worst) {
                    worst = std::fabs(lhs - rhs);
                    r.lhs = lhs;
                    r.rhs = rhs;
                }
            }
            suite.reports.push_back(finish(r, started));
        }
        for (const auto& sc : scales) {
            const auto started = Clock::now();
            Report r;
            r.check = "motivating_integral";
            r.scale = sc.label;
            r.func = "s+sigma(s)";
            r.order = "-";
            r.tolerance = 1e-8;
            ScaleFunction g{
                [&](double s) { return s + sc.ts.sigma(s); }, "s+sigma(s)"};
            r.lhs = delta_integral(g, sc.ts, sc.a, sc.t);
            r.rhs = sc.t * sc.t - sc.a * sc.a;
            suite.reports.push_back(finish(r, started));
        }
    }

    if (selected(cfg, "alpha1")) {
        for (const auto& sc : scales)
            for (KernelVariant kv : {KernelVariant::Sigma, KernelVariant::Plain}) {
                const auto started = Clock::now();
                Report r;
                r.check = kv == KernelVariant::Sigma ? "alpha1_sigma"
                                                     : "alpha1_plain";
                r.scale = sc.label;
                r.func = "t";
                r.order = "alpha=1";
                r.tolerance = 1e-9;
                r.lhs = frac_integral(funcs[1], sc.ts, sc.a, sc.t,
                                      FracOrder(1.0), kv);
                r.rhs = delta_integral(funcs[1], sc.ts, sc.a, sc.t);
                suite.reports.push_back(finish(r, started));
            }
    }

    if (selected(cfg, "caputo_const")) {
        GeneratorSpec spec{RealIntervalSpec{0.0, 2.0}};
        const TimeScale real = generate(spec);
        const TimeScale& zwin = scales[0].ts;
        struct Case {
            const TimeScale* ts;
            double t;
            std::string label;
        };
        for (const Case& c : {Case{&real, 1.0, "R[0,2]"},
                              Case{&zwin, 3.0, "Z[0,8]"}}) {
            const auto started = Clock::now();
            Report r;
            r.check = "caputo_const";
            r.scale = c.label;
            r.func = "1";
            r.order = "alpha=0.5";
            r.tolerance = 1e-6;
            r.lhs = caputo_derivative(funcs[0], *c.ts, 0.0, c.t,
                                      FracOrder(0.5));
            r.rhs = 0.0;
            suite.reports.push_back(finish(r, started));
        }
    }

    if (selected(cfg, "closed_form")) {
        GeneratorSpec spec{RealIntervalSpec{0.0, 2.0}};
        const TimeScale real = generate(spec);
        const double sqrt_pi = std::sqrt(3.141592653589793238462643);

        const auto add = [&](const std::string& check, const ScaleFunction& f,
                             double rhs, auto&& op) {
            const auto started = Clock::now();
            Report r;
            r.check = check;
            r.scale = "R[0,2]";
            r.func = f.label;
            r.order = "alpha=0.5";
            r.tolerance = 1e-4;
            r.lhs = op();
            r.rhs = rhs;
            suite.reports.push_back(finish(r, started));
        };

        // Classical closed forms at t = 1: D^0.5 1 = 1/sqrt(pi t),
        // D^0.5 t = 2 sqrt(t)/sqrt(pi) for both operator flavours.
        add("rl_closed_form", funcs[0], 1.0 / sqrt_pi, [&] {
            return rl_derivative(funcs[0], real, 0.0, 1.0, FracOrder(0.5));
        });
        add("rl_closed_form", funcs[1], 2.0 / sqrt_pi, [&] {
            return rl_derivative(funcs[1], real, 0.0, 1.0, FracOrder(0.5));
        });
        add("caputo_closed_form", funcs[1], 2.0 / sqrt_pi, [&] {
            return caputo_derivative(funcs[1], real, 0.0, 1.0, FracOrder(0.5));
        });
    }

    return suite;
}

} // namespace tempus::verify
