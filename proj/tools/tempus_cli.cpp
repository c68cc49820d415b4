// tempus: delta and fractional calculus on time scales, from the shell.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tempus/expr.hpp"
#include "tempus/format.hpp"
#include "tempus/fractional.hpp"
#include "tempus/scale_spec.hpp"
#include "tempus/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitIo = 4;

struct ScaleOptions {
    std::string generator;
    std::string pieces;
    std::string file;
};

void add_scale_options(CLI::App* cmd, ScaleOptions& opts)
{
    auto* g = cmd->add_option("--generator", opts.generator,
                              "Compact generator spec, e.g. integers(0,5)");
    auto* p = cmd->add_option("--pieces", opts.pieces,
                              "Inline pieces JSON, e.g. [[0,1],[2,2]]");
    auto* f = cmd->add_option("--scale-file", opts.file,
                              "Path to a JSON scale spec document");
    g->excludes(p)->excludes(f);
    p->excludes(f);
}

tempus::TimeScale resolve_scale(const ScaleOptions& opts)
{
    if (!opts.generator.empty())
        return tempus::scale_from_generator_text(opts.generator);
    if (!opts.pieces.empty())
        return tempus::scale_from_pieces_text(opts.pieces);
    if (!opts.file.empty())
        return tempus::scale_from_json_file(opts.file);
    throw CLI::ValidationError(
        "exactly one of --generator, --pieces, --scale-file is required");
}

tempus::QuadratureConfig quadrature_from_env()
{
    tempus::QuadratureConfig cfg;
    if (const char* tol = std::getenv("TEMPUS_FRAC_TOL")) {
        cfg.abs_tol = std::strtod(tol, nullptr);
        cfg.rel_tol = cfg.abs_tol;
    }
    return cfg;
}

int run_scale_info(const ScaleOptions& sopts,
                   const std::vector<double>& samples)
{
    const tempus::TimeScale ts = resolve_scale(sopts);

    std::size_t isolated = 0;
    std::cout << "pieces:";
    for (const auto& p : ts.pieces()) {
        if (p.left == p.right) {
            ++isolated;
            std::cout << " {" << tempus::format_sig12(p.left) << "}";
        } else {
            std::cout << " [" << tempus::format_sig12(p.left) << ","
                      << tempus::format_sig12(p.right) << "]";
        }
    }
    std::cout << "\n"
              << ts.pieces().size() << " pieces, " << isolated
              << " isolated points\n";

    std::vector<double> pts = samples;
    if (pts.empty())
        for (const auto& p : ts.pieces()) {
            pts.push_back(p.left);
            if (p.right != p.left)
                pts.push_back(p.right);
        }

    std::cout << "t,sigma,rho,mu,class\n";
    for (double t : pts) {
        const double s = ts.require(t);
        const auto pc = ts.classify(s);
        std::cout << tempus::format_roundtrip(s) << ","
                  << tempus::format_roundtrip(ts.sigma(s)) << ","
                  << tempus::format_roundtrip(ts.rho(s)) << ","
                  << tempus::format_roundtrip(ts.graininess(s)) << ","
                  << (pc.right_scattered ? "rs" : "rd")
                  << (pc.left_scattered ? "+ls" : "+ld") << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Delta and fractional calculus on arbitrary time scales"};
    app.require_subcommand(1);

    // scale-info ----------------------------------------------------------
    ScaleOptions info_scale;
    std::vector<double> info_samples;
    auto* info = app.add_subcommand("scale-info",
                                    "Describe a scale: pieces and jump table");
    add_scale_options(info, info_scale);
    info->add_option("--samples", info_samples,
                     "Points at which to tabulate sigma/rho/mu");

    // frac-int ------------------------------------------------------------
    ScaleOptions fi_scale;
    std::string fi_expr = "1";
    double fi_a = 0, fi_t = 1, fi_alpha = 1;
    std::string fi_kernel = "sigma";
    std::string fi_policy = "zero";
    bool fi_both = false, fi_sweep = false;
    auto* fi = app.add_subcommand("frac-int",
                                  "Fractional integral I^alpha f(t)");
    add_scale_options(fi, fi_scale);
    fi->add_option("-f,--function", fi_expr, "Integrand expression in t");
    fi->add_option("-a,--lower", fi_a, "Lower limit (a member of the scale)");
    fi->add_option("-t,--upper", fi_t, "Evaluation point");
    fi->add_option("--alpha", fi_alpha, "Order alpha > 0")->required();
    fi->add_option("--kernel", fi_kernel, "sigma | legacy")
        ->check(CLI::IsMember({"sigma", "legacy"}));
    fi->add_option("--policy", fi_policy, "zero | strict")
        ->check(CLI::IsMember({"zero", "strict"}));
    fi->add_flag("--both", fi_both, "Emit both kernel variants");
    fi->add_flag("--sweep-t", fi_sweep,
                 "CSV over every scale point in [a, t]");

    // frac-der ------------------------------------------------------------
    ScaleOptions fd_scale;
    std::string fd_expr = "1";
    double fd_a = 0, fd_t = 1, fd_alpha = 0.5;
    std::string fd_type;
    std::string fd_policy = "zero";
    auto* fd = app.add_subcommand("frac-der",
                                  "Fractional derivative D^alpha f(t)");
    add_scale_options(fd, fd_scale);
    fd->add_option("-f,--function", fd_expr, "Expression in t");
    fd->add_option("-a,--lower", fd_a, "Lower limit");
    fd->add_option("-t,--upper", fd_t, "Evaluation point");
    fd->add_option("--alpha", fd_alpha, "Order alpha > 0")->required();
    fd->add_option("--type", fd_type, "rl | caputo")
        ->required()
        ->check(CLI::IsMember({"rl", "caputo"}));
    fd->add_option("--policy", fd_policy, "zero | strict")
        ->check(CLI::IsMember({"zero", "strict"}));

    // verify --------------------------------------------------------------
    std::vector<std::string> vf_only;
    std::string vf_csv;
    auto* vf = app.add_subcommand("verify",
                                  "Run the verification suite");
    vf->add_option("--only", vf_only,
                   "Run only checks whose name contains this substring");
    vf->add_option("--csv", vf_csv, "Write the report table to a CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*info)
            return run_scale_info(info_scale, info_samples);

        if (*fi) {
            const tempus::TimeScale ts = resolve_scale(fi_scale);
            const tempus::ScaleFunction f = tempus::expr::make_function(fi_expr);
            const tempus::FracOrder ord(fi_alpha);
            const auto zp = fi_policy == "strict"
                ? tempus::ZeroPowerPolicy::StrictError
                : tempus::ZeroPowerPolicy::ZeroConvention;
            const auto cfg = quadrature_from_env();

            auto eval = [&](double t, tempus::KernelVariant kv) {
                auto r = tempus::frac_integral_ex(f, ts, fi_a, t, ord, kv, zp,
                                                  cfg);
                if (r.singular_term_zeroed)
                    std::cerr << "note: a divergent scattered term was "
                                 "dropped by the zero-power convention\n";
                return r.value;
            };

            std::vector<double> points;
            if (fi_sweep) {
                // every scattered point plus piece boundaries inside [a, t]
                for (const auto& seg : ts.decompose(fi_a, fi_t)) {
                    points.push_back(seg.kind
                                             == tempus::Segment::Kind::Scattered
                                         ? seg.point
                                         : seg.a);
                }
                points.push_back(ts.require(fi_t));
                std::cout << (fi_both ? "t,sigma,legacy\n" : "t,value\n");
            } else {
                points.push_back(ts.require(fi_t));
            }

            for (double t : points) {
                if (fi_sweep) {
                    std::cout << tempus::format_roundtrip(t) << ","
                              << tempus::format_roundtrip(
                                     eval(t, tempus::KernelVariant::Sigma));
                    if (fi_both)
                        std::cout << ","
                                  << tempus::format_roundtrip(eval(
                                         t, tempus::KernelVariant::Plain));
                    std::cout << "\n";
                } else if (fi_both) {
                    std::cout << "sigma="
                              << tempus::format_sig12(
                                     eval(t, tempus::KernelVariant::Sigma))
                              << " legacy="
                              << tempus::format_sig12(
                                     eval(t, tempus::KernelVariant::Plain))
                              << "\n";
                } else {
                    const auto kv = fi_kernel == "legacy"
                        ? tempus::KernelVariant::Plain
                        : tempus::KernelVariant::Sigma;
                    std::cout << tempus::format_sig12(eval(t, kv)) << "\n";
                }
            }
            return kExitOk;
        }

        if (*fd) {
            const tempus::TimeScale ts = resolve_scale(fd_scale);
            const tempus::ScaleFunction f = tempus::expr::make_function(fd_expr);
            const tempus::FracOrder ord(fd_alpha);
            const auto zp = fd_policy == "strict"
                ? tempus::ZeroPowerPolicy::StrictError
                : tempus::ZeroPowerPolicy::ZeroConvention;
            const auto cfg = quadrature_from_env();
            const double v = fd_type == "rl"
                ? tempus::rl_derivative(f, ts, fd_a, fd_t, ord, zp, cfg)
                : tempus::caputo_derivative(f, ts, fd_a, fd_t, ord, zp, cfg);
            std::cout << tempus::format_sig12(v) << "\n";
            return kExitOk;
        }

        if (*vf) {
            tempus::verify::SuiteConfig cfg;
            cfg.only = vf_only;
            const auto report = tempus::verify::run_suite(cfg);
            report.write_text(std::cout);
            if (!vf_csv.empty()) {
                std::ofstream out(vf_csv);
                if (!out) {
                    std::cerr << "cannot open " << vf_csv << " for writing\n";
                    return kExitIo;
                }
                report.write_csv(out);
                if (!out) {
                    std::cerr << "write to " << vf_csv << " failed\n";
                    return kExitIo;
                }
            }
            return report.all_pass() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const tempus::SingularTermError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const tempus::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
