// tsfrac: nabla fractional calculus on finite time scales.
//
// Subcommands evaluate one operator over a scale and a function and emit
// CSV or JSON; `verify` runs the law suite and emits LawReport JSON.
// Exit codes: 0 success, 1 verify found failing laws, 2 usage/domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tsfrac/errors.hpp"
#include "tsfrac/expression.hpp"
#include "tsfrac/fractional.hpp"
#include "tsfrac/grid_function.hpp"
#include "tsfrac/laws.hpp"
#include "tsfrac/nabla.hpp"
#include "tsfrac/timescale.hpp"

namespace {

using namespace tsfrac;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

struct OutputSpec {
    std::string format = "csv";
    std::string path;  // empty -> stdout
};

// Output is assembled fully in memory and written in one step, so a failed
// command never leaves a partial file behind.
void emit(const OutputSpec& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open output file: " + out.path);
    f << text;
    if (!f) throw Error("failed writing output file: " + out.path);
}

std::string grid_to_text(const GridFunction& g, const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        write_csv(g, os);
        return os.str();
    }
    std::string out = "[\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        out += "  {\"t\":" + fmt(g.scale()[i]) + ",\"value\":" + fmt(g[i]) + "}";
        out += i + 1 < g.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string point_to_text(double t, double v, const std::string& format) {
    if (format == "csv") return "t,value\n" + fmt(t) + "," + fmt(v) + "\n";
    return "{\"t\":" + fmt(t) + ",\"value\":" + fmt(v) + "}\n";
}

GridFunction load_function(const std::string& fn_spec, const TimeScale& ts) {
    if (fn_spec.rfind("csv:", 0) == 0) {
        const std::string path = fn_spec.substr(4);
        std::ifstream in(path);
        if (!in) throw Error("cannot open function CSV: " + path);
        return read_csv(in, ts);
    }
    return sample(parse_expression(fn_spec), ts);
}

std::string render_result(const GridFunction& g, const std::optional<double>& at,
                          const std::string& format) {
    if (!at) return grid_to_text(g, format);
    const auto idx = g.scale().find(*at);
    if (!idx) throw PointNotInScale(*at);
    return point_to_text(g.scale()[*idx], g[*idx], format);
}

struct CommonArgs {
    std::string scale_spec;
    std::string fn_spec;
    double mu = 0.0;
    std::optional<double> at;
    std::optional<double> base;
    OutputSpec out;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_mu) {
    cmd->add_option("--scale", args.scale_spec,
                    "scale spec: integers:a:b | step:h:a:b | sample:a:b:N | file:PATH | "
                    "points:v1,v2,...")
        ->required();
    cmd->add_option("--fn", args.fn_spec, "expression in t, or csv:PATH")->required();
    if (needs_mu) cmd->add_option("--mu", args.mu, "fractional order")->required();
    cmd->add_option("--at", args.at, "evaluate at one point (1e-9 lookup) instead of the grid");
    cmd->add_option("--base", args.base, "base point a (default: scale minimum)");
    cmd->add_option("--format", args.out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out.path, "output path (default: stdout)");
}

double resolve_base(const CommonArgs& args, const TimeScale& ts) {
    if (!args.base) return ts.min();
    const auto idx = ts.find(*args.base);
    if (!idx) throw PointNotInScale(*args.base);
    return ts[*idx];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nabla fractional calculus on time scales"};
    app.require_subcommand(1);

    CommonArgs deriv_args;
    CLI::App* deriv = app.add_subcommand("deriv", "first-order nabla derivative");
    add_common(deriv, deriv_args, false);

    CommonArgs frac_args;
    CLI::App* frac = app.add_subcommand(
        "frac-deriv", "pointwise fractional nabla derivative, 0 < mu <= 1");
    add_common(frac, frac_args, true);

    CommonArgs gl_args;
    CLI::App* gl = app.add_subcommand(
        "gl-deriv", "Grunwald-Letnikov derivative on a uniform scale, mu > 0");
    add_common(gl, gl_args, true);

    CommonArgs fint_args;
    std::string kernel_name = "reg";
    std::optional<double> fint_beta;
    CLI::App* fint = app.add_subcommand(
        "frac-int", "fractional integral of order mu (negative mu aliases to the derivative)");
    add_common(fint, fint_args, true);
    fint->add_option("--kernel", kernel_name, "reg (t - rho(s))^{mu-1} or unreg (t - s)^{mu-1}")
        ->check(CLI::IsMember({"reg", "unreg"}))
        ->capture_default_str();
    fint->add_option("--beta", fint_beta,
                     "compose: apply the integral of order beta first, then order mu");

    CommonArgs rld_args;
    CLI::App* rld = app.add_subcommand(
        "rl-deriv",
        "Riemann-Liouville derivative (negative mu aliases to the integral); base is the scale "
        "minimum");
    add_common(rld, rld_args, true);

    CommonArgs cap_args;
    CLI::App* cap = app.add_subcommand(
        "caputo", "Caputo derivative, 0 < mu <= 1; base is the scale minimum");
    add_common(cap, cap_args, true);

    std::string suite_name = "default";
    OutputSpec verify_out;
    verify_out.format = "json";
    CLI::App* verify = app.add_subcommand("verify", "run the law verification suite");
    verify->add_option("--suite", suite_name, "'default' or a JSON config path")
        ->capture_default_str();
    verify->add_option("--out", verify_out.path, "output path (default: stdout)");

    std::string info_scale;
    OutputSpec info_out;
    CLI::App* info = app.add_subcommand("scale-info", "jump operators and graininess table");
    info->add_option("--scale", info_scale, "scale spec")->required();
    info->add_option("--format", info_out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    info->add_option("--out", info_out.path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*deriv) {
            const TimeScale ts = parse_scale_spec(deriv_args.scale_spec);
            const GridFunction f = load_function(deriv_args.fn_spec, ts);
            emit(deriv_args.out,
                 render_result(nabla_derivative(f), deriv_args.at, deriv_args.out.format));
        } else if (*frac) {
            const TimeScale ts = parse_scale_spec(frac_args.scale_spec);
            const GridFunction f = load_function(frac_args.fn_spec, ts);
            emit(frac_args.out, render_result(frac_nabla_derivative(f, frac_args.mu),
                                              frac_args.at, frac_args.out.format));
        } else if (*gl) {
            const TimeScale ts = parse_scale_spec(gl_args.scale_spec);
            const GridFunction f = load_function(gl_args.fn_spec, ts);
            const double a = resolve_base(gl_args, ts);
            emit(gl_args.out, render_result(gl_derivative(f, gl_args.mu, a), gl_args.at,
                                            gl_args.out.format));
        } else if (*fint) {
            const TimeScale ts = parse_scale_spec(fint_args.scale_spec);
            GridFunction f = load_function(fint_args.fn_spec, ts);
            const double a = resolve_base(fint_args, ts);
            const Kernel kernel =
                kernel_name == "reg" ? Kernel::Regularized : Kernel::Unregularized;
            if (fint_beta)
                f = fractional_operator(FracOp::Integral, f, *fint_beta, a, kernel);
            emit(fint_args.out,
                 render_result(fractional_operator(FracOp::Integral, f, fint_args.mu, a, kernel),
                               fint_args.at, fint_args.out.format));
        } else if (*rld) {
            const TimeScale ts = parse_scale_spec(rld_args.scale_spec);
            const GridFunction f = load_function(rld_args.fn_spec, ts);
            const double a = resolve_base(rld_args, ts);
            emit(rld_args.out,
                 render_result(fractional_operator(FracOp::Derivative, f, rld_args.mu, a),
                               rld_args.at, rld_args.out.format));
        } else if (*cap) {
            const TimeScale ts = parse_scale_spec(cap_args.scale_spec);
            const GridFunction f = load_function(cap_args.fn_spec, ts);
            const double a = resolve_base(cap_args, ts);
            emit(cap_args.out, render_result(caputo_derivative(f, cap_args.mu, a), cap_args.at,
                                             cap_args.out.format));
        } else if (*verify) {
            const SuiteConfig config =
                suite_name == "default" ? SuiteConfig::defaults()
                                        : SuiteConfig::from_json_file(suite_name);
            const std::vector<LawReport> reports = run_suite(config);
            emit(verify_out, reports_to_json(reports));
            for (const LawReport& r : reports)
                if (!r.passed) return 1;
        } else if (*info) {
            const TimeScale ts = parse_scale_spec(info_scale);
            std::string text;
            if (info_out.format == "csv") {
                text = "t,rho,sigma,nu\n";
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    text += fmt(ts[i]) + "," + fmt(ts.rho_at(i)) + "," + fmt(ts.sigma_at(i)) +
                            "," + (i == 0 ? "" : fmt(ts.nu_at(i))) + "\n";
                }
            } else {
                text = "{\"descriptor\":\"" + json_escape(ts.descriptor()) + "\",\"points\":[\n";
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    text += "  {\"t\":" + fmt(ts[i]) + ",\"rho\":" + fmt(ts.rho_at(i)) +
                            ",\"sigma\":" + fmt(ts.sigma_at(i));
                    if (i > 0) text += ",\"nu\":" + fmt(ts.nu_at(i));
                    text += i + 1 < ts.size() ? "},\n" : "}\n";
                }
                text += "]}\n";
            }
            emit(info_out, text);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
