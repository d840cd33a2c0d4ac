// Command-line surface: evaluate higher-order heat kernels, dump profile
// data, run the identity suite, and drive the stable-law samplers.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoheat/checks.hpp"
#include "hoheat/fractional.hpp"
#include "hoheat/kernels.hpp"
#include "hoheat/special.hpp"
#include "hoheat/stable.hpp"

namespace {

using hoheat::CheckOptions;
using hoheat::CheckResult;
using hoheat::EquationOrder;
using hoheat::EvalPoint;
using hoheat::EvalRequest;
using hoheat::Method;
using hoheat::NumericControls;
using json = nlohmann::ordered_json;

std::string fmt(double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.15g", v);
    return b;
}

std::string fmte(double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.6e", v);
    return b;
}

struct Output {
    std::string path;  // empty = stdout

    int write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return 0;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file '" << path << "'\n";
            return 1;
        }
        f << text;
        return f.good() ? 0 : 1;
    }
};

Method parse_method(const std::string& name) {
    if (name == "series") return Method::series;
    if (name == "damped") return Method::damped;
    if (name == "fourier") return Method::fourier;
    if (name == "airy") return Method::airy;
    return Method::auto_select;
}

std::vector<double> expand_range(const std::string& spec) {
    // a:b:n linspace
    double a = 0.0, b = 0.0;
    int n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(spec);
    ss >> a >> c1 >> b >> c2 >> n;
    if (!ss || c1 != ':' || c2 != ':' || n < 2)
        throw CLI::ValidationError("--x-range", "expected a:b:n with n >= 2");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

int cmd_eval(int m, std::vector<double> xs, const std::string& x_range,
             const std::vector<double>& ts, const std::string& method_name, bool mirror,
             const NumericControls& controls, const std::string& format,
             const Output& out) {
    if (!x_range.empty()) {
        auto r = expand_range(x_range);
        xs.insert(xs.end(), r.begin(), r.end());
    }
    if (xs.empty() || ts.empty()) {
        std::cerr << "error: eval needs at least one --x (or --x-range) and one --t\n";
        return 1;
    }

    EvalRequest req;
    req.order = EquationOrder::of(m);
    req.method = parse_method(method_name);
    req.controls = controls;
    // --mirror evaluates the opposite-sign odd equation, whose solution is
    // u_m(-x, t); rows keep the requested x.
    const double sign = mirror ? -1.0 : 1.0;
    for (double t : ts)
        for (double x : xs) req.points.push_back(EvalPoint{sign * x, t});

    const auto rows = hoheat::evaluate(req);

    if (format == "json") {
        json doc = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json r;
            r["x"] = sign * req.points[i].x;
            r["t"] = req.points[i].t;
            if (rows[i].ok) {
                r["value"] = rows[i].result.value;
                r["abs_err"] = rows[i].result.abs_err_estimate;
                r["method"] = hoheat::kernel_method_name(rows[i].result.method_used);
                r["nodes"] = rows[i].result.terms_or_nodes;
            } else {
                r["error"] = hoheat::errc_name(rows[i].code);
            }
            doc.push_back(std::move(r));
        }
        return out.write(doc.dump(2) + "\n");
    }

    std::string text = "x,t,value,abs_err,method,nodes\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        text += fmt(sign * req.points[i].x) + "," + fmt(req.points[i].t) + ",";
        if (rows[i].ok) {
            text += fmt(rows[i].result.value) + "," + fmte(rows[i].result.abs_err_estimate) +
                    "," + hoheat::kernel_method_name(rows[i].result.method_used) + "," +
                    std::to_string(rows[i].result.terms_or_nodes);
        } else {
            text += "nan,nan,error(" + std::string(hoheat::errc_name(rows[i].code)) + "),0";
        }
        text += "\n";
    }
    return out.write(text);
}

int cmd_profile(const std::vector<int>& ms, const std::string& x_range, double t,
                bool mirror, const NumericControls& controls, const std::string& format,
                const Output& out) {
    const std::vector<double> xs = expand_range(x_range.empty() ? "-5:5:201" : x_range);
    const double sign = mirror ? -1.0 : 1.0;

    std::vector<std::vector<double>> cols;
    for (int m : ms) {
        const EquationOrder order = EquationOrder::of(m);
        std::vector<double> col;
        col.reserve(xs.size());
        for (double x : xs)
            col.push_back(
                hoheat::evaluate_point(order, sign * x, t, Method::auto_select, controls)
                    .value);
        cols.push_back(std::move(col));
    }

    // zero crossings per column (sign changes between grid neighbours)
    struct Crossing {
        int m;
        std::vector<double> where;
    };
    std::vector<Crossing> crossings;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Crossing cr;
        cr.m = ms[c];
        for (std::size_t i = 1; i < xs.size(); ++i)
            if ((cols[c][i - 1] <= 0.0) != (cols[c][i] <= 0.0))
                cr.where.push_back(0.5 * (xs[i - 1] + xs[i]));
        crossings.push_back(std::move(cr));
    }

    if (format == "json") {
        json doc;
        doc["t"] = t;
        doc["x"] = xs;
        for (std::size_t c = 0; c < cols.size(); ++c)
            doc["u" + std::to_string(ms[c])] = cols[c];
        json cj = json::array();
        for (const auto& cr : crossings) {
            json one;
            one["m"] = cr.m;
            one["count"] = cr.where.size();
            one["x"] = cr.where;
            cj.push_back(std::move(one));
        }
        doc["zero_crossings"] = std::move(cj);
        return out.write(doc.dump(2) + "\n");
    }

    std::string text = "x";
    for (int m : ms) text += ",u" + std::to_string(m);
    text += "\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        text += fmt(xs[i]);
        for (std::size_t c = 0; c < cols.size(); ++c) text += "," + fmt(cols[c][i]);
        text += "\n";
    }
    for (const auto& cr : crossings) {
        text += "# zero-crossings m=" + std::to_string(cr.m) + ": count=" +
                std::to_string(cr.where.size());
        if (!cr.where.empty()) {
            text += " at";
            for (double w : cr.where) text += " " + fmt(w);
        }
        text += "\n";
    }
    return out.write(text);
}

int cmd_verify(const CheckOptions& opts, const std::string& format, const Output& out) {
    const std::vector<CheckResult> results = hoheat::run_checks(opts);

    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;

    if (format == "json") {
        json doc;
        json arr = json::array();
        for (const auto& r : results) {
            json one;
            one["name"] = r.name;
            one["pass"] = r.pass;
            one["measured"] = fmte(r.measured);
            one["tol"] = fmte(r.tol);
            if (!r.detail.empty()) one["detail"] = r.detail;
            arr.push_back(std::move(one));
        }
        doc["checks"] = std::move(arr);
        doc["total"] = results.size();
        doc["failed"] = failed;
        doc["seed"] = opts.seed;
        doc["mc_samples"] = opts.mc_samples;
        if (out.write(doc.dump(2) + "\n") != 0) return 1;
        return failed == 0 ? 0 : 2;
    }

    std::string text;
    for (const auto& r : results) {
        text += (r.pass ? "PASS " : "FAIL ") + r.name + " measured=" + fmte(r.measured) +
                " tol=" + fmte(r.tol);
        if (!r.detail.empty()) text += " (" + r.detail + ")";
        text += "\n";
    }
    text += "SUMMARY total=" + std::to_string(results.size()) +
            " failed=" + std::to_string(failed) + " seed=" + std::to_string(opts.seed) +
            " mc=" + std::to_string(opts.mc_samples) + "\n";
    if (out.write(text) != 0) return 1;
    return failed == 0 ? 0 : 2;
}

int cmd_sample(const std::string& law, double alpha, double gamma, int depth, double t,
               std::int64_t count, std::uint64_t seed, const Output& out) {
    using hoheat::SampleBatch;
    SampleBatch batch;
    std::string summary;
    const std::size_t n = static_cast<std::size_t>(count);

    if (law == "subordinator") {
        batch = hoheat::sample_skewed_stable(alpha, t, n, seed);
        if (alpha == 0.5) {
            // closed-form CDF erfc(t / (2 sqrt(x))) exists at alpha = 1/2
            const double d = hoheat::ks_distance(batch.values, [&](double x) {
                return x <= 0.0 ? 0.0 : std::erfc(0.5 * t / std::sqrt(x));
            });
            summary += "# ks distance=" + fmte(d) + "\n";
        }
        for (double lambda : {0.5, 1.0, 2.0}) {
            double s = 0.0, s2 = 0.0;
            for (double x : batch.values) {
                const double e = std::exp(-lambda * x);
                s += e;
                s2 += e * e;
            }
            const double mean = s / static_cast<double>(n);
            const double var = std::max(s2 / static_cast<double>(n) - mean * mean, 0.0);
            const double se = std::sqrt(var / static_cast<double>(n));
            const double target = std::exp(-std::pow(lambda, alpha) * t);
            summary += "# laplace lambda=" + fmt(lambda) + " empirical=" + fmte(mean) +
                       " target=" + fmte(target) + " se=" + fmte(se) + "\n";
        }
    } else if (law == "gen-gamma") {
        batch = hoheat::sample_gen_gamma(hoheat::GenGammaLaw::of(gamma, t), n, seed);
        double s = 0.0, s2 = 0.0;
        for (double x : batch.values) {
            const double xg = std::pow(x, gamma);
            s += xg;
            s2 += xg * xg;
        }
        const double mean = s / static_cast<double>(n);
        const double var = std::max(s2 / static_cast<double>(n) - mean * mean, 0.0);
        summary += "# moment E[X^gamma] empirical=" + fmte(mean) + " target=" + fmt(t) +
                   " se=" + fmte(std::sqrt(var / static_cast<double>(n))) + "\n";
    } else if (law == "zn") {
        const hoheat::CompositionSpec spec = hoheat::CompositionSpec::of(depth, t);
        batch = hoheat::sample_zn(spec, n, seed);
        const double bound = 4.0 / std::sqrt(static_cast<double>(n));
        for (double beta : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
            const std::complex<double> e = hoheat::empirical_cf(batch.values, beta);
            const std::complex<double> c = hoheat::zn_cf(spec, beta);
            summary += "# ecf beta=" + fmt(beta) + " empirical=(" + fmte(e.real()) + "," +
                       fmte(e.imag()) + ") cf=(" + fmte(c.real()) + "," + fmte(c.imag()) +
                       ") |diff|=" + fmte(std::abs(e - c)) + " bound=" + fmte(bound) + "\n";
        }
    } else {
        std::cerr << "error: unknown law '" << law << "' (subordinator, gen-gamma, zn)\n";
        return 1;
    }

    std::string text = "# law=" + batch.law_tag + " seed=" + std::to_string(batch.seed) +
                       " count=" + std::to_string(count) + "\n";
    text += summary;
    for (double v : batch.values) text += fmt(v) + "\n";
    return out.write(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fundamental solutions of higher-order heat-type equations and their "
                 "stable-law compositions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Flat key=value config file; command-line flags override");
    app.allow_config_extras(false);

    NumericControls controls;
    std::string format = "csv";
    Output out;
    double mc_count = static_cast<double>(controls.mc_samples);

    app.add_option("--tol", controls.quad_abs_tol, "Quadrature absolute tolerance");
    app.add_option("--series-tol", controls.series_rel_tol, "Series relative tolerance");
    app.add_option("--seed", controls.rng_seed, "RNG seed");
    app.add_option("--mc", mc_count, "Monte Carlo sample count (accepts 1e5 style)");
    app.add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out.path, "Output path (default stdout)");

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate u_m on a grid");
    int eval_m = 3;
    std::vector<double> eval_x;
    std::string eval_x_range;
    std::vector<double> eval_t;
    std::string eval_method = "auto";
    bool eval_mirror = false;
    eval->add_option("--m", eval_m, "Equation order (>= 2)")->required();
    eval->add_option("--x", eval_x, "x values (repeat or comma-separate)")->delimiter(',');
    eval->add_option("--x-range", eval_x_range, "x grid a:b:n");
    eval->add_option("--t", eval_t, "t values (> 0)")->delimiter(',')->required();
    eval->add_option("--method", eval_method, "series|damped|fourier|airy|auto")
        ->check(CLI::IsMember({"series", "damped", "fourier", "airy", "auto"}));
    eval->add_flag("--mirror", eval_mirror,
                   "Evaluate the opposite-sign odd equation (x -> -x)");

    // profile
    auto* profile = app.add_subcommand("profile", "Solution profiles over an x grid");
    std::vector<int> prof_m{3, 5, 7};
    std::string prof_x_range = "-5:5:201";
    double prof_t = 1.0;
    bool prof_mirror = false;
    profile->add_option("--m", prof_m, "Equation orders")->delimiter(',');
    profile->add_option("--x-range", prof_x_range, "x grid a:b:n");
    profile->add_option("--t", prof_t, "Time (> 0)");
    profile->add_flag("--mirror", prof_mirror,
                      "Profile the opposite-sign odd equation (x -> -x)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    std::string only;
    verify->add_option("--only", only, "Run only checks whose name contains this substring");

    // sample
    auto* sample = app.add_subcommand("sample", "Draw from a law and summarize");
    std::string law = "subordinator";
    double sample_alpha = 0.5;
    double sample_gamma = 3.0;
    int sample_depth = 1;
    double sample_t = 1.0;
    sample->add_option("--law", law, "subordinator|gen-gamma|zn")
        ->check(CLI::IsMember({"subordinator", "gen-gamma", "zn"}));
    sample->add_option("--alpha", sample_alpha, "Stability index in (0,1)");
    sample->add_option("--gamma", sample_gamma, "Generalized gamma shape");
    sample->add_option("--n", sample_depth, "Composition depth for zn");
    sample->add_option("--t", sample_t, "Time (> 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // config errors map to exit 1, help to 0
    }

    try {
        controls.mc_samples = static_cast<std::int64_t>(std::llround(mc_count));
        controls.validate();
        if (eval->parsed())
            return cmd_eval(eval_m, eval_x, eval_x_range, eval_t, eval_method, eval_mirror,
                            controls, format, out);
        if (profile->parsed())
            return cmd_profile(prof_m, prof_x_range, prof_t, prof_mirror, controls, format,
                               out);
        if (verify->parsed()) {
            CheckOptions opts;
            opts.seed = controls.rng_seed;
            opts.mc_samples = controls.mc_samples;
            opts.only = only;
            return cmd_verify(opts, format, out);
        }
        if (sample->parsed())
            return cmd_sample(law, sample_alpha, sample_gamma, sample_depth, sample_t,
                              controls.mc_samples, controls.rng_seed, out);
    } catch (const hoheat::Error& e) {
        std::cerr << "error (" << hoheat::errc_name(e.code()) << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
