// End-to-end checks of the command-line tool.  argv[1] is the binary path.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cli, const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = cli + " " + args + " > " + out_path + " 2> cli_test_stderr.tmp";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    r.out = slurp(out_path);
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-hoheat>\n";
        return 2;
    }
    const std::string cli = argv[1];

    {
        RunResult r = run(cli, "eval --m 3 --x 0 --t 0.3333");
        expect(r.exit_code == 0, "eval m=3 exit code");
        const auto lines = split(r.out, '\n');
        expect(lines.size() >= 2, "eval produces header plus one row");
        expect(lines[0] == "x,t,value,abs_err,method,nodes", "csv header fixed");
        const auto cells = split(lines[1], ',');
        expect(cells.size() == 6, "row has 6 cells");
        const double value = std::atof(cells[2].c_str());
        expect(std::fabs(value - 0.35503) < 2e-4, "u3(0, 0.3333) ~ Ai(0)");
    }

    {
        RunResult r = run(cli, "eval --m 2 --x 1 --t 1");
        const auto cells = split(split(r.out, '\n')[1], ',');
        expect(std::fabs(std::atof(cells[2].c_str()) - 0.21970) < 1e-5,
               "heat kernel value via CLI");
    }

    {
        RunResult a = run(cli, "eval --m 4 --x 0.5 --t 1 --method series");
        RunResult b = run(cli, "eval --m 4 --x 0.5 --t 1 --method damped");
        const double va = std::atof(split(split(a.out, '\n')[1], ',')[2].c_str());
        const double vb = std::atof(split(split(b.out, '\n')[1], ',')[2].c_str());
        expect(std::fabs(va - vb) < 1e-7, "m=4 series and damped agree via CLI");
    }

    {
        // per-row range error, overall exit still 0
        RunResult r = run(cli, "eval --m 3 --x 12 --x 1 --t 1 --method series");
        expect(r.exit_code == 0, "row errors do not fail the command");
        const auto lines = split(r.out, '\n');
        expect(lines[1].find("error(method-range-error)") != std::string::npos,
               "range failure is a per-row status");
        expect(lines[2].find("odd_series") != std::string::npos,
               "good row evaluated normally");
    }

    {
        // the mirror equation is x -> -x
        RunResult a = run(cli, "eval --m 3 --x 1.5 --t 1");
        RunResult b = run(cli, "eval --m 3 --x -1.5 --t 1 --mirror");
        const double va = std::atof(split(split(a.out, '\n')[1], ',')[2].c_str());
        const double vb = std::atof(split(split(b.out, '\n')[1], ',')[2].c_str());
        expect(va == vb, "mirror flag flips the sign branch");
        const double xb = std::atof(split(split(b.out, '\n')[1], ',')[0].c_str());
        expect(xb == -1.5, "mirror rows keep the requested x");
    }

    {
        RunResult r = run(cli, "eval --m 3 --t 1");
        expect(r.exit_code == 1, "missing --x is a config error");
        RunResult r2 = run(cli, "eval --m 1 --x 0 --t 1");
        expect(r2.exit_code == 1, "m = 1 rejected");
        RunResult r3 = run(cli, "eval --m 3 --x 0 --t 1 --format yaml");
        expect(r3.exit_code != 0, "unknown format rejected");
        RunResult r4 = run(cli, "eval --m 3 --x 0 --t 1 --bogus-flag 3");
        expect(r4.exit_code != 0, "unknown flag rejected");
    }

    {
        RunResult r = run(cli, "profile --m 3,5,7 --x-range -6:6:121 --t 1");
        expect(r.exit_code == 0, "profile exit code");
        const auto lines = split(r.out, '\n');
        expect(lines[0] == "x,u3,u5,u7", "profile header");
        int crossings_m3 = -1;
        double max_u3 = -1.0, argmax_x = 0.0;
        for (const auto& line : lines) {
            if (line.rfind("# zero-crossings m=3:", 0) == 0) {
                const auto pos = line.find("count=");
                crossings_m3 = std::atoi(line.c_str() + pos + 6);
            }
            if (!line.empty() && line[0] != '#' && line[0] != 'x') {
                const auto cells = split(line, ',');
                const double x = std::atof(cells[0].c_str());
                const double u3 = std::atof(cells[1].c_str());
                if (u3 > max_u3) {
                    max_u3 = u3;
                    argmax_x = x;
                }
            }
        }
        expect(crossings_m3 >= 2, "m=3 oscillating tail has >= 2 sign changes on [-6,6]");
        expect(argmax_x < 0.0, "m=3 profile peak sits at negative x");
    }

    {
        RunResult r = run(cli, "verify --only mass --seed 7 --mc 1000");
        expect(r.exit_code == 0, "mass identities pass");
        expect(r.out.find("kernels-mass-odd") != std::string::npos, "filter keeps mass checks");
        expect(r.out.find("stable-cf-consistency") == std::string::npos,
               "filter drops unrelated checks");
    }

    {
        const std::string f1 = "cli_verify_a.tmp", f2 = "cli_verify_b.tmp";
        RunResult a = run(cli, "verify --only caputo --seed 91 --mc 5000 --out " + f1);
        RunResult b = run(cli, "verify --only caputo --seed 91 --mc 5000 --out " + f2);
        expect(a.exit_code == 0 && b.exit_code == 0, "verify runs succeed");
        expect(slurp(f1) == slurp(f2), "verify output byte-identical for a fixed seed");
        std::remove(f1.c_str());
        std::remove(f2.c_str());
    }

    {
        const std::string f = "cli_sample.tmp";
        RunResult r =
            run(cli, "sample --law gen-gamma --gamma 3 --t 1 --mc 5000 --seed 3 --out " + f);
        expect(r.exit_code == 0, "sample exit code");
        std::ifstream in(f);
        std::string line;
        double sum3 = 0.0;
        int count = 0;
        bool has_summary = false;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (line[0] == '#') {
                if (line.find("moment") != std::string::npos) has_summary = true;
                continue;
            }
            const double v = std::atof(line.c_str());
            sum3 += v * v * v;
            ++count;
        }
        expect(count == 5000, "sample writes one value per line");
        expect(has_summary, "sample writes the summary header");
        expect(std::fabs(sum3 / count - 1.0) < 0.05, "mean of X^3 is near t");
        std::remove(f.c_str());
    }

    {
        // scientific notation for --mc, and the KS summary at alpha = 1/2
        RunResult r = run(cli, "sample --law subordinator --alpha 0.5 --t 1 --mc 1e5 --seed 12");
        expect(r.exit_code == 0, "sample with --mc 1e5");
        const auto pos = r.out.find("# ks distance=");
        expect(pos != std::string::npos, "subordinator summary carries a KS line");
        if (pos != std::string::npos) {
            const double d = std::atof(r.out.c_str() + pos + 14);
            expect(d < 0.01, "sampled subordinator KS below 0.01");
        }
        int count = 0;
        for (const auto& line : split(r.out, '\n'))
            if (!line.empty() && line[0] != '#') ++count;
        expect(count == 100000, "--mc 1e5 expands to 100000 draws");
    }

    {
        RunResult r = run(cli, "sample --law zn --n 1 --t 1 --mc 20000 --seed 8");
        expect(r.exit_code == 0, "zn sample exit code");
        std::vector<double> xs;
        for (const auto& line : split(r.out, '\n')) {
            if (line.empty() || line[0] == '#') continue;
            xs.push_back(std::atof(line.c_str()));
        }
        expect(xs.size() == 20000, "zn sample count");
        std::nth_element(xs.begin(), xs.begin() + xs.size() / 2, xs.end());
        expect(std::fabs(xs[xs.size() / 2] + 0.5) < 0.05, "Z1 empirical median near -t/2");
        expect(r.out.find("# ecf beta=") != std::string::npos, "zn summary holds the ECF grid");
    }

    {
        // flat config file; flags override; unknown keys rejected
        {
            std::ofstream f("cli_cfg.tmp");
            f << "seed=77\n[eval]\nm=3\nx=1\nt=1\n";
        }
        RunResult a = run(cli, "eval --config cli_cfg.tmp");
        expect(a.exit_code == 0, "config file drives eval");
        expect(split(split(a.out, '\n')[1], ',')[0] == "1", "config x honored");
        RunResult b = run(cli, "--config cli_cfg.tmp eval --x 2");
        expect(split(split(b.out, '\n')[1], ',')[0] == "2", "flags override the config");
        {
            std::ofstream f("cli_cfg.tmp");
            f << "bogus_key=3\n[eval]\nm=3\nx=1\nt=1\n";
        }
        RunResult c = run(cli, "eval --config cli_cfg.tmp");
        expect(c.exit_code == 1, "unknown config keys rejected");
        std::remove("cli_cfg.tmp");
    }

    {
        RunResult r = run(cli, "eval --m 3 --x 0,1 --t 1 --format json");
        expect(r.exit_code == 0, "json eval exit code");
        expect(r.out.find("\"value\"") != std::string::npos, "json rows carry values");
        expect(r.out.find("\"method\": \"odd_series\"") != std::string::npos,
               "json rows carry the method tag");
    }

    std::remove("cli_test_stdout.tmp");
    std::remove("cli_test_stderr.tmp");
    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cout << "test_cli: " << failures << " failures\n";
    return 1;
}
