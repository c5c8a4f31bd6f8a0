#include "zv/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zv/special.hpp"
#include "zv/zero_count.hpp"
#include "zv/zeta.hpp"

namespace zv {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}
std::string sig12(double v) { return fmt("%.12g", v); }
std::string sci3(double v) { return fmt("%.3e", v); }
std::string g15(double v) { return fmt("%.15g", v); }

// Effective run parameters after profile, config file, and flags compose.
struct Effective {
    std::string profile = "default";
    int grid = 8;
    int depth = 6;
    double crossing = 0.5;
    double half_length = 8.0;
    int panels = 8;

    std::string echo() const {
        std::ostringstream os;
        os << "profile=" << profile << " grid=" << grid << " depth=" << depth
           << " crossing=" << g15(crossing) << " half_length=" << g15(half_length)
           << " panels=" << panels;
        return os.str();
    }
    ScanConfig scan() const { return {grid, depth, Method::euler_maclaurin}; }
    ContourConfig contour() const { return {crossing, half_length, panels}; }
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const Effective& eff, const std::string& where) {
    auto bad = [&](const std::string& field, const std::string& why) {
        throw InputError(where + ": " + field + " " + why);
    };
    if (eff.profile != "default" && eff.profile != "strict")
        bad("profile", "must be 'default' or 'strict'");
    if (eff.grid < 1 || eff.grid > 4096) bad("grid", "must be in [1, 4096]");
    if (eff.depth < 1 || eff.depth > 12) bad("depth", "must be in [1, 12]");
    if (!(eff.crossing > 0.0 && eff.crossing < 1.0)) bad("crossing", "must lie in (0, 1)");
    if (!(eff.half_length >= 4.0 && eff.half_length <= 64.0))
        bad("half_length", "must be in [4, 64]");
    if (eff.panels < 1 || eff.panels > 1024) bad("panels", "must be in [1, 1024]");
}

struct ConfigEntry {
    std::string value;
    int line = 0;
};

std::map<std::string, ConfigEntry> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("config file '" + path + "' cannot be opened");
    std::map<std::string, ConfigEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t eq = line.find('=');
        auto trim = [](std::string s) {
            const size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
        };
        if (eq == std::string::npos) {
            if (!trim(line).empty())
                throw InputError("config line " + std::to_string(lineno) +
                                 ": expected 'key = value'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw InputError("config line " + std::to_string(lineno) +
                             ": empty key or value");
        out[key] = {value, lineno};
    }
    return out;
}

double to_double(const std::string& s, const std::string& where) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw InputError(where + ": '" + s + "' is not a number");
    }
    if (pos != s.size()) throw InputError(where + ": '" + s + "' is not a number");
    return v;
}

int to_int(const std::string& s, const std::string& where) {
    const double v = to_double(s, where);
    if (v != std::floor(v)) throw InputError(where + ": '" + s + "' is not an integer");
    return static_cast<int>(v);
}

// "a+bi" and its degenerate forms: "a", "bi", "i", "-i", "a-bi".
Complex parse_complex(const std::string& text) {
    const std::string err = "cannot parse '" + text + "' as a+bi";
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw InputError(err);
    if (s.back() != 'i') return Complex(to_double(s, err), 0.0);
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto coeff = [&](std::string c) {
        if (c.empty() || c == "+") return 1.0;
        if (c == "-") return -1.0;
        return to_double(c, err);
    };
    if (split == std::string::npos) return Complex(0.0, coeff(s));
    return Complex(to_double(s.substr(0, split), err), coeff(s.substr(split)));
}

std::string point_label(Complex z) {
    return g15(z.real()) + (z.imag() < 0.0 ? "" : "+") + g15(z.imag()) + "i";
}

std::string json_complex(Complex z) {
    return "{\"re\": " + g15(z.real()) + ", \"im\": " + g15(z.imag()) + "}";
}

int cmd_eval(const std::string& s_text, const std::string& method,
             const Effective& eff) {
    const Complex s = parse_complex(s_text);
    Complex zeta_val, xi_val;
    double err_bound = 1e-10;
    if (method == "rs") {
        if (std::abs(s.real() - 0.5) > 1e-12 || s.imag() < 30.0)
            throw InputError("--method rs requires s = 0.5 + it with t >= 30");
        const ZSample sample = z_function(s.imag(), 3, Method::riemann_siegel);
        zeta_val = sample.zeta;
        err_bound = sample.err_bound;
        xi_val = 0.5 * s * (s - 1.0) * std::pow(Complex(kPi, 0.0), -s / 2.0) *
                 std::exp(log_gamma(s / 2.0)) * zeta_val;
    } else {
        zeta_val = zeta(s);
        xi_val = xi(s);
    }
    std::printf(
        "{\"s\": \"%s\", \"zeta\": %s, \"xi\": %s, \"method\": \"%s\", "
        "\"err_bound\": %s, \"config\": \"%s\"}\n",
        s_text.c_str(), json_complex(zeta_val).c_str(), json_complex(xi_val).c_str(),
        method.c_str(), sci3(err_bound).c_str(), eff.echo().c_str());
    return kExitOk;
}

int cmd_zeros(double from, double to, const std::string& out_path,
              const Effective& eff) {
    if (!(from >= 0.0 && from < to))
        throw InputError("zeros: requires 0 <= --from < --to");
    const ScanResult scan = scan_sign_changes(from, to, eff.scan());
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file '" + out_path + "'");
    out << "index,t,t_lo,t_hi,residual,method\n";
    long index = 1;
    for (const Bracket& b : scan.brackets) {
        ZeroRecord rec = locate_zero(b, Method::euler_maclaurin);
        rec.index = index++;
        out << rec.index << ',' << sig12(rec.t) << ',' << sig12(rec.t_lo) << ','
            << sig12(rec.t_hi) << ',' << sci3(rec.residual) << ",em\n";
    }
    std::ofstream warn(out_path + ".warnings");
    warn << "# config: " << eff.echo() << "\n";
    for (const auto& [lo, hi] : scan.unresolved)
        warn << "unresolved interval [" << sig12(lo) << ", " << sig12(hi)
             << "]: refinement depth exhausted\n";
    std::printf("%ld zeros written to %s\n", index - 1, out_path.c_str());
    return kExitOk;
}

int cmd_verify(double T, const std::string& report_path, const Effective& eff) {
    if (T < 0.0) throw InputError("verify: requires --T >= 0");
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport rep = verify_equality(T, eff.scan());
    const long runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    std::ostringstream os;
    os << "{\n"
       << "  \"T\": " << sig12(rep.T) << ",\n"
       << "  \"n_argument\": " << rep.n_argument << ",\n"
       << "  \"n0_signchanges\": " << rep.n0_signchanges << ",\n"
       << "  \"s_of_T\": " << g15(rep.s_of_T) << ",\n"
       << "  \"equal\": " << (rep.equal ? "true" : "false") << ",\n"
       << "  \"lemma_residual\": " << sci3(rep.lemma_residual) << ",\n"
       << "  \"refinement_depth\": " << rep.refinement_depth << ",\n"
       << "  \"runtime_ms\": " << runtime_ms << ",\n"
       << "  \"config\": \"" << eff.echo() << "\"\n"
       << "}\n";
    std::ofstream out(report_path);
    if (!out) throw InputError("cannot open report file '" + report_path + "'");
    out << os.str();
    std::fputs(os.str().c_str(), stdout);
    return rep.equal ? kExitOk : kExitMismatch;
}

struct IdentityTally {
    bool any_fail = false;
    bool any_numeric = false;

    void line(const std::string& suite, const std::string& point, double residual,
              double tol) {
        const bool pass = residual < tol;
        if (!pass) any_fail = true;
        std::printf("%-11s %-22s residual=%s tol=%s %s\n", suite.c_str(), point.c_str(),
                    sci3(residual).c_str(), sci3(tol).c_str(), pass ? "PASS" : "FAIL");
    }
    void failure(const std::string& suite, const std::string& point,
                 const std::string& reason) {
        any_fail = true;
        any_numeric = true;
        std::printf("%-11s %-22s FAIL (%s)\n", suite.c_str(), point.c_str(),
                    reason.c_str());
    }
};

double functional_residual(Complex s) {
    const Complex lhs = std::pow(Complex(kPi, 0.0), -s / 2.0) *
                        std::exp(log_gamma(s / 2.0)) * zeta(s);
    const Complex rhs = std::pow(Complex(kPi, 0.0), -(1.0 - s) / 2.0) *
                        std::exp(log_gamma((1.0 - s) / 2.0)) * zeta(1.0 - s);
    return std::abs(lhs - rhs);
}

int cmd_identities(const std::string& suite, const Effective& eff) {
    const bool all = suite == "all";
    IdentityTally tally;
    std::printf("# config: %s\n", eff.echo().c_str());

    auto guarded = [&](const std::string& name, const std::string& point, double tol,
                       auto&& resid) {
        try {
            tally.line(name, point, resid(), tol);
        } catch (const Error& e) {
            tally.failure(name, point, e.what());
        }
    };

    if (all || suite == "functional") {
        for (double sigma : {0.2, 0.35, 0.5, 0.65, 0.8})
            for (double t : {3.0, 17.0, 41.0, 83.0, 161.0}) {
                const Complex s(sigma, t);
                guarded("functional", "s=" + point_label(s), 1e-9,
                        [&] { return functional_residual(s); });
            }
    }
    if (all || suite == "jacobi") {
        for (double x : {0.05, 0.1, 0.37, 1.0, 2.5, 10.0, 20.0})
            guarded("jacobi", "x=" + g15(x), 1e-12,
                    [&] { return jacobi_identity_residual(x); });
    }
    if (all || suite == "closed_form") {
        const std::vector<Complex> us = {{0.5, 0.0},  {0.25, 0.0}, {-1.7, 0.0},
                                         {2.3, 1.1},  {3.6, -0.4}, {-4.2, 0.4},
                                         {0.5, 2.0},  {4.9, 0.0},  {-0.35, -1.2},
                                         {1.45, 3.1}};
        for (Complex u : us)
            guarded("closed_form", "u=" + point_label(u), 1e-8,
                    [&] { return phi_closed_form_residual(u, eff.contour()); });
    }
    if (all || suite == "rs_integral") {
        const std::vector<Complex> ss = {{0.5, 0.0},  {0.5, 5.0},  {0.5, 15.0},
                                         {0.5, 30.0}, {0.5, 60.0}, {0.5, 100.0},
                                         {0.3, 10.0}, {0.7, 20.0}};
        for (Complex s : ss)
            guarded("rs_integral", "s=" + point_label(s), 1e-7,
                    [&] { return rs_integral_residual(s, eff.contour()); });
    }
    if (all || suite == "two_re") {
        for (double t : {0.0, 10.0, 14.1, 30.0, 50.0, 100.0})
            guarded("two_re", "t=" + g15(t), 1e-6, [&] {
                const TwoReDecomposition d = two_re_decomposition(t, eff.contour());
                return std::abs(d.z_direct - d.z_via_f);
            });
    }
    if (tally.any_numeric) return kExitNumeric;
    return tally.any_fail ? kExitMismatch : kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Riemann zeta evaluation and zero-count verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "config file (key = value lines)");
    std::string profile;
    auto* opt_profile = app.add_option("--profile", profile, "default | strict");
    int grid = 0;
    auto* opt_grid = app.add_option("--grid", grid, "scan nodes per unit t");
    int depth = 0;
    auto* opt_depth = app.add_option("--depth", depth, "max scan refinement depth");
    double crossing = 0.0;
    auto* opt_crossing = app.add_option("--crossing", crossing, "contour crossing");
    double half_length = 0.0;
    auto* opt_half = app.add_option("--half-length", half_length, "contour truncation");
    int panels = 0;
    auto* opt_panels = app.add_option("--panels", panels, "quadrature panels");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate zeta and xi at s");
    std::string s_text, method = "em";
    eval_cmd->add_option("--s", s_text, "point, a+bi form")->required();
    eval_cmd->add_option("--method", method, "em | rs")
        ->check(CLI::IsMember({"em", "rs"}));

    auto* zeros_cmd = app.add_subcommand("zeros", "scan a range and emit a zero table");
    double from = 0.0, to = 0.0;
    std::string out_path;
    zeros_cmd->add_option("--from", from, "lower t")->required();
    zeros_cmd->add_option("--to", to, "upper t")->required();
    zeros_cmd->add_option("--out", out_path, "CSV output path")->required();

    auto* verify_cmd = app.add_subcommand("verify", "reconcile the two zero counts");
    double T = 0.0;
    std::string report_path;
    verify_cmd->add_option("--T", T, "upper height")->required();
    verify_cmd->add_option("--report", report_path, "JSON report path")->required();

    auto* ident_cmd = app.add_subcommand("identities", "run an identity suite");
    std::string suite;
    ident_cmd->add_option("--suite", suite, "identity suite")
        ->required()
        ->check(CLI::IsMember(
            {"functional", "jacobi", "closed_form", "rs_integral", "two_re", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (config_path.empty())
            if (const char* env = std::getenv("ZV_CONFIG")) config_path = env;
        std::map<std::string, ConfigEntry> config;
        if (!config_path.empty()) config = load_config(config_path);
        auto from_config = [&](const std::string& key) -> const ConfigEntry* {
            auto it = config.find(key);
            return it == config.end() ? nullptr : &it->second;
        };
        auto where = [&](const ConfigEntry* e, const std::string& field) {
            return "config line " + std::to_string(e->line) + ", field " + field;
        };

        Effective eff;
        if (const ConfigEntry* e = from_config("profile")) eff.profile = e->value;
        if (opt_profile->count()) eff.profile = profile;
        if (eff.profile == "strict") {
            eff.grid = 16;
            eff.depth = 8;
        }
        if (const ConfigEntry* e = from_config("grid"))
            eff.grid = to_int(e->value, where(e, "grid"));
        if (const ConfigEntry* e = from_config("depth"))
            eff.depth = to_int(e->value, where(e, "depth"));
        if (const ConfigEntry* e = from_config("crossing"))
            eff.crossing = to_double(e->value, where(e, "crossing"));
        if (const ConfigEntry* e = from_config("half_length"))
            eff.half_length = to_double(e->value, where(e, "half_length"));
        if (const ConfigEntry* e = from_config("panels"))
            eff.panels = to_int(e->value, where(e, "panels"));
        if (opt_grid->count()) eff.grid = grid;
        if (opt_depth->count()) eff.depth = depth;
        if (opt_crossing->count()) eff.crossing = crossing;
        if (opt_half->count()) eff.half_length = half_length;
        if (opt_panels->count()) eff.panels = panels;
        validate(eff, "flag");

        if (eval_cmd->parsed()) return cmd_eval(s_text, method, eff);
        if (zeros_cmd->parsed()) return cmd_zeros(from, to, out_path, eff);
        if (verify_cmd->parsed()) return cmd_verify(T, report_path, eff);
        return cmd_identities(suite, eff);
    } catch (const InputError& e) {
        std::fprintf(stderr, "{\"error\": \"input\", \"message\": \"%s\"}\n", e.what());
        return kExitInput;
    } catch (const PoleError& e) {
        std::fprintf(stderr, "{\"error\": \"pole\", \"message\": \"%s\"}\n", e.what());
        return kExitInput;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "{\"error\": \"domain\", \"message\": \"%s\"}\n", e.what());
        return kExitInput;
    } catch (const Error& e) {
        std::fprintf(stderr, "{\"error\": \"numeric\", \"message\": \"%s\"}\n", e.what());
        return kExitNumeric;
    }
}

}  // namespace zv
