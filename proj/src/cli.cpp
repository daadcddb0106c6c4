#include "stefan/cli.hpp"

#include "stefan/errors.hpp"
#include "stefan/problem.hpp"
#include "stefan/report.hpp"
#include "stefan/solve.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace stefan::cli {

namespace {

enum class Format { Csv, Json };

// Raised for bad flags or values; maps to exit status 2.
class UsageError : public Error {
public:
    using Error::Error;
};

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("malformed number '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("malformed number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Format parse_format(const std::string& s, const char* source) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError(std::string(source) + ": unknown format '" + s + "' (expected csv or json)");
}

MethodKind parse_method_or_throw(const std::string& name) {
    const auto m = parse_method(name);
    if (!m) throw UsageError("unknown method '" + name + "'");
    return *m;
}

struct Common {
    double alpha = 0.0;
    std::string ste = "0.5";
    std::optional<std::string> bi;
    double theta_inf = 1.0;
    double a_diff = 1.0;
    std::optional<std::string> format;
    std::optional<std::string> output;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--alpha", c.alpha, "Latent-heat exponent (>= 0)")->capture_default_str();
    sub->add_option("--ste", c.ste, "Stefan number; table accepts a list or lo:hi:step")->capture_default_str();
    sub->add_option("--bi", c.bi, "Biot number; selects the convective condition (list or range for table and converge)");
    sub->add_option("--theta-inf", c.theta_inf, "Face temperature scale")->capture_default_str();
    sub->add_option("--a-diff", c.a_diff, "Diffusivity coefficient a")->capture_default_str();
    sub->add_option("--format", c.format, "Output format: csv or json");
    sub->add_option("--output", c.output, "Output file (default standard output)");
}

double single_value(const std::string& text, const char* flag) {
    const auto v = parse_sweep(text);
    if (v.size() != 1) throw UsageError(std::string(flag) + " expects a single value here");
    return v.front();
}

ProblemParams make_params(const Common& c) {
    ProblemParams p{c.alpha, single_value(c.ste, "--ste"), std::nullopt, c.theta_inf, c.a_diff};
    if (c.bi) p.bi = single_value(*c.bi, "--bi");
    p.validate();
    return p;
}

void check_boundary(MethodKind m, const ProblemParams& p) {
    if (m.boundary == Boundary::Robin && !p.bi) {
        throw UsageError("method " + method_name(m) + " requires --bi");
    }
    if (m.boundary == Boundary::Dirichlet && p.bi) {
        throw UsageError("method " + method_name(m) + " is for a prescribed face temperature; drop --bi or use " +
                         method_name({m.scheme, Boundary::Robin}));
    }
}

Format resolve_format(const Common& c, Format fallback) {
    if (c.format) return parse_format(*c.format, "--format");
    if (const char* env = std::getenv("STEFAN_FORMAT"); env && *env) return parse_format(env, "STEFAN_FORMAT");
    return fallback;
}

struct Outcome {
    std::string document;
    std::vector<std::string> failures;
};

Outcome run_solve(const Common& c, const std::string& method) {
    const MethodKind m = parse_method_or_throw(method);
    const ProblemParams p = make_params(c);
    check_boundary(m, p);
    const SimilaritySolution s = solve(m, p);
    std::ostringstream os;
    if (resolve_format(c, Format::Json) == Format::Csv) {
        report::write_solution_csv(os, s);
    } else {
        report::write_solution_json(os, s);
    }
    return {os.str(), {}};
}

Outcome run_table(const Common& c, const std::string& methods_text) {
    std::vector<MethodKind> methods;
    for (const auto& name : split(methods_text, ',')) {
        if (name.empty()) continue;
        const MethodKind m = parse_method_or_throw(name);
        if (m.scheme == Scheme::Exact) throw UsageError("the exact solution is always the reference column; drop '" + name + "'");
        methods.push_back(m);
    }
    const auto stes = parse_sweep(c.ste);
    std::vector<report::ErrorRow> rows;
    try {
        if (c.bi) {
            if (stes.size() != 1) throw UsageError("a convective table sweeps Bi; give a single --ste");
            for (const auto& m : methods) {
                if (m.boundary != Boundary::Robin) throw UsageError("method " + method_name(m) + " does not take --bi");
            }
            rows = report::table_convective(c.alpha, stes.front(), parse_sweep(*c.bi), methods);
        } else {
            for (const auto& m : methods) {
                if (m.boundary != Boundary::Dirichlet) throw UsageError("method " + method_name(m) + " requires --bi");
            }
            rows = report::table_dirichlet(c.alpha, stes, methods);
        }
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    Outcome out;
    for (const auto& row : rows) {
        const std::string where = (c.bi ? "row Bi=" : "row Ste=") + report::format_number(row.sweep_value);
        if (!row.nu_exact) out.failures.push_back(where + ": exact: " + row.note);
        for (const auto& e : row.entries) {
            if (!e.nu) out.failures.push_back(where + ": " + method_name(e.method) + ": " + e.note);
        }
    }
    std::ostringstream os;
    if (resolve_format(c, Format::Csv) == Format::Csv) {
        report::write_table_csv(os, rows, methods);
    } else {
        report::write_table_json(os, rows);
    }
    out.document = os.str();
    return out;
}

Outcome run_converge(const Common& c, const std::string& method) {
    const MethodKind m = parse_method_or_throw(method);
    if (m.boundary != Boundary::Robin) throw UsageError("converge needs a convective method (exacth, p1h, ..., p4h)");
    if (!c.bi) throw UsageError("converge requires a --bi sweep");
    const double ste = single_value(c.ste, "--ste");
    const auto bis = parse_sweep(*c.bi);
    ProblemParams probe{c.alpha, ste, std::nullopt, c.theta_inf, c.a_diff};
    probe.validate();
    for (double bi : bis) {
        if (!(bi > 0.0)) throw UsageError("Bi must be > 0");
    }
    report::ConvergenceSweep sweep;
    try {
        sweep = report::convergence_sweep(c.alpha, ste, bis, m);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    std::ostringstream os;
    if (resolve_format(c, Format::Csv) == Format::Csv) {
        report::write_convergence_csv(os, sweep);
    } else {
        report::write_convergence_json(os, sweep);
    }
    return {os.str(), {}};
}

struct FieldOpts {
    std::string method = "exact";
    double x_max = 2.0;
    std::string t = "0.1:1";
    std::size_t nx = 100;
    std::size_t nt = 100;
};

Outcome run_field(const Common& c, const FieldOpts& f) {
    const MethodKind m = parse_method_or_throw(f.method);
    const ProblemParams p = make_params(c);
    check_boundary(m, p);
    const auto parts = split(f.t, ':');
    if (parts.size() != 2) throw UsageError("--t expects lo:hi");
    const double t_lo = parse_number(parts[0]);
    const double t_hi = parse_number(parts[1]);
    if (!(t_lo > 0.0) || !(t_hi > t_lo)) throw UsageError("--t requires 0 < lo < hi");
    if (f.nx < 2 || f.nt < 2) throw UsageError("--nx and --nt must be >= 2");
    if (!(f.x_max > 0.0)) throw UsageError("--x-max must be > 0");
    const SimilaritySolution s = solve(m, p);
    const report::FieldGrid grid = report::sample_field(p, s, f.x_max, t_lo, t_hi, f.nx, f.nt);
    std::ostringstream os;
    if (resolve_format(c, Format::Csv) == Format::Csv) {
        report::write_field_csv(os, grid);
    } else {
        report::write_field_json(os, grid);
    }
    return {os.str(), {}};
}

// Rounds to 12 significant digits so 0.1:1:0.1 yields 0.3 exactly as typed.
double snap(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string one_line(std::string s) {
    for (char& ch : s) {
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

std::vector<double> parse_sweep(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) throw DomainError("empty value list");
    for (const auto& item : split(text, ',')) {
        if (item.empty()) throw DomainError("malformed list '" + text + "'");
        const auto parts = split(item, ':');
        try {
            if (parts.size() == 1) {
                out.push_back(parse_number(item));
                continue;
            }
            if (parts.size() != 3) throw DomainError("malformed range '" + item + "' (expected lo:hi:step)");
            const double lo = parse_number(parts[0]);
            const double hi = parse_number(parts[1]);
            const double step = parse_number(parts[2]);
            if (!(step > 0.0) || hi < lo) throw DomainError("malformed range '" + item + "' (need lo <= hi, step > 0)");
            const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
            if (n > 100000) throw DomainError("range '" + item + "' has too many points");
            for (std::size_t k = 0; k <= n; ++k) {
                out.push_back(snap(lo + static_cast<double>(k) * step));
            }
        } catch (const UsageError& e) {
            throw DomainError(e.what());
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stefan problems with space-dependent latent heat: exact and approximate similarity solutions"};
    app.name("stefan");
    app.require_subcommand(1);

    Common solve_c;
    std::string solve_method;
    auto* sub_solve = app.add_subcommand("solve", "Solve one problem and print nu, A, B");
    add_common(sub_solve, solve_c);
    sub_solve->add_option("--method", solve_method, "exact, p1..p4, exacth, p1h..p4h")->required();

    Common table_c;
    std::string table_methods;
    auto* sub_table = app.add_subcommand("table", "Percentage-error table over a Ste sweep (or a Bi sweep with --bi)");
    add_common(sub_table, table_c);
    sub_table->add_option("--methods", table_methods, "Comma-separated approximation methods");

    Common conv_c;
    std::string conv_method;
    auto* sub_conv = app.add_subcommand("converge", "nu of a convective method against its Dirichlet limit over Bi");
    add_common(sub_conv, conv_c);
    sub_conv->add_option("--method", conv_method, "exacth, p1h, p2h, p3h or p4h")->required();

    Common field_c;
    FieldOpts field_o;
    auto* sub_field = app.add_subcommand("field", "Temperature grid T(x, t) with the front position");
    add_common(sub_field, field_c);
    sub_field->add_option("--method", field_o.method, "Method to sample")->capture_default_str();
    sub_field->add_option("--x-max", field_o.x_max, "Largest x")->capture_default_str();
    sub_field->add_option("--t", field_o.t, "Time range lo:hi")->capture_default_str();
    sub_field->add_option("--nx", field_o.nx, "Number of x samples")->capture_default_str();
    sub_field->add_option("--nt", field_o.nt, "Number of t samples")->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    }

    Outcome result;
    const Common* common = nullptr;
    try {
        if (*sub_solve) {
            common = &solve_c;
            result = run_solve(solve_c, solve_method);
        } else if (*sub_table) {
            common = &table_c;
            result = run_table(table_c, table_methods);
        } else if (*sub_conv) {
            common = &conv_c;
            result = run_converge(conv_c, conv_method);
        } else {
            common = &field_c;
            result = run_field(field_c, field_o);
        }
    } catch (const UsageError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    } catch (const Error& e) {
        err << "solver failure: " << one_line(e.what()) << '\n';
        return 1;
    }

    if (common->output) {
        std::ofstream file(*common->output, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file '" << *common->output << "'\n";
            return 2;
        }
        file << result.document;
    } else {
        out << result.document;
    }
    for (const auto& f : result.failures) err << "solver failure: " << one_line(f) << '\n';
    return result.failures.empty() ? 0 : 1;
}

}  // namespace stefan::cli
