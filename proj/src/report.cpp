#include "stefan/report.hpp"

#include "stefan/errors.hpp"
#include "stefan/solve.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <future>

namespace stefan::report {

namespace {

using nlohmann::json;

void check_methods(const std::vector<MethodKind>& methods, Boundary boundary, const char* who) {
    for (const auto& m : methods) {
        if (m.scheme == Scheme::Exact) {
            throw DomainError(std::string(who) + ": the exact solution is always included, not a method column");
        }
        if (m.boundary != boundary) {
            throw DomainError(std::string(who) + ": method " + method_name(m) + " does not match the boundary condition");
        }
    }
}

ErrorRow build_row(double sweep, const ProblemParams& p, const std::vector<MethodKind>& methods) {
    ErrorRow row;
    row.sweep_value = sweep;
    const Boundary boundary = p.bi ? Boundary::Robin : Boundary::Dirichlet;
    try {
        row.nu_exact = solve({Scheme::Exact, boundary}, p).nu;
    } catch (const Error& e) {
        row.note = e.what();
    }
    for (const auto& m : methods) {
        ErrorEntry entry{m, std::nullopt, std::nullopt, false, {}};
        try {
            const SimilaritySolution s = solve(m, p);
            entry.nu = s.nu;
            entry.hypothesis_violated = s.hypothesis_violated;
            if (row.nu_exact) entry.pct = error_pct(*row.nu_exact, s.nu);
            if (s.multiple_roots) entry.note = "multiple candidates";
        } catch (const Error& e) {
            entry.note = e.what();
        }
        row.entries.push_back(std::move(entry));
    }
    return row;
}

std::vector<ErrorRow> build_rows(const std::vector<double>& sweep, const std::vector<ProblemParams>& params,
                                 const std::vector<MethodKind>& methods) {
    std::vector<std::future<ErrorRow>> jobs;
    jobs.reserve(sweep.size());
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        jobs.push_back(std::async(std::launch::async, build_row, sweep[i], params[i], methods));
    }
    std::vector<ErrorRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

std::string opt_number(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
}

json opt_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::string row_note(const ErrorRow& row) {
    std::string note;
    auto append = [&](const std::string& s) {
        if (!note.empty()) note += "; ";
        note += s;
    };
    if (!row.note.empty()) append("exact: " + row.note);
    for (const auto& e : row.entries) {
        const std::string name = method_name(e.method);
        if (!e.note.empty()) append(name + ": " + e.note);
        if (e.hypothesis_violated) append(name + ": outside existence hypotheses");
    }
    return note;
}

}  // namespace

double error_pct(double nu_exact, double nu_approx) {
    if (!(nu_exact > 0.0)) throw DomainError("error_pct: nu_exact must be > 0");
    return 100.0 * std::fabs(nu_exact - nu_approx) / nu_exact;
}

std::vector<ErrorRow> table_dirichlet(double alpha, const std::vector<double>& ste_list,
                                      const std::vector<MethodKind>& methods) {
    check_methods(methods, Boundary::Dirichlet, "table_dirichlet");
    std::vector<ProblemParams> params;
    for (double ste : ste_list) {
        ProblemParams p{alpha, ste, std::nullopt, 1.0, 1.0};
        p.validate();
        params.push_back(p);
    }
    return build_rows(ste_list, params, methods);
}

std::vector<ErrorRow> table_convective(double alpha, double ste, const std::vector<double>& bi_list,
                                       const std::vector<MethodKind>& methods) {
    check_methods(methods, Boundary::Robin, "table_convective");
    std::vector<ProblemParams> params;
    for (double bi : bi_list) {
        ProblemParams p{alpha, ste, bi, 1.0, 1.0};
        p.validate_robin();
        params.push_back(p);
    }
    return build_rows(bi_list, params, methods);
}

ConvergenceSweep convergence_sweep(double alpha, double ste, const std::vector<double>& bi_grid, MethodKind method) {
    if (method.boundary != Boundary::Robin) throw DomainError("convergence_sweep: method must be a convective one");
    if (bi_grid.empty()) throw DomainError("convergence_sweep: empty Bi grid");
    for (std::size_t i = 1; i < bi_grid.size(); ++i) {
        if (!(bi_grid[i] > bi_grid[i - 1])) throw DomainError("convergence_sweep: Bi grid must be increasing");
    }
    ProblemParams base{alpha, ste, std::nullopt, 1.0, 1.0};
    base.validate();
    const double limit = solve({method.scheme, Boundary::Dirichlet}, base).nu;

    ConvergenceSweep sweep;
    sweep.method = method;
    for (double bi : bi_grid) {
        ProblemParams p = base;
        p.bi = bi;
        const double nu = solve(method, p).nu;
        sweep.rows.push_back({bi, nu, limit, std::fabs(nu - limit)});
    }
    for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
        if (sweep.rows[i].gap > sweep.rows[i - 1].gap) sweep.gap_non_increasing = false;
        if (!(sweep.rows[i].nu_h > sweep.rows[i - 1].nu_h)) sweep.nu_increasing = false;
    }
    return sweep;
}

FieldGrid sample_field(const ProblemParams& p, const SimilaritySolution& s, double x_max, double t_lo, double t_hi,
                       std::size_t nx, std::size_t nt) {
    p.validate();
    if (nx < 2 || nt < 2) throw DomainError("sample_field: nx and nt must be >= 2");
    if (!(x_max > 0.0)) throw DomainError("sample_field: x_max must be > 0");
    if (!(t_lo > 0.0) || !(t_hi > t_lo)) throw DomainError("sample_field: requires 0 < t_lo < t_hi");

    FieldGrid g;
    g.method = s.method;
    for (std::size_t j = 0; j < nx; ++j) g.x_values.push_back(x_max * static_cast<double>(j) / static_cast<double>(nx - 1));
    for (std::size_t i = 0; i < nt; ++i) {
        g.t_values.push_back(t_lo + (t_hi - t_lo) * static_cast<double>(i) / static_cast<double>(nt - 1));
    }
    for (double t : g.t_values) {
        const double front = free_boundary(p, s, t);
        g.front_position.push_back(front);
        std::vector<std::optional<double>> row;
        row.reserve(nx);
        for (double x : g.x_values) {
            if (x > front) {
                row.emplace_back();
            } else {
                row.emplace_back(eval_temperature(p, s, x, t));
            }
        }
        g.temperature.push_back(std::move(row));
    }
    return g;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_table_csv(std::ostream& os, const std::vector<ErrorRow>& rows, const std::vector<MethodKind>& methods) {
    os << "sweep,nu_exact";
    for (const auto& m : methods) os << ',' << method_name(m) << "_nu," << method_name(m) << "_pct";
    os << ",note\n";
    for (const auto& row : rows) {
        os << format_number(row.sweep_value) << ',' << opt_number(row.nu_exact);
        for (const auto& e : row.entries) os << ',' << opt_number(e.nu) << ',' << opt_number(e.pct);
        os << ',' << csv_field(row_note(row)) << '\n';
    }
}

void write_table_json(std::ostream& os, const std::vector<ErrorRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json entries = json::array();
        for (const auto& e : row.entries) {
            entries.push_back({{"method", method_name(e.method)},
                               {"nu", opt_json(e.nu)},
                               {"pct_error", opt_json(e.pct)},
                               {"hypothesis_violated", e.hypothesis_violated},
                               {"note", e.note}});
        }
        out.push_back({{"sweep", row.sweep_value},
                       {"nu_exact", opt_json(row.nu_exact)},
                       {"note", row.note},
                       {"entries", entries}});
    }
    os << out.dump(2) << '\n';
}

void write_convergence_csv(std::ostream& os, const ConvergenceSweep& sweep) {
    os << "bi,nu_h,nu_limit,gap\n";
    for (const auto& r : sweep.rows) {
        os << format_number(r.bi) << ',' << format_number(r.nu_h) << ',' << format_number(r.nu_limit) << ','
           << format_number(r.gap) << '\n';
    }
}

void write_convergence_json(std::ostream& os, const ConvergenceSweep& sweep) {
    json rows = json::array();
    for (const auto& r : sweep.rows) {
        rows.push_back({{"bi", r.bi}, {"nu_h", r.nu_h}, {"nu_limit", r.nu_limit}, {"gap", r.gap}});
    }
    json out = {{"method", method_name(sweep.method)},
                {"gap_non_increasing", sweep.gap_non_increasing},
                {"nu_increasing", sweep.nu_increasing},
                {"rows", rows}};
    os << out.dump(2) << '\n';
}

void write_field_csv(std::ostream& os, const FieldGrid& grid) {
    os << "t/x";
    for (double x : grid.x_values) os << ',' << format_number(x);
    os << ",front_position\n";
    for (std::size_t i = 0; i < grid.t_values.size(); ++i) {
        os << format_number(grid.t_values[i]);
        for (const auto& v : grid.temperature[i]) os << ',' << opt_number(v);
        os << ',' << format_number(grid.front_position[i]) << '\n';
    }
}

void write_field_json(std::ostream& os, const FieldGrid& grid) {
    json temp = json::array();
    for (const auto& row : grid.temperature) {
        json r = json::array();
        for (const auto& v : row) r.push_back(opt_json(v));
        temp.push_back(r);
    }
    json out = {{"method", method_name(grid.method)},
                {"x", grid.x_values},
                {"t", grid.t_values},
                {"front_position", grid.front_position},
                {"temperature", temp}};
    os << out.dump(2) << '\n';
}

void write_solution_csv(std::ostream& os, const SimilaritySolution& s) {
    os << "method,nu,A,B,multiple_roots,hypothesis_violated\n";
    os << method_name(s.method) << ',' << format_number(s.nu) << ',' << format_number(s.coeff_a) << ','
       << format_number(s.coeff_b) << ',' << (s.multiple_roots ? "true" : "false") << ','
       << (s.hypothesis_violated ? "true" : "false") << '\n';
}

void write_solution_json(std::ostream& os, const SimilaritySolution& s) {
    json out = {{"method", method_name(s.method)},
                {"nu", s.nu},
                {"A", s.coeff_a},
                {"B", s.coeff_b},
                {"candidates", s.candidates},
                {"multiple_roots", s.multiple_roots},
                {"hypothesis_violated", s.hypothesis_violated}};
    os << out.dump(2) << '\n';
}

}  // namespace stefan::report
