#pragma once

#include "stefan/problem.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace stefan::report {

/// 100 |nu_exact - nu_approx| / nu_exact. Throws DomainError unless nu_exact > 0.
double error_pct(double nu_exact, double nu_approx);

struct ErrorEntry {
    MethodKind method;
    std::optional<double> nu;
    std::optional<double> pct;
    bool hypothesis_violated = false;
    std::string note;
};

/// One table row. A failing solver leaves its values empty and records the
/// reason in note; the rest of the row is still filled.
struct ErrorRow {
    double sweep_value = 0.0;
    std::optional<double> nu_exact;
    std::string note;
    std::vector<ErrorEntry> entries;
};

/// Rows for each Ste in ste_list under a prescribed face temperature.
/// methods must be non-exact Dirichlet methods.
std::vector<ErrorRow> table_dirichlet(double alpha, const std::vector<double>& ste_list,
                                      const std::vector<MethodKind>& methods);

/// Rows for each Bi in bi_list under a convective condition.
/// methods must be non-exact Robin methods.
std::vector<ErrorRow> table_convective(double alpha, double ste, const std::vector<double>& bi_list,
                                       const std::vector<MethodKind>& methods);

struct ConvergenceRow {
    double bi = 0.0;
    double nu_h = 0.0;
    double nu_limit = 0.0;
    double gap = 0.0;
};

struct ConvergenceSweep {
    MethodKind method;
    std::vector<ConvergenceRow> rows;
    bool gap_non_increasing = true;
    bool nu_increasing = true;
};

/// nu of a Robin method against the matching Dirichlet method over an
/// increasing Bi grid. Solver errors propagate.
ConvergenceSweep convergence_sweep(double alpha, double ste, const std::vector<double>& bi_grid, MethodKind method);

/// Temperatures on an nt x nx grid. temperature[i][j] is empty when
/// x_values[j] lies beyond the front at t_values[i].
struct FieldGrid {
    MethodKind method;
    std::vector<double> x_values;
    std::vector<double> t_values;
    std::vector<std::vector<std::optional<double>>> temperature;
    std::vector<double> front_position;
};

/// Uniform grid x in [0, x_max], t in [t_lo, t_hi].
FieldGrid sample_field(const ProblemParams& p, const SimilaritySolution& s, double x_max, double t_lo, double t_hi,
                       std::size_t nx, std::size_t nt);

/// %.6g formatting used by every CSV writer.
std::string format_number(double v);

void write_table_csv(std::ostream& os, const std::vector<ErrorRow>& rows, const std::vector<MethodKind>& methods);
void write_table_json(std::ostream& os, const std::vector<ErrorRow>& rows);
void write_convergence_csv(std::ostream& os, const ConvergenceSweep& sweep);
void write_convergence_json(std::ostream& os, const ConvergenceSweep& sweep);
void write_field_csv(std::ostream& os, const FieldGrid& grid);
void write_field_json(std::ostream& os, const FieldGrid& grid);
void write_solution_csv(std::ostream& os, const SimilaritySolution& s);
void write_solution_json(std::ostream& os, const SimilaritySolution& s);

}  // namespace stefan::report
