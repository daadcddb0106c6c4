#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stefan {

/// Dimensionless inputs of the one-phase problem with latent heat
/// proportional to x^alpha.
///
/// The physical constants (k, rho, c, gamma, h) only enter through the
/// generalized Stefan number ste = k theta_inf / (gamma a^(alpha+2)) and the
/// Biot number bi = a h / k.
struct ProblemParams {
    double alpha = 0.0;
    double ste = 0.5;
    std::optional<double> bi;
    double theta_inf = 1.0;
    double a_diff = 1.0;

    /// Throws DomainError unless alpha >= 0, ste > 0, theta_inf > 0,
    /// a_diff > 0 and (when present) bi > 0.
    void validate() const;

    /// Same as validate() and additionally requires bi.
    void validate_robin() const;
};

enum class Scheme { Exact, ClassicalHBIM, ModifiedHBIM, RIM, LeastSquares };
enum class Boundary { Dirichlet, Robin };

struct MethodKind {
    Scheme scheme = Scheme::Exact;
    Boundary boundary = Boundary::Dirichlet;

    friend auto operator<=>(const MethodKind&, const MethodKind&) = default;
};

/// Short names used on the command line and in CSV/JSON headers:
/// exact, p1, p2, p3, p4 (Dirichlet) and exacth, p1h, p2h, p3h, p4h (Robin).
std::string method_name(MethodKind m);

/// Inverse of method_name(); nullopt for unknown names.
std::optional<MethodKind> parse_method(std::string_view name);

/// All ten methods, Dirichlet first.
std::vector<MethodKind> all_methods();

/// Front coefficient nu and the theta_inf-normalized profile coefficients.
///
/// For every method the free boundary is s(t) = 2 a nu sqrt(t). For the
/// exact solutions (A, B) multiply the two Kummer modes; for the
/// approximations they weight (1 - x/s) and (1 - x/s)^2.
struct SimilaritySolution {
    MethodKind method;
    double nu = 0.0;
    double coeff_a = 0.0;
    double coeff_b = 0.0;

    /// Every root (or local minimum, for least squares) found in the search
    /// interval; nu is one of them.
    std::vector<double> candidates;
    bool multiple_roots = false;
    /// Inputs lie outside the hypotheses under which existence/uniqueness
    /// of this approximation is known; the result is still returned.
    bool hypothesis_violated = false;
};

/// s(t) = 2 a nu sqrt(t).
double free_boundary(const ProblemParams& p, const SimilaritySolution& s, double t);

}  // namespace stefan
