#include "stefan/problem.hpp"

#include "stefan/errors.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace stefan {

namespace {

constexpr std::array<std::pair<std::string_view, MethodKind>, 10> kNames{{
    {"exact", {Scheme::Exact, Boundary::Dirichlet}},
    {"p1", {Scheme::ClassicalHBIM, Boundary::Dirichlet}},
    {"p2", {Scheme::ModifiedHBIM, Boundary::Dirichlet}},
    {"p3", {Scheme::RIM, Boundary::Dirichlet}},
    {"p4", {Scheme::LeastSquares, Boundary::Dirichlet}},
    {"exacth", {Scheme::Exact, Boundary::Robin}},
    {"p1h", {Scheme::ClassicalHBIM, Boundary::Robin}},
    {"p2h", {Scheme::ModifiedHBIM, Boundary::Robin}},
    {"p3h", {Scheme::RIM, Boundary::Robin}},
    {"p4h", {Scheme::LeastSquares, Boundary::Robin}},
}};

}  // namespace

void ProblemParams::validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0) throw DomainError("alpha must be >= 0");
    if (!std::isfinite(ste) || ste <= 0.0) throw DomainError("Ste must be > 0");
    if (!std::isfinite(theta_inf) || theta_inf <= 0.0) throw DomainError("theta_inf must be > 0");
    if (!std::isfinite(a_diff) || a_diff <= 0.0) throw DomainError("a_diff must be > 0");
    if (bi && (!std::isfinite(*bi) || *bi <= 0.0)) throw DomainError("Bi must be > 0");
}

void ProblemParams::validate_robin() const {
    validate();
    if (!bi) throw DomainError("Bi is required for Robin problems");
}

std::string method_name(MethodKind m) {
    for (const auto& [name, kind] : kNames) {
        if (kind == m) return std::string(name);
    }
    return "unknown";
}

std::optional<MethodKind> parse_method(std::string_view name) {
    for (const auto& [n, kind] : kNames) {
        if (n == name) return kind;
    }
    return std::nullopt;
}

std::vector<MethodKind> all_methods() {
    std::vector<MethodKind> out;
    for (const auto& entry : kNames) out.push_back(entry.second);
    return out;
}

double free_boundary(const ProblemParams& p, const SimilaritySolution& s, double t) {
    if (t < 0.0) throw DomainError("free_boundary: t must be >= 0");
    return 2.0 * p.a_diff * s.nu * std::sqrt(t);
}

}  // namespace stefan
