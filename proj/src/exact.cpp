#include "stefan/exact.hpp"

#include "search.hpp"
#include "stefan/errors.hpp"

#include <cmath>
#include <string>

namespace stefan::exact {

using detail::real_pow;
using specfun::kummer_m;

namespace {

constexpr double kZMax = 5.0;
constexpr double kZMaxCap = 40.0;

double search_hi(double ste) {
    return ste < 1.0 ? 1.0 : kZMax;
}

// Values of the two Kummer modes at the front, eta = nu.
struct FrontModes {
    double even;  // M(-alpha/2, 1/2, -nu^2)
    double odd;   // M(1/2 - alpha/2, 3/2, -nu^2)
};

FrontModes front_modes(double nu, double alpha) {
    return {kummer_m(-alpha / 2.0, 0.5, -nu * nu), kummer_m(0.5 - alpha / 2.0, 1.5, -nu * nu)};
}

SimilaritySolution pick_unique(std::vector<double> roots, MethodKind m, const char* who) {
    if (roots.empty()) throw NoRootError(std::string(who) + ": no sign change found");
    SimilaritySolution s{m, roots.front(), 0.0, 0.0, roots, roots.size() > 1, false};
    return s;
}

}  // namespace

double dirichlet_residual(double z, double alpha, double ste, const specfun::SeriesControl& sc) {
    return ste / std::pow(2.0, alpha + 1.0) * specfun::f_aux(z, alpha, sc) - real_pow(z, alpha + 1.0);
}

double robin_residual(double z, double alpha, double ste, double bi, const specfun::SeriesControl& sc) {
    const double denom = 1.0 / specfun::f_aux(z, alpha, sc) + kummer_m(alpha / 2.0 + 0.5, 0.5, z * z, sc) / (2.0 * bi);
    return ste / std::pow(2.0, alpha + 1.0) / denom - real_pow(z, alpha + 1.0);
}

SimilaritySolution solve_exact_dirichlet(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate();
    auto fn = [&](double z) { return dirichlet_residual(z, p.alpha, p.ste); };
    SimilaritySolution s = pick_unique(detail::roots_expanding(fn, search_hi(p.ste), kZMaxCap, ctrl),
                                       {Scheme::Exact, Boundary::Dirichlet}, "solve_exact_dirichlet");
    const FrontModes m = front_modes(s.nu, p.alpha);
    s.coeff_a = 1.0;
    s.coeff_b = -m.even / (s.nu * m.odd);
    return s;
}

SimilaritySolution solve_exact_robin(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate_robin();
    const double bi = *p.bi;
    auto fn = [&](double z) { return robin_residual(z, p.alpha, p.ste, bi); };
    SimilaritySolution s = pick_unique(detail::roots_expanding(fn, search_hi(p.ste), kZMaxCap, ctrl),
                                       {Scheme::Exact, Boundary::Robin}, "solve_exact_robin");
    const FrontModes m = front_modes(s.nu, p.alpha);
    s.coeff_b = -m.even / (m.even / (2.0 * bi) + s.nu * m.odd);
    s.coeff_a = -s.nu * m.odd / m.even * s.coeff_b;
    return s;
}

double eval_exact_temperature(const ProblemParams& p, const SimilaritySolution& s, double x, double t) {
    if (s.method.scheme != Scheme::Exact) throw DomainError("eval_exact_temperature: solution is not exact");
    if (!(t > 0.0)) throw DomainError("eval_exact_temperature: t must be > 0");
    const double front = free_boundary(p, s, t);
    if (x < 0.0 || x > front * (1.0 + 1e-12)) {
        throw DomainError("eval_exact_temperature: x outside the liquid region [0, s(t)]");
    }
    const double eta = x / (2.0 * p.a_diff * std::sqrt(t));
    const double even = kummer_m(-p.alpha / 2.0, 0.5, -eta * eta);
    const double odd = kummer_m(0.5 - p.alpha / 2.0, 1.5, -eta * eta);
    return p.theta_inf * std::pow(t, p.alpha / 2.0) * (s.coeff_a * even + s.coeff_b * eta * odd);
}

}  // namespace stefan::exact
