#include "stefan/hbim.hpp"

#include "search.hpp"
#include "stefan/errors.hpp"

#include <cmath>
#include <string>

namespace stefan::hbim {

using detail::real_pow;

namespace {

constexpr double kUniqueSearchHi = 3.0;
constexpr double kUniqueSearchCap = 40.0;

// Stefan condition with the quadratic profile: A = 2^(alpha+1) nu^(alpha+2) / Ste.
double stefan_coeff_a(double nu, double alpha, double ste) {
    return std::pow(2.0, alpha + 1.0) * real_pow(nu, alpha + 2.0) / ste;
}

// Convective closure A (1 + 2 Bi nu) + 2 B (1 + Bi nu) = 2 Bi nu solved for B.
double robin_coeff_b(double a, double nu, double bi) {
    return (2.0 * bi * nu - a * (1.0 + 2.0 * bi * nu)) / (2.0 * (1.0 + bi * nu));
}

SimilaritySolution smallest_in_unit(std::vector<double> roots, MethodKind m, const char* who) {
    if (roots.empty()) throw NoRootError(std::string(who) + ": no root in (0, 1)");
    SimilaritySolution s;
    s.method = m;
    s.nu = roots.front();
    s.multiple_roots = roots.size() > 1;
    s.candidates = std::move(roots);
    return s;
}

SimilaritySolution unique_root(std::vector<double> roots, MethodKind m, const char* who) {
    if (roots.empty()) throw NoRootError(std::string(who) + ": no positive root found");
    SimilaritySolution s;
    s.method = m;
    s.nu = roots.front();
    s.multiple_roots = roots.size() > 1;
    s.candidates = std::move(roots);
    return s;
}

}  // namespace

double residual_p1(double z, double a, double ste) {
    const double s2 = ste * ste;
    const double p2a = std::pow(2.0, a);
    const double p4a = std::pow(2.0, 2.0 * a);
    return real_pow(z, 2 * a + 4) * (-3.0) * 2.0 * p4a * (a - 2.0)
         + real_pow(z, 2 * a + 2) * (-9.0) * 2.0 * p4a
         + real_pow(z, a + 4) * (-3.0) * p2a * (a - 3.0) * (a + 1.0) * ste
         + real_pow(z, a + 2) * (-3.0) * 2.0 * p2a * (a + 7.0) * ste
         + real_pow(z, a) * 9.0 * p2a * ste
         + real_pow(z, 4) * 2.0 * (a + 1.0) * (a + 1.0) * s2
         + real_pow(z, 2) * (-12.0) * (a + 1.0) * s2
         + 18.0 * s2;
}

double residual_p2(double z, double a, double ste) {
    const double p2a = std::pow(2.0, a);
    return real_pow(z, a + 4) * p2a * (a + 1.0)
         + real_pow(z, a + 2) * 3.0 * 2.0 * p2a
         + z * z * ste * (a + 1.0)
         - 3.0 * ste;
}

double residual_p3(double z, double a, double ste) {
    const double p2a = std::pow(2.0, a);
    return real_pow(z, a + 4) * 2.0 * p2a * a
         + real_pow(z, a + 2) * 3.0 * 4.0 * p2a
         + z * z * ste * (2.0 + 3.0 * a)
         - 6.0 * ste;
}

double residual_p1h(double z, double a, double ste, double bi) {
    const double s2 = ste * ste;
    const double p2a = std::pow(2.0, a);
    const double p4a = std::pow(2.0, 2.0 * a);
    return real_pow(z, 2 * a + 4) * (-3.0) * 2.0 * p4a * (a - 2.0)
         + real_pow(z, 2 * a + 3) * (-3.0) * p4a / bi * (5.0 * a - 7.0)
         + real_pow(z, 2 * a + 2) * (-3.0) * 2.0 * p4a * ((a - 2.0) / (bi * bi) + 3.0)
         + real_pow(z, 2 * a + 1) * (-9.0) * p4a / bi
         + real_pow(z, a + 4) * (-3.0) * p2a * ste * (a - 3.0) * (a + 1.0)
         + real_pow(z, a + 3) * (-3.0) * 2.0 * p2a / bi * ste * (a - 1.0) * (a + 1.0)
         + real_pow(z, a + 2) * (-3.0) * 2.0 * p2a * ste * (a + 7.0)
         + real_pow(z, a + 1) * 3.0 * 2.0 * p2a / bi * ste * (a - 5.0)
         + real_pow(z, a) * 9.0 * p2a * ste
         + real_pow(z, 4) * 2.0 * s2 * (1.0 + a) * (1.0 + a)
         + real_pow(z, 2) * (-12.0) * s2 * (a + 1.0)
         + 18.0 * s2;
}

double residual_p2h(double z, double a, double ste, double bi) {
    const double p2a = std::pow(2.0, a);
    return real_pow(z, a + 4) * p2a * (a + 1.0)
         + real_pow(z, a + 3) * 2.0 * p2a / bi * (a + 1.0)
         + real_pow(z, a + 2) * 3.0 * 2.0 * p2a
         + real_pow(z, a + 1) * 3.0 * p2a / bi
         + z * z * ste * (a + 1.0)
         - 3.0 * ste;
}

double residual_p3h(double z, double a, double ste, double bi) {
    const double p2a = std::pow(2.0, a);
    return real_pow(z, a + 4) * 2.0 * p2a * a
         + real_pow(z, a + 3) * p2a * (2.0 + 5.0 * a) / bi
         + real_pow(z, a + 2) * 3.0 * 4.0 * p2a
         + real_pow(z, a + 1) * 3.0 * 2.0 * p2a / bi
         + z * z * ste * (2.0 + 3.0 * a)
         - 6.0 * ste;
}

SimilaritySolution solve_p1(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate();
    const double a = p.alpha;
    const double ste = p.ste;
    auto fn = [&](double z) { return residual_p1(z, a, ste); };
    SimilaritySolution s = smallest_in_unit(rootfind::find_roots(fn, detail::kSearchFloor, 1.0, ctrl),
                                            {Scheme::ClassicalHBIM, Boundary::Dirichlet}, "solve_p1");
    const double nu = s.nu;
    const double den = ste * (3.0 + (1.0 + a) * nu * nu);
    s.coeff_a = -2.0 * (3.0 * std::pow(2.0, a) * real_pow(nu, a + 2) + ste * (-3.0 + (1.0 + a) * nu * nu)) / den;
    s.coeff_b = 3.0 * (std::pow(2.0, a + 1) * real_pow(nu, a + 2) + ste * (-1.0 + (1.0 + a) * nu * nu)) / den;
    s.hypothesis_violated = !(ste < 1.0);
    return s;
}

SimilaritySolution solve_p2(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate();
    auto fn = [&](double z) { return residual_p2(z, p.alpha, p.ste); };
    SimilaritySolution s = unique_root(detail::roots_expanding(fn, kUniqueSearchHi, kUniqueSearchCap, ctrl),
                                       {Scheme::ModifiedHBIM, Boundary::Dirichlet}, "solve_p2");
    s.coeff_a = stefan_coeff_a(s.nu, p.alpha, p.ste);
    s.coeff_b = 1.0 - s.coeff_a;
    return s;
}

SimilaritySolution solve_p3(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate();
    auto fn = [&](double z) { return residual_p3(z, p.alpha, p.ste); };
    SimilaritySolution s = unique_root(detail::roots_expanding(fn, kUniqueSearchHi, kUniqueSearchCap, ctrl),
                                       {Scheme::RIM, Boundary::Dirichlet}, "solve_p3");
    s.coeff_a = stefan_coeff_a(s.nu, p.alpha, p.ste);
    s.coeff_b = 1.0 - s.coeff_a;
    return s;
}

SimilaritySolution solve_p1h(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate_robin();
    const double a = p.alpha;
    const double ste = p.ste;
    const double bi = *p.bi;
    auto fn = [&](double z) { return residual_p1h(z, a, ste, bi); };
    SimilaritySolution s = smallest_in_unit(rootfind::find_roots(fn, detail::kSearchFloor, 1.0, ctrl),
                                            {Scheme::ClassicalHBIM, Boundary::Robin}, "solve_p1h");
    const double nu = s.nu;
    const double p2a = std::pow(2.0, a);
    const double den = ste * (nu * nu * (a + 1.0) + 2.0 / bi * nu * (a + 1.0) + 3.0);
    s.coeff_a = (6.0 * ste - 2.0 * ste * nu * nu * (a + 1.0) - 3.0 / bi * 2.0 * p2a * real_pow(nu, a + 1)
                 - 3.0 * 2.0 * p2a * real_pow(nu, a + 2)) / den;
    s.coeff_b = (-3.0 * ste + 3.0 * ste * nu * nu * (a + 1.0) + 3.0 / bi * p2a * real_pow(nu, a + 1)
                 + 3.0 * 2.0 * p2a * real_pow(nu, a + 2)) / den;
    s.hypothesis_violated = !(ste < 1.0);
    return s;
}

SimilaritySolution solve_p2h(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate_robin();
    const double bi = *p.bi;
    auto fn = [&](double z) { return residual_p2h(z, p.alpha, p.ste, bi); };
    SimilaritySolution s = unique_root(detail::roots_expanding(fn, kUniqueSearchHi, kUniqueSearchCap, ctrl),
                                       {Scheme::ModifiedHBIM, Boundary::Robin}, "solve_p2h");
    s.coeff_a = stefan_coeff_a(s.nu, p.alpha, p.ste);
    s.coeff_b = robin_coeff_b(s.coeff_a, s.nu, bi);
    return s;
}

SimilaritySolution solve_p3h(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate_robin();
    const double bi = *p.bi;
    auto fn = [&](double z) { return residual_p3h(z, p.alpha, p.ste, bi); };
    SimilaritySolution s = unique_root(detail::roots_expanding(fn, kUniqueSearchHi, kUniqueSearchCap, ctrl),
                                       {Scheme::RIM, Boundary::Robin}, "solve_p3h");
    s.coeff_a = stefan_coeff_a(s.nu, p.alpha, p.ste);
    s.coeff_b = robin_coeff_b(s.coeff_a, s.nu, bi);
    s.hypothesis_violated = !(p.ste < 1.0);
    return s;
}

double eval_quadratic_temperature(const ProblemParams& p, const SimilaritySolution& s, double x, double t) {
    if (s.method.scheme == Scheme::Exact) {
        throw DomainError("eval_quadratic_temperature: exact solutions use the Kummer profile");
    }
    if (!(t > 0.0)) throw DomainError("eval_quadratic_temperature: t must be > 0");
    const double front = free_boundary(p, s, t);
    if (x < 0.0 || x > front * (1.0 + 1e-12)) {
        throw DomainError("eval_quadratic_temperature: x outside the liquid region [0, s(t)]");
    }
    const double u = std::max(0.0, 1.0 - x / front);
    return std::pow(t, p.alpha / 2.0) * p.theta_inf * (s.coeff_a * u + s.coeff_b * u * u);
}

}  // namespace stefan::hbim
