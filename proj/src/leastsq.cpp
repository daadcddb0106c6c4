#include "stefan/leastsq.hpp"

#include "search.hpp"
#include "stefan/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace stefan::leastsq {

namespace {

using ld = long double;

constexpr double kLsqSearchHi = 2.0;

ld lpow(ld z, ld p) {
    if (z == 0.0L) return p == 0.0L ? 1.0L : 0.0L;
    return std::exp(p * std::log(z));
}

ld bracket(ld x, ld a, ld ca, ld cb) {
    const ld x2 = x * x;
    const ld quad = a * a * (ca * ca / 3 + ca * cb / 2 + cb * cb / 5)
                  + 2 * a * (ca * ca / 6 + ca * cb / 4 + cb * cb / 10)
                  + ca * ca / 3 + ca * cb / 3 + 2 * cb * cb / 15;
    return x2 * x2 / 4 * quad - x2 / 2 * cb * (a + 1) * (ca / 2 + cb / 3) + cb * cb / 4;
}

ld p_poly(ld x, ld a, ld s) {
    const ld p2a = std::pow(2.0L, a);
    const ld p4a = p2a * p2a;
    const ld quad = 2 + 3 * a + 3 * a * a;
    return lpow(x, 2 * a + 8) * 2 * p4a * (a * a + a + 4)
         + 5 * lpow(x, 2 * a + 6) * 4 * p4a * (1 + a)
         + 15 * lpow(x, 2 * a + 4) * 4 * p4a
         + lpow(x, a + 6) * p2a * s * quad
         + 5 * lpow(x, a + 4) * 2 * p2a * s * (1 + a)
         - 15 * lpow(x, a + 2) * 4 * p2a * s
         + lpow(x, 4) * s * s * quad
         - 10 * x * x * s * s * (1 + a)
         + 15 * s * s;
}

ld e_p4(ld x, ld a, ld s) {
    return p_poly(x, a, s) / (60 * s * s * x * x * x * x);
}

ld e_p4h(ld x, ld a, ld s, ld bi) {
    const ld p2a = std::pow(2.0L, a);
    const ld p4a = p2a * p2a;
    const ld c1 = p4a * (7 * a * a + 7 * a + 18) * lpow(x, 2 * a + 7)
                + 25 * 2 * p4a * (a + 1) * lpow(x, 2 * a + 5)
                + p2a * (9 * a * a + 9 * a + 6) * s * lpow(x, a + 5)
                + 15 * 4 * p4a * lpow(x, 2 * a + 3)
                - 5 * 2 * p2a * (a + 1) * s * lpow(x, a + 3)
                - 15 * 2 * p2a * s * lpow(x, a + 1);
    const ld c2 = 4 * p4a * (2 * a * a + 2 * a + 3) * lpow(x, 2 * a + 6)
                + 5 * 4 * p4a * (a + 1) * lpow(x, 2 * a + 4)
                + 15 * p4a * lpow(x, 2 * a + 2);
    const ld q = 1 / bi + x;
    return (p_poly(x, a, s) + c1 / bi + c2 / (bi * bi)) / (60 * s * s * x * x * q * q);
}

void require_xi(double xi, const char* who) {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError(std::string(who) + ": xi must be > 0");
}

SimilaritySolution pick_global(std::vector<double> minima, MethodKind m, const auto& objective, const char* who) {
    if (minima.empty()) {
        // Monotone objective on the grid: fall back to the scan minimum.
        minima.push_back(rootfind::minimize_scalar(objective, detail::kSearchFloor, kLsqSearchHi));
    }
    double best = minima.front();
    ld f_best = objective(best);
    for (double c : minima) {
        const ld f = objective(c);
        if (f < f_best) {
            best = c;
            f_best = f;
        }
    }
    if (!std::isfinite(static_cast<double>(f_best))) throw ConvergenceError(std::string(who) + ": objective not finite");
    SimilaritySolution s;
    s.method = m;
    s.nu = best;
    s.multiple_roots = minima.size() > 1;
    s.candidates = std::move(minima);
    return s;
}

}  // namespace

double lsq_error_direct(double xi, double alpha, double coeff_a, double coeff_b) {
    require_xi(xi, "lsq_error_direct");
    const ld x = xi;
    return static_cast<double>(bracket(x, alpha, coeff_a, coeff_b) / (x * x * x * x));
}

double p4_polynomial(double xi, double alpha, double ste) {
    require_xi(xi, "p4_polynomial");
    return static_cast<double>(p_poly(xi, alpha, ste));
}

LsqErrorParts lsq_error_p4(double xi, double alpha, double ste) {
    require_xi(xi, "lsq_error_p4");
    return {xi, static_cast<double>(e_p4(xi, alpha, ste))};
}

LsqErrorParts lsq_error_p4h(double xi, double alpha, double ste, double bi) {
    require_xi(xi, "lsq_error_p4h");
    if (!(bi > 0.0)) throw DomainError("lsq_error_p4h: bi must be > 0");
    return {xi, static_cast<double>(e_p4h(xi, alpha, ste, bi))};
}

double r_polynomial(double x, double s) {
    const double x2 = x * x;
    return 32.0 * x2 * x2 * x2 * x2 + 4.0 * (10.0 + s) * x2 * x2 * x2 + 20.0 * s * (6.0 + s) * x2 - 60.0 * s * s;
}

double rh_polynomial(double x, double s, double b) {
    const double b2 = b * b;
    const double b3 = b2 * b;
    double acc = 16.0 * b3;
    acc = acc * x + 51.0 * b2;
    acc = acc * x + (2.0 * b3 * s + 20.0 * b3 + 57.0 * b);
    acc = acc * x + (7.0 * b2 * s + 65.0 * b2 + 24.0);
    acc = acc * x + 3.0 * b * (3.0 * s + 25.0);
    acc = acc * x + (b2 * (2.0 * s * s + 15.0 * s + 30.0) + 20.0);
    acc = acc * x + 5.0 * b * (3.0 + (-1.0 + 12.0 * b2) * s + 2.0 * b2 * s * s);
    acc = acc * x + 45.0 * b2 * s;
    acc = acc * x + 15.0 * b * s * (1.0 - 2.0 * b2 * s);
    acc = acc * x - 15.0 * b2 * s * s;
    return acc;
}

double p4_alpha0_root(double ste, const rootfind::SolveControl& ctrl) {
    if (!(ste > 0.0)) throw DomainError("p4_alpha0_root: ste must be > 0");
    // r(0) < 0 and r(1) > 0 whenever 0 < Ste <= 3; widen otherwise.
    auto fn = [&](double x) { return r_polynomial(x, ste); };
    double hi = 1.0;
    while (fn(hi) <= 0.0) hi *= 2.0;
    return rootfind::bisect(fn, {0.0, hi}, ctrl);
}

double p4h_alpha0_root(double ste, double bi, const rootfind::SolveControl& ctrl) {
    if (!(ste > 0.0)) throw DomainError("p4h_alpha0_root: ste must be > 0");
    if (!(bi > 0.0)) throw DomainError("p4h_alpha0_root: bi must be > 0");
    auto fn = [&](double x) { return rh_polynomial(x, ste, bi); };
    const auto roots = rootfind::find_roots(fn, detail::kSearchFloor, kLsqSearchHi, ctrl);
    if (roots.empty()) throw NoRootError("p4h_alpha0_root: no root in (0, 2]");
    return roots.front();
}

SimilaritySolution solve_p4(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate();
    const ld a = p.alpha;
    const ld s = p.ste;
    auto objective = [&](double x) { return e_p4(x, a, s); };
    SimilaritySolution sol = pick_global(rootfind::local_minima(objective, detail::kSearchFloor, kLsqSearchHi, ctrl),
                                         {Scheme::LeastSquares, Boundary::Dirichlet}, objective, "solve_p4");
    sol.coeff_a = std::pow(2.0, p.alpha + 1.0) * detail::real_pow(sol.nu, p.alpha + 2.0) / p.ste;
    sol.coeff_b = 1.0 - sol.coeff_a;
    return sol;
}

SimilaritySolution solve_p4h(const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    p.validate_robin();
    const ld a = p.alpha;
    const ld s = p.ste;
    const double bi = *p.bi;
    const ld lbi = bi;
    auto objective = [&](double x) { return e_p4h(x, a, s, lbi); };
    SimilaritySolution sol = pick_global(rootfind::local_minima(objective, detail::kSearchFloor, kLsqSearchHi, ctrl),
                                         {Scheme::LeastSquares, Boundary::Robin}, objective, "solve_p4h");
    const double nu = sol.nu;
    sol.coeff_a = std::pow(2.0, p.alpha + 1.0) * detail::real_pow(nu, p.alpha + 2.0) / p.ste;
    sol.coeff_b = (2.0 * bi * nu - sol.coeff_a * (1.0 + 2.0 * bi * nu)) / (2.0 * (1.0 + bi * nu));
    if (p.alpha == 0.0) {
        sol.hypothesis_violated = !(bi > 1.0 / std::sqrt(12.0) && p.ste < 1.0 / (2.0 * bi * bi));
    }
    return sol;
}

}  // namespace stefan::leastsq
