#pragma once

#include "stefan/problem.hpp"
#include "stefan/rootfind.hpp"

namespace stefan::hbim {

// Residuals whose positive roots are the front coefficients. Real powers
// use exp(p ln z); at z = 0 they reduce to their constant terms.

/// Classical heat-balance method, prescribed temperature. w(0) = 18 Ste^2 for alpha > 0.
double residual_p1(double z, double alpha, double ste);
/// Modified heat-balance method, prescribed temperature. Increasing, w(0) = -3 Ste.
double residual_p2(double z, double alpha, double ste);
/// Refined integral method, prescribed temperature. Increasing, w(0) = -6 Ste.
double residual_p3(double z, double alpha, double ste);
/// Classical heat-balance method, convective condition.
double residual_p1h(double z, double alpha, double ste, double bi);
/// Modified heat-balance method, convective condition.
double residual_p2h(double z, double alpha, double ste, double bi);
/// Refined integral method, convective condition.
double residual_p3h(double z, double alpha, double ste, double bi);

/// Smallest root of residual_p1 in (0, 1). All roots found there are kept
/// in candidates and multiple_roots is set when there is more than one.
/// Throws NoRootError when the interval holds none.
SimilaritySolution solve_p1(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});
SimilaritySolution solve_p2(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});
SimilaritySolution solve_p3(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});

/// Same root selection as solve_p1. Small Bi can leave (0, 1) without a
/// root, reported as NoRootError.
SimilaritySolution solve_p1h(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});
SimilaritySolution solve_p2h(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});
SimilaritySolution solve_p3h(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});

/// theta_inf t^(alpha/2) [A (1 - x/s) + B (1 - x/s)^2] for any non-exact
/// solution. Throws DomainError unless t > 0 and 0 <= x <= s(t).
double eval_quadratic_temperature(const ProblemParams& p, const SimilaritySolution& s, double x, double t);

}  // namespace stefan::hbim
