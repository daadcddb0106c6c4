#pragma once

#include "stefan/problem.hpp"
#include "stefan/rootfind.hpp"
#include "stefan/specfun.hpp"

namespace stefan::exact {

/// (Ste / 2^(alpha+1)) f(z) - z^(alpha+1); positive near 0, decreasing.
double dirichlet_residual(double z, double alpha, double ste, const specfun::SeriesControl& sc = {});

/// Robin counterpart: (Ste / 2^(alpha+1)) / [1/f(z) + M(alpha/2+1/2, 1/2, z^2)/(2 Bi)] - z^(alpha+1).
double robin_residual(double z, double alpha, double ste, double bi, const specfun::SeriesControl& sc = {});

/// Exact similarity solution with a prescribed temperature theta_inf t^(alpha/2)
/// at x = 0. coeff_a = 1 and coeff_b is normalized by theta_inf.
SimilaritySolution solve_exact_dirichlet(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});

/// Exact similarity solution with the convective condition at x = 0. Requires p.bi.
SimilaritySolution solve_exact_robin(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});

/// T(x,t) = theta_inf t^(alpha/2) [A M(-alpha/2, 1/2, -eta^2) + B eta M(1/2 - alpha/2, 3/2, -eta^2)],
/// eta = x / (2 a sqrt(t)). Throws DomainError unless t > 0 and 0 <= x <= s(t).
double eval_exact_temperature(const ProblemParams& p, const SimilaritySolution& s, double x, double t);

}  // namespace stefan::exact
