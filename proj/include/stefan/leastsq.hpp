#pragma once

#include "stefan/problem.hpp"
#include "stefan/rootfind.hpp"

namespace stefan::leastsq {

/// Least-squares error of a quadratic profile with front s = 2 a xi sqrt(t),
/// divided by the common factor t^(alpha-2) theta_inf^2.
struct LsqErrorParts {
    double xi = 0.0;
    double e_value = 0.0;
};

/// Error density of the profile A(1 - x/s) + B(1 - x/s)^2 evaluated from
/// its coefficients. Requires xi > 0.
double lsq_error_direct(double xi, double alpha, double coeff_a, double coeff_b);

/// Numerator p(xi) of the prescribed-temperature error, so that
/// E(xi) = p(xi) / (60 Ste^2 xi^4).
double p4_polynomial(double xi, double alpha, double ste);

/// E(xi) with A = 2^(alpha+1) xi^(alpha+2) / Ste and B = 1 - A.
LsqErrorParts lsq_error_p4(double xi, double alpha, double ste);

/// E_h(xi) = [p + c1/Bi + c2/Bi^2] / (60 Ste^2 xi^2 (1/Bi + xi)^2) with the
/// convective closure for B.
LsqErrorParts lsq_error_p4h(double xi, double alpha, double ste, double bi);

/// alpha = 0 stationarity polynomial
/// r = 32 xi^8 + 4(10 + Ste) xi^6 + 20 Ste (6 + Ste) xi^2 - 60 Ste^2.
double r_polynomial(double xi, double ste);

/// alpha = 0 convective stationarity polynomial (numerator of dE_h/dxi).
double rh_polynomial(double xi, double ste, double bi);

/// Unique positive root of r_polynomial.
double p4_alpha0_root(double ste, const rootfind::SolveControl& ctrl = {});

/// Positive root of rh_polynomial. Throws NoRootError when none lies in (0, 2].
double p4h_alpha0_root(double ste, double bi, const rootfind::SolveControl& ctrl = {});

/// Global minimizer of E over (0, 2]. Every local minimum is kept in
/// candidates.
SimilaritySolution solve_p4(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});

/// Global minimizer of E_h over (0, 2]. At alpha = 0, hypothesis_violated
/// is set unless Bi > 1/sqrt(12) and Ste < 1/(2 Bi^2).
SimilaritySolution solve_p4h(const ProblemParams& p, const rootfind::SolveControl& ctrl = {});

}  // namespace stefan::leastsq
