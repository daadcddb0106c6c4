#pragma once

#include <cstddef>

namespace stefan::specfun {

/// Truncation control for the hypergeometric series.
struct SeriesControl {
    double rel_tol = 1e-14;
    std::size_t max_terms = 500;
};

/// Rising factorial (a)_s = a(a+1)...(a+s-1), with (a)_0 = 1.
double pochhammer(double a, unsigned s);

/// Kummer's confluent hypergeometric function M(a, b, z) = 1F1(a; b; z).
///
/// Summed directly for z >= 0. For z < 0 the Kummer transformation
/// M(a,b,z) = e^z M(b-a, b, -z) is applied first, so the summed series
/// has positive terms whenever b - a > 0.
///
/// Throws DomainError when b is zero or a negative integer and
/// ConvergenceError when max_terms is exhausted before the tail bound
/// drops below rel_tol.
double kummer_m(double a, double b, double z, const SeriesControl& ctrl = {});

/// f(z) = 1 / (z M(alpha/2 + 1, 3/2, z^2)), z > 0.
///
/// Strictly decreasing on z > 0 and unbounded as z -> 0+.
double f_aux(double z, double alpha, const SeriesControl& ctrl = {});

}  // namespace stefan::specfun
