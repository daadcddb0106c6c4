#include "stefan/specfun.hpp"

#include "stefan/errors.hpp"

#include <cmath>
#include <string>

namespace stefan::specfun {

namespace {

bool is_nonpositive_integer(double b) {
    return b <= 0.0 && std::floor(b) == b;
}

// Direct summation; only called with z >= 0.
double kummer_series(double a, double b, double z, const SeriesControl& ctrl) {
    double term = 1.0;
    double sum = 1.0;
    if (z == 0.0) return sum;

    const double peak = std::abs(a) + std::abs(b) + std::abs(z);
    int small_run = 0;
    for (std::size_t s = 0; s < ctrl.max_terms; ++s) {
        const double sd = static_cast<double>(s);
        term *= (a + sd) * z / ((b + sd) * (sd + 1.0));
        sum += term;
        if (term == 0.0) return sum;  // terminating series (a a nonpositive integer)

        small_run = std::abs(term) <= ctrl.rel_tol * std::abs(sum) ? small_run + 1 : 0;
        if (small_run < 2 || sd + 1.0 <= peak) continue;

        // Beyond the peak the term ratios decrease, so the tail is bounded by
        // a geometric series with the next ratio.
        const double ratio = std::abs((a + sd + 1.0) * z / ((b + sd + 1.0) * (sd + 2.0)));
        if (ratio < 1.0 && std::abs(term) * ratio / (1.0 - ratio) <= ctrl.rel_tol * std::abs(sum)) {
            return sum;
        }
    }
    throw ConvergenceError("kummer_m: series did not converge in " + std::to_string(ctrl.max_terms) +
                           " terms (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                           ", z=" + std::to_string(z) + ")");
}

}  // namespace

double pochhammer(double a, unsigned s) {
    double p = 1.0;
    for (unsigned k = 0; k < s; ++k) p *= a + static_cast<double>(k);
    return p;
}

double kummer_m(double a, double b, double z, const SeriesControl& ctrl) {
    if (is_nonpositive_integer(b)) {
        throw DomainError("kummer_m: b must not be zero or a negative integer (b=" + std::to_string(b) + ")");
    }
    if (z < 0.0) return std::exp(z) * kummer_series(b - a, b, -z, ctrl);
    return kummer_series(a, b, z, ctrl);
}

double f_aux(double z, double alpha, const SeriesControl& ctrl) {
    if (!(z > 0.0)) throw DomainError("f_aux: z must be positive");
    return 1.0 / (z * kummer_m(alpha / 2.0 + 1.0, 1.5, z * z, ctrl));
}

}  // namespace stefan::specfun
