#pragma once

// Root-search helpers shared by the solvers (not part of the public API).

#include "stefan/errors.hpp"
#include "stefan/rootfind.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace stefan::detail {

/// Lower end of every similarity-coefficient search; the residuals are
/// singular or constant-dominated at 0.
inline constexpr double kSearchFloor = 1e-9;

/// Roots of fn on (kSearchFloor, hi]; while none is found, hi is doubled up
/// to hi_max. Series overflow at large z ends the expansion.
template <typename F>
std::vector<double> roots_expanding(F&& fn, double hi, double hi_max, const rootfind::SolveControl& ctrl) {
    for (;;) {
        std::vector<double> roots;
        try {
            roots = rootfind::find_roots(fn, kSearchFloor, hi, ctrl);
        } catch (const ConvergenceError&) {
            return {};
        }
        if (!roots.empty() || hi >= hi_max) return roots;
        hi = std::min(2.0 * hi, hi_max);
    }
}

/// z^p for z >= 0 and real p, via exp(p ln z); 0^0 = 1.
inline double real_pow(double z, double p) {
    if (z == 0.0) return p == 0.0 ? 1.0 : 0.0;
    return std::exp(p * std::log(z));
}

}  // namespace stefan::detail
