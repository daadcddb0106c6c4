#pragma once

#include "stefan/errors.hpp"

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

namespace stefan::rootfind {

/// Interval [lo, hi] with lo < hi.
struct Bracket {
    double lo;
    double hi;
};

struct SolveControl {
    double abs_tol = 1e-12;
    std::size_t max_iter = 200;
    std::size_t scan_points = 2000;
};

/// Any callable double -> real. The result type may be wider than double
/// (long double objectives let the minimizer resolve flatter valleys).
template <typename F>
concept ScalarFunction = requires(F f, double x) {
    { f(x) } -> std::convertible_to<long double>;
};

namespace detail {

template <typename T>
int sign_of(T v) {
    return (v > T(0)) - (v < T(0));
}

inline void check_interval(double lo, double hi, const char* who) {
    if (!(lo < hi)) {
        throw DomainError(std::string(who) + ": requires lo < hi");
    }
}

}  // namespace detail

/// Every subinterval of the uniform scan of [lo, hi] (scan_points cells) on
/// which fn changes sign, in increasing order. Cells touching a non-finite
/// value are skipped; a grid point where fn is exactly zero closes a bracket.
template <ScalarFunction F>
std::vector<Bracket> scan_brackets(F&& fn, double lo, double hi, std::size_t scan_points) {
    detail::check_interval(lo, hi, "scan_brackets");
    if (scan_points == 0) scan_points = 1;
    std::vector<Bracket> out;
    const double step = (hi - lo) / static_cast<double>(scan_points);
    double x_prev = lo;
    auto f_prev = fn(lo);
    for (std::size_t i = 1; i <= scan_points; ++i) {
        const double x = (i == scan_points) ? hi : lo + step * static_cast<double>(i);
        const auto f = fn(x);
        if (std::isfinite(static_cast<long double>(f)) && std::isfinite(static_cast<long double>(f_prev))) {
            const int sp = detail::sign_of(f_prev);
            const int sx = detail::sign_of(f);
            if (sp * sx < 0 || (sx == 0 && sp != 0)) out.push_back({x_prev, x});
        }
        x_prev = x;
        f_prev = f;
    }
    return out;
}

/// Bisection on a sign-change bracket. Returns the midpoint of the final
/// bracket, whose width is at most abs_tol (or one ulp apart).
template <ScalarFunction F>
double bisect(F&& fn, Bracket b, const SolveControl& ctrl = {}) {
    detail::check_interval(b.lo, b.hi, "bisect");
    auto f_lo = fn(b.lo);
    const auto f_hi = fn(b.hi);
    if (f_lo == 0) return b.lo;
    if (f_hi == 0) return b.hi;
    if (!(detail::sign_of(f_lo) * detail::sign_of(f_hi) < 0)) {
        throw BadBracketError("bisect: function does not change sign on [" + std::to_string(b.lo) + ", " +
                              std::to_string(b.hi) + "]");
    }
    double lo = b.lo;
    double hi = b.hi;
    for (std::size_t it = 0; it < ctrl.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= ctrl.abs_tol || mid <= lo || mid >= hi) return mid;
        const auto f_mid = fn(mid);
        if (f_mid == 0) return mid;
        if (detail::sign_of(f_mid) == detail::sign_of(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    if (hi - lo <= ctrl.abs_tol) return 0.5 * (lo + hi);
    throw ConvergenceError("bisect: max_iter reached before abs_tol");
}

/// All roots of fn on [lo, hi] found by scan_brackets + bisect.
template <ScalarFunction F>
std::vector<double> find_roots(F&& fn, double lo, double hi, const SolveControl& ctrl = {}) {
    std::vector<double> roots;
    for (const Bracket& b : scan_brackets(fn, lo, hi, ctrl.scan_points)) {
        roots.push_back(bisect(fn, b, ctrl));
    }
    return roots;
}

/// Golden-section search on [lo, hi] for a unimodal fn.
template <ScalarFunction F>
double golden_section(F&& fn, double lo, double hi, const SolveControl& ctrl = {}) {
    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    auto fc = fn(c);
    auto fd = fn(d);
    for (std::size_t it = 0; it < ctrl.max_iter && b - a > ctrl.abs_tol; ++it) {
        // Ties shrink towards the left end so the smaller argmin wins.
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

/// Argmin of fn over [lo, hi]: a uniform scan of scan_points cells picks the
/// best grid point (smallest argument under ties), then golden-section
/// refines within its two neighbouring cells.
template <ScalarFunction F>
double minimize_scalar(F&& fn, double lo, double hi, const SolveControl& ctrl = {}) {
    detail::check_interval(lo, hi, "minimize_scalar");
    const std::size_t n = ctrl.scan_points == 0 ? 1 : ctrl.scan_points;
    const double step = (hi - lo) / static_cast<double>(n);
    auto grid = [&](std::size_t i) { return i == n ? hi : lo + step * static_cast<double>(i); };

    std::size_t best = 0;
    auto f_best = fn(lo);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto f = fn(grid(i));
        if (f < f_best) {
            f_best = f;
            best = i;
        }
    }
    const double a = grid(best == 0 ? 0 : best - 1);
    const double b = grid(best == n ? n : best + 1);
    const double x = golden_section(fn, a, b, ctrl);
    return fn(x) <= f_best ? x : grid(best);
}

/// Every interior local minimum of fn on the scan grid, each refined by
/// golden-section, in increasing order.
template <ScalarFunction F>
std::vector<double> local_minima(F&& fn, double lo, double hi, const SolveControl& ctrl = {}) {
    detail::check_interval(lo, hi, "local_minima");
    const std::size_t n = ctrl.scan_points < 2 ? 2 : ctrl.scan_points;
    const double step = (hi - lo) / static_cast<double>(n);
    using R = std::decay_t<decltype(fn(lo))>;
    std::vector<R> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = fn(i == n ? hi : lo + step * static_cast<double>(i));

    std::vector<double> out;
    for (std::size_t i = 1; i < n; ++i) {
        if (vals[i] < vals[i - 1] && vals[i] <= vals[i + 1]) {
            const double a = lo + step * static_cast<double>(i - 1);
            const double b = (i + 1 == n) ? hi : lo + step * static_cast<double>(i + 1);
            out.push_back(golden_section(fn, a, b, ctrl));
        }
    }
    return out;
}

}  // namespace stefan::rootfind
