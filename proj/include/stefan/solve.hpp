#pragma once

#include "stefan/problem.hpp"
#include "stefan/rootfind.hpp"

namespace stefan {

/// Runs the solver for method m. Robin methods require p.bi.
SimilaritySolution solve(MethodKind m, const ProblemParams& p, const rootfind::SolveControl& ctrl = {});

/// Temperature of solution s at (x, t), 0 <= x <= s(t), t > 0.
double eval_temperature(const ProblemParams& p, const SimilaritySolution& s, double x, double t);

}  // namespace stefan
