#include "stefan/solve.hpp"

#include "stefan/errors.hpp"
#include "stefan/exact.hpp"
#include "stefan/hbim.hpp"
#include "stefan/leastsq.hpp"

namespace stefan {

SimilaritySolution solve(MethodKind m, const ProblemParams& p, const rootfind::SolveControl& ctrl) {
    const bool robin = m.boundary == Boundary::Robin;
    switch (m.scheme) {
        case Scheme::Exact:
            return robin ? exact::solve_exact_robin(p, ctrl) : exact::solve_exact_dirichlet(p, ctrl);
        case Scheme::ClassicalHBIM:
            return robin ? hbim::solve_p1h(p, ctrl) : hbim::solve_p1(p, ctrl);
        case Scheme::ModifiedHBIM:
            return robin ? hbim::solve_p2h(p, ctrl) : hbim::solve_p2(p, ctrl);
        case Scheme::RIM:
            return robin ? hbim::solve_p3h(p, ctrl) : hbim::solve_p3(p, ctrl);
        case Scheme::LeastSquares:
            return robin ? leastsq::solve_p4h(p, ctrl) : leastsq::solve_p4(p, ctrl);
    }
    throw DomainError("solve: unknown method");
}

double eval_temperature(const ProblemParams& p, const SimilaritySolution& s, double x, double t) {
    if (s.method.scheme == Scheme::Exact) return exact::eval_exact_temperature(p, s, x, t);
    return hbim::eval_quadratic_temperature(p, s, x, t);
}

}  // namespace stefan
