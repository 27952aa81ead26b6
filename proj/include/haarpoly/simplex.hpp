#pragma once

#include "haarpoly/rational.hpp"

#include <vector>

namespace haarpoly {

/** Result of an exact feasibility solve for { v >= 0 : A v = b }.
 *  Exactly one of solution / farkas is meaningful:
 *   - feasible: solution has size n, entries >= 0, and A solution = b;
 *   - infeasible: farkas y has size m with y^T A <= 0 (componentwise) and
 *     y^T b > 0, certifying emptiness. */
struct LPFeasibility {
    bool feasible = false;
    std::vector<Rational> solution;
    std::vector<Rational> farkas;
};

/** Phase-1 simplex over exact rationals with Bland's pivot rule (smallest
 *  index enters, smallest basis index breaks ratio ties), so the run is
 *  deterministic and cannot cycle. Requires b >= 0 componentwise (flip row
 *  signs beforehand if needed); throws DomainError otherwise. */
LPFeasibility solve_equality_feasibility(const std::vector<std::vector<Rational>>& A,
                                         const std::vector<Rational>& b);

} // namespace haarpoly
