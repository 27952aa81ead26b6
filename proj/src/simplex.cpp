#include "haarpoly/simplex.hpp"

#include "haarpoly/errors.hpp"

#include <cstddef>

namespace haarpoly {

LPFeasibility solve_equality_feasibility(const std::vector<std::vector<Rational>>& A,
                                         const std::vector<Rational>& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw DimensionMismatchError("A and b row counts differ");
    const std::size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A) {
        if (row.size() != n) throw DimensionMismatchError("ragged constraint matrix");
    }
    for (const Rational& v : b) {
        if (v < 0) throw DomainError("phase-1 simplex needs b >= 0");
    }

    // Tableau [A | I | b] with artificial basis; minimize the sum of the
    // artificials. cost[j] holds the reduced cost of column j, obj the
    // current objective value (both maintained through pivots).
    const std::size_t cols = n + m;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) T[r][j] = A[r][j];
        T[r][n + r] = 1;
        T[r][cols] = b[r];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

    std::vector<Rational> cost(cols, Rational(0));
    Rational obj(0);
    for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t r = 0; r < m; ++r) s += A[r][j];
        cost[j] = -s; // c_j - 1^T A_j with c_j = 0
    }
    for (std::size_t r = 0; r < m; ++r) obj += b[r];

    for (;;) {
        // Bland: smallest-index column with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        // Ratio test; ties broken by smallest basis variable index.
        std::size_t leave = m;
        Rational best(0);
        for (std::size_t r = 0; r < m; ++r) {
            if (T[r][enter] <= 0) continue;
            Rational ratio = T[r][cols] / T[r][enter];
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m) {
            // The phase-1 objective is bounded below by zero, so an
            // unbounded ray cannot happen.
            throw InternalError("phase-1 simplex claims unboundedness");
        }

        // Pivot on (leave, enter).
        Rational piv = T[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            Rational f = T[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
        }
        // Cost row eliminates like any other row; the objective moves by
        // (reduced cost) * (entering value).
        Rational cf = cost[enter];
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= cf * T[leave][j];
        obj += cf * T[leave][cols];
        basis[leave] = enter;
    }

    LPFeasibility out;
    if (obj == 0) {
        out.feasible = true;
        out.solution.assign(n, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            if (basis[r] < n) out.solution[basis[r]] = T[r][cols];
        }
    } else {
        out.feasible = false;
        // Dual certificate from the artificial columns: y_k = 1 - reduced
        // cost of artificial k. Then y^T A_j = -cost[j] <= 0 for original
        // columns and y^T b = obj > 0.
        out.farkas.assign(m, Rational(0));
        for (std::size_t k = 0; k < m; ++k) out.farkas[k] = Rational(1) - cost[n + k];
    }
    return out;
}

} // namespace haarpoly
