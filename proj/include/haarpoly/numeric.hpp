#pragma once

#include "haarpoly/groupmodel.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace haarpoly {

/** Black-box function on the group, evaluated at numeric points. */
using GroupFunction = std::function<std::complex<double>(const GroupPoint&)>;

/** splitmix64 keyed substreams: stream(seed, k) mixes seed with the stream
 *  index once, then draws by successive increments of the golden-gamma
 *  constant through the splitmix64 output permutation. Every Monte Carlo
 *  sample k uses stream(seed, k), so the estimate is independent of batching
 *  or threading and any sample can be reproduced in O(1). */
struct SplitMix64 {
    std::uint64_t state;

    static std::uint64_t mix(std::uint64_t z);
    SplitMix64(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /** Uniform in [0, 1) with 53 random bits. */
    double next_unit();
    /** Uniform point of the unit circle. */
    std::complex<double> next_circle();
};

struct MonteCarloResult {
    std::complex<double> estimate;
    double std_error = 0.0; // sqrt(Var(f)/samples), complex deviations
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/** Monte Carlo estimate of the normalized integral of f. Each sample draws,
 *  in layout order, the cell coordinates x_j = u^(1/(2 e_j)) (the inverse
 *  CDF of density (2 e_j) x^(2 e_j - 1)) and then uniform circle points for
 *  every circle variable. Sums use pairwise (binary-counter) accumulation,
 *  so results are bit-reproducible for a given seed and sample count. */
MonteCarloResult haar_monte_carlo(const GroupModel& model, const GroupFunction& f,
                                  std::uint64_t samples, std::uint64_t seed);

/** Gauss-Legendre rule on [-1, 1] (Newton iteration on the Legendre
 *  polynomial); nodes ascending, weights positive. */
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct QuadratureInfo {
    std::uint64_t nodes = 0;
    int degree = 0;
    bool budget_warning = false; // set by callers that know the true degree
};

/** Product quadrature for the normalized integral of f, exact (up to
 *  roundoff) for expressions of total entry degree <= degree: per cell
 *  variable a Gauss-Legendre rule with the density folded into the weights
 *  (enough nodes for polynomial degree degree + 2 e_j), per circle variable
 *  a uniform (degree+1)-point rule. Square roots in the unitary chart are
 *  harmless: terms odd in sqrt(1-x_j^2) carry nonzero w_j frequency and the
 *  circle average removes them. */
std::complex<double> haar_quadrature(const GroupModel& model, const GroupFunction& f, int degree,
                                     QuadratureInfo* info = nullptr);

/** Node counts for the classical Euler-angle reference integral. */
struct EulerNodes {
    int n_phi = 0;
    int n_theta = 0;
    int n_psi = 0;
    static EulerNodes for_degree(int degree);
};

/** Classical 3-angle reference integral over SU(2): the average of
 *  f([[cos(t/2) e^{i(phi+psi)/2}, i sin(t/2) e^{i(phi-psi)/2}],
 *     [i sin(t/2) e^{i(psi-phi)/2}, cos(t/2) e^{-i(phi+psi)/2}]])
 *  against sin(t) dt dphi dpsi / (16 pi^2), phi over [0,2pi], t over
 *  [0,pi], psi over [-2pi,2pi]. Uniform rules in both angles (psi spans its
 *  full 4pi period, so half-integer frequencies cancel exactly) and
 *  Gauss-Legendre in t. Completely independent of the cell/circle chart;
 *  used as a cross-check oracle. */
std::complex<double> euler_su2_integral(const std::function<std::complex<double>(const CMatrix&)>& f,
                                        const EulerNodes& nodes);

} // namespace haarpoly
