#include "haarpoly/numeric.hpp"

#include "haarpoly/errors.hpp"

#include <cmath>
#include <numbers>

namespace haarpoly {

std::uint64_t SplitMix64::mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t stream) {
    // Decorrelate the stream index from the seed before use; the golden
    // gamma keeps distinct streams on distinct orbits.
    state = mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

std::uint64_t SplitMix64::next_u64() {
    state += 0x9E3779B97F4A7C15ULL;
    return mix(state);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::complex<double> SplitMix64::next_circle() {
    double angle = 2.0 * std::numbers::pi * next_unit();
    return {std::cos(angle), std::sin(angle)};
}

namespace {

/** Pairwise (binary-counter) accumulator: deterministic summation order
 *  with O(log n) error growth regardless of sample count. */
struct PairwiseSum {
    std::vector<std::complex<double>> levels;
    std::vector<bool> occupied;

    void add(std::complex<double> v) {
        std::size_t lvl = 0;
        for (;;) {
            if (lvl == levels.size()) {
                levels.push_back(v);
                occupied.push_back(true);
                return;
            }
            if (!occupied[lvl]) {
                levels[lvl] = v;
                occupied[lvl] = true;
                return;
            }
            v += levels[lvl];
            occupied[lvl] = false;
            ++lvl;
        }
    }
    std::complex<double> total() const {
        std::complex<double> acc = 0.0;
        for (std::size_t l = 0; l < levels.size(); ++l) {
            if (occupied[l]) acc += levels[l];
        }
        return acc;
    }
};

} // namespace

MonteCarloResult haar_monte_carlo(const GroupModel& model, const GroupFunction& f,
                                  std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw DomainError("need at least one sample");
    const MeasureSpec& spec = model.measure();
    std::vector<double> x(spec.n_x);
    std::vector<std::complex<double>> circ(spec.n_circle);
    PairwiseSum sum_f, sum_sq;
    for (std::uint64_t s = 0; s < samples; ++s) {
        SplitMix64 rng(seed, s);
        for (int j = 0; j < spec.n_x; ++j) {
            // Inverse CDF of (2e) t^(2e-1) dt on [0,1].
            x[j] = std::pow(rng.next_unit(), 1.0 / (2.0 * spec.exponents[j]));
        }
        for (int j = 0; j < spec.n_circle; ++j) circ[j] = rng.next_circle();
        std::complex<double> v = f(model.point(x, circ));
        sum_f.add(v);
        sum_sq.add(std::norm(v));
    }
    MonteCarloResult out;
    out.samples = samples;
    out.seed = seed;
    std::complex<double> total = sum_f.total();
    double n = static_cast<double>(samples);
    out.estimate = total / n;
    if (samples > 1) {
        double mean_sq = sum_sq.total().real() / n;
        double var = (mean_sq - std::norm(out.estimate)) * n / (n - 1.0);
        out.std_error = std::sqrt(std::max(0.0, var) / n);
    }
    return out;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw DomainError("quadrature rule needs at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    // Newton iteration from the Chebyshev-like initial guess; the rule is
    // symmetric so only half the nodes are computed.
    const int half = (n + 1) / 2;
    for (int k = 0; k < half; ++k) {
        double t = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double p_deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(t) and P'_n(t) by the three-term recurrence.
            double p0 = 1.0, p1 = t;
            for (int m = 2; m <= n; ++m) {
                double p2 = ((2.0 * m - 1.0) * t * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            p_deriv = n * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / p_deriv;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        // One more evaluation at the converged node for the weight.
        double p0 = 1.0, p1 = t;
        for (int m = 2; m <= n; ++m) {
            double p2 = ((2.0 * m - 1.0) * t * p1 - (m - 1.0) * p0) / m;
            p0 = p1;
            p1 = p2;
        }
        p_deriv = n * (t * p1 - p0) / (t * t - 1.0);
        nodes[k] = -t;
        nodes[n - 1 - k] = t;
        double w = 2.0 / ((1.0 - t * t) * p_deriv * p_deriv);
        weights[k] = w;
        weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

std::complex<double> haar_quadrature(const GroupModel& model, const GroupFunction& f, int degree,
                                     QuadratureInfo* info) {
    if (degree < 0) throw DomainError("degree budget must be >= 0");
    const MeasureSpec& spec = model.measure();

    // Per cell variable: Gauss-Legendre on [0,1] with the density folded in.
    std::vector<std::vector<double>> xnodes(spec.n_x), xweights(spec.n_x);
    for (int j = 0; j < spec.n_x; ++j) {
        int e = spec.exponents[j];
        int k = (degree + 2 * e) / 2 + 1;
        std::vector<double> t, w;
        gauss_legendre(k, t, w);
        xnodes[j].resize(k);
        xweights[j].resize(k);
        for (int q = 0; q < k; ++q) {
            double u = 0.5 * (t[q] + 1.0); // map [-1,1] -> [0,1]
            xnodes[j][q] = u;
            xweights[j][q] = 0.5 * w[q] * 2.0 * e * std::pow(u, 2.0 * e - 1.0);
        }
    }
    const int m = degree + 1; // circle nodes per variable

    std::uint64_t total_nodes = 1;
    for (int j = 0; j < spec.n_x; ++j) total_nodes *= xnodes[j].size();
    for (int j = 0; j < spec.n_circle; ++j) total_nodes *= static_cast<std::uint64_t>(m);
    if (info) {
        info->nodes = total_nodes;
        info->degree = degree;
    }
    if (total_nodes > 200000000ULL) {
        throw DomainError("quadrature grid too large; lower the degree budget");
    }

    std::vector<std::complex<double>> circle_nodes(m);
    for (int q = 0; q < m; ++q) {
        double angle = 2.0 * std::numbers::pi * q / m;
        circle_nodes[q] = {std::cos(angle), std::sin(angle)};
    }

    // Odometer over the product grid.
    std::vector<int> ix(spec.n_x, 0), ic(spec.n_circle, 0);
    std::vector<double> x(spec.n_x);
    std::vector<std::complex<double>> circ(spec.n_circle);
    for (int j = 0; j < spec.n_x; ++j) x[j] = xnodes[j][0];
    for (int j = 0; j < spec.n_circle; ++j) circ[j] = circle_nodes[0];

    PairwiseSum acc;
    const double circle_norm = std::pow(static_cast<double>(m), -spec.n_circle);
    for (;;) {
        double wx = 1.0;
        for (int j = 0; j < spec.n_x; ++j) wx *= xweights[j][ix[j]];
        acc.add(f(model.point(x, circ)) * wx);

        int j = 0;
        for (; j < spec.n_x; ++j) {
            if (++ix[j] < static_cast<int>(xnodes[j].size())) {
                x[j] = xnodes[j][ix[j]];
                break;
            }
            ix[j] = 0;
            x[j] = xnodes[j][0];
        }
        if (j < spec.n_x) continue;
        int jc = 0;
        for (; jc < spec.n_circle; ++jc) {
            if (++ic[jc] < m) {
                circ[jc] = circle_nodes[ic[jc]];
                break;
            }
            ic[jc] = 0;
            circ[jc] = circle_nodes[0];
        }
        if (jc == spec.n_circle) break;
    }
    return acc.total() * circle_norm;
}

EulerNodes EulerNodes::for_degree(int degree) {
    EulerNodes n;
    n.n_phi = 2 * degree + 4;   // integer frequencies up to degree survive
    n.n_psi = 2 * degree + 4;   // half-integer frequencies over the 4pi period
    n.n_theta = degree + 48;    // analytic integrand; generous
    return n;
}

std::complex<double> euler_su2_integral(const std::function<std::complex<double>(const CMatrix&)>& f,
                                        const EulerNodes& nodes) {
    if (nodes.n_phi < 1 || nodes.n_theta < 1 || nodes.n_psi < 1) {
        throw DomainError("node counts must be positive");
    }
    std::vector<double> t, wt;
    gauss_legendre(nodes.n_theta, t, wt);

    PairwiseSum acc;
    CMatrix u(2);
    const std::complex<double> I(0.0, 1.0);
    for (int a = 0; a < nodes.n_phi; ++a) {
        double phi = 2.0 * std::numbers::pi * a / nodes.n_phi;
        for (int b = 0; b < nodes.n_psi; ++b) {
            double psi = -2.0 * std::numbers::pi + 4.0 * std::numbers::pi * b / nodes.n_psi;
            for (int q = 0; q < nodes.n_theta; ++q) {
                double theta = 0.5 * std::numbers::pi * (t[q] + 1.0); // [0, pi]
                double ch = std::cos(0.5 * theta), sh = std::sin(0.5 * theta);
                u.at(0, 0) = ch * std::exp(I * (0.5 * (phi + psi)));
                u.at(0, 1) = I * sh * std::exp(I * (0.5 * (phi - psi)));
                u.at(1, 0) = I * sh * std::exp(I * (0.5 * (psi - phi)));
                u.at(1, 1) = ch * std::exp(-I * (0.5 * (phi + psi)));
                // Weight: (1/16 pi^2) d(psi) d(theta) d(phi) sin(theta)
                // with plain averages over phi (2pi range) and psi (4pi
                // range) leaves (1/2) * integral over [0,pi] of sin(theta),
                // and the GL map to [0,pi] contributes pi/2.
                double w = wt[q] * 0.25 * std::numbers::pi * std::sin(theta);
                acc.add(f(u) * w);
            }
        }
    }
    return acc.total() / (static_cast<double>(nodes.n_phi) * static_cast<double>(nodes.n_psi));
}

} // namespace haarpoly
