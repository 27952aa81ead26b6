#include "haarpoly/rootsystem.hpp"

#include "haarpoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace haarpoly {

SimpleType simple_type_from_char(char c) {
    switch (c) {
    case 'A': return SimpleType::A;
    case 'B': return SimpleType::B;
    case 'C': return SimpleType::C;
    case 'D': return SimpleType::D;
    case 'E': return SimpleType::E;
    case 'F': return SimpleType::F;
    case 'G': return SimpleType::G;
    default: throw InvalidTypeError(std::string("unknown simple type '") + c + "'");
    }
}

char simple_type_char(SimpleType t) { return static_cast<char>(t); }

namespace {

void check_rank(SimpleType t, int rank) {
    bool ok = false;
    switch (t) {
    case SimpleType::A: ok = rank >= 1; break;
    case SimpleType::B: ok = rank >= 2; break;
    case SimpleType::C: ok = rank >= 2; break;
    case SimpleType::D: ok = rank >= 3; break;
    case SimpleType::E: ok = rank >= 6 && rank <= 8; break;
    case SimpleType::F: ok = rank == 4; break;
    case SimpleType::G: ok = rank == 2; break;
    }
    if (!ok) {
        throw InvalidTypeError(std::string("invalid rank ") + std::to_string(rank) + " for type " +
                               simple_type_char(t));
    }
}

/** Cartan matrix a[i][j] and the root-length weights d[i] with
 *  (alpha_i, alpha_j) = d_i a[i][j], normalized so long roots have squared
 *  length 2 (d_i = (alpha_i, alpha_i)/2). */
void cartan_data(SimpleType t, int n, std::vector<std::vector<int>>& a, std::vector<Rational>& d) {
    a.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    d.assign(n, Rational(1));
    auto chain_edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };

    switch (t) {
    case SimpleType::A:
        for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
        break;
    case SimpleType::B:
        // Last simple root short: (alpha_n, alpha_n) = 1.
        for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
        a[n - 2][n - 1] = -1;
        a[n - 1][n - 2] = -2;
        d[n - 1] = Rational(1, 2);
        break;
    case SimpleType::C:
        // Last simple root long, the others short.
        for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
        a[n - 2][n - 1] = -2;
        a[n - 1][n - 2] = -1;
        for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
        break;
    case SimpleType::D:
        // Chain 0..n-2 with the extra node n-1 attached at n-3.
        for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
        chain_edge(n - 3, n - 1);
        break;
    case SimpleType::E:
        // Nodes 1,3,4,5,... form a chain; node 2 hangs off node 4
        // (standard numbering, shifted to 0-based).
        chain_edge(0, 2);
        chain_edge(2, 3);
        chain_edge(3, 4);
        chain_edge(4, 5);
        if (n >= 7) chain_edge(5, 6);
        if (n >= 8) chain_edge(6, 7);
        chain_edge(1, 3);
        break;
    case SimpleType::F:
        // Two long, two short, double edge in the middle.
        chain_edge(0, 1);
        a[1][2] = -1;
        a[2][1] = -2;
        chain_edge(2, 3);
        d[2] = d[3] = Rational(1, 2);
        break;
    case SimpleType::G:
        // First simple root short with squared length 2/3.
        a[0][1] = -3;
        a[1][0] = -1;
        d[0] = Rational(1, 3);
        break;
    }
}

} // namespace

RootSystem::RootSystem(SimpleType type, int rank, const Rational& form_scale) : type_(type), rank_(rank) {
    check_rank(type, rank);
    if (form_scale <= 0) throw DomainError("form scale must be positive");

    std::vector<Rational> d;
    cartan_data(type, rank, cartan_, d);
    form_.assign(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            form_[i][j] = d[i] * cartan_[i][j] * form_scale;
        }
    }

    // Reflection closure of the simple roots; positives are the roots with
    // nonnegative coordinates.
    std::set<Root> roots;
    std::vector<Root> frontier;
    for (int i = 0; i < rank; ++i) {
        Root alpha(rank, 0);
        alpha[i] = 1;
        roots.insert(alpha);
        frontier.push_back(alpha);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const Root& r : frontier) {
            for (int i = 0; i < rank; ++i) {
                Root s = reflect(i, r);
                if (roots.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    for (const Root& r : roots) {
        bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
        if (nonneg) positive_.push_back(r);
    }
    if (2 * positive_.size() != roots.size()) {
        throw InternalError("root generation produced unbalanced positives/negatives");
    }
    auto height = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
    std::sort(positive_.begin(), positive_.end(), [&](const Root& x, const Root& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) positive_index_[positive_[k]] = static_cast<int>(k);

    // rho = half the sum of the positive roots.
    rho_.assign(rank, Rational(0));
    for (const Root& r : positive_) {
        for (int i = 0; i < rank; ++i) rho_[i] += r[i];
    }
    for (int i = 0; i < rank; ++i) rho_[i] /= 2;
    // Sanity: <rho, alpha_i^vee> = 1 for every simple root.
    for (int i = 0; i < rank; ++i) {
        if (coroot_pairing(rho_, i) != 1) throw InternalError("rho pairing != 1 on a simple root");
    }
}

Rational RootSystem::form(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_) {
        throw DimensionMismatchError("vector length does not match rank");
    }
    Rational acc(0);
    for (int i = 0; i < rank_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) {
            if (v[j] == 0) continue;
            acc += u[i] * form_[i][j] * v[j];
        }
    }
    return acc;
}

Rational RootSystem::form(const Root& u, const Root& v) const {
    std::vector<Rational> uq(u.begin(), u.end()), vq(v.begin(), v.end());
    return form(uq, vq);
}

bool RootSystem::is_positive_root(const Root& beta) const {
    return positive_index_.find(beta) != positive_index_.end();
}

Rational RootSystem::coroot_pairing(const std::vector<Rational>& v, int i) const {
    Rational acc(0);
    for (int j = 0; j < rank_; ++j) acc += v[j] * cartan_[i][j];
    return acc;
}

int RootSystem::coroot_pairing(const Root& v, int i) const {
    int acc = 0;
    for (int j = 0; j < rank_; ++j) acc += v[j] * cartan_[i][j];
    return acc;
}

Root RootSystem::reflect(int i, const Root& v) const {
    if (i < 0 || i >= rank_) throw IndexError("simple root index out of range");
    Root out = v;
    out[i] -= coroot_pairing(v, i);
    return out;
}

std::vector<Rational> RootSystem::reflect(int i, const std::vector<Rational>& v) const {
    if (i < 0 || i >= rank_) throw IndexError("simple root index out of range");
    std::vector<Rational> out = v;
    out[i] -= coroot_pairing(v, i);
    return out;
}

int RootSystem::weight_exponent(const Root& beta) const {
    if (!is_positive_root(beta)) throw NotARootError("weight exponent asked for a non-root");
    std::vector<Rational> bq(beta.begin(), beta.end());
    Rational num = 2 * form(rho_, bq);
    Rational den = form(bq, bq);
    Rational e = num / den;
    if (denominator(e) != 1 || e <= 0) throw InternalError("weight exponent not a positive integer");
    return numerator(e).convert_to<int>();
}

} // namespace haarpoly
