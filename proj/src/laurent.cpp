#include "haarpoly/laurent.hpp"

#include "haarpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace haarpoly {

LaurentPoly::LaurentPoly(int n_x, int n_circle) : nx_(n_x), nc_(n_circle) {
    if (n_x < 0 || n_circle < 0) throw DimensionMismatchError("negative variable count");
}

LaurentPoly LaurentPoly::constant(int n_x, int n_circle, const GaussianRational& c) {
    LaurentPoly p(n_x, n_circle);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(n_x + n_circle, 0), c);
    return p;
}

LaurentPoly LaurentPoly::x_var(int n_x, int n_circle, int i, int power) {
    if (i < 0 || i >= n_x) throw IndexError("x variable index out of range");
    if (power < 0) throw DomainError("cell variables do not admit negative powers");
    LaurentPoly p(n_x, n_circle);
    ExpVec e(n_x + n_circle, 0);
    e[i] = power;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
}

LaurentPoly LaurentPoly::circle_var(int n_x, int n_circle, int i, int power) {
    if (i < 0 || i >= n_circle) throw IndexError("circle variable index out of range");
    LaurentPoly p(n_x, n_circle);
    ExpVec e(n_x + n_circle, 0);
    e[n_x + i] = power;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(int n_x, int n_circle, const ExpVec& exps, const GaussianRational& c) {
    if (static_cast<int>(exps.size()) != n_x + n_circle) {
        throw DimensionMismatchError("exponent vector has wrong length");
    }
    for (int j = 0; j < n_x; ++j) {
        if (exps[j] < 0) throw DomainError("cell exponent must be >= 0");
    }
    LaurentPoly p(n_x, n_circle);
    if (!c.is_zero()) p.terms_.emplace(exps, c);
    return p;
}

GaussianRational LaurentPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void LaurentPoly::check_same_shape(const LaurentPoly& o) const {
    if (nx_ != o.nx_ || nc_ != o.nc_) {
        throw DimensionMismatchError("polynomials live in different variable sets");
    }
}

void LaurentPoly::add_term(const ExpVec& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_shape(b);
    LaurentPoly out(a.nx_, a.nc_);
    const int len = a.nx_ + a.nc_;
    ExpVec e(len);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < len; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly operator*(const GaussianRational& c, LaurentPoly p) {
    if (c.is_zero()) return LaurentPoly(p.nx_, p.nc_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

LaurentPoly operator-(LaurentPoly p) {
    for (auto& [e, v] : p.terms_) v = -v;
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
    LaurentPoly acc = LaurentPoly::constant(nx_, nc_, GaussianRational(1));
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1UL) acc = acc * base;
        n >>= 1UL;
        if (n > 0) base = base * base;
    }
    return acc;
}

LaurentPoly LaurentPoly::conjugate() const {
    LaurentPoly out(nx_, nc_);
    for (const auto& [e, c] : terms_) {
        ExpVec flipped = e;
        for (int k = nx_; k < nx_ + nc_; ++k) flipped[k] = -flipped[k];
        out.terms_.emplace(std::move(flipped), c.conj());
    }
    return out;
}

std::vector<std::vector<int>> LaurentPoly::spectrum() const {
    std::vector<std::vector<int>> out;
    for (const auto& [e, c] : terms_) {
        out.emplace_back(e.begin() + nx_, e.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::complex<double> LaurentPoly::eval(const std::vector<double>& x,
                                       const std::vector<std::complex<double>>& circ) const {
    if (static_cast<int>(x.size()) != nx_ || static_cast<int>(circ.size()) != nc_) {
        throw DimensionMismatchError("evaluation point has wrong shape");
    }
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int j = 0; j < nx_; ++j) {
            for (int k = 0; k < e[j]; ++k) t *= x[j];
        }
        for (int j = 0; j < nc_; ++j) {
            int p = e[nx_ + j];
            if (p == 0) continue;
            std::complex<double> z = circ[j];
            if (p < 0) {
                z = 1.0 / z;
                p = -p;
            }
            for (int k = 0; k < p; ++k) t *= z;
        }
        acc += t;
    }
    return acc;
}

int LaurentPoly::max_x_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int j = 0; j < nx_; ++j) d += e[j];
        best = std::max(best, d);
    }
    return best;
}

int LaurentPoly::max_circle_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_) {
        for (int j = nx_; j < nx_ + nc_; ++j) best = std::max(best, std::abs(e[j]));
    }
    return best;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string vars;
        auto append_var = [&](const std::string& name, int p) {
            if (p == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (p != 1) vars += "^" + std::to_string(p);
        };
        for (int j = 0; j < nx_; ++j) append_var("x" + std::to_string(j + 1), e[j]);
        for (int j = 0; j < nc_; ++j) append_var("z" + std::to_string(j + 1), e[nx_ + j]);

        std::string cs = c.str();
        bool composite = cs.find_first_of("+-", 1) != std::string::npos;
        if (vars.empty()) {
            out += composite ? "(" + cs + ")" : cs;
        } else if (c == GaussianRational(1)) {
            out += vars;
        } else if (c == GaussianRational(-1)) {
            out += "-" + vars;
        } else {
            out += (composite ? "(" + cs + ")" : cs) + "*" + vars;
        }
    }
    return out;
}

GaussianRational weighted_integral(const LaurentPoly& p, const MeasureSpec& spec) {
    if (p.n_x() != spec.n_x || p.n_circle() != spec.n_circle) {
        throw DimensionMismatchError("polynomial shape does not match the measure");
    }
    GaussianRational acc;
    for (const auto& [e, c] : p.terms()) {
        bool survives = true;
        for (int j = spec.n_x; j < spec.n_x + spec.n_circle; ++j) {
            if (e[j] != 0) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;
        Rational weight(1);
        for (int j = 0; j < spec.n_x; ++j) {
            weight /= Rational(e[j] + 2 * spec.exponents[j]);
        }
        acc += GaussianRational(weight) * c;
    }
    return GaussianRational(spec.constant) * acc;
}

} // namespace haarpoly
