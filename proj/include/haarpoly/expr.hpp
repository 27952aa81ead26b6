#pragma once

#include "haarpoly/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace haarpoly {

/** A symbolic polynomial expression in matrix entries of the group factors.
 *
 *  Atoms: exact constants (including i), entry symbols a<f>[i,j] (the (i,j)
 *  entry of factor f) and c<f>[i,j] (its complex conjugate as an independent
 *  symbol), and torus coordinates u[k] / u[k]^-1. Indices are 1-based.
 *  Combined with +, -, *, and nonnegative powers.
 *
 *  Values are immutable and share subtrees; copying is cheap. */
class Expr {
public:
    enum class Kind { Const, EntryA, EntryC, TorusU, Add, Sub, Mul, Pow };

    Expr() : Expr(constant(GaussianRational())) {}

    static Expr constant(const GaussianRational& c);
    static Expr imaginary_unit() { return constant(GaussianRational::i()); }
    static Expr a(int factor, int i, int j);
    static Expr c(int factor, int i, int j);
    /** sign must be +1 or -1. */
    static Expr u(int k, int sign = 1);

    friend Expr operator+(const Expr& x, const Expr& y) { return combine(Kind::Add, x, y); }
    friend Expr operator-(const Expr& x, const Expr& y) { return combine(Kind::Sub, x, y); }
    friend Expr operator*(const Expr& x, const Expr& y) { return combine(Kind::Mul, x, y); }
    friend Expr operator-(const Expr& x) { return constant(GaussianRational(-1)) * x; }
    Expr pow(unsigned n) const;

    Kind kind() const;
    const GaussianRational& const_value() const; // Kind::Const
    int factor() const;                          // EntryA / EntryC, 1-based
    int row() const;                             // EntryA / EntryC, 1-based
    int col() const;                             // EntryA / EntryC, 1-based
    int torus_index() const;                     // TorusU, 1-based
    int torus_sign() const;                      // TorusU, +1 or -1
    Expr lhs() const;                            // Add / Sub / Mul, and Pow base
    Expr rhs() const;                            // Add / Sub / Mul
    unsigned pow_exponent() const;               // Pow

    /** Entry-wise complex conjugate at the symbol level: swaps a and c,
     *  conjugates constants, inverts torus coordinates. */
    Expr conj_swapped() const;

    /** An upper bound for the total degree in the matrix entries and torus
     *  coordinates (constants are degree 0). */
    int degree_bound() const;

    std::string str() const;

    /** Parse the expression grammar:
     *    expr   := ['-'] term (('+' | '-') term)*
     *    term   := factor ('*' factor)*
     *    factor := atom ['^' nat]
     *    atom   := rational | 'i' | entry | torus | '(' expr ')'
     *    entry  := ('a' | 'c') [nat] '[' nat ',' nat ']'   (factor defaults to 1)
     *    torus  := 'u' '[' nat ']' ['^' '-' nat]
     *    rational := nat ['/' nat]
     *  Throws ParseError with a position on malformed input. */
    static Expr parse(const std::string& text);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr combine(Kind k, const Expr& x, const Expr& y);
};

} // namespace haarpoly
