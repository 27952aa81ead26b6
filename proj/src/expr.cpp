#include "haarpoly/expr.hpp"

#include "haarpoly/errors.hpp"

#include <algorithm>
#include <cctype>

namespace haarpoly {

struct Expr::Node {
    Kind kind;
    GaussianRational value;  // Const
    int factor = 0, i = 0, j = 0; // EntryA/EntryC; TorusU uses i=index, j=sign
    std::shared_ptr<const Node> left, right;
    unsigned exponent = 0;   // Pow
};

Expr Expr::constant(const GaussianRational& c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = c;
    return Expr(std::move(n));
}

Expr Expr::a(int factor, int i, int j) {
    if (factor < 1 || i < 1 || j < 1) throw IndexError("entry indices are 1-based");
    auto n = std::make_shared<Node>();
    n->kind = Kind::EntryA;
    n->factor = factor;
    n->i = i;
    n->j = j;
    return Expr(std::move(n));
}

Expr Expr::c(int factor, int i, int j) {
    Expr e = a(factor, i, j);
    auto n = std::make_shared<Node>(*e.node_);
    n->kind = Kind::EntryC;
    return Expr(std::move(n));
}

Expr Expr::u(int k, int sign) {
    if (k < 1) throw IndexError("torus index is 1-based");
    if (sign != 1 && sign != -1) throw DomainError("torus sign must be +1 or -1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::TorusU;
    n->i = k;
    n->j = sign;
    return Expr(std::move(n));
}

Expr Expr::combine(Kind k, const Expr& x, const Expr& y) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = x.node_;
    n->right = y.node_;
    return Expr(std::move(n));
}

Expr Expr::pow(unsigned e) const {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->left = node_;
    n->exponent = e;
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const GaussianRational& Expr::const_value() const { return node_->value; }
int Expr::factor() const { return node_->factor; }
int Expr::row() const { return node_->i; }
int Expr::col() const { return node_->j; }
int Expr::torus_index() const { return node_->i; }
int Expr::torus_sign() const { return node_->j; }
Expr Expr::lhs() const { return Expr(node_->left); }
Expr Expr::rhs() const { return Expr(node_->right); }
unsigned Expr::pow_exponent() const { return node_->exponent; }

Expr Expr::conj_swapped() const {
    switch (node_->kind) {
    case Kind::Const: return constant(node_->value.conj());
    case Kind::EntryA: return c(node_->factor, node_->i, node_->j);
    case Kind::EntryC: return a(node_->factor, node_->i, node_->j);
    case Kind::TorusU: return u(node_->i, -node_->j);
    case Kind::Add: return combine(Kind::Add, Expr(node_->left).conj_swapped(), Expr(node_->right).conj_swapped());
    case Kind::Sub: return combine(Kind::Sub, Expr(node_->left).conj_swapped(), Expr(node_->right).conj_swapped());
    case Kind::Mul: return combine(Kind::Mul, Expr(node_->left).conj_swapped(), Expr(node_->right).conj_swapped());
    case Kind::Pow: return Expr(node_->left).conj_swapped().pow(node_->exponent);
    }
    throw InternalError("unhandled expression kind");
}

int Expr::degree_bound() const {
    switch (node_->kind) {
    case Kind::Const: return 0;
    case Kind::EntryA:
    case Kind::EntryC:
    case Kind::TorusU: return 1;
    case Kind::Add:
    case Kind::Sub:
        return std::max(Expr(node_->left).degree_bound(), Expr(node_->right).degree_bound());
    case Kind::Mul: return Expr(node_->left).degree_bound() + Expr(node_->right).degree_bound();
    case Kind::Pow: return static_cast<int>(node_->exponent) * Expr(node_->left).degree_bound();
    }
    throw InternalError("unhandled expression kind");
}

std::string Expr::str() const {
    switch (node_->kind) {
    case Kind::Const: {
        std::string s = node_->value.str();
        bool composite = s.find_first_of("+-", 1) != std::string::npos;
        return composite ? "(" + s + ")" : s;
    }
    case Kind::EntryA:
    case Kind::EntryC:
        return std::string(node_->kind == Kind::EntryA ? "a" : "c") + std::to_string(node_->factor) + "[" +
               std::to_string(node_->i) + "," + std::to_string(node_->j) + "]";
    case Kind::TorusU:
        return "u[" + std::to_string(node_->i) + "]" + (node_->j < 0 ? "^-1" : "");
    case Kind::Add: return "(" + Expr(node_->left).str() + " + " + Expr(node_->right).str() + ")";
    case Kind::Sub: return "(" + Expr(node_->left).str() + " - " + Expr(node_->right).str() + ")";
    case Kind::Mul: return Expr(node_->left).str() + "*" + Expr(node_->right).str();
    case Kind::Pow: return "(" + Expr(node_->left).str() + ")^" + std::to_string(node_->exponent);
    }
    throw InternalError("unhandled expression kind");
}

namespace {

struct ExprParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit ExprParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool digit_next() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    unsigned long nat() {
        skip_ws();
        if (!digit_next()) fail("expected a number");
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (v > 1000000000UL) fail("number too large");
            ++pos;
        }
        return v;
    }

    Expr entry(char symbol) {
        int factor = 1;
        if (digit_next()) factor = static_cast<int>(nat());
        expect('[');
        int i = static_cast<int>(nat());
        expect(',');
        int j = static_cast<int>(nat());
        expect(']');
        if (factor < 1 || i < 1 || j < 1) fail("indices are 1-based");
        return symbol == 'a' ? Expr::a(factor, i, j) : Expr::c(factor, i, j);
    }

    Expr torus() {
        expect('[');
        int k = static_cast<int>(nat());
        expect(']');
        if (k < 1) fail("indices are 1-based");
        Expr base = Expr::u(k);
        // The one place a negative power is grammatical: u[k]^-n.
        std::size_t save = pos;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '-') {
                ++pos;
                unsigned long n = nat();
                Expr inv = Expr::u(k, -1);
                return n == 1 ? inv : inv.pow(static_cast<unsigned>(n));
            }
            pos = save; // a plain '^ nat' belongs to the factor rule
        } else {
            pos = save;
        }
        return base;
    }

    Expr atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected an expression");
        char ch = text[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            unsigned long num = nat();
            Rational q{Integer(num)};
            if (eat('/')) {
                unsigned long den = nat();
                if (den == 0) fail("zero denominator");
                q /= Integer(den);
            }
            return Expr::constant(GaussianRational(q));
        }
        if (ch == 'i') {
            ++pos;
            return Expr::imaginary_unit();
        }
        if (ch == 'a' || ch == 'c') {
            ++pos;
            return entry(ch);
        }
        if (ch == 'u') {
            ++pos;
            return torus();
        }
        if (ch == '(') {
            ++pos;
            Expr inner = expr();
            expect(')');
            return inner;
        }
        fail("expected a rational, 'i', an entry symbol, 'u[k]', or '('");
    }

    Expr factor() {
        Expr base = atom();
        if (peek('^')) {
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '-') {
                fail("negative exponents are only valid on torus coordinates u[k]");
            }
            unsigned long n = nat();
            return base.pow(static_cast<unsigned>(n));
        }
        return base;
    }

    Expr term() {
        Expr acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Expr expr() {
        skip_ws();
        bool negate = false;
        if (peek('-')) {
            ++pos;
            negate = true;
        }
        Expr acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Expr run() {
        Expr e = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing characters after expression");
        return e;
    }
};

} // namespace

Expr Expr::parse(const std::string& text) { return ExprParser(text).run(); }

} // namespace haarpoly
