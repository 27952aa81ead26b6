#include "haarpoly/measure.hpp"

#include "haarpoly/errors.hpp"

#include <cctype>
#include <string>

namespace haarpoly {

namespace {

struct GroupParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit GroupParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    int nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected a number");
        }
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("number too large");
            ++pos;
        }
        return static_cast<int>(v);
    }

    void factor(GroupSpec& out) {
        skip_ws();
        if (pos >= text.size()) fail("expected a group factor");
        if (text.compare(pos, 3, "SU(") == 0) {
            pos += 3;
            int n = nat();
            skip_ws();
            expect(')');
            if (n < 2) fail("SU(n) needs n >= 2");
            out.factors.push_back({SimpleType::A, n - 1});
            return;
        }
        if (text[pos] == 'T') {
            ++pos;
            expect('^');
            out.torus_dim += nat();
            return;
        }
        char c = text[pos];
        if (c >= 'A' && c <= 'G') {
            ++pos;
            int rank = nat();
            out.factors.push_back({simple_type_from_char(c), rank});
            // Rank validity is checked when the root system is built, but
            // catch it here so "B1" fails at parse time with a clear message.
            try {
                RootSystem probe(out.factors.back().type, rank);
                (void)probe;
            } catch (const InvalidTypeError& ex) {
                fail(ex.what());
            }
            return;
        }
        fail("expected 'SU(n)', 'T^k', or a simple type like 'B3'");
    }

    GroupSpec run() {
        GroupSpec out;
        factor(out);
        skip_ws();
        while (eat('x')) {
            factor(out);
            skip_ws();
        }
        if (pos != text.size()) fail("trailing characters after group");
        out.validate();
        return out;
    }
};

} // namespace

GroupSpec GroupSpec::parse(const std::string& text) { return GroupParser(text).run(); }

std::string GroupSpec::str() const {
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty()) out += "x";
        out += piece;
    };
    for (const SimpleFactor& f : factors) {
        if (f.type == SimpleType::A) {
            append("SU(" + std::to_string(f.rank + 1) + ")");
        } else {
            append(std::string(1, simple_type_char(f.type)) + std::to_string(f.rank));
        }
    }
    if (torus_dim > 0) append("T^" + std::to_string(torus_dim));
    return out;
}

void GroupSpec::validate() const {
    if (factors.empty() && torus_dim <= 0) {
        throw InvalidTypeError("group needs at least one simple factor or a torus");
    }
    if (torus_dim < 0) throw InvalidTypeError("negative torus dimension");
    for (const SimpleFactor& f : factors) {
        RootSystem probe(f.type, f.rank); // throws InvalidTypeError on bad rank
        (void)probe;
    }
}

MeasureSpec measure_spec(const GroupSpec& group, const std::optional<std::vector<ReducedWord>>& words) {
    group.validate();
    if (words && words->size() != group.factors.size()) {
        throw DimensionMismatchError("need exactly one word per simple factor");
    }

    MeasureSpec spec;
    spec.group = group;

    int x_at = 0;
    int circle_at = 0;
    for (std::size_t f = 0; f < group.factors.size(); ++f) {
        const SimpleFactor& sf = group.factors[f];
        RootSystem rs(sf.type, sf.rank);

        FactorMeasure fm;
        fm.factor = sf;
        fm.word = words ? (*words)[f] : canonical_longest_word(rs);
        fm.roots = beta_sequence(rs, fm.word); // validates reducedness
        if (fm.word.length() != rs.num_positive_roots()) {
            throw NotReducedError("factor " + std::to_string(f + 1) +
                                  ": word must be a longest word (length " +
                                  std::to_string(rs.num_positive_roots()) + ")");
        }
        fm.length = static_cast<int>(fm.word.length());
        fm.rank = sf.rank;
        fm.x_offset = x_at;
        fm.w_offset = circle_at;
        fm.z_offset = circle_at + fm.length;

        for (int j = 0; j < fm.length; ++j) {
            spec.exponents.push_back(fm.roots.exponents[j]);
            spec.constant *= 2 * fm.roots.exponents[j];
            spec.layout_x.push_back({VarRole::X, static_cast<int>(f), j});
        }
        for (int j = 0; j < fm.length; ++j) spec.layout_circle.push_back({VarRole::W, static_cast<int>(f), j});
        for (int j = 0; j < fm.rank; ++j) spec.layout_circle.push_back({VarRole::Z, static_cast<int>(f), j});

        x_at += fm.length;
        circle_at += fm.length + fm.rank;
        spec.factors.push_back(std::move(fm));
    }
    spec.torus_offset = circle_at;
    for (int j = 0; j < group.torus_dim; ++j) spec.layout_circle.push_back({VarRole::U, -1, j});
    spec.n_x = x_at;
    spec.n_circle = circle_at + group.torus_dim;
    return spec;
}

} // namespace haarpoly
