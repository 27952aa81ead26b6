#include "haarpoly/json_io.hpp"

#include "haarpoly/errors.hpp"

#include <limits>

namespace haarpoly {

namespace {

Json integer_to_json(const Integer& v) {
    static const Integer kMax = Integer(std::numeric_limits<std::int64_t>::max());
    static const Integer kMin = Integer(std::numeric_limits<std::int64_t>::min());
    if (v >= kMin && v <= kMax) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw ParseError("expected an integer or a decimal string", 0);
}

} // namespace

Json to_json(const Rational& q) {
    Json j;
    j["num"] = integer_to_json(numerator(q));
    j["den"] = integer_to_json(denominator(q));
    return j;
}

Json to_json(const GaussianRational& c) {
    Json j;
    j["re"] = to_json(c.re);
    j["im"] = to_json(c.im);
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw ParseError("expected {num, den}", 0);
    }
    Integer den = integer_from_json(j["den"]);
    if (den == 0) throw ParseError("zero denominator", 0);
    return Rational(integer_from_json(j["num"]), den);
}

GaussianRational gaussian_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
        throw ParseError("expected {re, im}", 0);
    }
    return {rational_from_json(j["re"]), rational_from_json(j["im"])};
}

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["x"] = Json::array();
        for (int k = 0; k < p.n_x(); ++k) t["x"].push_back(e[k]);
        t["circle"] = Json::array();
        for (int k = 0; k < p.n_circle(); ++k) t["circle"].push_back(e[p.n_x() + k]);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["n_x"] = p.n_x();
    j["n_circle"] = p.n_circle();
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n_x") || !j.contains("n_circle") || !j.contains("terms")) {
        throw ParseError("expected {n_x, n_circle, terms}", 0);
    }
    const int nx = j["n_x"].get<int>();
    const int nc = j["n_circle"].get<int>();
    LaurentPoly p(nx, nc);
    for (const Json& t : j["terms"]) {
        ExpVec e;
        e.reserve(nx + nc);
        for (const Json& v : t.at("x")) e.push_back(v.get<int>());
        for (const Json& v : t.at("circle")) e.push_back(v.get<int>());
        p += LaurentPoly::monomial(nx, nc, e, gaussian_from_json(t.at("coeff")));
    }
    return p;
}

namespace {

Json word_to_json(const ReducedWord& w) {
    Json a = Json::array();
    for (int letter : w.letters) a.push_back(letter);
    return a;
}

Json roots_to_json(const std::vector<Root>& roots) {
    Json a = Json::array();
    for (const Root& r : roots) {
        Json row = Json::array();
        for (int c : r) row.push_back(c);
        a.push_back(std::move(row));
    }
    return a;
}

} // namespace

Json to_json(const MeasureSpec& spec) {
    Json j;
    j["group"] = spec.group.str();
    j["N"] = spec.n_x;
    j["M"] = spec.n_circle;
    j["exponents"] = spec.exponents;
    j["constant"] = to_json(Rational(spec.constant));
    if (spec.factors.size() == 1) {
        j["word"] = word_to_json(spec.factors[0].word);
        j["betas"] = roots_to_json(spec.factors[0].roots.betas);
    }
    Json factors = Json::array();
    for (const FactorMeasure& fm : spec.factors) {
        Json f;
        f["type"] = std::string(1, simple_type_char(fm.factor.type));
        f["rank"] = fm.factor.rank;
        f["word"] = word_to_json(fm.word);
        f["betas"] = roots_to_json(fm.roots.betas);
        f["exponents"] = fm.roots.exponents;
        f["x_offset"] = fm.x_offset;
        f["w_offset"] = fm.w_offset;
        f["z_offset"] = fm.z_offset;
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);
    j["torus_dim"] = spec.group.torus_dim;
    j["torus_offset"] = spec.torus_offset;

    Json layout = Json::array();
    auto add_var = [&](const VariableInfo& v, int position, bool is_circle) {
        Json row;
        row["role"] = std::string(1, static_cast<char>(v.role));
        row["block"] = is_circle ? "circle" : "x";
        row["position"] = position;
        row["factor"] = v.factor + 1; // 1-based; 0 means the torus block
        row["index"] = v.index + 1;
        layout.push_back(std::move(row));
    };
    for (std::size_t k = 0; k < spec.layout_x.size(); ++k) add_var(spec.layout_x[k], static_cast<int>(k), false);
    for (std::size_t k = 0; k < spec.layout_circle.size(); ++k) {
        add_var(spec.layout_circle[k], static_cast<int>(k), true);
    }
    j["layout"] = std::move(layout);
    return j;
}

Json to_json(const HullCertificate& cert) {
    Json j;
    j["verdict"] = cert.origin_inside ? "origin_inside" : "origin_outside";
    Json pts = Json::array();
    for (const auto& p : cert.points) {
        Json row = Json::array();
        for (int c : p) row.push_back(c);
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    if (cert.origin_inside) {
        Json w = Json::array();
        for (const Rational& q : cert.weights) w.push_back(to_json(q));
        j["weights"] = std::move(w);
    } else {
        Json v = Json::array();
        for (const Rational& q : cert.separator) v.push_back(to_json(q));
        j["separator"] = std::move(v);
    }
    return j;
}

HullCertificate hull_from_json(const Json& j) {
    HullCertificate cert;
    cert.origin_inside = j.at("verdict").get<std::string>() == "origin_inside";
    for (const Json& p : j.at("points")) {
        std::vector<int> row;
        for (const Json& c : p) row.push_back(c.get<int>());
        cert.points.push_back(std::move(row));
    }
    if (cert.origin_inside) {
        for (const Json& w : j.at("weights")) cert.weights.push_back(rational_from_json(w));
    } else {
        for (const Json& v : j.at("separator")) cert.separator.push_back(rational_from_json(v));
    }
    return cert;
}

Json to_json(const MathieuReport& rep) {
    Json j;
    j["n_max"] = rep.n_max;
    Json powers = Json::array();
    for (const GaussianRational& v : rep.power_integrals) powers.push_back(to_json(v));
    j["power_integrals"] = std::move(powers);
    j["hypothesis_holds_up_to_n_max"] = rep.hypothesis_holds_up_to_n_max;
    j["spectrum_empty"] = rep.spectrum_empty;
    if (!rep.spectrum_empty) j["hull"] = to_json(rep.hull);
    j["conclusion_applies"] = rep.conclusion_applies;
    if (rep.conclusion_applies) {
        j["n0"] = rep.n0;
        Json window = Json::array();
        for (const GaussianRational& v : rep.conclusion_integrals) window.push_back(to_json(v));
        j["conclusion_integrals"] = std::move(window);
        j["conclusion_verified_range"] = {{"from", rep.n0}, {"to", rep.n0 + 5}};
        j["conclusion_verified"] = rep.conclusion_verified;
    }
    // Floating-point diagnostics, clearly fenced off from the exact data.
    Json heur;
    heur["description"] = "floating-point |integral(f^n)|^(1/n) over the n with nonzero integral";
    heur["values"] = rep.moment_growth;
    j["heuristics"] = std::move(heur);
    return j;
}

Json to_json(const MonteCarloResult& mc) {
    Json j;
    j["estimate"] = {{"re", mc.estimate.real()}, {"im", mc.estimate.imag()}};
    j["std_error"] = mc.std_error;
    j["samples"] = mc.samples;
    j["seed"] = mc.seed;
    return j;
}

} // namespace haarpoly
