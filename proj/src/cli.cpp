#include "haarpoly/cli.hpp"

#include "haarpoly/errors.hpp"
#include "haarpoly/json_io.hpp"
#include "haarpoly/mathieu.hpp"
#include "haarpoly/numeric.hpp"
#include "haarpoly/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>

namespace haarpoly {

namespace {

/** --words: JSON array of 1-based letters for a single-factor group, or an
 *  array of such arrays, one per simple factor in order. */
std::vector<ReducedWord> words_from_text(const std::string& text, std::size_t n_factors) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("--words is not valid JSON: ") + ex.what(), 0);
    }
    if (!j.is_array()) throw ParseError("--words must be a JSON array", 0);

    std::vector<std::vector<int>> lists;
    if (!j.empty() && j.front().is_number_integer()) {
        lists.push_back(j.get<std::vector<int>>());
    } else {
        for (const Json& item : j) {
            if (!item.is_array()) throw ParseError("--words entries must be integer arrays", 0);
            lists.push_back(item.get<std::vector<int>>());
        }
    }
    if (lists.size() != n_factors) {
        throw ParseError("--words has " + std::to_string(lists.size()) + " word(s) for " +
                             std::to_string(n_factors) + " simple factor(s)",
                         0);
    }
    std::vector<ReducedWord> words;
    for (auto& l : lists) words.push_back(ReducedWord{std::move(l)});
    return words;
}

/** --spectrum: "[(1,0),(-1,0)]" tuples or plain JSON "[[1,0],[-1,0]]". */
std::vector<std::vector<int>> spectrum_from_text(const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), '(', '[');
    std::replace(normalized.begin(), normalized.end(), ')', ']');
    Json j;
    try {
        j = Json::parse(normalized);
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("--spectrum is not a point list: ") + ex.what(), 0);
    }
    if (!j.is_array() || j.empty()) throw ParseError("--spectrum must be a nonempty list of points", 0);
    std::vector<std::vector<int>> pts;
    for (const Json& item : j) {
        if (!item.is_array() || item.empty()) {
            throw ParseError("--spectrum points must be nonempty integer tuples", 0);
        }
        pts.push_back(item.get<std::vector<int>>());
        if (pts.back().size() != pts.front().size()) {
            throw ParseError("--spectrum points must share one dimension", 0);
        }
    }
    return pts;
}

struct CommonOpts {
    std::string group;
    std::string words;
    std::string output;
};

GroupModel build_model(const CommonOpts& c) {
    GroupSpec group = GroupSpec::parse(c.group);
    std::optional<std::vector<ReducedWord>> words;
    if (!c.words.empty()) words = words_from_text(c.words, group.factors.size());
    return GroupModel(measure_spec(group, words));
}

void emit(const Json& j, const CommonOpts& c, std::ostream& out) {
    if (c.output.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream file(c.output);
    if (!file) throw DomainError("cannot open output file '" + c.output + "'");
    file << j.dump(2) << "\n";
}

/** Adds --group/--words/--output to a subcommand. */
void add_common(CLI::App* cmd, CommonOpts& c, bool group_required = true) {
    auto* g = cmd->add_option("--group", c.group,
                              "Group spec, e.g. \"SU(3)\", \"SU(2)xSU(2)xT^1\", \"B3\"");
    if (group_required) g->required();
    cmd->add_option("--words", c.words,
                    "Longest reduced words as JSON, one integer list per simple factor");
    cmd->add_option("--output", c.output, "Write the JSON document to this file instead of stdout");
}

Json json_with_schema(const std::string& schema, Json body) {
    Json j;
    j["schema"] = schema;
    for (auto& [key, value] : body.items()) j[key] = std::move(value);
    return j;
}

} // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric normalized integrals of matrix-entry polynomials on compact "
                 "groups, with convex-hull vanishing certificates",
                 "haarpoly"};
    app.require_subcommand(1);
    int exit_code = 0;

    // measure -----------------------------------------------------------
    CommonOpts measure_opts;
    auto* cmd_measure = app.add_subcommand("measure", "Describe the product-cell measure for a group");
    add_common(cmd_measure, measure_opts);
    cmd_measure->callback([&] {
        GroupModel model = build_model(measure_opts);
        emit(json_with_schema("measure/1", to_json(model.measure())), measure_opts, out);
    });

    // reduce --------------------------------------------------------------
    CommonOpts reduce_opts;
    std::string reduce_expr;
    auto* cmd_reduce =
        app.add_subcommand("reduce", "Reduce an expression to its cell polynomial form");
    add_common(cmd_reduce, reduce_opts);
    cmd_reduce->add_option("--expr", reduce_expr, "Expression, e.g. \"a1[1,1]*c1[2,2] - 1/2\"")
        ->required();
    cmd_reduce->callback([&] {
        GroupModel model = build_model(reduce_opts);
        LaurentPoly p = model.reduce(Expr::parse(reduce_expr));
        Json body;
        body["group"] = model.measure().group.str();
        body["expr"] = reduce_expr;
        body["polynomial"] = to_json(p);
        body["text"] = p.str();
        emit(json_with_schema("reduce/1", std::move(body)), reduce_opts, out);
    });

    // integrate -----------------------------------------------------------
    CommonOpts integrate_opts;
    std::string integrate_expr;
    auto* cmd_integrate =
        app.add_subcommand("integrate", "Exact normalized integral of an expression");
    add_common(cmd_integrate, integrate_opts);
    cmd_integrate->add_option("--expr", integrate_expr, "Expression to integrate")->required();
    cmd_integrate->callback([&] {
        GroupModel model = build_model(integrate_opts);
        GaussianRational v = model.integrate(Expr::parse(integrate_expr));
        Json body;
        body["group"] = model.measure().group.str();
        body["expr"] = integrate_expr;
        body["re"] = to_json(v.re);
        body["im"] = to_json(v.im);
        body["value"] = v.str();
        emit(json_with_schema("integrate/1", std::move(body)), integrate_opts, out);
    });

    // spectrum --------------------------------------------------------------
    CommonOpts spectrum_opts;
    std::string spectrum_expr;
    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "Circle-exponent spectrum of a reduced expression");
    add_common(cmd_spectrum, spectrum_opts);
    cmd_spectrum->add_option("--expr", spectrum_expr, "Expression whose spectrum to list")->required();
    cmd_spectrum->callback([&] {
        GroupModel model = build_model(spectrum_opts);
        LaurentPoly p = model.reduce(Expr::parse(spectrum_expr));
        Json body;
        body["group"] = model.measure().group.str();
        body["expr"] = spectrum_expr;
        body["spectrum"] = p.spectrum();
        body["spectrum_empty"] = p.spectrum().empty();
        emit(json_with_schema("spectrum/1", std::move(body)), spectrum_opts, out);
    });

    // hull ------------------------------------------------------------------
    CommonOpts hull_opts;
    std::string hull_spectrum;
    auto* cmd_hull =
        app.add_subcommand("hull", "Decide if the origin lies in the convex hull of integer points");
    cmd_hull->add_option("--spectrum", hull_spectrum,
                         "Point list, e.g. \"[(1,0),(-1,0)]\" or \"[[1,0],[-1,0]]\"")
        ->required();
    cmd_hull->add_option("--output", hull_opts.output,
                         "Write the JSON document to this file instead of stdout");
    cmd_hull->callback([&] {
        HullCertificate cert = origin_in_hull(spectrum_from_text(hull_spectrum));
        emit(json_with_schema("hull/1", to_json(cert)), hull_opts, out);
    });

    // mathieu -----------------------------------------------------------------
    CommonOpts mathieu_opts;
    std::string mathieu_f, mathieu_g;
    int mathieu_n_max = 20;
    auto* cmd_mathieu = app.add_subcommand(
        "mathieu", "Power-integral vanishing report: hypothesis scan, hull certificate, conclusion");
    add_common(cmd_mathieu, mathieu_opts);
    cmd_mathieu->add_option("--f", mathieu_f, "Expression whose powers are scanned")->required();
    cmd_mathieu->add_option("--g", mathieu_g, "Companion expression for the conclusion")->required();
    cmd_mathieu->add_option("--n-max", mathieu_n_max, "Largest power to scan (default 20)")
        ->check(CLI::PositiveNumber);
    cmd_mathieu->callback([&] {
        GroupModel model = build_model(mathieu_opts);
        MathieuReport rep =
            mathieu_report(model, Expr::parse(mathieu_f), Expr::parse(mathieu_g), mathieu_n_max);
        Json body;
        body["group"] = model.measure().group.str();
        body["f"] = mathieu_f;
        body["g"] = mathieu_g;
        Json rep_json = to_json(rep); // named: items() must not outlive its json
        for (auto& [key, value] : rep_json.items()) body[key] = std::move(value);
        emit(json_with_schema("mathieu/1", std::move(body)), mathieu_opts, out);
    });

    // power-seq -----------------------------------------------------------------
    CommonOpts power_opts;
    std::string power_expr;
    int power_n_max = 20;
    auto* cmd_power =
        app.add_subcommand("power-seq", "Exact integrals of f^n for n = 1..n_max");
    add_common(cmd_power, power_opts);
    cmd_power->add_option("--expr", power_expr, "Expression f")->required();
    cmd_power->add_option("--n-max", power_n_max, "Largest power (default 20)")
        ->check(CLI::PositiveNumber);
    cmd_power->callback([&] {
        GroupModel model = build_model(power_opts);
        LaurentPoly p = model.reduce(Expr::parse(power_expr));
        std::vector<GaussianRational> seq = power_integral_sequence(p, model.measure(), power_n_max);
        Json body;
        body["group"] = model.measure().group.str();
        body["expr"] = power_expr;
        body["n_max"] = power_n_max;
        Json integrals = Json::array();
        bool all_zero = true;
        for (const GaussianRational& v : seq) {
            integrals.push_back(to_json(v));
            all_zero = all_zero && v.is_zero();
        }
        body["integrals"] = std::move(integrals);
        body["all_zero"] = all_zero;
        emit(json_with_schema("power-seq/1", std::move(body)), power_opts, out);
    });

    // mc -------------------------------------------------------------------------
    CommonOpts mc_opts;
    std::string mc_expr;
    std::uint64_t mc_samples = 100000;
    std::uint64_t mc_seed = 12345;
    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo estimate of the normalized integral");
    add_common(cmd_mc, mc_opts);
    cmd_mc->add_option("--expr", mc_expr, "Expression to integrate")->required();
    cmd_mc->add_option("--samples", mc_samples, "Sample count (default 100000)");
    cmd_mc->add_option("--seed", mc_seed, "Random seed (default 12345)");
    cmd_mc->callback([&] {
        GroupModel model = build_model(mc_opts);
        Expr e = Expr::parse(mc_expr);
        MonteCarloResult mc = haar_monte_carlo(
            model, [&](const GroupPoint& p) { return model.eval(e, p); }, mc_samples, mc_seed);
        Json body;
        body["group"] = model.measure().group.str();
        body["expr"] = mc_expr;
        Json mc_json = to_json(mc); // named: items() must not outlive its json
        for (auto& [key, value] : mc_json.items()) body[key] = std::move(value);
        emit(json_with_schema("mc/1", std::move(body)), mc_opts, out);
    });

    // quad ---------------------------------------------------------------------
    CommonOpts quad_opts;
    std::string quad_expr;
    int quad_degree = -1;
    auto* cmd_quad =
        app.add_subcommand("quad", "Product Gauss-Legendre x uniform-circle quadrature");
    add_common(cmd_quad, quad_opts);
    cmd_quad->add_option("--expr", quad_expr, "Expression to integrate")->required();
    cmd_quad->add_option("--degree", quad_degree,
                         "Polynomial degree budget (default: the expression's degree bound)");
    cmd_quad->callback([&] {
        GroupModel model = build_model(quad_opts);
        Expr e = Expr::parse(quad_expr);
        int bound = e.degree_bound();
        int degree = quad_degree >= 0 ? quad_degree : bound;
        QuadratureInfo info;
        std::complex<double> estimate = haar_quadrature(
            model, [&](const GroupPoint& p) { return model.eval(e, p); }, degree, &info);
        Json body;
        body["group"] = model.measure().group.str();
        body["expr"] = quad_expr;
        body["degree"] = degree;
        body["degree_bound"] = bound;
        body["nodes"] = info.nodes;
        body["estimate_re"] = estimate.real();
        body["estimate_im"] = estimate.imag();
        if (degree < bound) {
            body["budget_warning"] = "degree budget " + std::to_string(degree) +
                                     " is below the expression's degree bound " +
                                     std::to_string(bound) + "; the rule may not be exact";
        }
        emit(json_with_schema("quad/1", std::move(body)), quad_opts, out);
    });

    // verify ------------------------------------------------------------------
    CommonOpts verify_opts;
    std::string verify_suite = "all";
    auto* cmd_verify =
        app.add_subcommand("verify", "Run the built-in verification suites (pass/fail per item)");
    cmd_verify->add_option("--suite", verify_suite,
                           "Suite name, or \"all\" (default) for every suite in order");
    cmd_verify->add_option("--output", verify_opts.output,
                           "Write the JSON document to this file instead of stdout");
    cmd_verify->callback([&] {
        std::vector<std::string> selected;
        if (verify_suite == "all") {
            selected = suite_names();
        } else {
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), verify_suite) == names.end()) {
                std::string known;
                for (const std::string& n : names) known += (known.empty() ? "" : ", ") + n;
                throw IndexError("unknown suite '" + verify_suite + "' (known: " + known + ")");
            }
            selected = {verify_suite};
        }
        Json suites = Json::array();
        bool all_pass = true;
        for (const std::string& name : selected) {
            SuiteResult res = run_suite(name);
            all_pass = all_pass && res.pass;
            err << (res.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << res.criterion
                << "  " << std::left << std::setw(18) << res.name << std::right << std::fixed
                << std::setprecision(2) << std::setw(8) << res.seconds << "s  " << res.detail
                << "\n"
                << std::defaultfloat;
            err.flush();
            Json s;
            s["criterion"] = res.criterion;
            s["name"] = res.name;
            s["pass"] = res.pass;
            s["seconds"] = res.seconds;
            s["limit_seconds"] = res.limit_seconds;
            s["detail"] = res.detail;
            suites.push_back(std::move(s));
        }
        Json body;
        body["suites"] = std::move(suites);
        body["all_pass"] = all_pass;
        emit(json_with_schema("verify/1", std::move(body)), verify_opts, out);
        if (!all_pass) exit_code = 1;
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace haarpoly
