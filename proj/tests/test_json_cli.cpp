#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarpoly/cli.hpp"
#include "haarpoly/errors.hpp"
#include "haarpoly/groupmodel.hpp"
#include "haarpoly/json_io.hpp"
#include "haarpoly/mathieu.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace haarpoly;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = dispatch(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("rationals serialize as numerator/denominator objects") {
    Json j = to_json(Rational(1, 2));
    CHECK(j["num"] == 1);
    CHECK(j["den"] == 2);
    CHECK(j["num"].is_number_integer());

    CHECK(rational_from_json(j) == Rational(1, 2));
    CHECK(rational_from_json(to_json(Rational(-7, 3))) == Rational(-7, 3));
}

TEST_CASE("integers beyond 64 bits travel as decimal strings") {
    Integer big("1000000000000000000000000000001"); // 10^30 + 1, coprime to 7
    Rational q(big, Integer(7));
    Json j = to_json(q);
    CHECK(j["num"].is_string());
    CHECK(j["num"] == "1000000000000000000000000000001");
    CHECK(j["den"] == 7);
    CHECK(rational_from_json(j) == q);
}

TEST_CASE("gaussian rationals round trip through JSON") {
    GaussianRational v(Rational(3, 4), Rational(-1, 6));
    Json j = to_json(v);
    CHECK(j["re"]["num"] == 3);
    CHECK(j["im"]["num"] == -1);
    GaussianRational back = gaussian_from_json(j);
    CHECK(back == v);

    CHECK_THROWS_AS(rational_from_json(Json::object()), ParseError);
    CHECK_THROWS_AS(gaussian_from_json(Json::array()), ParseError);
    Json zero_den = {{"num", 1}, {"den", 0}};
    CHECK_THROWS_AS(rational_from_json(zero_den), ParseError);
}

TEST_CASE("measure document lists the layout of a single-factor group") {
    MeasureSpec spec = measure_spec(GroupSpec::parse("SU(3)"));
    Json j = to_json(spec);
    CHECK(j["group"] == "SU(3)");
    CHECK(j["N"] == 3);
    CHECK(j["M"] == 5);
    CHECK(j["exponents"] == Json({1, 2, 1}));
    CHECK(j["constant"]["num"] == 16);
    CHECK(j["constant"]["den"] == 1);
    CHECK(j["word"] == Json({1, 2, 1}));
    CHECK(j["betas"].size() == 3);
    REQUIRE(j["factors"].size() == 1);
    CHECK(j["factors"][0]["type"] == "A");
    CHECK(j["factors"][0]["rank"] == 2);
    CHECK(j["factors"][0]["x_offset"] == 0);
    CHECK(j["torus_dim"] == 0);
    CHECK(j["layout"].size() == 8); // 3 x vars + 5 circle vars
}

TEST_CASE("hull certificates round trip through JSON") {
    SUBCASE("inside verdict carries weights") {
        HullCertificate cert = origin_in_hull({{1, 0}, {-1, 0}});
        Json j = to_json(cert);
        CHECK(j["verdict"] == "origin_inside");
        CHECK(j["points"].size() == 2);
        CHECK(j["weights"].size() == 2);
        CHECK(!j.contains("separator"));

        HullCertificate back = hull_from_json(j);
        CHECK(back.origin_inside);
        CHECK(back.points == cert.points);
        CHECK(verify_certificate(back));
    }
    SUBCASE("outside verdict carries a separator") {
        HullCertificate cert = origin_in_hull({{1, 1}, {-1, 1}});
        Json j = to_json(cert);
        CHECK(j["verdict"] == "origin_outside");
        CHECK(j["separator"].size() == 2);
        CHECK(!j.contains("weights"));

        HullCertificate back = hull_from_json(j);
        CHECK(!back.origin_inside);
        CHECK(verify_certificate(back));
    }
}

TEST_CASE("experiment reports serialize every stage") {
    GroupModel model(measure_spec(GroupSpec::parse("SU(2)")));
    MathieuReport rep =
        mathieu_report(model, Expr::parse("a1[1,1]"), Expr::parse("c1[1,1]"), 8);
    Json j = to_json(rep);
    CHECK(j["n_max"] == 8);
    CHECK(j["power_integrals"].size() == 8);
    CHECK(j["power_integrals"][0]["re"]["num"] == 0);
    CHECK(j["hypothesis_holds_up_to_n_max"] == true);
    CHECK(j["spectrum_empty"] == false);
    CHECK(j["hull"]["verdict"] == "origin_outside");
    CHECK(j["conclusion_applies"] == true);
    long n0 = j["n0"].get<long>();
    CHECK(n0 >= 2);
    CHECK(j["conclusion_integrals"].size() == 6);
    CHECK(j["conclusion_verified_range"]["from"] == n0);
    CHECK(j["conclusion_verified_range"]["to"] == n0 + 5);
    CHECK(j["conclusion_verified"] == true);
    CHECK(j["heuristics"]["values"].empty()); // every moment vanished
}

TEST_CASE("Monte Carlo results serialize estimate and error") {
    GroupModel model(measure_spec(GroupSpec::parse("SU(2)")));
    MonteCarloResult mc = haar_monte_carlo(
        model, [](const GroupPoint&) { return std::complex<double>(1.0, 0.0); }, 100, 5);
    Json j = to_json(mc);
    CHECK(j["estimate"]["re"] == 1.0);
    CHECK(j["estimate"]["im"] == 0.0);
    CHECK(j["std_error"] == 0.0);
    CHECK(j["samples"] == 100);
    CHECK(j["seed"] == 5);
}

TEST_CASE("integrate command emits the exact value with a schema tag") {
    CliRun r = run_cli({"integrate", "--group", "SU(2)", "--expr", "a1[1,1]*a1[2,2]"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "integrate/1");
    CHECK(j.begin().key() == "schema"); // schema leads the document
    CHECK(j["group"] == "SU(2)");
    CHECK(j["re"]["num"] == 1);
    CHECK(j["re"]["den"] == 2);
    CHECK(j["im"]["num"] == 0);
    CHECK(j["im"]["den"] == 1);
    CHECK(j["value"] == "1/2");
}

TEST_CASE("measure command describes the default chart") {
    CliRun r = run_cli({"measure", "--group", "SU(3)"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "measure/1");
    CHECK(j["N"] == 3);
    CHECK(j["M"] == 5);
    CHECK(j["exponents"] == Json({1, 2, 1}));
    CHECK(j["constant"]["num"] == 16);
    CHECK(j["word"] == Json({1, 2, 1}));
}

TEST_CASE("measure command honours a user-chosen word") {
    CliRun r = run_cli({"measure", "--group", "SU(3)", "--words", "[2,1,2]"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["word"] == Json({2, 1, 2}));
}

TEST_CASE("integrate agrees across reduced words") {
    CliRun r = run_cli(
        {"integrate", "--group", "SU(3)", "--words", "[2,1,2]", "--expr", "a1[1,1]*c1[1,1]"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["re"]["num"] == 1);
    CHECK(j["re"]["den"] == 3);
}

TEST_CASE("reduce command returns the cell polynomial") {
    CliRun r = run_cli({"reduce", "--group", "SU(2)", "--expr", "a1[1,1]*a1[2,2]"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "reduce/1");
    LaurentPoly p = poly_from_json(j["polynomial"]);
    CHECK(p.n_x() == 1);
    CHECK(p.n_circle() == 2);
    CHECK(j["text"] == p.str());
}

TEST_CASE("spectrum command lists circle exponent vectors") {
    CliRun r = run_cli({"spectrum", "--group", "SU(2)", "--expr", "a1[1,1]"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "spectrum/1");
    CHECK(j["spectrum"] == Json({{1, 1}}));
    CHECK(j["spectrum_empty"] == false);

    CliRun zero = run_cli({"spectrum", "--group", "SU(2)", "--expr",
                           "a1[1,1]*a1[2,2] - a1[1,2]*a1[2,1] - 1"});
    REQUIRE(zero.code == 0);
    CHECK(zero.json()["spectrum_empty"] == true);
}

TEST_CASE("hull command accepts tuple syntax and certifies the verdict") {
    CliRun inside = run_cli({"hull", "--spectrum", "[(1,0),(-1,0)]"});
    REQUIRE(inside.code == 0);
    Json j = inside.json();
    CHECK(j["schema"] == "hull/1");
    CHECK(j["verdict"] == "origin_inside");
    CHECK(verify_certificate(hull_from_json(j)));

    CliRun outside = run_cli({"hull", "--spectrum", "[[2,1],[1,2]]"});
    REQUIRE(outside.code == 0);
    CHECK(outside.json()["verdict"] == "origin_outside");
}

TEST_CASE("power-seq command reports a vanishing sequence") {
    CliRun r = run_cli(
        {"power-seq", "--group", "SU(2)", "--expr", "a1[1,1]", "--n-max", "6"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "power-seq/1");
    CHECK(j["integrals"].size() == 6);
    CHECK(j["all_zero"] == true);

    CliRun nz = run_cli(
        {"power-seq", "--group", "SU(2)", "--expr", "a1[1,1]*c1[1,1]", "--n-max", "3"});
    REQUIRE(nz.code == 0);
    Json k = nz.json();
    CHECK(k["all_zero"] == false);
    CHECK(k["integrals"][0]["re"]["den"] == 2); // 1/2, 1/3, 1/4
    CHECK(k["integrals"][2]["re"]["den"] == 4);
}

TEST_CASE("mathieu command runs the full experiment") {
    CliRun r = run_cli({"mathieu", "--group", "SU(2)", "--f", "a1[1,1]", "--g", "c1[1,1]",
                        "--n-max", "6"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "mathieu/1");
    CHECK(j["hypothesis_holds_up_to_n_max"] == true);
    CHECK(j["conclusion_applies"] == true);
    CHECK(j["conclusion_verified"] == true);
}

TEST_CASE("mc command returns a seeded estimate near the exact value") {
    CliRun r = run_cli({"mc", "--group", "SU(2)", "--expr", "a1[1,1]*c1[1,1]", "--samples",
                        "2000", "--seed", "42"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "mc/1");
    CHECK(j["samples"] == 2000);
    CHECK(j["seed"] == 42);
    double re = j["estimate"]["re"].get<double>();
    CHECK(re > 0.4);
    CHECK(re < 0.6);

    CliRun again = run_cli({"mc", "--group", "SU(2)", "--expr", "a1[1,1]*c1[1,1]", "--samples",
                            "2000", "--seed", "42"});
    CHECK(again.json()["estimate"]["re"].get<double>() == re); // reproducible
}

TEST_CASE("quad command defaults to the expression degree bound") {
    CliRun r = run_cli({"quad", "--group", "SU(2)", "--expr", "a1[1,1]*c1[1,1]"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "quad/1");
    CHECK(j["degree"] == 2);
    CHECK(j["degree_bound"] == 2);
    CHECK(!j.contains("budget_warning"));
    CHECK(j["estimate_re"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));

    CliRun warned = run_cli(
        {"quad", "--group", "SU(2)", "--expr", "a1[1,1]*c1[1,1]", "--degree", "0"});
    REQUIRE(warned.code == 0);
    CHECK(warned.json().contains("budget_warning"));
}

TEST_CASE("verify command runs a named suite and reports per-line status") {
    CliRun r = run_cli({"verify", "--suite", "normalization"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["schema"] == "verify/1");
    REQUIRE(j["suites"].size() == 1);
    CHECK(j["suites"][0]["criterion"] == 1);
    CHECK(j["suites"][0]["name"] == "normalization");
    CHECK(j["suites"][0]["pass"] == true);
    CHECK(j["all_pass"] == true);
    CHECK(r.err.find("PASS") != std::string::npos);
    CHECK(r.err.find("normalization") != std::string::npos);
}

TEST_CASE("verify command rejects unknown suite names") {
    CliRun r = run_cli({"verify", "--suite", "bogus"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown suite") != std::string::npos);
}

TEST_CASE("usage problems exit with code 2") {
    SUBCASE("missing required option") {
        CliRun r = run_cli({"integrate", "--group", "SU(2)"});
        CHECK(r.code == 2);
    }
    SUBCASE("unknown subcommand") {
        CliRun r = run_cli({"frobnicate"});
        CHECK(r.code == 2);
    }
    SUBCASE("no subcommand at all") {
        CliRun r = run_cli({});
        CHECK(r.code == 2);
    }
    SUBCASE("bad group spec is diagnosed on stderr") {
        CliRun r = run_cli({"integrate", "--group", "SU(1)", "--expr", "1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("error:") != std::string::npos);
    }
    SUBCASE("bad expression is diagnosed with a position") {
        CliRun r = run_cli({"integrate", "--group", "SU(2)", "--expr", "a1[1,1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("position") != std::string::npos);
    }
    SUBCASE("word count must match the factor count") {
        CliRun r = run_cli(
            {"integrate", "--group", "SU(2)xSU(2)", "--words", "[1]", "--expr", "1"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("help is printed on request and exits cleanly") {
    CliRun r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("measure") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output flag writes the document to a file") {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / "haarpoly_cli_output_test.json";
    CliRun r = run_cli({"measure", "--group", "SU(2)", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());

    std::ifstream file(path);
    REQUIRE(file.good());
    Json j = Json::parse(file);
    CHECK(j["schema"] == "measure/1");
    CHECK(j["N"] == 1);
    CHECK(j["M"] == 2);
    file.close();
    std::filesystem::remove(path);
}
