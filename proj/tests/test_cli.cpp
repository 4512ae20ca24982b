#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "ellpic/cli.hpp"
#include "ellpic/parse.hpp"

using namespace ellpic;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_group_spec") {
    GroupSpec a = parse_group_spec("Z/6");
    CHECK(a.free_rank == 0);
    CHECK(a.torsion == std::vector<Int>{6});

    GroupSpec b = parse_group_spec("Z^2+Z/4+Z/2");
    CHECK(b.free_rank == 2);
    CHECK(b.normalized() == FgAbelianGroup{2, {2, 4}});  // chain reorder

    CHECK(parse_group_spec("0").normalized().is_trivial());
    CHECK(parse_group_spec("Z").free_rank == 1);
    CHECK(parse_group_spec("Z+Z/3+Z").free_rank == 2);

    CHECK_THROWS_AS(parse_group_spec("Z/1"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z/"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Q/5"), parse_error);
    // the error carries a position
    try {
        parse_group_spec("Z/4+Z/1");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 6);
    }
}

TEST_CASE("element and polynomial parsing") {
    const FqField* F9 = FqField::get(3, 2);
    CHECK(parse_element("2", F9).index() == 2);
    CHECK(parse_element("g", F9).index() == 3);
    CHECK(parse_element("g+2", F9).index() == 5);
    CHECK(parse_element("2g+1", F9).index() == 7);

    const FqField* F5 = FqField::get(5, 1);
    FqPoly p = parse_poly("3x^2+2x+1", F5);
    CHECK(p.degree() == 2);
    CHECK(p[2].index() == 3);
    CHECK(p[0].index() == 1);
    CHECK(parse_poly("x^2+2", F5).degree() == 2);
    // g-coefficients over F_9
    FqPoly p9 = parse_poly("(g+1)x+2g", F9);
    CHECK(p9.degree() == 1);
    CHECK(p9[1].index() == 4);
    CHECK_THROWS_AS(parse_poly("x^2+", F5), parse_error);
    CHECK_THROWS_AS(parse_element("g", F5), parse_error);  // no generator in a prime field
}

TEST_CASE("curve parsing: both syntaxes agree") {
    const FqField* F = FqField::get(5, 1);
    FqCurve a = parse_curve("y^2=x^3+1x+1", F);
    FqCurve b = parse_curve("a4=1,a6=1", F);
    CHECK(a == b);
    FqCurve c = parse_curve("a1=0,a2=0,a3=1,a4=2,a6=3", F);
    CHECK(c.a3().index() == 1);
    CHECK_THROWS_AS(parse_curve("y^2=x^2+1", F), parse_error);
    CHECK_THROWS_AS(parse_curve("a5=1", F), parse_error);
    CHECK_THROWS_AS(parse_curve("y^2=x^3", F), std::domain_error);  // singular
}

TEST_CASE("closed point parsing") {
    const FqField* F = FqField::get(5, 1);
    FqCurve E = parse_curve("y^2=x^3+1x+1", F);
    ClosedPoint p1 = parse_closed_point("(0,1)", E);
    CHECK(p1.degree() == 1);
    // round trip every degree-2 point through its rendered literal
    const auto& d2 = closed_points_of_degree(E, 2);
    bool exercised_split = false, exercised_inert = false;
    for (const auto& cp : d2) {
        std::string text = cp.str();
        ClosedPoint back = parse_closed_point(text, E);
        CHECK(back == cp);
        if (cp.y_expr()) exercised_split = true;
        else exercised_inert = true;
    }
    CHECK(exercised_split);
    CHECK(exercised_inert);

    auto set = parse_point_set("(0,1);(0,4)", E);
    CHECK(set.size() == 2);
    CHECK_THROWS_AS(parse_closed_point("(1,1)", E), std::invalid_argument);  // not on curve
}

TEST_CASE("picard subcommand: both oracles, ISOMORPHIC, exit 0") {
    auto r = run({"picard", "--curve", "y^2=x^3+1x+1", "--q", "5", "--oracle", "both",
                  "--degree-bound", "1", "--norm-budget", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ISOMORPHIC") != std::string::npos);
    CHECK(r.out.find("Z/9") != std::string::npos);
}

TEST_CASE("json and text renderings carry the same numbers") {
    auto text = run({"mw", "--curve", "y^2=x^3+1x+1", "--q", "5"});
    auto json = run({"mw", "--curve", "y^2=x^3+1x+1", "--q", "5", "--format", "json"});
    CHECK(text.code == 0);
    CHECK(json.code == 0);
    CHECK(text.out.find("= 9") != std::string::npos);
    CHECK(json.out.find("\"point_count\": 9") != std::string::npos);
    CHECK(json.out.find("\"trace\": -3") != std::string::npos);
    CHECK(text.out.find("trace = -3") != std::string::npos);
}

TEST_CASE("overring subcommand") {
    auto r = run({"overring", "--curve", "y^2=x^3+1x+1", "--q", "5", "--remove", "(0,1);(0,4)",
                  "--degree-bound", "1", "--norm-budget", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("EXACT") != std::string::npos);
}

TEST_CASE("replete subcommand") {
    auto r = run({"replete", "--curve", "y^2=x^3+1x+1", "--q", "5", "--max-degree", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("replete-with-witnesses") != std::string::npos);
    CHECK(r.out.find("weakly replete: yes") != std::string::npos);
}

TEST_CASE("tower subcommand with level-1 checks") {
    auto r = run({"tower", "--height", "3", "--check-level1", "--bound", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z^3") != std::string::npos);
    CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("realize then verify round trip through a file, exit codes") {
    std::string path = "/tmp/ellpic_test_cert.json";
    auto r1 = run({"realize", "--group", "Z^2+Z/4+Z/12", "--out", path});
    CHECK(r1.code == 0);
    auto r2 = run({"verify", path});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("VERIFIED") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"verify", "/nonexistent/missing.json"}).code == 2);
    CHECK(run({"picard", "--q", "5"}).code == 2);                         // missing --curve
    CHECK(run({"realize", "--group", "Z/1"}).code == 2);                  // bad spec
    CHECK(run({"mw", "--curve", "y^2=x^3", "--q", "5"}).code == 2);       // singular curve
    CHECK(run({"mw", "--curve", "y^2=x^3+1x+1", "--q", "6"}).code == 2);  // not a prime power
    CHECK(run({}).code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
    auto r = run({"picard", "--curve", "y^2=x^3+1x+1", "--q", "5", "--degree-bound", "1",
                  "--norm-budget", "8", "--max-candidates", "10"});
    CHECK(r.code == 3);
}

TEST_CASE("tampered certificate exits 1") {
    std::string path = "/tmp/ellpic_test_cert2.json";
    auto r1 = run({"realize", "--group", "Z/4", "--out", path, "--no-demo"});
    CHECK(r1.code == 0);
    // corrupt the kill generator
    {
        FILE* f = fopen(path.c_str(), "r");
        REQUIRE(f);
        std::string text;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
        fclose(f);
        auto pos = text.find("\"4\"");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 3, "\"3\"");
        f = fopen(path.c_str(), "w");
        fwrite(text.data(), 1, text.size(), f);
        fclose(f);
    }
    auto r2 = run({"verify", path});
    CHECK(r2.code == 1);
    CHECK(r2.out.find("REJECTED") != std::string::npos);
    std::remove(path.c_str());
}
