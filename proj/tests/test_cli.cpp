#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rootwind/cauchy.hpp"
#include "rootwind/cli.hpp"
#include "rootwind/json_io.hpp"
#include "rootwind/subresultant.hpp"
#include "test_util.hpp"

using namespace rootwind;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    const int c = run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

Json doc_of(const CliResult& r) { return Json::parse(r.out); }

const char* kSquareMinusOne = R"([["-1","0"],["0","0"],["1","0"]])";

} // namespace

TEST_CASE("count: two roots of Z^2 - 1 inside [-2,2]^2") {
    const CliResult r = run({"count", "--poly", kSquareMinusOne, "--rect", "-2", "2", "-2", "2"});
    REQUIRE(r.code == 0);
    const Json doc = doc_of(r);
    CHECK(doc["command"] == "count");
    CHECK(doc["count"] == 2);
    // the echoed inputs re-parse to the same objects (round-trip)
    CHECK(gausspoly_from_json(doc["poly"]) ==
          gausspoly_from_json(Json::parse(kSquareMinusOne)));
    const Rectangle g = rectangle_from_json(doc["rect"]);
    CHECK(g == Rectangle(Rational(-2), Rational(2), Rational(-2), Rational(2)));
}

TEST_CASE("winding: Z - 1 on [-1,1]^2 reports 1/2 with a vanishing boundary") {
    const CliResult r = run({"winding", "--poly", R"([["-1","0"],["1","0"]])", "--rect", "-1",
                             "1", "-1", "1"});
    REQUIRE(r.code == 0);
    const Json doc = doc_of(r);
    CHECK(doc["value"] == "1/2");
    CHECK(doc["boundary_vanishes"] == true);
    CHECK(doc["integer"] == false);
    CHECK(parse_rational(doc["value"].get<std::string>()) == Rational(1, 2));
}

TEST_CASE("count refuses a boundary root with exit 2 and a coded error document") {
    const CliResult r = run({"count", "--poly", R"([["-1","0"],["1","0"]])", "--rect", "-1", "1",
                             "-1", "1"});
    REQUIRE(r.code == 2);
    const Json doc = doc_of(r);
    CHECK(doc["error"]["code"] == "RootOnBoundary");
    CHECK(r.err.empty());
}

TEST_CASE("count-all reports the degree and the certified radius") {
    // Z^3 - 1
    const CliResult r =
        run({"count-all", "--poly", R"([["-1","0"],["0","0"],["0","0"],["1","0"]])"});
    REQUIRE(r.code == 0);
    const Json doc = doc_of(r);
    CHECK(doc["count"] == 3);
    CHECK(doc["radius"] == "3");
}

TEST_CASE("isolate: boxes arrive sorted with multiplicities and certification flags") {
    // (Z - i)^2 (Z + 1), assembled through the library to avoid hand-expansion slips
    const auto gr = [](long a, long b) { return GaussianRational(Rational(a), Rational(b)); };
    ComplexUniPoly f(std::vector<GaussianRational>{gr(1, 0)});
    const ComplexUniPoly zi(std::vector<GaussianRational>{gr(0, -1), gr(1, 0)});
    const ComplexUniPoly z1(std::vector<GaussianRational>{gr(1, 0), gr(1, 0)});
    f = zi * zi * z1;
    const std::string poly = json_of(f).dump();
    const CliResult r = run({"isolate", "--poly", poly, "--rect", "-2", "2", "-2", "2",
                             "--min-width", "1/4"});
    REQUIRE(r.code == 0);
    const Json doc = doc_of(r);
    REQUIRE(doc["boxes"].size() == 2);
    long total = 0;
    for (const Json& b : doc["boxes"]) {
        CHECK(b["certified"] == true);
        total += b["multiplicity"].get<long>();
        CHECK(rectangle_from_json(b["box"]).width() > Rational(0));
    }
    CHECK(total == 3);
    CHECK(doc["min_width"] == "1/4");
}

TEST_CASE("index command matches the library bit-exactly on a golden corpus") {
    struct Golden {
        std::vector<long> q, p;
        const char* a;
        const char* b;
    };
    const std::vector<Golden> corpus = {
        {{1}, {-2, 0, 1}, "1", "2"},  {{1}, {0, 1}, "-1", "1"},   {{1}, {0, 1}, "0", "1"},
        {{-3, 1}, {1, -4, 1}, "0", "5"}, {{2, 1}, {-1, 0, 0, 1}, "-2", "3"},
        {{1, 2, 3}, {5, 0, -2, 1}, "-7/2", "9/4"},
    };
    for (const Golden& g : corpus) {
        std::vector<Rational> qc, pc;
        for (long v : g.q) qc.emplace_back(v);
        for (long v : g.p) pc.emplace_back(v);
        const UniPoly q(qc), p(pc);
        const CliResult r = run({"index", "--q", json_of(q).dump(), "--p", json_of(p).dump(),
                                 "--a", g.a, "--b", g.b});
        REQUIRE(r.code == 0);
        const Json doc = doc_of(r);
        const HalfInt want = cauchy_index(q, p, parse_rational(g.a), parse_rational(g.b));
        CHECK(doc["value"].get<std::string>() == want.str());
    }
    // the worked example: Ind_1^2 of 1 / (X^2 - 2)
    const CliResult r = run({"index", "--q", R"(["1"])", "--p", R"(["-2","0","1"])", "--a", "1",
                             "--b", "2"});
    CHECK(doc_of(r)["value"] == "1");
}

TEST_CASE("index --trace exposes the chain, sign table and weighted variations") {
    const CliResult r = run({"index", "--q", R"(["0","2"])", "--p", R"(["-2","0","1"])", "--a",
                             "-2", "--b", "3", "--trace"});
    REQUIRE(r.code == 0);
    const Json doc = doc_of(r);
    const Json& tr = doc["trace"];
    CHECK(tr["value"] == doc["value"]);
    REQUIRE(tr.contains("chain"));
    const std::size_t members = tr["chain"]["members"].size();
    CHECK(members >= 2);
    CHECK(tr["chain"]["epsilon"].size() == members - 1);
    CHECK(tr["sign_table"].size() == members);
    CHECK(tr["variation_terms"].size() == members - 1);
    CHECK(tr["chain"]["good"] == true);
    CHECK(tr["chain"]["interval"].is_null()); // subresultant chains hold on the whole line
}

TEST_CASE("subres: both methods print the same sequence document") {
    const std::vector<std::string> base = {"subres", "--p", R"(["-2","0","1"])", "--q",
                                           R"(["0","2"])"};
    std::vector<std::string> naive = base, structured = base;
    naive.insert(naive.end(), {"--method", "naive"});
    structured.insert(structured.end(), {"--method", "structured"});
    const CliResult rn = run(naive), rs = run(structured);
    REQUIRE(rn.code == 0);
    REQUIRE(rs.code == 0);
    const Json dn = doc_of(rn), ds = doc_of(rs);
    CHECK(dn["sequence"] == ds["sequence"]);
    CHECK(dn["bivariate"] == false);
    // and the document matches the library sequence exactly
    const UniPoly p(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
    const UniPoly q(std::vector<Rational>{Rational(0), Rational(2)});
    CHECK(dn["sequence"] == json_of(subresultants_structured(p, q)));
}

TEST_CASE("subres detects bivariate payloads from the nesting shape") {
    const CliResult r = run({"subres", "--p", R"([["0","-1"],["0"],["1"]])", "--q",
                             R"([["0"],["1"]])"});
    REQUIRE(r.code == 0);
    const Json doc = doc_of(r);
    CHECK(doc["bivariate"] == true);
    CHECK(doc["sequence"]["deg_p"] == 2);
    CHECK(doc["sequence"]["deg_q"] == 1);
    const CliResult bad = run({"subres", "--p", R"([["0","-1"],["0"],["1"]])", "--q",
                               R"([["0"],["1"]])", "--method", "fast"});
    CHECK(bad.code == 1);
}

TEST_CASE("bounds: frozen values for d = 4 and the safety cap at 16") {
    const CliResult r = run({"bounds", "--d", "4"});
    REQUIRE(r.code == 0);
    const Json doc = doc_of(r);
    CHECK(doc["beta"] == "15");
    CHECK(doc["gamma"] == "71253");
    CHECK(doc["sandwich_checked"] == true);
    CHECK(doc["beta_lower"] == "27/2");
    CHECK(doc["beta_upper"] == "32");
    const CliResult blocked = run({"bounds", "--d", "17"});
    CHECK(blocked.code == 1);
    CHECK(blocked.out.empty());
    CHECK(!blocked.err.empty());
    const CliResult forced = run({"bounds", "--d", "17", "--allow-large"});
    REQUIRE(forced.code == 0);
    CHECK(doc_of(forced)["beta"] == "17"); // odd arguments are fixed points
    const CliResult zero = run({"bounds", "--d", "0"});
    CHECK(zero.code == 1);
}

TEST_CASE("bench: deterministic rows under a fixed seed, modulo wall time") {
    const std::vector<std::string> args = {"bench", "--max-deg", "4", "--trials", "2", "--seed",
                                           "7"};
    const CliResult r1 = run(args), r2 = run(args);
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    Json a = doc_of(r1)["rows"], b = doc_of(r2)["rows"];
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == 3); // degrees 2, 3, 4
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (Json* j : {&a[i], &b[i]}) {
            j->erase("naive_seconds");
            j->erase("structured_seconds");
        }
        CHECK(a[i] == b[i]);
        CHECK(a[i]["outputs_equal"] == true);
    }
}

TEST_CASE("inputs can come from a file, with explicit flags taking precedence") {
    const std::string path = "cli_input_test.json";
    {
        std::ofstream f(path);
        f << R"({"poly": [["-1","0"],["0","0"],["1","0"]], "rect": ["-2","2","-2","2"]})";
    }
    const CliResult file_only = run({"count", "--input", path});
    REQUIRE(file_only.code == 0);
    CHECK(doc_of(file_only)["count"] == 2);
    // flag overrides the rectangle from the file: far away, so zero roots
    const CliResult overridden = run({"count", "--input", path, "--rect", "5", "6", "5", "6"});
    REQUIRE(overridden.code == 0);
    CHECK(doc_of(overridden)["count"] == 0);
    const CliResult missing = run({"count", "--input", "does_not_exist_anywhere.json"});
    CHECK(missing.code == 1);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 1 without polluting standard output") {
    // floating point is rejected in both spellings
    CHECK(run({"count", "--poly", R"([[0.5,0],[1,0]])", "--rect", "-2", "2", "-2", "2"}).code ==
          1);
    CHECK(run({"count", "--poly", R"([["0.5","0"],["1","0"]])", "--rect", "-2", "2", "-2", "2"})
              .code == 1);
    // inverted rectangle
    const CliResult inv = run({"count", "--poly", kSquareMinusOne, "--rect", "2", "-2", "-2",
                               "2"});
    CHECK(inv.code == 1);
    CHECK(inv.out.empty());
    CHECK(!inv.err.empty());
    // unknown command, missing subcommand, bad format, missing inputs
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"count", "--poly", kSquareMinusOne, "--rect", "-2", "2", "-2", "2", "--format",
               "xml"})
              .code == 1);
    CHECK(run({"count", "--rect", "-2", "2", "-2", "2"}).code == 1);
    CHECK(run({"isolate", "--poly", kSquareMinusOne, "--rect", "-3", "3", "-3", "3"}).code == 1);
    // malformed rational in an endpoint
    CHECK(run({"index", "--q", R"(["1"])", "--p", R"(["0","1"])", "--a", "1.5", "--b", "2"})
              .code == 1);
}

TEST_CASE("table format prints the human-readable renderings") {
    const CliResult count = run({"count", "--poly", kSquareMinusOne, "--rect", "-2", "2", "-2",
                                 "2", "--format", "table"});
    REQUIRE(count.code == 0);
    CHECK(count.out == "count: 2\n");
    const CliResult wind = run({"winding", "--poly", R"([["-1","0"],["1","0"]])", "--rect",
                                "-1", "1", "-1", "1", "--format", "table"});
    REQUIRE(wind.code == 0);
    CHECK(wind.out.find("value: 1/2") != std::string::npos);
    CHECK(wind.out.find("boundary_vanishes: true") != std::string::npos);
    const CliResult boom = run({"count", "--poly", R"([["-1","0"],["1","0"]])", "--rect", "-1",
                                "1", "-1", "1", "--format", "table"});
    CHECK(boom.code == 2);
    CHECK(boom.out.find("RootOnBoundary") != std::string::npos);
    const CliResult bounds4 = run({"bounds", "--d", "4", "--format", "table"});
    REQUIRE(bounds4.code == 0);
    CHECK(bounds4.out.find("beta(4) = 15") != std::string::npos);
    CHECK(bounds4.out.find("gamma(4) = 71253") != std::string::npos);
}

TEST_CASE("help is help, not an error") {
    const CliResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("count") != std::string::npos);
    const CliResult sub = run({"index", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--q") != std::string::npos);
}

TEST_CASE("random documents round-trip through the published schema") {
    testutil::Rng rng(401);
    for (int t = 0; t < 15; ++t) {
        const ComplexUniPoly f = rng.cpoly(1 + static_cast<int>(t % 4), 3);
        const CliResult r = run({"count-all", "--poly", json_of(f).dump()});
        REQUIRE(r.code == 0);
        const Json doc = doc_of(r);
        CHECK(gausspoly_from_json(doc["poly"]) == f);
        CHECK(doc["count"].get<long>() == f.degree());
        // radius string re-parses to the exact library value
        CHECK(parse_rational(doc["radius"].get<std::string>()) == sufficient_radius(f));
    }
}
