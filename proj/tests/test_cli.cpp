#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string binary() {
    const char* p = std::getenv("MOMENTKIT_BIN");
    REQUIRE_MESSAGE(p != nullptr, "MOMENTKIT_BIN must point at the command-line binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = "\"" + binary() + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int st = pclose(pipe);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

json results_of(const RunResult& r) {
    json rep = json::parse(r.out);
    REQUIRE(rep.contains("results"));
    return rep["results"];
}

} // namespace

TEST_CASE("gen prints exact terms") {
    auto r = run("gen --seq euler --count 11");
    CHECK(r.code == 0);
    json res = results_of(r);
    CHECK(res["terms"] == json({"1", "1", "1", "2", "5", "16", "61", "272", "1385", "7936",
                                "50521"}));
    CHECK(res["integer_valued"] == true);
    auto r2 = run("gen --seq springer-tilde --count 5");
    CHECK(results_of(r2)["terms"][4] == "19/8");
}

TEST_CASE("gen --list names every sequence") {
    auto r = run("gen --list");
    CHECK(r.code == 0);
    json res = results_of(r);
    CHECK(res["sequences"].size() >= 18);
}

TEST_CASE("hankel determinant example") {
    auto r = run("hankel --seq springer --shift 1 --size 3 --det");
    CHECK(r.code == 0);
    CHECK(results_of(r)["det"] == "-96");
}

TEST_CASE("hankel violation reports exit 1 with a witness") {
    auto r = run("hankel --seq euler --leading-minors 5");
    CHECK(r.code == 1);
    json res = results_of(r);
    CHECK(res["status"] == "violation");
    CHECK(res["witness"]["det"] == "-1");
    auto ok = run("hankel --seq secant --leading-minors 5");
    CHECK(ok.code == 0);
    CHECK(results_of(ok)["status"] == "all-positive");
}

TEST_CASE("cf extract example") {
    auto r = run("cf extract --kind s --seq secant --terms 6");
    CHECK(r.code == 0);
    CHECK(results_of(r)["alphas"] == json({"1", "4", "9", "16", "25", "36"}));
}

TEST_CASE("cf invert-contraction reports the obstruction") {
    auto r = run("cf invert-contraction --family euler-shifted --depth 3");
    CHECK(r.code == 1);
    json res = results_of(r);
    CHECK(res["obstruction"] == 6);
    CHECK(res["alphas"] == json({"1", "1", "1", "3", "0"}));
}

TEST_CASE("enumerate snakes") {
    auto r = run("enumerate --what snakes --n 0..5");
    CHECK(r.code == 0);
    json vals = results_of(r)["values"];
    REQUIRE(vals.size() == 6);
    CHECK(vals[5]["count"] == "361");
}

TEST_CASE("verify lerch small range") {
    auto r = run("verify lerch --n 0..2");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["status"] == "pass");
    for (const auto& rec : rep["results"]["records"]) CHECK(rec["pass"] == true);
}

TEST_CASE("verify integral names the frozen example density") {
    auto r = run("verify integral --density E2n-sech --n 0..2 --tol 1e-10");
    CHECK(r.code == 0);
    json recs = results_of(r)["records"];
    REQUIRE(recs.size() == 3);
    for (const auto& rec : recs) {
        CHECK(rec["pass"] == true);
        // floats travel as 17-significant-digit strings
        CHECK(rec["computed"].is_string());
    }
    CHECK(recs[2]["target"] == "5");
}

TEST_CASE("scan stays clean on a small box") {
    auto r = run("scan logconvexity --max 8");
    CHECK(r.code == 0);
    json res = results_of(r);
    CHECK(res["violations"] == 0);
    CHECK(res["counterexample"].is_null());
}

TEST_CASE("sign survey passes its parity checks") {
    auto r = run("scan hankel-signs --m-max 4 --n-max 6");
    CHECK(r.code == 0);
    json res = results_of(r);
    CHECK(res["even_rows_contain_negative"] == true);
    CHECK(res["odd_rows_all_positive"] == true);
    CHECK(res["rows"][1]["signs"] == "+ + + + + +");
}

TEST_CASE("other output formats") {
    auto t = run("--format text hankel --seq springer --shift 1 --size 3 --det");
    CHECK(t.code == 0);
    CHECK(t.out.find("det: -96") != std::string::npos);
    auto c = run("--format csv gen --seq apery --count 3");
    CHECK(c.code == 0);
    CHECK(c.out.find("73") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("gen --seq no-such-sequence").code == 2);
    CHECK(run("gen").code == 2);
    CHECK(run("--no-such-flag gen --seq euler").code == 2);
    CHECK(run("cf extract --kind x --seq euler").code == 2);
    CHECK(run("hankel --seq euler --det --log-shape").code == 2);
    CHECK(run("enumerate --what snakes --n 0..99").code == 2);
    CHECK(run("verify integral --density nope").code == 2);
}
