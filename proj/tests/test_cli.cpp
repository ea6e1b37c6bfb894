#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chilab/cli.hpp"
#include "chilab/constants.hpp"
#include "chilab/fold.hpp"
#include "chilab/serialize.hpp"
#include "chilab/svg.hpp"

using namespace chilab;

namespace {

struct CliRun {
    int rc;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("constants table lists the catalogue with digits") {
    CliRun r = run({"constants"});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "phi 1.6180339887"));
    CHECK(contains(r.out, "chi 1.3556742939"));
    CHECK(contains(r.out, "chi_prime 2.0952939852"));
    CHECK(contains(r.out, "Bartlett"));

    CliRun r3 = run({"constants", "--digits", "3"});
    CHECK(r3.rc == 0);
    CHECK(contains(r3.out, "chi 1.355"));
    CHECK(contains(r3.out, "chi_prime 2.095"));
    CHECK(contains(r3.out, "silver 2.414"));
}

TEST_CASE("constants JSON round-trips byte for byte") {
    CliRun r = run({"constants", "--json"});
    REQUIRE(r.rc == 0);
    Json parsed = Json::parse(r.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == named_constants().size());
    CHECK(parsed[0]["name"] == "phi");
    // canonical order: parse + re-dump reproduces the emitted bytes
    CHECK(parsed.dump(2) + "\n" == r.out);
    // exact values survive the JSON encoding
    for (size_t k = 0; k < parsed.size(); ++k) {
        const NamedConstant& c = named_constants()[k];
        if (!c.exact) {
            CHECK(parsed[k]["exact"].is_null());
            continue;
        }
        CHECK(value_eq(value_from_json(parsed[k]["exact"]), *c.exact));
    }
}

TEST_CASE("cf convergents from the command line") {
    CliRun r = run({"converge", "cf", "--term", "1", "--seed", "2", "--count", "4"});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "c1 = 2"));
    CHECK(contains(r.out, "c4 = 8/5"));
    CHECK(contains(r.out, "1.6000000000"));
}

TEST_CASE("h sequence at 3 places shows the chi-prime growth") {
    CliRun r = run({"converge", "h-seq"});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "H1 = phi+1 ≈ 2.618"));
    CHECK(contains(r.out, "H7 = 38*phi+20 ≈ 81.485"));
    CHECK(contains(r.out, "H8 = 74*phi+51 ≈ 170.734"));
}

TEST_CASE("extend subcommand prints exact and certified forms") {
    CliRun silver = run({"extend", "--rho", "2", "--branch", "above"});
    CHECK(silver.rc == 0);
    CHECK(silver.out == "1+sqrt(2) ≈ 2.4142135623\n");

    CliRun two = run({"extend", "--rho", "3/2", "--branch", "above"});
    CHECK(two.rc == 0);
    CHECK(two.out == "2 ≈ 2.0000000000\n");  // the radical collapses

    CliRun chi_ext = run({"extend", "--rho", "chi"});
    CHECK(chi_ext.rc == 0);
    CHECK(chi_ext.out == "≈ 1.4346664384\n");  // tower input: certified only
}

TEST_CASE("extend sequence lists the chain with exact prefix") {
    CliRun r = run({"extend", "--sequence", "3"});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "x0 ≈ 1.0000000000  (= 1)"));
    CHECK(contains(r.out, "x1 ≈ 1.6180339887  (= phi)"));
    CHECK(contains(r.out, "x2 ≈ 1.3556742939"));
    CHECK(contains(r.out, "x3 ≈ 1.4346664384"));
    CHECK(!contains(r.out, "x3 ≈ 1.4346664384  (="));  // past the tower: no exact form

    CliRun alias = run({"extend", "--chain", "3"});
    CHECK(alias.out == r.out);
}

TEST_CASE("fold cf emits value and a replayable trace") {
    CliRun r = run({"fold", "cf", "--n", "2", "--depth", "1", "--trace"});
    CHECK(r.rc == 0);
    REQUIRE(contains(r.out, "value = 5/2 ≈ 2.5000000000\n"));
    std::string jsonl = r.out.substr(r.out.find('\n') + 1);
    FoldTrace trace = trace_from_jsonl(jsonl);
    REQUIRE(trace.steps.size() == 4);
    CHECK(replay(trace) == Rational(5, 2));
    CHECK(trace_to_jsonl(trace) == jsonl);  // byte-identical round trip
}

TEST_CASE("fold harmonic prints both means") {
    CliRun r = run({"fold", "harmonic", "--m", "3", "--n", "2"});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "1/m + 1/n = 5/6"));
    CHECK(contains(r.out, "harmonic mean = 12/5"));
}

TEST_CASE("subdivide JSON carries decimals and exact values") {
    CliRun r = run({"subdivide", "--x", "chi", "--json"});
    REQUIRE(r.rc == 0);
    Json j = Json::parse(r.out);
    CHECK(j["whole"]["w"] == "1.0000000000");
    CHECK(j["whole"]["l"] == "1.3556742939");
    CHECK(j["kept"]["l"] == "0.6180339887");
    CHECK(j["strip"]["l"] == "0.7376403052");
    CHECK(value_eq(value_from_json(j["exact"]["whole"]), Value(chi())));
    CHECK(value_eq(value_from_json(j["exact"]["kept"]), Value(inv_phi())));
    CHECK(j["construction"]["diagonal"][0][0] == "0.0000000000");
    CHECK(j["construction"]["foot"].size() == 2);
    CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("verify runs the identity suite cleanly") {
    CliRun r = run({"verify"});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "verified 27/27 identities"));
    CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("render to file matches the renderer output") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "chilab_cli_render_test.svg";
    CliRun r = run({"render", "subdivision", "--x", "chi", "--out", tmp.string()});
    CHECK(r.rc == 0);
    CHECK(r.out.empty());
    std::ifstream f(tmp, std::ios::binary);
    std::ostringstream got;
    got << f.rdbuf();
    CHECK(got.str() == render_subdivision_svg(Value(chi())));
    fs::remove(tmp);

    CliRun stdout_render = run({"render", "construction", "--target", "phi"});
    CHECK(stdout_render.rc == 0);
    CHECK(stdout_render.out == render_construction_svg(ConstructionTarget::phi));
}

TEST_CASE("usage errors exit 1 with usage text and the offending token") {
    CliRun unknown = run({"frobnicate"});
    CHECK(unknown.rc == 1);
    CHECK(contains(unknown.err, "usage error"));
    CHECK(contains(unknown.err, "Usage"));

    CliRun missing = run({"converge", "cf", "--term", "1"});
    CHECK(missing.rc == 1);
    CHECK(contains(missing.err, "--seed"));

    CliRun bad_value = run({"extend", "--rho", "0.5"});
    CHECK(bad_value.rc == 1);
    CHECK(contains(bad_value.err, "0.5"));  // the offending token is reported

    CliRun bad_term = run({"converge", "cf", "--term", "0", "--seed", "1"});
    CHECK(bad_term.rc == 1);

    CliRun bad_count = run({"render", "extend", "--count", "1"});
    CHECK(bad_count.rc == 1);
}

TEST_CASE("help exits zero") {
    CliRun r = run({"--help"});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "constants"));
    CHECK(contains(r.out, "render"));
}
