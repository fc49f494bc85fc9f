#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "punctual/cli.hpp"

using namespace punctual;
using punctual::cli::run_cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// every invocation below disables the on-disk cache unless a test manages
// its own directory
std::vector<std::string> no_cache(std::vector<std::string> args) {
    args.push_back("--cache-dir");
    args.push_back("");
    return args;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("punctual-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"bogus"}).code == cli::kUsage);
    CHECK(run({"tables"}).code == cli::kUsage);               // --id required
    CHECK(run({"tables", "--id", "nope"}).code == cli::kUsage);
    CHECK(run({"verify", "unknown-check"}).code == cli::kUsage);

    // randomized paths refuse to run without --seed
    RunResult v = run(no_cache({"verify", "examples5x"}));
    CHECK(v.code == cli::kUsage);
    CHECK(v.err.find("--seed") != std::string::npos);
    CHECK(run(no_cache({"apolar", "--random", "3,2", "--n", "5"})).code == cli::kUsage);
    CHECK(run(no_cache({"regular", "--n", "2", "--k", "3"})).code == cli::kUsage);

    // tangent needs exactly one source
    CHECK(run(no_cache({"tangent", "--n", "3"})).code == cli::kUsage);
    CHECK(run(no_cache({"tangent", "--n", "3", "--ideal", "x1", "--dual", "y1"})).code ==
          cli::kUsage);
    CHECK(run(no_cache({"tangent", "--n", "4", "--dual", "y1^2", "--backend", "syzygy"})).code ==
          cli::kUsage);
}

TEST_CASE("version flag") {
    RunResult r = run({"--version"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find(kVersion) != std::string::npos);
}

TEST_CASE("frozen tables reproduce cleanly") {
    RunResult r = run(no_cache({"tables", "--id", "o_sequences"}));
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("diff: clean") != std::string::npos);
    CHECK(r.out.find("57") != std::string::npos);  // the mass-11 count appears in the row
}

TEST_CASE("named verifications pass") {
    for (const char* name : {"sec23", "cor44", "prop56"}) {
        RunResult r = run(no_cache({"verify", name}));
        INFO(name);
        CHECK(r.code == cli::kOk);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
    RunResult r = run(no_cache({"verify", "examples5x", "--seed", "1", "--format", "json"}));
    CHECK(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["pass"].get<bool>());
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["check"] == "examples5x");
}

TEST_CASE("enumerate counts and caps") {
    RunResult r = run(no_cache({"enumerate", "--n", "3", "--k", "4", "--count"}));
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "count: 13\n");

    RunResult ss = run(no_cache({"enumerate", "--n", "3", "--k", "4", "--strongly-stable",
                                 "--format", "json"}));
    CHECK(ss.code == cli::kOk);
    Json j = Json::parse(ss.out);
    CHECK(j["count"].get<long>() == 3);
    CHECK(j["ideals"].size() == 3);

    // a tiny node cap trips the resource guard
    CHECK(run(no_cache({"enumerate", "--n", "3", "--k", "10", "--cap", "50"})).code ==
          cli::kResource);
}

TEST_CASE("tangent report for a monomial ideal, both backends compared") {
    RunResult r = run(no_cache({"tangent", "--n", "3", "--ideal",
                                "x1^3, x2^2, x1*x3, x1*x2, x3^4", "--format", "json"}));
    REQUIRE(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["backend"] == "both");
    CHECK(j["series"]["dims"]["1"].get<long>() == 5);
    CHECK(j["series"]["dims"]["2"].get<long>() == 3);
    CHECK(j["T_pos"].get<long>() == 8);
    CHECK(j["T_nonneg"].get<long>() == 16);
    CHECK(j["expected"].get<long>() == 18);
    CHECK(j["D"].get<long>() == -2);
}

TEST_CASE("tangent report for an inverse system") {
    RunResult r = run(no_cache({"tangent", "--n", "4", "--dual", "y1^4, y2^3, y3*y4",
                                "--format", "json"}));
    REQUIRE(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["T_pos"].get<long>() == 17);
    // three partial chains of lengths 5, 4, 4 sharing the constant
    CHECK(j["series"]["k"].get<long>() == 11);
}

TEST_CASE("apolar invariants of a seeded sample") {
    RunResult r = run(no_cache({"apolar", "--random", "3,2", "--n", "5", "--seed", "1",
                                "--format", "json"}));
    REQUIRE(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["k"].get<long>() == 13);
    CHECK(j["tau"].get<long>() == 2);
    CHECK(j["hf"] == Json({1, 5, 6, 1}));
    CHECK(j["socle_dim"].get<long>() == 2);

    RunResult std_form = run(no_cache({"apolar", "--standard-form", "--seed", "1",
                                       "--format", "json"}));
    REQUIRE(std_form.code == cli::kOk);
    Json s = Json::parse(std_form.out);
    CHECK(s["k"].get<long>() == 8);
    CHECK(s["hf"] == Json({1, 3, 2, 1, 1}));
}

TEST_CASE("oseq enumeration with bounds") {
    RunResult r = run(no_cache({"oseq", "--k", "11", "--min", "4,3,2", "--format", "json"}));
    REQUIRE(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["count"].get<long>() == 4);
    CHECK(j["sequences"][0] == Json({1, 4, 3, 2, 1}));

    RunResult h1 = run(no_cache({"oseq", "--k", "6", "--h1", "2"}));
    CHECK(h1.code == cli::kOk);
    CHECK(h1.out.find("(1,2,") != std::string::npos);
}

TEST_CASE("bounds subcommands emit single values") {
    RunResult gor = run(no_cache({"bounds", "gorenstein", "--n", "3", "--b", "2", "--s", "4"}));
    CHECK(gor.code == cli::kOk);
    CHECK(gor.out == "value: 11\n");

    RunResult nb = run(no_cache({"bounds", "nbound", "--tau", "1", "--k", "8", "--n", "3",
                                 "--format", "csv"}));
    CHECK(nb.code == cli::kOk);
    CHECK(nb.out == "value,22\n");

    RunResult margin = run(no_cache({"bounds", "margin", "--kind", "tau2", "--n", "5",
                                     "--format", "json"}));
    REQUIRE(margin.code == cli::kOk);
    Json j = Json::parse(margin.out);
    CHECK(j["locus"].get<long>() == 52);
    CHECK(j["expected"].get<long>() == 48);
    CHECK(j["verdict"] == "violating");

    RunResult est = run(no_cache({"bounds", "estimate", "--t0", "10", "--tpos", "10", "--base",
                                  "8", "--format", "json"}));
    REQUIRE(est.code == cli::kOk);
    Json e = Json::parse(est.out);
    CHECK(e["best"].get<long>() == 18);
    CHECK(e["base_tangent_fiber"].get<long>() == 18);
}

TEST_CASE("regular check exit codes carry the verdict") {
    RunResult good = run(no_cache({"regular", "--n", "2", "--k", "3", "--tau", "2", "--trials",
                                   "20", "--seed", "7", "--format", "json"}));
    CHECK(good.code == cli::kOk);
    CHECK(Json::parse(good.out)["pass"].get<bool>());

    // map degree capped below the tuple size: guaranteed failure witness
    RunResult bad = run(no_cache({"regular", "--n", "1", "--k", "3", "--map-k", "2", "--trials",
                                  "5", "--seed", "7", "--format", "json"}));
    CHECK(bad.code == cli::kMismatch);
    Json j = Json::parse(bad.out);
    CHECK_FALSE(j["pass"].get<bool>());
    CHECK(j["witness"].size() == 3);
}

TEST_CASE("regular jet and socle subcommands") {
    RunResult jet = run(no_cache({"regular", "jet", "--n", "1", "--k", "4", "--curve", "t",
                                  "--at", "2", "--format", "json"}));
    REQUIRE(jet.code == cli::kOk);
    CHECK(Json::parse(jet.out)["span_dim"].get<long>() == 4);

    RunResult socle = run(no_cache({"regular", "socle", "--alpha", "1,2,3", "--beta", "0,1,1",
                                    "--format", "json"}));
    REQUIRE(socle.code == cli::kOk);
    Json j = Json::parse(socle.out);
    CHECK(j["verification"].get<bool>());
    CHECK(j["lambda"].size() == 3);
}

TEST_CASE("output bytes are independent of the worker count") {
    auto once = [](const char* jobs) {
        return run(no_cache({"tables", "--id", "n3_counts", "--jobs", jobs}));
    };
    RunResult serial = once("1");
    RunResult parallel = once("4");
    CHECK(serial.code == cli::kOk);
    CHECK(serial.out == parallel.out);

    RunResult v1 = run(no_cache({"verify", "lemma53", "--jobs", "1"}));
    RunResult v4 = run(no_cache({"verify", "lemma53", "--jobs", "4"}));
    CHECK(v1.code == cli::kOk);
    CHECK(v1.out == v4.out);
}

TEST_CASE("cache lifecycle") {
    TempDir tmp;
    const std::string dir = tmp.path.string();

    RunResult empty = run({"cache", "status", "--cache-dir", dir, "--format", "json"});
    CHECK(empty.code == cli::kOk);
    CHECK(Json::parse(empty.out)["entries"].get<long>() == 0);

    // first table run populates, second run hits and spot-checks
    CHECK(run({"tables", "--id", "o_sequences", "--cache-dir", dir}).code == cli::kOk);
    RunResult filled = run({"cache", "status", "--cache-dir", dir, "--format", "json"});
    long entries = Json::parse(filled.out)["entries"].get<long>();
    CHECK(entries == 11);
    CHECK(run({"tables", "--id", "o_sequences", "--cache-dir", dir}).code == cli::kOk);

    RunResult rebuild = run({"cache", "rebuild", "--cache-dir", dir, "--format", "json"});
    CHECK(rebuild.code == cli::kOk);
    Json rb = Json::parse(rebuild.out);
    CHECK(rb["checked"].get<long>() == 11);
    CHECK(rb["diffs"].get<long>() == 0);

    RunResult cleared = run({"cache", "clear", "--cache-dir", dir, "--format", "json"});
    CHECK(Json::parse(cleared.out)["removed"].get<long>() == 11);
    RunResult after = run({"cache", "status", "--cache-dir", dir, "--format", "json"});
    CHECK(Json::parse(after.out)["entries"].get<long>() == 0);
}

TEST_CASE("format variants agree on content") {
    RunResult json = run(no_cache({"bounds", "fiber", "--n", "5", "--a", "6", "--b", "1",
                                   "--format", "json"}));
    RunResult csv = run(no_cache({"bounds", "fiber", "--n", "5", "--a", "6", "--b", "1",
                                  "--format", "csv"}));
    RunResult ascii = run(no_cache({"bounds", "fiber", "--n", "5", "--a", "6", "--b", "1"}));
    CHECK(Json::parse(json.out)["value"].get<long>() == 9);
    CHECK(csv.out == "value,9\n");
    CHECK(ascii.out == "value: 9\n");
}
