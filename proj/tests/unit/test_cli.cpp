#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cocycle/cli.hpp"
#include "cocycle/io.hpp"
#include "support.hpp"

using namespace cocycle;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(COCYCLE_TEST_TMPDIR) / "cli_scratch";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch(name);
    std::ofstream(p) << content;
    return p;
}

cli::Result run(std::vector<std::string> args) { return cli::run(args); }

}  // namespace

TEST_CASE("solve on Q8 lists five solutions") {
    auto r = run({"solve", "--group", "builtin:q8", "--equation", "dalembert"});
    REQUIRE(r.exit_code == cli::kOk);
    auto j = Json::parse(r.out);
    CHECK(j["equation"] == "dalembert");
    CHECK(j["group"]["order"] == 8);
    CHECK(j["solutions"].size() == 5);
    for (const auto& s : j["solutions"]) {
        CHECK(s["values"].size() == 8);
        CHECK(s["residual"].get<double>() <= 1e-9);
        CHECK(s["witness"].contains("kind"));
    }
    CHECK_FALSE(j.contains("oracle"));
}

TEST_CASE("verify the sign character on Z2") {
    auto f = write_file("sign.json", "[1, -1]");
    auto r = run({"verify", "--group", "builtin:z2", "--equation", "dalembert", "--function", f.string()});
    REQUIRE(r.exit_code == cli::kOk);
    CHECK(Json::parse(r.out)["satisfied"] == true);

    auto bad = write_file("two.json", R"({"values": [2, 2]})");
    auto r2 = run({"verify", "--group", "builtin:z2", "--function", bad.string()});
    REQUIRE(r2.exit_code == cli::kOk);
    CHECK(Json::parse(r2.out)["satisfied"] == false);

    auto r3 = run({"verify", "--group", "builtin:z2", "--equation", "wilson", "--function",
                   f.string(), "--g", f.string()});
    REQUIRE(r3.exit_code == cli::kOk);
    CHECK(Json::parse(r3.out)["satisfied"] == true);
}

TEST_CASE("irreps on S3") {
    auto r = run({"irreps", "--group", "builtin:s3"});
    REQUIRE(r.exit_code == cli::kOk);
    auto j = Json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    std::vector<int> dims;
    for (const auto& rep : j) dims.push_back(rep["dim"]);
    CHECK(dims == std::vector<int>{1, 1, 2});
}

TEST_CASE("lemma and fourier commands") {
    auto r = run({"lemma", "--group", "builtin:q8", "--irrep", "4"});
    REQUIRE(r.exit_code == cli::kOk);
    auto j = Json::parse(r.out);
    CHECK(j["conclusion"] == "dim2_su2");
    CHECK(run({"lemma", "--group", "builtin:q8", "--irrep", "9"}).exit_code == cli::kValidation);

    auto f = write_file("delta.json", "[1, 0, 0, 0, 0, 0]");
    auto rf = run({"fourier", "--group", "builtin:s3", "--function", f.string()});
    REQUIRE(rf.exit_code == cli::kOk);
    auto blocks = Json::parse(rf.out)["blocks"];
    CHECK(blocks.size() == 3);
    CHECK(blocks[2]["dim"] == 2);
}

TEST_CASE("exit codes") {
    auto bad_table = write_file("loop.json", R"({"names": ["e","a","b","c","d"],
        "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})");
    auto r = run({"solve", "--group", bad_table.string()});
    CHECK(r.exit_code == cli::kValidation);
    CHECK(r.err.find("NotAssociative") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(run({"solve", "--group", scratch("missing.json").string()}).exit_code == cli::kFileNotFound);
    CHECK(run({"solve"}).exit_code == cli::kBadArgs);
    CHECK(run({"explode", "--group", "builtin:z2"}).exit_code == cli::kBadArgs);
    CHECK(run({"solve", "--group", "builtin:z2", "--tol", "-1"}).exit_code == cli::kBadArgs);
    CHECK(run({"solve", "--group", "builtin:z2", "--starts", "0"}).exit_code == cli::kBadArgs);
    CHECK(run({"solve", "--group", "builtin:q9"}).exit_code == cli::kValidation);
    CHECK(run({"solve", "--group", "builtin:z2", "--equation", "cauchy"}).exit_code == cli::kBadArgs);

    auto garbage = write_file("garbage.json", "{not json");
    CHECK(run({"solve", "--group", garbage.string()}).exit_code == cli::kValidation);
}

TEST_CASE("group export round trip gives identical solver output") {
    auto exported = run({"group", "--group", "builtin:q8", "--output", scratch("q8.json").string()});
    REQUIRE(exported.exit_code == cli::kOk);
    CHECK(exported.out.empty());
    auto a = run({"solve", "--group", "builtin:q8", "--equation", "wilson"});
    auto b = run({"solve", "--group", scratch("q8.json").string(), "--equation", "wilson"});
    REQUIRE(a.exit_code == cli::kOk);
    CHECK(a.out == b.out);
    auto j = Json::parse(a.out);
    CHECK(j["f_zero_any_g"] == true);
    CHECK(j["wilson_spaces"].size() == 5);
}

TEST_CASE("determinism and seed handling") {
    auto a = run({"solve", "--group", "builtin:s3", "--oracle", "--starts", "100"});
    auto b = run({"solve", "--group", "builtin:s3", "--oracle", "--starts", "100"});
    REQUIRE(a.exit_code == cli::kOk);
    CHECK(a.out == b.out);
    auto c = run({"solve", "--group", "builtin:s3", "--oracle", "--starts", "100", "--threads", "3"});
    CHECK(a.out == c.out);
    auto o = Json::parse(a.out)["oracle"];
    CHECK(o["starts"] == 100);
    CHECK(o["unmatched"]["found"].empty());
    CHECK(o["unmatched"]["constructed"].empty());

    // the environment seed is the default, the flag wins over it
    ::setenv("COCYCLE_SEED", "7", 1);
    auto env7 = run({"irreps", "--group", "builtin:q8"});
    ::unsetenv("COCYCLE_SEED");
    auto flag7 = run({"irreps", "--group", "builtin:q8", "--seed", "7"});
    CHECK(env7.out == flag7.out);
    ::setenv("COCYCLE_SEED", "oops", 1);
    CHECK(run({"irreps", "--group", "builtin:q8"}).exit_code == cli::kBadArgs);
    CHECK(run({"irreps", "--group", "builtin:q8", "--seed", "7"}).exit_code == cli::kOk);
    ::unsetenv("COCYCLE_SEED");
}

TEST_CASE("table format is human readable") {
    auto r = run({"solve", "--group", "builtin:z4", "--format", "table"});
    REQUIRE(r.exit_code == cli::kOk);
    CHECK(r.out.find("3 nonzero solution(s)") != std::string::npos);
    CHECK(run({"solve", "--group", "builtin:z4", "--format", "xml"}).exit_code == cli::kBadArgs);
}

TEST_CASE("io round trips") {
    const auto& b = support::basis("q8");
    auto j = io::irreps_to_json(b);
    auto back = io::irreps_from_json(j, b.group);
    REQUIRE(back.size() == b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        for (Element x = 0; x < 8; ++x) CHECK(frobenius_distance(back[k](x), b[k](x)) == 0.0);

    std::mt19937_64 rng(2);
    auto f = support::random_function(b.group, rng);
    auto f2 = io::function_from_json(Json::parse(io::function_to_json(f).dump()), b.group);
    CHECK(f2.values == f.values);  // bit-exact through decimal text
}
