#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cqg/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "cqg");
    std::ostringstream out, err;
    const int code = cqg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dims table") {
    auto r = run({"dims", "--model", "su_q_2", "--q", "0.5", "--max-level", "2", "--t", "0,1,2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "label,d_0,d_1,d_2\n0,1,1,1\n1,2,2.5,4.25\n2,3,5.25,17.0625\n");
    auto j = run({"dims", "--model", "builtin:su_q_2", "--max-level", "2", "--t", "0,1,2", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["command"] == "dims");
    CHECK(doc["results"][2]["d_2"] == 17.0625);
}

TEST_CASE("exit codes") {
    CHECK(run({"bounded-degree", "--model", "builtin:s3", "--r", "3"}).code == 1);
    CHECK(run({"bounded-degree", "--model", "builtin:s3", "--r", "4"}).code == 0);
    CHECK(run({"verify", "theorem-5.3", "--model", "su_q_2", "--q", "0.5", "--max-level", "4", "--tol", "1e-9"}).code ==
          0);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"dims", "--format", "xml"}).code == 2);
    CHECK(run({"dims", "--model", "builtin:a5"}).code == 2);
    CHECK(run({"spectra", "--model", "/nonexistent.json"}).code == 2);
    CHECK(run({"verify", "symmetry", "--alpha", "99"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("bounded-degree") != std::string::npos);
}

TEST_CASE("verification commands pass on built-ins") {
    CHECK(run({"verify", "haar-modular", "--model", "s3"}).code == 0);
    CHECK(run({"verify", "symmetry", "--model", "su_q_2", "--max-level", "8"}).code == 0);
    CHECK(run({"verify", "frobenius", "--model", "s3"}).code == 0);
    CHECK(run({"verify", "growth", "--model", "su_q_2", "--max-level", "6", "--alpha", "1"}).code == 0);
    CHECK(run({"kac", "--model", "z5"}).code == 0);
    CHECK(run({"cg", "--model", "su_q_2", "--beta", "1", "--gamma", "2"}).code == 0);
    CHECK(run({"fusion", "--model", "s3"}).out.find("triv + sign + std") != std::string::npos);
    CHECK(run({"models"}).code == 0);
    auto mt = run({"explore", "main-theorem", "--model", "su_q_2", "--max-level", "16", "--steps", "4", "--format",
                   "json"});
    CHECK(mt.code == 0);
    CHECK(nlohmann::json::parse(mt.out)["parameters"]["refine_outcome"] == "dimension_escape");
    CHECK(run({"explore", "corollary-6.5", "--model", "su_q_2", "--max-level", "20", "--bound", "20", "--budget",
               "20"})
              .code == 0);
    CHECK(run({"explore", "corollary-6.5", "--model", "su_q_2", "--max-level", "20", "--bound", "20", "--budget",
               "5"})
              .code == 1);
}

TEST_CASE("json reports are reproducible") {
    const std::vector<std::string> args{"bounded-degree", "--model", "s3", "--r", "5", "--strategy", "random",
                                        "--trials", "300", "--seed", "7", "--format", "json"};
    auto a = run(args);
    auto threads = args;
    threads.insert(threads.end(), {"--threads", "1"});
    auto b = run(threads);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("export and reload through a file") {
    const auto path = std::filesystem::temp_directory_path() / "cqg_cli_export_test.json";
    auto e = run({"export", "--model", "su_q_2", "--q", "0.8", "--max-level", "3", "--out", path.string()});
    REQUIRE(e.code == 0);
    auto s = run({"verify", "theorem-5.3", "--model", path.string(), "--format", "csv"});
    CHECK(s.code == 0);
    auto direct = run({"verify", "theorem-5.3", "--model", "su_q_2", "--q", "0.8", "--max-level", "3", "--format",
                       "csv"});
    CHECK(s.out == direct.out);
    std::filesystem::remove(path);
}
