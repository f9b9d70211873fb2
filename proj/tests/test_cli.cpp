#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "soergel/cli.hpp"
#include "soergel/json_io.hpp"

using soergel::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = soergel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("soergel_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors") {
  CHECK(run({}).code == soergel::cli::kUsage);
  CHECK(run({"decat", "hom-rank", "--word", "sts", "--bogus"}).code == soergel::cli::kUsage);
  CHECK(run({"hecke", "mul", "--left", "sx", "--right", "s"}).code == soergel::cli::kUsage);
  CHECK(run({"coxeter", "build", "--coxeter", "/nonexistent/file.json"}).code == soergel::cli::kUsage);
  CHECK(run({"--help"}).code == soergel::cli::kOk);
}

TEST_CASE("hom ranks of a word") {
  Result r = run({"decat", "hom-rank", "--word", "sts"});
  REQUIRE(r.code == 0);
  json j = r.report();
  CHECK(j["schema"] == "1");
  CHECK(j["command"] == "decat hom-rank");
  CHECK(j["shifts"] == json::array({0, 2}));
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"decat", "verify", "--type", "A3", "--max-len", "6", "--random", "50"};
  Result a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Result c = run({"hecke", "kl", "--type", "B2"}), d = run({"hecke", "kl", "--type", "B2"});
  CHECK(c.out == d.out);
}

TEST_CASE("Hecke products and KL expansion") {
  json mul = run({"hecke", "mul", "--left", "s", "--right", "s"}).report();
  CHECK(mul["product"].size() == 2);
  json kl = run({"decat", "kl-expand", "--word", "sts"}).report();
  CHECK(kl["positive"] == true);
  json nw = run({"decat", "nw", "--word", "sts"}).report();
  CHECK(nw["total"] == 8);
}

TEST_CASE("Coxeter matrix file") {
  std::string path = write_temp("b2.json", R"({"labels": ["a", "b"], "m": [[1, 4], [4, 1]]})");
  Result r = run({"coxeter", "build", "--coxeter", path});
  REQUIRE(r.code == 0);
  CHECK(r.report()["size"] == 8);
  std::string bad = write_temp("bad.json", R"({"labels": ["a", "b"], "m": [[1, 1], [4, 1]]})");
  CHECK(run({"coxeter", "build", "--coxeter", bad}).code == soergel::cli::kUsage);
}

TEST_CASE("representation predicates") {
  json j = run({"reps", "check", "--type", "I2(inf)"}).report();
  CHECK(j["rvf"]["holds"] == true);
  CHECK(j["rf"]["holds"] == false);
  CHECK(j["rf"]["witness"][0].get<std::string>().size() == 2);
  std::string path = write_temp("a2rep.json", R"({
    "dim": 2,
    "matrices": {"s": [["-1", "1"], ["0", "1"]], "t": [["1", "0"], ["1", "-1"]]}
  })");
  Result r = run({"reps", "check", "--rep", path});
  REQUIRE(r.code == 0);
  CHECK(r.report()["rf"]["holds"] == true);
}

TEST_CASE("bimodule commands") {
  Result hom = run({"bimod", "hom-rank", "--word", "sts", "--max-degree", "6"});
  CHECK(hom.code == 0);
  CHECK(hom.report()["shifts"] == json::array({0, 2}));
  Result dec = run({"bimod", "decompose", "--word", "sts"});
  CHECK(dec.code == 0);
  Result t2 = run({"bimod", "verify", "--theorem", "2", "--word", "sts"});
  CHECK(t2.code == 0);
}

TEST_CASE("a pair with zero subspace is rejected") {
  std::string path = write_temp("zero.json", R"({
    "dim": 2,
    "matrices": {"s": [["-1", "1"], ["0", "1"]], "t": [["1", "0"], ["1", "-1"]]},
    "subspace": []
  })");
  Result r = run({"bimod", "verify", "--theorem", "1", "--pair", path, "--word", "s"});
  CHECK(r.code == soergel::cli::kFailed);
}

TEST_CASE("full verification") {
  Result r = run({"verify-all"});
  CHECK(r.code == 0);
  CHECK(r.report()["failed"] == 0);
}

}
