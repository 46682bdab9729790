#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "specscale/io.hpp"
#include "specscale/random.hpp"

using namespace specscale;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " SPECSCALE_CLI " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path workdir() {
  const fs::path d = fs::temp_directory_path() / "specscale_cli_tests";
  fs::create_directories(d);
  return d;
}

std::string write_pair(const std::string& name, const std::string& a1, const std::string& a2,
                       int n) {
  const fs::path p = workdir() / name;
  const std::string zeros = n == 1 ? "[[0]]" : "[[0,0],[0,0]]";
  write_file(p, "{\"n\": " + std::to_string(n) + ", \"A1\": {\"re\": " + a1 + ", \"im\": " +
                    zeros + "}, \"A2\": {\"re\": " + a2 + ", \"im\": " + zeros + "}}");
  return p.string();
}

std::string flat_square_file() { return write_pair("flat.json", "[[1,0],[0,-1]]", "[[1,0],[0,1]]", 2); }
std::string singular_file() { return write_pair("sing.json", "[[1,0],[0,0]]", "[[2,0],[0,0]]", 2); }

}  // namespace

TEST_CASE("gen is deterministic and round-trips") {
  const auto a = (workdir() / "g1.json").string();
  const auto b = (workdir() / "g2.json").string();
  REQUIRE(run("gen --kind hermitian --n 4 --seed 9 --out " + a).code == 0);
  REQUIRE(run("gen --kind hermitian --n 4 --seed 9 --out " + b).code == 0);
  CHECK(read_file(a) == read_file(b));

  Rng rng = case_rng(9, 100, 0);
  const auto expected = random_hermitian_pair(4, rng);
  const auto parsed = parse_matrix_file(a);
  CHECK((parsed.a1() - expected.a1()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((parsed.a2() - expected.a2()).cwiseAbs().maxCoeff() == 0.0);

  const auto c = (workdir() / "normal.json").string();
  CHECK(run("gen --kind normal --n 3 --seed 1 --out " + c).code == 0);
  CHECK(parse_matrix_file(c).n() == 3);
  CHECK(run("gen --kind singular-pencil --n 1 --seed 1 --out " + c).code == 2);
}

TEST_CASE("scale writes a report and a mesh") {
  const auto in = flat_square_file();
  const auto mesh = (workdir() / "flat.obj").string();
  const auto r = run("scale --input " + in + " --directions 200 --mesh " + mesh);
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["tool"] == "specscale");
  CHECK(j["command"] == "scale");
  CHECK(j["input_digest"] == sha256_hex(read_file(in)));
  CHECK(j["payload"]["affine_dimension"] == 2);
  CHECK(read_file(mesh).find("# degenerate: dim=2") != std::string::npos);

  const auto rep = (workdir() / "scale.json").string();
  REQUIRE(run("scale --input " + in + " --directions 200 --report " + rep).code == 0);
  CHECK(Json::parse(read_file(rep)) == j);

  CHECK(run("scale --input " + in + " --directions 5").code != 0);
}

TEST_CASE("scale2d flags horizontal segments") {
  const auto r = run("scale2d --input " + flat_square_file() + " --t 1,1");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["payload"]["horizontal_segments"].size() == 2);
  CHECK(std::abs(j["payload"]["t"][0].get<double>() - std::sqrt(0.5)) < 1e-15);

  const auto none = Json::parse(run("scale2d --input " + flat_square_file() + " --t 1,0").out);
  CHECK(none["payload"]["horizontal_segments"].empty());
  CHECK(run("scale2d --input " + flat_square_file() + " --t 0,0").code == 2);
}

TEST_CASE("pencil reports both methods") {
  const auto r = run("pencil --input " + flat_square_file());
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  for (const char* m : {"geig", "detpoly"}) {
    const auto& s = j["payload"][m];
    CHECK(s["regular"] == true);
    REQUIRE(s["real_subset"].size() == 2);
    CHECK(std::abs(std::abs(s["real_subset"][0]["value"].get<double>()) - 1.0) < 1e-12);
  }
  const auto g = Json::parse(run("pencil --input " + flat_square_file() + " --method geig").out);
  CHECK(g["payload"].contains("geig"));
  CHECK_FALSE(g["payload"].contains("detpoly"));

  const auto s = Json::parse(run("pencil --input " + singular_file()).out);
  CHECK(s["payload"]["geig"]["regular"] == false);
  CHECK(s["payload"]["detpoly"]["regular"] == false);
}

TEST_CASE("faces exit codes") {
  const auto r = run("faces --input " + flat_square_file());
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["payload"]["matched"].size() == 2);

  CHECK(run("faces --input " + singular_file()).code == 3);
  const auto zero = write_pair("zero.json", "[[1,0],[0,2]]", "[[0,0],[0,0]]", 2);
  CHECK(run("faces --input " + zero).code == 2);
  CHECK(run("faces --input " + (workdir() / "missing.json").string()).code != 0);
}

TEST_CASE("verify exit codes and determinism") {
  const auto a = run("verify --seed 42");
  REQUIRE(a.code == 0);
  CHECK(a.out == run("verify --seed 42").out);
  CHECK(Json::parse(a.out)["passed"] == true);
  CHECK(Json::parse(a.out)["payload"].size() == 5);
  CHECK(a.out == run("verify --seed 42", "SPECSCALE_THREADS=1").out);
  CHECK(a.out == run("verify --seed 42", "SPECSCALE_THREADS=4").out);

  const auto sub = Json::parse(run("verify --seed 42 --subject 2.4").out);
  REQUIRE(sub["payload"].size() == 1);
  CHECK(sub["payload"][0]["subject"] == "rmk-2.4");

  const auto in = flat_square_file();
  CHECK(run("verify --input " + in).code == 0);
  const auto rep = (workdir() / "verify.json").string();
  const auto v = run("verify --input " + in + " --report " + rep);
  CHECK(read_file(rep) == v.out);

  const auto h = (workdir() / "h.json").string();
  REQUIRE(run("gen --kind hermitian --n 4 --seed 3 --out " + h).code == 0);
  CHECK(run("verify --input " + h).code == 0);
  CHECK(run("verify --input " + h + " --tol 0.5").code == 1);

  CHECK(run("verify --input " + singular_file()).code == 3);
  CHECK(run("verify --input " + singular_file() + " --subject 2.1").code == 0);
}

TEST_CASE("malformed input") {
  const auto bad = (workdir() / "bad.json").string();
  write_file(bad, "{\"n\": 2, \"A\": ");
  CHECK(run("pencil --input " + bad).code == 2);
  write_file(bad, R"({"n": 2, "A1": {"re": [[0,1],[0,0]], "im": [[0,0],[0,0]]},
                       "A2": {"re": [[1,0],[0,1]], "im": [[0,0],[0,0]]}})");
  CHECK(run("pencil --input " + bad).code == 2);
  CHECK(run("pencil --input " + bad + " --hermit-tol 10").code == 0);
}
