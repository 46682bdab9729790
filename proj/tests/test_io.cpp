#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "specscale/io.hpp"
#include "specscale/pencil.hpp"
#include "specscale/random.hpp"
#include "test_helpers.hpp"

using namespace specscale;
using namespace specscale::test;

namespace {

bool message_has(const std::exception& e, const std::string& s) {
  return std::string(e.what()).find(s) != std::string::npos;
}

}  // namespace

TEST_CASE("parse: full matrix is split into its Cartesian parts") {
  // A = diag(0,1) + i diag(1,0)
  const auto p = parse_matrix_text(
      R"({"n": 2, "A": {"re": [[0, 0], [0, 1]], "im": [[1, 0], [0, 0]]}})");
  CHECK(max_abs(p.a1() - diag({0, 1})) == 0.0);
  CHECK(max_abs(p.a2() - diag({1, 0})) == 0.0);
}

TEST_CASE("parse: pair form and validation") {
  const auto p = parse_matrix_text(
      R"({"n": 1, "comment": "scalar", "A1": {"re": [[2]], "im": [[0]]},
          "A2": {"re": [[1]], "im": [[0]]}})");
  const auto r = real_subset(pencil_spectrum_geig(p));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(-2.0));

  try {
    parse_matrix_text(R"({"n": 2, "A1": {"re": [[0, 1], [0, 0]], "im": [[0, 0], [0, 0]]},
                          "A2": {"re": [[1, 0], [0, 1]], "im": [[0, 0], [0, 0]]}})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(message_has(e, "A1"));
  }
}

TEST_CASE("parse: malformed input") {
  try {
    parse_matrix_text("{\"n\": 2,\n \"A\": [1, 2,\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(message_has(e, "line"));
  }
  CHECK_THROWS_AS(parse_matrix_text("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"A": {"re": [[1]], "im": [[0]]}})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"n": 0, "A": {"re": [], "im": []}})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"n": 1})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"n": 1, "A": {"re": [[1]], "im": [[0]]},
                                        "A1": {"re": [[1]], "im": [[0]]}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"n": 1, "A": {"re": [["x"]], "im": [[0]]}})"),
                  ParseError);
  try {
    parse_matrix_text(R"({"n": 1, "A": {"re": [[1]]}})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(message_has(e, "im"));
  }
}

TEST_CASE("parse: dimension mismatch") {
  CHECK_THROWS_AS(parse_matrix_text(R"({"n": 2, "A": {"re": [[1, 0]], "im": [[0, 0], [0, 0]]}})"),
                  DimensionError);
  CHECK_THROWS_AS(
      parse_matrix_text(R"({"n": 2, "A": {"re": [[1, 0], [0]], "im": [[0, 0], [0, 0]]}})"),
      DimensionError);
}

TEST_CASE("serialization round trip is exact") {
  Rng rng = case_rng(107, 0, 0);
  for (int k = 0; k < 10; ++k) {
    const auto a = random_gaussian(2 + k % 5, rng);
    const auto p = cartesian_decompose(a);
    const auto back = parse_matrix_text(matrix_file_text(a, "gen"));
    CHECK(max_abs(back.a1() - p.a1()) == 0.0);
    CHECK(max_abs(back.a2() - p.a2()) == 0.0);

    const auto q = random_hermitian_pair(2 + k % 5, rng);
    const auto back2 = parse_matrix_text(pair_file_text(q, std::nullopt));
    CHECK(max_abs(back2.a1() - q.a1()) == 0.0);
    CHECK(max_abs(back2.a2() - q.a2()) == 0.0);
  }
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "specscale_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "pair.json";
  write_file(path, pair_file_text(flat_square(), "square"));
  const auto p = parse_matrix_file(path);
  CHECK(max_abs(p.a1() - flat_square().a1()) == 0.0);
  CHECK_THROWS_AS(read_file(dir / "missing.json"), IoError);
  CHECK_THROWS_AS(parse_matrix_file(dir / "missing.json"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("OBJ export") {
  const auto body = scale_body(flat_square(), 200);
  const auto text = mesh_obj_text(body);
  std::istringstream in(text);
  std::string line;
  int v = 0, f = 0;
  bool header = false, degenerate = false;
  while (std::getline(in, line)) {
    if (line == "# spectral scale hull") header = true;
    if (line == "# degenerate: dim=2") degenerate = true;
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  CHECK(header);
  CHECK(degenerate);
  CHECK(v == 4);
  CHECK(f == 2);

  const auto generic = scale_body(cartesian_decompose(mat2(1, Complex(0, 2), 0.5, -1)), 300);
  CHECK(mesh_obj_text(generic).find("degenerate") == std::string::npos);

  CHECK_THROWS_AS(mesh_obj_text(ScaleBody3D{}), ValidationError);
}

TEST_CASE("dump_json formatting") {
  Json j;
  j["x"] = 0.1;
  j["y"] = 2.0;
  j["k"] = 3;
  j["v"] = Json::array({1.5, -0.25});
  const auto s = dump_json(j);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("2.0") != std::string::npos);
  CHECK(s.find("\"k\": 3") != std::string::npos);
  CHECK(s.find("[1.5, -0.25]") != std::string::npos);
  CHECK(Json::parse(s) == j);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
