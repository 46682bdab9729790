#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "specscale/scale.hpp"
#include "specscale/verify.hpp"
#include "test_helpers.hpp"

using namespace specscale;
using namespace specscale::test;

TEST_CASE("positive contractions") {
  Rng rng = case_rng(73, 0, 0);
  const auto c1 = sample_positive_contraction(1, rng);
  const double s = c1.matrix()(0, 0).real();
  CHECK(s >= 0.0);
  CHECK(s <= 1.0);
  CHECK(c1.matrix()(0, 0).imag() == 0.0);

  CHECK_THROWS_AS(PositiveContraction(diag({1.5, 0.2})), ValidationError);
  CHECK_THROWS_AS(PositiveContraction(diag({-0.1, 0.2})), ValidationError);
  CHECK_THROWS_AS(PositiveContraction(mat2(0.5, 0.1, 0.0, 0.5)), ValidationError);
  CHECK_THROWS_AS(sample_positive_contraction(0, rng), DimensionError);

  const PositiveContraction id(diag({1, 1, 1}));
  const auto pair = random_hermitian_pair(3, rng);
  const Vec3 p = scale_point(pair, id);
  CHECK(p(0) == doctest::Approx(1.0));
  CHECK(p(1) == doctest::Approx(normalized_trace(pair.a1()).real()));
  CHECK(p(2) == doctest::Approx(normalized_trace(pair.a2()).real()));
}

TEST_CASE("sampled scale points are dominated by the support function") {
  Rng rng = case_rng(79, 0, 0);
  for (int k = 0; k < 20; ++k) {
    const auto pair = random_hermitian_pair(2 + k % 5, rng);
    const Vec3 p = scale_point(pair, sample_positive_contraction(pair.n(), rng));
    for (int j = 0; j < 20; ++j) {
      const Vec3 u = random_unit3(rng);
      CHECK(u.dot(p) <= support_value(pair, u) + 1e-12);
    }
  }
}

TEST_CASE("oracle_support: fixed values") {
  Rng rng = case_rng(83, 0, 0);
  CHECK(oracle_support(flat_square(), Vec3(0, 1, 0), 200, rng) == doctest::Approx(0.5));
  CHECK(oracle_support(flat_square(), Vec3(1, 0, 0), 200, rng) == doctest::Approx(1.0));
  CHECK(std::abs(oracle_support(flat_square(), Vec3(-1, 0, 0), 200, rng)) < 1e-15);
  CHECK_THROWS_AS(oracle_support(flat_square(), Vec3(1, 0, 0), 10, rng), ValidationError);
}

TEST_CASE("oracle_support: bounded by and attains the support function") {
  Rng rng = case_rng(89, 0, 0);
  for (int k = 0; k < 15; ++k) {
    const auto pair = random_hermitian_pair(2 + k % 6, rng);
    const Vec3 u = random_unit3(rng);
    const double h = support_value(pair, u);
    const double o = oracle_support(pair, u, 200, rng);
    CHECK(o <= h + 1e-12);
    CHECK(h - o <= 1e-10);
  }
}

TEST_CASE("subject labels") {
  CHECK(to_string(Subject::thm_2_1) == "thm-2.1");
  CHECK(to_string(Subject::rmk_2_2) == "rmk-2.2");
  CHECK(to_string(Subject::lemma_2_3) == "lemma-2.3");
  CHECK(to_string(Subject::rmk_2_4) == "rmk-2.4");
  CHECK(to_string(Subject::thm_2_5) == "thm-2.5");
}

TEST_CASE("report aggregation") {
  VerificationReport rep;
  rep.add({"a", true, true, 5e-10, 1e-9, ""});
  CHECK(rep.passed);
  CHECK(rep.max_residual == doctest::Approx(0.5));
  rep.add({"b", false, true, 1.0, 0.0, "n/a"});
  CHECK(rep.passed);
  rep.add({"c", true, true, 2.0, 0.0, ""});
  CHECK_FALSE(rep.passed);
  CHECK(rep.max_residual == 3.0);
  CHECK_FALSE(rep.details[2].passed);

  VerificationReport na;
  na.add({"x", false, true, 0.0, 0.0, ""});
  CHECK_FALSE(na.applicable);
  CHECK(na.passed);
}

TEST_CASE("verifiers pass on every fixed example") {
  const std::vector<Direction2> ts = {Direction2(1, 0), Direction2(0, 1),
                                      Direction2(std::sqrt(0.5), -std::sqrt(0.5))};
  for (const auto& ex : fixed_examples()) {
    INFO(ex.name);
    CHECK(verify_theorem_2_1(ex.pair, ts, 360, ex.name).passed);
    CHECK(verify_lemma_2_3(ex.pair, kPencilTol, ex.name).passed);
    CHECK(verify_theorem_2_5(ex.pair, kPencilTol, ex.name).passed);
    CHECK(verify_remark_2_4(ex.pair, kPencilTol, ex.name).passed);
  }
}

TEST_CASE("shifted square: pencil roots and horizontal faces") {
  const CartesianPair p(diag({1.3, -0.7}), diag({1, 1}));
  auto r = real_subset(pencil_spectrum_geig(p));
  std::sort(r.begin(), r.end());
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-1.3).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.7).epsilon(1e-12));
  const auto spec = pencil_spectrum_geig(p);
  for (double root : r) {
    const auto c = evaluate_conditions(p, spec, direction_for_root(root));
    CHECK(c.kernel);
    CHECK(c.agree());
  }
  const auto c = evaluate_conditions(p, spec, direction_for_root(0.1));
  CHECK_FALSE(c.kernel);
  CHECK(c.agree());
}

TEST_CASE("evaluate_conditions: infinity and random directions") {
  const auto ax = axis_pair();
  const auto spec = pencil_spectrum_geig(ax);
  const auto c = evaluate_conditions(ax, spec, Direction2(0, 1));
  CHECK(c.kernel);
  CHECK(c.pencil_root);
  CHECK(c.agree());

  Rng rng = case_rng(97, 0, 0);
  for (int k = 0; k < 20; ++k) {
    const auto p = random_hermitian_pair(2 + k % 5, rng);
    const auto s = pencil_spectrum_geig(p);
    const auto d = evaluate_conditions(p, s, random_direction(rng));
    CHECK(d.agree());
  }
}

TEST_CASE("not-applicable cases") {
  const CartesianPair sing(diag({1, 0}), diag({2, 0}));
  const auto l = verify_lemma_2_3(sing);
  CHECK_FALSE(l.applicable);
  CHECK(l.passed);
  CHECK_FALSE(verify_theorem_2_5(sing).applicable);

  const CartesianPair zero(diag({1, 0}), ComplexMatrix::Zero(2, 2));
  CHECK_FALSE(verify_lemma_2_3(zero).applicable);

  CHECK_FALSE(verify_remark_2_4(pauli_pair()).applicable);
  const auto nil = cartesian_decompose(mat2(0, 1, 0, 0));
  CHECK_FALSE(verify_remark_2_4(nil).applicable);
  // Normal with singular imaginary part.
  CHECK_FALSE(verify_remark_2_4(cartesian_decompose(mat2(Complex(0, 1), 0, 0, 1))).applicable);
  CHECK(verify_remark_2_4(cartesian_decompose(mat2(Complex(1, 1), 0, 0, Complex(-1, 1))))
            .applicable);
}

TEST_CASE("projection factorization over random directions") {
  Rng rng = case_rng(101, 0, 0);
  for (int k = 0; k < 200; ++k) CHECK(verify_remark_2_2(random_direction(rng)).passed);
  const auto p = random_hermitian_pair(4, rng);
  CHECK(verify_remark_2_2(random_direction(rng), &p, 360).passed);
}

TEST_CASE("random normal matrices satisfy the normal-case check") {
  Rng rng = case_rng(103, 0, 0);
  for (int k = 0; k < 20; ++k) {
    const auto rep = verify_remark_2_4(cartesian_decompose(random_normal(2 + k % 6, rng)));
    CHECK(rep.applicable);
    CHECK(rep.passed);
  }
}

namespace {

std::string fingerprint(const std::vector<VerificationReport>& reps) {
  std::string s;
  for (const auto& r : reps) {
    s += to_string(r.subject) + (r.passed ? "+" : "-");
    for (const auto& d : r.details) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", d.residual);
      s += d.name + ":" + buf + ";";
    }
  }
  return s;
}

}  // namespace

TEST_CASE("run_suite") {
  SuiteConfig cfg;
  cfg.hermitian_pairs = 4;
  cfg.normal_matrices = 4;
  cfg.remark_2_2_directions = 20;
  cfg.remark_2_2_pairs = 2;
  cfg.max_n = 4;

  SUBCASE("deterministic across thread counts") {
    const auto a = run_suite(cfg, 42);
    cfg.threads = 4;
    const auto b = run_suite(cfg, 42);
    CHECK(fingerprint(a) == fingerprint(b));
    REQUIRE(a.size() == 5);
    for (const auto& r : a) {
      CHECK(r.passed);
      CHECK(r.seed == std::uint64_t{42});
    }
    CHECK(fingerprint(run_suite(cfg, 43)) != fingerprint(a));
  }

  SUBCASE("n = 2 only is fast") {
    cfg.min_n = cfg.max_n = 2;
    const auto t0 = std::chrono::steady_clock::now();
    const auto reps = run_suite(cfg, 7);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 5.0);
    for (const auto& r : reps) CHECK(r.passed);
  }

  SUBCASE("empty ensemble runs the fixed examples") {
    cfg.hermitian_pairs = cfg.normal_matrices = cfg.remark_2_2_directions = 0;
    cfg.remark_2_2_pairs = 0;
    const auto reps = run_suite(cfg, 1);
    const auto names = fixed_examples();
    for (const auto& ex : names) {
      const auto& d = reps[4].details;
      CHECK(std::any_of(d.begin(), d.end(), [&](const CaseRecord& c) { return c.name == ex.name; }));
    }
    for (const auto& r : reps) CHECK(r.passed);
  }
}
