#include "specscale/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "specscale/parallel.hpp"

namespace specscale {
namespace {

constexpr double kPi = std::numbers::pi;

// Distance between two angles on the projective line (theta ~ theta + pi).
double projective_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

ComplexMatrix diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

PositiveContraction::PositiveContraction(ComplexMatrix c) : c_(std::move(c)) {
  require_square_finite(c_, "C");
  if (!is_hermitian(c_)) throw ValidationError("contraction must be Hermitian");
  const auto lam = detail::eigenvalues_unchecked(c_);
  if (lam(0) < -1e-12 || lam(lam.size() - 1) > 1.0 + 1e-12) {
    throw ValidationError("contraction eigenvalues must lie in [0, 1]");
  }
}

PositiveContraction sample_positive_contraction(Eigen::Index n, Rng& rng) {
  if (n < 1) throw DimensionError("contraction dimension must be >= 1");
  const ComplexMatrix v = random_unitary(n, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd s(n);
  for (Eigen::Index k = 0; k < n; ++k) s(k) = unit(rng);
  ComplexMatrix c = v * s.cast<Complex>().asDiagonal() * v.adjoint();
  c = 0.5 * (c + c.adjoint()).eval();
  return PositiveContraction(std::move(c));
}

Vec3 scale_point(const CartesianPair& pair, const PositiveContraction& c) {
  const auto& m = c.matrix();
  return {normalized_trace(m).real(), normalized_trace(pair.a1() * m).real(),
          normalized_trace(pair.a2() * m).real()};
}

double oracle_support(const CartesianPair& pair, const Vec3& u, int n_samples, Rng& rng) {
  require_unit(u);
  if (n_samples < 100) throw ValidationError("oracle_support needs at least 100 samples");
  const Eigen::Index n = pair.n();
  double best = 0.0;  // C = 0
  auto consider = [&](const ComplexMatrix& c) {
    best = std::max(best, u.dot(scale_point(pair, PositiveContraction(c))));
  };
  consider(ComplexMatrix::Identity(n, n));
  consider(spectral_split(support_matrix(pair, u)).plus);
  for (int k = 0; k < n_samples; ++k) {
    best = std::max(best, u.dot(scale_point(pair, sample_positive_contraction(n, rng))));
  }
  return best;
}

std::string to_string(Subject s) {
  switch (s) {
    case Subject::thm_2_1: return "thm-2.1";
    case Subject::rmk_2_2: return "rmk-2.2";
    case Subject::lemma_2_3: return "lemma-2.3";
    case Subject::rmk_2_4: return "rmk-2.4";
    case Subject::thm_2_5: return "thm-2.5";
  }
  return "unknown";
}

void VerificationReport::add(CaseRecord rec) {
  if (rec.applicable) {
    rec.passed = rec.residual <= rec.tolerance;
    const double ratio = rec.tolerance > 0.0 ? rec.residual / rec.tolerance
                                             : (rec.residual == 0.0 ? 0.0 : rec.residual + 1.0);
    max_residual = std::max(max_residual, ratio);
    passed = passed && rec.passed;
  } else {
    rec.passed = true;
  }
  bool any_applicable = rec.applicable;
  for (const auto& d : details) any_applicable = any_applicable || d.applicable;
  applicable = any_applicable;
  details.push_back(std::move(rec));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& d : other.details) add(d);
}

VerificationReport verify_theorem_2_1(const CartesianPair& pair,
                                      const std::vector<Direction2>& directions, int grid_size,
                                      const std::string& name) {
  VerificationReport rep;
  rep.subject = Subject::thm_2_1;
  double worst = 0.0;
  for (const auto& t : directions) worst = std::max(worst, check_theorem_2_1(pair, t, grid_size));
  rep.add({name, true, true, worst, kThm21Tol,
           std::to_string(directions.size()) + " directions, grid " + std::to_string(grid_size)});
  return rep;
}

VerificationReport verify_remark_2_2(const Direction2& t, const CartesianPair* pair, int grid_size,
                                     const std::string& name) {
  VerificationReport rep;
  rep.subject = Subject::rmk_2_2;
  const double t1 = t.t1();
  const double t2 = t.t2();
  // Explicit matrices for the raw (not canonicalized) direction.
  Mat3 q, r, pi;
  q << 1, 0, 0, 0, t1 * t1, t1 * t2, 0, t1 * t2, t2 * t2;
  r << 1, 0, 0, 0, t1, -t2, 0, t2, t1;
  pi << 1, 0, 0, 0, t1, t2, 0, 0, 0;
  double resid = (pi - r.transpose() * q).cwiseAbs().maxCoeff();

  const auto f = frame_transforms(t);
  Mat3 pic;
  pic << 1, 0, 0, 0, f.t.t1(), f.t.t2(), 0, 0, 0;
  resid = std::max(resid, (f.pi - pic).cwiseAbs().maxCoeff());
  resid = std::max(resid, (f.q - f.q.transpose()).cwiseAbs().maxCoeff());
  resid = std::max(resid, (f.q * f.q - f.q).cwiseAbs().maxCoeff());
  resid = std::max(resid, (f.r.transpose() * f.r - Mat3::Identity()).cwiseAbs().maxCoeff());
  resid = std::max(resid, std::abs(f.r.determinant() - 1.0));
  rep.add({name + ":matrix", true, true, resid, kRmk22MatrixTol, ""});

  if (pair != nullptr) {
    const auto lam = detail::eigenvalues_unchecked(a_t(*pair, t));
    double worst = 0.0;
    for (int k = 0; k < grid_size; ++k) {
      const double phi = 2.0 * kPi * k / grid_size;
      const double a = std::cos(phi);
      const double b = std::sin(phi);
      // h_{pi(B)}(a, b, 0) = h_B(pi^T (a, b, 0)) = h_B(a, b t1, b t2).
      const Vec3 u = pi.transpose() * Vec3(a, b, 0.0);
      const double lhs = support_value(*pair, u.normalized()) * u.norm();
      worst = std::max(worst, std::abs(lhs - support_2d(lam, a, b)));
    }
    rep.add({name + ":support", true, true, worst, kRmk22SupportTol,
             "grid " + std::to_string(grid_size)});
  }
  return rep;
}

VerificationReport verify_lemma_2_3(const CartesianPair& pair, double tol,
                                    const std::string& name) {
  VerificationReport rep;
  rep.subject = Subject::lemma_2_3;
  if (pair.a2_is_zero()) {
    rep.add({name, false, true, 0.0, 0.0, "not applicable: A2 = 0"});
    return rep;
  }
  const auto spec = pencil_spectrum_geig(pair, tol);
  if (!spec.regular) {
    rep.add({name, false, true, 0.0, 0.0, "not applicable: singular pencil"});
    return rep;
  }

  // sigma_min(A_t) relative to ||A_t||; the bound |t1| ||A1|| + |t2| ||A2|| stands
  // in when A_t itself vanishes (n = 1 at a root).
  const double n1 = op_norm(pair.a1());
  const double n2 = op_norm(pair.a2());
  auto kernel_ratio = [&](const Direction2& t) {
    const auto lam = detail::eigenvalues_unchecked(a_t(pair, t));
    const double norm = std::max(lam.cwiseAbs().maxCoeff(),
                                 std::abs(t.t1()) * n1 + std::abs(t.t2()) * n2);
    return norm == 0.0 ? 0.0 : lam.cwiseAbs().minCoeff() / norm;
  };

  // Root -> kernel: every real root (and infinity) makes A_t singular.
  double worst_ratio = 0.0;
  for (double r : spec.real_subset) {
    worst_ratio = std::max(worst_ratio, kernel_ratio(direction_for_root(r)));
  }
  if (spec.has_infinity) worst_ratio = std::max(worst_ratio, kernel_ratio(Direction2(0.0, 1.0)));
  rep.add({name + ":root->kernel", true, true, worst_ratio, kLemmaRootTol,
           std::to_string(spec.real_subset.size()) + " real roots" +
               (spec.has_infinity ? " + infinity" : "")});

  // Kernel -> root on the theta grid: a near-kernel needs a nearby root.
  const double step = kPi / kThetaGrid;
  double worst_gap = 0.0;
  int hits = 0;
  for (int k = 0; k < kThetaGrid; ++k) {
    const double theta = -kPi / 2 + k * step;
    const Direction2 t = Direction2::from_angle(theta);
    if (kernel_ratio(t) > kLemmaKernelTol) continue;
    ++hits;
    double gap = kPi;
    for (double r : spec.real_subset) gap = std::min(gap, projective_distance(theta, std::atan(r)));
    if (spec.has_infinity) gap = std::min(gap, projective_distance(theta, kPi / 2));
    worst_gap = std::max(worst_gap, gap);
  }
  rep.add({name + ":kernel->root", true, true, worst_gap, step,
           std::to_string(hits) + " grid kernels"});
  return rep;
}

ConditionSet evaluate_conditions(const CartesianPair& pair, const PencilSpectrum& spec,
                                 const Direction2& t_in, double tol) {
  const auto f = frame_transforms(t_in);
  const Direction2& t = f.t;
  const ComplexMatrix at = a_t(pair, t);
  const auto lam = detail::eigenvalues_unchecked(at);
  const double s = std::max(1.0, lam.cwiseAbs().maxCoeff());
  const double thr = tol * s;
  ConditionSet c;

  c.kernel = lam.cwiseAbs().minCoeff() <= thr;

  if (f.tan_theta.infinite) {
    c.pencil_root = spec.has_infinity;
  } else {
    for (double r : spec.real_subset) {
      c.pencil_root = c.pencil_root || projective_distance(f.theta, std::atan(r)) <= tol;
    }
    if (spec.has_infinity) {
      c.pencil_root = c.pencil_root || projective_distance(f.theta, kPi / 2) <= tol;
    }
  }

  c.flat_2d = !horizontal_segments_2d(scale_polygon_selfadjoint(at), tol).empty();

  // x-extent of the face of Q_t(B(A)) exposed by (0, t1, t2): symmetric second
  // difference of its support function along e_x. Each zero eigenvalue of A_t
  // contributes 1/n; eigenvalues beyond the step contribute nothing.
  const double eps = 4.0 * thr;
  const double n = static_cast<double>(pair.n());
  double rot_gap = 0.0;
  auto probe = [&](double x) {
    const Vec3 w(x, t.t1(), t.t2());
    const double proj = projected_support(pair, t, w);
    const double rot = rotated_scale_support(pair, t, w.normalized()) * w.norm();
    rot_gap = std::max(rot_gap, std::abs(proj - rot));
    return proj;
  };
  const double extent = (probe(eps) + probe(-eps) - 2.0 * probe(0.0)) / eps;
  c.flat_projected = rot_gap <= kThm21Tol && extent >= 0.5 / n;

  c.flat_3d = exposed_face(pair, Vec3(0.0, t.t1(), t.t2()), tol).x_extent > tol;
  return c;
}

VerificationReport verify_theorem_2_5(const CartesianPair& pair, double tol,
                                      const std::string& name) {
  VerificationReport rep;
  rep.subject = Subject::thm_2_5;
  if (pair.a2_is_zero()) {
    rep.add({name, false, true, 0.0, 0.0, "not applicable: A2 = 0"});
    return rep;
  }
  const auto spec = pencil_spectrum_geig(pair, tol);
  if (!spec.regular) {
    rep.add({name, false, true, 0.0, 0.0, "not applicable: singular pencil"});
    return rep;
  }

  std::vector<Direction2> candidates;
  for (double r : spec.real_subset) candidates.push_back(direction_for_root(r));
  if (spec.has_infinity) candidates.emplace_back(0.0, 1.0);
  for (int k = 0; k < kThetaGrid; ++k) {
    candidates.push_back(Direction2::from_angle(-kPi / 2 + k * kPi / kThetaGrid));
  }

  int disagreements = 0;
  int flat = 0;
  const double n = static_cast<double>(pair.n());
  for (const auto& t : candidates) {
    const auto c = evaluate_conditions(pair, spec, t, tol);
    if (!c.agree()) ++disagreements;
    flat += c.kernel ? 1 : 0;
    // x-extent law: extent equals (number of kernel eigenvalues) / n.
    const auto f = frame_transforms(t);
    const auto lam = detail::eigenvalues_unchecked(a_t(pair, f.t));
    const double thr = split_threshold(lam, tol);
    const auto zeros = (lam.array().abs() <= thr).count();
    const auto face = exposed_face(pair, Vec3(0.0, f.t.t1(), f.t.t2()), tol);
    if (face.x_extent != static_cast<double>(zeros) / n) ++disagreements;
  }

  const auto faces = horizontal_faces_3d(pair, tol);
  disagreements += static_cast<int>(faces.unmatched_faces.size() + faces.unmatched_roots.size());

  rep.add({name, true, true, static_cast<double>(disagreements), 0.0,
           std::to_string(candidates.size()) + " directions, " + std::to_string(flat) +
               " flat, " + std::to_string(faces.matched.size()) + " matched faces"});
  return rep;
}

VerificationReport verify_remark_2_4(const CartesianPair& pair, double tol,
                                     const std::string& name) {
  VerificationReport rep;
  rep.subject = Subject::rmk_2_4;
  const ComplexMatrix a = pair.full();
  const double na = op_norm(a);
  const double comm = op_norm(a * a.adjoint() - a.adjoint() * a);
  if (comm > kNormalTol * na * na) {
    rep.add({name, false, true, 0.0, 0.0, "not applicable: A not normal (" + fmt(comm) + ")"});
    return rep;
  }
  if (pair.a2_is_zero() || a2_singular(pair, tol)) {
    rep.add({name, false, true, 0.0, 0.0, "not applicable: A2 not invertible"});
    return rep;
  }
  const auto spec = pencil_spectrum_geig(pair, tol);
  double worst = 0.0;
  for (const auto& z : spec.finite) worst = std::max(worst, std::abs(z.imag()) / (1.0 + std::abs(z)));
  rep.add({name, true, true, worst, kRealityTol,
           std::to_string(spec.finite.size()) + " finite eigenvalues"});
  return rep;
}

std::vector<NamedPair> fixed_examples() {
  const Complex i(0.0, 1.0);
  std::vector<NamedPair> out;
  out.push_back({"flat-square diag(1,-1)/I", CartesianPair(diag({1, -1}), diag({1, 1}))});
  out.push_back({"axis diag(0,1)/diag(1,0)", CartesianPair(diag({0, 1}), diag({1, 0}))});
  out.push_back({"pauli diag(1,-1)/sigma_x", CartesianPair(diag({1, -1}), mat2(0, 1, 1, 0))});
  out.push_back({"shifted diag(1.3,-0.7)/I", CartesianPair(diag({1.3, -0.7}), diag({1, 1}))});
  out.push_back({"normal diag(1+i,-1+i)", cartesian_decompose(mat2(1.0 + i, 0, 0, -1.0 + i))});
  out.push_back({"normal diag(i,1)", cartesian_decompose(mat2(i, 0, 0, 1))});
  out.push_back({"nilpotent [[0,1],[0,0]]", cartesian_decompose(mat2(0, 1, 0, 0))});
  out.push_back({"scalar 2/1", CartesianPair(diag({2}), diag({1}))});
  out.push_back({"singular diag(1,0)/diag(2,0)", CartesianPair(diag({1, 0}), diag({2, 0}))});
  return out;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config, std::uint64_t seed) {
  enum Stream : std::uint64_t { kPairs = 1, kNormals = 2, kRmk22Dirs = 3, kRmk22Pairs = 4 };
  const auto fixed = config.include_fixed ? fixed_examples() : std::vector<NamedPair>{};
  const std::vector<Direction2> fixed_ts = {Direction2(1, 0), Direction2(0, 1),
                                            Direction2(std::sqrt(0.5), std::sqrt(0.5)),
                                            Direction2(-0.6, 0.8)};

  auto draw_n = [&](Rng& rng) {
    std::uniform_int_distribution<int> d(config.min_n, std::max(config.min_n, config.max_n));
    return d(rng);
  };

  // Each job fills one slot; slots are merged in order afterwards.
  std::vector<std::function<VerificationReport()>> jobs;
  const double tol = config.tol;
  for (const auto& ex : fixed) {
    jobs.emplace_back([&] { return verify_theorem_2_1(ex.pair, fixed_ts, config.grid, ex.name); });
    jobs.emplace_back([&] { return verify_lemma_2_3(ex.pair, tol, ex.name); });
    jobs.emplace_back([&] { return verify_remark_2_4(ex.pair, tol, ex.name); });
    jobs.emplace_back([&] { return verify_theorem_2_5(ex.pair, tol, ex.name); });
  }
  if (config.include_fixed) {
    for (const auto& t : fixed_ts) {
      jobs.emplace_back([&, t] {
        return verify_remark_2_2(t, &fixed.front().pair, config.grid,
                                 "fixed t=(" + fmt(t.t1()) + "," + fmt(t.t2()) + ")");
      });
    }
  }
  for (int k = 0; k < config.hermitian_pairs; ++k) {
    auto make = [&config, seed, draw_n, k] {
      Rng rng = case_rng(seed, kPairs, static_cast<std::uint64_t>(k));
      const int n = draw_n(rng);
      auto pair = random_hermitian_pair(n, rng);
      std::vector<Direction2> ts;
      for (int j = 0; j < config.directions_per_pair; ++j) ts.push_back(random_direction(rng));
      return std::pair{std::move(pair), std::move(ts)};
    };
    const std::string name = "hermitian#" + std::to_string(k);
    jobs.emplace_back([=] {
      auto [pair, ts] = make();
      return verify_theorem_2_1(pair, ts, config.grid, name);
    });
    jobs.emplace_back([=] { return verify_lemma_2_3(make().first, tol, name); });
    jobs.emplace_back([=] { return verify_remark_2_4(make().first, tol, name); });
    jobs.emplace_back([=] { return verify_theorem_2_5(make().first, tol, name); });
  }
  for (int k = 0; k < config.normal_matrices; ++k) {
    jobs.emplace_back([=, &config] {
      Rng rng = case_rng(seed, kNormals, static_cast<std::uint64_t>(k));
      const int n = draw_n(rng);
      return verify_remark_2_4(cartesian_decompose(random_normal(n, rng)), tol,
                               "normal#" + std::to_string(k));
    });
  }
  jobs.emplace_back([=, &config] {
    VerificationReport rep;
    rep.subject = Subject::rmk_2_2;
    Rng rng = case_rng(seed, kRmk22Dirs, 0);
    for (int k = 0; k < config.remark_2_2_directions; ++k) {
      rep.merge(verify_remark_2_2(random_direction(rng), nullptr, config.grid,
                                  "random-t#" + std::to_string(k)));
    }
    return rep;
  });
  for (int k = 0; k < config.remark_2_2_pairs; ++k) {
    jobs.emplace_back([=, &config] {
      Rng rng = case_rng(seed, kRmk22Pairs, static_cast<std::uint64_t>(k));
      const int n = draw_n(rng);
      const auto pair = random_hermitian_pair(n, rng);
      return verify_remark_2_2(random_direction(rng), &pair, config.grid,
                               "pair#" + std::to_string(k));
    });
  }

  std::vector<VerificationReport> results(jobs.size());
  parallel_for(jobs.size(), config.threads, [&](std::size_t i) { results[i] = jobs[i](); });

  std::vector<VerificationReport> reports;
  for (Subject s : {Subject::thm_2_1, Subject::rmk_2_2, Subject::lemma_2_3, Subject::rmk_2_4,
                    Subject::thm_2_5}) {
    VerificationReport rep;
    rep.subject = s;
    rep.seed = seed;
    for (const auto& r : results) {
      if (r.subject == s) rep.merge(r);
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace specscale
