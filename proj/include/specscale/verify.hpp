#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specscale/geometry.hpp"
#include "specscale/random.hpp"

namespace specscale {

/// Hermitian C with 0 <= C <= I.
class PositiveContraction {
 public:
  explicit PositiveContraction(ComplexMatrix c);
  const ComplexMatrix& matrix() const { return c_; }

 private:
  ComplexMatrix c_;
};

/// C = V diag(s) V* with Haar V and s uniform in [0, 1]^n.
PositiveContraction sample_positive_contraction(Eigen::Index n, Rng& rng);

/// (tau(C), tau(A1 C), tau(A2 C)).
Vec3 scale_point(const CartesianPair& pair, const PositiveContraction& c);

/// Brute-force lower bound on h(u): best of 0, I, the analytic maximizer P+
/// and `n_samples` random contractions.
double oracle_support(const CartesianPair& pair, const Vec3& u, int n_samples, Rng& rng);

enum class Subject { thm_2_1, rmk_2_2, lemma_2_3, rmk_2_4, thm_2_5 };

std::string to_string(Subject s);

/// One verified case. `passed` is residual <= tolerance; boolean checks use
/// tolerance 0 with residual counting disagreements.
struct CaseRecord {
  std::string name;
  bool applicable = true;
  bool passed = true;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string note;
};

/// Aggregate over cases. max_residual is the worst residual / tolerance
/// ratio (disagreement counts map to count + 1), so passed <=> max_residual <= 1.
struct VerificationReport {
  Subject subject = Subject::thm_2_1;
  bool passed = true;
  bool applicable = true;
  double max_residual = 0.0;
  std::vector<CaseRecord> details;
  std::optional<std::uint64_t> seed;

  void add(CaseRecord rec);
  /// Appends all cases of `other` (same subject).
  void merge(const VerificationReport& other);
};

inline constexpr double kThm21Tol = 1e-9;
inline constexpr double kRmk22MatrixTol = 1e-12;
inline constexpr double kRmk22SupportTol = 1e-9;
inline constexpr double kLemmaRootTol = 1e-8;
inline constexpr double kLemmaKernelTol = 1e-10;
inline constexpr int kThetaGrid = 720;
inline constexpr double kNormalTol = 1e-10;
inline constexpr double kRealityTol = 1e-8;

VerificationReport verify_theorem_2_1(const CartesianPair& pair,
                                      const std::vector<Direction2>& directions,
                                      int grid_size = 360, const std::string& name = "pair");

/// Matrix identity pi_t = R_t^T Q_t; with a pair, also the support function of
/// pi_t(B(A)) against the planar support function of B(A_t).
VerificationReport verify_remark_2_2(const Direction2& t, const CartesianPair* pair = nullptr,
                                     int grid_size = 360, const std::string& name = "t");

VerificationReport verify_lemma_2_3(const CartesianPair& pair, double tol = kPencilTol,
                                    const std::string& name = "pair");

/// The five conditions of the horizontal-face equivalence at a direction t.
struct ConditionSet {
  bool kernel = false;          // 0 in sigma(A_t)
  bool pencil_root = false;     // tan(theta_t) in the real pencil spectrum (or infinity)
  bool flat_2d = false;         // horizontal segment in the polygon B(A_t)
  bool flat_projected = false;  // x-parallel face of Q_t(B(A)) by support data
  bool flat_3d = false;         // exposed face by (0, t1, t2) with x-extent > tol

  bool agree() const {
    return kernel == pencil_root && kernel == flat_2d && kernel == flat_projected &&
           kernel == flat_3d;
  }
};

ConditionSet evaluate_conditions(const CartesianPair& pair, const PencilSpectrum& spec,
                                 const Direction2& t, double tol = kPencilTol);

VerificationReport verify_theorem_2_5(const CartesianPair& pair, double tol = kPencilTol,
                                      const std::string& name = "pair");

VerificationReport verify_remark_2_4(const CartesianPair& pair, double tol = kPencilTol,
                                     const std::string& name = "pair");

struct NamedPair {
  std::string name;
  CartesianPair pair;
};

/// The analytic examples: flat square, axis pair, Pauli pair, shifted square,
/// diagonal normal, 1x1 pair and the singular pencil.
std::vector<NamedPair> fixed_examples();

struct SuiteConfig {
  int hermitian_pairs = 12;
  int min_n = 2;
  int max_n = 6;
  int directions_per_pair = 8;
  int grid = 360;
  int normal_matrices = 12;
  int remark_2_2_directions = 200;
  int remark_2_2_pairs = 4;
  double tol = kPencilTol;
  int threads = 1;
  bool include_fixed = true;
};

/// One report per subject, in Subject order. Deterministic in (config, seed)
/// and independent of config.threads.
std::vector<VerificationReport> run_suite(const SuiteConfig& config, std::uint64_t seed);

}  // namespace specscale
