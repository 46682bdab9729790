// specscale: spectral scale, pencil spectrum and horizontal-face tools.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "specscale/report.hpp"

using namespace specscale;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kSingular = 3 };

int thread_count() {
  if (const char* env = std::getenv("SPECSCALE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid SPECSCALE_THREADS=" << env << "\n";
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Input {
  CartesianPair pair;
  std::string digest;
};

Input load(const std::string& path, double hermit_tol) {
  const std::string text = read_file(path);
  return {parse_matrix_text(text, hermit_tol), sha256_hex(text)};
}

void emit(const Json& report, const std::string& path) {
  const std::string text = dump_json(report) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

Direction2 parse_t(const std::string& s) {
  std::istringstream in(s);
  double t1 = 0.0;
  double t2 = 0.0;
  char comma = 0;
  if (!(in >> t1 >> comma >> t2) || comma != ',' || !(in >> std::ws).eof()) {
    throw ParseError("--t expects T1,T2");
  }
  const double r = std::hypot(t1, t2);
  if (r == 0.0 || !std::isfinite(r)) throw ValidationError("--t must be a nonzero vector");
  // Accept loosely normalized input such as 0.7071,0.7071.
  return {t1 / r, t2 / r};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral scale of a complex matrix and its linear pencil"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string input;
  std::string report_path;
  double hermit_tol = kHermitTol;
  double tol = kPencilTol;

  // scale
  auto* scale_cmd = app.add_subcommand("scale", "Sample the 3-D spectral scale B(A)");
  int directions = kDefaultDirections;
  std::string mesh_path;
  scale_cmd->add_option("--input", input, "Matrix file")->required()->check(CLI::ExistingFile);
  scale_cmd->add_option("--directions", directions, "Number of sample directions")
      ->check(CLI::Range(20, 1000000));
  scale_cmd->add_option("--mesh", mesh_path, "Write hull as Wavefront OBJ");
  scale_cmd->add_option("--report", report_path, "Write JSON report");
  scale_cmd->add_option("--hermit-tol", hermit_tol);

  // scale2d
  auto* scale2d_cmd = app.add_subcommand("scale2d", "Exact polygon B(A_t) with horizontal segments");
  std::string t_text;
  scale2d_cmd->add_option("--input", input, "Matrix file")->required()->check(CLI::ExistingFile);
  scale2d_cmd->add_option("--t", t_text, "Direction T1,T2")->required();
  scale2d_cmd->add_option("--tol", tol, "Horizontal-slope tolerance");
  scale2d_cmd->add_option("--report", report_path, "Write JSON report");
  scale2d_cmd->add_option("--hermit-tol", hermit_tol);

  // pencil
  auto* pencil_cmd = app.add_subcommand("pencil", "Spectrum of A1 + lambda A2");
  std::string method = "both";
  pencil_cmd->add_option("--input", input, "Matrix file")->required()->check(CLI::ExistingFile);
  pencil_cmd->add_option("--method", method)->check(CLI::IsMember({"geig", "detpoly", "both"}));
  pencil_cmd->add_option("--tol", tol);
  pencil_cmd->add_option("--report", report_path, "Write JSON report");
  pencil_cmd->add_option("--hermit-tol", hermit_tol);

  // faces
  auto* faces_cmd = app.add_subcommand("faces", "Horizontal faces of B(A) vs real pencil roots");
  double match_tol = kMatchTol;
  faces_cmd->add_option("--input", input, "Matrix file")->required()->check(CLI::ExistingFile);
  faces_cmd->add_option("--tol", tol);
  faces_cmd->add_option("--match-tol", match_tol);
  faces_cmd->add_option("--report", report_path, "Write JSON report");
  faces_cmd->add_option("--hermit-tol", hermit_tol);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the consistency checks; exit 0 iff all pass");
  std::string subject = "all";
  int grid = 360;
  std::uint64_t seed = 42;
  verify_cmd->add_option("--input", input, "Matrix file (default: built-in suite)")
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--subject", subject)
      ->check(CLI::IsMember({"all", "2.1", "2.2", "2.3", "2.4", "2.5"}));
  verify_cmd->add_option("--grid", grid)->check(CLI::Range(8, 100000));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--tol", tol);
  verify_cmd->add_option("--report", report_path, "Also write JSON report to a file");
  verify_cmd->add_option("--hermit-tol", hermit_tol);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random matrix file");
  std::string kind;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string out_path;
  gen_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"hermitian", "normal", "singular-pencil"}));
  gen_cmd->add_option("--n", gen_n)->required()->check(CLI::Range(1, 10000));
  gen_cmd->add_option("--seed", gen_seed)->required();
  gen_cmd->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scale_cmd) {
      const auto in = load(input, hermit_tol);
      const auto body = scale_body(in.pair, directions, thread_count());
      if (!mesh_path.empty()) export_mesh(body, mesh_path);
      emit(make_report("scale", in.digest, {{"dimension_threshold", 1e-8}, {"split_tol", kSplitTol}},
                       to_json(body)),
           report_path);
      return kOk;
    }
    if (*scale2d_cmd) {
      const auto in = load(input, hermit_tol);
      const auto f = frame_transforms(parse_t(t_text));
      const ComplexMatrix at = a_t(in.pair, f.t);
      const auto poly = scale_polygon_selfadjoint(at);
      const Eigen::VectorXd lam = hermitian_eigenvalues(at);
      Json payload{{"t", Json::array({f.t.t1(), f.t.t2()})},
                   {"theta", f.theta},
                   {"eigenvalues", std::vector<double>(lam.begin(), lam.end())},
                   {"polygon", to_json(poly)},
                   {"horizontal_segments", to_json(horizontal_segments_2d(poly, tol))}};
      emit(make_report("scale2d", in.digest, {{"tol", tol}}, std::move(payload)), report_path);
      return kOk;
    }
    if (*pencil_cmd) {
      const auto in = load(input, hermit_tol);
      Json payload = Json::object();
      if (method == "geig" || method == "both") {
        payload["geig"] = to_json(pencil_spectrum_geig(in.pair, tol));
      }
      if (method == "detpoly" || method == "both") {
        payload["detpoly"] = to_json(pencil_spectrum_detpoly(in.pair, tol));
      }
      emit(make_report("pencil", in.digest, {{"tol", tol}}, std::move(payload)), report_path);
      return kOk;
    }
    if (*faces_cmd) {
      const auto in = load(input, hermit_tol);
      const auto rep = horizontal_faces_3d(in.pair, tol, match_tol);
      emit(make_report("faces", in.digest, {{"tol", tol}, {"match_tol", match_tol}}, to_json(rep)),
           report_path);
      return rep.unmatched_faces.empty() && rep.unmatched_roots.empty() ? kOk : kFailed;
    }
    if (*verify_cmd) {
      std::vector<VerificationReport> reports;
      std::string digest;
      bool singular = false;
      auto wanted = [&](const char* s) { return subject == "all" || subject == s; };
      if (input.empty()) {
        SuiteConfig config;
        config.grid = grid;
        config.tol = tol;
        config.threads = thread_count();
        for (auto& r : run_suite(config, seed)) {
          const std::string id = to_string(r.subject);
          if (wanted(id.substr(id.find('-') + 1).c_str())) reports.push_back(std::move(r));
        }
      } else {
        const auto in = load(input, hermit_tol);
        digest = in.digest;
        Rng rng = case_rng(seed, 0, 0);
        std::vector<Direction2> ts{Direction2(1, 0), Direction2(0, 1)};
        for (int k = 0; k < 64; ++k) ts.push_back(random_direction(rng));
        if (wanted("2.1")) reports.push_back(verify_theorem_2_1(in.pair, ts, grid, "input"));
        if (wanted("2.2")) {
          VerificationReport rep;
          rep.subject = Subject::rmk_2_2;
          for (std::size_t k = 0; k < ts.size(); ++k) {
            rep.merge(verify_remark_2_2(ts[k], &in.pair, grid, "t#" + std::to_string(k)));
          }
          reports.push_back(std::move(rep));
        }
        if (wanted("2.3")) reports.push_back(verify_lemma_2_3(in.pair, tol, "input"));
        if (wanted("2.4")) reports.push_back(verify_remark_2_4(in.pair, tol, "input"));
        if (wanted("2.5")) reports.push_back(verify_theorem_2_5(in.pair, tol, "input"));
        for (auto& r : reports) r.seed = seed;
        singular = !in.pair.a2_is_zero() && (wanted("2.3") || wanted("2.5")) &&
                   !pencil_spectrum_geig(in.pair, tol).regular;
      }
      bool passed = true;
      Json payload = Json::array();
      for (const auto& r : reports) {
        passed = passed && r.passed;
        payload.push_back(to_json(r));
      }
      Json report = make_report("verify", digest, {{"tol", tol}, {"grid", grid}}, std::move(payload));
      report["passed"] = passed;
      const std::string text = dump_json(report) + "\n";
      std::cout << text;
      if (!report_path.empty()) write_file(report_path, text);
      if (singular) {
        std::cerr << "error: pencil A1 + lambda A2 is singular; root/face checks not applicable\n";
        return kSingular;
      }
      return passed ? kOk : kFailed;
    }
    if (*gen_cmd) {
      Rng rng = case_rng(gen_seed, 100, 0);
      const std::string comment = "gen --kind " + kind + " --n " + std::to_string(gen_n) +
                                  " --seed " + std::to_string(gen_seed);
      std::string text;
      if (kind == "hermitian") {
        text = pair_file_text(random_hermitian_pair(gen_n, rng), comment);
      } else if (kind == "normal") {
        text = matrix_file_text(random_normal(gen_n, rng), comment);
      } else {
        if (gen_n < 2) throw ValidationError("singular-pencil needs n >= 2");
        text = pair_file_text(random_singular_pair(gen_n, rng), comment);
      }
      write_file(out_path, text);
      return kOk;
    }
  } catch (const SingularPencilError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
