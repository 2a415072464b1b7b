#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "orthent/critical.hpp"
#include "orthent/entropy.hpp"
#include "orthent/manifold.hpp"
#include "orthent/matrix.hpp"
#include "orthent/report.hpp"
#include "orthent/search.hpp"

#ifndef ORTHENT_VERSION
#define ORTHENT_VERSION "dev"
#endif

namespace orthent {

namespace {

// Exit-code contract.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kNumerical = 3;

// Raised when every restart of a search fails to converge.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when --out cannot be written.
struct FileWriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Write a report to FILE plus a FILE.meta sidecar holding the volatile
// metadata (timestamp, tool version) that must stay out of the report body
// so identical invocations produce byte-identical reports.
void write_report_file(const std::string& path, const std::string& doc) {
  {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FileWriteError("cannot write file: " + path);
    f << doc;
    if (!f) throw FileWriteError("cannot write file: " + path);
  }
  std::ofstream meta(path + ".meta", std::ios::binary);
  if (!meta) throw FileWriteError("cannot write file: " + path + ".meta");
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32] = "unknown";
  if (std::tm* tm = std::gmtime(&now)) std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", tm);
  meta << "written_at: " << stamp << "\ntool: orthent " << ORTHENT_VERSION << "\n";
}

OrthogonalMatrix load_orthogonal(const std::string& path) {
  return OrthogonalMatrix::validate(load_matrix(path));
}

struct EntropyArgs {
  std::string input;
  bool bits = false;
};

struct OptimizeArgs {
  int n = 0;
  double alpha = 1.0;
  int restarts = 50;
  std::uint64_t seed = 0;
  double tol = OptimizerConfig{}.grad_tol;
  int max_iters = OptimizerConfig{}.max_iters;
  std::string out_path;
};

struct ClassifyArgs {
  std::string input;
  double step = ClassifyConfig{}.step;
};

struct ResidualArgs {
  std::string input;
  std::vector<double> alphas;
};

int cmd_entropy(const EntropyArgs& a, std::ostream& out) {
  const OrthogonalMatrix o = load_orthogonal(a.input);
  const EntropyReport report = shannon_entropy(o);
  if (a.bits) {
    // Presentation-only conversion; reports always carry nats.
    const double ln2 = std::log(2.0);
    out << "n " << report.n << "\n";
    out << "entropy " << format_double(report.entropy) << " nats ("
        << format_double(report.entropy / ln2) << " bits)\n";
    out << "bound " << format_double(report.bound) << " nats ("
        << format_double(report.bound / ln2) << " bits)\n";
    out << "deficit " << format_double(report.deficit) << " nats ("
        << format_double(report.deficit / ln2) << " bits)\n";
    return kOk;
  }
  out << entropy_report_json(report, o.defect());
  return kOk;
}

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  OptimizerConfig config;
  config.alpha = a.alpha;
  config.max_iters = a.max_iters;
  config.grad_tol = a.tol;
  Catalog catalog;
  try {
    catalog = multistart_search(a.n, a.restarts, a.seed, config);
  } catch (const ValidationError& e) {
    throw NumericalFailure(e.what());
  }
  const std::string doc = catalog_json(catalog);
  if (a.out_path.empty())
    out << doc;
  else
    write_report_file(a.out_path, doc);
  return kOk;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const OrthogonalMatrix o = load_orthogonal(a.input);
  ClassifyConfig config;
  config.step = a.step;
  out << critical_point_json(classify_critical_point(o, config));
  return kOk;
}

int cmd_residual(const ResidualArgs& a, std::ostream& out) {
  const OrthogonalMatrix o = load_orthogonal(a.input);
  std::vector<StationarityResidual> residuals;
  residuals.reserve(a.alphas.size());
  for (const double alpha : a.alphas) residuals.push_back(stationarity_residual(o, alpha));
  out << residual_report_json(static_cast<int>(o.n()), o.defect(), residuals);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entropy landscapes on the orthogonal group O(n)", "orthent"};
  app.require_subcommand(1);

  EntropyArgs entropy_args;
  auto* entropy_cmd = app.add_subcommand(
      "entropy", "Entropy report for an orthogonal matrix read from a file");
  entropy_cmd->add_option("--input", entropy_args.input, "matrix text file")->required();
  entropy_cmd->add_flag("--bits", entropy_args.bits,
                        "human-readable display with a bits conversion instead of the report");

  OptimizeArgs optimize_args;
  auto* optimize_cmd =
      app.add_subcommand("optimize", "Multistart gradient-ascent search for entropy critical points");
  optimize_cmd->add_option("--n", optimize_args.n, "matrix dimension (≥ 2)")->required();
  optimize_cmd->add_option("--alpha", optimize_args.alpha, "objective exponent (1 = entropy)")
      ->capture_default_str();
  optimize_cmd->add_option("--restarts", optimize_args.restarts, "number of random starts")
      ->capture_default_str();
  optimize_cmd->add_option("--seed", optimize_args.seed, "master seed (required: no wall-clock default)")
      ->required();
  optimize_cmd->add_option("--tol", optimize_args.tol, "gradient-norm convergence threshold")
      ->capture_default_str();
  optimize_cmd->add_option("--max-iters", optimize_args.max_iters, "iteration cap per start")
      ->capture_default_str();
  optimize_cmd->add_option("--out", optimize_args.out_path,
                           "write the report here (plus a .meta sidecar) instead of stdout");

  ClassifyArgs classify_args;
  auto* classify_cmd =
      app.add_subcommand("classify", "Classify a stationary point via its tangent Hessian");
  classify_cmd->add_option("--input", classify_args.input, "matrix text file")->required();
  classify_cmd->add_option("--step", classify_args.step, "finite-difference step")
      ->capture_default_str();

  ResidualArgs residual_args;
  auto* residual_cmd = app.add_subcommand(
      "residual", "First-order stationarity residuals of the power-sum family");
  residual_cmd->add_option("--input", residual_args.input, "matrix text file")->required();
  residual_cmd->add_option("--alpha", residual_args.alphas, "exponent list (comma-separated)")
      ->required()
      ->delimiter(',');

  int hadamard_k = 0;
  bool hadamard_rescale = false;
  auto* hadamard_cmd =
      app.add_subcommand("hadamard", "Sylvester Hadamard matrix of order 2^k (k ≤ 12)");
  hadamard_cmd->add_option("--k", hadamard_k, "doubling exponent")->required();
  hadamard_cmd->add_flag("--rescale", hadamard_rescale,
                         "divide by √n so the output is orthogonal");

  int family_n = 0;
  auto* family_cmd = app.add_subcommand(
      "family", "Orthogonal matrix with per-row magnitudes {(n-2)/n, 2/n × (n-1)}");
  family_cmd->add_option("--n", family_n, "matrix dimension (≥ 2)")->required();

  int bound_n = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Entropy bound n ln n");
  bound_cmd->add_option("--n", bound_n, "matrix dimension (≥ 1)")->required();

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("orthent");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (entropy_cmd->parsed()) return cmd_entropy(entropy_args, out);
    if (optimize_cmd->parsed()) return cmd_optimize(optimize_args, out);
    if (classify_cmd->parsed()) return cmd_classify(classify_args, out);
    if (residual_cmd->parsed()) return cmd_residual(residual_args, out);
    if (hadamard_cmd->parsed()) {
      const Eigen::MatrixXi h = sylvester_hadamard(hadamard_k);
      if (hadamard_rescale)
        out << render_matrix(rescaled_hadamard(hadamard_k).mat());
      else
        out << render_matrix(h.cast<double>());
      return kOk;
    }
    if (family_cmd->parsed()) {
      out << render_matrix(family_matrix(family_n).mat());
      return kOk;
    }
    if (bound_cmd->parsed()) {
      out << format_double(entropy_bound(bound_n)) << "\n";
      return kOk;
    }
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const FileWriteError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand selected\n";
  return kUsage;
}

}  // namespace orthent
