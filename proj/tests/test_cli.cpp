#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli.hpp"
#include "orthent/entropy.hpp"
#include "orthent/matrix.hpp"
#include "support.hpp"

using namespace orthent;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch files live in a per-process directory so parallel ctest runs
// cannot collide.
fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("orthent_cli_test_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("entropy subcommand reports landmark values") {
  const std::string fam3 = write_scratch("fam3.txt", render_matrix(family_matrix(3).mat()));
  const CliResult r = cli({"entropy", "--input", fam3});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"entropy\": 2.8948887690222831"));
  CHECK(contains(r.out, "\"bound\": 3.2958368660043291"));
  CHECK(r.err.empty());

  const std::string id3 = write_scratch("id3.txt", "1,0,0\n0,1,0\n0,0,1\n");
  const CliResult ri = cli({"entropy", "--input", id3});
  CHECK(ri.code == 0);
  CHECK(contains(ri.out, "\"entropy\": 0"));
  CHECK(contains(ri.out, "\"deficit\": 3.2958368660043291"));
}

TEST_CASE("entropy subcommand offers a bits display") {
  const std::string h2 = write_scratch("h2.txt", render_matrix(rescaled_hadamard(1).mat()));
  const CliResult r = cli({"entropy", "--input", h2, "--bits"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "bits"));
  CHECK(contains(r.out, "nats"));
  CHECK_FALSE(contains(r.out, "{"));  // presentation mode, not a report
}

TEST_CASE("entropy subcommand rejects non-orthogonal input with the defect") {
  const std::string bad = write_scratch("bad.txt", "1,1\n1,1\n");
  const CliResult r = cli({"entropy", "--input", bad});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "defect 2"));
  CHECK(r.out.empty());
}

TEST_CASE("entropy subcommand surfaces file problems as validation errors") {
  const CliResult missing = cli({"entropy", "--input", (scratch_dir() / "nope.txt").string()});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "cannot read file"));

  const std::string ragged = write_scratch("ragged.txt", "1,0,0\n0,1\n");
  const CliResult r = cli({"entropy", "--input", ragged});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "columns"));
}

TEST_CASE("optimize subcommand emits a deterministic catalog") {
  const CliResult r = cli({"optimize", "--n", "2", "--restarts", "5", "--seed", "11"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"restarts\": 5"));
  CHECK(contains(r.out, "\"converged\": 5"));
  CHECK(contains(r.out, "\"classification\": \"maximum\""));
  CHECK(contains(r.out, "\"master_seed\": 11"));

  const CliResult again = cli({"optimize", "--n", "2", "--restarts", "5", "--seed", "11"});
  CHECK(again.out == r.out);  // byte-identical
}

TEST_CASE("optimize subcommand writes report files plus a metadata sidecar") {
  const std::string out1 = (scratch_dir() / "cat1.json").string();
  const std::string out2 = (scratch_dir() / "cat2.json").string();
  const CliResult r1 =
      cli({"optimize", "--n", "2", "--restarts", "4", "--seed", "9", "--out", out1});
  const CliResult r2 =
      cli({"optimize", "--n", "2", "--restarts", "4", "--seed", "9", "--out", out2});
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.out.empty());  // report goes to the file, not stdout
  CHECK(slurp(out1) == slurp(out2));
  CHECK(fs::exists(out1 + ".meta"));
  CHECK(contains(slurp(out1 + ".meta"), "written_at:"));
  CHECK_FALSE(contains(slurp(out1), "written_at"));  // no timestamp in the body
}

TEST_CASE("optimize subcommand enforces the seed and usage contract") {
  const CliResult no_seed = cli({"optimize", "--n", "3"});
  CHECK(no_seed.code == 1);
  CHECK(contains(no_seed.err, "--seed"));

  const CliResult unknown = cli({"optimize", "--n", "3", "--seed", "1", "--frobnicate"});
  CHECK(unknown.code == 1);

  const CliResult bad_n = cli({"optimize", "--n", "1", "--seed", "1"});
  CHECK(bad_n.code == 1);  // domain error on a flag value is a usage error

  const CliResult bad_alpha = cli({"optimize", "--n", "3", "--seed", "1", "--alpha", "-2"});
  CHECK(bad_alpha.code == 1);
}

TEST_CASE("optimize subcommand reports total convergence failure as exit 3") {
  const CliResult r =
      cli({"optimize", "--n", "3", "--restarts", "2", "--seed", "1", "--max-iters", "1"});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "no run converged"));
}

TEST_CASE("classify subcommand labels the saddle and rejects non-stationary input") {
  const std::string saddle =
      write_scratch("saddle.txt", render_matrix(testing::saddle_matrix_3()));
  const CliResult r = cli({"classify", "--input", saddle});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"classification\": \"saddle(1)\""));
  CHECK(contains(r.out, "\"non_smooth\": true"));

  const std::string wander = write_scratch("wander.txt",
                                           render_matrix(haar_random_orthogonal(3, 77).mat()));
  const CliResult bad = cli({"classify", "--input", wander});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "not stationary"));
}

TEST_CASE("residual subcommand evaluates the requested exponent list") {
  const std::string fam3 = write_scratch("fam3r.txt", render_matrix(family_matrix(3).mat()));
  const CliResult r = cli({"residual", "--input", fam3, "--alpha", "0.5,1,1.5,2,3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"alpha\": 0.5"));
  CHECK(contains(r.out, "\"alpha\": 3"));
  CHECK(contains(r.out, "\"max_abs\": 0"));

  const CliResult no_alpha = cli({"residual", "--input", fam3});
  CHECK(no_alpha.code == 1);

  const CliResult bad_alpha = cli({"residual", "--input", fam3, "--alpha", "0"});
  CHECK(bad_alpha.code == 1);
}

TEST_CASE("hadamard subcommand emits matrix text, optionally rescaled") {
  const CliResult raw = cli({"hadamard", "--k", "2"});
  CHECK(raw.code == 0);
  const Eigen::MatrixXd h = parse_matrix(raw.out);
  REQUIRE(h.rows() == 4);
  CHECK(h.cwiseAbs().maxCoeff() == 1.0);
  CHECK(h.cwiseAbs().minCoeff() == 1.0);

  const CliResult scaled = cli({"hadamard", "--k", "2", "--rescale"});
  const Eigen::MatrixXd hs = parse_matrix(scaled.out);
  CHECK(orthogonality_defect(hs) <= 1e-12);
  CHECK(hs.cwiseAbs().maxCoeff() == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(cli({"hadamard", "--k", "13"}).code == 1);  // above the size cap
}

TEST_CASE("family subcommand emits exactly the two-magnitude matrix") {
  const CliResult r = cli({"family", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == render_matrix(family_matrix(3).mat()));
  CHECK(cli({"family", "--n", "1"}).code == 1);
}

TEST_CASE("bound subcommand prints n ln n at full precision") {
  const CliResult r = cli({"bound", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "3.2958368660043291\n");
  CHECK(cli({"bound", "--n", "0"}).code == 1);
}

TEST_CASE("top-level usage behavior") {
  CHECK(cli({}).code == 1);  // a subcommand is required
  const CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "optimize"));
  CHECK(contains(help.out, "classify"));
  CHECK(cli({"frobnicate"}).code == 1);
}
