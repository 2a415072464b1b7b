#include "orthent/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "format_util.hpp"

namespace orthent {

namespace {

using detail::fmt_g17;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_field(std::string_view token, std::size_t row, std::size_t col) {
  std::string_view body = trim(token);
  if (body.empty()) {
    std::ostringstream os;
    os << "row " << row << ", column " << col << ": empty field";
    throw ParseError(os.str());
  }
  std::string_view digits = body;
  if (digits.front() == '+') digits.remove_prefix(1);  // from_chars rejects a leading '+'
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    std::ostringstream os;
    os << "row " << row << ", column " << col << ": cannot parse '" << std::string(body)
       << "' as a real number";
    throw ParseError(os.str());
  }
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "row " << row << ", column " << col << ": non-finite value '" << std::string(body) << "'";
    throw ParseError(os.str());
  }
  return value;
}

}  // namespace

Eigen::MatrixXd parse_matrix(std::string_view text) {
  std::vector<std::vector<double>> grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;  // blank lines carry no row

    std::vector<double> row;
    const std::size_t row_index = grid.size() + 1;
    std::size_t field_start = 0;
    while (true) {
      const auto comma = line.find(',', field_start);
      const std::string_view token = comma == std::string_view::npos
                                         ? line.substr(field_start)
                                         : line.substr(field_start, comma - field_start);
      row.push_back(parse_field(token, row_index, row.size() + 1));
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    if (!grid.empty() && row.size() != grid.front().size()) {
      std::ostringstream os;
      os << "row " << row_index << " has " << row.size() << " columns; expected "
         << grid.front().size() << " (from row 1)";
      throw ParseError(os.str());
    }
    grid.push_back(std::move(row));
  }

  if (grid.empty()) throw ParseError("no rows found");
  if (grid.size() != grid.front().size()) {
    std::ostringstream os;
    os << "matrix is " << grid.size() << "x" << grid.front().size() << "; expected square";
    throw ParseError(os.str());
  }
  Eigen::MatrixXd m(grid.size(), grid.front().size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = grid[i][j];
  return m;
}

std::string render_matrix(const Eigen::MatrixXd& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.size()) * 20);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += fmt_g17(m(i, j));
    }
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read file: " + path);
  return parse_matrix(buf.str());
}

double orthogonality_defect(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd gram = m.transpose() * m;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
      .cwiseAbs()
      .maxCoeff();
}

OrthogonalMatrix OrthogonalMatrix::validate(const Eigen::MatrixXd& m, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::invalid_argument("orthogonality tolerance must be positive and finite");
  if (m.size() == 0) throw ValidationError("matrix is empty");
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "matrix is " << m.rows() << "x" << m.cols() << "; expected square";
    throw ValidationError(os.str());
  }
  if (!m.allFinite()) throw ValidationError("matrix has non-finite entries");
  const double defect = orthogonality_defect(m);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "matrix is not orthogonal: defect " << fmt_g17(defect) << " exceeds tolerance "
       << fmt_g17(tol);
    throw ValidationError(os.str());
  }
  // |det| via LU in log space: the plain pivot product underflows to zero
  // for n in the thousands even though |det| = 1.
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  double log_abs_det = 0.0;
  double sign = static_cast<double>(lu.permutationP().determinant());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double pivot = lu.matrixLU()(i, i);
    if (pivot == 0.0) {
      log_abs_det = -std::numeric_limits<double>::infinity();
      sign = 0.0;
      break;
    }
    if (pivot < 0.0) sign = -sign;
    log_abs_det += std::log(std::abs(pivot));
  }
  const double abs_det = std::exp(log_abs_det);
  if (!(std::abs(abs_det - 1.0) <= 1e-8)) {
    std::ostringstream os;
    os << "matrix determinant " << fmt_g17(sign * abs_det)
       << " is not of unit magnitude (tolerance 1e-8)";
    throw ValidationError(os.str());
  }
  return OrthogonalMatrix(m, defect);
}

OrthogonalMatrix haar_random_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(eng);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd r = qr.matrixQR();
  // Fix the gauge: make R's diagonal positive so Q is the unique Haar draw
  // for this Gaussian sample rather than one of 2^n sign choices.
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return OrthogonalMatrix::validate(q, 1e-12);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over master + (index+1)·2^64/φ: independent streams per index.
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Eigen::MatrixXi sylvester_hadamard(int k) {
  if (k < 0 || k > 12)
    throw std::invalid_argument("doubling exponent must lie in [0, 12] (matrix order capped at 4096)");
  Eigen::MatrixXi h(1, 1);
  h(0, 0) = 1;
  for (int level = 0; level < k; ++level) {
    const Eigen::Index m = h.rows();
    Eigen::MatrixXi next(2 * m, 2 * m);
    next.topLeftCorner(m, m) = h;
    next.topRightCorner(m, m) = h;
    next.bottomLeftCorner(m, m) = h;
    next.bottomRightCorner(m, m) = -h;
    h = std::move(next);
  }
  return h;
}

OrthogonalMatrix rescaled_hadamard(int k) {
  const Eigen::MatrixXi h = sylvester_hadamard(k);
  const double scale = 1.0 / std::sqrt(static_cast<double>(h.rows()));
  return OrthogonalMatrix::validate(h.cast<double>() * scale);
}

OrthogonalMatrix family_matrix(int n) {
  if (n < 2 || n > 4096)
    throw std::invalid_argument("family matrix order must lie in [2, 4096]");
  // (2/n)J − I is symmetric and involutory, hence orthogonal: row dot
  // products telescope to n·(2/n)² − 2·(2/n)·... = δ exactly in ℝ.
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, 2.0 / n);
  m.diagonal().array() -= 1.0;
  return OrthogonalMatrix::validate(m, 1e-12);
}

std::string CanonicalFingerprint::to_string() const {
  const int frac = std::clamp(static_cast<int>(std::ceil(-std::log10(quantum))), 0, 17);
  char buf[64];
  std::string out = "n=" + std::to_string(n) + ";rows=";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ',';
      std::snprintf(buf, sizeof buf, "%.*f", frac, static_cast<double>(rows[i][j]) * quantum);
      out += buf;
    }
  }
  return out;
}

CanonicalFingerprint canonical_fingerprint(const Eigen::MatrixXd& m, double quantum) {
  if (!(quantum > 0.0) || !std::isfinite(quantum))
    throw std::invalid_argument("fingerprint quantum must be positive and finite");
  CanonicalFingerprint fp;
  fp.n = static_cast<int>(m.rows());
  fp.quantum = quantum;
  fp.rows.resize(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto& row = fp.rows[i];
    row.resize(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row[j] = std::llround(std::abs(m(i, j)) / quantum);
    std::sort(row.begin(), row.end());
  }
  std::sort(fp.rows.begin(), fp.rows.end());
  return fp;
}

}  // namespace orthent
