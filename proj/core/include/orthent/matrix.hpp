#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orthent/errors.hpp"

namespace orthent {

/// Parse a whitespace-tolerant, comma-separated matrix: one row per line.
/// Accepts CRLF line endings and trailing blank lines. Throws ParseError
/// with a row/column diagnostic on ragged rows, non-square shapes,
/// unparseable tokens, or non-finite values.
Eigen::MatrixXd parse_matrix(std::string_view text);

/// Render a matrix in the same format parse_matrix reads: %.17g entries
/// (round-trip exact for doubles), comma-separated, one row per line,
/// trailing newline.
std::string render_matrix(const Eigen::MatrixXd& m);

/// parse_matrix applied to the contents of a file. Throws ParseError if the
/// file cannot be read.
Eigen::MatrixXd load_matrix(const std::string& path);

/// max |(MᵀM − I)_ij| — zero for exactly orthogonal matrices.
double orthogonality_defect(const Eigen::MatrixXd& m);

/// A square matrix certified orthogonal at construction. Immutable; the
/// measured defect is kept for reporting.
class OrthogonalMatrix {
 public:
  static constexpr double kDefaultTol = 1e-10;

  /// Certify `m`: square, finite entries, orthogonality defect ≤ tol, and
  /// |det| within 1e-8 of 1. Throws ValidationError (with the measured
  /// defect in the message) otherwise.
  static OrthogonalMatrix validate(const Eigen::MatrixXd& m, double tol = kDefaultTol);

  const Eigen::MatrixXd& mat() const { return m_; }
  Eigen::Index n() const { return m_.rows(); }
  /// Defect measured at validation time.
  double defect() const { return defect_; }

 private:
  OrthogonalMatrix(Eigen::MatrixXd m, double defect)
      : m_(std::move(m)), defect_(defect) {}

  Eigen::MatrixXd m_;
  double defect_;
};

/// Orthogonal matrix drawn from the Haar (rotation-invariant) distribution:
/// Gaussian matrix → QR → columns sign-corrected so R has positive diagonal.
/// Deterministic for a fixed seed.
OrthogonalMatrix haar_random_orthogonal(int n, std::uint64_t seed);

/// Derive a per-stream seed from a master seed (splitmix64 over
/// master + (index+1)·golden-ratio increment). Streams for distinct indices
/// are statistically independent.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// Sylvester's doubling construction: the 2^k × 2^k {±1} Hadamard matrix.
/// k must lie in [0, 12] (n ≤ 4096); throws std::invalid_argument outside.
Eigen::MatrixXi sylvester_hadamard(int k);

/// The same matrix rescaled by n^{-1/2}, certified orthogonal.
OrthogonalMatrix rescaled_hadamard(int k);

/// The symmetric involution (2/n)·J − I (J = all-ones): orthogonal for every
/// n ≥ 2, entry magnitudes (n−2)/n once per row and 2/n elsewhere.
/// n must lie in [2, 4096].
OrthogonalMatrix family_matrix(int n);

/// Scale-quantized shape key, identical for matrices related by row/column
/// permutations or sign flips: entry magnitudes rounded to integer multiples
/// of `quantum`, rows sorted within themselves, then rows sorted
/// lexicographically.
struct CanonicalFingerprint {
  int n = 0;
  double quantum = 0.0;
  std::vector<std::vector<std::int64_t>> rows;  // sorted quanta, rows lex-sorted

  /// Stable text form: "n=<n>;rows=<r1>;<r2>;..." with magnitudes printed
  /// at the quantum's precision. Equal fingerprints ⇔ equal strings.
  std::string to_string() const;

  friend bool operator==(const CanonicalFingerprint&, const CanonicalFingerprint&) = default;
  friend auto operator<=>(const CanonicalFingerprint&, const CanonicalFingerprint&) = default;
};

/// Fingerprint of a matrix at the given quantum (default 1e-6: two matrices
/// agreeing entrywise in magnitude pattern to ~1e-6 collide).
CanonicalFingerprint canonical_fingerprint(const Eigen::MatrixXd& m, double quantum = 1e-6);

}  // namespace orthent
