#include "orthent/report.hpp"

#include <cmath>

#include "format_util.hpp"

namespace orthent {

namespace {

// JSON has no literal for non-finite doubles; fall back to null rather than
// emit an invalid document. Report values are finite in normal operation.
std::string jnum(double v) {
  if (!std::isfinite(v)) return "null";
  return detail::fmt_g17(v);
}

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

const char* jbool(bool b) { return b ? "true" : "false"; }

std::string jvec(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += jnum(v[i]);
  }
  out += ']';
  return out;
}

std::string jvec(const Eigen::VectorXd& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += jnum(v[i]);
  }
  out += ']';
  return out;
}

std::string jmat(const Eigen::MatrixXd& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += jnum(m(i, j));
    }
    out += ']';
  }
  out += ']';
  return out;
}

// The shared body of a critical-point object (no surrounding braces).
std::string critical_fields(const CriticalPointRecord& rec) {
  std::string out;
  out += "\"n\": " + std::to_string(rec.n) + ",\n";
  out += "  \"entropy\": " + jnum(rec.entropy) + ",\n";
  out += "  \"grad_norm\": " + jnum(rec.grad_norm) + ",\n";
  out += "  \"classification\": " + jstr(classification_string(rec.classification, rec.index)) +
         ",\n";
  out += "  \"index\": " + std::to_string(rec.index) + ",\n";
  out += "  \"eigenvalues\": " + jvec(rec.eigenvalues) + ",\n";
  out += "  \"hessian_asymmetry\": " + jnum(rec.hessian_asymmetry) + ",\n";
  out += "  \"probes\": {\"count\": " + std::to_string(rec.probes.count) +
         ", \"increases\": " + std::to_string(rec.probes.increases) +
         ", \"decreases\": " + std::to_string(rec.probes.decreases) + "},\n";
  out += "  \"non_smooth\": ";
  out += jbool(rec.non_smooth);
  out += ",\n";
  out += "  \"fingerprint\": " + jstr(rec.fingerprint.to_string()) + ",\n";
  out += "  \"matrix\": " + jmat(rec.matrix);
  return out;
}

}  // namespace

std::string format_double(double v) { return jnum(v); }

std::string entropy_report_json(const EntropyReport& report, double defect) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(report.n) + ",\n";
  out += "  \"entropy\": " + jnum(report.entropy) + ",\n";
  out += "  \"bound\": " + jnum(report.bound) + ",\n";
  out += "  \"deficit\": " + jnum(report.deficit) + ",\n";
  out += "  \"per_row\": " + jvec(report.per_row) + ",\n";
  out += "  \"orthogonality_defect\": " + jnum(defect) + "\n";
  out += "}\n";
  return out;
}

std::string critical_point_json(const CriticalPointRecord& record) {
  std::string out = "{\n  ";
  out += critical_fields(record);
  out += "\n}\n";
  return out;
}

std::string catalog_json(const Catalog& catalog) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(catalog.n) + ",\n";
  out += "  \"restarts\": " + std::to_string(catalog.restarts) + ",\n";
  out += "  \"master_seed\": " + std::to_string(catalog.master_seed) + ",\n";
  out += "  \"config\": {\"alpha\": " + jnum(catalog.config.alpha) +
         ", \"max_iters\": " + std::to_string(catalog.config.max_iters) +
         ", \"grad_tol\": " + jnum(catalog.config.grad_tol) +
         ", \"step_init\": " + jnum(catalog.config.step_init) +
         ", \"armijo_c\": " + jnum(catalog.config.armijo_c) +
         ", \"armijo_shrink\": " + jnum(catalog.config.armijo_shrink) + "},\n";
  out += "  \"converged\": " + std::to_string(catalog.converged_count) + ",\n";
  out += "  \"stalled\": " + std::to_string(catalog.stalled_count) + ",\n";
  out += "  \"runs\": [\n";
  for (std::size_t i = 0; i < catalog.runs.size(); ++i) {
    const RunSummary& r = catalog.runs[i];
    out += "    {\"run\": " + std::to_string(r.run) + ", \"seed\": " + std::to_string(r.seed) +
           ", \"iterations\": " + std::to_string(r.iterations) +
           ", \"entropy\": " + jnum(r.entropy) + ", \"grad_norm\": " + jnum(r.grad_norm) +
           ", \"converged\": " + jbool(r.converged) + ", \"stalled\": " + jbool(r.stalled) +
           ", \"fingerprint\": " + jstr(r.fingerprint) + "}";
    out += i + 1 < catalog.runs.size() ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"points\": [\n";
  for (std::size_t i = 0; i < catalog.points.size(); ++i) {
    const CatalogPoint& p = catalog.points[i];
    out += "    {";
    // Reuse the critical-point body, nudging its fixed two-space indent.
    std::string body = critical_fields(p.record);
    std::string indented;
    for (const char c : body) {
      indented += c;
      if (c == '\n') indented += "  ";
    }
    out += indented;
    out += ",\n    \"hits\": " + std::to_string(p.hits) +
           ",\n    \"first_run\": " + std::to_string(p.first_run) + "}";
    out += i + 1 < catalog.points.size() ? ",\n" : "\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

std::string residual_report_json(int n, double defect,
                                 const std::vector<StationarityResidual>& residuals) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(n) + ",\n";
  out += "  \"orthogonality_defect\": " + jnum(defect) + ",\n";
  out += "  \"residuals\": [\n";
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    const StationarityResidual& r = residuals[i];
    out += "    {\"alpha\": " + jnum(r.alpha) + ", \"max_abs\": " + jnum(r.max_abs) +
           ", \"residual\": " + jmat(r.r) + "}";
    out += i + 1 < residuals.size() ? ",\n" : "\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

}  // namespace orthent
