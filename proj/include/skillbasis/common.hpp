#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace skillbasis {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Error taxonomy mirrors the CLI exit codes: config 2, data 3, numerical 4.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// logsumexp with max-subtraction; Q magnitudes grow like 1/(1-gamma).
inline double logsumexp(const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  double m = row.maxCoeff();
  if (!std::isfinite(m)) return m;
  return m + std::log((row.array() - m).exp().sum());
}

// Row-wise logsumexp of an n x k matrix.
inline VectorXd logsumexp_rows(const MatrixXd& scores) {
  VectorXd out(scores.rows());
  for (Eigen::Index i = 0; i < scores.rows(); ++i)
    out[i] = logsumexp(scores.row(i));
  return out;
}

// Row-wise softmax with max-subtraction.
inline MatrixXd softmax_rows(const MatrixXd& scores) {
  MatrixXd out(scores.rows(), scores.cols());
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    double m = scores.row(i).maxCoeff();
    Eigen::RowVectorXd e = (scores.row(i).array() - m).exp();
    out.row(i) = e / e.sum();
  }
  return out;
}

inline double pearson(const Eigen::Ref<const VectorXd>& a,
                      const Eigen::Ref<const VectorXd>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw ConfigError("pearson: size mismatch or too few samples");
  const double ma = a.mean(), mb = b.mean();
  VectorXd da = a.array() - ma, db = b.array() - mb;
  double denom = std::sqrt(da.squaredNorm() * db.squaredNorm());
  if (denom == 0.0) return 0.0;
  return da.dot(db) / denom;
}

}  // namespace skillbasis
