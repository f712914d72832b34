#include "apbmtrack/ssm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace apbmtrack {

Mat symmetrize_and_repair(const Mat& cov) {
  if (cov.rows() != cov.cols()) {
    throw DimensionError("symmetrize_and_repair: matrix must be square, got " +
                         std::to_string(cov.rows()) + "x" + std::to_string(cov.cols()));
  }
  Mat sym = 0.5 * (cov + cov.transpose());
  if (!sym.allFinite()) {
    throw NumericalError("symmetrize_and_repair: non-finite entries", cov);
  }
  if (sym.rows() == 0) return sym;

  const double floor = 1e-12 * std::max(1.0, sym.diagonal().maxCoeff());

  // Fast path: if sym - floor*I is positive definite, nothing is below the
  // floor and the symmetrized matrix can be returned untouched.
  Mat shifted = sym;
  shifted.diagonal().array() -= floor;
  if (Eigen::LLT<Mat>(shifted).info() == Eigen::Success) return sym;

  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success) {
    throw NumericalError("symmetrize_and_repair: eigendecomposition failed", cov);
  }
  Vec evals = es.eigenvalues();
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < floor) evals(i) = floor;
  }
  Mat repaired = es.eigenvectors() * evals.asDiagonal() * es.eigenvectors().transpose();
  return 0.5 * (repaired + repaired.transpose());
}

double wrap_angle(double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("wrap_angle: input must be finite");
  }
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(a + pi, 2.0 * pi);
  if (r <= 0.0) r += 2.0 * pi;
  return r - pi;
}

}  // namespace apbmtrack
