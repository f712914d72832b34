#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apbmtrack {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure (singular matrix, non-finite value, ...). Carries the
/// offending matrix when one is available so callers can inspect it.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
  NumericalError(const std::string& msg, Mat offending)
      : std::runtime_error(msg), offending_(std::move(offending)) {}
  const Mat& offending() const { return offending_; }

private:
  Mat offending_;
};

/// Gaussian distribution over a real vector; the belief currency of every
/// filter in this library. Covariances are kept symmetric and are repaired
/// to (semi)definiteness after every update.
struct GaussianBelief {
  Vec mean;
  Mat cov;

  Eigen::Index dim() const { return mean.size(); }
};

/// State dynamics x' = transition(x, u, theta) plus additive noise with
/// covariance Q. `transition` must be a pure function.
struct TransitionModel {
  int dim_state = 0;
  std::function<Vec(const Vec& x, const Vec& u, const Vec& theta)> transition;
  Mat process_noise_cov;
};

/// Measurement map y = measure(x) plus additive noise with covariance R.
/// angular_mask marks angle-valued components whose innovations must be
/// wrapped to (-pi, pi].
struct MeasurementModel {
  int dim_meas = 0;
  std::function<Vec(const Vec& x)> measure;
  Mat noise_cov;
  std::vector<bool> angular_mask;
};

/// Returns (A + A^T)/2 with every eigenvalue below
/// 1e-12 * max(1, max diagonal entry) raised to that floor. The result
/// admits a Cholesky factorization.
Mat symmetrize_and_repair(const Mat& cov);

/// Wraps a finite angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace apbmtrack
