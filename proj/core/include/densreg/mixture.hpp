#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

namespace densreg {

// Hyperpriors shared by the estimators. The kernel precision tau_c carries a
// Gamma(a_tau, b_tau) prior, kernel coefficients an independent Gaussian
// prior, and b_psi scales the shrinkage hierarchy in the variational
// parametrization.
struct Hyperpriors {
  double a_tau = 0.5;
  double b_tau = 0.5;
  double beta_prior_mean = 0.0;
  double beta_prior_var = 1.0;
  double b_psi = 1e-4;

  void validate() const;
};

// One complete parameter state of the logit stick-breaking mixture:
//   beta     C x k      kernel regression coefficients
//   tau      C          kernel precisions
//   psi      (C-1) x k  stick-breaking logistic coefficients
// plus the shrinkage hierarchy attached to psi. hs_global has one column for
// the sampler's per-component global scale and k columns for the variational
// per-coefficient form; both shapes round-trip through serialization.
struct LsbpParams {
  int C = 1;
  Eigen::MatrixXd beta;
  Eigen::VectorXd tau;
  Eigen::MatrixXd psi;
  Eigen::MatrixXd hs_local;
  Eigen::MatrixXd hs_aux;
  Eigen::MatrixXd hs_global;
  Eigen::VectorXd hs_xi;

  int k() const { return static_cast<int>(beta.cols()); }
  void validate() const;

  // Zero-initialized state: beta = psi = 0, tau = 1, shrinkage scales = 1.
  static LsbpParams zero(int C, int k);
};

// Conditional Gaussian mixture for one covariate vector: the evaluable
// forecast distribution.
struct ForecastDensity {
  Eigen::VectorXd weights;     // simplex
  Eigen::VectorXd means;
  Eigen::VectorXd precisions;  // > 0
  std::string origin_date;
  int horizon = 0;

  int components() const { return static_cast<int>(weights.size()); }
  void validate() const;

  double pdf(double pi) const;
  double cdf(double pi) const;

  // Quantile by bisection on the CDF over the guaranteed bracket
  // [support_lo(), support_hi()]; |cdf(result) - level| <= 1e-10.
  double quantile(double level) const;

  // (mean, variance) of the mixture.
  std::pair<double, double> moments() const;

  // Bracketing interval containing all but ~1e-30 of the mass.
  double support_lo() const;
  double support_hi() const;
};

// Stick-breaking weights w_c(x) from logistic coefficients. nu_c =
// logistic(x' psi_c) for c < C and nu_C = 1, w_c = nu_c prod_{l<c}(1 - nu_l);
// the result sums to one by construction. psi has C-1 rows; C = rows + 1.
Eigen::VectorXd stick_weights(const Eigen::MatrixXd& psi,
                              const Eigen::VectorXd& x);

// Conditional mixture at covariate x: means x' beta_c, precisions tau_c,
// weights from stick_weights.
ForecastDensity conditional_density(const LsbpParams& params,
                                    const Eigen::VectorXd& x);

}  // namespace densreg
