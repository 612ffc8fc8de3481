#include "densreg/mixture.hpp"

#include <cmath>
#include <stdexcept>

#include "densreg/special.hpp"

namespace densreg {

void Hyperpriors::validate() const {
  if (!(a_tau > 0.0) || !(b_tau > 0.0) || !(beta_prior_var > 0.0) ||
      !(b_psi > 0.0)) {
    throw std::invalid_argument("Hyperpriors: a_tau, b_tau, beta_prior_var and b_psi must be positive");
  }
}

void LsbpParams::validate() const {
  if (C < 1) throw std::invalid_argument("LsbpParams: C must be >= 1");
  if (beta.rows() != C) throw std::invalid_argument("LsbpParams: beta must have C rows");
  if (tau.size() != C) throw std::invalid_argument("LsbpParams: tau must have C entries");
  if (psi.rows() != C - 1) throw std::invalid_argument("LsbpParams: psi must have C-1 rows");
  if (C > 1 && psi.cols() != beta.cols()) {
    throw std::invalid_argument("LsbpParams: psi and beta column mismatch");
  }
  if ((tau.array() <= 0.0).any()) throw std::invalid_argument("LsbpParams: tau must be positive");
  if (!beta.allFinite() || !psi.allFinite()) {
    throw std::invalid_argument("LsbpParams: non-finite coefficients");
  }
  if (hs_local.size() > 0 && (hs_local.array() <= 0.0).any()) {
    throw std::invalid_argument("LsbpParams: shrinkage scales must be positive");
  }
  if (hs_global.size() > 0 && (hs_global.array() <= 0.0).any()) {
    throw std::invalid_argument("LsbpParams: shrinkage scales must be positive");
  }
}

LsbpParams LsbpParams::zero(int C, int k) {
  LsbpParams p;
  p.C = C;
  p.beta = Eigen::MatrixXd::Zero(C, k);
  p.tau = Eigen::VectorXd::Ones(C);
  p.psi = Eigen::MatrixXd::Zero(C - 1, k);
  p.hs_local = Eigen::MatrixXd::Ones(C - 1, k);
  p.hs_aux = Eigen::MatrixXd::Ones(C - 1, k);
  p.hs_global = Eigen::MatrixXd::Ones(C - 1, 1);
  p.hs_xi = Eigen::VectorXd::Ones(C - 1);
  return p;
}

void ForecastDensity::validate() const {
  if (weights.size() == 0 || weights.size() != means.size() ||
      weights.size() != precisions.size()) {
    throw std::invalid_argument("ForecastDensity: size mismatch");
  }
  if (weights.minCoeff() < 0.0 || std::abs(weights.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("ForecastDensity: weights must form a simplex");
  }
  if ((precisions.array() <= 0.0).any()) {
    throw std::invalid_argument("ForecastDensity: precisions must be positive");
  }
}

double ForecastDensity::pdf(double pi) const {
  double out = 0.0;
  for (int c = 0; c < components(); ++c) {
    const double s = std::sqrt(precisions[c]);
    out += weights[c] * s * norm_pdf(s * (pi - means[c]));
  }
  return out;
}

double ForecastDensity::cdf(double pi) const {
  double out = 0.0;
  for (int c = 0; c < components(); ++c) {
    const double s = std::sqrt(precisions[c]);
    out += weights[c] * norm_cdf(s * (pi - means[c]));
  }
  return out;
}

double ForecastDensity::support_lo() const {
  const double sd_max = 1.0 / std::sqrt(precisions.minCoeff());
  return means.minCoeff() - 12.0 * sd_max;
}

double ForecastDensity::support_hi() const {
  const double sd_max = 1.0 / std::sqrt(precisions.minCoeff());
  return means.maxCoeff() + 12.0 * sd_max;
}

double ForecastDensity::quantile(double level) const {
  if (!(level > 0.0) || !(level < 1.0)) {
    throw std::invalid_argument("quantile: level must lie in (0, 1)");
  }
  // The CDF is monotone, so bisection on the bracket cannot fail.
  double lo = support_lo();
  double hi = support_hi();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f = cdf(mid) - level;
    if (std::abs(f) <= 1e-10) return mid;
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-14 * (1.0 + std::abs(mid))) return mid;
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> ForecastDensity::moments() const {
  const double mean = weights.dot(means);
  double second = 0.0;
  for (int c = 0; c < components(); ++c) {
    second += weights[c] * (1.0 / precisions[c] + means[c] * means[c]);
  }
  return {mean, second - mean * mean};
}

Eigen::VectorXd stick_weights(const Eigen::MatrixXd& psi,
                              const Eigen::VectorXd& x) {
  const int C = static_cast<int>(psi.rows()) + 1;
  if (C > 1 && psi.cols() != x.size()) {
    throw std::invalid_argument("stick_weights: dimension mismatch");
  }
  Eigen::VectorXd w(C);
  double remaining = 1.0;
  for (int c = 0; c + 1 < C; ++c) {
    const double nu = 1.0 / (1.0 + std::exp(-psi.row(c).dot(x)));
    w[c] = nu * remaining;
    remaining *= (1.0 - nu);
  }
  w[C - 1] = remaining;  // nu_C = 1
  return w;
}

ForecastDensity conditional_density(const LsbpParams& params,
                                    const Eigen::VectorXd& x) {
  if (x.size() != params.beta.cols()) {
    throw std::invalid_argument("conditional_density: dimension mismatch");
  }
  ForecastDensity d;
  d.weights = stick_weights(params.psi, x);
  d.means = params.beta * x;
  d.precisions = params.tau;
  return d;
}

}  // namespace densreg
