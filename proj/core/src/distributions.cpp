#include "densreg/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "densreg/special.hpp"

namespace densreg {

double pg_mean(double z) {
  if (!std::isfinite(z)) throw std::invalid_argument("pg_mean: z not finite");
  const double u = 0.5 * std::abs(z);
  if (u < 1e-4) {
    // tanh(u)/u = 1 - u^2/3 + 2u^4/15 + O(u^6)
    const double u2 = u * u;
    return 0.25 * (1.0 - u2 / 3.0 + 2.0 * u2 * u2 / 15.0);
  }
  return std::tanh(u) / (4.0 * u);
}

namespace {

// Truncation point separating the inverse-Gaussian and exponential pieces of
// the J*(1, z) proposal.
constexpr double kPgTrunc = 0.64;

// Piecewise coefficients a_n(x) of the alternating series representation of
// the J*(1, z) density.
double pg_coef(int n, double x) {
  const double np = n + 0.5;
  if (x > kPgTrunc) {
    return M_PI * np * std::exp(-0.5 * np * np * M_PI * M_PI * x);
  }
  return M_PI * np * std::pow(2.0 / (M_PI * x), 1.5) *
         std::exp(-2.0 * np * np / x);
}

// CDF of the inverse Gaussian IG(mu = 1/z, lambda = 1) at t, written as a
// function of z so the z = 0 limit (the one-sided stable case) is handled by
// the same expression.
double pg_igauss_cdf(double t, double z) {
  const double rt = 1.0 / std::sqrt(t);
  return norm_cdf(rt * (t * z - 1.0)) +
         std::exp(2.0 * z) * norm_cdf(-rt * (t * z + 1.0));
}

// Draw from IG(mu = 1/z, lambda = 1) truncated to (0, t]; z >= 0.
double pg_rtigauss(double z, double t, RngStream& rng) {
  const double mu = (z > 0.0) ? 1.0 / z : std::numeric_limits<double>::infinity();
  double x = t + 1.0;
  if (mu > t) {
    // Rejection from the one-sided stable law restricted to (0, t].
    for (;;) {
      double e1;
      double e2;
      do {
        e1 = rng.exponential();
        e2 = rng.exponential();
      } while (e1 * e1 > 2.0 * e2 / t);
      x = t / ((1.0 + t * e1) * (1.0 + t * e1));
      if (rng.uniform() <= std::exp(-0.5 * z * z * x)) return x;
    }
  }
  while (x > t) {
    const double y = rng.normal() * rng.normal();
    const double mu_y = mu * y;
    x = mu + 0.5 * mu * mu_y - 0.5 * mu * std::sqrt(4.0 * mu_y + mu_y * mu_y);
    if (rng.uniform() > mu / (mu + x)) x = mu * mu / x;
  }
  return x;
}

}  // namespace

double sample_polya_gamma(double z, RngStream& rng) {
  if (!std::isfinite(z)) {
    throw std::invalid_argument("sample_polya_gamma: z not finite");
  }
  // PG(1, z) = J*(1, z/2) / 4; the sampler below draws J*(1, |z|/2).
  const double zz = 0.5 * std::abs(z);

  const double k = M_PI * M_PI / 8.0 + 0.5 * zz * zz;
  const double p = 0.5 * M_PI / k * std::exp(-k * kPgTrunc);
  const double q = 2.0 * std::exp(-zz) * pg_igauss_cdf(kPgTrunc, zz);
  const double ratio = p / (p + q);

  for (;;) {
    double x;
    if (rng.uniform() < ratio) {
      x = kPgTrunc + rng.exponential() / k;  // right exponential tail
    } else {
      x = pg_rtigauss(zz, kPgTrunc, rng);  // left inverse-Gaussian body
    }
    // Squeeze on the alternating series of the target density.
    double s = pg_coef(0, x);
    double y = rng.uniform() * s;
    int n = 0;
    for (;;) {
      ++n;
      if (n % 2 == 1) {
        s -= pg_coef(n, x);
        if (y <= s) return 0.25 * x;
      } else {
        s += pg_coef(n, x);
        if (y > s) break;  // reject this proposal
      }
    }
  }
}

double sample_gamma(double shape, double rate, RngStream& rng) {
  return rng.gamma(shape, rate);
}

double sample_inverse_gamma(double shape, double scale, RngStream& rng) {
  return rng.inverse_gamma(shape, scale);
}

double sample_gaussian(double mean, double sd, RngStream& rng) {
  if (!(sd >= 0.0)) throw std::invalid_argument("sample_gaussian: sd < 0");
  return mean + sd * rng.normal();
}

int sample_categorical(const Eigen::VectorXd& probs, RngStream& rng) {
  if (probs.size() == 0) {
    throw std::invalid_argument("sample_categorical: empty probabilities");
  }
  if (probs.minCoeff() < 0.0 || std::abs(probs.sum() - 1.0) > 1e-10) {
    throw std::invalid_argument("sample_categorical: not a probability vector");
  }
  const double u = rng.uniform();
  double acc = 0.0;
  for (int i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u <= acc) return i;
  }
  return static_cast<int>(probs.size()) - 1;
}

int sample_categorical_log(const Eigen::VectorXd& log_weights, RngStream& rng) {
  if (log_weights.size() == 0) {
    throw std::invalid_argument("sample_categorical_log: empty weights");
  }
  const double lse = log_sum_exp(log_weights);
  Eigen::VectorXd probs = (log_weights.array() - lse).exp();
  probs /= probs.sum();
  const double u = rng.uniform();
  double acc = 0.0;
  for (int i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u <= acc) return i;
  }
  return static_cast<int>(probs.size()) - 1;
}

std::pair<double, double> gig_moments(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("gig_moments: a and b must be positive");
  }
  const double root = std::sqrt(a * b);
  const double bessel_ratio = 1.0 + 1.0 / root;  // K_{3/2}/K_{1/2}
  const double mean = std::sqrt(b / a) * bessel_ratio;
  const double inv_mean = std::sqrt(a / b) * bessel_ratio - 1.0 / b;
  return {mean, inv_mean};
}

}  // namespace densreg
