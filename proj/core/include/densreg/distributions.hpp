#pragma once

#include <Eigen/Dense>
#include <utility>

#include "densreg/rng.hpp"

namespace densreg {

// E[omega] for omega ~ PG(1, z): tanh(z/2) / (2 z), with the limit 1/4 at
// z = 0. Even in z.
double pg_mean(double z);

// Exact draw from the Polya-Gamma distribution PG(1, z) by the alternating
// series accept/reject method (Devroye-style). The distribution is symmetric
// in the sign of z.
double sample_polya_gamma(double z, RngStream& rng);

// Parameter-checked wrappers around the RngStream primitives.
double sample_gamma(double shape, double rate, RngStream& rng);
double sample_inverse_gamma(double shape, double scale, RngStream& rng);
double sample_gaussian(double mean, double sd, RngStream& rng);

// Index in [0, p.size()) drawn with the given probabilities, which must sum
// to one within 1e-10.
int sample_categorical(const Eigen::VectorXd& probs, RngStream& rng);

// Same draw from unnormalized log weights; normalization happens in log
// space so widely scaled weights cannot underflow.
int sample_categorical_log(const Eigen::VectorXd& log_weights, RngStream& rng);

// First and inverse moments (E[z], E[1/z]) of the generalized inverse
// Gaussian distribution with p = 1/2 and density proportional to
// z^{-1/2} exp(-(a z + b/z)/2). The half-integer Bessel ratio
// K_{3/2}(x)/K_{1/2}(x) = 1 + 1/x makes both closed-form.
std::pair<double, double> gig_moments(double a, double b);

}  // namespace densreg
