#pragma once

#include <Eigen/Dense>

namespace densreg {

// Standard normal density / distribution / quantile.
double norm_pdf(double x);
double norm_cdf(double x);
// Inverse of norm_cdf, accurate to ~1e-15 (Acklam initialiser + one Halley
// refinement step).
double norm_quantile(double p);

double digamma(double x);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta function I_x(a, b).
double beta_inc(double a, double b, double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_sf(double x, double df);

// CDF of the Student-t distribution with nu degrees of freedom.
double student_t_cdf(double x, double nu);

double log_sum_exp(const Eigen::VectorXd& v);

}  // namespace densreg
