#pragma once

#include <Eigen/Dense>
#include <functional>

namespace densreg {

struct GaussLegendreRule {
  Eigen::VectorXd nodes;    // on [-1, 1]
  Eigen::VectorXd weights;  // sum to 2
};

// Nodes and weights for n-point Gauss-Legendre quadrature, cached per n.
const GaussLegendreRule& gauss_legendre(int n);

// Integrate f over [lo, hi] with an n-point rule.
double gl_integrate(const std::function<double(double)>& f, double lo,
                    double hi, int n = 256);

}  // namespace densreg
