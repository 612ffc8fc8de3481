#pragma once

#include <cstdint>
#include <vector>

#include "densreg/data.hpp"
#include "densreg/ensemble.hpp"
#include "densreg/mixture.hpp"
#include "densreg/rng.hpp"

namespace densreg {

struct McmcConfig {
  int n_draws = 20000;
  int burn_in = 5000;
  int thin = 10;
  int C = 5;
  Hyperpriors hyper;
  std::uint64_t seed = 1;

  void validate() const;
};

// Full Gibbs state: the parameter values, the component allocation of every
// observation, and the logistic augmentation variables for the
// continuation-ratio rows currently in play.
struct GibbsState {
  LsbpParams params;
  std::vector<int> alloc;    // G_t in {0, ..., C-1}
  Eigen::MatrixXd pg_omega;  // T x (C-1); row t column c valid when G_t > c-1
};

// Deterministic start: allocations by quantile-binning the response into C
// groups, coefficients at zero, precisions and shrinkage scales at one.
GibbsState init_gibbs_state(const DesignMatrix& design, int C);

// [1] Component allocation: G_t categorical with log-space probabilities
// log w_c(x_t) + log N(y_t; x_t' beta_c, 1/tau_c).
void step_allocations(GibbsState& state, const DesignMatrix& design,
                      RngStream& rng);

// [2a] Logistic coefficients by Polya-Gamma augmentation on each
// continuation-ratio subset {t : G_t > c-1}; empty subsets fall back to a
// prior draw.
void step_logistic(GibbsState& state, const DesignMatrix& design,
                   RngStream& rng);

// [2b] Shrinkage hierarchy: local scales, auxiliaries, per-component global
// scale, and its auxiliary, all inverse-gamma.
void step_horseshoe(GibbsState& state, RngStream& rng);

// [3]-[4] Kernel coefficients and precisions on each allocated subset;
// empty components revert to their priors.
void step_kernels(GibbsState& state, const DesignMatrix& design,
                  const Hyperpriors& hyper, RngStream& rng);

// Log of the joint density at the current state (kernel likelihood given
// allocations, allocation probabilities, and all priors).
double log_joint(const GibbsState& state, const DesignMatrix& design,
                 const Hyperpriors& hyper);

// Cycles steps [1]-[4] and retains every thin-th post-burn-in state.
PosteriorEnsemble run_mcmc(const DesignMatrix& design, const McmcConfig& config);

}  // namespace densreg
