#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "densreg/mixture.hpp"

namespace densreg {

// Provenance and bookkeeping carried with a set of posterior draws.
// extra_json is free-form JSON round-tripped through serialization; the CLI
// uses it for data/standardization manifests.
struct EnsembleMeta {
  std::string estimator;  // "mcmc" or "vb"
  std::string vb_view;    // "draws" or "point" for VB ensembles
  std::uint64_t seed = 0;
  std::string config_hash;
  int horizon = 0;
  std::vector<std::string> columns;  // design matrix column names
  std::vector<double> elbo_trace;      // VB objective per sweep
  std::vector<double> log_joint_trace; // MCMC log joint per retained draw
  std::string extra_json;
};

// A collection of parameter states: retained MCMC draws, or draws simulated
// from (or the point value of) a variational posterior.
struct PosteriorEnsemble {
  std::vector<LsbpParams> draws;
  EnsembleMeta meta;

  int size() const { return static_cast<int>(draws.size()); }
  void validate() const;
};

// Ensemble-averaged density evaluations: the average across draws of the
// per-draw pdf/cdf values.
double ensemble_pdf(const PosteriorEnsemble& ens, const Eigen::VectorXd& x,
                    double pi);
double ensemble_cdf(const PosteriorEnsemble& ens, const Eigen::VectorXd& x,
                    double pi);

// The ensemble-averaged density as a single flat mixture (a mixture of
// mixtures with draw weight 1/M). Evaluating it is pointwise identical to
// ensemble_pdf / ensemble_cdf.
ForecastDensity pooled_density(const PosteriorEnsemble& ens,
                               const Eigen::VectorXd& x);

// Columnar on-disk format: '#'-prefixed JSON manifest lines followed by a
// CSV header and one row per draw. Documented in the README.
void save_ensemble(const PosteriorEnsemble& ens, const std::string& path);
PosteriorEnsemble load_ensemble(const std::string& path);

}  // namespace densreg
