#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace densreg {

// One raw input series: quarterly values with strictly increasing ISO dates
// and an integer transform code. Supported codes: 1 (level) and
// 4 (log-differences, scaled by 100).
struct RawSeries {
  std::string name;
  int tcode = 1;
  std::vector<std::string> dates;
  Eigen::VectorXd values;

  void validate() const;
};

// Applies the transform code. Code 1 returns the values unchanged; code 4
// returns 100 * (log v_t - log v_{t-1}), dropping the first observation.
// Throws on unknown codes and on non-positive values under code 4.
Eigen::VectorXd apply_tcode(const RawSeries& series);

// Aligned estimation data: the target with raw (unstandardized) predictors
// and the per-column standardization of the current window. Predictors are
// standardized to mean zero, standard deviation one over the window held by
// this object; the raw matrix is retained so vintage snapshots can
// re-standardize without look-ahead.
struct DataSet {
  std::vector<std::string> dates;
  Eigen::VectorXd target;
  Eigen::MatrixXd predictors_raw;
  std::vector<std::string> predictor_names;
  Eigen::VectorXd std_mean;
  Eigen::VectorXd std_scale;

  int T() const { return static_cast<int>(target.size()); }
  int n_predictors() const { return static_cast<int>(predictors_raw.cols()); }

  // Standardized predictor matrix.
  Eigen::MatrixXd predictors() const;

  // Inverse of the standardization for column j.
  double destandardize(int j, double value) const;
  double standardize(int j, double value) const;

  void validate() const;

  // Builds the dataset from aligned columns and computes the
  // standardization over all T rows.
  static DataSet from_aligned(std::vector<std::string> dates,
                              Eigen::VectorXd target,
                              Eigen::MatrixXd predictors,
                              std::vector<std::string> names);

  // Prefix of the first `length` observations, standardization recomputed
  // on that window only.
  DataSet prefix(int length) const;
};

// Direct-forecast design: row t pairs regressors dated t with the response
// dated t + h. X = [1, y_t, ..., y_{t-lags+1}, predictors_t]; the first
// `lags` observations are dropped, so rows = T - h - lags.
struct DesignMatrix {
  Eigen::VectorXd y_h;
  Eigen::MatrixXd X;
  int horizon = 1;
  int lags = 0;
  std::vector<std::string> origin_dates;
  std::vector<std::string> colnames;

  int rows() const { return static_cast<int>(X.rows()); }
  int cols() const { return static_cast<int>(X.cols()); }
};

DesignMatrix build_design(const DataSet& data, int horizon, int lags);

// Covariate vector "as of" observation t (0-based), matching the design
// layout: [1, y_t, ..., y_{t-lags+1}, predictors_t]. Requires t >= lags.
Eigen::VectorXd covariate_row(const DataSet& data, int t, int lags);

// Expanding-window snapshots: the first window holds
// ceil(start_fraction * T) observations and each subsequent one extends it
// by `step`; the final window always covers the full sample.
struct VintageIterator {
  double start_fraction = 0.5;
  int step = 1;
};

std::vector<DataSet> vintages(const DataSet& data, const VintageIterator& it);

// CSV + sidecar configuration ingestion. The CSV has a header row, ISO
// dates in the first column, and one series per column. The configuration
// maps columns to roles and transform codes (see README for the schema).
struct IngestConfig {
  std::string target_column;
  std::vector<std::string> predictor_columns;
  std::map<std::string, int> tcodes;
  int lags = 4;
  std::vector<int> horizons = {1};
  double vintage_start_fraction = 0.5;
  int vintage_step = 1;
};

IngestConfig load_ingest_config(const std::string& json_path);

std::vector<RawSeries> load_csv(const std::string& csv_path);

// Transforms, aligns, and assembles the dataset described by the
// configuration. The target series is annualized (multiplied by 4) when its
// tcode is 4, yielding 400 * dlog for quarterly price indices.
DataSet load_dataset(const std::string& csv_path, const IngestConfig& config);

}  // namespace densreg
