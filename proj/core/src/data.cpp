#include "densreg/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace densreg {

void RawSeries::validate() const {
  if (dates.size() != static_cast<std::size_t>(values.size())) {
    throw std::invalid_argument("RawSeries '" + name + "': date/value length mismatch");
  }
  for (std::size_t i = 1; i < dates.size(); ++i) {
    if (!(dates[i - 1] < dates[i])) {
      throw std::invalid_argument("RawSeries '" + name + "': dates not strictly increasing");
    }
  }
  // Missing values are only allowed as a leading run.
  bool seen_value = false;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const bool missing = std::isnan(values[i]);
    if (!missing) seen_value = true;
    if (missing && seen_value) {
      throw std::invalid_argument("RawSeries '" + name + "': interior missing value");
    }
  }
}

Eigen::VectorXd apply_tcode(const RawSeries& series) {
  series.validate();
  switch (series.tcode) {
    case 1:
      return series.values;
    case 4: {
      const Eigen::VectorXd& v = series.values;
      if (v.size() < 2) {
        throw std::invalid_argument("apply_tcode: series '" + series.name + "' too short for differencing");
      }
      Eigen::VectorXd out(v.size() - 1);
      for (Eigen::Index i = 1; i < v.size(); ++i) {
        if (std::isnan(v[i - 1]) || std::isnan(v[i])) {
          out[i - 1] = std::numeric_limits<double>::quiet_NaN();
          continue;
        }
        if (!(v[i] > 0.0) || !(v[i - 1] > 0.0)) {
          throw std::invalid_argument("apply_tcode: non-positive value in '" + series.name + "' under tcode 4");
        }
        out[i - 1] = 100.0 * (std::log(v[i]) - std::log(v[i - 1]));
      }
      return out;
    }
    default:
      throw std::invalid_argument("apply_tcode: unknown tcode " + std::to_string(series.tcode));
  }
}

Eigen::MatrixXd DataSet::predictors() const {
  Eigen::MatrixXd out = predictors_raw;
  for (int j = 0; j < out.cols(); ++j) {
    out.col(j) = (out.col(j).array() - std_mean[j]) / std_scale[j];
  }
  return out;
}

double DataSet::destandardize(int j, double value) const {
  return value * std_scale[j] + std_mean[j];
}

double DataSet::standardize(int j, double value) const {
  return (value - std_mean[j]) / std_scale[j];
}

void DataSet::validate() const {
  const int T_ = T();
  if (static_cast<int>(dates.size()) != T_ || predictors_raw.rows() != T_) {
    throw std::invalid_argument("DataSet: row count mismatch");
  }
  if (static_cast<int>(predictor_names.size()) != predictors_raw.cols()) {
    throw std::invalid_argument("DataSet: predictor name count mismatch");
  }
  if (!target.allFinite() || !predictors_raw.allFinite()) {
    throw std::invalid_argument("DataSet: missing values after alignment");
  }
}

namespace {

void compute_standardization(const Eigen::MatrixXd& raw, Eigen::VectorXd& mean,
                             Eigen::VectorXd& scale) {
  const int n = static_cast<int>(raw.cols());
  const double T = static_cast<double>(raw.rows());
  mean.resize(n);
  scale.resize(n);
  for (int j = 0; j < n; ++j) {
    mean[j] = raw.col(j).mean();
    const double ss = (raw.col(j).array() - mean[j]).square().sum();
    scale[j] = std::sqrt(ss / (T - 1.0));
    if (!(scale[j] > 0.0)) scale[j] = 1.0;  // constant column
  }
}

}  // namespace

DataSet DataSet::from_aligned(std::vector<std::string> dates,
                              Eigen::VectorXd target,
                              Eigen::MatrixXd predictors,
                              std::vector<std::string> names) {
  DataSet d;
  d.dates = std::move(dates);
  d.target = std::move(target);
  d.predictors_raw = std::move(predictors);
  d.predictor_names = std::move(names);
  compute_standardization(d.predictors_raw, d.std_mean, d.std_scale);
  d.validate();
  return d;
}

DataSet DataSet::prefix(int length) const {
  if (length < 2 || length > T()) {
    throw std::invalid_argument("DataSet::prefix: invalid length");
  }
  return from_aligned(
      std::vector<std::string>(dates.begin(), dates.begin() + length),
      target.head(length), predictors_raw.topRows(length), predictor_names);
}

DesignMatrix build_design(const DataSet& data, int horizon, int lags) {
  if (horizon < 1) throw std::invalid_argument("build_design: horizon must be >= 1");
  if (lags < 0) throw std::invalid_argument("build_design: lags must be >= 0");
  const int T = data.T();
  const int rows = T - horizon - lags;
  if (rows < 1) {
    throw std::invalid_argument("build_design: insufficient sample length");
  }
  const int n_pred = data.n_predictors();
  const int k = 1 + lags + n_pred;
  const Eigen::MatrixXd std_pred = data.predictors();

  DesignMatrix d;
  d.horizon = horizon;
  d.lags = lags;
  d.y_h.resize(rows);
  d.X.resize(rows, k);
  d.origin_dates.reserve(rows);
  d.colnames.push_back("const");
  for (int l = 0; l < lags; ++l) d.colnames.push_back("y_lag" + std::to_string(l + 1));
  for (const auto& nm : data.predictor_names) d.colnames.push_back(nm);

  for (int r = 0; r < rows; ++r) {
    const int t = lags + r;  // origin period
    d.y_h[r] = data.target[t + horizon];
    d.X(r, 0) = 1.0;
    for (int l = 0; l < lags; ++l) d.X(r, 1 + l) = data.target[t - l];
    d.X.row(r).tail(n_pred) = std_pred.row(t);
    d.origin_dates.push_back(data.dates[t]);
  }
  return d;
}

Eigen::VectorXd covariate_row(const DataSet& data, int t, int lags) {
  if (t < lags || t >= data.T()) {
    throw std::invalid_argument("covariate_row: t out of range");
  }
  const int n_pred = data.n_predictors();
  Eigen::VectorXd x(1 + lags + n_pred);
  x[0] = 1.0;
  for (int l = 0; l < lags; ++l) x[1 + l] = data.target[t - l];
  const Eigen::MatrixXd std_pred = data.predictors();
  x.tail(n_pred) = std_pred.row(t);
  return x;
}

std::vector<DataSet> vintages(const DataSet& data, const VintageIterator& it) {
  if (!(it.start_fraction > 0.0) || it.start_fraction > 1.0) {
    throw std::invalid_argument("vintages: start_fraction must lie in (0, 1]");
  }
  if (it.step < 1) throw std::invalid_argument("vintages: step must be >= 1");
  const int T = data.T();
  int first = static_cast<int>(std::ceil(it.start_fraction * T));
  first = std::max(first, 2);
  std::vector<DataSet> out;
  for (int len = first; len < T; len += it.step) {
    out.push_back(data.prefix(len));
  }
  out.push_back(data.prefix(T));  // final window always covers the sample
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<RawSeries> load_csv(const std::string& csv_path) {
  std::ifstream is(csv_path);
  if (!is) throw std::runtime_error("load_csv: cannot open " + csv_path);

  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("load_csv: empty file " + csv_path);
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(trim(cell));
  }
  if (header.size() < 2) throw std::runtime_error("load_csv: need a date column and at least one series");

  std::vector<std::string> dates;
  std::vector<std::vector<double>> cols(header.size() - 1);
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t j = 0;
    while (std::getline(ss, cell, ',')) {
      cell = trim(cell);
      if (j == 0) {
        dates.push_back(cell);
      } else {
        if (j - 1 >= cols.size()) throw std::runtime_error("load_csv: ragged row in " + csv_path);
        cols[j - 1].push_back(cell.empty() ? std::numeric_limits<double>::quiet_NaN()
                                           : std::stod(cell));
      }
      ++j;
    }
    if (j != header.size()) throw std::runtime_error("load_csv: ragged row in " + csv_path);
  }

  std::vector<RawSeries> out;
  for (std::size_t j = 1; j < header.size(); ++j) {
    RawSeries s;
    s.name = header[j];
    s.dates = dates;
    s.values = Eigen::Map<const Eigen::VectorXd>(cols[j - 1].data(),
                                                 static_cast<Eigen::Index>(cols[j - 1].size()));
    out.push_back(std::move(s));
  }
  return out;
}

IngestConfig load_ingest_config(const std::string& json_path) {
  std::ifstream is(json_path);
  if (!is) throw std::runtime_error("load_ingest_config: cannot open " + json_path);
  nlohmann::json j;
  is >> j;
  IngestConfig cfg;
  cfg.target_column = j.at("target").get<std::string>();
  cfg.predictor_columns = j.at("predictors").get<std::vector<std::string>>();
  for (const auto& [key, value] : j.at("tcodes").items()) {
    cfg.tcodes[key] = value.get<int>();
  }
  cfg.lags = j.value("lags", 4);
  cfg.horizons = j.value("horizons", std::vector<int>{1});
  cfg.vintage_start_fraction = j.value("vintage_start_fraction", 0.5);
  cfg.vintage_step = j.value("vintage_step", 1);
  return cfg;
}

DataSet load_dataset(const std::string& csv_path, const IngestConfig& config) {
  const std::vector<RawSeries> all = load_csv(csv_path);
  auto find = [&](const std::string& name) -> const RawSeries& {
    for (const auto& s : all) {
      if (s.name == name) return s;
    }
    throw std::runtime_error("load_dataset: column '" + name + "' not in CSV");
  };
  auto tcode_of = [&](const std::string& name) {
    const auto it = config.tcodes.find(name);
    if (it == config.tcodes.end()) {
      throw std::runtime_error("load_dataset: no tcode configured for '" + name + "'");
    }
    return it->second;
  };

  // Transform every requested column; track how many leading observations
  // each transform consumed so all series align on dates.
  struct Transformed {
    std::string name;
    Eigen::VectorXd values;
    int offset;  // observations dropped at the start
  };
  std::vector<Transformed> predictors;
  const RawSeries& target_raw = find(config.target_column);
  RawSeries target_series = target_raw;
  target_series.tcode = tcode_of(config.target_column);
  Eigen::VectorXd target_vals = apply_tcode(target_series);
  if (target_series.tcode == 4) target_vals *= 4.0;  // annualized quarterly rate
  const int target_offset = static_cast<int>(target_raw.values.size() - target_vals.size());

  for (const auto& name : config.predictor_columns) {
    RawSeries s = find(name);
    s.tcode = tcode_of(name);
    Eigen::VectorXd vals = apply_tcode(s);
    predictors.push_back({name, vals, static_cast<int>(s.values.size() - vals.size())});
  }

  // Leading NaN runs (from source data) extend the offset.
  auto leading_nan = [](const Eigen::VectorXd& v) {
    int n = 0;
    while (n < v.size() && std::isnan(v[n])) ++n;
    return n;
  };
  int start = target_offset + leading_nan(target_vals);
  for (const auto& p : predictors) {
    start = std::max(start, p.offset + leading_nan(p.values));
  }
  const int total = static_cast<int>(target_raw.values.size());
  const int T = total - start;
  if (T < 8) throw std::runtime_error("load_dataset: aligned sample too short");

  std::vector<std::string> dates(target_raw.dates.begin() + start, target_raw.dates.end());
  Eigen::VectorXd target(T);
  for (int t = 0; t < T; ++t) target[t] = target_vals[start - target_offset + t];

  Eigen::MatrixXd pred(T, static_cast<Eigen::Index>(predictors.size()));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < predictors.size(); ++j) {
    const auto& p = predictors[j];
    for (int t = 0; t < T; ++t) pred(t, static_cast<Eigen::Index>(j)) = p.values[start - p.offset + t];
    names.push_back(p.name);
  }
  return DataSet::from_aligned(std::move(dates), std::move(target), std::move(pred), std::move(names));
}

}  // namespace densreg
