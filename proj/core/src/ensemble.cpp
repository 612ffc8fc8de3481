#include "densreg/ensemble.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace densreg {

void PosteriorEnsemble::validate() const {
  if (draws.empty()) throw std::invalid_argument("PosteriorEnsemble: empty");
  const int C = draws.front().C;
  const int k = draws.front().k();
  for (const auto& d : draws) {
    d.validate();
    if (d.C != C || d.k() != k) {
      throw std::invalid_argument("PosteriorEnsemble: inconsistent draw shapes");
    }
  }
}

double ensemble_pdf(const PosteriorEnsemble& ens, const Eigen::VectorXd& x,
                    double pi) {
  double acc = 0.0;
  for (const auto& d : ens.draws) acc += conditional_density(d, x).pdf(pi);
  return acc / ens.size();
}

double ensemble_cdf(const PosteriorEnsemble& ens, const Eigen::VectorXd& x,
                    double pi) {
  double acc = 0.0;
  for (const auto& d : ens.draws) acc += conditional_density(d, x).cdf(pi);
  return acc / ens.size();
}

ForecastDensity pooled_density(const PosteriorEnsemble& ens,
                               const Eigen::VectorXd& x) {
  const int M = ens.size();
  const int C = ens.draws.front().C;
  ForecastDensity out;
  out.weights.resize(static_cast<Eigen::Index>(M) * C);
  out.means.resize(static_cast<Eigen::Index>(M) * C);
  out.precisions.resize(static_cast<Eigen::Index>(M) * C);
  Eigen::Index at = 0;
  for (const auto& d : ens.draws) {
    const ForecastDensity fd = conditional_density(d, x);
    for (int c = 0; c < C; ++c, ++at) {
      out.weights[at] = fd.weights[c] / M;
      out.means[at] = fd.means[c];
      out.precisions[at] = fd.precisions[c];
    }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_matrix_header(std::ostream& os, const std::string& stem, int rows,
                          int cols) {
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      os << ',' << stem << '_' << (r + 1) << '_' << (c + 1);
    }
  }
}

void append_matrix_row(std::ostream& os, const Eigen::MatrixXd& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      os << ',' << format_double(m(r, c));
    }
  }
}

}  // namespace

void save_ensemble(const PosteriorEnsemble& ens, const std::string& path) {
  ens.validate();
  const LsbpParams& first = ens.draws.front();
  const int C = first.C;
  const int k = first.k();
  const int gcols = static_cast<int>(first.hs_global.cols());

  nlohmann::json meta;
  meta["format"] = "densreg-ensemble";
  meta["version"] = 1;
  meta["estimator"] = ens.meta.estimator;
  meta["vb_view"] = ens.meta.vb_view;
  meta["seed"] = ens.meta.seed;
  meta["config_hash"] = ens.meta.config_hash;
  meta["horizon"] = ens.meta.horizon;
  meta["columns"] = ens.meta.columns;
  meta["C"] = C;
  meta["k"] = k;
  meta["hs_global_cols"] = gcols;
  meta["n_draws"] = ens.size();
  meta["elbo_trace"] = ens.meta.elbo_trace;
  meta["log_joint_trace"] = ens.meta.log_joint_trace;
  if (!ens.meta.extra_json.empty()) {
    meta["extra"] = nlohmann::json::parse(ens.meta.extra_json);
  }

  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_ensemble: cannot open " + path);
  os << "# densreg-ensemble v1\n";
  os << "# " << meta.dump() << "\n";

  os << "draw";
  append_matrix_header(os, "beta", C, k);
  for (int c = 0; c < C; ++c) os << ",tau_" << (c + 1);
  append_matrix_header(os, "psi", C - 1, k);
  append_matrix_header(os, "hsl", C - 1, k);
  append_matrix_header(os, "hsa", C - 1, k);
  append_matrix_header(os, "hsg", C - 1, gcols);
  for (int c = 0; c + 1 < C; ++c) os << ",xi_" << (c + 1);
  os << "\n";

  for (int m = 0; m < ens.size(); ++m) {
    const LsbpParams& d = ens.draws[m];
    os << m;
    append_matrix_row(os, d.beta);
    for (int c = 0; c < C; ++c) os << ',' << format_double(d.tau[c]);
    append_matrix_row(os, d.psi);
    append_matrix_row(os, d.hs_local);
    append_matrix_row(os, d.hs_aux);
    append_matrix_row(os, d.hs_global);
    for (int c = 0; c + 1 < C; ++c) os << ',' << format_double(d.hs_xi[c]);
    os << "\n";
  }
  if (!os) throw std::runtime_error("save_ensemble: write failed for " + path);
}

PosteriorEnsemble load_ensemble(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_ensemble: cannot open " + path);

  std::string line;
  nlohmann::json meta;
  bool have_meta = false;
  while (std::getline(is, line) && !line.empty() && line[0] == '#') {
    const auto pos = line.find('{');
    if (pos != std::string::npos) {
      meta = nlohmann::json::parse(line.substr(pos));
      have_meta = true;
    }
  }
  if (!have_meta) throw std::runtime_error("load_ensemble: missing manifest in " + path);
  if (meta.value("format", "") != std::string("densreg-ensemble")) {
    throw std::runtime_error("load_ensemble: not an ensemble file: " + path);
  }

  PosteriorEnsemble ens;
  ens.meta.estimator = meta.value("estimator", "");
  ens.meta.vb_view = meta.value("vb_view", "");
  ens.meta.seed = meta.value("seed", std::uint64_t{0});
  ens.meta.config_hash = meta.value("config_hash", "");
  ens.meta.horizon = meta.value("horizon", 0);
  ens.meta.columns = meta.value("columns", std::vector<std::string>{});
  ens.meta.elbo_trace = meta.value("elbo_trace", std::vector<double>{});
  ens.meta.log_joint_trace = meta.value("log_joint_trace", std::vector<double>{});
  if (meta.contains("extra")) ens.meta.extra_json = meta["extra"].dump();

  const int C = meta.at("C").get<int>();
  const int k = meta.at("k").get<int>();
  const int gcols = meta.at("hs_global_cols").get<int>();
  const int n_draws = meta.at("n_draws").get<int>();

  // `line` currently holds the CSV header; data rows follow.
  ens.draws.reserve(n_draws);
  std::vector<double> cells;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    cells.clear();
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));

    const std::size_t expected = 1 + static_cast<std::size_t>(C) * k + C +
                                 static_cast<std::size_t>(C - 1) * (3 * k + gcols + 1);
    if (cells.size() != expected) {
      throw std::runtime_error("load_ensemble: malformed row in " + path);
    }
    LsbpParams d = LsbpParams::zero(C, k);
    std::size_t at = 1;
    for (int r = 0; r < C; ++r)
      for (int c = 0; c < k; ++c) d.beta(r, c) = cells[at++];
    for (int c = 0; c < C; ++c) d.tau[c] = cells[at++];
    auto read_mat = [&](Eigen::MatrixXd& m, int rows, int cols) {
      m.resize(rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = cells[at++];
    };
    read_mat(d.psi, C - 1, k);
    read_mat(d.hs_local, C - 1, k);
    read_mat(d.hs_aux, C - 1, k);
    read_mat(d.hs_global, C - 1, gcols);
    d.hs_xi.resize(C - 1);
    for (int c = 0; c + 1 < C; ++c) d.hs_xi[c] = cells[at++];
    ens.draws.push_back(std::move(d));
  }
  if (ens.size() != n_draws) {
    throw std::runtime_error("load_ensemble: draw count mismatch in " + path);
  }
  ens.validate();
  return ens;
}

}  // namespace densreg
