#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qnr/cli/config.hpp"
#include "qnr/errors.hpp"
#include "qnr/exact/elimination.hpp"
#include "qnr/grover/search.hpp"
#include "qnr/io/csv.hpp"
#include "qnr/io/report.hpp"
#include "qnr/io/svg.hpp"
#include "qnr/quantum/gates.hpp"
#include "qnr/quantum/state.hpp"
#include "qnr/regress/coverage.hpp"
#include "qnr/regress/linear.hpp"
#include "qnr/regress/local.hpp"

namespace qnr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumeric = 3;

namespace detail {

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CsvError("io: cannot open " + path + " for writing");
  out << content;
  if (!out) throw CsvError("io: failed writing " + path);
}

inline std::string band_csv_path(const std::string& json_path) {
  const std::string suffix = ".json";
  if (json_path.size() > suffix.size() &&
      json_path.compare(json_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return json_path.substr(0, json_path.size() - suffix.size()) + ".band.csv";
  return json_path + ".band.csv";
}

// Emit to the output file when one is configured, stdout otherwise.
inline void emit(const RunConfig& config, const std::string& content) {
  if (config.output_path.empty())
    std::cout << content;
  else
    write_text_file(config.output_path, content);
}

inline void validate_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("config: alpha must be in (0, 1)");
}

// Removes one column from a table, returning its values.
inline std::vector<double> extract_column(io::CsvTable& table, std::size_t index) {
  std::vector<double> values;
  values.reserve(table.n_rows());
  for (auto& row : table.rows) {
    values.push_back(row[index]);
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(index));
  }
  for (auto& row : table.raw) row.erase(row.begin() + static_cast<std::ptrdiff_t>(index));
  table.header.erase(table.header.begin() + static_cast<std::ptrdiff_t>(index));
  return values;
}

inline std::optional<std::vector<double>> take_holdout(io::CsvTable& table,
                                                       const RunConfig& config) {
  if (config.holdout_column.empty()) return std::nullopt;
  if (config.holdout_column == config.y_column)
    throw ConfigError("config: holdout column must differ from the response column");
  const std::size_t index = io::resolve_column(table, config.holdout_column);
  return extract_column(table, index);
}

// The grid varies one predictor; the rest sit at their column means.  By
// default the first non-constant predictor is varied.
inline std::size_t pick_grid_column(const io::NamedDataset& nd, const std::string& requested) {
  if (!requested.empty()) {
    for (std::size_t j = 0; j < nd.predictor_names.size(); ++j)
      if (nd.predictor_names[j] == requested) return j;
    throw ConfigError("config: no predictor column \"" + requested + "\"");
  }
  const auto& design = nd.data.design;
  for (std::size_t j = 0; j < design.cols(); ++j)
    for (std::size_t i = 1; i < design.rows(); ++i)
      if (design.at(i, j) != design.at(0, j)) return j;
  return 0;
}

inline std::vector<double> column_of(const RealMatrix& m, std::size_t j) {
  std::vector<double> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

inline void emit_report(const RunConfig& config, const io::FitReport& report,
                        const std::vector<double>& grid_x,
                        const regress::ConfidenceBand& band, const std::vector<double>& data_x,
                        const std::vector<double>& data_y) {
  write_text_file(config.output_path, io::write_report_json(report));
  write_text_file(band_csv_path(config.output_path), io::write_band_csv(report));
  if (!config.plot_path.empty())
    write_text_file(config.plot_path,
                    io::render_band_svg(grid_x, band, data_x, data_y,
                                        report.subcommand + " band"));
}

inline int run_fit_linear(const RunConfig& config) {
  validate_alpha(config.alpha);
  if (config.output_path.empty()) throw ConfigError("config: fit-linear requires --out");
  const auto backend = parse_backend(config.backend);

  io::CsvTable table = io::read_csv_file(config.input);
  const auto holdout = take_holdout(table, config);
  const io::NamedDataset nd = io::to_dataset(table, config.y_column);
  const auto& data = nd.data;

  const auto fit = regress::fit_linear(data, backend, config.seed);

  const std::size_t gcol = pick_grid_column(nd, config.grid_column);
  const auto xcol = column_of(data.design, gcol);
  const double lo = *std::min_element(xcol.begin(), xcol.end());
  const double hi = *std::max_element(xcol.begin(), xcol.end());
  const auto grid_x = build_grid(config.grid, lo, hi);

  std::vector<double> base(data.p(), 0.0);
  for (std::size_t j = 0; j < data.p(); ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < data.n(); ++i) mean += data.design.at(i, j);
    base[j] = mean / static_cast<double>(data.n());
  }
  std::vector<std::vector<double>> grid_points;
  grid_points.reserve(grid_x.size());
  for (double v : grid_x) {
    auto point = base;
    point[gcol] = v;
    grid_points.push_back(std::move(point));
  }

  const auto band = regress::confidence_band(data, fit, grid_points, config.alpha, backend);

  io::FitReport report;
  report.subcommand = "fit-linear";
  report.input = config.input;
  report.y_column = nd.response_name;
  report.backend = config.backend;
  report.grid_spec = config.grid.empty() ? "auto" : config.grid;
  report.alpha = config.alpha;
  report.seed = config.seed;
  report.coefficients = fit.beta_hat;
  report.sigma2_hat = fit.sigma2_hat;
  report.effective_dof = fit.effective_dof;
  report.rank = fit.rank;
  report.used_pseudoinverse = fit.used_pseudoinverse;
  report.c = band.c;
  report.stats = fit.backend_stats;
  for (std::size_t g = 0; g < grid_x.size(); ++g)
    report.rows.push_back({grid_x[g], band.lower[g], band.center[g], band.upper[g]});

  if (holdout) {
    std::vector<std::vector<double>> obs_points;
    obs_points.reserve(data.n());
    for (std::size_t i = 0; i < data.n(); ++i) obs_points.push_back(data.design.row(i));
    const auto obs_band =
        regress::confidence_band(data, fit, obs_points, config.alpha, backend);
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < holdout->size(); ++i)
      if (regress::training_accept((*holdout)[i], obs_band, i)) ++accepted;
    report.holdout_rows = holdout->size();
    report.accepted_count = accepted;
  }

  emit_report(config, report, grid_x, band, xcol, data.response);
  return kExitOk;
}

inline int run_fit_local(const RunConfig& config) {
  validate_alpha(config.alpha);
  if (config.output_path.empty()) throw ConfigError("config: fit-local requires --out");
  const auto backend = parse_backend(config.backend);
  const auto family = parse_kernel(config.kernel);

  io::CsvTable table = io::read_csv_file(config.input);
  const auto holdout = take_holdout(table, config);
  const io::XySeries xy = io::to_xy(table, config.y_column);

  const double h =
      config.bandwidth > 0.0 ? config.bandwidth : regress::default_bandwidth(xy.xs);
  const regress::KernelSpec spec(family, h);

  const double lo = *std::min_element(xy.xs.begin(), xy.xs.end());
  const double hi = *std::max_element(xy.xs.begin(), xy.xs.end());
  const auto grid_x = build_grid(config.grid, lo, hi);

  const auto lb = regress::local_band(xy.xs, xy.ys, grid_x, config.degree, spec, config.alpha,
                                      backend, config.seed);

  io::FitReport report;
  report.subcommand = "fit-local";
  report.input = config.input;
  report.y_column = xy.y_name;
  report.backend = config.backend;
  report.grid_spec = config.grid.empty() ? "auto" : config.grid;
  report.degree = config.degree;
  report.kernel_family = config.kernel;
  report.bandwidth = h;
  report.alpha = config.alpha;
  report.seed = config.seed;
  report.sigma2_hat = lb.sigma2_hat;
  report.effective_dof = lb.effective_dof;
  report.c = lb.band.c;
  report.stats = lb.backend_stats;
  for (std::size_t g = 0; g < grid_x.size(); ++g)
    report.rows.push_back({grid_x[g], lb.band.lower[g], lb.band.center[g], lb.band.upper[g]});

  if (holdout) {
    const auto obs = regress::local_band(xy.xs, xy.ys, xy.xs, config.degree, spec, config.alpha,
                                         backend, config.seed);
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < holdout->size(); ++i)
      if (regress::training_accept((*holdout)[i], obs.band, i)) ++accepted;
    report.holdout_rows = holdout->size();
    report.accepted_count = accepted;
  }

  emit_report(config, report, grid_x, lb.band, xy.xs, xy.ys);
  return kExitOk;
}

inline int run_rref(const RunConfig& config) {
  const auto backend = parse_backend(config.backend);
  const io::CsvTable table = io::read_csv_file(config.input);

  exact::Matrix m(table.n_rows(), table.n_cols());
  for (std::size_t r = 0; r < table.n_rows(); ++r)
    for (std::size_t c = 0; c < table.n_cols(); ++c) {
      try {
        m.at(r, c) = exact::Rational::parse(table.raw[r][c]);
      } catch (const std::invalid_argument&) {
        throw CsvError("csv: cell \"" + table.raw[r][c] + "\" at row " + std::to_string(r + 1) +
                       ", column " + table.header[c] + " is not an exact rational");
      }
    }

  const auto result = exact::rref(m, backend, config.seed);

  std::string text = "rank: " + std::to_string(result.rank) + "\n";
  text += "pivots:";
  for (std::size_t c : result.pivot_cols) text += " " + std::to_string(c);
  text += "\n";
  for (std::size_t r = 0; r < result.rref.rows(); ++r) {
    text += "row:";
    for (std::size_t c = 0; c < result.rref.cols(); ++c)
      text += " " + result.rref.at(r, c).str();
    text += "\n";
  }
  std::cout << text;

  if (!config.output_path.empty()) {
    io::JsonWriter w;
    w.begin_object();
    w.key("rank");
    w.value(result.rank);
    w.key("pivot_cols");
    w.begin_array();
    for (std::size_t c : result.pivot_cols) w.value(c);
    w.end_array();
    w.key("rref");
    w.begin_array();
    for (std::size_t r = 0; r < result.rref.rows(); ++r) {
      w.begin_array();
      for (std::size_t c = 0; c < result.rref.cols(); ++c) w.value(result.rref.at(r, c).str());
      w.end_array();
    }
    w.end_array();
    w.key("backend_stats");
    w.begin_object();
    w.key("comparisons");
    w.value(result.backend_stats.comparisons);
    w.key("oracle_calls");
    w.value(result.backend_stats.oracle_calls);
    w.key("grover_rounds");
    w.value(result.backend_stats.grover_rounds);
    w.key("grover_searches");
    w.value(result.backend_stats.grover_searches);
    w.end_object();
    w.end_object();
    write_text_file(config.output_path, w.str() + "\n");
  }
  return kExitOk;
}

inline int run_grover_demo(const RunConfig& config) {
  if (config.qubits < 1 || config.qubits > 16)
    throw ConfigError("config: --qubits must be between 1 and 16");
  auto marked = parse_marked(config.marked);
  if (marked.empty()) throw ConfigError("config: --marked needs at least one index");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

  const std::uint64_t domain = std::uint64_t{1} << config.qubits;
  for (std::uint64_t index : marked)
    if (index >= domain)
      throw ConfigError("config: marked index " + std::to_string(index) + " is outside [0, " +
                        std::to_string(domain) + ")");

  const grover::Oracle oracle{domain, [marked](std::uint64_t i) {
                                return std::binary_search(marked.begin(), marked.end(), i);
                              }};
  const std::size_t optimal = grover::optimal_iterations(domain, marked.size());
  const auto result = grover::grover_search(oracle, config.qubits, config.seed);

  // statevector check alongside the closed form, one row per iteration count
  quantum::StateVector state = quantum::apply_hadamard_all(quantum::new_state(config.qubits, 0));
  std::vector<double> simulated, theory;
  const std::uint64_t k_max = std::max<std::uint64_t>(optimal, 1);
  for (std::uint64_t k = 0;; ++k) {
    double mass = 0.0;
    for (std::uint64_t index : marked) mass += quantum::probability_of(state, index);
    simulated.push_back(mass);
    theory.push_back(grover::success_probability(domain, marked.size(), k));
    if (k == k_max) break;
    state = grover::grover_iterate(state, oracle);
  }

  io::JsonWriter w;
  w.begin_object();
  w.key("qubits");
  w.value(config.qubits);
  w.key("domain_size");
  w.value(domain);
  w.key("marked");
  w.begin_array();
  for (std::uint64_t index : marked) w.value(static_cast<std::uint64_t>(index));
  w.end_array();
  w.key("seed");
  w.value(config.seed);
  w.key("optimal_iterations");
  w.value(optimal);
  w.key("success_probability");
  w.begin_array();
  for (std::size_t k = 0; k < theory.size(); ++k) {
    w.begin_object();
    w.key("iterations");
    w.value(k);
    w.key("closed_form");
    w.value(theory[k]);
    w.key("simulated");
    w.value(simulated[k]);
    w.end_object();
  }
  w.end_array();
  w.key("search");
  w.begin_object();
  w.key("found_index");
  if (result.found_index) w.value(static_cast<std::uint64_t>(*result.found_index)); else w.null();
  w.key("verified");
  w.value(result.verified);
  w.key("iterations_used");
  w.value(result.iterations_used);
  w.key("oracle_calls");
  w.value(result.oracle_calls);
  w.key("rounds");
  w.value(result.rounds);
  w.end_object();
  w.end_object();

  emit(config, w.str() + "\n");
  return kExitOk;
}

inline int run_coverage_sim(const RunConfig& config) {
  validate_alpha(config.alpha);
  if (config.replicates == 0) throw ConfigError("config: --replicates must be positive");
  if (config.sim_n < 3) throw ConfigError("config: --n must be at least 3");
  const auto backend = parse_backend(config.backend);

  const auto rep = regress::simulate_coverage(config.replicates, config.sim_n, config.alpha,
                                              config.seed, backend, config.threads);

  io::JsonWriter w;
  w.begin_object();
  w.key("replicates");
  w.value(rep.replicates);
  w.key("n");
  w.value(rep.n);
  w.key("alpha");
  w.value(rep.alpha);
  w.key("seed");
  w.value(config.seed);
  w.key("backend");
  w.value(config.backend);
  w.key("grid");
  w.begin_array();
  for (double g : rep.grid) w.value(g);
  w.end_array();
  w.key("hits");
  w.begin_array();
  for (std::size_t hitcount : rep.hits) w.value(hitcount);
  w.end_array();
  w.key("coverage");
  w.begin_array();
  for (double c : rep.coverage) w.value(c);
  w.end_array();
  w.key("min_coverage");
  w.value(*std::min_element(rep.coverage.begin(), rep.coverage.end()));
  w.end_object();

  emit(config, w.str() + "\n");
  return kExitOk;
}

}  // namespace detail

// Dispatches one configured run, mapping failures onto the exit-code
// contract: 1 usage/config, 2 data, 3 numeric/degrees-of-freedom.
inline int run(RunConfig config) {
  try {
    apply_env_seed(config);
    switch (config.subcommand) {
      case Subcommand::FitLinear: return detail::run_fit_linear(config);
      case Subcommand::FitLocal: return detail::run_fit_local(config);
      case Subcommand::Rref: return detail::run_rref(config);
      case Subcommand::GroverDemo: return detail::run_grover_demo(config);
      case Subcommand::CoverageSim: return detail::run_coverage_sim(config);
    }
    throw ConfigError("config: unknown subcommand");
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const DegreesOfFreedomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const EmptyNeighborhoodError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace qnr::cli
