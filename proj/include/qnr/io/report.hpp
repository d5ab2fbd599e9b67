#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnr/exact/elimination.hpp"
#include "qnr/io/json_writer.hpp"

namespace qnr::io {

struct BandRow {
  double x, lower, center, upper;
};

// Everything a fitting run reports.  Fields that only one subcommand fills
// stay empty elsewhere and serialize as null.
struct FitReport {
  // configuration echo
  std::string subcommand;
  std::string input;
  std::string y_column;
  std::string backend;
  std::string grid_spec;
  std::optional<std::size_t> degree;
  std::optional<std::string> kernel_family;
  std::optional<double> bandwidth;
  double alpha = 0.0;
  std::uint64_t seed = 0;

  // fit summary
  std::vector<double> coefficients;  // empty for local fits
  std::optional<double> sigma2_hat;
  double effective_dof = 0.0;
  std::optional<std::size_t> rank;
  std::optional<bool> used_pseudoinverse;

  // band
  double c = 0.0;
  std::vector<BandRow> rows;

  exact::PivotStats stats;

  // training rule against a holdout column, when one was provided
  std::optional<std::size_t> holdout_rows;
  std::optional<std::size_t> accepted_count;
};

inline std::string write_report_json(const FitReport& r) {
  JsonWriter w;
  w.begin_object();

  w.key("config");
  w.begin_object();
  w.key("subcommand");
  w.value(r.subcommand);
  w.key("input");
  w.value(r.input);
  w.key("y_column");
  w.value(r.y_column);
  w.key("degree");
  if (r.degree) w.value(*r.degree); else w.null();
  w.key("kernel");
  if (r.kernel_family) {
    w.begin_object();
    w.key("family");
    w.value(*r.kernel_family);
    w.key("bandwidth");
    w.value(r.bandwidth.value_or(0.0));
    w.end_object();
  } else {
    w.null();
  }
  w.key("alpha");
  w.value(r.alpha);
  w.key("backend");
  w.value(r.backend);
  w.key("seed");
  w.value(r.seed);
  w.key("grid");
  w.value(r.grid_spec);
  w.end_object();

  w.key("fit");
  w.begin_object();
  w.key("coefficients");
  w.begin_array();
  for (double b : r.coefficients) w.value(b);
  w.end_array();
  w.key("sigma2_hat");
  if (r.sigma2_hat) w.value(*r.sigma2_hat); else w.null();
  w.key("effective_dof");
  w.value(r.effective_dof);
  w.key("rank");
  if (r.rank) w.value(*r.rank); else w.null();
  w.key("used_pseudoinverse");
  if (r.used_pseudoinverse) w.value(*r.used_pseudoinverse); else w.null();
  w.end_object();

  w.key("band");
  w.begin_object();
  w.key("alpha");
  w.value(r.alpha);
  w.key("c");
  w.value(r.c);
  w.key("rows");
  w.begin_array();
  for (const auto& row : r.rows) {
    w.begin_object();
    w.key("x");
    w.value(row.x);
    w.key("lower");
    w.value(row.lower);
    w.key("center");
    w.value(row.center);
    w.key("upper");
    w.value(row.upper);
    w.end_object();
  }
  w.end_array();
  w.end_object();

  w.key("backend_stats");
  w.begin_object();
  w.key("comparisons");
  w.value(r.stats.comparisons);
  w.key("oracle_calls");
  w.value(r.stats.oracle_calls);
  w.key("grover_rounds");
  w.value(r.stats.grover_rounds);
  w.key("grover_searches");
  w.value(r.stats.grover_searches);
  w.end_object();

  w.key("training");
  if (r.holdout_rows) {
    w.begin_object();
    w.key("holdout_rows");
    w.value(*r.holdout_rows);
    w.key("accepted_count");
    w.value(r.accepted_count.value_or(0));
    w.end_object();
  } else {
    w.null();
  }

  w.end_object();
  return w.str() + "\n";
}

inline std::string write_band_csv(const FitReport& r) {
  std::string out = "x,lower,center,upper\n";
  for (const auto& row : r.rows)
    out += format_double(row.x) + "," + format_double(row.lower) + "," +
           format_double(row.center) + "," + format_double(row.upper) + "\n";
  return out;
}

}  // namespace qnr::io
