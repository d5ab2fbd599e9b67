#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "qnr/errors.hpp"
#include "qnr/exact/elimination.hpp"
#include "qnr/regress/local.hpp"

namespace qnr::cli {

enum class Subcommand { FitLinear, FitLocal, Rref, GroverDemo, CoverageSim };

// One flat bag of options; each subcommand reads the fields it understands.
struct RunConfig {
  Subcommand subcommand = Subcommand::FitLinear;

  std::string input;
  std::string y_column;
  std::string holdout_column;  // optional: responses checked against the band
  std::string grid_column;     // optional: which predictor the grid varies
  std::string grid;            // "min:max:count", explicit "v1,v2,...", or "" for auto
  std::string output_path;
  std::string plot_path;

  std::size_t degree = 1;
  std::string kernel = "gaussian";
  double bandwidth = 0.0;  // 0 means the normal-reference default
  double alpha = 0.05;
  std::string backend = "classical";
  std::uint64_t seed = 0;

  int qubits = 0;       // grover-demo
  std::string marked;   // grover-demo: comma-separated basis indices

  std::size_t replicates = 0;  // coverage-sim
  std::size_t sim_n = 0;       // coverage-sim
  unsigned threads = 0;        // coverage-sim: 0 picks hardware concurrency
};

inline exact::PivotBackend parse_backend(const std::string& name) {
  if (name == "classical") return exact::PivotBackend::Classical;
  if (name == "quantum-sim") return exact::PivotBackend::QuantumSim;
  throw ConfigError("config: backend must be \"classical\" or \"quantum-sim\", got \"" + name +
                    "\"");
}

inline regress::KernelFamily parse_kernel(const std::string& name) {
  if (name == "gaussian") return regress::KernelFamily::Gaussian;
  if (name == "epanechnikov") return regress::KernelFamily::Epanechnikov;
  if (name == "boxcar") return regress::KernelFamily::Boxcar;
  throw ConfigError("config: kernel must be gaussian, epanechnikov, or boxcar, got \"" + name +
                    "\"");
}

namespace detail {

inline double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ConfigError("config: cannot parse " + what + " \"" + text + "\"");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

// Evaluation grid from the --grid flag: "min:max:count" for an equally
// spaced range, a comma list for explicit points, empty for 20 points over
// [fallback_lo, fallback_hi] (the data range).
inline std::vector<double> build_grid(const std::string& spec, double fallback_lo,
                                      double fallback_hi) {
  double lo = fallback_lo, hi = fallback_hi;
  std::size_t count = 20;

  if (!spec.empty() && spec.find(':') != std::string::npos) {
    const auto parts = detail::split(spec, ':');
    if (parts.size() != 3) throw ConfigError("config: grid range must be min:max:count");
    lo = detail::parse_double(parts[0], "grid min");
    hi = detail::parse_double(parts[1], "grid max");
    const double c = detail::parse_double(parts[2], "grid count");
    if (c < 2 || c != std::floor(c)) throw ConfigError("config: grid count must be an integer >= 2");
    count = static_cast<std::size_t>(c);
  } else if (!spec.empty()) {
    std::vector<double> points;
    for (const auto& part : detail::split(spec, ','))
      points.push_back(detail::parse_double(part, "grid point"));
    if (points.empty()) throw ConfigError("config: grid list is empty");
    return points;
  }

  if (!(hi >= lo)) throw ConfigError("config: grid max must be >= min");
  std::vector<double> points(count);
  for (std::size_t i = 0; i < count; ++i)
    points[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return points;
}

inline std::vector<std::uint64_t> parse_marked(const std::string& list) {
  std::vector<std::uint64_t> out;
  if (list.empty()) return out;
  for (const auto& part : detail::split(list, ',')) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc{} || res.ptr != part.data() + part.size())
      throw ConfigError("config: cannot parse marked index \"" + part + "\"");
    out.push_back(v);
  }
  return out;
}

// QNN_NPR_SEED overrides the --seed flag when present.
inline void apply_env_seed(RunConfig& config) {
  const char* env = std::getenv("QNN_NPR_SEED");
  if (!env) return;
  const std::string text = env;
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ConfigError("config: QNN_NPR_SEED is not an unsigned integer: \"" + text + "\"");
  config.seed = v;
}

}  // namespace qnr::cli
