#include <CLI11.hpp>

#include "qnr/cli/config.hpp"
#include "qnr/cli/run.hpp"

int main(int argc, char** argv) {
  using qnr::cli::RunConfig;
  using qnr::cli::Subcommand;

  CLI::App app{"Nonparametric regression with an exact rational solver whose pivot search "
               "runs classically or on a simulated Grover circuit"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_fit_options = [&config](CLI::App* cmd) {
    cmd->add_option("--input", config.input, "input CSV with a header row")->required();
    cmd->add_option("--y", config.y_column, "response column, by name or 0-based index")
        ->required();
    cmd->add_option("--alpha", config.alpha, "band level is 1 - alpha (default 0.05)");
    cmd->add_option("--backend", config.backend, "classical | quantum-sim (default classical)");
    cmd->add_option("--seed", config.seed, "seed for pivot search (default 0)");
    cmd->add_option("--grid", config.grid,
                    "evaluation grid: min:max:count or v1,v2,... (default: 20 points over "
                    "the data range)");
    cmd->add_option("--out", config.output_path, "report JSON path; band CSV lands beside it")
        ->required();
    cmd->add_option("--plot", config.plot_path, "optional SVG band plot path");
    cmd->add_option("--holdout", config.holdout_column,
                    "column of observations scored against the band at the data points");
  };

  auto* fit_linear = app.add_subcommand("fit-linear", "global linear fit with confidence band");
  add_fit_options(fit_linear);
  fit_linear->add_option("--grid-column", config.grid_column,
                         "predictor the grid varies (default: first non-constant column)");

  auto* fit_local =
      app.add_subcommand("fit-local", "local polynomial fit with confidence band");
  add_fit_options(fit_local);
  fit_local->add_option("--degree", config.degree, "local polynomial degree (default 1)");
  fit_local->add_option("--kernel", config.kernel,
                        "gaussian | epanechnikov | boxcar (default gaussian)");
  fit_local->add_option("--bandwidth", config.bandwidth,
                        "kernel bandwidth; omit for the normal-reference rule");

  auto* rref = app.add_subcommand("rref", "reduced row-echelon form of a CSV matrix");
  rref->add_option("--input", config.input, "input CSV with a header row")->required();
  rref->add_option("--backend", config.backend, "classical | quantum-sim (default classical)");
  rref->add_option("--seed", config.seed, "seed for pivot search (default 0)");
  rref->add_option("--out", config.output_path, "optional JSON output path");

  auto* grover = app.add_subcommand("grover-demo", "search a marked set and report the odds");
  grover->add_option("--qubits", config.qubits, "register size, 1..16")->required();
  grover->add_option("--marked", config.marked, "comma-separated marked basis indices")
      ->required();
  grover->add_option("--seed", config.seed, "measurement seed (default 0)");
  grover->add_option("--out", config.output_path, "optional JSON output path");

  auto* coverage =
      app.add_subcommand("coverage-sim", "empirical coverage of the linear band");
  coverage->add_option("--replicates", config.replicates, "number of synthetic datasets")
      ->required();
  coverage->add_option("--n", config.sim_n, "observations per dataset")->required();
  coverage->add_option("--alpha", config.alpha, "band level is 1 - alpha (default 0.05)");
  coverage->add_option("--seed", config.seed, "base seed; replicate i uses seed + i");
  coverage->add_option("--backend", config.backend,
                       "classical | quantum-sim (default classical)");
  coverage->add_option("--threads", config.threads, "worker threads, 0 = hardware count");
  coverage->add_option("--out", config.output_path, "optional JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qnr::cli::kExitOk : qnr::cli::kExitConfig;
  }

  if (fit_linear->parsed())
    config.subcommand = Subcommand::FitLinear;
  else if (fit_local->parsed())
    config.subcommand = Subcommand::FitLocal;
  else if (rref->parsed())
    config.subcommand = Subcommand::Rref;
  else if (grover->parsed())
    config.subcommand = Subcommand::GroverDemo;
  else
    config.subcommand = Subcommand::CoverageSim;

  return qnr::cli::run(config);
}
