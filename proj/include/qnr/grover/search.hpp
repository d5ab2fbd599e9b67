#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "qnr/quantum/gates.hpp"
#include "qnr/quantum/state.hpp"
#include "qnr/rng.hpp"

namespace qnr::grover {

// Membership oracle over basis indices [0, domain_size).  The predicate must
// be deterministic, side-effect free, and callable from any thread.
struct Oracle {
  std::uint64_t domain_size = 0;
  std::function<bool(std::uint64_t)> predicate;

  bool marked(std::uint64_t index) const { return predicate(index); }
};

struct GroverResult {
  std::optional<std::uint64_t> found_index;  // present only if classically verified
  std::uint64_t iterations_used = 0;         // Grover iterations applied, all rounds
  std::uint64_t oracle_calls = 0;            // phase-oracle applications + verifications
  std::uint64_t rounds = 0;                  // measurement rounds
  bool verified = false;
};

// One Grover iteration: phase flip of the marked amplitudes, then the
// diffusion  H^n (2|0><0| - 1) H^n = 2|s><s| - 1  (inversion about the mean).
// The middle reflection negates every amplitude except |0>, which fixes the
// overall sign so that a single iteration on N=4, M=1 lands exactly on the
// marked state with amplitude +1.
inline quantum::StateVector grover_iterate(const quantum::StateVector& state,
                                           const Oracle& oracle) {
  if (state.dim() != oracle.domain_size)
    throw std::invalid_argument("grover_iterate: state dimension != oracle domain");

  quantum::StateVector out = state;
  for (std::uint64_t i = 0; i < out.dim(); ++i)
    if (oracle.marked(i)) out[i] = -out[i];

  out = quantum::apply_hadamard_all(out);
  for (std::uint64_t i = 1; i < out.dim(); ++i) out[i] = -out[i];
  return quantum::apply_hadamard_all(out);
}

// Probability of measuring a marked index after k iterations from the uniform
// state, with M marked items out of N: sin^2((2k+1) * asin(sqrt(M/N))).
inline double success_probability(std::uint64_t N, std::uint64_t M, std::uint64_t k) {
  if (M == 0) throw std::invalid_argument("success_probability: M must be positive");
  if (M > N) throw std::invalid_argument("success_probability: M must not exceed N");
  const double theta = std::asin(std::sqrt(static_cast<double>(M) / static_cast<double>(N)));
  const double s = std::sin(static_cast<double>(2 * k + 1) * theta);
  return s * s;
}

// floor((pi/4) * sqrt(N/M)); at this count the success probability is at
// least 1 - M/N.
inline std::uint64_t optimal_iterations(std::uint64_t N, std::uint64_t M) {
  if (M == 0) throw std::invalid_argument("optimal_iterations: M must be positive");
  if (M > N) throw std::invalid_argument("optimal_iterations: M must not exceed N");
  const double pi = 3.14159265358979323846;
  return static_cast<std::uint64_t>(
      std::floor(pi / 4.0 * std::sqrt(static_cast<double>(N) / static_cast<double>(M))));
}

// Search with the marked count unknown: the randomized exponential schedule.
// Each round draws an iteration count uniformly from [0, ceil(m)), applies it
// to a fresh uniform superposition, measures, and classically verifies the
// outcome against the predicate; m grows by a factor 6/5 up to sqrt(N).
// Returns a verified marked index, or absent after max_rounds failed rounds
// (always absent when nothing is marked, since verification cannot pass).
inline GroverResult grover_search(const Oracle& oracle, int n_qubits, std::uint64_t seed,
                                  std::uint64_t max_rounds = 32) {
  const std::uint64_t N = std::uint64_t{1} << n_qubits;
  if (oracle.domain_size != N)
    throw std::invalid_argument("grover_search: oracle domain must be 2^n_qubits");

  Rng rng(seed);
  GroverResult result;
  const double cap = std::sqrt(static_cast<double>(N));
  double m = 1.0;

  const quantum::StateVector uniform =
      quantum::apply_hadamard_all(quantum::new_state(n_qubits, 0));

  for (std::uint64_t round = 0; round < max_rounds; ++round) {
    ++result.rounds;
    const std::uint64_t span = static_cast<std::uint64_t>(std::ceil(m));
    const std::uint64_t k = (span <= 1) ? 0 : rng.below(span);

    quantum::StateVector state = uniform;
    for (std::uint64_t i = 0; i < k; ++i) {
      state = grover_iterate(state, oracle);
      ++result.oracle_calls;
    }
    result.iterations_used += k;

    const auto outcome = quantum::measure_all(state, rng);
    ++result.oracle_calls;  // classical verification is one more query
    if (oracle.marked(outcome.basis_index)) {
      result.found_index = outcome.basis_index;
      result.verified = true;
      return result;
    }
    m = std::min(m * 1.2, cap);
  }
  return result;
}

}  // namespace qnr::grover
