#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qnr/rng.hpp"

namespace qnr::quantum {

using Amplitude = std::complex<double>;

// Qubit ordering convention, used consistently across the library:
// qubit 0 is the MOST significant bit of the basis index.  For n qubits the
// basis state |q0 q1 ... q_{n-1}> has index  sum_k q_k << (n-1-k).
inline constexpr int kDefaultMaxQubits = 20;

// Dense statevector over the 2^n computational basis states.
class StateVector {
public:
  StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
      : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1) throw std::invalid_argument("StateVector: n_qubits must be positive");
    if (amps_.size() != (std::size_t{1} << n_qubits))
      throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
  }

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }

  const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }
  Amplitude& operator[](std::uint64_t i) { return amps_[i]; }

  const std::vector<Amplitude>& amplitudes() const { return amps_; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

private:
  int n_qubits_;
  std::vector<Amplitude> amps_;
};

struct MeasurementOutcome {
  std::uint64_t basis_index = 0;
  double probability = 0.0;  // Born probability of basis_index in the measured state
};

// Basis state |basis_index> on n_qubits qubits.
inline StateVector new_state(int n_qubits, std::uint64_t basis_index,
                             int max_qubits = kDefaultMaxQubits) {
  if (n_qubits < 1) throw std::invalid_argument("new_state: n_qubits must be positive");
  if (n_qubits > max_qubits)
    throw std::invalid_argument("new_state: n_qubits exceeds the configured qubit cap");
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (basis_index >= dim) throw std::out_of_range("new_state: basis_index out of range");
  std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
  amps[basis_index] = Amplitude{1.0, 0.0};
  return StateVector(n_qubits, std::move(amps));
}

// Born probability of observing |basis_index>.
inline double probability_of(const StateVector& state, std::uint64_t basis_index) {
  if (basis_index >= state.dim())
    throw std::out_of_range("probability_of: basis_index out of range");
  return std::norm(state[basis_index]);
}

// Measurement in the computational basis, consuming draws from rng.
// The state must be normalized to within 1e-6.
inline MeasurementOutcome measure_all(const StateVector& state, Rng& rng) {
  const double norm2 = state.norm_squared();
  if (std::abs(norm2 - 1.0) > 1e-6)
    throw std::runtime_error("measure_all: state is not normalized");
  const double u = rng.uniform_double();
  double cum = 0.0;
  std::uint64_t last_nonzero = 0;
  bool seen_nonzero = false;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state[i]);
    if (p > 0.0) {
      last_nonzero = i;
      seen_nonzero = true;
    }
    cum += p;
    if (u < cum) return MeasurementOutcome{i, p};
  }
  // u landed in the rounding dust past the final partial sum.
  if (!seen_nonzero) throw std::runtime_error("measure_all: state has no support");
  return MeasurementOutcome{last_nonzero, std::norm(state[last_nonzero])};
}

inline MeasurementOutcome measure_all(const StateVector& state, std::uint64_t seed) {
  Rng rng(seed);
  return measure_all(state, rng);
}

}  // namespace qnr::quantum
