#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qnr/quantum/state.hpp"

namespace qnr::quantum {

// A k-qubit gate: a 2^k x 2^k unitary, stored row-major.  The first target
// qubit a gate is applied to corresponds to the most significant bit of the
// gate-local basis index, matching the global qubit ordering.
class Gate {
public:
  Gate(int arity, std::vector<Amplitude> matrix) : arity_(arity), m_(std::move(matrix)) {
    if (arity < 1) throw std::invalid_argument("Gate: arity must be positive");
    const std::size_t d = dim();
    if (m_.size() != d * d) throw std::invalid_argument("Gate: matrix must be 2^arity square");
  }

  // Validating factory for matrices not known unitary by construction.
  static Gate from_matrix(int arity, std::vector<Amplitude> matrix, double tol = 1e-12) {
    Gate g(arity, std::move(matrix));
    if (!g.is_unitary(tol)) throw std::invalid_argument("Gate: matrix is not unitary");
    return g;
  }

  int arity() const { return arity_; }
  std::size_t dim() const { return std::size_t{1} << arity_; }
  const Amplitude& at(std::size_t r, std::size_t c) const { return m_[r * dim() + c]; }
  const std::vector<Amplitude>& matrix() const { return m_; }

  // Entrywise check of U * U^dagger = I.
  bool is_unitary(double tol = 1e-12) const {
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        Amplitude acc{0.0, 0.0};
        for (std::size_t k = 0; k < d; ++k) acc += at(r, k) * std::conj(at(c, k));
        const Amplitude want = (r == c) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
        if (std::abs(acc - want) > tol) return false;
      }
    }
    return true;
  }

private:
  int arity_;
  std::vector<Amplitude> m_;
};

enum class GateName { Id, X, Y, Z, H, Xor, Swap };

// The fixed gate set: identity, the Pauli matrices, Hadamard, XOR (controlled
// NOT, control = first target), and SWAP.
inline Gate standard_gate(GateName name) {
  const double s = 1.0 / std::sqrt(2.0);
  const Amplitude i{0.0, 1.0};
  switch (name) {
    case GateName::Id:
      return Gate(1, {1, 0, 0, 1});
    case GateName::X:
      return Gate(1, {0, 1, 1, 0});
    case GateName::Y:
      return Gate(1, {0, -i, i, 0});
    case GateName::Z:
      return Gate(1, {1, 0, 0, -1});
    case GateName::H:
      return Gate(1, {s, s, s, -s});
    case GateName::Xor:
      return Gate(2, {1, 0, 0, 0,
                      0, 1, 0, 0,
                      0, 0, 0, 1,
                      0, 0, 1, 0});
    case GateName::Swap:
      return Gate(2, {1, 0, 0, 0,
                      0, 0, 1, 0,
                      0, 1, 0, 0,
                      0, 0, 0, 1});
  }
  throw std::invalid_argument("standard_gate: unknown gate name");
}

// Discrete Fourier transform on n qubits: entries w^(jk) / sqrt(N) with
// w = exp(2 pi i / N), N = 2^n.  qft(1) is the Hadamard gate.
inline Gate qft(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("qft: n_qubits must be positive");
  const std::size_t N = std::size_t{1} << n_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  const double two_pi_over_n = 2.0 * 3.14159265358979323846 / static_cast<double>(N);
  std::vector<Amplitude> m(N * N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) {
      const double phase = two_pi_over_n * static_cast<double>((j * k) % N);
      m[j * N + k] = scale * Amplitude{std::cos(phase), std::sin(phase)};
    }
  }
  return Gate(n_qubits, std::move(m));
}

// Applies the gate to the given target qubits, identity on the rest.  Works
// group-by-group over the amplitudes, O(2^n * 2^k), without materializing the
// embedded 2^n matrix.
inline StateVector apply_gate(const StateVector& state, const Gate& gate,
                              std::span<const int> targets) {
  const int n = state.n_qubits();
  const int k = gate.arity();
  if (static_cast<int>(targets.size()) != k)
    throw std::invalid_argument("apply_gate: target count must equal gate arity");

  std::uint64_t tmask = 0;
  std::vector<std::uint64_t> tbit(k);
  for (int j = 0; j < k; ++j) {
    const int q = targets[j];
    if (q < 0 || q >= n) throw std::invalid_argument("apply_gate: target qubit out of range");
    tbit[j] = std::uint64_t{1} << (n - 1 - q);  // qubit 0 = most significant bit
    if (tmask & tbit[j]) throw std::invalid_argument("apply_gate: duplicate target qubit");
    tmask |= tbit[j];
  }

  // spread[g] = global index offset carrying the gate-local basis index g.
  const std::size_t gd = gate.dim();
  std::vector<std::uint64_t> spread(gd, 0);
  for (std::size_t g = 0; g < gd; ++g)
    for (int j = 0; j < k; ++j)
      if ((g >> (k - 1 - j)) & 1) spread[g] |= tbit[j];

  std::vector<Amplitude> out(state.dim());
  std::vector<Amplitude> group(gd);
  for (std::uint64_t base = 0; base < state.dim(); ++base) {
    if (base & tmask) continue;
    for (std::size_t g = 0; g < gd; ++g) group[g] = state[base | spread[g]];
    for (std::size_t r = 0; r < gd; ++r) {
      Amplitude acc{0.0, 0.0};
      for (std::size_t c = 0; c < gd; ++c) acc += gate.at(r, c) * group[c];
      out[base | spread[r]] = acc;
    }
  }
  return StateVector(n, std::move(out));
}

inline StateVector apply_gate(const StateVector& state, const Gate& gate,
                              std::initializer_list<int> targets) {
  return apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

// H on every qubit; used by the Grover diffusion and to prepare the uniform
// superposition.
inline StateVector apply_hadamard_all(const StateVector& state) {
  const Gate h = standard_gate(GateName::H);
  StateVector out = state;
  for (int q = 0; q < state.n_qubits(); ++q) out = apply_gate(out, h, {q});
  return out;
}

}  // namespace qnr::quantum
