#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "djh/promise.hpp"
#include "djh/qft.hpp"

namespace djh {

// State over the product basis X x H; amplitude of |x,h> at index x*|H| + h.
struct QuantumState {
  int x_size = 0;
  int h_size = 0;
  std::vector<cplx> amps;

  double norm() const;
  int index(int x, int h) const { return x * h_size + h; }
};

// H-multiplication oracle |g,h> -> |g, f(g) h>, stored as the basis
// permutation it induces.
struct OracleMatrix {
  int x_size = 0;
  int h_size = 0;
  std::vector<int> perm;  // basis index -> image basis index

  void apply(QuantumState& state) const;
};

OracleMatrix oracle_matrix(const PromiseFunction& f, int x_size);

enum class CircuitVerdict { Constant, Balanced, PromiseViolated };

std::string to_string(CircuitVerdict v);

struct CircuitReport {
  std::string function_id;
  int k = 0, i = 0, j = 0;
  int h0 = 0;
  double probability_identity = 0.0;
  CircuitVerdict verdict = CircuitVerdict::PromiseViolated;
  double verdict_tol = 0.0;
  // amplitudes at (1_X, h') for beta(h') = (r, j, k), r = 1..dim rho^k
  std::vector<cplx> identity_block;
  // full final state when a dump was requested
  std::vector<cplx> final_state;
  // seeded Born-rule sample of (x, h), when requested
  std::optional<std::pair<int, int>> sampled_outcome;
};

// One-query promise circuit: prepare |1_X, h0> with beta(h0) = (i,j,k), apply
// F_X (x) F_H, the oracle, then the adjoint transforms; report the Born
// probability of reading 1_X in the first register. X is treated as Z_|X|.
CircuitReport run_djh(const PromiseFunction& f, const IrrepSet& s_h, int k, int i, int j,
                      double verdict_tol = 1e-6, bool dump_state = false,
                      std::optional<uint64_t> sample_seed = std::nullopt);

// Closed-form amplitudes of the identity block, for cross-checking the full
// simulation; the squared norm equals probability_identity.
std::vector<cplx> amplitude_identity_block(const PromiseFunction& f, const IrrepSet& s_h,
                                           int k, int i);

struct LemmaReport {
  double max_deviation = 0.0;
  int trials = 0;
};

// Spot-checks the matrix-multiplication identity behind the circuit analysis:
//   sum_h tau^k_{ij}(h) conj(tau^t_{rs}(w h)) = conj(rho^k_{ri}(w)) d_{js} d_{kt}
// on random index tuples and elements w.
LemmaReport verify_matrixmult_lemma(const IrrepSet& s_h, int trials, uint64_t seed);

}  // namespace djh
