#include "djh/circuit.hpp"

#include <cmath>
#include <random>

#include "djh/errors.hpp"

namespace djh {

double QuantumState::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

void OracleMatrix::apply(QuantumState& state) const {
  if (int(state.amps.size()) != int(perm.size()))
    throw domain_error("oracle apply: state size mismatch");
  std::vector<cplx> out(state.amps.size());
  for (size_t idx = 0; idx < perm.size(); ++idx) out[perm[idx]] = state.amps[idx];
  state.amps = std::move(out);
}

OracleMatrix oracle_matrix(const PromiseFunction& f, int x_size) {
  f.validate();
  if (x_size != f.domain_size)
    throw domain_error("oracle_matrix: register size must match the function domain");
  const int h_size = f.codomain->order();
  OracleMatrix u;
  u.x_size = x_size;
  u.h_size = h_size;
  u.perm.resize(size_t(x_size) * h_size);
  std::vector<bool> hit(u.perm.size(), false);
  for (int g = 0; g < x_size; ++g)
    for (int h = 0; h < h_size; ++h) {
      const int to = g * h_size + f.codomain->mul(f.image[g], h);
      u.perm[g * h_size + h] = to;
      if (hit[to]) throw consistency_error("oracle_matrix: basis map is not a bijection");
      hit[to] = true;
    }
  return u;
}

std::string to_string(CircuitVerdict v) {
  switch (v) {
    case CircuitVerdict::Constant: return "constant";
    case CircuitVerdict::Balanced: return "balanced";
    case CircuitVerdict::PromiseViolated: return "promise-violated";
  }
  return "?";
}

namespace {

// apply a per-register transform: out[x',h'] accumulated register by register
void apply_x_transform(QuantumState& s, const FourierMatrix& fx) {
  std::vector<cplx> out(s.amps.size());
  for (int x = 0; x < s.x_size; ++x)
    for (int h = 0; h < s.h_size; ++h) {
      const cplx a = s.amps[s.index(x, h)];
      if (a == cplx{}) continue;
      for (int xp = 0; xp < s.x_size; ++xp)
        out[s.index(xp, h)] += a * fx.entries.at(x, xp);
    }
  s.amps = std::move(out);
}

void apply_h_transform(QuantumState& s, const FourierMatrix& fh) {
  std::vector<cplx> out(s.amps.size());
  for (int x = 0; x < s.x_size; ++x)
    for (int h = 0; h < s.h_size; ++h) {
      const cplx a = s.amps[s.index(x, h)];
      if (a == cplx{}) continue;
      for (int hp = 0; hp < s.h_size; ++hp)
        out[s.index(x, hp)] += a * fh.entries.at(h, hp);
    }
  s.amps = std::move(out);
}

void check_norm(const QuantumState& s, const char* stage) {
  if (std::abs(s.norm() - 1.0) > 1e-9)
    throw consistency_error(std::string("circuit: state norm drifted after ") + stage);
}

}  // namespace

CircuitReport run_djh(const PromiseFunction& f, const IrrepSet& s_h, int k, int i, int j,
                      double verdict_tol, bool dump_state,
                      std::optional<uint64_t> sample_seed) {
  f.validate();
  if (f.codomain.get() != s_h.group().get())
    throw domain_error("run_djh: irrep set belongs to a different group");
  if (k < 1 || k > s_h.count()) throw domain_error("run_djh: representation index out of range");
  if (k == 1)
    throw domain_error(
        "run_djh: the trivial representation cannot drive the circuit (h0 would be the "
        "identity); pick a non-trivial k");
  const int dim = s_h.dim(k);
  if (i < 1 || i > dim || j < 1 || j > dim)
    throw domain_error("run_djh: matrix indices out of range");

  const int x_size = f.domain_size;
  const int h_size = s_h.group()->order();
  const auto x_group = build_cyclic(x_size);
  const auto fx = fourier_matrix(irreps_of_abelian(x_group, {x_size}));
  const auto fh = fourier_matrix(s_h);
  const auto fx_dag = adjoint(fx);
  const auto fh_dag = adjoint(fh);
  const auto oracle = oracle_matrix(f, x_size);

  CircuitReport report;
  report.k = k;
  report.i = i;
  report.j = j;
  report.h0 = s_h.beta_inverse(i, j, k);
  report.verdict_tol = verdict_tol;
  {
    std::string id = "f:[";
    for (int g = 0; g < f.domain_size; ++g)
      id += (g ? "," : "") + f.codomain->label(f.image[g]);
    report.function_id = id + "]->|H|=" + std::to_string(h_size);
  }

  QuantumState state;
  state.x_size = x_size;
  state.h_size = h_size;
  state.amps.assign(size_t(x_size) * h_size, cplx{});
  state.amps[state.index(0, report.h0)] = 1.0;  // |1_X, h0>

  apply_x_transform(state, fx);
  apply_h_transform(state, fh);
  check_norm(state, "the forward Fourier layer");
  oracle.apply(state);
  check_norm(state, "the oracle");
  apply_x_transform(state, fx_dag);
  apply_h_transform(state, fh_dag);
  check_norm(state, "the inverse Fourier layer");

  double prob = 0.0;
  for (int h = 0; h < h_size; ++h) prob += std::norm(state.amps[state.index(0, h)]);
  report.probability_identity = prob;

  report.identity_block.resize(dim);
  for (int r = 1; r <= dim; ++r)
    report.identity_block[r - 1] = state.amps[state.index(0, s_h.beta_inverse(r, j, k))];

  if (prob >= 1.0 - verdict_tol)
    report.verdict = CircuitVerdict::Constant;
  else if (prob <= verdict_tol)
    report.verdict = CircuitVerdict::Balanced;
  else
    report.verdict = CircuitVerdict::PromiseViolated;

  if (dump_state) report.final_state = state.amps;

  if (sample_seed) {
    std::mt19937_64 rng(*sample_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double target = unit(rng), acc = 0.0;
    int picked = int(state.amps.size()) - 1;
    for (size_t idx = 0; idx < state.amps.size(); ++idx) {
      acc += std::norm(state.amps[idx]);
      if (acc >= target) {
        picked = int(idx);
        break;
      }
    }
    report.sampled_outcome = std::make_pair(picked / h_size, picked % h_size);
  }
  return report;
}

std::vector<cplx> amplitude_identity_block(const PromiseFunction& f, const IrrepSet& s_h,
                                           int k, int i) {
  f.validate();
  if (k < 1 || k > s_h.count() || i < 1 || i > s_h.dim(k))
    throw domain_error("amplitude_identity_block: indices out of range");
  const int dim = s_h.dim(k);
  const auto& rho = s_h.irrep(k);
  std::vector<cplx> block(dim);
  for (int r = 1; r <= dim; ++r) {
    cplx acc{};
    for (int g = 0; g < f.domain_size; ++g)
      acc += std::conj(rho.at(f.image[g]).at(r - 1, i - 1));
    block[r - 1] = acc / double(f.domain_size);
  }
  return block;
}

LemmaReport verify_matrixmult_lemma(const IrrepSet& s_h, int trials, uint64_t seed) {
  const GroupPtr& h_group = s_h.group();
  const int n = h_group->order();
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return int(std::uniform_int_distribution<int>(lo, hi)(rng));
  };

  LemmaReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const int k = pick(1, s_h.count());
    const int tt = pick(1, s_h.count());
    const int i = pick(1, s_h.dim(k)), j = pick(1, s_h.dim(k));
    const int r = pick(1, s_h.dim(tt)), s = pick(1, s_h.dim(tt));
    const int w = pick(0, n - 1);  // plays the role of f(g)

    cplx lhs{};
    for (int hh = 0; hh < n; ++hh)
      lhs += s_h.tau(k, i, j, hh) * std::conj(s_h.tau(tt, r, s, h_group->mul(w, hh)));
    cplx rhs{};
    if (j == s && k == tt) rhs = std::conj(s_h.irrep(k).at(w).at(r - 1, i - 1));
    report.max_deviation = std::max(report.max_deviation, std::abs(lhs - rhs));
  }
  return report;
}

}  // namespace djh
