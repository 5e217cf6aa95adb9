#include "djh/qft.hpp"

#include "djh/errors.hpp"

namespace djh {

std::vector<cplx> FourierMatrix::apply(std::span<const cplx> state) const {
  const int n = entries.rows();
  if (int(state.size()) != n) throw domain_error("fourier apply: state length mismatch");
  std::vector<cplx> out(n);
  for (int g = 0; g < n; ++g) {
    const cplx a = state[g];
    if (a == cplx{}) continue;
    for (int gp = 0; gp < n; ++gp) out[gp] += a * entries.at(g, gp);
  }
  return out;
}

FourierMatrix fourier_matrix(const IrrepSet& s) {
  FourierMatrix f;
  f.group = s.group();
  f.entries = tau_table(s).entries;
  return f;
}

FourierMatrix adjoint(const FourierMatrix& f) {
  FourierMatrix out;
  out.group = f.group;
  out.entries = f.entries.adjoint();
  return out;
}

UnitarityReport verify_unitary(const FourierMatrix& f, double tol) {
  UnitarityReport r;
  r.max_deviation = f.entries.deviation_from_unitary();
  r.ok = r.max_deviation <= tol;
  return r;
}

}  // namespace djh
