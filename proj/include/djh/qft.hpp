#pragma once

#include <span>
#include <vector>

#include "djh/representation.hpp"

namespace djh {

// The quantum Fourier transform over a group, as a dense |G| x |G| matrix.
// Row g holds the amplitudes of the image of basis state |g>:
//   entries.at(g, g') = tau_G^g(g').
struct FourierMatrix {
  GroupPtr group;
  Matrix entries;

  // amplitude-vector transform: out[g'] = sum_g state[g] * entries(g, g')
  std::vector<cplx> apply(std::span<const cplx> state) const;
};

FourierMatrix fourier_matrix(const IrrepSet& s);

// entry [g, g'] = conj(tau_G^{g'}(g)); applying the adjoint with the same
// row convention inverts the transform
FourierMatrix adjoint(const FourierMatrix& f);

struct UnitarityReport {
  double max_deviation = 0.0;  // max |(F F* - I)[a,b]|
  bool ok = false;
};
UnitarityReport verify_unitary(const FourierMatrix& f, double tol = 1e-9);

}  // namespace djh
