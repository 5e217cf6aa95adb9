#include "djh/representation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "djh/errors.hpp"

namespace djh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

}  // namespace

void Representation::validate(double tol) const {
  if (!group) throw validation_error("representation: missing group");
  const int n = group->order();
  if (int(matrices.size()) != n)
    throw validation_error("representation: one matrix per element required");
  for (const auto& m : matrices)
    if (m.rows() != dim || m.cols() != dim)
      throw validation_error("representation: matrix dimension mismatch");
  if (matrices[group->identity()].deviation_from_identity() > tol)
    throw validation_error("representation: rho(identity) differs from the identity matrix");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((matrices[a] * matrices[b]).max_abs_diff(matrices[group->mul(a, b)]) > tol)
        throw validation_error("representation: homomorphism property fails at (" +
                               group->label(a) + ", " + group->label(b) + ")");
}

bool Representation::is_unitary(double tol) const {
  for (const auto& m : matrices)
    if (m.deviation_from_unitary() > tol) return false;
  return true;
}

std::vector<cplx> Representation::character() const {
  std::vector<cplx> chi(matrices.size());
  for (size_t g = 0; g < matrices.size(); ++g) chi[g] = matrices[g].trace();
  return chi;
}

Representation trivial_representation(const GroupPtr& g) {
  Representation rho;
  rho.group = g;
  rho.dim = 1;
  rho.matrices.assign(g->order(), Matrix::identity(1));
  return rho;
}

Representation weyl_unitarize(const Representation& rho, double tol) {
  rho.validate(tol);
  const int n = rho.dim;

  Matrix c(n, n);
  for (const auto& m : rho.matrices) c = c + m * m.adjoint();

  const auto eig = hermitian_eigen(c);
  double lambda_max = 0.0, lambda_min = 0.0;
  for (double v : eig.eigenvalues) lambda_max = std::max(lambda_max, v);
  lambda_min = lambda_max;
  for (double v : eig.eigenvalues) lambda_min = std::min(lambda_min, v);
  if (lambda_min <= 1e-12 * lambda_max)
    throw conditioning_error("weyl_unitarize: averaged Gram matrix is near-singular");

  Matrix r(n, n), r_inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s{}, si{};
      for (int k = 0; k < n; ++k) {
        const cplx term = eig.vectors.at(i, k) * std::conj(eig.vectors.at(j, k));
        s += std::sqrt(eig.eigenvalues[k]) * term;
        si += (1.0 / std::sqrt(eig.eigenvalues[k])) * term;
      }
      r.at(i, j) = s;
      r_inv.at(i, j) = si;
    }

  Representation out;
  out.group = rho.group;
  out.dim = n;
  out.matrices.reserve(rho.matrices.size());
  for (const auto& m : rho.matrices) out.matrices.push_back(r_inv * m * r);

  for (size_t g = 0; g < out.matrices.size(); ++g) {
    if (out.matrices[g].deviation_from_unitary() > tol)
      throw conditioning_error("weyl_unitarize: output failed the unitarity check");
    if (std::abs(out.matrices[g].trace() - rho.matrices[g].trace()) > tol)
      throw conditioning_error("weyl_unitarize: character drifted during unitarization");
  }
  return out;
}

bool is_irreducible(const Representation& rho, double tol) {
  double s = 0.0;
  for (const auto& m : rho.matrices) s += std::norm(m.trace());
  return std::abs(s / rho.group->order() - 1.0) <= tol;
}

IrrepSet IrrepSet::create(GroupPtr group, std::vector<Representation> irreps, double tol) {
  // beta: identity -> (1,1,1); remaining elements in index order take the
  // remaining triples sorted lexicographically by (k,i,j)
  std::vector<BetaTriple> triples;
  for (int k = 1; k <= int(irreps.size()); ++k)
    for (int i = 1; i <= irreps[k - 1].dim; ++i)
      for (int j = 1; j <= irreps[k - 1].dim; ++j) triples.push_back({i, j, k});
  if (int(triples.size()) != group->order())
    throw validation_error("irrep set: sum of dim^2 does not match the group order");

  std::vector<BetaTriple> beta(group->order());
  size_t next = 0;
  for (int g = 0; g < group->order(); ++g) {
    if (g == group->identity()) {
      beta[g] = {1, 1, 1};
      continue;
    }
    if (triples[next] == BetaTriple{1, 1, 1}) ++next;
    beta[g] = triples[next++];
  }
  return create_with_beta(std::move(group), std::move(irreps), std::move(beta), tol);
}

IrrepSet IrrepSet::create_with_beta(GroupPtr group, std::vector<Representation> irreps,
                                    std::vector<BetaTriple> beta, double tol) {
  IrrepSet s;
  s.group_ = std::move(group);
  s.irreps_ = std::move(irreps);
  s.beta_ = std::move(beta);
  s.beta_inv_.assign(s.group_->order(), -1);
  for (int g = 0; g < s.group_->order(); ++g) {
    const auto t = s.beta_[g];
    const int idx = s.beta_inv_index(t.i, t.j, t.k);
    if (idx < 0 || s.beta_inv_[idx] != -1)
      throw validation_error("irrep set: beta is not a bijection onto the index set");
    s.beta_inv_[idx] = g;
  }
  s.validate(tol);
  return s;
}

int IrrepSet::beta_inv_index(int i, int j, int k) const {
  if (k < 1 || k > count()) return -1;
  const int d = irreps_[k - 1].dim;
  if (i < 1 || i > d || j < 1 || j > d) return -1;
  int base = 0;
  for (int kk = 1; kk < k; ++kk) base += irreps_[kk - 1].dim * irreps_[kk - 1].dim;
  return base + (i - 1) * d + (j - 1);
}

int IrrepSet::beta_inverse(int i, int j, int k) const {
  const int idx = beta_inv_index(i, j, k);
  if (idx < 0) throw domain_error("beta_inverse: triple outside the index set");
  return beta_inv_[idx];
}

cplx IrrepSet::tau(int k, int i, int j, int x) const {
  const auto& rho = irreps_[k - 1];
  return std::sqrt(double(rho.dim) / group_->order()) * rho.at(x).at(i - 1, j - 1);
}

void IrrepSet::validate(double tol) const {
  const int n = group_->order();
  int dim_sq = 0;
  for (const auto& rho : irreps_) dim_sq += rho.dim * rho.dim;
  if (dim_sq != n)
    throw validation_error("irrep set: sum of squared dimensions must equal |G|");
  if (irreps_.empty() || irreps_[0].dim != 1)
    throw validation_error("irrep set: first representation must be trivial");
  for (int g = 0; g < n; ++g)
    if (std::abs(irreps_[0].at(g).at(0, 0) - cplx{1.0}) > tol)
      throw validation_error("irrep set: first representation must be trivial");
  if (!(beta_[group_->identity()] == BetaTriple{1, 1, 1}))
    throw validation_error("irrep set: beta(identity) must be (1,1,1)");

  for (const auto& rho : irreps_) {
    rho.validate(tol);
    if (!rho.is_unitary(tol))
      throw validation_error("irrep set: representation is not unitary");
    if (!is_irreducible(rho, std::max(tol, 1e-6)))
      throw validation_error("irrep set: representation is not irreducible");
  }
  // pairwise inequivalence via character inner products
  for (size_t a = 0; a < irreps_.size(); ++a) {
    const auto chi_a = irreps_[a].character();
    for (size_t b = a + 1; b < irreps_.size(); ++b) {
      const auto chi_b = irreps_[b].character();
      cplx ip{};
      for (int g = 0; g < n; ++g) ip += chi_a[g] * std::conj(chi_b[g]);
      if (std::abs(ip) / n > std::max(tol, 1e-6))
        throw validation_error("irrep set: two representations are equivalent");
    }
  }
}

cplx tau_entry(const IrrepSet& s, int g, int x) {
  const auto t = s.beta(g);
  return s.tau(t.k, t.i, t.j, x);
}

TauTable tau_table(const IrrepSet& s) {
  const int n = s.group()->order();
  TauTable t;
  t.group = s.group();
  t.entries = Matrix(n, n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) t.entries.at(g, x) = tau_entry(s, g, x);
  return t;
}

SchurReport verify_schur(const IrrepSet& s, double tol) {
  const auto table = tau_table(s);
  const int n = s.group()->order();
  SchurReport report;
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      cplx ip{};
      for (int x = 0; x < n; ++x)
        ip += table.entries.at(g1, x) * std::conj(table.entries.at(g2, x));
      const double dev = std::abs(ip - (g1 == g2 ? cplx{1.0} : cplx{}));
      report.max_deviation = std::max(report.max_deviation, dev);
      ++report.pairs_checked;
    }
  report.ok = report.max_deviation <= tol;
  return report;
}

IrrepSet irreps_of_abelian(const GroupPtr& g, const std::vector<int>& decomposition) {
  long long expected = 1;
  for (int f : decomposition) {
    if (f < 1) throw validation_error("irreps_of_abelian: factors must be positive");
    expected *= f;
  }
  if (expected != g->order())
    throw validation_error("irreps_of_abelian: factor sizes do not match the group order");
  if (!g->is_abelian())
    throw validation_error("irreps_of_abelian: group is not abelian");

  const int n = g->order();
  const int k = int(decomposition.size());
  // mixed-radix digits, leftmost factor most significant
  auto digits = [&](int e) {
    std::vector<int> d(k);
    for (int j = k - 1; j >= 0; --j) {
      d[j] = e % decomposition[j];
      e /= decomposition[j];
    }
    return d;
  };

  std::vector<Representation> irreps;
  irreps.reserve(n);
  for (int m = 0; m < n; ++m) {
    const auto md = digits(m);
    Representation chi;
    chi.group = g;
    chi.dim = 1;
    chi.matrices.reserve(n);
    for (int a = 0; a < n; ++a) {
      const auto ad = digits(a);
      double turns = 0.0;
      for (int j = 0; j < k; ++j)
        turns += double(ad[j]) * md[j] / decomposition[j];
      Matrix mat(1, 1);
      mat.at(0, 0) = unit_phase(turns);
      chi.matrices.push_back(mat);
    }
    irreps.push_back(std::move(chi));
  }
  return IrrepSet::create(g, std::move(irreps), 1e-9);
}

namespace {

Representation dihedral_sign_rep(const GroupPtr& g, int n, bool flip_r, bool flip_s) {
  Representation rho;
  rho.group = g;
  rho.dim = 1;
  rho.matrices.reserve(2 * n);
  for (int idx = 0; idx < 2 * n; ++idx) {
    const int a = idx % n;
    const bool refl = idx >= n;
    double v = 1.0;
    if (flip_r && a % 2 == 1) v = -v;
    if (flip_s && refl) v = -v;
    Matrix m(1, 1);
    m.at(0, 0) = v;
    rho.matrices.push_back(m);
  }
  return rho;
}

Representation dihedral_two_dim_rep(const GroupPtr& g, int n, int h) {
  Representation rho;
  rho.group = g;
  rho.dim = 2;
  rho.matrices.reserve(2 * n);
  for (int idx = 0; idx < 2 * n; ++idx) {
    const int a = idx % n;
    const bool refl = idx >= n;
    Matrix m(2, 2);
    const cplx w = unit_phase(double(h) * a / n);
    if (!refl) {
      m.at(0, 0) = w;
      m.at(1, 1) = std::conj(w);
    } else {
      m.at(0, 1) = w;
      m.at(1, 0) = std::conj(w);
    }
    rho.matrices.push_back(m);
  }
  return rho;
}

IrrepSet dihedral_irreps(const GroupPtr& g) {
  const int n = g->param();
  std::vector<Representation> irreps;
  irreps.push_back(trivial_representation(g));
  irreps.push_back(dihedral_sign_rep(g, n, false, true));
  if (n % 2 == 0 && n >= 2) {
    irreps.push_back(dihedral_sign_rep(g, n, true, false));
    irreps.push_back(dihedral_sign_rep(g, n, true, true));
  }
  for (int h = 1; 2 * h < n; ++h) irreps.push_back(dihedral_two_dim_rep(g, n, h));
  return IrrepSet::create(g, std::move(irreps), 1e-9);
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Permutation action on the sum-zero subspace of C^m, expressed in the
// orthonormal simplex basis v_j = (1,...,1,-j,0,...,0)/sqrt(j(j+1));
// real orthogonal matrices.
Representation standard_rep(const GroupPtr& g, const std::vector<std::vector<int>>& perms,
                            bool tensor_sign) {
  const int m = int(perms.empty() ? 0 : perms[0].size());
  std::vector<std::vector<double>> basis(m - 1, std::vector<double>(m, 0.0));
  for (int j = 1; j < m; ++j) {
    const double norm = std::sqrt(double(j) * (j + 1));
    for (int t = 0; t < j; ++t) basis[j - 1][t] = 1.0 / norm;
    basis[j - 1][j] = -double(j) / norm;
  }
  Representation rho;
  rho.group = g;
  rho.dim = m - 1;
  for (const auto& p : perms) {
    Matrix mat(m - 1, m - 1);
    for (int a = 0; a < m - 1; ++a)
      for (int b = 0; b < m - 1; ++b) {
        double s = 0.0;
        // <v_a, P v_b> with (P v)(i) = v(p^{-1}(i)), i.e. sum_i v_a[p(i)] v_b[i]
        for (int i = 0; i < m; ++i) s += basis[a][p[i]] * basis[b][i];
        mat.at(a, b) = s;
      }
    if (tensor_sign && permutation_sign(p) < 0) mat = mat.scaled(-1.0);
    rho.matrices.push_back(std::move(mat));
  }
  return rho;
}

Representation sign_rep(const GroupPtr& g, const std::vector<std::vector<int>>& perms) {
  Representation rho;
  rho.group = g;
  rho.dim = 1;
  for (const auto& p : perms) {
    Matrix m(1, 1);
    m.at(0, 0) = double(permutation_sign(p));
    rho.matrices.push_back(m);
  }
  return rho;
}

IrrepSet symmetric_irreps(const GroupPtr& g) {
  const int m = g->param();
  const auto perms = permutations_lex(m);
  std::vector<Representation> irreps;
  irreps.push_back(trivial_representation(g));
  if (m >= 2) irreps.push_back(sign_rep(g, perms));
  if (m == 4) {
    // two-dimensional representation through the quotient by the Klein
    // four-group: permutations act on the three pairings of {0,1,2,3}
    static const int pairing_of[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 2, 1}, {1, 2, -1, 0}, {2, 1, 0, -1}};
    std::vector<std::vector<int>> induced;
    for (const auto& p : perms) {
      std::vector<int> q(3);
      // pairing containing {0, x} maps to pairing containing {p[0], p[x]}
      for (int x = 1; x < 4; ++x) q[pairing_of[0][x]] = pairing_of[p[0]][p[x]];
      induced.push_back(q);
    }
    irreps.push_back(standard_rep(g, induced, false));
  }
  if (m >= 3) irreps.push_back(standard_rep(g, perms, false));
  if (m >= 4) irreps.push_back(standard_rep(g, perms, true));
  return IrrepSet::create(g, std::move(irreps), 1e-9);
}

IrrepSet alternating4_irreps(const GroupPtr& g) {
  // number of N's in each word, mod 3, gives the quotient map onto Z_3
  const int n_count[12] = {0, 1, 2, 0, 1, 2, 1, 2, 3, 2, 3, 4};
  std::vector<Representation> irreps;
  irreps.push_back(trivial_representation(g));
  for (int power = 1; power <= 2; ++power) {
    Representation chi;
    chi.group = g;
    chi.dim = 1;
    for (int e = 0; e < 12; ++e) {
      Matrix m(1, 1);
      m.at(0, 0) = unit_phase(double(power) * (n_count[e] % 3) / 3.0);
      chi.matrices.push_back(m);
    }
    irreps.push_back(std::move(chi));
  }
  Representation rho;
  rho.group = g;
  rho.dim = 3;
  for (const auto& w : alternating4_matrices()) {
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = double(w[i][j]);
    rho.matrices.push_back(std::move(m));
  }
  irreps.push_back(std::move(rho));
  return IrrepSet::create(g, std::move(irreps), 1e-9);
}

}  // namespace

IrrepSet builtin_irreps(const GroupPtr& g) {
  switch (g->kind()) {
    case FiniteGroup::Kind::Cyclic:
    case FiniteGroup::Kind::CyclicProduct:
      return irreps_of_abelian(g, g->cyclic_factors());
    case FiniteGroup::Kind::Dihedral:
      if (g->param() > 8)
        throw unsupported_error("builtin_irreps: dihedral groups above D_8 are not built in");
      return dihedral_irreps(g);
    case FiniteGroup::Kind::Symmetric:
      if (g->param() > 4)
        throw unsupported_error("builtin_irreps: symmetric groups above S_4 are not built in");
      return symmetric_irreps(g);
    case FiniteGroup::Kind::Alternating4:
      return alternating4_irreps(g);
    case FiniteGroup::Kind::Table:
      throw unsupported_error(
          "builtin_irreps: no built-in set for table groups; load one from a file");
  }
  throw unsupported_error("builtin_irreps: unknown group kind");
}

}  // namespace djh
