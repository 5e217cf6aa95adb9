#pragma once

#include <vector>

#include "djh/finite_group.hpp"
#include "djh/linalg.hpp"

namespace djh {

// A matrix representation: one dim x dim complex matrix per group element.
struct Representation {
  GroupPtr group;
  int dim = 0;
  std::vector<Matrix> matrices;  // indexed by element

  const Matrix& at(int g) const { return matrices[g]; }
  // homomorphism property and rho(identity) = I, entrywise within tol
  void validate(double tol = 1e-9) const;
  bool is_unitary(double tol = 1e-9) const;
  std::vector<cplx> character() const;
};

Representation trivial_representation(const GroupPtr& g);

// Conjugates rho to an equivalent unitary representation by averaging the
// Gram matrix over the group (C = sum_g rho(g) rho(g)^adjoint, R = sqrt(C),
// rho_U(g) = R^-1 rho(g) R). Characters are preserved.
Representation weyl_unitarize(const Representation& rho, double tol = 1e-9);

// (1/|G|) sum_g |tr rho(g)|^2 == 1 within tol
bool is_irreducible(const Representation& rho, double tol = 1e-9);

// 1-based triple into the index set R = {(i,j,k) : 1 <= i,j <= dim rho^k}.
struct BetaTriple {
  int i = 0, j = 0, k = 0;
  bool operator==(const BetaTriple&) const = default;
};

// A validated complete family of unitary irreducible representations plus
// the indexing bijection beta between group elements and R. rho^1 is always
// the trivial representation and beta(identity) = (1,1,1); the remaining
// elements, in index order, take the remaining triples sorted by (k,i,j).
class IrrepSet {
 public:
  static IrrepSet create(GroupPtr group, std::vector<Representation> irreps,
                         double tol = 1e-9);
  static IrrepSet create_with_beta(GroupPtr group, std::vector<Representation> irreps,
                                   std::vector<BetaTriple> beta, double tol = 1e-9);

  const GroupPtr& group() const { return group_; }
  int count() const { return int(irreps_.size()); }
  // k is 1-based throughout, matching the tau superscript
  const Representation& irrep(int k) const { return irreps_[k - 1]; }
  int dim(int k) const { return irreps_[k - 1].dim; }
  const std::vector<Representation>& irreps() const { return irreps_; }

  BetaTriple beta(int g) const { return beta_[g]; }
  int beta_inverse(int i, int j, int k) const;

  // tau^k_{ij}(x) = sqrt(dim rho^k / |G|) * rho^k_{ij}(x); i, j 1-based
  cplx tau(int k, int i, int j, int x) const;

 private:
  IrrepSet() = default;
  void validate(double tol) const;

  GroupPtr group_;
  std::vector<Representation> irreps_;
  std::vector<BetaTriple> beta_;       // element -> triple
  std::vector<int> beta_inv_;          // flattened triple -> element
  int beta_inv_index(int i, int j, int k) const;
};

// tau_G^g(x), the matrix entry selected by beta(g), normalized
cplx tau_entry(const IrrepSet& s, int g, int x);

// Full table of tau values: entries.at(g, x) = tau_G^g(x).
struct TauTable {
  GroupPtr group;
  Matrix entries;
};
TauTable tau_table(const IrrepSet& s);

struct SchurReport {
  double max_deviation = 0.0;
  int pairs_checked = 0;
  bool ok = false;
};
// <tau^g1, tau^g2> = delta_{g1,g2} over all |G|^2 pairs
SchurReport verify_schur(const IrrepSet& s, double tol = 1e-9);

// Characters chi_m(a) = prod_j exp(2 pi i a_j m_j / n_j) for a group built as
// a direct product of cyclic factors of the given sizes.
IrrepSet irreps_of_abelian(const GroupPtr& g, const std::vector<int>& decomposition);

// Built-in sets: cyclic, products of cyclics, dihedral n <= 8, S_1..S_4, A_4.
IrrepSet builtin_irreps(const GroupPtr& g);

}  // namespace djh
