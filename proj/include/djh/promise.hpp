#pragma once

#include <optional>
#include <string>
#include <vector>

#include "djh/cyclotomic.hpp"
#include "djh/representation.hpp"

namespace djh {

// A function f : X -> H, X = {0..domain_size-1}, as an image table.
struct PromiseFunction {
  int domain_size = 0;
  GroupPtr codomain;
  std::vector<int> image;  // length domain_size, entries in [0, |H|)

  void validate() const;
};

// Element of the integral group ring ZH as a coefficient table. r_f built
// from a function is admissible: coefficients >= 0 summing to |X|.
struct GroupRingElement {
  GroupPtr group;
  std::vector<long long> coeffs;
};

// r_f: coeffs[j] = |f^-1(h_j)|
GroupRingElement group_ring_element(const PromiseFunction& f);

enum class Verdict { Constant, Balanced, Neither };

std::string to_string(Verdict v);

struct Classification {
  int k = 0;
  int i = 0;
  Verdict verdict = Verdict::Neither;
  bool degenerate = false;  // trivial representation: always constant, never balanced
  // witness when Constant: the common row (tau^k_{i,*} along the image)
  std::vector<cplx> constant_row;
  // witness when Balanced: the vanishing row sums
  std::vector<cplx> row_sums;
};

// Definitional tests. is_rho_constant reports Constant/Neither; is_rho_balanced
// reports Balanced/Neither; classify_definitional merges them.
Classification is_rho_constant(const PromiseFunction& f, const IrrepSet& s, int k, int i,
                               double tol = 1e-9);
Classification is_rho_balanced(const PromiseFunction& f, const IrrepSet& s, int k, int i,
                               double tol = 1e-9);
Classification classify_definitional(const PromiseFunction& f, const IrrepSet& s, int k,
                                     int i, double tol = 1e-9);

// {h in H : e_i rho^k(h) = e_i}; verified to be a subgroup
Subgroup stabilizer(const IrrepSet& s, int k, int i, double tol = 1e-9);

// e_i . sum_j coeffs[j] rho^k(h_j) = 0 within tol
bool annihilator_member(const GroupRingElement& r, const IrrepSet& s, int k, int i,
                        double tol = 1e-9);

// Group-ring characterization: Constant iff supp(r_f) lies in one right coset
// of the stabilizer, Balanced iff r_f annihilates e_i. Cross-checked against
// the definitional tests; disagreement raises consistency_error.
Classification classify_via_group_ring(const PromiseFunction& f, const IrrepSet& s, int k,
                                       int i, double tol = 1e-9);

// f_m = phi_m . f with phi_m(a) = (sum_j a_j m_j (n/n_j)) mod n for an
// abelian codomain with the given cyclic decomposition; classification of f
// at character m equals classification of f_m at character 1.
PromiseFunction abelian_reduce(const PromiseFunction& f, int m,
                               const std::vector<int>& decomposition);

struct CyclicReduction {
  PromiseFunction fbar;  // into Z_v
  int d = 0;             // gcd(k, n)
  int u = 0;             // k / d
  int v = 0;             // n / d
  bool degenerate = false;  // k == 0
};

// f : X -> Z_n at character k reduces to fbar = f mod v at character 1:
// f is k-constant iff fbar constant, k-balanced iff fbar 1-balanced.
CyclicReduction cyclic_reduce(const PromiseFunction& f, int k);

// Fiber counts p_t = |f^-1(t)| for a cyclic codomain.
struct FunctionProfile {
  int modulus = 0;
  std::vector<long long> counts;

  IntPolynomial polynomial() const;  // P_f = sum p_t x^t
  long long total() const;
};

FunctionProfile profile_polynomial(const PromiseFunction& f);
FunctionProfile profile_from_counts(int modulus, std::vector<long long> counts);

// Exact test Phi_n | P_f; authoritative for cyclic codomains.
bool is_one_balanced_exact(const FunctionProfile& p);

struct CosetCover {
  std::vector<int> coset;                  // sorted member list
  std::optional<long long> multiplicity;   // empty marks an unevenly covered coset
};

// For K = <kgen> in Z_n: per-coset common fiber size, or a not-even marker.
std::vector<CosetCover> even_cover_check(const PromiseFunction& f, int kgen);

struct EvenCoverDecomposition {
  bool balanced = false;  // failure (not 1-balanced) when false
  int n = 0;
  int p = 0;
  int q = 0;                        // 0 when n is a prime power
  std::vector<int> xp;              // domain indices; all of X when q == 0
  std::vector<int> xq;
  std::vector<long long> p_multiplicities;  // coset t+K_p -> fiber size, t < n/p
  std::vector<long long> q_multiplicities;  // coset t+K_q -> fiber size, t < n/q
};

// Theorem-style partition: for n = p^alpha the check that every coset of K_p
// is evenly covered; for n = p^alpha q^beta the partition (X_p, X_q) realized
// from the dephi decomposition of P_f by ascending-index fiber splitting.
// Moduli with >= 3 prime factors raise unsupported_error.
EvenCoverDecomposition even_cover_decompose(const PromiseFunction& f);

}  // namespace djh
