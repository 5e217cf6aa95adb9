#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace djh {

// Exact integer polynomial; index = exponent, trailing zeros trimmed, zero
// polynomial = empty coefficient list. Everything in this module is exact
// arbitrary-precision arithmetic; no floating point enters any code path.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(long c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(const mpz_class& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const;
  // -1 for the zero polynomial
  int degree() const { return int(coeffs_.size()) - 1; }
  // zero outside the stored range
  const mpz_class& coeff(int exponent) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff_sum() const;
  bool all_coeffs_nonnegative() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  // p(x) -> p(x^k)
  IntPolynomial substitute_power(int k) const;
  IntPolynomial scaled(const mpz_class& c) const;
  // exponents folded mod n (reduction mod x^n - 1)
  IntPolynomial fold_exponents(int n) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

struct PolyDivMod {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Long division over Z. For a monic divisor this is ordinary polynomial
// division with deg(remainder) < deg(b). For a non-monic divisor the division
// must be exact over Z (remainder zero, every leading-coefficient step an
// exact integer division) or divisibility_error is thrown.
PolyDivMod exact_divmod(const IntPolynomial& a, const IntPolynomial& b);

// b | a over Z[x]; b must be monic.
bool divides(const IntPolynomial& b, const IntPolynomial& a);

// Phi_n, computed by exact division of x^n - 1 by the proper-divisor factors.
IntPolynomial cyclotomic_poly(int n);

// F_n = 1 + x + ... + x^{n-1}
IntPolynomial f_poly(int n);

// Checks Phi_p(x^{n/p}) = prod_{d | s} Phi_{p^gamma d}(x) where n = p^gamma s,
// p prime, p does not divide s. Throws domain_error unless p is a prime
// divisor of n.
bool verify_fr_identity(int n, int p);

// Given non-negative a_1..a_m (m >= 2), returns s_1..s_m in Z[x] with
//   sum_i s_i (1 + x + ... + x^{a_i}) = 1 + x + ... + x^{d-1},
// d = gcd(a_1+1, ..., a_m+1). The identity is re-verified before returning.
std::vector<IntPolynomial> gcd_combination(const std::vector<int>& a);

// Distinct primes p_1..p_m; with m_i = (prod p_j)/p_i returns s_1..s_m such
// that sum_i s_i F_{m_i} = 1 exactly.
std::vector<IntPolynomial> prime_partition_of_unity(const std::vector<int>& primes);

struct DephiDecomposition {
  int n = 0;
  int p = 0;
  int q = 0;  // 0 when n is a prime power
  IntPolynomial s1;
  IntPolynomial s2;  // zero when q == 0

  // s1 * Phi_p(x^{n/p}) + s2 * Phi_q(x^{n/q})
  IntPolynomial recombine() const;
};

// Decomposes g = s1 Phi_p(x^{n/p}) + s2 Phi_q(x^{n/q}) with all coefficients
// of s1, s2 non-negative, for n = p^alpha q^beta. Requires deg(g) <= n-1,
// non-negative coefficients and Phi_n | g (divisibility_error otherwise);
// moduli with three or more prime factors raise unsupported_error.
DephiDecomposition dephi_decompose(const IntPolynomial& g, int n);

// p(e^{2 pi i / n}) == 0, decided exactly as Phi_n | (p mod (x^n - 1)).
bool eval_at_root_of_unity_is_zero(const IntPolynomial& p, int n);

// (prime, exponent) pairs, primes ascending.
std::vector<std::pair<int, int>> prime_factorization(int n);

bool is_prime(int n);

}  // namespace djh
