#include "djh/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "djh/errors.hpp"

namespace djh {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int exponent) {
  if (exponent < 0) throw domain_error("monomial: negative exponent");
  std::vector<mpz_class> v(exponent + 1);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::is_monomial() const {
  int nonzero = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++nonzero;
  return nonzero == 1;
}

const mpz_class& IntPolynomial::coeff(int exponent) const {
  static const mpz_class kZero = 0;
  if (exponent < 0 || exponent >= int(coeffs_.size())) return kZero;
  return coeffs_[exponent];
}

mpz_class IntPolynomial::coeff_sum() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool IntPolynomial::all_coeffs_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return c >= 0; });
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < coeffs_.size()) v[i] += coeffs_[i];
    if (i < o.coeffs_.size()) v[i] += o.coeffs_[i];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < coeffs_.size()) v[i] += coeffs_[i];
    if (i < o.coeffs_.size()) v[i] -= o.coeffs_[i];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::substitute_power(int k) const {
  if (k <= 0) throw domain_error("substitute_power: k must be positive");
  if (is_zero()) return {};
  std::vector<mpz_class> v(size_t(degree()) * k + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
  std::vector<mpz_class> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::fold_exponents(int n) const {
  if (n <= 0) throw domain_error("fold_exponents: n must be positive");
  std::vector<mpz_class> v(std::min<size_t>(coeffs_.size(), n));
  v.resize(n);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i % n] += coeffs_[i];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = 0; e <= degree(); ++e) {
    if (coeffs_[e] == 0) continue;
    if (!out.empty()) out += coeffs_[e] > 0 ? " + " : " - ";
    else if (coeffs_[e] < 0) out += "-";
    mpz_class a = abs(coeffs_[e]);
    if (a != 1 || e == 0) out += a.get_str();
    if (e >= 1) out += a == 1 ? "x" : "*x";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

PolyDivMod exact_divmod(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw domain_error("exact_divmod: division by zero polynomial");
  const bool monic = b.coeff(b.degree()) == 1;
  std::vector<mpz_class> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<mpz_class> quot;
  if (a.degree() >= b.degree()) quot.resize(a.degree() - b.degree() + 1);
  const mpz_class& lead = b.coeff(b.degree());
  for (int d = a.degree(); d >= b.degree(); --d) {
    mpz_class c = rem[d];
    if (c == 0) continue;
    if (!monic) {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
      if (r != 0)
        throw divisibility_error("exact_divmod: leading coefficient does not divide exactly");
      c = q;
    }
    quot[d - b.degree()] = c;
    for (int j = 0; j <= b.degree(); ++j) rem[d - b.degree() + j] -= c * b.coeff(j);
  }
  PolyDivMod out{IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  if (!monic && !out.remainder.is_zero())
    throw divisibility_error("exact_divmod: division by non-monic divisor is not exact");
  return out;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  if (b.is_zero()) throw domain_error("divides: zero divisor");
  if (b.coeff(b.degree()) != 1) throw domain_error("divides: divisor must be monic");
  return exact_divmod(a, b).remainder.is_zero();
}

IntPolynomial f_poly(int n) {
  if (n < 1) throw domain_error("f_poly: n must be >= 1");
  std::vector<mpz_class> v(n, mpz_class(1));
  return IntPolynomial(std::move(v));
}

namespace {

IntPolynomial x_to_n_minus_1(int n) {
  auto p = IntPolynomial::monomial(1, n);
  return p - IntPolynomial::constant(1);
}

}  // namespace

IntPolynomial cyclotomic_poly(int n) {
  if (n < 1) throw domain_error("cyclotomic_poly: n must be >= 1");
  static std::map<int, IntPolynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // iterative over divisors so the cache fills bottom-up
  for (int m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    IntPolynomial phi = x_to_n_minus_1(m);
    for (int d = 1; d < m; ++d)
      if (m % d == 0) phi = exact_divmod(phi, cache.at(d)).quotient;
    cache.emplace(m, std::move(phi));
  }
  return cache.at(n);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; int64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> prime_factorization(int n) {
  if (n < 1) throw domain_error("prime_factorization: n must be >= 1");
  std::vector<std::pair<int, int>> out;
  for (int p = 2; int64_t(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool verify_fr_identity(int n, int p) {
  if (n < 1) throw domain_error("verify_fr_identity: n must be >= 1");
  if (!is_prime(p) || n % p != 0)
    throw domain_error("verify_fr_identity: p must be a prime divisor of n");
  int gamma = 0, s = n;
  while (s % p == 0) {
    s /= p;
    ++gamma;
  }
  int p_gamma = 1;
  for (int i = 0; i < gamma; ++i) p_gamma *= p;
  const IntPolynomial lhs = f_poly(p).substitute_power(n / p);  // Phi_p = F_p for prime p
  IntPolynomial rhs = IntPolynomial::constant(1);
  for (int d = 1; d <= s; ++d)
    if (s % d == 0) rhs = rhs * cyclotomic_poly(p_gamma * d);
  return lhs == rhs;
}

namespace {

// s1 F_{a1+1} + s2 F_{a2+1} = F_{gcd(a1+1, a2+1)}, by the subtractive
// recursion  h = F_{a2-a1} = -x^{a2-a1} F_{a1+1} + F_{a2+1}.
std::pair<IntPolynomial, IntPolynomial> gcd_combination_pair(int a1, int a2) {
  struct Step {
    bool swapped;
    int shift;  // meaningful when !swapped
  };
  std::vector<Step> steps;
  while (a1 != a2) {
    if (a1 > a2) {
      steps.push_back({true, 0});
      std::swap(a1, a2);
    } else {
      steps.push_back({false, a2 - a1});
      a2 = a2 - a1 - 1;
    }
  }
  IntPolynomial s1 = IntPolynomial::constant(1);
  IntPolynomial s2;  // zero
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->swapped) {
      std::swap(s1, s2);
    } else {
      // inner pair (a1, a2-a1-1) solved; t = -x^(a2-a1)
      s1 = s1 + s2 * (-IntPolynomial::monomial(1, it->shift));
    }
  }
  return {std::move(s1), std::move(s2)};
}

int gcd_all_plus_one(const std::vector<int>& a) {
  int d = 0;
  for (int x : a) d = std::gcd(d, x + 1);
  return d;
}

}  // namespace

std::vector<IntPolynomial> gcd_combination(const std::vector<int>& a) {
  if (a.size() < 2) throw domain_error("gcd_combination: need at least two terms");
  for (int x : a)
    if (x < 0) throw domain_error("gcd_combination: entries must be non-negative");

  std::vector<IntPolynomial> s;
  if (a.size() == 2) {
    auto [s1, s2] = gcd_combination_pair(a[0], a[1]);
    s = {std::move(s1), std::move(s2)};
  } else {
    std::vector<int> head(a.begin(), a.end() - 1);
    auto u = gcd_combination(head);
    const int d1 = gcd_all_plus_one(head);
    auto [v1, v2] = gcd_combination_pair(a[a.size() - 2], a.back());
    const int d2 = std::gcd(a[a.size() - 2] + 1, a.back() + 1);
    auto [w1, w2] = gcd_combination_pair(d1 - 1, d2 - 1);
    s.resize(a.size());
    for (size_t i = 0; i + 2 < a.size(); ++i) s[i] = w1 * u[i];
    s[a.size() - 2] = w1 * u[a.size() - 2] + w2 * v1;
    s[a.size() - 1] = w2 * v2;
  }

  IntPolynomial check;
  for (size_t i = 0; i < a.size(); ++i) check = check + s[i] * f_poly(a[i] + 1);
  if (check != f_poly(gcd_all_plus_one(a)))
    throw error("gcd_combination: constructed identity failed verification");
  return s;
}

std::vector<IntPolynomial> prime_partition_of_unity(const std::vector<int>& primes) {
  if (primes.empty()) throw domain_error("prime_partition_of_unity: empty prime list");
  for (int p : primes)
    if (!is_prime(p)) throw domain_error("prime_partition_of_unity: non-prime entry");
  std::vector<int> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw domain_error("prime_partition_of_unity: repeated prime");

  if (primes.size() == 1) return {IntPolynomial::constant(1)};  // F_1 = 1

  long long m = 1;
  for (int p : primes) {
    m *= p;
    if (m > 1'000'000) throw unsupported_error("prime_partition_of_unity: product too large");
  }
  std::vector<int> a;
  for (int p : primes) a.push_back(int(m / p) - 1);
  auto s = gcd_combination(a);

  IntPolynomial check;
  for (size_t i = 0; i < s.size(); ++i) check = check + s[i] * f_poly(a[i] + 1);
  if (check != IntPolynomial::constant(1))
    throw error("prime_partition_of_unity: identity failed verification");
  return s;
}

IntPolynomial DephiDecomposition::recombine() const {
  IntPolynomial out = s1 * f_poly(p).substitute_power(n / p);
  if (q != 0) out = out + s2 * f_poly(q).substitute_power(n / q);
  return out;
}

DephiDecomposition dephi_decompose(const IntPolynomial& g, int n) {
  if (n < 2) throw domain_error("dephi_decompose: modulus must be >= 2");
  const auto factors = prime_factorization(n);
  if (factors.size() > 2)
    throw unsupported_error(
        "dephi_decompose: modulus has three or more distinct prime factors; no such "
        "decomposition exists in general (a 22-term balanced polynomial over Z_105 "
        "admits none)");
  if (g.degree() > n - 1) throw domain_error("dephi_decompose: deg(g) must be <= n-1");
  if (!g.all_coeffs_nonnegative())
    throw domain_error("dephi_decompose: coefficients must be non-negative");

  const auto phi_n = cyclotomic_poly(n);
  auto dm = exact_divmod(g, phi_n);
  if (!dm.remainder.is_zero())
    throw divisibility_error("dephi_decompose: Phi_n does not divide g (not 1-balanced)");
  const IntPolynomial f = std::move(dm.quotient);

  DephiDecomposition out;
  out.n = n;
  out.p = factors[0].first;

  if (factors.size() == 1) {
    // Phi_p(x^{n/p}) = Phi_n for prime powers, so s = g / Phi_n = f
    out.q = 0;
    out.s1 = f;
    out.s2 = IntPolynomial{};
  } else {
    const int p = factors[0].first, q = factors[1].first;
    out.q = q;
    const int k = n / (p * q);  // also gcd(n/p, n/q)
    const auto fp_k = f_poly(p).substitute_power(k);
    const auto fq_k = f_poly(q).substitute_power(k);

    // pou[0] multiplies F_{m/p} = F_q and pou[1] multiplies F_{m/q} = F_p
    auto pou = prime_partition_of_unity({p, q});
    IntPolynomial sp = f * pou[1].substitute_power(k);
    IntPolynomial sq = f * pou[0].substitute_power(k);

    // reduce deg(sp) below n/p by shifting F_q(x^k)-multiples across
    auto red = exact_divmod(sp, fq_k);
    sp = red.remainder;
    sq = sq + red.quotient * fp_k;

    if (sp.degree() > n / p - 1 || sq.degree() > n / q - 1)
      throw error("dephi_decompose: degree reduction violated the expected bounds");

    // non-negativity repair, residue class by residue class mod k
    std::vector<mpz_class> u(n / p), v(n / q);
    for (int j = 0; j <= sp.degree(); ++j) u[j] = sp.coeff(j);
    for (int j = 0; j <= sq.degree(); ++j) v[j] = sq.coeff(j);
    for (int j = 0; j < k; ++j) {
      mpz_class cj = u[j];
      bool on_u = true;
      for (int a = 0; a < q; ++a)
        if (u[a * k + j] < cj) cj = u[a * k + j];
      for (int b = 0; b < p; ++b)
        if (v[b * k + j] < cj) {
          cj = v[b * k + j];
          on_u = false;
        }
      for (int a = 0; a < q; ++a)
        if (u[a * k + j] == cj) on_u = true;  // tie goes to the u-side shift
      if (cj >= 0) continue;
      const mpz_class amount = -cj;
      if (on_u) {
        for (int a = 0; a < q; ++a) u[a * k + j] += amount;
        for (int b = 0; b < p; ++b) v[b * k + j] -= amount;
      } else {
        for (int b = 0; b < p; ++b) v[b * k + j] += amount;
        for (int a = 0; a < q; ++a) u[a * k + j] -= amount;
      }
    }
    out.s1 = IntPolynomial(std::move(u));
    out.s2 = IntPolynomial(std::move(v));
  }

  if (!out.s1.all_coeffs_nonnegative() || !out.s2.all_coeffs_nonnegative())
    throw error("dephi_decompose: non-negativity repair failed");
  if (out.s1.degree() > n / out.p - 1 || (out.q != 0 && out.s2.degree() > n / out.q - 1))
    throw error("dephi_decompose: output degree bounds violated");
  if (out.recombine() != g) throw error("dephi_decompose: recombination check failed");
  return out;
}

bool eval_at_root_of_unity_is_zero(const IntPolynomial& p, int n) {
  if (n < 1) throw domain_error("eval_at_root_of_unity_is_zero: n must be >= 1");
  return divides(cyclotomic_poly(n), p.fold_exponents(n));
}

}  // namespace djh
