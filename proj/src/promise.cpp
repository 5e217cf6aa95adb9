#include "djh/promise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "djh/errors.hpp"

namespace djh {

void PromiseFunction::validate() const {
  if (!codomain) throw validation_error("function: missing codomain group");
  if (domain_size <= 0) throw validation_error("function: domain must be non-empty");
  if (int(image.size()) != domain_size)
    throw validation_error("function: image table length must equal the domain size");
  for (int v : image)
    if (v < 0 || v >= codomain->order())
      throw validation_error("function: image entry out of range");
}

GroupRingElement group_ring_element(const PromiseFunction& f) {
  f.validate();
  GroupRingElement r;
  r.group = f.codomain;
  r.coeffs.assign(f.codomain->order(), 0);
  for (int v : f.image) ++r.coeffs[v];
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Constant: return "constant";
    case Verdict::Balanced: return "balanced";
    case Verdict::Neither: return "neither";
  }
  return "?";
}

namespace {

void check_indices(const IrrepSet& s, int k, int i) {
  if (k < 1 || k > s.count()) throw domain_error("representation index k out of range");
  if (i < 1 || i > s.dim(k)) throw domain_error("row index i out of range");
}

}  // namespace

Classification is_rho_constant(const PromiseFunction& f, const IrrepSet& s, int k, int i,
                               double tol) {
  f.validate();
  check_indices(s, k, i);
  const int dim = s.dim(k);
  Classification out;
  out.k = k;
  out.i = i;
  out.degenerate = k == 1;

  double spread = 0.0;
  std::vector<cplx> row(dim);
  for (int r = 1; r <= dim; ++r) {
    const cplx first = s.tau(k, i, r, f.image[0]);
    row[r - 1] = first;
    for (int g = 1; g < f.domain_size; ++g)
      spread = std::max(spread, std::abs(s.tau(k, i, r, f.image[g]) - first));
  }
  if (spread < tol) {
    out.verdict = Verdict::Constant;
    out.constant_row = std::move(row);
  }
  return out;
}

Classification is_rho_balanced(const PromiseFunction& f, const IrrepSet& s, int k, int i,
                               double tol) {
  f.validate();
  check_indices(s, k, i);
  const int dim = s.dim(k);
  Classification out;
  out.k = k;
  out.i = i;
  out.degenerate = k == 1;  // the trivial character admits no balanced function

  std::vector<cplx> sums(dim);
  double worst = 0.0;
  for (int r = 1; r <= dim; ++r) {
    cplx sum{};
    for (int g = 0; g < f.domain_size; ++g) sum += s.tau(k, i, r, f.image[g]);
    sums[r - 1] = sum;
    worst = std::max(worst, std::abs(sum));
  }
  if (!out.degenerate && worst < tol) {
    out.verdict = Verdict::Balanced;
    out.row_sums = std::move(sums);
  }
  return out;
}

Classification classify_definitional(const PromiseFunction& f, const IrrepSet& s, int k,
                                     int i, double tol) {
  Classification c = is_rho_constant(f, s, k, i, tol);
  Classification b = is_rho_balanced(f, s, k, i, tol);
  if (c.verdict == Verdict::Constant && b.verdict == Verdict::Balanced)
    throw consistency_error("classification: function reported both constant and balanced");
  if (c.verdict == Verdict::Constant) return c;
  if (b.verdict == Verdict::Balanced) return b;
  return c;  // Neither
}

Subgroup stabilizer(const IrrepSet& s, int k, int i, double tol) {
  check_indices(s, k, i);
  const auto& rho = s.irrep(k);
  const GroupPtr& h = s.group();
  std::vector<int> members;
  for (int g = 0; g < h->order(); ++g) {
    // e_i rho(g) = e_i: row i equals the standard basis row
    double dev = 0.0;
    for (int c = 0; c < rho.dim; ++c)
      dev = std::max(dev, std::abs(rho.at(g).at(i - 1, c) -
                                   (c == i - 1 ? cplx{1.0} : cplx{})));
    if (dev < tol) members.push_back(g);
  }
  Subgroup sub;
  sub.parent = h;
  sub.members = std::move(members);
  for (int a : sub.members)
    for (int b : sub.members)
      if (!sub.contains(h->mul(a, b)))
        throw consistency_error("stabilizer: computed fixer set is not closed");
  return sub;
}

bool annihilator_member(const GroupRingElement& r, const IrrepSet& s, int k, int i,
                        double tol) {
  check_indices(s, k, i);
  if (r.group.get() != s.group().get())
    throw domain_error("annihilator_member: group mismatch");
  const auto& rho = s.irrep(k);
  for (int c = 0; c < rho.dim; ++c) {
    cplx acc{};
    for (int j = 0; j < r.group->order(); ++j) {
      if (r.coeffs[j] == 0) continue;
      acc += double(r.coeffs[j]) * rho.at(j).at(i - 1, c);
    }
    if (std::abs(acc) >= tol) return false;
  }
  return true;
}

Classification classify_via_group_ring(const PromiseFunction& f, const IrrepSet& s, int k,
                                       int i, double tol) {
  f.validate();
  check_indices(s, k, i);
  const auto rf = group_ring_element(f);

  Classification out;
  out.k = k;
  out.i = i;
  out.degenerate = k == 1;

  const Subgroup stab = stabilizer(s, k, i, tol);
  const auto parts = cosets(s.group(), stab);
  const int first_image = f.image[0];
  const std::vector<int>* home = nullptr;
  for (const auto& coset : parts)
    if (std::binary_search(coset.begin(), coset.end(), first_image)) {
      home = &coset;
      break;
    }
  bool constant = true;
  for (int j = 0; j < s.group()->order(); ++j)
    if (rf.coeffs[j] > 0 && !std::binary_search(home->begin(), home->end(), j)) {
      constant = false;
      break;
    }

  const bool balanced = !out.degenerate && annihilator_member(rf, s, k, i, tol);

  if (constant && balanced)
    throw consistency_error("group-ring classification: both coset containment and annihilation");
  out.verdict = constant ? Verdict::Constant
                         : (balanced ? Verdict::Balanced : Verdict::Neither);

  const Classification defn = classify_definitional(f, s, k, i, tol);
  if (defn.verdict != out.verdict)
    throw consistency_error("classification cross-check: definitional verdict '" +
                            to_string(defn.verdict) + "' vs group-ring verdict '" +
                            to_string(out.verdict) + "' at (k=" + std::to_string(k) +
                            ", i=" + std::to_string(i) + ")");
  out.constant_row = defn.constant_row;
  out.row_sums = defn.row_sums;
  return out;
}

PromiseFunction abelian_reduce(const PromiseFunction& f, int m,
                               const std::vector<int>& decomposition) {
  f.validate();
  if (!f.codomain->is_abelian())
    throw unsupported_error("abelian_reduce: codomain is not abelian");
  long long n = 1;
  for (int factor : decomposition) n *= factor;
  if (n != f.codomain->order())
    throw domain_error("abelian_reduce: decomposition does not match the codomain order");
  if (m < 0 || m >= n) throw domain_error("abelian_reduce: character element out of range");

  const int kfac = int(decomposition.size());
  auto digits = [&](int e) {
    std::vector<int> d(kfac);
    for (int j = kfac - 1; j >= 0; --j) {
      d[j] = e % decomposition[j];
      e /= decomposition[j];
    }
    return d;
  };
  const auto md = digits(m);

  PromiseFunction out;
  out.domain_size = f.domain_size;
  out.codomain = build_cyclic(int(n));
  out.image.reserve(f.domain_size);
  for (int g = 0; g < f.domain_size; ++g) {
    const auto ad = digits(f.image[g]);
    long long acc = 0;
    for (int j = 0; j < kfac; ++j)
      acc = (acc + (long long)(ad[j]) * md[j] * (n / decomposition[j])) % n;
    out.image.push_back(int(acc));
  }
  return out;
}

CyclicReduction cyclic_reduce(const PromiseFunction& f, int k) {
  f.validate();
  if (f.codomain->kind() != FiniteGroup::Kind::Cyclic)
    throw domain_error("cyclic_reduce: codomain must be a cyclic group");
  const int n = f.codomain->order();
  if (k < 0 || k >= n) throw domain_error("cyclic_reduce: character index out of range");

  CyclicReduction red;
  red.degenerate = k == 0;
  red.d = std::gcd(k, n);
  if (k == 0) red.d = n;  // gcd(0, n) = n; flagged degenerate
  red.u = k / red.d;
  red.v = n / red.d;

  red.fbar.domain_size = f.domain_size;
  red.fbar.codomain = build_cyclic(red.v);
  red.fbar.image.reserve(f.domain_size);
  for (int v : f.image) red.fbar.image.push_back(v % red.v);
  return red;
}

IntPolynomial FunctionProfile::polynomial() const {
  std::vector<mpz_class> c(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) c[i] = long(counts[i]);
  return IntPolynomial(std::move(c));
}

long long FunctionProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

FunctionProfile profile_polynomial(const PromiseFunction& f) {
  f.validate();
  if (f.codomain->kind() != FiniteGroup::Kind::Cyclic)
    throw domain_error("profile_polynomial: codomain must be a cyclic group");
  FunctionProfile p;
  p.modulus = f.codomain->order();
  p.counts.assign(p.modulus, 0);
  for (int v : f.image) ++p.counts[v];
  return p;
}

FunctionProfile profile_from_counts(int modulus, std::vector<long long> counts) {
  if (modulus < 1) throw domain_error("profile: modulus must be >= 1");
  if (int(counts.size()) > modulus) throw domain_error("profile: too many counts");
  for (long long c : counts)
    if (c < 0) throw domain_error("profile: negative fiber count");
  counts.resize(modulus, 0);
  FunctionProfile p;
  p.modulus = modulus;
  p.counts = std::move(counts);
  return p;
}

bool is_one_balanced_exact(const FunctionProfile& p) {
  return divides(cyclotomic_poly(p.modulus), p.polynomial());
}

std::vector<CosetCover> even_cover_check(const PromiseFunction& f, int kgen) {
  const auto profile = profile_polynomial(f);
  const auto sub = subgroup_generated(f.codomain, {kgen});
  std::vector<CosetCover> out;
  for (const auto& coset : cosets(f.codomain, sub)) {
    CosetCover cover;
    cover.coset = coset;
    const long long first = profile.counts[coset[0]];
    bool even = true;
    for (int t : coset) even = even && profile.counts[t] == first;
    if (even) cover.multiplicity = first;
    out.push_back(std::move(cover));
  }
  return out;
}

EvenCoverDecomposition even_cover_decompose(const PromiseFunction& f) {
  const auto profile = profile_polynomial(f);
  const int n = profile.modulus;
  if (n < 2) throw domain_error("even_cover_decompose: modulus must be >= 2");
  const auto factors = prime_factorization(n);
  if (factors.size() > 2)
    throw unsupported_error(
        "even_cover_decompose: moduli with three or more distinct prime factors admit "
        "no even-cover decomposition in general (a 22-term balanced polynomial over "
        "Z_105 admits none)");

  EvenCoverDecomposition out;
  out.n = n;
  out.p = factors[0].first;
  out.q = factors.size() == 2 ? factors[1].first : 0;

  if (!is_one_balanced_exact(profile)) {
    out.balanced = false;
    return out;
  }
  out.balanced = true;

  if (out.q == 0) {
    // single prime: every coset of K_p is evenly covered; X_p = X
    out.p_multiplicities.resize(n / out.p);
    for (int t = 0; t < n / out.p; ++t) out.p_multiplicities[t] = profile.counts[t];
    out.xp.resize(f.domain_size);
    std::iota(out.xp.begin(), out.xp.end(), 0);
    return out;
  }

  const auto dec = dephi_decompose(profile.polynomial(), n);
  const IntPolynomial a_poly = dec.s1 * f_poly(dec.p).substitute_power(n / dec.p);
  const IntPolynomial b_poly = dec.s2 * f_poly(dec.q).substitute_power(n / dec.q);

  out.p_multiplicities.resize(n / out.p);
  for (int t = 0; t < n / out.p; ++t)
    out.p_multiplicities[t] = a_poly.coeff(t).get_si();
  out.q_multiplicities.resize(n / out.q);
  for (int t = 0; t < n / out.q; ++t)
    out.q_multiplicities[t] = b_poly.coeff(t).get_si();

  // split each fiber f^-1(t): the first a_t domain elements (ascending index)
  // go to X_p, the rest to X_q
  std::vector<long long> quota(n);
  for (int t = 0; t < n; ++t) quota[t] = a_poly.coeff(t).get_si();
  for (int g = 0; g < f.domain_size; ++g) {
    const int t = f.image[g];
    if (quota[t] > 0) {
      out.xp.push_back(g);
      --quota[t];
    } else {
      out.xq.push_back(g);
    }
  }
  return out;
}

}  // namespace djh
