#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here stays deliberately naive: enumeration and brute-force search, never
// the code paths under test.

#include <functional>
#include <numeric>
#include <vector>

#include "djh/promise.hpp"

namespace djh::testing {

inline PromiseFunction make_function(const GroupPtr& codomain, std::vector<int> image) {
  PromiseFunction f;
  f.domain_size = int(image.size());
  f.codomain = codomain;
  f.image = std::move(image);
  f.validate();
  return f;
}

// realizes a fiber-count profile as a concrete function with ascending image
inline PromiseFunction function_from_counts(const GroupPtr& codomain,
                                            const std::vector<long long>& counts) {
  std::vector<int> image;
  for (int t = 0; t < int(counts.size()); ++t)
    for (long long c = 0; c < counts[t]; ++c) image.push_back(t);
  return make_function(codomain, std::move(image));
}

// all |H|^|X| image tables, in odometer order
inline void for_each_function(int domain_size, const GroupPtr& codomain,
                              const std::function<void(const PromiseFunction&)>& fn) {
  std::vector<int> image(domain_size, 0);
  const int h = codomain->order();
  while (true) {
    fn(make_function(codomain, image));
    int pos = domain_size - 1;
    while (pos >= 0 && image[pos] == h - 1) image[pos--] = 0;
    if (pos < 0) return;
    ++image[pos];
  }
}

// all fiber-count profiles over Z_n with total <= max_total
inline void for_each_profile(int n, long long max_total,
                             const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> counts(n, 0);
  std::function<void(int, long long)> rec = [&](int pos, long long remaining) {
    if (pos == n) {
      fn(counts);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      counts[pos] = v;
      rec(pos + 1, remaining - v);
    }
    counts[pos] = 0;
  };
  rec(0, max_total);
}

// Independent even-cover partition search for f : X -> Z_n, n = p^a q^b.
// Looks for u : [0, n/p) and v : [0, n/q) with u[t mod n/p] + v[t mod n/q]
// equal to the fiber count p_t for every t, all entries non-negative. For a
// prime power it degenerates to checking that every coset of K_p is evenly
// covered. No polynomial arithmetic is involved.
inline bool even_partition_exists_brute(const std::vector<long long>& counts, int p, int q) {
  const int n = int(counts.size());
  const int np = n / p;
  if (q == 0) {
    for (int t = 0; t < np; ++t)
      for (int r = t; r < n; r += np)
        if (counts[r] != counts[t]) return false;
    return true;
  }
  const int nq = n / q;
  const int d = std::gcd(np, nq);  // = n / (p q)
  auto crt = [&](int x, int y) {
    for (int t = x; t < n; t += np)
      if (t % nq == y) return t;
    return -1;
  };
  for (int j = 0; j < d; ++j) {
    bool class_ok = false;
    long long w_max = counts[crt(j, j)];
    for (int b = 0; b < p; ++b) w_max = std::min(w_max, counts[crt(j, j + b * d)]);
    // w_max bounded by fibers paired with u-index j; scan all candidates
    for (long long w = 0; w <= w_max && !class_ok; ++w) {
      std::vector<long long> u(q, -1), v(p, -1);
      u[0] = w;
      bool ok = true;
      for (int b = 0; b < p && ok; ++b) {
        v[b] = counts[crt(j, j + b * d)] - w;
        ok = v[b] >= 0;
      }
      for (int a = 1; a < q && ok; ++a) {
        u[a] = counts[crt(j + a * d, j)] - v[0];
        ok = u[a] >= 0;
      }
      for (int a = 0; a < q && ok; ++a)
        for (int b = 0; b < p && ok; ++b)
          ok = u[a] + v[b] == counts[crt(j + a * d, j + b * d)];
      class_ok = ok;
    }
    if (!class_ok) return false;
  }
  return true;
}

}  // namespace djh::testing
