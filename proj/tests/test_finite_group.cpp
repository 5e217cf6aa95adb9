#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "djh/errors.hpp"
#include "djh/finite_group.hpp"

using namespace djh;

namespace {

// brute-force isomorphism search over bijections fixing the identity;
// workable up to order ~8, which covers every case the tests need
bool isomorphic_brute_force(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return false;
  const int n = a->order();
  std::vector<int> others;
  for (int g = 0; g < n; ++g)
    if (g != a->identity()) others.push_back(g);
  std::vector<int> target;
  for (int g = 0; g < n; ++g)
    if (g != b->identity()) target.push_back(g);

  std::sort(target.begin(), target.end());
  do {
    std::vector<int> phi(n);
    phi[a->identity()] = b->identity();
    for (size_t t = 0; t < others.size(); ++t) phi[others[t]] = target[t];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = phi[a->mul(x, y)] == b->mul(phi[x], phi[y]);
    if (ok) return true;
  } while (std::next_permutation(target.begin(), target.end()));
  return false;
}

void check_axioms(const GroupPtr& g) {
  const int n = g->order();
  const int e = g->identity();
  for (int a = 0; a < n; ++a) {
    CHECK(g->mul(e, a) == a);
    CHECK(g->mul(a, e) == a);
    CHECK(g->mul(a, g->inv(a)) == e);
    CHECK(g->mul(g->inv(a), a) == e);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CHECK(g->mul(a, b) >= 0);
      CHECK(g->mul(a, b) < n);
      for (int c = 0; c < n; ++c)
        CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
}

}  // namespace

TEST_CASE("cyclic groups") {
  auto z8 = build_cyclic(8);
  CHECK(z8->order() == 8);
  CHECK(z8->mul(3, 7) == 2);
  CHECK(z8->inv(3) == 5);
  CHECK(z8->is_abelian());
  CHECK(z8->label(5) == "5");
  check_axioms(z8);

  auto z1 = build_cyclic(1);
  CHECK(z1->order() == 1);
  CHECK(z1->identity() == 0);

  CHECK_THROWS_AS(build_cyclic(0), group_error);
}

TEST_CASE("direct products") {
  auto k4 = build_direct_product(build_cyclic(2), build_cyclic(2));
  CHECK(k4->order() == 4);
  for (int g = 1; g < 4; ++g) CHECK(k4->inv(g) == g);  // Klein four-group
  check_axioms(k4);

  auto z2z3 = build_direct_product(build_cyclic(2), build_cyclic(3));
  CHECK(isomorphic_brute_force(z2z3, build_cyclic(6)));

  // iterated Z_2 products multiply by XOR on the mixed-radix encoding
  auto z2cubed = build_direct_product(build_direct_product(build_cyclic(2), build_cyclic(2)),
                                      build_cyclic(2));
  CHECK(z2cubed->cyclic_factors() == std::vector<int>{2, 2, 2});
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(z2cubed->mul(a, b) == (a ^ b));
}

TEST_CASE("dihedral groups") {
  auto d3 = build_dihedral(3);
  CHECK(d3->order() == 6);
  CHECK_FALSE(d3->is_abelian());
  check_axioms(d3);
  CHECK(isomorphic_brute_force(d3, build_symmetric(3)));

  // s r = r^2 s  (indices: r = 1, s = 3, r^2 s = 5)
  CHECK(d3->mul(3, 1) == 5);
  CHECK(d3->label(5) == "r^2s");

  auto d1 = build_dihedral(1);
  CHECK(d1->order() == 2);
  CHECK(isomorphic_brute_force(d1, build_cyclic(2)));
}

TEST_CASE("symmetric groups") {
  auto s3 = build_symmetric(3);
  CHECK(s3->order() == 6);
  check_axioms(s3);

  auto s4 = build_symmetric(4);
  CHECK(s4->order() == 24);
  check_axioms(s4);

  // (0 1) = one-line 102, (1 2) = one-line 021; their product is a 3-cycle
  const int a = s3->element_by_label("102");
  const int b = s3->element_by_label("021");
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  const int ab = s3->mul(a, b);
  int order = 1, x = ab;
  while (x != s3->identity()) {
    x = s3->mul(x, ab);
    ++order;
  }
  CHECK(order == 3);

  // even permutations of S_4 form a subgroup of order 12
  std::vector<int> evens;
  const auto perms = permutations_lex(4);
  for (int g = 0; g < 24; ++g) {
    int inversions = 0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q)
        if (perms[g][p] > perms[g][q]) ++inversions;
    if (inversions % 2 == 0) evens.push_back(g);
  }
  CHECK(evens.size() == 12);
  auto a4_sub = subgroup_generated(s4, evens);
  CHECK(a4_sub.members == evens);

  CHECK(build_symmetric(5)->order() == 120);
  CHECK_THROWS_AS(build_symmetric(6), unsupported_error);
}

TEST_CASE("alternating4 from the word matrices") {
  auto a4 = build_alternating4();
  CHECK(a4->order() == 12);
  CHECK_FALSE(a4->is_abelian());
  check_axioms(a4);
  CHECK(a4->label(10) == "N^2RN");

  const auto mats = alternating4_matrices();
  REQUIRE(mats.size() == 12);
  // all words evaluate to distinct matrices of determinant +1
  std::set<std::array<std::array<int, 3>, 3>> distinct(mats.begin(), mats.end());
  CHECK(distinct.size() == 12);
  for (const auto& m : mats) {
    const int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(det == 1);
  }

  // N^3 = I and R^2 = I
  const int n = 1, r = 3;
  CHECK(a4->mul(n, a4->mul(n, n)) == 0);
  CHECK(a4->mul(r, r) == 0);

  // group multiplication agrees with 3x3 matrix multiplication on all pairs
  auto mat_mul = [](const auto& x, const auto& y) {
    std::array<std::array<int, 3>, 3> z{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      CHECK(mats[a4->mul(a, b)] == mat_mul(mats[a], mats[b]));
}

TEST_CASE("generated subgroups") {
  auto z8 = build_cyclic(8);
  CHECK(subgroup_generated(z8, {4}).members == std::vector<int>{0, 4});
  CHECK(subgroup_generated(z8, {2}).members == std::vector<int>{0, 2, 4, 6});

  auto d3 = build_dihedral(3);
  CHECK(subgroup_generated(d3, {1}).members == std::vector<int>{0, 1, 2});  // <r>
}

TEST_CASE("right cosets") {
  auto z8 = build_cyclic(8);
  auto sub = subgroup_generated(z8, {4});
  const auto parts = cosets(z8, sub);
  CHECK(parts == std::vector<std::vector<int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});

  auto d3 = build_dihedral(3);
  const auto d3_parts = cosets(d3, subgroup_generated(d3, {1}));
  CHECK(d3_parts == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});

  // G / G is the single coset G
  const auto whole = cosets(z8, subgroup_generated(z8, {1}));
  CHECK(whole.size() == 1);
  CHECK(whole[0].size() == 8);

  // partition properties on a non-trivial case
  auto s4 = build_symmetric(4);
  auto sub2 = subgroup_generated(s4, {s4->element_by_label("1032")});
  const auto s4_parts = cosets(s4, sub2);
  std::set<int> seen;
  for (const auto& coset : s4_parts) {
    CHECK(coset.size() == sub2.members.size());
    for (int x : coset) CHECK(seen.insert(x).second);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("table groups and axiom failures") {
  // Z_8 with mul(1,2) and mul(1,3) swapped: identity and inverses survive,
  // associativity does not, and the failing triple is reported
  std::vector<std::vector<int>> bad = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 3, 5, 6, 7, 0}, {2, 3, 4, 5, 6, 7, 0, 1},
      {3, 4, 5, 6, 7, 0, 1, 2}, {4, 5, 6, 7, 0, 1, 2, 3}, {5, 6, 7, 0, 1, 2, 3, 4},
      {6, 7, 0, 1, 2, 3, 4, 5}, {7, 0, 1, 2, 3, 4, 5, 6}};
  CHECK_THROWS_WITH_AS(build_from_table(bad),
                       doctest::Contains("associativity fails"), group_error);

  // closure violation
  std::vector<std::vector<int>> open = {{0, 1}, {1, 7}};
  CHECK_THROWS_AS(build_from_table(open), group_error);

  // a valid table round-trips
  auto z3 = build_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "a", "b"});
  CHECK(z3->order() == 3);
  CHECK(z3->element_by_label("a") == 1);
  check_axioms(z3);
}
