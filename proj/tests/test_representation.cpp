#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "djh/errors.hpp"
#include "djh/representation.hpp"

using namespace djh;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);
const cplx kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

Representation direct_sum(const Representation& a, const Representation& b) {
  Representation out;
  out.group = a.group;
  out.dim = a.dim + b.dim;
  for (size_t g = 0; g < a.matrices.size(); ++g) {
    Matrix m(out.dim, out.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) m.at(i, j) = a.matrices[g].at(i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.matrices[g].at(i, j);
    out.matrices.push_back(std::move(m));
  }
  return out;
}

Representation conjugated(const Representation& rho, const Matrix& t) {
  Representation out;
  out.group = rho.group;
  out.dim = rho.dim;
  const Matrix t_inv = inverse(t);
  for (const auto& m : rho.matrices) out.matrices.push_back(t_inv * m * t);
  return out;
}

}  // namespace

TEST_CASE("abelian irreps: cyclic characters") {
  auto z8 = build_cyclic(8);
  auto s = irreps_of_abelian(z8, {8});
  CHECK(s.count() == 8);
  for (int k = 1; k <= 8; ++k) CHECK(s.dim(k) == 1);
  // chi_k(x) = exp(2 pi i k x / 8); irrep k is the character of element k-1
  for (int k = 0; k < 8; ++k)
    for (int x = 0; x < 8; ++x) {
      const cplx expect = std::polar(1.0, 2.0 * std::numbers::pi * k * x / 8.0);
      CHECK(std::abs(s.irrep(k + 1).at(x).at(0, 0) - expect) < 1e-12);
    }
  // beta maps element m to (1,1,m+1)
  for (int m = 0; m < 8; ++m) {
    CHECK(s.beta(m) == BetaTriple{1, 1, m + 1});
    CHECK(s.beta_inverse(1, 1, m + 1) == m);
  }

  // tau of the sign character of Z_2: tau(1)(1) = -1/sqrt(2)
  auto z2 = irreps_of_abelian(build_cyclic(2), {2});
  CHECK(std::abs(tau_entry(z2, 1, 1) - cplx{-1.0 / std::sqrt(2.0)}) < 1e-12);
}

TEST_CASE("abelian irreps: Z_2^n sign-pattern formula") {
  auto g = build_direct_product(build_direct_product(build_cyclic(2), build_cyclic(2)),
                                build_cyclic(2));
  auto s = irreps_of_abelian(g, {2, 2, 2});
  const double norm = std::sqrt(8.0);
  for (int m = 0; m < 8; ++m)
    for (int x = 0; x < 8; ++x) {
      const int dot = __builtin_popcount(unsigned(m & x));
      const double expect = (dot % 2 == 0 ? 1.0 : -1.0) / norm;
      CHECK(std::abs(tau_entry(s, m, x) - cplx{expect}) < 1e-12);
    }
}

TEST_CASE("abelian irreps: character multiplication is the group law") {
  auto g = build_direct_product(build_cyclic(2), build_cyclic(3));
  auto s = irreps_of_abelian(g, {2, 3});
  for (int m1 = 0; m1 < 6; ++m1)
    for (int m2 = 0; m2 < 6; ++m2) {
      const int m3 = g->mul(m1, m2);
      for (int x = 0; x < 6; ++x) {
        const cplx prod = s.irrep(m1 + 1).at(x).at(0, 0) * s.irrep(m2 + 1).at(x).at(0, 0);
        CHECK(std::abs(prod - s.irrep(m3 + 1).at(x).at(0, 0)) < 1e-12);
      }
    }
  CHECK_THROWS_AS(irreps_of_abelian(g, {3, 3}), validation_error);

  auto z1 = irreps_of_abelian(build_cyclic(1), {1});
  CHECK(z1.count() == 1);
}

TEST_CASE("the S_3 tau table") {
  auto d3 = build_dihedral(3);
  auto s = builtin_irreps(d3);
  REQUIRE(s.count() == 3);
  CHECK(s.dim(1) == 1);
  CHECK(s.dim(2) == 1);
  CHECK(s.dim(3) == 2);

  // element order 1, r, r^2, s, rs, r^2s; the full 36-entry table
  const double a = 1.0 / kSqrt6, b = 1.0 / kSqrt3;
  const cplx w = kOmega, wb = std::conj(kOmega);
  struct Row {
    int k, i, j;
    std::array<cplx, 6> values;
  };
  const std::vector<Row> table = {
      {1, 1, 1, {a, a, a, a, a, a}},
      {2, 1, 1, {a, a, a, -a, -a, -a}},
      {3, 1, 1, {b, b * w, b * wb, 0.0, 0.0, 0.0}},
      {3, 1, 2, {0.0, 0.0, 0.0, b, b * w, b * wb}},
      {3, 2, 1, {0.0, 0.0, 0.0, b, b * wb, b * w}},
      {3, 2, 2, {b, b * wb, b * w, 0.0, 0.0, 0.0}},
  };
  for (const auto& row : table)
    for (int x = 0; x < 6; ++x)
      CHECK(std::abs(s.tau(row.k, row.i, row.j, x) - row.values[x]) < 1e-12);

  // spot values called out separately: tau^3_11(r), tau^3_12(s), tau^2_11(s)
  CHECK(std::abs(s.tau(3, 1, 1, 1) - kOmega / kSqrt3) < 1e-12);
  CHECK(std::abs(s.tau(3, 1, 2, 3) - cplx{1.0 / kSqrt3}) < 1e-12);
  CHECK(std::abs(s.tau(2, 1, 1, 3) - cplx{-1.0 / kSqrt6}) < 1e-12);

  // beta assigns lexicographic (k,i,j) triples after the identity
  CHECK(s.beta(0) == BetaTriple{1, 1, 1});
  CHECK(s.beta(1) == BetaTriple{1, 1, 2});
  CHECK(s.beta(2) == BetaTriple{1, 1, 3});
  CHECK(s.beta(3) == BetaTriple{1, 2, 3});
  CHECK(s.beta(4) == BetaTriple{2, 1, 3});
  CHECK(s.beta(5) == BetaTriple{2, 2, 3});

  // tau_entry for beta(g) = (1,1,2) evaluated at s
  CHECK(std::abs(tau_entry(s, 1, 3) - cplx{-1.0 / kSqrt6}) < 1e-12);
}

TEST_CASE("A_4 irreps") {
  auto a4 = build_alternating4();
  auto s = builtin_irreps(a4);
  REQUIRE(s.count() == 4);
  CHECK(s.dim(1) == 1);
  CHECK(s.dim(2) == 1);
  CHECK(s.dim(3) == 1);
  CHECK(s.dim(4) == 3);

  // the three-dimensional representation comes from the generator matrices
  const auto& rho = s.irrep(4);
  const int n = 1, r = 3;  // element indices of N and R
  CHECK(std::abs(rho.at(n).at(0, 1) - cplx{1.0}) < 1e-15);
  CHECK(std::abs(rho.at(n).at(1, 2) - cplx{1.0}) < 1e-15);
  CHECK(std::abs(rho.at(n).at(2, 0) - cplx{1.0}) < 1e-15);
  CHECK(std::abs(rho.at(r).at(0, 0) - cplx{-1.0}) < 1e-15);
  CHECK(std::abs(rho.at(r).at(1, 1) - cplx{-1.0}) < 1e-15);
  CHECK(std::abs(rho.at(r).at(2, 2) - cplx{1.0}) < 1e-15);

  // cube-root characters kill R and are dual to each other
  CHECK(std::abs(s.irrep(2).at(r).at(0, 0) - cplx{1.0}) < 1e-12);
  CHECK(std::abs(s.irrep(2).at(n).at(0, 0) - kOmega) < 1e-12);
  CHECK(std::abs(s.irrep(3).at(n).at(0, 0) - std::conj(kOmega)) < 1e-12);
}

TEST_CASE("builtin sets validate across the whole menagerie") {
  std::vector<GroupPtr> groups;
  for (int n = 1; n <= 16; ++n) groups.push_back(build_cyclic(n));
  groups.push_back(build_direct_product(build_cyclic(2), build_cyclic(3)));
  for (int n = 1; n <= 8; ++n) groups.push_back(build_dihedral(n));
  for (int m = 1; m <= 4; ++m) groups.push_back(build_symmetric(m));
  groups.push_back(build_alternating4());

  for (const auto& g : groups) {
    auto s = builtin_irreps(g);
    int dim_sq = 0;
    for (int k = 1; k <= s.count(); ++k) dim_sq += s.dim(k) * s.dim(k);
    CHECK(dim_sq == g->order());
    for (const auto& rho : s.irreps()) CHECK(rho.is_unitary(1e-9));
    const auto schur = verify_schur(s, 1e-9);
    CHECK(schur.ok);
    CHECK(schur.pairs_checked == g->order() * g->order());
  }

  CHECK_THROWS_AS(builtin_irreps(build_symmetric(5)), unsupported_error);
  CHECK_THROWS_AS(builtin_irreps(build_from_table({{0, 1}, {1, 0}})), unsupported_error);
}

TEST_CASE("schur orthogonality details") {
  auto s3 = builtin_irreps(build_dihedral(3));
  CHECK(verify_schur(s3, 1e-12).max_deviation < 1e-12);

  auto z8 = builtin_irreps(build_cyclic(8));
  CHECK(verify_schur(z8, 1e-9).max_deviation < 1e-12);

  // tau of the identity element is the constant 1/sqrt(|G|)
  for (int x = 0; x < 6; ++x)
    CHECK(std::abs(tau_entry(s3, 0, x) - cplx{1.0 / kSqrt6}) < 1e-12);
}

TEST_CASE("irreducibility test") {
  auto z2 = build_cyclic(2);
  auto z2_set = irreps_of_abelian(z2, {2});
  CHECK(is_irreducible(trivial_representation(z2)));
  CHECK(is_irreducible(z2_set.irrep(2)));

  auto s3_set = builtin_irreps(build_dihedral(3));
  CHECK(is_irreducible(s3_set.irrep(3)));

  // trivial + trivial has squared-character average 4; trivial + sign gives 2
  const auto tt = direct_sum(trivial_representation(z2), trivial_representation(z2));
  CHECK_FALSE(is_irreducible(tt));
  double norm_tt = 0.0;
  for (const auto& m : tt.matrices) norm_tt += std::norm(m.trace());
  CHECK(norm_tt / 2.0 == doctest::Approx(4.0));

  const auto ts = direct_sum(trivial_representation(z2), z2_set.irrep(2));
  CHECK_FALSE(is_irreducible(ts));
  double norm_ts = 0.0;
  for (const auto& m : ts.matrices) norm_ts += std::norm(m.trace());
  CHECK(norm_ts / 2.0 == doctest::Approx(2.0));
}

TEST_CASE("weyl unitarization") {
  auto d3 = build_dihedral(3);
  auto s3 = builtin_irreps(d3);

  // already unitary input stays unitary with unchanged characters
  const auto same = weyl_unitarize(s3.irrep(3), 1e-9);
  CHECK(same.is_unitary(1e-9));
  for (int g = 0; g < 6; ++g)
    CHECK(std::abs(same.at(g).trace() - s3.irrep(3).at(g).trace()) < 1e-9);

  // conjugate the 2-dim irrep by the shear T = [[1,1],[0,1]] and restore
  Matrix t(2, 2);
  t.at(0, 0) = 1;
  t.at(0, 1) = 1;
  t.at(1, 1) = 1;
  const auto sheared = conjugated(s3.irrep(3), t);
  CHECK_FALSE(sheared.is_unitary(1e-9));
  const auto restored = weyl_unitarize(sheared, 1e-9);
  for (const auto& m : restored.matrices)
    CHECK((m * m.adjoint()).deviation_from_identity() < 1e-9);
  for (int g = 0; g < 6; ++g)
    CHECK(std::abs(restored.at(g).trace() - s3.irrep(3).at(g).trace()) < 1e-9);
  CHECK(is_irreducible(restored));

  // the trivial representation averages to C = |G| and is left untouched
  const auto fixed = weyl_unitarize(trivial_representation(d3), 1e-9);
  CHECK(std::abs(fixed.at(0).at(0, 0) - cplx{1.0}) < 1e-12);

  // a non-homomorphism is rejected
  Representation broken = s3.irrep(3);
  broken.matrices[1].at(0, 0) += 0.5;
  CHECK_THROWS_AS(weyl_unitarize(broken, 1e-9), validation_error);
}

TEST_CASE("user-supplied beta validation") {
  auto z2 = build_cyclic(2);
  auto irreps = irreps_of_abelian(z2, {2}).irreps();
  // beta must be a bijection with beta(identity) = (1,1,1)
  CHECK_THROWS_AS(
      IrrepSet::create_with_beta(z2, irreps, {BetaTriple{1, 1, 1}, BetaTriple{1, 1, 1}}, 1e-9),
      validation_error);
  CHECK_THROWS_AS(
      IrrepSet::create_with_beta(z2, irreps, {BetaTriple{1, 1, 2}, BetaTriple{1, 1, 1}}, 1e-9),
      validation_error);
  auto ok = IrrepSet::create_with_beta(z2, irreps, {BetaTriple{1, 1, 1}, BetaTriple{1, 1, 2}},
                                       1e-9);
  CHECK(ok.beta_inverse(1, 1, 2) == 1);
}
