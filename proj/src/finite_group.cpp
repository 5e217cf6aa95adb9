#include "djh/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "djh/errors.hpp"

namespace djh {

namespace {

constexpr int kMaxOrder = 256;

void validate_table(int order, const std::vector<int>& mul, int* identity_out,
                    std::vector<int>* inv_out) {
  if (order <= 0) throw group_error("invalid order: group order must be positive");
  if (order > kMaxOrder)
    throw group_error("unsupported order: groups larger than 256 are out of scope");
  if (mul.size() != size_t(order) * order)
    throw group_error("multiplication table has wrong shape");

  auto m = [&](int a, int b) { return mul[size_t(a) * order + b]; };

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (m(a, b) < 0 || m(a, b) >= order)
        throw group_error("closure fails: entry (" + std::to_string(a) + "," +
                          std::to_string(b) + ") out of range");

  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int g = 0; g < order && ok; ++g) ok = m(e, g) == g && m(g, e) == g;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw group_error("identity law fails: no two-sided identity element");

  std::vector<int> inv(order, -1);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      if (m(g, h) == identity && m(h, g) == identity) {
        inv[g] = h;
        break;
      }
    }
    if (inv[g] < 0)
      throw group_error("inverse law fails: element " + std::to_string(g) +
                        " has no two-sided inverse");
  }

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          throw group_error("associativity fails at triple (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");

  *identity_out = identity;
  *inv_out = std::move(inv);
}

bool table_abelian(int order, const std::vector<int>& mul) {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul[size_t(a) * order + b] != mul[size_t(b) * order + a]) return false;
  return true;
}

using Mat3 = std::array<std::array<int, 3>, 3>;

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

GroupPtr make_group(std::vector<int> mul_flat, std::vector<std::string> labels,
                    FiniteGroup::Kind kind, std::vector<int> factors, int param) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const int order = int(labels.size());
  int identity = 0;
  std::vector<int> inv;
  validate_table(order, mul_flat, &identity, &inv);
  g->order_ = order;
  g->identity_ = identity;
  g->abelian_ = table_abelian(order, mul_flat);
  g->mul_ = std::move(mul_flat);
  g->inv_ = std::move(inv);
  g->labels_ = std::move(labels);
  g->kind_ = kind;
  g->factors_ = std::move(factors);
  g->param_ = param;
  return g;
}

int FiniteGroup::element_by_label(const std::string& label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

GroupPtr build_cyclic(int n) {
  if (n <= 0) throw group_error("invalid order: cyclic group needs n >= 1");
  std::vector<int> mul(size_t(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) mul[size_t(a) * n + b] = (a + b) % n;
  }
  return make_group(std::move(mul), std::move(labels), FiniteGroup::Kind::Cyclic, {n}, n);
}

GroupPtr build_direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order();
  const int n = na * nb;
  if (n > kMaxOrder) throw group_error("unsupported order: product exceeds 256");
  std::vector<int> mul(size_t(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      const int x = i * nb + j;
      labels[x] = "(" + a->label(i) + "," + b->label(j) + ")";
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          mul[size_t(x) * n + (k * nb + l)] = a->mul(i, k) * nb + b->mul(j, l);
    }

  const auto cyclic_like = [](const GroupPtr& g) {
    return g->kind() == FiniteGroup::Kind::Cyclic ||
           g->kind() == FiniteGroup::Kind::CyclicProduct;
  };
  std::vector<int> factors;
  FiniteGroup::Kind kind = FiniteGroup::Kind::Table;
  if (cyclic_like(a) && cyclic_like(b)) {
    kind = FiniteGroup::Kind::CyclicProduct;
    factors = a->cyclic_factors();
    factors.insert(factors.end(), b->cyclic_factors().begin(), b->cyclic_factors().end());
  }
  return make_group(std::move(mul), std::move(labels), kind, std::move(factors), 0);
}

GroupPtr build_dihedral(int n) {
  if (n <= 0) throw group_error("invalid order: dihedral group needs n >= 1");
  const int order = 2 * n;
  if (order > kMaxOrder) throw group_error("unsupported order: dihedral group exceeds 256");
  // index a in [0,n): r^a; index n+a: r^a s;  s r s = r^-1
  auto rot = [&](int a) { return ((a % n) + n) % n; };
  std::vector<int> mul(size_t(order) * order);
  auto set = [&](int x, int y, int z) { mul[size_t(x) * order + y] = z; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      set(a, b, rot(a + b));              // r^a r^b
      set(a, n + b, n + rot(a + b));      // r^a (r^b s)
      set(n + a, b, n + rot(a - b));      // (r^a s) r^b = r^(a-b) s
      set(n + a, n + b, rot(a - b));      // (r^a s)(r^b s) = r^(a-b)
    }
  std::vector<std::string> labels(order);
  for (int a = 0; a < n; ++a) {
    std::string ra = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    labels[a] = a == 0 ? "1" : ra;
    labels[n + a] = ra + "s";
  }
  return make_group(std::move(mul), std::move(labels), FiniteGroup::Kind::Dihedral, {}, n);
}

std::vector<std::vector<int>> permutations_lex(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

GroupPtr build_symmetric(int m) {
  if (m < 1) throw group_error("invalid order: symmetric group needs m >= 1");
  if (m > 5) throw unsupported_error("unsupported order: symmetric groups above S_5 are out of scope");
  auto perms = permutations_lex(m);
  const int order = int(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;

  std::vector<int> mul(size_t(order) * order);
  std::vector<int> comp(m);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < m; ++x) comp[x] = perms[a][perms[b][x]];  // a after b
      mul[size_t(a) * order + b] = index.at(comp);
    }
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) {
    std::string s;
    for (int x : perms[i]) s += std::to_string(x);
    labels[i] = s;
  }
  return make_group(std::move(mul), std::move(labels), FiniteGroup::Kind::Symmetric, {}, m);
}

std::vector<Mat3> alternating4_matrices() {
  const Mat3 kI{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const Mat3 kN{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
  const Mat3 kR{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  // word list I, N, N^2, R, RN, RN^2, NR, NRN, NRN^2, N^2R, N^2RN, N^2RN^2
  const std::vector<std::string> words = {"",   "N",   "NN",   "R",   "RN",   "RNN",
                                          "NR", "NRN", "NRNN", "NNR", "NNRN", "NNRNN"};
  std::vector<Mat3> mats;
  for (const auto& w : words) {
    Mat3 m = kI;
    for (char c : w) m = mat3_mul(m, c == 'N' ? kN : kR);
    mats.push_back(m);
  }
  return mats;
}

GroupPtr build_alternating4() {
  auto mats = alternating4_matrices();
  const int order = int(mats.size());
  auto find = [&](const Mat3& m) {
    for (int i = 0; i < order; ++i)
      if (mats[i] == m) return i;
    throw group_error("alternating4: product left the word list");
  };
  std::vector<int> mul(size_t(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      mul[size_t(a) * order + b] = find(mat3_mul(mats[a], mats[b]));
  std::vector<std::string> labels = {"I",   "N",   "N^2",   "R",    "RN",    "RN^2",
                                     "NR",  "NRN", "NRN^2", "N^2R", "N^2RN", "N^2RN^2"};
  return make_group(std::move(mul), std::move(labels), FiniteGroup::Kind::Alternating4, {}, 0);
}

GroupPtr build_from_table(const std::vector<std::vector<int>>& mul,
                          std::vector<std::string> labels) {
  const int order = int(mul.size());
  std::vector<int> flat;
  flat.reserve(size_t(order) * order);
  for (const auto& row : mul) {
    if (int(row.size()) != order) throw group_error("multiplication table has wrong shape");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (labels.empty()) {
    labels.resize(order);
    for (int i = 0; i < order; ++i) labels[i] = "g" + std::to_string(i);
  }
  if (int(labels.size()) != order) throw group_error("label list has wrong length");
  return make_group(std::move(flat), std::move(labels), FiniteGroup::Kind::Table, {}, 0);
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g->order()) throw domain_error("subgroup_generated: generator out of range");
  std::set<int> seen{g->identity()};
  std::vector<int> todo{g->identity()};
  for (int x : gens)
    if (seen.insert(x).second) todo.push_back(x);
  while (!todo.empty()) {
    const int a = todo.back();
    todo.pop_back();
    std::vector<int> next{g->inv(a)};
    for (int b : seen) {
      next.push_back(g->mul(a, b));
      next.push_back(g->mul(b, a));
    }
    for (int x : next)
      if (seen.insert(x).second) todo.push_back(x);
  }
  Subgroup s;
  s.parent = g;
  s.members.assign(seen.begin(), seen.end());
  return s;
}

std::vector<std::vector<int>> cosets(const GroupPtr& g, const Subgroup& s) {
  if (s.parent.get() != g.get()) throw domain_error("cosets: subgroup belongs to another group");
  std::vector<bool> used(g->order(), false);
  std::vector<std::vector<int>> out;
  for (int h = 0; h < g->order(); ++h) {
    if (used[h]) continue;
    std::vector<int> coset;
    for (int m : s.members) coset.push_back(g->mul(m, h));  // right coset Sh
    std::sort(coset.begin(), coset.end());
    for (int x : coset) {
      if (used[x]) throw group_error("cosets: input is not closed under the group operation");
      used[x] = true;
    }
    out.push_back(std::move(coset));
  }
  // scanning h upward already yields cosets ordered by minimal element
  return out;
}

}  // namespace djh
