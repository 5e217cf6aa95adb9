#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace djh {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group held as an explicit multiplication table over element
// indices 0..order-1. Immutable after construction; all the group axioms are
// verified exhaustively when the table is built (orders stay at or below 256).
class FiniteGroup {
 public:
  enum class Kind {
    Cyclic,         // Z_n, elements 0..n-1 under addition mod n
    CyclicProduct,  // direct product of cyclic factors, mixed-radix encoding
    Dihedral,       // r^a at index a, r^a s at index n + a
    Symmetric,      // permutations of {0..m-1} in lexicographic one-line order
    Alternating4,   // the word list I, N, N^2, R, RN, ..., N^2RN^2
    Table,          // anything supplied as a raw table
  };

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[size_t(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // -1 when no element carries the label
  int element_by_label(const std::string& label) const;

  bool is_abelian() const { return abelian_; }
  Kind kind() const { return kind_; }

  // Cyclic decomposition [n_1, ..., n_k]; empty unless Cyclic/CyclicProduct.
  const std::vector<int>& cyclic_factors() const { return factors_; }
  // Construction parameter (dihedral n, symmetric m); 0 otherwise.
  int param() const { return param_; }

  friend GroupPtr make_group(std::vector<int> mul_flat, std::vector<std::string> labels,
                             FiniteGroup::Kind kind, std::vector<int> factors, int param);

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;  // row-major order x order
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  bool abelian_ = false;
  Kind kind_ = Kind::Table;
  std::vector<int> factors_;
  int param_ = 0;
};

GroupPtr build_cyclic(int n);
GroupPtr build_direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr build_dihedral(int n);
GroupPtr build_symmetric(int m);
GroupPtr build_alternating4();
GroupPtr build_from_table(const std::vector<std::vector<int>>& mul,
                          std::vector<std::string> labels = {});

// The 3x3 signed permutation matrices realizing the alternating4 word list,
// in element order. Shared with the representation module so the group and
// its three-dimensional representation come from the same matrices.
std::vector<std::array<std::array<int, 3>, 3>> alternating4_matrices();

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted ascending

  bool contains(int g) const;
  int order() const { return int(members.size()); }
};

// Smallest subgroup containing the given generators.
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);

// Right cosets Sh, each sorted ascending, ordered by minimal element.
std::vector<std::vector<int>> cosets(const GroupPtr& g, const Subgroup& s);

// Permutations of {0..m-1} in lexicographic one-line order.
std::vector<std::vector<int>> permutations_lex(int m);

}  // namespace djh
