#pragma once

/**
 * @file group.hpp
 * @brief Finite groups as validated Cayley tables.
 *
 * Elements are indices 0..n-1 with printable labels.  A group can be
 * built from an explicit multiplication table or generated from
 * permutations (closure ordered lexicographically by permutation word,
 * which puts the identity first).  Subgroups are index subsets closed
 * under the table; right coset machinery fixes, once and for all, the
 * decomposition convention g = f * s with f in F and s in the chosen
 * transversal S of F\G.
 */

#include <string>
#include <vector>

#include "adjalg/cyc.hpp"

namespace adjalg {

class FiniteGroup {
 public:
  /** Validates closure, identity, inverses and associativity. */
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> cayley);

  /** Closure of permutations of {0..degree-1}; elements sorted by word. */
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& generators);

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return cayley_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  /* g x g^-1 */

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  /* throws InputError */

  /** Conjugacy classes, each sorted, ordered by smallest member. */
  std::vector<std::vector<int>> conjugacy_classes() const;

  bool is_abelian() const;

  /** Subgroup index list from labels; validated closed. Sorted. */
  std::vector<int> subgroup(const std::vector<std::string>& labels) const;
  /** Validates that the sorted index list is a subgroup. */
  void check_subgroup(const std::vector<int>& elems) const;

 private:
  int n_;
  int e_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inv_;
};

/**
 * A right transversal of F\G with the induced unique factorization
 * g = f * s.  The first representative is always the identity; later
 * ones are the smallest group index not covered yet.
 */
class CosetDecomposition {
 public:
  CosetDecomposition(const FiniteGroup& g, std::vector<int> subgroup_elems);

  const FiniteGroup& group() const { return *g_; }
  const std::vector<int>& subgroup() const { return f_; }
  const std::vector<int>& reps() const { return s_; }
  int num_cosets() const { return static_cast<int>(s_.size()); }

  /** Position of an element inside the subgroup list, -1 if absent. */
  int subgroup_pos(int g) const { return f_pos_[g]; }
  /** Position of a representative in reps(), -1 if not a representative. */
  int rep_pos(int g) const { return s_pos_[g]; }

  /** The unique (f, s) with g = f * s; both are group element indices. */
  std::pair<int, int> decompose(int g) const { return fs_[g]; }

 private:
  const FiniteGroup* g_;
  std::vector<int> f_;
  std::vector<int> s_;
  std::vector<int> f_pos_;
  std::vector<int> s_pos_;
  std::vector<std::pair<int, int>> fs_;
};

}  // namespace adjalg
