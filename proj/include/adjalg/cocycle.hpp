#pragma once

/**
 * @file cocycle.hpp
 * @brief 2-cocycles on a subgroup, their checks and normalization.
 *
 * A TwoCocycle stores nonzero values psi(f,h) on F x F for a subgroup F,
 * indexed by position in the sorted subgroup list.  The normalization
 * procedure multiplies by an exact coboundary so that the result
 * satisfies psi(f,1) = psi(1,f) = 1 and psi(f,g) psi(g^-1,f^-1) = 1;
 * involutions force square roots, taken deterministically in an
 * enlarged cyclotomic field.
 */

#include <vector>

#include "adjalg/group.hpp"
#include "adjalg/linalg.hpp"

namespace adjalg {

struct CocycleReport {
  bool is_cocycle;
  bool is_normalized;
};

class TwoCocycle {
 public:
  /** Constant 1 on F x F. */
  static TwoCocycle trivial(const FiniteGroup& g, std::vector<int> subgroup_elems);

  /**
   * values(i)(j) = psi(f_i, f_j) over positions in the sorted subgroup
   * list; every value must be nonzero.
   */
  TwoCocycle(const FiniteGroup& g, std::vector<int> subgroup_elems, Mat values);

  const FiniteGroup& group() const { return *g_; }
  const std::vector<int>& subgroup() const { return f_; }
  int subgroup_size() const { return static_cast<int>(f_.size()); }

  /** psi on subgroup positions. */
  const Cyc& at_pos(int i, int j) const { return values_(i, j); }
  /** psi on group element indices (both must lie in F). */
  const Cyc& at(int a, int b) const;
  int pos_of(int g) const;  /* position in subgroup list, throws if absent */

  /** Cocycle identity and normalization, checked exhaustively. */
  CocycleReport check() const;

  /** b(l, f) = psi(l, l^-1 f l) / psi(f, l). */
  Cyc b(int l, int f) const;

  /** The fiber {(g, f) in F x F : g^-1 f g = l}, i.e. {(g, g l g^-1)}. */
  std::vector<std::pair<int, int>> conjugation_fiber(int l) const;

  /**
   * A cohomologous normalized cocycle psi' = psi * d(mu) together with
   * the coboundary values mu (indexed by subgroup position).  Requires
   * every value to be a rational multiple of a root of unity.
   */
  std::pair<TwoCocycle, std::vector<Cyc>> normalized() const;

  const Mat& values() const { return values_; }

 private:
  const FiniteGroup* g_;
  std::vector<int> f_;
  std::vector<int> pos_;  /* group index -> subgroup position, -1 outside */
  Mat values_;
};

}  // namespace adjalg
