#pragma once

/**
 * @file closedform.hpp
 * @brief Explicit bases of the adjoint algebra for group algebras and
 *        their duals, with built-in cross-validation.
 *
 * For H = kG and K a twisted group algebra of a subgroup F the solution
 * space of the defining condition has a combinatorial basis alpha[s,l]
 * indexed by a coset representative s and a subgroup element l.  For
 * H = k^G and K the induced matrix comodule algebra of (F, psi, V) the
 * basis alpha[(f,s)] is indexed the other way around and carries an
 * intertwiner T_f on V.  Both constructions are verified against the
 * generic solver: the spans must coincide exactly and the closed-form
 * action and coaction tensors must transport to the solved ones under
 * the change of basis.  Any mismatch is a hard error, never a warning.
 */

#include <utility>
#include <vector>

#include "adjalg/adjoint.hpp"
#include "adjalg/cocycle.hpp"
#include "adjalg/comodalg.hpp"
#include "adjalg/hopf.hpp"

namespace adjalg {

/**
 * Basis alpha[s,l] of the adjoint algebra of a twisted group algebra
 * target inside a group algebra.  Column pidx(s,l,nf) of `elements`
 * holds the flattened matrix of the element whose value on the group
 * basis vector at g*s is b(g, g l g^-1) times the algebra basis vector
 * at g l g^-1, for g in F.
 */
struct GroupCaseBasis {
  const HopfData* hopf;
  const ComoduleAlgebra* alg;
  TwoCocycle psi;
  CosetDecomposition cosets;
  int ns;
  int nf;
  Mat elements;

  int dim() const { return ns * nf; }
  int index(int s_pos, int l_pos) const { return pidx(s_pos, l_pos, nf); }
};

/** Action and coaction tensors in alpha[s,l] coordinates. */
struct GroupCaseYD {
  Mat act;
  Mat coact;
};

/**
 * Build the alpha[s,l] family for H the group algebra of psi's group
 * and k the twisted group algebra of psi.  Verifies that the family is
 * independent and spans the generic solution space.
 */
GroupCaseBasis group_case_basis(const HopfData& h, const TwoCocycle& psi,
                                const ComoduleAlgebra& k);

/**
 * Evaluate alpha[s,l] on x (x) e_h by the direct formula: zero unless
 * x lies in the coset of s, else a single algebra basis vector scaled
 * by a b-value and a cocycle value.
 */
Vec group_case_apply(const GroupCaseBasis& b, int s_pos, int l_pos, int x,
                     int h_pos);

/**
 * Closed-form Yetter-Drinfeld tensors on the alpha[s,l] basis: the
 * coaction is group-like with grade s^-1 l s, the action permutes the
 * basis up to a b-scalar.  Both are checked entry by entry against the
 * generic solver transported through the change of basis.
 */
GroupCaseYD group_case_yd(const GroupCaseBasis& b);

/**
 * The operator T_f determined up to scale by U T = T (U . f) for every
 * U on V, where f acts on operators by conjugation.  Asserts the
 * solution space is one-dimensional and scales the first nonzero entry
 * in row-major order to 1.
 */
Mat t_f_solver(const TwoCocycle& psi, const ProjectiveRep& v, int f_pos);

/**
 * Basis alpha[(f,s)] of the adjoint algebra of the induced matrix
 * comodule algebra over a function algebra.  Column pidx(f,s,ns) of
 * `elements` is supported on the single group functional at s^-1 f s
 * and carries the class of T_f (x) s.
 */
struct DualCaseBasis {
  const HopfData* hopf;
  const ComoduleAlgebra* alg;
  TwoCocycle psi;
  ProjectiveRep rep;
  CosetDecomposition cosets;
  int nf;
  int ns;
  int dv;
  std::vector<Mat> tf;
  Mat elements;

  int dim() const { return nf * ns; }
  int index(int f_pos, int s_pos) const { return pidx(f_pos, s_pos, ns); }
};

/** Action and coaction tensors in alpha[(f,s)] coordinates. */
struct DualCaseYD {
  Mat act;
  Mat coact;
};

/**
 * Build the alpha[(f,s)] family for h the function algebra of psi's
 * group and k the induced matrix comodule algebra of (psi, v).
 * Verifies span equality with the generic solver.
 */
DualCaseBasis dual_case_basis(const HopfData& h, const TwoCocycle& psi,
                              const ProjectiveRep& v,
                              const ComoduleAlgebra& k);

/**
 * Closed-form tensors on the alpha[(f,s)] basis: each basis vector is
 * an eigenvector of the action, annihilated by every group functional
 * except the one at s^-1 f s; the coaction sums the classes of
 * T_f (x) sa over the group, rewritten into basis form.  Checked
 * against the generic solver exactly.
 */
DualCaseYD dual_case_yd(const DualCaseBasis& b);

}  // namespace adjalg
