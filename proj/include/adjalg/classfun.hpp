#pragma once

/**
 * @file classfun.hpp
 * @brief Morphism spaces between Yetter-Drinfeld modules, spaces of
 *        class functions, and their combinatorial models.
 *
 * The space of class functions attached to a comodule algebra K is the
 * space of Yetter-Drinfeld morphisms from the adjoint algebra of K to
 * the adjoint algebra of H itself.  For group algebras this space has
 * a model by scalar functions on (coset representative, subgroup
 * element) pairs subject to a b-scalar covariance; for function
 * algebras it is modelled by functions on the coset space.  Both
 * models are computed here by independent pipelines and compared
 * against the brute-force morphism solver.
 */

#include <vector>

#include "adjalg/adjoint.hpp"
#include "adjalg/closedform.hpp"

namespace adjalg {

/** Basis of maps intertwining both action and coaction. */
struct YDMorphismSpace {
  int source_dim;
  int target_dim;
  std::vector<Mat> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

/**
 * All linear maps from a to b commuting with the H-action and
 * H-coaction, computed as an exact nullspace.
 */
YDMorphismSpace yd_hom(const YDModule& a, const YDModule& b);

/**
 * The space of class functions of the module category of K: morphisms
 * from the adjoint algebra of K to the adjoint algebra of H, both
 * taken with their Yetter-Drinfeld structures.
 */
YDMorphismSpace class_functions(const HopfData& h, const ComoduleAlgebra& k);

/**
 * Scalar model for the group algebra case: functions on
 * (representative, subgroup element) pairs with the b-scalar
 * covariance phi(s,g) = b(h^-1, h^-1 g h) phi(r, h^-1 g h) whenever
 * s x^-1 = h r.  Row pidx(s,l,nf) of `basis` is the value at (s,l).
 */
struct CPsiSpace {
  TwoCocycle psi;
  CosetDecomposition cosets;
  int ns;
  int nf;
  Mat basis;

  int dim() const { return static_cast<int>(basis.cols()); }
};

CPsiSpace c_psi_space(const TwoCocycle& psi);

/**
 * Coset-function model for the function algebra case.  One morphism
 * per coset of F in G: it kills every alpha[(f,s)] with f != 1 and
 * sends alpha[(1,s)] to the sum of alpha[(1,g)] over the g with s g^-1
 * in the chosen coset.  Each map is verified to intertwine, and the
 * family is verified to be a basis of the brute-force morphism space.
 */
struct DualCFModel {
  std::vector<Mat> morphisms;
  YDMorphismSpace hom;
};

DualCFModel cf_dual_model(const DualCaseBasis& b, const DualCaseBasis& reg);

/**
 * The adjoint algebra object of the bimodule fusion category attached
 * to (G, F, psi): the solved space tensored with the twisted group
 * algebra, carrying the grade s^-1 f s h coaction and the two-sided
 * twisted multiplication.  Built once by the displayed formulas and
 * once through the center transport of the Yetter-Drinfeld module;
 * any disagreement is a hard error.
 */
EquivariantBimodule group_theoretical_adjoint(const GroupCaseBasis& b,
                                              const GroupCaseYD& yd);

/** The three dimensions relevant to the group-theoretical case. */
struct GTClassFunctions {
  int dim_end;
  int dim_c1;
  int dim_cpsi;
  bool final_match;
};

/**
 * Computes the endomorphism dimension of the solved space, the
 * dimension of the trivial-cocycle scalar model, and the dimension of
 * the psi-twisted scalar model, as three independent computations.
 */
GTClassFunctions group_theoretical_cf(const HopfData& h, const TwoCocycle& psi,
                                      const ComoduleAlgebra& k);

}  // namespace adjalg
