#pragma once

/**
 * @file comodalg.hpp
 * @brief Left H-comodule algebras, their modules and equivariant
 *        bimodules, the concrete families living inside kG and k^G,
 *        and the internal Hom algebra Hom_K(H (x) M, N).
 *
 * Index conventions follow hopf.hpp: tensor legs are row-major, a
 * K-action column pidx(k, v, dim) holds e_k . v_v, a coaction column v
 * lists v_(-1) (x) v_(0) with flat index pidx(h, w, dim).
 */

#include <string>
#include <vector>

#include "adjalg/cocycle.hpp"
#include "adjalg/hopf.hpp"

namespace adjalg {

struct ComoduleAlgebra {
  const HopfData* hopf = nullptr;
  int dim = 0;
  std::vector<std::string> labels;
  Mat mult;   /* dim x dim^2 */
  Vec unit;   /* dim */
  Mat coact;  /* (hopf->dim * dim) x dim */

  /**
   * Asserts associativity, unit laws, comodule axioms, and that the
   * coaction is an algebra map.  Throws CheckError.
   */
  void validate() const;

  Vec product(const Vec& a, const Vec& b) const;
  Vec basis_product(int i, int j) const { return mult.col(pidx(i, j, dim)); }
};

/** H itself, coacting by its comultiplication. */
ComoduleAlgebra comodule_algebra_from_hopf(const HopfData& h);

/** The ground field with the trivial coaction. */
ComoduleAlgebra trivial_comodule_algebra(const HopfData& h);

struct KModule {
  const ComoduleAlgebra* alg = nullptr;
  int dim = 0;
  Mat act;  /* dim x (alg->dim * dim) */
};

bool is_kmodule(const KModule& m);

KModule regular_kmodule(const ComoduleAlgebra& k);

/** X (x) M with k.(x (x) m) = k_(-1).x (x) k_(0).m. */
KModule kmodule_on_tensor(const HModule& x, const KModule& m);

/** A K-bimodule with no comodule structure attached. */
struct KBimodule {
  const ComoduleAlgebra* alg = nullptr;
  int dim = 0;
  Mat lact;  /* dim x (kdim*dim) */
  Mat ract;  /* dim x (dim*kdim), column pidx(p, k, kdim) = p . e_k */

  void validate() const;  /* throws CheckError */
};

/**
 * An object of the category of K-bimodules carrying an H-comodule
 * structure whose coaction is a bimodule map.
 */
struct EquivariantBimodule {
  const ComoduleAlgebra* alg = nullptr;
  int dim = 0;
  Mat lact;   /* dim x (kdim*dim) */
  Mat ract;   /* dim x (dim*kdim), column pidx(p, k, kdim) = p . e_k */
  Mat coact;  /* (hdim*dim) x dim */

  void validate() const;  /* throws CheckError */
  KBimodule bimodule() const { return KBimodule{alg, dim, lact, ract}; }
  KModule left_module() const { return KModule{alg, dim, lact}; }
};

EquivariantBimodule regular_bimodule(const ComoduleAlgebra& k);

/** X (x) K with s . (x (x) k) . t = s_(-1).x (x) s_(0) k t. */
KBimodule free_right_bimodule(const HModule& x, const ComoduleAlgebra& k);

/** Basis of {k : coact(k) = 1 (x) k} as matrix columns. */
Mat coinvariants(const ComoduleAlgebra& k);

/**
 * The twisted group algebra k_psi F inside kG: basis F, product
 * e_f e_h = psi(f,h) e_{fh}, coaction e_f |-> f (x) e_f.  hg must be
 * the group algebra of psi's ambient group.
 */
ComoduleAlgebra twisted_group_comodule_algebra(const HopfData& hg,
                                               const TwoCocycle& psi);

/** Matrices over the subgroup positions of a cocycle's domain. */
struct ProjectiveRep {
  std::vector<Mat> rho;
  int dim() const { return rho.empty() ? 0 : static_cast<int>(rho[0].rows()); }
};

/**
 * Checks rho(f) rho(h) = psi(f,h) rho(fh) with rho(1) = id (throws
 * InputError naming a witness pair on failure), then reports whether
 * the commutant of the image is one-dimensional.
 */
bool simple_check(const TwoCocycle& psi, const ProjectiveRep& v);

/**
 * K(F, psi, V) = End(V) (x)_{kF} kG inside k^G on the basis
 * {E_uv (x) s : s a coset representative}, basis index
 * pidx(pidx(u, v, dim V), s_pos, #cosets).  Product
 * (T (x) x)(U (x) y) = [x = y] TU (x) x, unit sum_s id (x) s, coaction
 * dual to right translation through the relation T (x) fs = T.f (x) s,
 * (T.f)(v) = f^-1 T(f v).  hdg must be the function algebra of psi's
 * ambient group.
 */
ComoduleAlgebra dual_group_comodule_algebra(const HopfData& hdg,
                                            const TwoCocycle& psi,
                                            const ProjectiveRep& v);

/**
 * The space Hom_K(H (x) M, N) inside H^* (x) Hom(M, N), computed as
 * all evaluation maps Z : H (x) M -> N with Z(k_(-1) h (x) k_(0) m)
 * = k Z(h (x) m).  Columns of basis are maps flattened row-major,
 * flat = r * (hdim * mdim) + pidx(h, c, mdim).
 */
struct InternalHom {
  const HopfData* hopf = nullptr;
  const ComoduleAlgebra* alg = nullptr;
  int mdim = 0;
  int ndim = 0;
  Mat basis;
};

InternalHom internal_hom(const ComoduleAlgebra& k, const KModule& m,
                         const KModule& n);

/** Between the flat column picture and the ndim x (hdim*mdim) map. */
Mat ih_unflatten(const Vec& flat, int ndim, int cols);
Vec ih_flatten(const Mat& z);

/** (Z W)(h (x) m) = Z(h_1 (x) W(h_2 (x) m)) for M = N. */
Mat ih_product(const HopfData& h, const Mat& z, const Mat& w);
/** eps (x) id. */
Mat ih_unit(const HopfData& h, int mdim);
/** (e_x . Z)(t (x) m) = Z(t e_x (x) m). */
Mat ih_act(const HopfData& h, int x, const Mat& z);
/** Membership of a map in the solution space. */
bool ih_contains(const InternalHom& ih, const Mat& z);

}  // namespace adjalg
