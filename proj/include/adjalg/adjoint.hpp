#pragma once

/**
 * @file adjoint.hpp
 * @brief The adjoint algebra S^K(H,P): generic solver, Yetter-Drinfeld
 *        structure, algebra structure, dinatural projections, the
 *        adjunction between H-modules and K-bimodules, half-braidings,
 *        and the transport of YD modules to the bimodule center.
 *
 * An element alpha : H (x) K -> P is determined by its restriction
 * beta(h) = alpha(h (x) 1), a (dim H) x (dim P) matrix, through
 * alpha(h (x) k) = beta(h).k.  Solution bases store such matrices
 * flattened row-major, flat = pidx(h, p, dim P).  The defining
 * condition is beta(k_(-1) h).k_(0) = k.beta(h) for all k in K.
 */

#include <utility>
#include <vector>

#include "adjalg/comodalg.hpp"

namespace adjalg {

struct AdjointAlgebra {
  const HopfData* hopf = nullptr;
  const ComoduleAlgebra* alg = nullptr;
  KBimodule target;    /* P as a bimodule */
  Mat target_coact;    /* (hdim*pdim) x pdim; 0x0 when P carries none */
  bool target_is_alg = false;
  Mat basis;           /* (hdim*pdim) x n */
  Mat act;             /* n x (hdim*n) */
  Mat coact;           /* (hdim*n) x n */
  Mat product;         /* n x n^2, filled only when P = K */
  Vec unit;            /* n, filled only when P = K */

  int dim() const { return static_cast<int>(basis.cols()); }
  /** beta(e_h) of the j-th basis element, as a vector in P. */
  Vec beta(int j, int h) const;
  /** The j-th basis element as a (dim H) x (dim P) matrix. */
  Mat beta_matrix(int j) const;
  /** beta(e_h) of the element with the given basis coefficients. */
  Vec eval(const Vec& coeffs, int h) const;

  YDModule yd() const { return YDModule{hopf, dim(), act, coact}; }
  /** Carrier plus product and unit; requires P = K. */
  YDAlgebra yd_algebra() const;
};

/** S^K(H,K): the target defaults to K acting on itself. */
AdjointAlgebra adjoint_solve(const HopfData& h, const ComoduleAlgebra& k);
AdjointAlgebra adjoint_solve(const HopfData& h, const ComoduleAlgebra& k,
                             const EquivariantBimodule& p);
/** Bimodule-only target: the coaction slot stays empty. */
AdjointAlgebra adjoint_solve(const HopfData& h, const ComoduleAlgebra& k,
                             const KBimodule& p);

/**
 * Fills act with (h.beta)(x) = beta(x h) and, when the target carries a
 * coaction, fills coact and verifies the result passes yd_check.  A
 * computed tensor falling outside the solved span is a hard error.
 */
void adjoint_yd_structure(AdjointAlgebra& a);

/**
 * Fills product ((b b')(h) = b(h_1) b'(h_2) in K) and unit (eps (x) 1),
 * verifying associativity and unitality.  Requires P = K.
 */
void adjoint_product(AdjointAlgebra& a);

/** P (x)_K M: quotient of P (x) M by p.k (x) m - p (x) k.m. */
QuotientSpace relative_tensor(const KBimodule& p, const KModule& m);

/** The map P (x)_K M -> P (x)_K N induced by a left module map f. */
Mat induced_tensor_map(int pdim, const QuotientSpace& pm,
                       const QuotientSpace& pn, const Mat& f);

/**
 * One matrix per basis element: the map H (x) M -> P (x)_K M sending
 * h (x) m to the class of beta(h) (x) m, in the coordinates of pm.
 */
std::vector<Mat> dinatural_projection(const AdjointAlgebra& a,
                                      const KModule& m,
                                      const QuotientSpace& pm);

/** K / K e_j as a left module, with the quotient space realizing it. */
std::pair<KModule, QuotientSpace> principal_quotient(
    const ComoduleAlgebra& k, int j);

/**
 * The two sides of the Hom adjunction between H-modules and
 * K-bimodules for a fixed H-module X and bimodule target P, together
 * with the mutually inverse coordinate maps, unit and counit.
 */
struct AdjunctionData {
  AdjointAlgebra s_p;    /* S^K(H,P), with its H-action filled */
  AdjointAlgebra s_xk;   /* S^K(H, X (x) K) */
  Mat hom_h;    /* basis of H-maps X -> S^K(H,P), flattened n x xd */
  Mat hom_kk;   /* basis of bimodule maps X (x) K -> P, pd x (xd*kd) */
  Mat phi;      /* hom_h coordinates -> hom_kk coordinates */
  Mat psi;      /* inverse direction */
  Mat eta;      /* s_xk.dim() x xd, x |-> (h (x) k |-> h.x (x) k) */
  Mat epsilon;  /* pd x (s_p.dim()*kd), alpha (x) k |-> alpha(1 (x) k) */
};

/**
 * Computes both Hom spaces exactly, realizes the adjunction maps, and
 * verifies they are mutually inverse and satisfy the triangle identity
 * on X (x) K.  Throws CheckError on any failure.
 */
AdjunctionData adjunction_maps(const HopfData& h, const ComoduleAlgebra& k,
                               const HModule& x, const KBimodule& p);

/** sigma: P (x)_K (X (x) K) -> X (x) P, p (x) x (x) k |-> p_(-1).x (x) p_(0) k. */
struct HalfBraiding {
  QuotientSpace domain;
  Mat matrix;  /* (xdim*pdim) x domain.dim(), verified invertible */
};

HalfBraiding half_braiding_sigma(const EquivariantBimodule& p,
                                 const HModule& x);

/**
 * The module-functor structure of S^K(H,-) in an H-module argument X:
 * coordinate realizations of X (x) S^K(H,P) -> S^K(H, X (x) P) given by
 * (x (x) a)(h (x) k) = h_1.x (x) a(h_2 (x) k), and of
 * S^K(H,P) (x) X -> S^K(H, P (x)_K (X (x) K)) given by
 * (a (x) x)(h (x) k) = a(h_1 (x) 1) (x) h_2.x (x) k.
 */
struct XiMaps {
  AdjointAlgebra s_xp;    /* target S^K(H, X (x) P) */
  Mat xil_inv;            /* s_xp.dim() x (xd * a.dim()) */
  QuotientSpace pxk;      /* P (x)_K (X (x) K) */
  AdjointAlgebra s_pxk;   /* target S^K(H, P (x)_K (X (x) K)) */
  Mat xir_inv;            /* s_pxk.dim() x (a.dim() * xd) */
};

XiMaps xi_maps(const AdjointAlgebra& a, const HModule& x);

/**
 * Exhaustive check of the identity tying the coaction of S^K(H,P) to
 * the coaction of P: for all basis elements a, all h in H, k in K,
 *   h_1 a_(-1) (x) a_(0)(h_2 (x) k) = a(h_1 (x) 1)_(-1) h_2 (x) a(h_1 (x) 1)_(0).k
 * inside H (x) P.  Throws CheckError naming witnesses.
 */
void check_coaction_identity(const AdjointAlgebra& a);

/**
 * V (x) K for a YD module V: k.(v (x) t).s = k_(-1).v (x) k_(0) t s
 * with coaction v (x) t |-> v_(-1) t_(-1) (x) v_(0) (x) t_(0).
 */
EquivariantBimodule center_transport(const YDModule& v,
                                     const ComoduleAlgebra& k);

/**
 * The half-braiding of V (x) K at a bimodule P:
 * (V (x) K) (x)_K P -> P (x)_K (V (x) K),
 * v (x) t (x) p |-> (t.p)_(0) (x) S^{-1}((t.p)_(-1)).v (x) 1.
 * Verified invertible and K-bimodule linear; throws CheckError.
 */
struct ThetaBraiding {
  QuotientSpace domain;    /* (V (x) K) (x)_K P */
  QuotientSpace codomain;  /* P (x)_K (V (x) K) */
  Mat matrix;              /* codomain.dim() x domain.dim() */
};

ThetaBraiding center_transport_braiding(const YDModule& v,
                                        const ComoduleAlgebra& k,
                                        const EquivariantBimodule& p);

}  // namespace adjalg
