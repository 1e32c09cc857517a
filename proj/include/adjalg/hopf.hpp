#pragma once

/**
 * @file hopf.hpp
 * @brief Hopf algebras as exact structure tensors, modules over them,
 *        and Yetter-Drinfeld structure.
 *
 * Every structure map is a dense matrix over Cyc with the row-major
 * tensor index convention: e_i (x) e_j inside H (x) H sits at i*dim + j.
 * mult has shape d x d^2 (column j*d+k is e_j e_k), comult has shape
 * d^2 x d, counit 1 x d, antipode d x d.  Axioms are checked
 * exhaustively on basis elements, exactly.
 */

#include <functional>
#include <string>
#include <vector>

#include "adjalg/group.hpp"
#include "adjalg/linalg.hpp"

namespace adjalg {

/** Row-major pair index. */
inline int pidx(int i, int j, int nj) { return i * nj + j; }

using SparseVec = std::vector<std::pair<int, Cyc>>;

/** Nonzero entries of one column. */
SparseVec sparse_col(const Mat& m, int col);

struct HopfData {
  int dim = 0;
  std::vector<std::string> labels;
  Mat mult;          /* d x d^2 */
  Vec unit;          /* d */
  Mat comult;        /* d^2 x d */
  RowVec counit;     /* 1 x d */
  Mat antipode;      /* d x d, column i = S(e_i) */
  Mat antipode_inv;  /* d x d */

  /** Throws CheckError naming the first broken axiom. */
  void validate() const;

  Vec product(const Vec& a, const Vec& b) const;
  /** Product of two basis elements. */
  Vec basis_product(int i, int j) const { return mult.col(pidx(i, j, dim)); }
  /** Counit of a vector. */
  Cyc counit_of(const Vec& v) const { return (counit * v)(0); }
};

/** Group algebra kG: group-like basis, S(g) = g^-1. */
HopfData group_hopf(const FiniteGroup& g);

/** Function algebra k^G on delta functions. */
HopfData dual_group_hopf(const FiniteGroup& g);

/** The dual Hopf algebra on the dual basis (finite dimensional). */
HopfData dual_hopf(const HopfData& h);

struct HModule {
  const HopfData* hopf = nullptr;
  int dim = 0;
  Mat act;  /* dim x (d*dim), column h*dim+v = e_h . v_v */
};

struct YDModule {
  const HopfData* hopf = nullptr;
  int dim = 0;
  Mat act;    /* dim x (d*dim) */
  Mat coact;  /* (d*dim) x dim */

  HModule module() const { return HModule{hopf, dim, act}; }
};

struct YdReport {
  bool module_ok = true;
  bool comodule_ok = true;
  bool compat_ok = true;
  std::vector<std::pair<int, int>> compat_failures;  /* (h, v) basis pairs */
  bool ok() const { return module_ok && comodule_ok && compat_ok; }
};

/** Exhaustive module axioms; throws on shape mismatch only. */
bool is_module(const HModule& m);
/** Module / comodule / compatibility report for a YD candidate. */
YdReport yd_check(const YDModule& v);

HModule regular_module(const HopfData& h);
HModule trivial_module(const HopfData& h);
/** Diagonal action h . (a (x) b) = h1.a (x) h2.b. */
HModule module_tensor(const HModule& a, const HModule& b);
/** Solution space of T A(h (x) -) = B(h (x) T -) over all h. */
Mat module_hom(const HModule& a, const HModule& b);

/** YD tensor product: diagonal action, multiplicative coaction. */
YDModule yd_tensor(const YDModule& a, const YDModule& b);

/** An algebra carried by a YD module. */
struct YDAlgebra {
  YDModule yd;
  Mat mult;  /* dim x dim^2 */
  Vec unit;  /* dim */

  Vec product(const Vec& a, const Vec& b) const;
};

/**
 * Asserts: associativity, unit, H-module-algebra and H-comodule-algebra
 * laws, plus yd_check on the carrier.  Throws CheckError.
 */
void check_yd_algebra(const YDAlgebra& a);

/** H with the adjoint action h.x = h1 x S(h2) and coaction Delta. */
YDAlgebra adjoint_yd_on_H(const HopfData& h);

/**
 * H^* with <h.f, x> = <f, x h>, the coaction determined by
 * <phi, f_(-1)> f_(0) = S(phi_1) f phi_2, and convolution product.
 */
YDAlgebra adjoint_yd_on_Hdual(const HopfData& h);

/**
 * sigma_X : V (x) X -> X (x) V, v (x) x |-> v_(-1).x (x) v_(0),
 * the half-braiding a YD module induces on any module X.
 */
Mat center_halfbraiding(const YDModule& v, const HModule& x);

}  // namespace adjalg
