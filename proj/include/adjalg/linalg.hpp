#pragma once

/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over cyclotomic scalars.
 *
 * Dense containers are Eigen matrices with Cyc entries.  Eigen's own
 * decompositions assume ordered scalars, so elimination is provided here
 * as free functions: a deterministic reduced row echelon form and the
 * nullspace / solve / rank routines derived from it.  Echelon pivoting
 * always takes the first nonzero row, so results are canonical for a
 * given input, never merely canonical up to permutation.
 */

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "adjalg/cyc.hpp"

namespace Eigen {

template <>
struct NumTraits<adjalg::Cyc> {
  using Real = adjalg::Cyc;
  using NonInteger = adjalg::Cyc;
  using Literal = adjalg::Cyc;
  using Nested = adjalg::Cyc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128
  };
  static inline Real epsilon() { return adjalg::Cyc(); }
  static inline Real dummy_precision() { return adjalg::Cyc(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace adjalg {

using Mat = Eigen::Matrix<Cyc, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Cyc, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Cyc, 1, Eigen::Dynamic>;

/** Reduced row echelon form; returns the pivot column of each pivot row. */
std::vector<int> rref_in_place(Mat& m);

int rank(const Mat& m);

/**
 * Canonical nullspace basis as matrix columns.  One column per free
 * column of the echelon form, free columns in ascending order, entry 1
 * at the free column and the negated echelon entries at pivot columns.
 */
Mat nullspace(const Mat& m);

/**
 * One exact solution of m * x = rhs (free variables set to zero),
 * or nullopt when the system is inconsistent.
 */
std::optional<Vec> solve(const Mat& m, const Vec& rhs);

/** Kronecker product, row-major convention: (i*rB + k, j*cB + l). */
Mat kron(const Mat& a, const Mat& b);

/** True if the two column spans coincide. */
bool same_span(const Mat& a, const Mat& b);

/** Exact inverse of a square matrix, or nullopt when singular. */
std::optional<Mat> inverse(const Mat& m);

/** Coordinates of v in the span of the columns of basis, if any. */
std::optional<Vec> coordinates(const Mat& basis, const Vec& v);

Mat identity(int n);
Mat zeros(int rows, int cols);
Vec unit_vec(int n, int i);

/**
 * Incremental exact row reducer for large sparse constraint systems.
 * Rows are fed one at a time as sparse (column, value) lists; the
 * reducer maintains a reduced echelon basis of the row space.  The
 * resulting rank / nullspace agree exactly with the dense routines.
 */
class SparseReducer {
 public:
  explicit SparseReducer(int cols) : cols_(cols) {}

  using SparseRow = std::vector<std::pair<int, Cyc>>;

  /** Reduce a row against the current basis and absorb the remainder. */
  void add_row(SparseRow row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /** Nullspace of the absorbed row set, canonical dense columns. */
  Mat nullspace_basis() const;

  /** Pivot columns in ascending order. */
  std::vector<int> pivot_columns() const;

  /** Reduce a dense vector modulo the absorbed row space. */
  Vec reduce_dense(Vec v) const;

 private:
  int cols_;
  std::vector<SparseRow> rows_;            /* reduced rows, sorted by pivot */
  std::vector<int> pivots_;                /* pivot column per stored row */

  void reduce(SparseRow& row) const;
};

/**
 * An ambient coordinate space modulo the row space of a reducer, with
 * the canonical echelon section: representatives are supported on the
 * free columns of the relation matrix, so project(lift(i)) is the i-th
 * unit vector and project is the identity on canonical representatives.
 */
class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(SparseReducer relations);

  int ambient() const { return red_.cols(); }
  int dim() const { return static_cast<int>(free_.size()); }

  /** Quotient coordinates of an ambient vector. */
  Vec project(const Vec& v) const;
  /** Canonical ambient representative of the i-th quotient basis vector. */
  Vec lift(int i) const;

  const std::vector<int>& free_columns() const { return free_; }

 private:
  SparseReducer red_{0};
  std::vector<int> free_;
};

}  // namespace adjalg
