#pragma once

/**
 * @file cyc.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_n).
 *
 * A Cyc value is an element of Q(zeta_n) stored as phi(n) rational
 * coordinates with respect to the power basis {zeta_n^i : 0 <= i < phi(n)},
 * kept reduced modulo the n-th cyclotomic polynomial after every operation.
 * Mixed-order operands are embedded into Q(zeta_lcm) first.  Coefficients
 * are GMP rationals, so no operation ever rounds or overflows.
 */

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adjalg {

using Rat = mpq_class;

/* Error raised by malformed external input (files, CLI arguments). */
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Error raised when a mathematical validation fails (broken axiom,
   inconsistent cross-check, singular element, ...). */
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Euler phi function (n >= 1). */
int euler_phi(int n);

/** Coefficients of the n-th cyclotomic polynomial, low to high, monic. */
const std::vector<Rat>& cyclotomic_poly(int n);

class Cyc {
 public:
  /** Zero of Q = Q(zeta_1). */
  Cyc() : n_(1), c_(1, Rat(0)) {}
  Cyc(int v) : n_(1), c_(1, Rat(v)) {}
  Cyc(long v) : n_(1), c_(1, Rat(static_cast<long>(v))) {}
  Cyc(const Rat& v) : n_(1), c_(1, v) {}

  /**
   * Element of Q(zeta_n) from polynomial coefficients in zeta_n
   * (any length; reduced modulo the cyclotomic polynomial).
   */
  Cyc(int order, std::vector<Rat> poly);

  /** zeta_n^k. */
  static Cyc root_of_unity(int n, long k);

  int order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  /** True if the value lies in Q. */
  bool is_rational() const;
  /** The value as a rational; throws CheckError if not rational. */
  Rat rat_value() const;

  /** Image under the inclusion Q(zeta_n) -> Q(zeta_m); m % n == 0. */
  Cyc embedded(int m) const;

  /** Same value re-expressed in Q(zeta_d) for the smallest divisor d of
      the current order that contains it. */
  Cyc shrunk() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

  /** Multiplicative inverse; throws CheckError on zero. */
  Cyc inverse() const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /**
   * Writes the value as q * zeta_m^j with q rational if it has that shape
   * (the scan over j is deterministic, smallest exponent first).
   */
  std::optional<std::pair<Rat, long>> as_rational_multiple_of_root() const;

  /**
   * An exact square root in a possibly larger cyclotomic field.  Defined
   * for every value of the shape q * zeta_m^j with q rational; rational
   * square roots of squarefree integers are realized by quadratic Gauss
   * sums.  Throws CheckError when the value is not of that shape.
   */
  Cyc sqrt() const;

  /** Diagnostic rendering like "1/2*z8^3 - z8 + 2". */
  std::string str() const;

 private:
  int n_;
  std::vector<Rat> c_;  /* size euler_phi(n_), basis zeta_n_^i */

  static void align(Cyc& a, Cyc& b);
};

inline Cyc operator*(const Rat& a, Cyc b) { return Cyc(a) * b; }
inline Cyc operator*(long a, Cyc b) { return Cyc(a) * b; }

inline std::ostream& operator<<(std::ostream& os, const Cyc& c) {
  return os << c.str();
}

}  // namespace adjalg
