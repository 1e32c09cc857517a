#include "adjalg/cyc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace adjalg {

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

/* polynomial helpers; coefficient vectors are low-to-high */

void poly_trim(std::vector<Rat>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/* exact division, remainder must vanish */
std::vector<Rat> poly_div(std::vector<Rat> num, const std::vector<Rat>& den) {
  std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
  while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
    size_t shift = num.size() - den.size();
    Rat c = num.back() / den.back();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
    if (num.size() < den.size()) break;
  }
  return q;
}

}  // namespace

const std::vector<Rat>& cyclotomic_poly(int n) {
  static std::map<int, std::vector<Rat>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Rat> p(n + 1, Rat(0));
  p[0] = -1;
  p[n] = 1;  /* x^n - 1 */
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div(std::move(p), cyclotomic_poly(d));
  }
  poly_trim(p);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyc::Cyc(int order, std::vector<Rat> poly) : n_(order) {
  if (order < 1) throw InputError("cyclotomic order must be >= 1");
  const auto& phi_n = cyclotomic_poly(n_);
  size_t deg = phi_n.size() - 1;  /* == euler_phi(n_) */
  /* reduce modulo the cyclotomic polynomial */
  while (poly.size() > deg) {
    Rat c = poly.back();
    size_t shift = poly.size() - 1 - deg;
    if (c != 0) {
      for (size_t i = 0; i < deg; ++i) poly[shift + i] -= c * phi_n[i];
    }
    poly.pop_back();
  }
  poly.resize(deg, Rat(0));
  c_ = std::move(poly);
}

Cyc Cyc::root_of_unity(int n, long k) {
  if (n < 1) throw InputError("root order must be >= 1");
  long e = ((k % n) + n) % n;
  std::vector<Rat> p(static_cast<size_t>(e) + 1, Rat(0));
  p[static_cast<size_t>(e)] = 1;
  return Cyc(n, std::move(p));
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::rat_value() const {
  if (!is_rational()) throw CheckError("value is not rational: " + str());
  return c_[0];
}

Cyc Cyc::embedded(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw CheckError("no inclusion of cyclotomic orders");
  int step = m / n_;
  std::vector<Rat> p(static_cast<size_t>(step) * (c_.size() - 1) + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return Cyc(m, std::move(p));
}

Cyc Cyc::shrunk() const {
  if (n_ == 1) return *this;
  if (is_rational()) return Cyc(c_[0]);
  for (int d = 2; d < n_; ++d) {
    if (n_ % d != 0) continue;
    int phd = euler_phi(d);
    /* coordinates of zeta_d^j inside Q(zeta_n), solved greedily:
       value must be a linear combination; embedding images are just
       reduced powers, so run a tiny elimination by hand */
    std::vector<std::vector<Rat>> cols;
    for (int j = 0; j < phd; ++j)
      cols.push_back(Cyc::root_of_unity(d, j).embedded(n_).c_);
    size_t rows = c_.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(phd + 1, Rat(0)));
    for (size_t r = 0; r < rows; ++r) {
      for (int j = 0; j < phd; ++j) m[r][j] = cols[j][r];
      m[r][phd] = c_[r];
    }
    /* gaussian elimination on the small augmented system */
    size_t row = 0;
    std::vector<int> piv_col(rows, -1);
    for (int col = 0; col < phd && row < rows; ++col) {
      size_t sel = row;
      while (sel < rows && m[sel][col] == 0) ++sel;
      if (sel == rows) continue;
      std::swap(m[sel], m[row]);
      Rat inv = Rat(1) / m[row][col];
      for (int j = col; j <= phd; ++j) m[row][j] *= inv;
      for (size_t r = 0; r < rows; ++r) {
        if (r != row && m[r][col] != 0) {
          Rat f = m[r][col];
          for (int j = col; j <= phd; ++j) m[r][j] -= f * m[row][j];
        }
      }
      piv_col[row] = col;
      ++row;
    }
    bool consistent = true;
    for (size_t r = row; r < rows; ++r)
      if (m[r][phd] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rat> sol(phd, Rat(0));
    for (size_t r = 0; r < row; ++r) sol[piv_col[r]] = m[r][phd];
    return Cyc(d, std::move(sol));
  }
  return *this;
}

void Cyc::align(Cyc& a, Cyc& b) {
  if (a.n_ == b.n_) return;
  int m = std::lcm(a.n_, b.n_);
  a = a.embedded(m);
  b = b.embedded(m);
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (n_ == o.n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyc b = o;
  align(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (n_ == o.n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyc b = o;
  align(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (is_zero() && n_ == 1) return *this;
  if (o.is_zero() && o.n_ == 1) { *this = Cyc(); return *this; }
  Cyc b = o;
  align(*this, b);
  std::vector<Rat> prod(c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += c_[i] * b.c_[j];
    }
  }
  *this = Cyc(n_, std::move(prod));
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw CheckError("inverse of zero");
  /* extended euclid of the value against the cyclotomic polynomial */
  std::vector<Rat> r0 = cyclotomic_poly(n_), r1 = c_;
  poly_trim(r1);
  std::vector<Rat> t0{Rat(0)}, t1{Rat(1)};
  while (!(r1.size() == 1 && r1[0] == 0)) {
    /* quotient and remainder of r0 by r1 */
    std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
    std::vector<Rat> rem = r0;
    while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
      size_t shift = rem.size() - r1.size();
      Rat c = rem.back() / r1.back();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      poly_trim(rem);
      if (rem.size() < r1.size()) break;
    }
    /* t2 = t0 - q * t1 */
    std::vector<Rat> qt(q.size() + t1.size() - 1, Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
    }
    std::vector<Rat> t2(std::max(t0.size(), qt.size()), Rat(0));
    for (size_t i = 0; i < t0.size(); ++i) t2[i] += t0[i];
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    poly_trim(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  /* r0 is now the gcd, a nonzero constant since the modulus is irreducible */
  if (r0.size() != 1 || r0[0] == 0) throw CheckError("inverse: gcd not constant");
  Rat scale = Rat(1) / r0[0];
  for (auto& x : t0) x *= scale;
  return Cyc(n_, std::move(t0));
}

Cyc& Cyc::operator/=(const Cyc& o) {
  if (o.is_zero()) throw CheckError("division by zero");
  Cyc b = o;
  Cyc a = *this;
  align(a, b);
  *this = a * b.inverse();
  return *this;
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  Cyc a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

std::optional<std::pair<Rat, long>> Cyc::as_rational_multiple_of_root() const {
  if (is_zero()) return std::make_pair(Rat(0), 0L);
  for (long j = 0; j < n_; ++j) {
    Cyc ratio = *this * root_of_unity(n_, -j);
    if (ratio.is_rational()) return std::make_pair(ratio.rat_value(), j);
  }
  return std::nullopt;
}

namespace {

/* square root of a squarefree positive integer, exact, via Gauss sums */
Cyc sqrt_squarefree(long t) {
  Cyc result(1);
  if (t % 2 == 0) {
    /* sqrt(2) = zeta_8 + zeta_8^-1 */
    result *= Cyc::root_of_unity(8, 1) + Cyc::root_of_unity(8, -1);
    t /= 2;
  }
  for (long p = 3; p * p <= t || (t > 1 && p <= t); p += 2) {
    if (t % p != 0) continue;
    t /= p;
    /* quadratic Gauss sum: sum of legendre(a,p) zeta_p^a equals
       sqrt(p) for p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4 */
    Cyc g;
    for (long a = 1; a < p; ++a) {
      long ls = 1, aa = a % p, e = (p - 1) / 2, base = aa, acc = 1;
      while (e) {  /* legendre symbol by euler's criterion */
        if (e & 1) acc = (acc * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      ls = (acc == 1) ? 1 : -1;
      g += Cyc(ls) * Cyc::root_of_unity(static_cast<int>(p), a);
    }
    if (p % 4 == 3) g = g * Cyc::root_of_unity(4, -1);
    result *= g;
  }
  return result;
}

}  // namespace

Cyc Cyc::sqrt() const {
  auto form = as_rational_multiple_of_root();
  if (!form) throw CheckError("square root only defined for rational multiples of roots of unity: " + str());
  Rat q = form->first;
  long j = form->second;
  if (q == 0) return Cyc();
  int m = n_;
  if (q < 0) {  /* fold the sign into the root of unity */
    q = -q;
    j = 2 * j + m;
    m = 2 * m;
  }
  /* sqrt(q) with q = num/den > 0: sqrt(num*den)/den */
  mpz_class num = q.get_num() * q.get_den();
  mpz_class den = q.get_den();
  mpz_class s = 1, rem = num;
  long t = 1;
  for (long p = 2; mpz_class(p) * p <= rem; ++p) {
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p * p)) {
      rem /= p * p;
      s *= p;
    }
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      rem /= p;
      t *= p;
    }
  }
  if (rem > 1) {
    if (!rem.fits_slong_p()) throw CheckError("square root: radicand too large");
    t *= rem.get_si();
  }
  Cyc root_part = Cyc::root_of_unity(2 * m, j);  /* square is zeta_m^j */
  Cyc rational_part = Cyc(Rat(s) / Rat(den));
  Cyc surd = (t == 1) ? Cyc(1) : sqrt_squarefree(t);
  return rational_part * surd * root_part;
}

std::string Cyc::str() const {
  Cyc v = shrunk();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.c_.size(); ++i) {
    if (v.c_[i] == 0) continue;
    Rat a = v.c_[i];
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0 && i > 0) {
      os << "-";
      a = -a;
    }
    bool unit_coeff = (a == 1 && i > 0);
    if (!unit_coeff) os << a.get_str();
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << "z" << v.n_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace adjalg
