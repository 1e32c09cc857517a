#include "adjalg/comodalg.hpp"

#include <map>

namespace adjalg {

namespace {

bool vec_eq(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckError(what);
}

/* algebra axioms shared by ComoduleAlgebra and bimodule validation */
void check_algebra(const Mat& mult, const Vec& unit, int n,
                   const std::string& who) {
  require(mult.rows() == n && mult.cols() == n * n, who + ": mult shape");
  require(unit.size() == n, who + ": unit shape");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec ij = mult.col(pidx(i, j, n));
      for (int k = 0; k < n; ++k) {
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int u = 0; u < n; ++u)
          if (!ij(u).is_zero()) lhs += ij(u) * mult.col(pidx(u, k, n));
        Vec jk = mult.col(pidx(j, k, n));
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (int v = 0; v < n; ++v)
          if (!jk(v).is_zero()) rhs += jk(v) * mult.col(pidx(i, v, n));
        require(vec_eq(lhs, rhs), who + ": not associative");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    Vec lu = Vec::Constant(n, Cyc(0));
    Vec ru = Vec::Constant(n, Cyc(0));
    for (int u = 0; u < n; ++u) {
      if (unit(u).is_zero()) continue;
      lu += unit(u) * mult.col(pidx(u, i, n));
      ru += unit(u) * mult.col(pidx(i, u, n));
    }
    require(vec_eq(lu, unit_vec(n, i)), who + ": left unit law");
    require(vec_eq(ru, unit_vec(n, i)), who + ": right unit law");
  }
}

/* comodule axioms for a coaction (hd*n) x n over a Hopf algebra */
void check_comodule(const HopfData& h, const Mat& coact, int n,
                    const std::string& who) {
  const int d = h.dim;
  require(coact.rows() == d * n && coact.cols() == n, who + ": coaction shape");
  for (int x = 0; x < n; ++x) {
    Vec left = Vec::Constant(d * d * n, Cyc(0));
    Vec right = Vec::Constant(d * d * n, Cyc(0));
    Vec cu = Vec::Constant(n, Cyc(0));
    for (auto& [p, c] : sparse_col(coact, x)) {
      int a = p / n, w = p % n;
      for (auto& [q, c2] : sparse_col(h.comult, a)) {
        int a1 = q / d, a2 = q % d;
        left(pidx(pidx(a1, a2, d), w, n)) += c * c2;
      }
      for (auto& [q, c2] : sparse_col(coact, w)) {
        int b = q / n, w2 = q % n;
        right(pidx(pidx(a, b, d), w2, n)) += c * c2;
      }
      cu(w) += h.counit(0, a) * c;
    }
    for (int t = 0; t < d * d * n; ++t)
      require(left(t) == right(t), who + ": coaction not coassociative");
    require(vec_eq(cu, unit_vec(n, x)), who + ": coaction counit law");
  }
}

}  // namespace

Vec ComoduleAlgebra::product(const Vec& a, const Vec& b) const {
  Vec out = Vec::Constant(dim, Cyc(0));
  for (int i = 0; i < dim; ++i) {
    if (a(i).is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b(j).is_zero()) continue;
      Cyc c = a(i) * b(j);
      for (auto& [k, v] : sparse_col(mult, pidx(i, j, dim))) out(k) += c * v;
    }
  }
  return out;
}

void ComoduleAlgebra::validate() const {
  require(hopf != nullptr && dim > 0, "comodule algebra: empty");
  const HopfData& h = *hopf;
  const int d = h.dim, n = dim;
  check_algebra(mult, unit, n, "comodule algebra");
  check_comodule(h, coact, n, "comodule algebra");

  /* coaction is an algebra map */
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec ij = basis_product(i, j);
      Vec lhs = Vec::Constant(d * n, Cyc(0));
      for (int u = 0; u < n; ++u)
        if (!ij(u).is_zero()) lhs += ij(u) * coact.col(u);
      Vec rhs = Vec::Constant(d * n, Cyc(0));
      for (auto& [p, c] : sparse_col(coact, i)) {
        int a = p / n, k0 = p % n;
        for (auto& [q, c2] : sparse_col(coact, j)) {
          int b = q / n, k1 = q % n;
          Vec hh = h.basis_product(a, b);
          for (auto& [t, c3] : sparse_col(mult, pidx(k0, k1, n)))
            for (int w = 0; w < d; ++w)
              if (!hh(w).is_zero()) rhs(pidx(w, t, n)) += c * c2 * c3 * hh(w);
        }
      }
      for (int t = 0; t < d * n; ++t)
        require(lhs(t) == rhs(t), "comodule algebra: coaction is not an algebra map");
    }
  }
  {
    Vec lu = Vec::Constant(d * n, Cyc(0));
    for (int u = 0; u < n; ++u)
      if (!unit(u).is_zero()) lu += unit(u) * coact.col(u);
    Vec target = Vec::Constant(d * n, Cyc(0));
    for (int w = 0; w < d; ++w)
      for (int u = 0; u < n; ++u) target(pidx(w, u, n)) = h.unit(w) * unit(u);
    require(vec_eq(lu, target), "comodule algebra: coaction of the unit");
  }
}

ComoduleAlgebra comodule_algebra_from_hopf(const HopfData& h) {
  return ComoduleAlgebra{&h, h.dim, h.labels, h.mult, h.unit, h.comult};
}

ComoduleAlgebra trivial_comodule_algebra(const HopfData& h) {
  ComoduleAlgebra k;
  k.hopf = &h;
  k.dim = 1;
  k.labels = {"1"};
  k.mult = zeros(1, 1);
  k.mult(0, 0) = Cyc(1);
  k.unit = Vec::Constant(1, Cyc(1));
  k.coact = zeros(h.dim, 1);
  for (int a = 0; a < h.dim; ++a) k.coact(a, 0) = h.unit(a);
  return k;
}

bool is_kmodule(const KModule& m) {
  const ComoduleAlgebra& k = *m.alg;
  const int n = m.dim, kd = k.dim;
  if (m.act.rows() != n || m.act.cols() != kd * n) return false;
  for (int v = 0; v < n; ++v) {
    Vec uv = Vec::Constant(n, Cyc(0));
    for (int i = 0; i < kd; ++i)
      if (!k.unit(i).is_zero()) uv += k.unit(i) * m.act.col(pidx(i, v, n));
    if (!vec_eq(uv, unit_vec(n, v))) return false;
  }
  for (int i = 0; i < kd; ++i)
    for (int j = 0; j < kd; ++j) {
      Vec ij = k.basis_product(i, j);
      for (int v = 0; v < n; ++v) {
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int u = 0; u < kd; ++u)
          if (!ij(u).is_zero()) lhs += ij(u) * m.act.col(pidx(u, v, n));
        Vec jv = m.act.col(pidx(j, v, n));
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (int w = 0; w < n; ++w)
          if (!jv(w).is_zero()) rhs += jv(w) * m.act.col(pidx(i, w, n));
        if (!vec_eq(lhs, rhs)) return false;
      }
    }
  return true;
}

KModule regular_kmodule(const ComoduleAlgebra& k) {
  return KModule{&k, k.dim, k.mult};
}

KModule kmodule_on_tensor(const HModule& x, const KModule& m) {
  const ComoduleAlgebra& k = *m.alg;
  const int kd = k.dim, nx = x.dim, nm = m.dim, n = nx * nm;
  KModule out{&k, n, zeros(n, kd * n)};
  for (int kb = 0; kb < kd; ++kb) {
    SparseVec lk = sparse_col(k.coact, kb);
    for (int xb = 0; xb < nx; ++xb)
      for (int mb = 0; mb < nm; ++mb)
        for (auto& [p, c] : lk) {
          int a = p / kd, k0 = p % kd;
          Vec xv = x.act.col(pidx(a, xb, nx));
          Vec mv = m.act.col(pidx(k0, mb, nm));
          for (int u = 0; u < nx; ++u) {
            if (xv(u).is_zero()) continue;
            for (int w = 0; w < nm; ++w)
              if (!mv(w).is_zero())
                out.act(pidx(u, w, nm), pidx(kb, pidx(xb, mb, nm), n)) +=
                    c * xv(u) * mv(w);
          }
        }
  }
  return out;
}

void KBimodule::validate() const {
  require(alg != nullptr && dim >= 0, "bimodule: empty");
  const ComoduleAlgebra& k = *alg;
  const int kd = k.dim, n = dim;
  require(lact.rows() == n && lact.cols() == kd * n,
          "bimodule: left action shape");
  require(ract.rows() == n && ract.cols() == n * kd,
          "bimodule: right action shape");

  /* left module */
  for (int v = 0; v < n; ++v) {
    Vec uv = Vec::Constant(n, Cyc(0));
    for (int i = 0; i < kd; ++i)
      if (!k.unit(i).is_zero()) uv += k.unit(i) * lact.col(pidx(i, v, n));
    require(vec_eq(uv, unit_vec(n, v)), "bimodule: left unit");
  }
  for (int i = 0; i < kd; ++i)
    for (int j = 0; j < kd; ++j) {
      Vec ij = k.basis_product(i, j);
      for (int v = 0; v < n; ++v) {
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int u = 0; u < kd; ++u)
          if (!ij(u).is_zero()) lhs += ij(u) * lact.col(pidx(u, v, n));
        Vec jv = lact.col(pidx(j, v, n));
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (int w = 0; w < n; ++w)
          if (!jv(w).is_zero()) rhs += jv(w) * lact.col(pidx(i, w, n));
        require(vec_eq(lhs, rhs), "bimodule: left associativity");
      }
    }

  /* right module */
  for (int v = 0; v < n; ++v) {
    Vec uv = Vec::Constant(n, Cyc(0));
    for (int i = 0; i < kd; ++i)
      if (!k.unit(i).is_zero()) uv += k.unit(i) * ract.col(pidx(v, i, kd));
    require(vec_eq(uv, unit_vec(n, v)), "bimodule: right unit");
  }
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < kd; ++i)
      for (int j = 0; j < kd; ++j) {
        Vec vi = ract.col(pidx(v, i, kd));
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int w = 0; w < n; ++w)
          if (!vi(w).is_zero()) lhs += vi(w) * ract.col(pidx(w, j, kd));
        Vec ij = k.basis_product(i, j);
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (int u = 0; u < kd; ++u)
          if (!ij(u).is_zero()) rhs += ij(u) * ract.col(pidx(v, u, kd));
        require(vec_eq(lhs, rhs), "bimodule: right associativity");
      }

  /* the two actions commute */
  for (int i = 0; i < kd; ++i)
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < kd; ++j) {
        Vec iv = lact.col(pidx(i, v, n));
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int w = 0; w < n; ++w)
          if (!iv(w).is_zero()) lhs += iv(w) * ract.col(pidx(w, j, kd));
        Vec vj = ract.col(pidx(v, j, kd));
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (int w = 0; w < n; ++w)
          if (!vj(w).is_zero()) rhs += vj(w) * lact.col(pidx(i, w, n));
        require(vec_eq(lhs, rhs), "bimodule: actions do not commute");
      }
}

void EquivariantBimodule::validate() const {
  require(alg != nullptr && dim > 0, "equivariant bimodule: empty");
  bimodule().validate();
  const ComoduleAlgebra& k = *alg;
  const HopfData& h = *k.hopf;
  const int kd = k.dim, n = dim, d = h.dim;

  check_comodule(h, coact, n, "equivariant bimodule");

  /* coaction is a bimodule map */
  for (int i = 0; i < kd; ++i)
    for (int v = 0; v < n; ++v) {
      Vec iv = lact.col(pidx(i, v, n));
      Vec lhs = Vec::Constant(d * n, Cyc(0));
      for (int w = 0; w < n; ++w)
        if (!iv(w).is_zero()) lhs += iv(w) * coact.col(w);
      Vec rhs = Vec::Constant(d * n, Cyc(0));
      for (auto& [p, c] : sparse_col(k.coact, i)) {
        int a = p / kd, k0 = p % kd;
        for (auto& [q, c2] : sparse_col(coact, v)) {
          int b = q / n, p0 = q % n;
          Vec hh = h.basis_product(a, b);
          Vec pv = lact.col(pidx(k0, p0, n));
          for (int w = 0; w < d; ++w) {
            if (hh(w).is_zero()) continue;
            for (int t = 0; t < n; ++t)
              if (!pv(t).is_zero()) rhs(pidx(w, t, n)) += c * c2 * hh(w) * pv(t);
          }
        }
      }
      for (int t = 0; t < d * n; ++t)
        require(lhs(t) == rhs(t),
                "equivariant bimodule: coaction is not a left module map");
    }
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < kd; ++j) {
      Vec vj = ract.col(pidx(v, j, kd));
      Vec lhs = Vec::Constant(d * n, Cyc(0));
      for (int w = 0; w < n; ++w)
        if (!vj(w).is_zero()) lhs += vj(w) * coact.col(w);
      Vec rhs = Vec::Constant(d * n, Cyc(0));
      for (auto& [q, c2] : sparse_col(coact, v)) {
        int b = q / n, p0 = q % n;
        for (auto& [p, c] : sparse_col(k.coact, j)) {
          int a = p / kd, k0 = p % kd;
          Vec hh = h.basis_product(b, a);
          Vec pv = ract.col(pidx(p0, k0, kd));
          for (int w = 0; w < d; ++w) {
            if (hh(w).is_zero()) continue;
            for (int t = 0; t < n; ++t)
              if (!pv(t).is_zero()) rhs(pidx(w, t, n)) += c * c2 * hh(w) * pv(t);
          }
        }
      }
      for (int t = 0; t < d * n; ++t)
        require(lhs(t) == rhs(t),
                "equivariant bimodule: coaction is not a right module map");
    }
}

EquivariantBimodule regular_bimodule(const ComoduleAlgebra& k) {
  return EquivariantBimodule{&k, k.dim, k.mult, k.mult, k.coact};
}

KBimodule free_right_bimodule(const HModule& x, const ComoduleAlgebra& k) {
  KModule left = kmodule_on_tensor(x, regular_kmodule(k));
  const int kd = k.dim, xd = x.dim, n = xd * kd;
  Mat ract = zeros(n, n * kd);
  for (int xb = 0; xb < xd; ++xb)
    for (int kb = 0; kb < kd; ++kb)
      for (int t = 0; t < kd; ++t) {
        Vec kt = k.basis_product(kb, t);
        for (int w = 0; w < kd; ++w)
          if (!kt(w).is_zero())
            ract(pidx(xb, w, kd), pidx(pidx(xb, kb, kd), t, kd)) += kt(w);
      }
  return KBimodule{&k, n, left.act, ract};
}

Mat coinvariants(const ComoduleAlgebra& k) {
  const HopfData& h = *k.hopf;
  const int d = h.dim, n = k.dim;
  Mat a = zeros(d * n, n);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < d * n; ++t) a(t, j) = k.coact(t, j);
    for (int w = 0; w < d; ++w) a(pidx(w, j, n), j) -= h.unit(w);
  }
  return nullspace(a);
}

ComoduleAlgebra twisted_group_comodule_algebra(const HopfData& hg,
                                               const TwoCocycle& psi) {
  CocycleReport rep = psi.check();
  if (!rep.is_cocycle)
    throw InputError("twisted group algebra: not a 2-cocycle");
  if (!rep.is_normalized)
    throw InputError("twisted group algebra: cocycle is not normalized");
  const FiniteGroup& g = psi.group();
  if (hg.dim != g.order())
    throw InputError("twisted group algebra: ambient dimension mismatch");
  const std::vector<int>& f = psi.subgroup();
  const int n = static_cast<int>(f.size());

  ComoduleAlgebra k;
  k.hopf = &hg;
  k.dim = n;
  for (int i = 0; i < n; ++i) k.labels.push_back(g.label(f[i]));
  k.mult = zeros(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = g.mul(f[i], f[j]);
      k.mult(psi.pos_of(prod), pidx(i, j, n)) = psi.at_pos(i, j);
    }
  k.unit = unit_vec(n, psi.pos_of(g.identity()));
  k.coact = zeros(hg.dim * n, n);
  for (int i = 0; i < n; ++i) k.coact(pidx(f[i], i, n), i) = Cyc(1);
  return k;
}

bool simple_check(const TwoCocycle& psi, const ProjectiveRep& v) {
  const FiniteGroup& g = psi.group();
  const std::vector<int>& f = psi.subgroup();
  const int n = static_cast<int>(f.size());
  const int dv = v.dim();
  if (static_cast<int>(v.rho.size()) != n)
    throw InputError("projective representation: one matrix per subgroup element required");
  for (const Mat& m : v.rho)
    if (m.rows() != dv || m.cols() != dv)
      throw InputError("projective representation: matrices must be square of equal size");
  {
    int one = psi.pos_of(g.identity());
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dv; ++j)
        if (v.rho[one](i, j) != (i == j ? Cyc(1) : Cyc(0)))
          throw InputError("projective representation: identity must act as the identity");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs = v.rho[i] * v.rho[j];
      Mat rhs = v.rho[psi.pos_of(g.mul(f[i], f[j]))] * psi.at_pos(i, j);
      for (int r = 0; r < dv; ++r)
        for (int c = 0; c < dv; ++c)
          if (lhs(r, c) != rhs(r, c))
            throw InputError("projective representation: relation fails at (" +
                             g.label(f[i]) + ", " + g.label(f[j]) + ")");
    }

  /* commutant: X with rho(f) X = X rho(f) for all f */
  SparseReducer red(dv * dv);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < dv; ++r)
      for (int c = 0; c < dv; ++c) {
        std::map<int, Cyc> row;
        for (int t = 0; t < dv; ++t) {
          if (!v.rho[i](r, t).is_zero()) row[pidx(t, c, dv)] += v.rho[i](r, t);
          if (!v.rho[i](t, c).is_zero()) row[pidx(r, t, dv)] -= v.rho[i](t, c);
        }
        SparseReducer::SparseRow srow(row.begin(), row.end());
        red.add_row(std::move(srow));
      }
  return dv * dv - red.rank() == 1;
}

ComoduleAlgebra dual_group_comodule_algebra(const HopfData& hdg,
                                            const TwoCocycle& psi,
                                            const ProjectiveRep& v) {
  const FiniteGroup& g = psi.group();
  if (hdg.dim != g.order())
    throw InputError("dual group comodule algebra: ambient dimension mismatch");
  CocycleReport rep = psi.check();
  if (!rep.is_cocycle)
    throw InputError("dual group comodule algebra: not a 2-cocycle");
  if (!rep.is_normalized)
    throw InputError("dual group comodule algebra: cocycle is not normalized");
  const std::vector<int>& f = psi.subgroup();
  const int nf = static_cast<int>(f.size());
  const int dv = v.dim();
  if (static_cast<int>(v.rho.size()) != nf)
    throw InputError("dual group comodule algebra: one matrix per subgroup element required");
  /* relation check with witnesses */
  {
    int one = psi.pos_of(g.identity());
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dv; ++j)
        if (v.rho[one](i, j) != (i == j ? Cyc(1) : Cyc(0)))
          throw InputError("dual group comodule algebra: identity must act as the identity");
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j) {
        Mat lhs = v.rho[i] * v.rho[j];
        Mat rhs = v.rho[psi.pos_of(g.mul(f[i], f[j]))] * psi.at_pos(i, j);
        for (int r = 0; r < dv; ++r)
          for (int c = 0; c < dv; ++c)
            if (lhs(r, c) != rhs(r, c))
              throw InputError(
                  "dual group comodule algebra: representation relation fails at (" +
                  g.label(f[i]) + ", " + g.label(f[j]) + ")");
      }
  }

  CosetDecomposition cd(g, f);
  const int ns = cd.num_cosets();
  const int n = dv * dv * ns;

  /* rho(f)^-1 = psi(f, f^-1)^-1 rho(f^-1) */
  std::vector<Mat> rho_inv(nf);
  for (int i = 0; i < nf; ++i) {
    int ip = psi.pos_of(g.inv(f[i]));
    Cyc s = psi.at_pos(i, ip).inverse();
    rho_inv[i] = v.rho[ip] * s;
  }

  ComoduleAlgebra k;
  k.hopf = &hdg;
  k.dim = n;
  for (int u = 0; u < dv; ++u)
    for (int w = 0; w < dv; ++w)
      for (int s = 0; s < ns; ++s)
        k.labels.push_back("E(" + std::to_string(u) + "," + std::to_string(w) +
                           ")|" + g.label(cd.reps()[s]));

  auto bidx = [&](int u, int w, int s) { return pidx(pidx(u, w, dv), s, ns); };

  k.mult = zeros(n, n * n);
  for (int u = 0; u < dv; ++u)
    for (int w = 0; w < dv; ++w)
      for (int a = 0; a < dv; ++a)
        for (int b = 0; b < dv; ++b)
          for (int s = 0; s < ns; ++s)
            if (w == a)
              k.mult(bidx(u, b, s), pidx(bidx(u, w, s), bidx(a, b, s), n)) =
                  Cyc(1);

  k.unit = Vec::Constant(n, Cyc(0));
  for (int u = 0; u < dv; ++u)
    for (int s = 0; s < ns; ++s) k.unit(bidx(u, u, s)) = Cyc(1);

  k.coact = zeros(hdg.dim * n, n);
  for (int u = 0; u < dv; ++u)
    for (int w = 0; w < dv; ++w)
      for (int s = 0; s < ns; ++s) {
        int src = bidx(u, w, s);
        int selem = cd.reps()[s];
        for (int gg = 0; gg < g.order(); ++gg) {
          auto [fe, snew] = cd.decompose(g.mul(selem, gg));
          int fp = cd.subgroup_pos(fe);
          int sp = cd.rep_pos(snew);
          /* rho(f)^-1 E_uw rho(f) = column u of inverse (x) row w of rho */
          for (int i = 0; i < dv; ++i) {
            if (rho_inv[fp](i, u).is_zero()) continue;
            for (int j = 0; j < dv; ++j) {
              Cyc cc = rho_inv[fp](i, u) * v.rho[fp](w, j);
              if (!cc.is_zero())
                k.coact(pidx(gg, bidx(i, j, sp), n), src) += cc;
            }
          }
        }
      }
  return k;
}

InternalHom internal_hom(const ComoduleAlgebra& k, const KModule& m,
                         const KModule& n) {
  const HopfData& h = *k.hopf;
  const int d = h.dim, kd = k.dim, md = m.dim, nd = n.dim;
  const int cols = d * md;
  SparseReducer red(nd * cols);
  auto flat = [&](int r, int hh, int mc) { return r * cols + pidx(hh, mc, md); };
  for (int kb = 0; kb < kd; ++kb) {
    SparseVec lk = sparse_col(k.coact, kb);
    for (int hb = 0; hb < d; ++hb)
      for (int mb = 0; mb < md; ++mb) {
        /* one row per output coordinate */
        std::vector<std::map<int, Cyc>> rows(nd);
        for (auto& [p, c] : lk) {
          int a = p / kd, k0 = p % kd;
          for (auto& [hp, c2] : sparse_col(h.mult, pidx(a, hb, d)))
            for (auto& [mp, c3] : sparse_col(m.act, pidx(k0, mb, md))) {
              Cyc cc = c * c2 * c3;
              for (int r = 0; r < nd; ++r) rows[r][flat(r, hp, mp)] += cc;
            }
        }
        for (int r = 0; r < nd; ++r) {
          for (int rp = 0; rp < nd; ++rp) {
            const Cyc& c4 = n.act(r, pidx(kb, rp, nd));
            if (!c4.is_zero()) rows[r][flat(rp, hb, mb)] -= c4;
          }
          SparseReducer::SparseRow srow;
          for (auto& [col, val] : rows[r])
            if (!val.is_zero()) srow.emplace_back(col, val);
          red.add_row(std::move(srow));
        }
      }
  }
  InternalHom ih;
  ih.hopf = &h;
  ih.alg = &k;
  ih.mdim = md;
  ih.ndim = nd;
  ih.basis = red.nullspace_basis();
  return ih;
}

Mat ih_unflatten(const Vec& flat, int ndim, int cols) {
  Mat z = zeros(ndim, cols);
  for (int r = 0; r < ndim; ++r)
    for (int c = 0; c < cols; ++c) z(r, c) = flat(r * cols + c);
  return z;
}

Vec ih_flatten(const Mat& z) {
  Vec out = Vec::Constant(z.rows() * z.cols(), Cyc(0));
  for (int r = 0; r < z.rows(); ++r)
    for (int c = 0; c < z.cols(); ++c) out(r * z.cols() + c) = z(r, c);
  return out;
}

Mat ih_product(const HopfData& h, const Mat& z, const Mat& w) {
  const int d = h.dim;
  const int md = static_cast<int>(z.rows());
  Mat out = zeros(md, d * md);
  for (int t = 0; t < d; ++t) {
    SparseVec dt = sparse_col(h.comult, t);
    for (int mb = 0; mb < md; ++mb)
      for (auto& [p, c] : dt) {
        int h1 = p / d, h2 = p % d;
        Vec wv = w.col(pidx(h2, mb, md));
        for (int mp = 0; mp < md; ++mp)
          if (!wv(mp).is_zero())
            out.col(pidx(t, mb, md)) += c * wv(mp) * z.col(pidx(h1, mp, md));
      }
  }
  return out;
}

Mat ih_unit(const HopfData& h, int mdim) {
  Mat out = zeros(mdim, h.dim * mdim);
  for (int t = 0; t < h.dim; ++t)
    for (int m = 0; m < mdim; ++m) out(m, pidx(t, m, mdim)) = h.counit(0, t);
  return out;
}

Mat ih_act(const HopfData& h, int x, const Mat& z) {
  const int d = h.dim;
  const int md = static_cast<int>(z.rows());
  Mat out = zeros(md, d * md);
  for (int t = 0; t < d; ++t) {
    SparseVec tx = sparse_col(h.mult, pidx(t, x, d));
    for (int m = 0; m < md; ++m)
      for (auto& [y, c] : tx) out.col(pidx(t, m, md)) += c * z.col(pidx(y, m, md));
  }
  return out;
}

bool ih_contains(const InternalHom& ih, const Mat& z) {
  return coordinates(ih.basis, ih_flatten(z)).has_value();
}

}  // namespace adjalg
