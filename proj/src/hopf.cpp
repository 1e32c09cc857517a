#include "adjalg/hopf.hpp"

namespace adjalg {

SparseVec sparse_col(const Mat& m, int col) {
  SparseVec out;
  for (int r = 0; r < m.rows(); ++r)
    if (!m(r, col).is_zero()) out.emplace_back(r, m(r, col));
  return out;
}

namespace {

bool vec_eq(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool vec_is_zero(const Vec& a) {
  for (int i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) return false;
  return true;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckError(what);
}

}  // namespace

Vec HopfData::product(const Vec& a, const Vec& b) const {
  Vec out = Vec::Constant(dim, Cyc(0));
  for (int i = 0; i < dim; ++i) {
    if (a(i).is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b(j).is_zero()) continue;
      Cyc c = a(i) * b(j);
      for (int k = 0; k < dim; ++k) {
        if (!mult(k, pidx(i, j, dim)).is_zero())
          out(k) += c * mult(k, pidx(i, j, dim));
      }
    }
  }
  return out;
}

void HopfData::validate() const {
  const int d = dim;
  require(d > 0, "hopf: empty");
  require(mult.rows() == d && mult.cols() == d * d, "hopf: mult shape");
  require(unit.size() == d, "hopf: unit shape");
  require(comult.rows() == d * d && comult.cols() == d, "hopf: comult shape");
  require(counit.cols() == d, "hopf: counit shape");
  require(antipode.rows() == d && antipode.cols() == d, "hopf: antipode shape");
  require(antipode_inv.rows() == d && antipode_inv.cols() == d,
          "hopf: antipode_inv shape");

  /* associativity and unitality */
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vec ij = basis_product(i, j);
      for (int k = 0; k < d; ++k) {
        Vec lhs = Vec::Constant(d, Cyc(0));
        for (int u = 0; u < d; ++u)
          if (!ij(u).is_zero()) lhs += ij(u) * basis_product(u, k);
        Vec jk = basis_product(j, k);
        Vec rhs = Vec::Constant(d, Cyc(0));
        for (int v = 0; v < d; ++v)
          if (!jk(v).is_zero()) rhs += jk(v) * basis_product(i, v);
        require(vec_eq(lhs, rhs), "hopf: multiplication not associative");
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    require(vec_eq(product(unit, unit_vec(d, i)), unit_vec(d, i)),
            "hopf: left unit law");
    require(vec_eq(product(unit_vec(d, i), unit), unit_vec(d, i)),
            "hopf: right unit law");
  }

  /* coassociativity and counit laws */
  for (int i = 0; i < d; ++i) {
    SparseVec di = sparse_col(comult, i);
    Vec left = Vec::Constant(d * d * d, Cyc(0));
    Vec right = Vec::Constant(d * d * d, Cyc(0));
    Vec cl = Vec::Constant(d, Cyc(0));
    Vec cr = Vec::Constant(d, Cyc(0));
    for (auto& [p, c] : di) {
      int a = p / d, b = p % d;
      for (auto& [q, c2] : sparse_col(comult, a)) {
        int a1 = q / d, a2 = q % d;
        left(pidx(pidx(a1, a2, d), b, d)) += c * c2;
      }
      for (auto& [q, c2] : sparse_col(comult, b)) {
        int b1 = q / d, b2 = q % d;
        right(pidx(pidx(a, b1, d), b2, d)) += c * c2;
      }
      cl(b) += counit(0, a) * c;
      cr(a) += counit(0, b) * c;
    }
    for (int t = 0; t < d * d * d; ++t)
      require(left(t) == right(t), "hopf: comultiplication not coassociative");
    require(vec_eq(cl, unit_vec(d, i)) && vec_eq(cr, unit_vec(d, i)),
            "hopf: counit law");
  }

  /* bialgebra compatibility */
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vec ij = basis_product(i, j);
      Vec lhs = Vec::Constant(d * d, Cyc(0));
      for (int u = 0; u < d; ++u)
        if (!ij(u).is_zero()) lhs += ij(u) * comult.col(u);
      Vec rhs = Vec::Constant(d * d, Cyc(0));
      for (auto& [p, c] : sparse_col(comult, i)) {
        int a = p / d, b = p % d;
        for (auto& [q, c2] : sparse_col(comult, j)) {
          int x = q / d, y = q % d;
          Vec ax = basis_product(a, x);
          Vec by = basis_product(b, y);
          Cyc cc = c * c2;
          for (int u = 0; u < d; ++u) {
            if (ax(u).is_zero()) continue;
            for (int v = 0; v < d; ++v)
              if (!by(v).is_zero()) rhs(pidx(u, v, d)) += cc * ax(u) * by(v);
          }
        }
      }
      for (int t = 0; t < d * d; ++t)
        require(lhs(t) == rhs(t), "hopf: comultiplication is not an algebra map");
      require(counit_of(ij) == counit(0, i) * counit(0, j),
              "hopf: counit is not an algebra map");
    }
  }
  {
    Vec du = Vec::Constant(d * d, Cyc(0));
    for (int u = 0; u < d; ++u)
      if (!unit(u).is_zero()) du += unit(u) * comult.col(u);
    Vec uu = Vec::Constant(d * d, Cyc(0));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) uu(pidx(a, b, d)) = unit(a) * unit(b);
    for (int t = 0; t < d * d; ++t)
      require(du(t) == uu(t), "hopf: comultiplication of the unit");
    require(counit_of(unit) == Cyc(1), "hopf: counit of the unit");
  }

  /* antipode axiom and declared inverse */
  for (int i = 0; i < d; ++i) {
    Vec lhs = Vec::Constant(d, Cyc(0));
    Vec rhs = Vec::Constant(d, Cyc(0));
    for (auto& [p, c] : sparse_col(comult, i)) {
      int a = p / d, b = p % d;
      Vec sa = antipode.col(a);
      for (int u = 0; u < d; ++u)
        if (!sa(u).is_zero()) lhs += c * sa(u) * basis_product(u, b);
      Vec sb = antipode.col(b);
      for (int v = 0; v < d; ++v)
        if (!sb(v).is_zero()) rhs += c * sb(v) * basis_product(a, v);
    }
    Vec target = unit * counit(0, i);
    require(vec_eq(lhs, target), "hopf: antipode axiom (left)");
    require(vec_eq(rhs, target), "hopf: antipode axiom (right)");
  }
  Mat ss = antipode * antipode_inv;
  Mat ss2 = antipode_inv * antipode;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      require(ss(i, j) == (i == j ? Cyc(1) : Cyc(0)), "hopf: antipode inverse");
      require(ss2(i, j) == (i == j ? Cyc(1) : Cyc(0)), "hopf: antipode inverse");
    }
}

HopfData group_hopf(const FiniteGroup& g) {
  int d = g.order();
  HopfData h;
  h.dim = d;
  h.labels = g.labels();
  h.mult = zeros(d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h.mult(g.mul(i, j), pidx(i, j, d)) = Cyc(1);
  h.unit = unit_vec(d, g.identity());
  h.comult = zeros(d * d, d);
  for (int i = 0; i < d; ++i) h.comult(pidx(i, i, d), i) = Cyc(1);
  h.counit = RowVec::Constant(1, d, Cyc(1));
  h.antipode = zeros(d, d);
  for (int i = 0; i < d; ++i) h.antipode(g.inv(i), i) = Cyc(1);
  h.antipode_inv = h.antipode;
  return h;
}

HopfData dual_group_hopf(const FiniteGroup& g) {
  int d = g.order();
  HopfData h;
  h.dim = d;
  for (int i = 0; i < d; ++i) h.labels.push_back("d(" + g.label(i) + ")");
  h.mult = zeros(d, d * d);
  for (int i = 0; i < d; ++i) h.mult(i, pidx(i, i, d)) = Cyc(1);
  h.unit = Vec::Constant(d, Cyc(1));
  h.comult = zeros(d * d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) h.comult(pidx(a, b, d), g.mul(a, b)) += Cyc(1);
  h.counit = RowVec::Constant(1, d, Cyc(0));
  h.counit(0, g.identity()) = Cyc(1);
  h.antipode = zeros(d, d);
  for (int i = 0; i < d; ++i) h.antipode(g.inv(i), i) = Cyc(1);
  h.antipode_inv = h.antipode;
  return h;
}

HopfData dual_hopf(const HopfData& h) {
  HopfData out;
  out.dim = h.dim;
  for (int i = 0; i < h.dim; ++i) out.labels.push_back("f(" + h.labels[i] + ")");
  out.mult = h.comult.transpose();
  out.unit = h.counit.transpose();
  out.comult = h.mult.transpose();
  out.counit = h.unit.transpose();
  out.antipode = h.antipode.transpose();
  out.antipode_inv = h.antipode_inv.transpose();
  return out;
}

bool is_module(const HModule& m) {
  const HopfData& h = *m.hopf;
  const int d = h.dim, n = m.dim;
  if (m.act.rows() != n || m.act.cols() != d * n) return false;
  for (int v = 0; v < n; ++v) {
    Vec uv = Vec::Constant(n, Cyc(0));
    for (int i = 0; i < d; ++i)
      if (!h.unit(i).is_zero()) uv += h.unit(i) * m.act.col(pidx(i, v, n));
    if (!vec_eq(uv, unit_vec(n, v))) return false;
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vec ij = h.basis_product(i, j);
      for (int v = 0; v < n; ++v) {
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int u = 0; u < d; ++u)
          if (!ij(u).is_zero()) lhs += ij(u) * m.act.col(pidx(u, v, n));
        Vec jv = m.act.col(pidx(j, v, n));
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (int w = 0; w < n; ++w)
          if (!jv(w).is_zero()) rhs += jv(w) * m.act.col(pidx(i, w, n));
        if (!vec_eq(lhs, rhs)) return false;
      }
    }
  }
  return true;
}

YdReport yd_check(const YDModule& v) {
  const HopfData& h = *v.hopf;
  const int d = h.dim, n = v.dim;
  YdReport rep;
  rep.module_ok = is_module(v.module());
  if (v.coact.rows() != d * n || v.coact.cols() != n) {
    rep.comodule_ok = false;
    return rep;
  }
  /* comodule axioms */
  for (int x = 0; x < n; ++x) {
    SparseVec lx = sparse_col(v.coact, x);
    Vec left = Vec::Constant(d * d * n, Cyc(0));
    Vec right = Vec::Constant(d * d * n, Cyc(0));
    Vec cu = Vec::Constant(n, Cyc(0));
    for (auto& [p, c] : lx) {
      int a = p / n, w = p % n;
      for (auto& [q, c2] : sparse_col(h.comult, a)) {
        int a1 = q / d, a2 = q % d;
        left(pidx(pidx(a1, a2, d), w, n)) += c * c2;
      }
      for (auto& [q, c2] : sparse_col(v.coact, w)) {
        int b = q / n, w2 = q % n;
        right(pidx(pidx(a, b, d), w2, n)) += c * c2;
      }
      cu(w) += h.counit(0, a) * c;
    }
    if (!vec_eq(cu, unit_vec(n, x))) rep.comodule_ok = false;
    for (int t = 0; t < d * d * n && rep.comodule_ok; ++t)
      if (left(t) != right(t)) rep.comodule_ok = false;
    if (!rep.comodule_ok) break;
  }
  /* compatibility: lambda(h.x) = h1 x_(-1) S(h3) (x) h2.x_(0) */
  for (int i = 0; i < d; ++i) {
    for (int x = 0; x < n; ++x) {
      Vec hx = v.act.col(pidx(i, x, n));
      Vec lhs = Vec::Constant(d * n, Cyc(0));
      for (int w = 0; w < n; ++w)
        if (!hx(w).is_zero()) lhs += hx(w) * v.coact.col(w);
      Vec rhs = Vec::Constant(d * n, Cyc(0));
      for (auto& [p, c] : sparse_col(h.comult, i)) {
        int h1 = p / d, h23 = p % d;
        for (auto& [q, c2] : sparse_col(h.comult, h23)) {
          int h2 = q / d, h3 = q % d;
          for (auto& [r, c3] : sparse_col(v.coact, x)) {
            int xm = r / n, x0 = r % n;
            /* h1 * x_(-1) * S(h3) */
            Vec left_h = h.basis_product(h1, xm);
            Vec s3 = h.antipode.col(h3);
            Vec hpart = Vec::Constant(d, Cyc(0));
            for (int u = 0; u < d; ++u) {
              if (left_h(u).is_zero()) continue;
              for (int w = 0; w < d; ++w)
                if (!s3(w).is_zero()) hpart += left_h(u) * s3(w) * h.basis_product(u, w);
            }
            Vec vpart = v.act.col(pidx(h2, x0, n));
            Cyc cc = c * c2 * c3;
            for (int u = 0; u < d; ++u) {
              if (hpart(u).is_zero()) continue;
              for (int w = 0; w < n; ++w)
                if (!vpart(w).is_zero()) rhs(pidx(u, w, n)) += cc * hpart(u) * vpart(w);
            }
          }
        }
      }
      bool same = true;
      for (int t = 0; t < d * n; ++t)
        if (lhs(t) != rhs(t)) { same = false; break; }
      if (!same) {
        rep.compat_ok = false;
        rep.compat_failures.emplace_back(i, x);
      }
    }
  }
  return rep;
}

HModule regular_module(const HopfData& h) { return HModule{&h, h.dim, h.mult}; }

HModule trivial_module(const HopfData& h) {
  HModule m{&h, 1, zeros(1, h.dim)};
  for (int i = 0; i < h.dim; ++i) m.act(0, i) = h.counit(0, i);
  return m;
}

HModule module_tensor(const HModule& a, const HModule& b) {
  const HopfData& h = *a.hopf;
  const int d = h.dim, na = a.dim, nb = b.dim, n = na * nb;
  HModule m{&h, n, zeros(n, d * n)};
  for (int i = 0; i < d; ++i) {
    SparseVec di = sparse_col(h.comult, i);
    for (int x = 0; x < na; ++x) {
      for (int y = 0; y < nb; ++y) {
        for (auto& [p, c] : di) {
          int h1 = p / d, h2 = p % d;
          Vec ax = a.act.col(pidx(h1, x, na));
          Vec by = b.act.col(pidx(h2, y, nb));
          for (int u = 0; u < na; ++u) {
            if (ax(u).is_zero()) continue;
            for (int w = 0; w < nb; ++w)
              if (!by(w).is_zero())
                m.act(pidx(u, w, nb), pidx(i, pidx(x, y, nb), n)) += c * ax(u) * by(w);
          }
        }
      }
    }
  }
  return m;
}

Mat module_hom(const HModule& a, const HModule& b) {
  const HopfData& h = *a.hopf;
  const int d = h.dim, na = a.dim, nb = b.dim;
  SparseReducer red(nb * na);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < na; ++j) {
      SparseVec aj = sparse_col(a.act, pidx(i, j, na));
      for (int r = 0; r < nb; ++r) {
        SparseReducer::SparseRow row;
        for (auto& [u, c] : aj) row.emplace_back(pidx(r, u, na), c);
        for (int rp = 0; rp < nb; ++rp) {
          const Cyc& c2 = b.act(r, pidx(i, rp, nb));
          if (!c2.is_zero()) row.emplace_back(pidx(rp, j, na), -c2);
        }
        red.add_row(std::move(row));
      }
    }
  }
  return red.nullspace_basis();
}

YDModule yd_tensor(const YDModule& a, const YDModule& b) {
  const HopfData& h = *a.hopf;
  const int d = h.dim, na = a.dim, nb = b.dim, n = na * nb;
  YDModule out{&h, n, module_tensor(a.module(), b.module()).act, zeros(d * n, n)};
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      for (auto& [p, c] : sparse_col(a.coact, x)) {
        int h1 = p / na, x0 = p % na;
        for (auto& [q, c2] : sparse_col(b.coact, y)) {
          int h2 = q / nb, y0 = q % nb;
          Vec prod = h.basis_product(h1, h2);
          for (int w = 0; w < d; ++w)
            if (!prod(w).is_zero())
              out.coact(pidx(w, pidx(x0, y0, nb), n), pidx(x, y, nb)) +=
                  c * c2 * prod(w);
        }
      }
    }
  }
  return out;
}

Vec YDAlgebra::product(const Vec& a, const Vec& b) const {
  const int n = yd.dim;
  Vec out = Vec::Constant(n, Cyc(0));
  for (int i = 0; i < n; ++i) {
    if (a(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b(j).is_zero()) continue;
      Cyc c = a(i) * b(j);
      for (auto& [k, v] : sparse_col(mult, pidx(i, j, n))) out(k) += c * v;
    }
  }
  return out;
}

void check_yd_algebra(const YDAlgebra& alg) {
  const HopfData& h = *alg.yd.hopf;
  const int d = h.dim, n = alg.yd.dim;
  require(alg.mult.rows() == n && alg.mult.cols() == n * n, "yd algebra: mult shape");
  require(alg.unit.size() == n, "yd algebra: unit shape");
  require(yd_check(alg.yd).ok(), "yd algebra: carrier fails yd axioms");

  for (int i = 0; i < n; ++i) {
    require(vec_eq(alg.product(alg.unit, unit_vec(n, i)), unit_vec(n, i)),
            "yd algebra: left unit");
    require(vec_eq(alg.product(unit_vec(n, i), alg.unit), unit_vec(n, i)),
            "yd algebra: right unit");
    for (int j = 0; j < n; ++j) {
      Vec ij = alg.mult.col(pidx(i, j, n));
      for (int k = 0; k < n; ++k) {
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int u = 0; u < n; ++u)
          if (!ij(u).is_zero()) lhs += ij(u) * alg.mult.col(pidx(u, k, n));
        Vec jk = alg.mult.col(pidx(j, k, n));
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (int v = 0; v < n; ++v)
          if (!jk(v).is_zero()) rhs += jk(v) * alg.mult.col(pidx(i, v, n));
        require(vec_eq(lhs, rhs), "yd algebra: not associative");
      }
    }
  }

  /* module algebra: h.(ab) = (h1.a)(h2.b), h.1 = eps(h) 1 */
  for (int i = 0; i < d; ++i) {
    {
      Vec h1 = Vec::Constant(n, Cyc(0));
      for (int u = 0; u < n; ++u)
        if (!alg.unit(u).is_zero()) h1 += alg.unit(u) * alg.yd.act.col(pidx(i, u, n));
      require(vec_eq(h1, Vec(alg.unit * h.counit(0, i))),
              "yd algebra: action on the unit");
    }
    SparseVec di = sparse_col(h.comult, i);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        Vec ab = alg.mult.col(pidx(a, b, n));
        Vec lhs = Vec::Constant(n, Cyc(0));
        for (int u = 0; u < n; ++u)
          if (!ab(u).is_zero()) lhs += ab(u) * alg.yd.act.col(pidx(i, u, n));
        Vec rhs = Vec::Constant(n, Cyc(0));
        for (auto& [p, c] : di) {
          int x = p / d, y = p % d;
          Vec xa = alg.yd.act.col(pidx(x, a, n));
          Vec yb = alg.yd.act.col(pidx(y, b, n));
          rhs += c * alg.product(xa, yb);
        }
        require(vec_eq(lhs, rhs), "yd algebra: module algebra law");
      }
    }
  }

  /* comodule algebra: lambda(ab) = a_(-1) b_(-1) (x) a_(0) b_(0) */
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Vec ab = alg.mult.col(pidx(a, b, n));
      Vec lhs = Vec::Constant(d * n, Cyc(0));
      for (int u = 0; u < n; ++u)
        if (!ab(u).is_zero()) lhs += ab(u) * alg.yd.coact.col(u);
      Vec rhs = Vec::Constant(d * n, Cyc(0));
      for (auto& [p, c] : sparse_col(alg.yd.coact, a)) {
        int ha = p / n, a0 = p % n;
        for (auto& [q, c2] : sparse_col(alg.yd.coact, b)) {
          int hb = q / n, b0 = q % n;
          Vec hh = h.basis_product(ha, hb);
          for (auto& [k, c3] : sparse_col(alg.mult, pidx(a0, b0, n))) {
            for (int w = 0; w < d; ++w)
              if (!hh(w).is_zero()) rhs(pidx(w, k, n)) += c * c2 * c3 * hh(w);
          }
        }
      }
      bool same = true;
      for (int t = 0; t < d * n; ++t)
        if (lhs(t) != rhs(t)) { same = false; break; }
      require(same, "yd algebra: comodule algebra law");
    }
  }
  {
    Vec lu = Vec::Constant(d * n, Cyc(0));
    for (int u = 0; u < n; ++u)
      if (!alg.unit(u).is_zero()) lu += alg.unit(u) * alg.yd.coact.col(u);
    Vec target = Vec::Constant(d * n, Cyc(0));
    for (int w = 0; w < d; ++w)
      for (int u = 0; u < n; ++u) target(pidx(w, u, n)) = h.unit(w) * alg.unit(u);
    require(vec_eq(lu, target), "yd algebra: coaction of the unit");
  }
}

YDAlgebra adjoint_yd_on_H(const HopfData& h) {
  const int d = h.dim;
  YDAlgebra alg;
  alg.yd.hopf = &h;
  alg.yd.dim = d;
  alg.yd.act = zeros(d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vec out = Vec::Constant(d, Cyc(0));
      for (auto& [p, c] : sparse_col(h.comult, i)) {
        int a = p / d, b = p % d;
        Vec aj = h.basis_product(a, j);
        Vec sb = h.antipode.col(b);
        for (int y = 0; y < d; ++y) {
          if (aj(y).is_zero()) continue;
          for (int z = 0; z < d; ++z)
            if (!sb(z).is_zero()) out += c * aj(y) * sb(z) * h.basis_product(y, z);
        }
      }
      alg.yd.act.col(pidx(i, j, d)) = out;
    }
  }
  alg.yd.coact = h.comult;
  alg.mult = h.mult;
  alg.unit = h.unit;
  return alg;
}

YDAlgebra adjoint_yd_on_Hdual(const HopfData& h) {
  const int d = h.dim;
  const Mat conv = h.comult.transpose();  /* convolution product on H^* */
  YDAlgebra alg;
  alg.yd.hopf = &h;
  alg.yd.dim = d;
  alg.yd.act = zeros(d, d * d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) {
        const Cyc& c = h.mult(j, pidx(i, k, d));
        if (!c.is_zero()) alg.yd.act(i, pidx(k, j, d)) += c;
      }
  alg.yd.coact = zeros(d * d, d);
  for (int m = 0; m < d; ++m) {
    for (int k = 0; k < d; ++k) {
      Vec accum = Vec::Constant(d, Cyc(0));
      for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) {
          const Cyc& c0 = h.mult(k, pidx(u, v, d));
          if (c0.is_zero()) continue;
          /* S^*(f_u) * f_m * f_v by convolution */
          Vec t1 = Vec::Constant(d, Cyc(0));
          for (int x = 0; x < d; ++x) {
            const Cyc& sx = h.antipode(u, x);
            if (!sx.is_zero()) t1 += sx * conv.col(pidx(x, m, d));
          }
          Vec t2 = Vec::Constant(d, Cyc(0));
          for (int y = 0; y < d; ++y)
            if (!t1(y).is_zero()) t2 += t1(y) * conv.col(pidx(y, v, d));
          accum += c0 * t2;
        }
      }
      for (int i = 0; i < d; ++i)
        if (!accum(i).is_zero()) alg.yd.coact(pidx(k, i, d), m) = accum(i);
    }
  }
  alg.mult = conv;
  alg.unit = h.counit.transpose();
  return alg;
}

Mat center_halfbraiding(const YDModule& v, const HModule& x) {
  const int nv = v.dim, nx = x.dim;
  Mat sigma = zeros(nx * nv, nv * nx);
  for (int a = 0; a < nv; ++a) {
    SparseVec la = sparse_col(v.coact, a);
    for (int b = 0; b < nx; ++b) {
      for (auto& [p, c] : la) {
        int hm = p / nv, a0 = p % nv;
        for (auto& [q, c2] : sparse_col(x.act, pidx(hm, b, nx)))
          sigma(pidx(q, a0, nv), pidx(a, b, nx)) += c * c2;
      }
    }
  }
  return sigma;
}

}  // namespace adjalg
