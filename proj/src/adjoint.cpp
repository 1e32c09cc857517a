/**
 * @file adjoint.cpp
 * @brief Solver and structure maps for the adjoint algebra S^K(H,P).
 */

#include "adjalg/adjoint.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace adjalg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckError(what);
}

void add(std::map<int, Cyc>& row, int col, const Cyc& val) {
  if (val.is_zero()) return;
  auto [it, fresh] = row.emplace(col, val);
  if (!fresh) {
    it->second += val;
    if (it->second.is_zero()) row.erase(it);
  }
}

SparseReducer::SparseRow to_row(const std::map<int, Cyc>& row) {
  return SparseReducer::SparseRow(row.begin(), row.end());
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

/** project . op . lift on every quotient basis vector. */
Mat induced_on_quotient(const QuotientSpace& q,
                        const std::function<void(const Vec&, Vec&)>& op) {
  Mat out = zeros(q.dim(), q.dim());
  for (int b = 0; b < q.dim(); ++b) {
    Vec img = Vec::Constant(q.ambient(), Cyc(0));
    op(q.lift(b), img);
    out.col(b) = q.project(img);
  }
  return out;
}

AdjointAlgebra solve_impl(const HopfData& h, const ComoduleAlgebra& k,
                          KBimodule p, Mat pcoact, bool is_alg) {
  if (k.hopf != &h)
    throw InputError("adjoint: comodule algebra lives over a different H");
  if (p.alg != &k)
    throw InputError("adjoint: target lives over a different algebra");
  const int d = h.dim, kd = k.dim, pd = p.dim;

  AdjointAlgebra out;
  out.hopf = &h;
  out.alg = &k;
  out.target = std::move(p);
  out.target_coact = std::move(pcoact);
  out.target_is_alg = is_alg;

  SparseReducer red(d * pd);
  std::vector<std::map<int, Cyc>> rows;
  for (int t = 0; t < kd; ++t)
    for (int hb = 0; hb < d; ++hb) {
      rows.assign(pd, {});
      for (const auto& [fl, c1] : sparse_col(k.coact, t)) {
        int a = fl / kd, t0 = fl % kd;
        for (const auto& [h2, c2] : sparse_col(h.mult, pidx(a, hb, d)))
          for (int q = 0; q < pd; ++q)
            for (const auto& [r, c3] :
                 sparse_col(out.target.ract, pidx(q, t0, kd)))
              add(rows[r], pidx(h2, q, pd), c1 * c2 * c3);
      }
      for (int q = 0; q < pd; ++q)
        for (const auto& [r, c] : sparse_col(out.target.lact, pidx(t, q, pd)))
          add(rows[r], pidx(hb, q, pd), -c);
      for (const auto& row : rows) red.add_row(to_row(row));
    }
  out.basis = red.nullspace_basis();
  return out;
}

}  // namespace

Vec AdjointAlgebra::beta(int j, int h) const {
  const int pd = target.dim;
  Vec out = Vec::Constant(pd, Cyc(0));
  for (int p = 0; p < pd; ++p) out(p) = basis(pidx(h, p, pd), j);
  return out;
}

Mat AdjointAlgebra::beta_matrix(int j) const {
  const int d = hopf->dim, pd = target.dim;
  Mat out = zeros(d, pd);
  for (int h = 0; h < d; ++h)
    for (int p = 0; p < pd; ++p) out(h, p) = basis(pidx(h, p, pd), j);
  return out;
}

Vec AdjointAlgebra::eval(const Vec& coeffs, int h) const {
  Vec out = Vec::Constant(target.dim, Cyc(0));
  for (int j = 0; j < dim(); ++j)
    if (!coeffs(j).is_zero()) out += coeffs(j) * beta(j, h);
  return out;
}

YDAlgebra AdjointAlgebra::yd_algebra() const {
  if (!target_is_alg)
    throw InputError("adjoint: the algebra structure needs target K");
  return YDAlgebra{yd(), product, unit};
}

AdjointAlgebra adjoint_solve(const HopfData& h, const ComoduleAlgebra& k) {
  return solve_impl(h, k, KBimodule{&k, k.dim, k.mult, k.mult}, k.coact, true);
}

AdjointAlgebra adjoint_solve(const HopfData& h, const ComoduleAlgebra& k,
                             const EquivariantBimodule& p) {
  return solve_impl(h, k, p.bimodule(), p.coact, false);
}

AdjointAlgebra adjoint_solve(const HopfData& h, const ComoduleAlgebra& k,
                             const KBimodule& p) {
  return solve_impl(h, k, p, Mat(), false);
}

void adjoint_yd_structure(AdjointAlgebra& a) {
  const HopfData& h = *a.hopf;
  const int d = h.dim, pd = a.target.dim, n = a.dim();

  a.act = zeros(n, d * n);
  for (int x = 0; x < d; ++x)
    for (int j = 0; j < n; ++j) {
      Vec img = Vec::Constant(d * pd, Cyc(0));
      for (int hb = 0; hb < d; ++hb)
        for (const auto& [y, c] : sparse_col(h.mult, pidx(hb, x, d)))
          for (int q = 0; q < pd; ++q)
            img(pidx(hb, q, pd)) += c * a.basis(pidx(y, q, pd), j);
      auto coords = coordinates(a.basis, img);
      require(coords.has_value(), "adjoint: action leaves the solved span");
      a.act.col(pidx(x, j, n)) = *coords;
    }

  if (a.target_coact.rows() == 0) return;

  a.coact = zeros(d * n, n);
  for (int j = 0; j < n; ++j) {
    std::map<int, std::map<int, Cyc>> parts; /* H component -> beta image */
    for (int hb = 0; hb < d; ++hb)
      for (const auto& [p1, c1] : sparse_col(h.comult, hb)) {
        int h1 = p1 / d, h23 = p1 % d;
        for (const auto& [p2, c2] : sparse_col(h.comult, h23)) {
          int h2 = p2 / d, h3 = p2 % d;
          for (int q = 0; q < pd; ++q) {
            Cyc bq = a.basis(pidx(h2, q, pd), j);
            if (bq.is_zero()) continue;
            for (const auto& [fl, c3] : sparse_col(a.target_coact, q)) {
              int ah = fl / pd, q0 = fl % pd;
              for (const auto& [s, c4] : sparse_col(h.antipode, h1))
                for (const auto& [y, c5] : sparse_col(h.mult, pidx(s, ah, d)))
                  for (const auto& [g, c6] :
                       sparse_col(h.mult, pidx(y, h3, d)))
                    add(parts[g], pidx(hb, q0, pd),
                        c1 * c2 * bq * c3 * c4 * c5 * c6);
            }
          }
        }
      }
    for (const auto& [g, entries] : parts) {
      if (entries.empty()) continue;
      Vec img = Vec::Constant(d * pd, Cyc(0));
      for (const auto& [fl, c] : entries) img(fl) = c;
      auto coords = coordinates(a.basis, img);
      require(coords.has_value(),
              "adjoint: coaction leaves the solved span at element " +
                  std::to_string(j) + ", component " + h.labels[g]);
      for (int i = 0; i < n; ++i) a.coact(pidx(g, i, n), j) = (*coords)(i);
    }
  }

  require(yd_check(a.yd()).ok(), "adjoint: computed structure fails yd_check");
}

void adjoint_product(AdjointAlgebra& a) {
  if (!a.target_is_alg)
    throw InputError("adjoint: the algebra structure needs target K");
  const HopfData& h = *a.hopf;
  const ComoduleAlgebra& k = *a.alg;
  const int d = h.dim, pd = k.dim, n = a.dim();

  a.product = zeros(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec img = Vec::Constant(d * pd, Cyc(0));
      for (int hb = 0; hb < d; ++hb)
        for (const auto& [p1, c] : sparse_col(h.comult, hb)) {
          int h1 = p1 / d, h2 = p1 % d;
          Vec v = k.product(a.beta(i, h1), a.beta(j, h2));
          for (int q = 0; q < pd; ++q) img(pidx(hb, q, pd)) += c * v(q);
        }
      auto coords = coordinates(a.basis, img);
      require(coords.has_value(), "adjoint: product leaves the solved span");
      a.product.col(pidx(i, j, n)) = *coords;
    }

  Vec uimg = Vec::Constant(d * pd, Cyc(0));
  for (int hb = 0; hb < d; ++hb)
    for (int q = 0; q < pd; ++q) uimg(pidx(hb, q, pd)) = h.counit(hb) * k.unit(q);
  auto ucoords = coordinates(a.basis, uimg);
  require(ucoords.has_value(), "adjoint: unit leaves the solved span");
  a.unit = *ucoords;

  auto cprod = [&](const Vec& x, const Vec& y) {
    Vec out = Vec::Constant(n, Cyc(0));
    for (int i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!y(j).is_zero()) out += x(i) * y(j) * a.product.col(pidx(i, j, n));
    }
    return out;
  };
  for (int i = 0; i < n; ++i) {
    require(vec_eq(cprod(a.unit, unit_vec(n, i)), unit_vec(n, i)),
            "adjoint: unit is not left neutral");
    require(vec_eq(cprod(unit_vec(n, i), a.unit), unit_vec(n, i)),
            "adjoint: unit is not right neutral");
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        require(vec_eq(cprod(a.product.col(pidx(i, j, n)), unit_vec(n, l)),
                       cprod(unit_vec(n, i), a.product.col(pidx(j, l, n)))),
                "adjoint: product is not associative");
  }
}

QuotientSpace relative_tensor(const KBimodule& p, const KModule& m) {
  if (p.alg != m.alg)
    throw InputError("relative tensor: factors over different algebras");
  const ComoduleAlgebra& k = *p.alg;
  const int kd = k.dim, pd = p.dim, md = m.dim;

  SparseReducer red(pd * md);
  std::map<int, Cyc> row;
  for (int pb = 0; pb < pd; ++pb)
    for (int t = 0; t < kd; ++t)
      for (int mb = 0; mb < md; ++mb) {
        row.clear();
        for (const auto& [q, c] : sparse_col(p.ract, pidx(pb, t, kd)))
          add(row, pidx(q, mb, md), c);
        for (const auto& [w, c] : sparse_col(m.act, pidx(t, mb, md)))
          add(row, pidx(pb, w, md), -c);
        red.add_row(to_row(row));
      }
  return QuotientSpace(std::move(red));
}

Mat induced_tensor_map(int pdim, const QuotientSpace& pm,
                       const QuotientSpace& pn, const Mat& f) {
  const int md = pdim == 0 ? 0 : pm.ambient() / pdim;
  const int nd = pdim == 0 ? 0 : pn.ambient() / pdim;
  Mat out = zeros(pn.dim(), pm.dim());
  for (int b = 0; b < pm.dim(); ++b) {
    Vec v = pm.lift(b);
    Vec img = Vec::Constant(pn.ambient(), Cyc(0));
    for (int pb = 0; pb < pdim; ++pb)
      for (int mb = 0; mb < md; ++mb) {
        Cyc c = v(pidx(pb, mb, md));
        if (c.is_zero()) continue;
        for (int w = 0; w < nd; ++w)
          if (!f(w, mb).is_zero()) img(pidx(pb, w, nd)) += c * f(w, mb);
      }
    out.col(b) = pn.project(img);
  }
  return out;
}

std::vector<Mat> dinatural_projection(const AdjointAlgebra& a,
                                      const KModule& m,
                                      const QuotientSpace& pm) {
  const int d = a.hopf->dim, pd = a.target.dim, md = m.dim;
  std::vector<Mat> out;
  out.reserve(a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    Mat pi = zeros(pm.dim(), d * md);
    for (int hb = 0; hb < d; ++hb) {
      Vec bh = a.beta(j, hb);
      for (int mb = 0; mb < md; ++mb) {
        Vec amb = Vec::Constant(pd * md, Cyc(0));
        for (int q = 0; q < pd; ++q)
          if (!bh(q).is_zero()) amb(pidx(q, mb, md)) = bh(q);
        pi.col(pidx(hb, mb, md)) = pm.project(amb);
      }
    }
    out.push_back(std::move(pi));
  }
  return out;
}

std::pair<KModule, QuotientSpace> principal_quotient(const ComoduleAlgebra& k,
                                                     int j) {
  const int kd = k.dim;
  SparseReducer red(kd);
  for (int i = 0; i < kd; ++i) {
    Vec v = k.basis_product(i, j);
    SparseReducer::SparseRow row;
    for (int w = 0; w < kd; ++w)
      if (!v(w).is_zero()) row.push_back({w, v(w)});
    red.add_row(std::move(row));
  }
  QuotientSpace q(std::move(red));
  KModule mod{&k, q.dim(), zeros(q.dim(), kd * q.dim())};
  for (int t = 0; t < kd; ++t)
    for (int b = 0; b < q.dim(); ++b) {
      Vec l = q.lift(b);
      Vec img = Vec::Constant(kd, Cyc(0));
      for (int w = 0; w < kd; ++w)
        if (!l(w).is_zero()) img += l(w) * k.basis_product(t, w);
      mod.act.col(pidx(t, b, q.dim())) = q.project(img);
    }
  return {std::move(mod), std::move(q)};
}

AdjunctionData adjunction_maps(const HopfData& h, const ComoduleAlgebra& k,
                               const HModule& x, const KBimodule& p) {
  const int d = h.dim, kd = k.dim, xd = x.dim, pd = p.dim;
  AdjunctionData out;
  out.s_p = adjoint_solve(h, k, p);
  adjoint_yd_structure(out.s_p);
  const int n = out.s_p.dim();

  HModule smod = out.s_p.yd().module();
  out.hom_h = module_hom(x, smod);

  auto flat_u = [&](int r, int xb, int t) {
    return r * (xd * kd) + pidx(xb, t, kd);
  };
  SparseReducer red(pd * xd * kd);
  std::vector<std::map<int, Cyc>> rows;
  for (int s = 0; s < kd; ++s)
    for (int xb = 0; xb < xd; ++xb)
      for (int t = 0; t < kd; ++t) {
        /* U(s.(x (x) t)) = s.U(x (x) t) */
        rows.assign(pd, {});
        for (const auto& [fl, c1] : sparse_col(k.coact, s)) {
          int a = fl / kd, s0 = fl % kd;
          for (const auto& [w, c2] : sparse_col(x.act, pidx(a, xb, xd)))
            for (const auto& [t2, c3] : sparse_col(k.mult, pidx(s0, t, kd)))
              for (int r = 0; r < pd; ++r)
                add(rows[r], flat_u(r, w, t2), c1 * c2 * c3);
        }
        for (int q = 0; q < pd; ++q)
          for (const auto& [r, c] : sparse_col(p.lact, pidx(s, q, pd)))
            add(rows[r], flat_u(q, xb, t), -c);
        for (const auto& row : rows) red.add_row(to_row(row));
        /* U((x (x) t).s) = U(x (x) t).s */
        rows.assign(pd, {});
        for (const auto& [t2, c] : sparse_col(k.mult, pidx(t, s, kd)))
          for (int r = 0; r < pd; ++r) add(rows[r], flat_u(r, xb, t2), c);
        for (int q = 0; q < pd; ++q)
          for (const auto& [r, c] : sparse_col(p.ract, pidx(q, s, kd)))
            add(rows[r], flat_u(q, xb, t), -c);
        for (const auto& row : rows) red.add_row(to_row(row));
      }
  out.hom_kk = red.nullspace_basis();

  const int nh = static_cast<int>(out.hom_h.cols());
  const int nk = static_cast<int>(out.hom_kk.cols());
  require(nh == nk, "adjunction: Hom space dimensions differ");

  out.phi = zeros(nk, nh);
  for (int c = 0; c < nh; ++c) {
    Vec uflat = Vec::Constant(pd * xd * kd, Cyc(0));
    for (int xb = 0; xb < xd; ++xb) {
      Vec coords = Vec::Constant(n, Cyc(0));
      for (int r = 0; r < n; ++r) coords(r) = out.hom_h(pidx(r, xb, xd), c);
      Vec v = Vec::Constant(pd, Cyc(0));
      for (int u = 0; u < d; ++u)
        if (!h.unit(u).is_zero()) v += h.unit(u) * out.s_p.eval(coords, u);
      for (int t = 0; t < kd; ++t)
        for (int q = 0; q < pd; ++q) {
          if (v(q).is_zero()) continue;
          for (const auto& [r, cc] : sparse_col(p.ract, pidx(q, t, kd)))
            uflat(flat_u(r, xb, t)) += v(q) * cc;
        }
    }
    auto coords = coordinates(out.hom_kk, uflat);
    require(coords.has_value(), "adjunction: phi image is not a bimodule map");
    out.phi.col(c) = *coords;
  }

  out.psi = zeros(nh, nk);
  for (int c = 0; c < nk; ++c) {
    Vec tflat = Vec::Constant(n * xd, Cyc(0));
    for (int xb = 0; xb < xd; ++xb) {
      Vec img = Vec::Constant(d * pd, Cyc(0));
      for (int hb = 0; hb < d; ++hb)
        for (const auto& [w, c2] : sparse_col(x.act, pidx(hb, xb, xd)))
          for (int t = 0; t < kd; ++t) {
            if (k.unit(t).is_zero()) continue;
            for (int r = 0; r < pd; ++r) {
              Cyc uval = out.hom_kk(flat_u(r, w, t), c);
              if (!uval.is_zero())
                img(pidx(hb, r, pd)) += c2 * k.unit(t) * uval;
            }
          }
      auto bc = coordinates(out.s_p.basis, img);
      require(bc.has_value(), "adjunction: psi image leaves the solved span");
      for (int r = 0; r < n; ++r) tflat(pidx(r, xb, xd)) = (*bc)(r);
    }
    auto tc = coordinates(out.hom_h, tflat);
    require(tc.has_value(), "adjunction: psi image is not an H-map");
    out.psi.col(c) = *tc;
  }

  Mat pp = out.phi * out.psi;
  Mat qq = out.psi * out.phi;
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) {
      require(pp(i, j) == (i == j ? Cyc(1) : Cyc(0)),
              "adjunction: phi . psi is not the identity");
      require(qq(i, j) == (i == j ? Cyc(1) : Cyc(0)),
              "adjunction: psi . phi is not the identity");
    }

  out.s_xk = adjoint_solve(h, k, free_right_bimodule(x, k));
  const int n2 = out.s_xk.dim();
  out.eta = zeros(n2, xd);
  for (int xb = 0; xb < xd; ++xb) {
    Vec img = Vec::Constant(d * xd * kd, Cyc(0));
    for (int hb = 0; hb < d; ++hb)
      for (const auto& [w, c] : sparse_col(x.act, pidx(hb, xb, xd)))
        for (int t = 0; t < kd; ++t)
          if (!k.unit(t).is_zero())
            img(pidx(hb, pidx(w, t, kd), xd * kd)) += c * k.unit(t);
    auto coords = coordinates(out.s_xk.basis, img);
    require(coords.has_value(),
            "adjunction: unit image leaves the solved span");
    out.eta.col(xb) = *coords;
  }

  out.epsilon = zeros(pd, n * kd);
  for (int j = 0; j < n; ++j) {
    Vec v = Vec::Constant(pd, Cyc(0));
    for (int u = 0; u < d; ++u)
      if (!h.unit(u).is_zero()) v += h.unit(u) * out.s_p.beta(j, u);
    for (int t = 0; t < kd; ++t)
      for (int q = 0; q < pd; ++q) {
        if (v(q).is_zero()) continue;
        for (const auto& [r, cc] : sparse_col(p.ract, pidx(q, t, kd)))
          out.epsilon(r, pidx(j, t, kd)) += v(q) * cc;
      }
  }

  /* triangle: the counit of X (x) K after eta (x) id is the identity */
  const KBimodule& fx = out.s_xk.target;
  Mat eps2 = zeros(xd * kd, n2 * kd);
  for (int j2 = 0; j2 < n2; ++j2) {
    Vec v = Vec::Constant(xd * kd, Cyc(0));
    for (int u = 0; u < d; ++u)
      if (!h.unit(u).is_zero()) v += h.unit(u) * out.s_xk.beta(j2, u);
    for (int t = 0; t < kd; ++t)
      for (int q = 0; q < xd * kd; ++q) {
        if (v(q).is_zero()) continue;
        for (const auto& [r, cc] : sparse_col(fx.ract, pidx(q, t, kd)))
          eps2(r, pidx(j2, t, kd)) += v(q) * cc;
      }
  }
  for (int xb = 0; xb < xd; ++xb)
    for (int t = 0; t < kd; ++t) {
      Vec got = Vec::Constant(xd * kd, Cyc(0));
      for (int j2 = 0; j2 < n2; ++j2)
        if (!out.eta(j2, xb).is_zero())
          got += out.eta(j2, xb) * eps2.col(pidx(j2, t, kd));
      require(vec_eq(got, unit_vec(xd * kd, pidx(xb, t, kd))),
              "adjunction: triangle identity fails");
    }

  return out;
}

HalfBraiding half_braiding_sigma(const EquivariantBimodule& p,
                                 const HModule& x) {
  const ComoduleAlgebra& k = *p.alg;
  const int kd = k.dim, pd = p.dim, xd = x.dim;
  KModule xk = kmodule_on_tensor(x, regular_kmodule(k));
  QuotientSpace dom = relative_tensor(p.bimodule(), xk);
  require(dom.dim() == xd * pd, "half-braiding: unexpected domain dimension");

  Mat mat = zeros(xd * pd, dom.dim());
  for (int b = 0; b < dom.dim(); ++b) {
    Vec l = dom.lift(b);
    for (int pb = 0; pb < pd; ++pb)
      for (int xb = 0; xb < xd; ++xb)
        for (int kb = 0; kb < kd; ++kb) {
          Cyc c0 = l(pidx(pb, pidx(xb, kb, kd), xd * kd));
          if (c0.is_zero()) continue;
          for (const auto& [fl, c1] : sparse_col(p.coact, pb)) {
            int a = fl / pd, p0 = fl % pd;
            for (const auto& [w, c2] : sparse_col(x.act, pidx(a, xb, xd)))
              for (const auto& [r, c3] : sparse_col(p.ract, pidx(p0, kb, kd)))
                mat(pidx(w, r, pd), b) += c0 * c1 * c2 * c3;
          }
        }
  }
  require(rank(mat) == xd * pd, "half-braiding: matrix is singular");
  return HalfBraiding{std::move(dom), std::move(mat)};
}

XiMaps xi_maps(const AdjointAlgebra& a, const HModule& x) {
  const HopfData& h = *a.hopf;
  const ComoduleAlgebra& k = *a.alg;
  const int d = h.dim, kd = k.dim, xd = x.dim, pd = a.target.dim;
  const int n = a.dim();
  XiMaps out;

  /* X (x) P with t.(x (x) p).s = t_(-1).x (x) t_(0) p s */
  KBimodule xp{&k, xd * pd, zeros(xd * pd, kd * xd * pd),
               zeros(xd * pd, xd * pd * kd)};
  for (int t = 0; t < kd; ++t)
    for (int xb = 0; xb < xd; ++xb)
      for (int pb = 0; pb < pd; ++pb) {
        int col = pidx(t, pidx(xb, pb, pd), xd * pd);
        for (const auto& [fl, c1] : sparse_col(k.coact, t)) {
          int ah = fl / kd, t0 = fl % kd;
          for (const auto& [w, c2] : sparse_col(x.act, pidx(ah, xb, xd)))
            for (const auto& [r, c3] :
                 sparse_col(a.target.lact, pidx(t0, pb, pd)))
              xp.lact(pidx(w, r, pd), col) += c1 * c2 * c3;
        }
      }
  for (int xb = 0; xb < xd; ++xb)
    for (int pb = 0; pb < pd; ++pb)
      for (int s = 0; s < kd; ++s) {
        int col = pidx(pidx(xb, pb, pd), s, kd);
        for (const auto& [r, c] : sparse_col(a.target.ract, pidx(pb, s, kd)))
          xp.ract(pidx(xb, r, pd), col) += c;
      }
  out.s_xp = adjoint_solve(h, k, xp);

  out.xil_inv = zeros(out.s_xp.dim(), xd * n);
  for (int xb = 0; xb < xd; ++xb)
    for (int j = 0; j < n; ++j) {
      Vec img = Vec::Constant(d * xd * pd, Cyc(0));
      for (int hb = 0; hb < d; ++hb)
        for (const auto& [p1, c1] : sparse_col(h.comult, hb)) {
          int h1 = p1 / d, h2 = p1 % d;
          for (const auto& [w, c2] : sparse_col(x.act, pidx(h1, xb, xd)))
            for (int q = 0; q < pd; ++q) {
              Cyc bq = a.basis(pidx(h2, q, pd), j);
              if (!bq.is_zero())
                img(pidx(hb, pidx(w, q, pd), xd * pd)) += c1 * c2 * bq;
            }
        }
      auto coords = coordinates(out.s_xp.basis, img);
      require(coords.has_value(), "xi: left map leaves the solved span");
      out.xil_inv.col(pidx(xb, j, n)) = *coords;
    }

  /* P (x)_K (X (x) K) as a bimodule on quotient coordinates */
  KModule xk = kmodule_on_tensor(x, regular_kmodule(k));
  out.pxk = relative_tensor(a.target, xk);
  const int qd = out.pxk.dim();
  KBimodule q{&k, qd, zeros(qd, kd * qd), zeros(qd, qd * kd)};
  for (int t = 0; t < kd; ++t)
    for (int b = 0; b < qd; ++b) {
      Vec l = out.pxk.lift(b);
      Vec img = Vec::Constant(pd * xd * kd, Cyc(0));
      for (int pb = 0; pb < pd; ++pb)
        for (int rest = 0; rest < xd * kd; ++rest) {
          Cyc c0 = l(pidx(pb, rest, xd * kd));
          if (c0.is_zero()) continue;
          for (const auto& [r, c] : sparse_col(a.target.lact, pidx(t, pb, pd)))
            img(pidx(r, rest, xd * kd)) += c0 * c;
        }
      q.lact.col(pidx(t, b, qd)) = out.pxk.project(img);
    }
  for (int b = 0; b < qd; ++b)
    for (int s = 0; s < kd; ++s) {
      Vec l = out.pxk.lift(b);
      Vec img = Vec::Constant(pd * xd * kd, Cyc(0));
      for (int pb = 0; pb < pd; ++pb)
        for (int xb = 0; xb < xd; ++xb)
          for (int kb = 0; kb < kd; ++kb) {
            Cyc c0 = l(pidx(pb, pidx(xb, kb, kd), xd * kd));
            if (c0.is_zero()) continue;
            for (const auto& [t2, c] : sparse_col(k.mult, pidx(kb, s, kd)))
              img(pidx(pb, pidx(xb, t2, kd), xd * kd)) += c0 * c;
          }
      q.ract.col(pidx(b, s, kd)) = out.pxk.project(img);
    }
  out.s_pxk = adjoint_solve(h, k, q);

  out.xir_inv = zeros(out.s_pxk.dim(), n * xd);
  for (int j = 0; j < n; ++j)
    for (int xb = 0; xb < xd; ++xb) {
      Vec img = Vec::Constant(d * qd, Cyc(0));
      for (int hb = 0; hb < d; ++hb) {
        Vec amb = Vec::Constant(pd * xd * kd, Cyc(0));
        for (const auto& [p1, c1] : sparse_col(h.comult, hb)) {
          int h1 = p1 / d, h2 = p1 % d;
          Vec bh1 = a.beta(j, h1);
          for (const auto& [w, c2] : sparse_col(x.act, pidx(h2, xb, xd)))
            for (int t = 0; t < kd; ++t) {
              if (k.unit(t).is_zero()) continue;
              for (int q0 = 0; q0 < pd; ++q0)
                if (!bh1(q0).is_zero())
                  amb(pidx(q0, pidx(w, t, kd), xd * kd)) +=
                      c1 * c2 * k.unit(t) * bh1(q0);
            }
        }
        Vec pr = out.pxk.project(amb);
        for (int qc = 0; qc < qd; ++qc) img(pidx(hb, qc, qd)) = pr(qc);
      }
      auto coords = coordinates(out.s_pxk.basis, img);
      require(coords.has_value(), "xi: right map leaves the solved span");
      out.xir_inv.col(pidx(j, xb, xd)) = *coords;
    }

  return out;
}

void check_coaction_identity(const AdjointAlgebra& a) {
  if (a.coact.rows() == 0 || a.target_coact.rows() == 0)
    throw InputError("coaction identity: structure not filled");
  const HopfData& h = *a.hopf;
  const ComoduleAlgebra& k = *a.alg;
  const int d = h.dim, kd = k.dim, pd = a.target.dim, n = a.dim();

  for (int j = 0; j < n; ++j)
    for (int hb = 0; hb < d; ++hb)
      for (int t = 0; t < kd; ++t) {
        Vec lhs = Vec::Constant(d * pd, Cyc(0));
        Vec rhs = Vec::Constant(d * pd, Cyc(0));
        for (const auto& [p1, c1] : sparse_col(h.comult, hb)) {
          int h1 = p1 / d, h2 = p1 % d;
          for (const auto& [fl, cc] : sparse_col(a.coact, j)) {
            int g = fl / n, i = fl % n;
            Vec bi = a.beta(i, h2);
            for (const auto& [y, c2] : sparse_col(h.mult, pidx(h1, g, d)))
              for (int q0 = 0; q0 < pd; ++q0) {
                if (bi(q0).is_zero()) continue;
                for (const auto& [r, c3] :
                     sparse_col(a.target.ract, pidx(q0, t, kd)))
                  lhs(pidx(y, r, pd)) += c1 * cc * c2 * bi(q0) * c3;
              }
          }
          Vec bj = a.beta(j, h1);
          for (int q = 0; q < pd; ++q) {
            if (bj(q).is_zero()) continue;
            for (const auto& [fl2, c2] : sparse_col(a.target_coact, q)) {
              int ah = fl2 / pd, q0 = fl2 % pd;
              for (const auto& [y, c3] : sparse_col(h.mult, pidx(ah, h2, d)))
                for (const auto& [r, c4] :
                     sparse_col(a.target.ract, pidx(q0, t, kd)))
                  rhs(pidx(y, r, pd)) += c1 * bj(q) * c2 * c3 * c4;
            }
          }
        }
        require(vec_eq(lhs, rhs),
                "coaction identity fails at element " + std::to_string(j) +
                    ", h = " + h.labels[hb] + ", k = " + k.labels[t]);
      }
}

EquivariantBimodule center_transport(const YDModule& v,
                                     const ComoduleAlgebra& k) {
  if (v.hopf != k.hopf)
    throw InputError("center transport: V and K live over different H");
  const HopfData& h = *k.hopf;
  const int d = h.dim, kd = k.dim, vd = v.dim, n = vd * kd;

  EquivariantBimodule out{&k, n, zeros(n, kd * n), zeros(n, n * kd),
                          zeros(d * n, n)};
  for (int vb = 0; vb < vd; ++vb)
    for (int tb = 0; tb < kd; ++tb) {
      int me = pidx(vb, tb, kd);
      for (int s = 0; s < kd; ++s) {
        for (const auto& [fl, c1] : sparse_col(k.coact, s)) {
          int ah = fl / kd, s0 = fl % kd;
          for (const auto& [w, c2] : sparse_col(v.act, pidx(ah, vb, vd)))
            for (const auto& [t2, c3] : sparse_col(k.mult, pidx(s0, tb, kd)))
              out.lact(pidx(w, t2, kd), pidx(s, me, n)) += c1 * c2 * c3;
        }
        for (const auto& [t2, c] : sparse_col(k.mult, pidx(tb, s, kd)))
          out.ract(pidx(vb, t2, kd), pidx(me, s, kd)) += c;
      }
      for (const auto& [flv, cv] : sparse_col(v.coact, vb)) {
        int a1 = flv / vd, v0 = flv % vd;
        for (const auto& [flk, ck] : sparse_col(k.coact, tb)) {
          int a2 = flk / kd, t0 = flk % kd;
          for (const auto& [g, cm] : sparse_col(h.mult, pidx(a1, a2, d)))
            out.coact(pidx(g, pidx(v0, t0, kd), n), me) += cv * ck * cm;
        }
      }
    }
  return out;
}

ThetaBraiding center_transport_braiding(const YDModule& v,
                                        const ComoduleAlgebra& k,
                                        const EquivariantBimodule& p) {
  const HopfData& h = *k.hopf;
  const int kd = k.dim, vd = v.dim, pd = p.dim;
  EquivariantBimodule vk = center_transport(v, k);
  const int m1 = vk.dim;

  ThetaBraiding out;
  out.domain = relative_tensor(vk.bimodule(), p.left_module());
  out.codomain = relative_tensor(p.bimodule(), vk.left_module());
  require(out.domain.dim() == out.codomain.dim(),
          "center transport: braiding is not square");

  out.matrix = zeros(out.codomain.dim(), out.domain.dim());
  for (int b = 0; b < out.domain.dim(); ++b) {
    Vec l = out.domain.lift(b);
    Vec amb = Vec::Constant(pd * m1, Cyc(0));
    for (int vb = 0; vb < vd; ++vb)
      for (int tb = 0; tb < kd; ++tb)
        for (int pb = 0; pb < pd; ++pb) {
          Cyc c0 = l(pidx(pidx(vb, tb, kd), pb, pd));
          if (c0.is_zero()) continue;
          for (const auto& [q, c1] : sparse_col(p.lact, pidx(tb, pb, pd)))
            for (const auto& [fl, c2] : sparse_col(p.coact, q)) {
              int ah = fl / pd, q0 = fl % pd;
              for (const auto& [b2, c3] : sparse_col(h.antipode_inv, ah))
                for (const auto& [w, c4] : sparse_col(v.act, pidx(b2, vb, vd)))
                  for (int t0 = 0; t0 < kd; ++t0)
                    if (!k.unit(t0).is_zero())
                      amb(pidx(q0, pidx(w, t0, kd), m1)) +=
                          c0 * c1 * c2 * c3 * c4 * k.unit(t0);
            }
        }
    out.matrix.col(b) = out.codomain.project(amb);
  }
  require(rank(out.matrix) == out.domain.dim(),
          "center transport: braiding is singular");

  /* K-bimodule linearity of the braiding */
  for (int s = 0; s < kd; ++s) {
    Mat dl = induced_on_quotient(out.domain, [&](const Vec& l, Vec& img) {
      for (int xi = 0; xi < m1; ++xi)
        for (int pb = 0; pb < pd; ++pb) {
          Cyc c0 = l(pidx(xi, pb, pd));
          if (c0.is_zero()) continue;
          for (const auto& [w, c] : sparse_col(vk.lact, pidx(s, xi, m1)))
            img(pidx(w, pb, pd)) += c0 * c;
        }
    });
    Mat cl = induced_on_quotient(out.codomain, [&](const Vec& l, Vec& img) {
      for (int pb = 0; pb < pd; ++pb)
        for (int xi = 0; xi < m1; ++xi) {
          Cyc c0 = l(pidx(pb, xi, m1));
          if (c0.is_zero()) continue;
          for (const auto& [r, c] : sparse_col(p.lact, pidx(s, pb, pd)))
            img(pidx(r, xi, m1)) += c0 * c;
        }
    });
    Mat dr = induced_on_quotient(out.domain, [&](const Vec& l, Vec& img) {
      for (int xi = 0; xi < m1; ++xi)
        for (int pb = 0; pb < pd; ++pb) {
          Cyc c0 = l(pidx(xi, pb, pd));
          if (c0.is_zero()) continue;
          for (const auto& [r, c] : sparse_col(p.ract, pidx(pb, s, kd)))
            img(pidx(xi, r, pd)) += c0 * c;
        }
    });
    Mat cr = induced_on_quotient(out.codomain, [&](const Vec& l, Vec& img) {
      for (int pb = 0; pb < pd; ++pb)
        for (int xi = 0; xi < m1; ++xi) {
          Cyc c0 = l(pidx(pb, xi, m1));
          if (c0.is_zero()) continue;
          for (const auto& [w, c] : sparse_col(vk.ract, pidx(xi, s, kd)))
            img(pidx(pb, w, m1)) += c0 * c;
        }
    });
    Mat left_diff = out.matrix * dl - cl * out.matrix;
    Mat right_diff = out.matrix * dr - cr * out.matrix;
    for (int i = 0; i < left_diff.rows(); ++i)
      for (int jj = 0; jj < left_diff.cols(); ++jj) {
        require(left_diff(i, jj).is_zero(),
                "center transport: braiding is not left K-linear");
        require(right_diff(i, jj).is_zero(),
                "center transport: braiding is not right K-linear");
      }
  }
  return out;
}

}  // namespace adjalg
