#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adjalg/adjoint.hpp"
#include "fixtures.hpp"

using namespace adjalg;

namespace {

Cyc z(int n, long k = 1) { return Cyc::root_of_unity(n, k); }

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

TwoCocycle pauli_cocycle(const FiniteGroup& g, const std::vector<int>& f) {
  Mat vals = Mat::Constant(4, 4, Cyc(1));
  Cyc i4 = z(4);
  vals(1, 2) = -i4;
  vals(1, 3) = i4;
  vals(2, 1) = i4;
  vals(2, 3) = -i4;
  vals(3, 1) = -i4;
  vals(3, 2) = i4;
  return TwoCocycle(g, f, vals);
}

ProjectiveRep pauli_rep() {
  Cyc i4 = z(4);
  Mat id = identity(2);
  Mat sx = zeros(2, 2), sy = zeros(2, 2), sz = zeros(2, 2);
  sx(0, 1) = Cyc(1);
  sx(1, 0) = Cyc(1);
  sy(0, 1) = -i4;
  sy(1, 0) = i4;
  sz(0, 0) = Cyc(1);
  sz(1, 1) = Cyc(-1);
  return ProjectiveRep{{id, sx, sz, sy}};
}

ProjectiveRep a3_character() {
  Mat w1 = identity(1), w2 = identity(1), w3 = identity(1);
  w2(0, 0) = z(3);
  w3(0, 0) = z(3, 2);
  return ProjectiveRep{{w1, w2, w3}};
}

/* the n x n matrix of acting by e_h, read off an action tensor */
Mat act_slice(const Mat& act, int h, int n) {
  Mat out = zeros(n, n);
  for (int j = 0; j < n; ++j) out.col(j) = act.col(pidx(h, j, n));
  return out;
}

Vec flatten_rows(const Mat& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  Vec out = Vec::Constant(r * c, Cyc(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out(pidx(i, j, c)) = m(i, j);
  return out;
}

AdjointAlgebra full_adjoint(const HopfData& h, const ComoduleAlgebra& k) {
  AdjointAlgebra a = adjoint_solve(h, k);
  adjoint_yd_structure(a);
  adjoint_product(a);
  return a;
}

}  // namespace

TEST_CASE("the ground field target recovers the dual") {
  FiniteGroup s3 = testfx::s3();
  for (bool dual : {false, true}) {
    HopfData h = dual ? dual_group_hopf(s3) : group_hopf(s3);
    ComoduleAlgebra k = trivial_comodule_algebra(h);
    AdjointAlgebra a = full_adjoint(h, k);
    REQUIRE(a.dim() == h.dim);
    /* the solved basis is the dual basis itself */
    CHECK(mat_eq(a.basis, identity(h.dim)));

    YDAlgebra expect = adjoint_yd_on_Hdual(h);
    CHECK(mat_eq(a.act, expect.yd.act));
    CHECK(mat_eq(a.coact, expect.yd.coact));
    CHECK(mat_eq(a.product, expect.mult));
    CHECK(mat_eq(Mat(a.unit), Mat(expect.unit)));

    CHECK_NOTHROW(check_yd_algebra(a.yd_algebra()));
    CHECK_NOTHROW(check_coaction_identity(a));
  }
}

TEST_CASE("the regular target recovers H with its adjoint structure") {
  FiniteGroup s3 = testfx::s3();
  for (bool dual : {false, true}) {
    HopfData h = dual ? dual_group_hopf(s3) : group_hopf(s3);
    ComoduleAlgebra k = comodule_algebra_from_hopf(h);
    AdjointAlgebra a = full_adjoint(h, k);
    const int d = h.dim, n = a.dim();
    REQUIRE(n == d);
    CHECK_NOTHROW(check_yd_algebra(a.yd_algebra()));
    CHECK_NOTHROW(check_coaction_identity(a));

    /* evaluation at 1 is a bijection onto H */
    Mat phi = zeros(d, n);
    for (int j = 0; j < n; ++j) {
      Vec v = Vec::Constant(d, Cyc(0));
      for (int u = 0; u < d; ++u)
        if (!h.unit(u).is_zero()) v += h.unit(u) * a.beta(j, u);
      phi.col(j) = v;
    }
    auto phi_inv = inverse(phi);
    REQUIRE(phi_inv.has_value());

    /* the inverse sends x to h |-> h_1 x S(h_2), landing in the span */
    for (int x = 0; x < d; ++x) {
      Mat b = zeros(d, d);
      for (int hb = 0; hb < d; ++hb)
        for (const auto& [p1, c1] : sparse_col(h.comult, hb)) {
          int h1 = p1 / d, h2 = p1 % d;
          Vec left = h.basis_product(h1, x);
          for (const auto& [s, c2] : sparse_col(h.antipode, h2))
            for (int y = 0; y < d; ++y) {
              if (left(y).is_zero()) continue;
              Vec prod = h.basis_product(y, s);
              for (int w = 0; w < d; ++w)
                b(hb, w) += c1 * c2 * left(y) * prod(w);
            }
        }
      auto coords = coordinates(a.basis, flatten_rows(b));
      REQUIRE(coords.has_value());
      CHECK(mat_eq(Mat(phi * *coords), Mat(unit_vec(d, x))));
    }

    /* action, coaction, product, unit transport to the adjoint picture */
    YDAlgebra expect = adjoint_yd_on_H(h);
    for (int hb = 0; hb < d; ++hb) {
      Mat lhs = phi * act_slice(a.act, hb, n) * *phi_inv;
      CHECK(mat_eq(lhs, act_slice(expect.yd.act, hb, d)));
    }
    CHECK(mat_eq(Mat(kron(identity(d), phi) * a.coact * *phi_inv), h.comult));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = phi * a.product.col(pidx(i, j, n));
        Vec rhs = h.product(phi.col(i), phi.col(j));
        CHECK(mat_eq(Mat(lhs), Mat(rhs)));
      }
    CHECK(mat_eq(Mat(phi * a.unit), Mat(h.unit)));
  }
}

TEST_CASE("twisted group algebra targets inside group algebras") {
  struct Case {
    const HopfData* h;
    const ComoduleAlgebra* k;
  };
  FiniteGroup kl = testfx::klein();
  FiniteGroup s3 = testfx::s3();
  FiniteGroup d4 = testfx::d4();
  HopfData hkl = group_hopf(kl);
  HopfData hs3 = group_hopf(s3);
  HopfData hd4 = group_hopf(d4);
  ComoduleAlgebra kpauli =
      twisted_group_comodule_algebra(hkl, pauli_cocycle(kl, {0, 1, 2, 3}));
  ComoduleAlgebra ka3 = twisted_group_comodule_algebra(
      hs3, TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"})));
  ComoduleAlgebra kd4 =
      twisted_group_comodule_algebra(hd4, pauli_cocycle(d4, {0, 2, 4, 6}));

  for (const auto& [hp, kp] :
       {Case{&hkl, &kpauli}, Case{&hs3, &ka3}, Case{&hd4, &kd4}}) {
    const HopfData& h = *hp;
    const ComoduleAlgebra& k = *kp;
    AdjointAlgebra a = full_adjoint(h, k);
    CHECK(a.dim() == h.dim);
    CHECK_NOTHROW(check_yd_algebra(a.yd_algebra()));
    CHECK_NOTHROW(check_coaction_identity(a));
  }
}

TEST_CASE("matrix algebra targets over function algebras") {
  FiniteGroup s3 = testfx::s3();
  FiniteGroup kl = testfx::klein();
  HopfData hds = dual_group_hopf(s3);
  HopfData hdk = dual_group_hopf(kl);

  ComoduleAlgebra ka3 = dual_group_comodule_algebra(
      hds, TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"})),
      a3_character());
  ComoduleAlgebra kfun = dual_group_comodule_algebra(
      hds, TwoCocycle::trivial(s3, s3.subgroup({"e"})),
      ProjectiveRep{{identity(1)}});
  ComoduleAlgebra kend =
      dual_group_comodule_algebra(hdk, pauli_cocycle(kl, {0, 1, 2, 3}),
                                  pauli_rep());

  struct Case {
    const HopfData* h;
    const ComoduleAlgebra* k;
  };
  for (const auto& [h, k] :
       {Case{&hds, &ka3}, Case{&hds, &kfun}, Case{&hdk, &kend}}) {
    AdjointAlgebra a = full_adjoint(*h, *k);
    CHECK(a.dim() == h->dim);
    CHECK_NOTHROW(check_yd_algebra(a.yd_algebra()));
    CHECK_NOTHROW(check_coaction_identity(a));
  }
}

TEST_CASE("corrupted data is caught by the structure fills") {
  FiniteGroup kl = testfx::klein();
  HopfData h = group_hopf(kl);
  ComoduleAlgebra k =
      twisted_group_comodule_algebra(h, pauli_cocycle(kl, {0, 1, 2, 3}));
  AdjointAlgebra a = full_adjoint(h, k);

  AdjointAlgebra bad = a;
  bad.coact(0, 0) += Cyc(1);
  CHECK_THROWS_AS(check_coaction_identity(bad), CheckError);

  AdjointAlgebra bent = adjoint_solve(h, k);
  bent.basis(0, 0) += Cyc(1);
  CHECK_THROWS_AS(adjoint_yd_structure(bent), CheckError);

  AdjointAlgebra plain = adjoint_solve(h, k, regular_bimodule(k));
  CHECK_THROWS_AS(plain.yd_algebra(), InputError);
  CHECK_THROWS_AS(adjoint_product(plain), InputError);
}

TEST_CASE("relative tensor products and dinatural projections") {
  FiniteGroup s3 = testfx::s3();
  HopfData h = dual_group_hopf(s3);
  ComoduleAlgebra k = dual_group_comodule_algebra(
      h, TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"})),
      a3_character());
  AdjointAlgebra a = full_adjoint(h, k);
  const int d = h.dim, kd = k.dim, n = a.dim();

  /* tensoring with K over K collapses to the target */
  KModule mk = regular_kmodule(k);
  QuotientSpace pmk = relative_tensor(a.target, mk);
  REQUIRE(pmk.dim() == kd);

  std::vector<Mat> pik = dinatural_projection(a, mk, pmk);
  REQUIRE(static_cast<int>(pik.size()) == n);

  /* evaluation at K determines the element */
  Mat stacked = zeros(pmk.dim() * d * kd, n);
  for (int j = 0; j < n; ++j) stacked.col(j) = flatten_rows(pik[j]);
  CHECK(rank(stacked) == n);

  /* a nontrivial quotient module: K / K e_0 */
  auto [mq, q] = principal_quotient(k, 0);
  REQUIRE(mq.dim == 1);
  QuotientSpace pmq = relative_tensor(a.target, mq);
  std::vector<Mat> piq = dinatural_projection(a, mq, pmq);

  /* the canonical projection is a module map and the square commutes */
  Mat f = zeros(mq.dim, kd);
  for (int i = 0; i < kd; ++i) f.col(i) = q.project(unit_vec(kd, i));
  Mat idf = zeros(d * mq.dim, d * kd);
  for (int hb = 0; hb < d; ++hb)
    for (int i = 0; i < kd; ++i)
      for (int w = 0; w < mq.dim; ++w)
        idf(pidx(hb, w, mq.dim), pidx(hb, i, kd)) = f(w, i);
  Mat step = induced_tensor_map(kd, pmk, pmq, f);
  for (int j = 0; j < n; ++j)
    CHECK(mat_eq(Mat(step * pik[j]), Mat(piq[j] * idf)));

  /* right multiplication maps K -> N, one per basis element of N */
  for (int nb = 0; nb < mq.dim; ++nb) {
    Mat fn = zeros(mq.dim, kd);
    for (int i = 0; i < kd; ++i) fn.col(i) = mq.act.col(pidx(i, nb, mq.dim));
    Mat push = induced_tensor_map(kd, pmk, pmq, fn);
    for (int j = 0; j < n; ++j)
      for (int hb = 0; hb < d; ++hb) {
        Vec at_one = Vec::Constant(pmk.dim(), Cyc(0));
        for (int t = 0; t < kd; ++t)
          if (!k.unit(t).is_zero())
            at_one += k.unit(t) * pik[j].col(pidx(hb, t, kd));
        CHECK(mat_eq(Mat(push * at_one), Mat(piq[j].col(pidx(hb, nb, mq.dim)))));
      }
  }

  /* the zero module stays well-formed */
  KModule zero{&k, 0, zeros(0, 0)};
  QuotientSpace pm0 = relative_tensor(a.target, zero);
  CHECK(pm0.dim() == 0);
  std::vector<Mat> pi0 = dinatural_projection(a, zero, pm0);
  CHECK(static_cast<int>(pi0.size()) == n);
}

TEST_CASE("dinatural families factor through evaluation at K") {
  FiniteGroup s3 = testfx::s3();
  HopfData h = dual_group_hopf(s3);
  ComoduleAlgebra k = dual_group_comodule_algebra(
      h, TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"})),
      a3_character());
  AdjointAlgebra a = full_adjoint(h, k);
  const int d = h.dim, kd = k.dim, n = a.dim();

  KModule mk = regular_kmodule(k);
  QuotientSpace pmk = relative_tensor(a.target, mk);
  std::vector<Mat> pik = dinatural_projection(a, mk, pmk);
  auto [mq, q] = principal_quotient(k, 0);
  QuotientSpace pmq = relative_tensor(a.target, mq);
  std::vector<Mat> piq = dinatural_projection(a, mq, pmq);

  /* the canonical collapse of P (x)_K K onto P */
  auto collapse = [&](const Vec& qcoords) {
    Vec amb = Vec::Constant(kd * kd, Cyc(0));
    for (int c = 0; c < pmk.dim(); ++c)
      if (!qcoords(c).is_zero()) amb += qcoords(c) * pmk.lift(c);
    Vec out = Vec::Constant(kd, Cyc(0));
    for (int p = 0; p < kd; ++p)
      for (int t = 0; t < kd; ++t) {
        Cyc c = amb(pidx(p, t, kd));
        if (c.is_zero()) continue;
        for (const auto& [r, cc] : sparse_col(a.target.ract, pidx(p, t, kd)))
          out(r) += c * cc;
      }
    return out;
  };

  /* families pi . T for T = id, an action slice, a left multiplication */
  std::vector<Mat> shapes = {identity(n), act_slice(a.act, 1, n), zeros(n, n)};
  for (int j = 0; j < n; ++j)
    shapes[2].col(j) = a.product.col(pidx(1, j, n));

  for (const Mat& t : shapes) {
    for (int e = 0; e < n; ++e) {
      Vec tcoords = t.col(e);
      /* what the family does on M = K */
      Mat dk = zeros(pmk.dim(), d * kd);
      for (int j = 0; j < n; ++j)
        if (!tcoords(j).is_zero()) dk += tcoords(j) * pik[j];
      /* recover the element from evaluation at h (x) 1 */
      Mat b = zeros(d, kd);
      for (int hb = 0; hb < d; ++hb) {
        Vec at_one = Vec::Constant(pmk.dim(), Cyc(0));
        for (int tb = 0; tb < kd; ++tb)
          if (!k.unit(tb).is_zero())
            at_one += k.unit(tb) * dk.col(pidx(hb, tb, kd));
        Vec v = collapse(at_one);
        for (int p = 0; p < kd; ++p) b(hb, p) = v(p);
      }
      auto coords = coordinates(a.basis, flatten_rows(b));
      REQUIRE(coords.has_value());
      CHECK(mat_eq(Mat(*coords), Mat(tcoords)));
      /* and the factored element reproduces the family on the quotient */
      Mat dq = zeros(pmq.dim(), d * mq.dim);
      for (int j = 0; j < n; ++j)
        if (!(*coords)(j).is_zero()) dq += (*coords)(j) * piq[j];
      Mat dq_direct = zeros(pmq.dim(), d * mq.dim);
      for (int j = 0; j < n; ++j)
        if (!tcoords(j).is_zero()) dq_direct += tcoords(j) * piq[j];
      CHECK(mat_eq(dq, dq_direct));
    }
  }
}

TEST_CASE("the adjunction between H-modules and bimodules") {
  FiniteGroup s3 = testfx::s3();
  HopfData h = group_hopf(s3);
  ComoduleAlgebra k = twisted_group_comodule_algebra(
      h, TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"})));
  KBimodule p{&k, k.dim, k.mult, k.mult};

  /* trivial module: everything reduces to evaluation at 1 */
  HModule xtriv = trivial_module(h);
  AdjunctionData at = adjunction_maps(h, k, xtriv, p);
  CHECK(at.hom_h.cols() == at.hom_kk.cols());

  /* regular module: both Hom spaces match the adjoint dimension */
  HModule xreg = regular_module(h);
  AdjunctionData ar = adjunction_maps(h, k, xreg, p);
  CHECK(ar.s_p.dim() == h.dim);
  CHECK(ar.hom_h.cols() == ar.s_p.dim());
  CHECK(ar.hom_kk.cols() == ar.s_p.dim());

  /* the dual-side family */
  FiniteGroup kl = testfx::klein();
  HopfData hd = dual_group_hopf(kl);
  ComoduleAlgebra ke = dual_group_comodule_algebra(
      hd, pauli_cocycle(kl, {0, 1, 2, 3}), pauli_rep());
  KBimodule pe{&ke, ke.dim, ke.mult, ke.mult};
  AdjunctionData ad = adjunction_maps(hd, ke, regular_module(hd), pe);
  CHECK(ad.hom_h.cols() == ad.s_p.dim());
}

TEST_CASE("half-braidings on relative tensor products") {
  FiniteGroup kl = testfx::klein();
  HopfData h = group_hopf(kl);
  ComoduleAlgebra k =
      twisted_group_comodule_algebra(h, pauli_cocycle(kl, {0, 1, 2, 3}));
  EquivariantBimodule p = regular_bimodule(k);

  HModule xreg = regular_module(h);
  HalfBraiding hb = half_braiding_sigma(p, xreg);
  CHECK(hb.domain.dim() == h.dim * k.dim);
  CHECK(hb.matrix.rows() == h.dim * k.dim);

  /* the trivial module collapses the braiding to multiplication */
  HModule xtriv = trivial_module(h);
  HalfBraiding h1 = half_braiding_sigma(p, xtriv);
  REQUIRE(h1.domain.dim() == k.dim);
  for (int b = 0; b < h1.domain.dim(); ++b) {
    Vec l = h1.domain.lift(b);
    Vec expect = Vec::Constant(k.dim, Cyc(0));
    for (int pb = 0; pb < k.dim; ++pb)
      for (int kb = 0; kb < k.dim; ++kb) {
        Cyc c = l(pidx(pb, kb, k.dim));
        if (!c.is_zero()) expect += c * k.basis_product(pb, kb);
      }
    CHECK(mat_eq(Mat(h1.matrix.col(b)), Mat(expect)));
  }

  /* a trivial coaction flips the legs */
  HopfData hf = group_hopf(kl);
  ComoduleAlgebra ktriv = trivial_comodule_algebra(hf);
  EquivariantBimodule pt{&ktriv, 2, identity(2), identity(2),
                         zeros(hf.dim * 2, 2)};
  for (int v = 0; v < 2; ++v)
    for (int u = 0; u < hf.dim; ++u)
      pt.coact(pidx(u, v, 2), v) = hf.unit(u);
  CHECK_NOTHROW(pt.validate());
  HModule xr = regular_module(hf);
  HalfBraiding h2 = half_braiding_sigma(pt, xr);
  REQUIRE(h2.domain.dim() == 2 * hf.dim);
  for (int b = 0; b < h2.domain.dim(); ++b) {
    Vec l = h2.domain.lift(b);
    Vec expect = Vec::Constant(hf.dim * 2, Cyc(0));
    for (int pb = 0; pb < 2; ++pb)
      for (int xb = 0; xb < hf.dim; ++xb) {
        Cyc c = l(pidx(pb, pidx(xb, 0, 1), hf.dim));
        if (!c.is_zero()) expect(pidx(xb, pb, 2)) += c;
      }
    CHECK(mat_eq(Mat(h2.matrix.col(b)), Mat(expect)));
  }
}

TEST_CASE("module functor structure maps in the module argument") {
  FiniteGroup s3 = testfx::s3();
  HopfData h = group_hopf(s3);
  ComoduleAlgebra k = comodule_algebra_from_hopf(h);
  AdjointAlgebra a = full_adjoint(h, k);

  /* the trivial argument gives identity-like maps */
  XiMaps xt = xi_maps(a, trivial_module(h));
  CHECK(mat_eq(xt.xil_inv, identity(a.dim())));
  CHECK(xt.xir_inv.rows() == xt.xir_inv.cols());
  CHECK(rank(xt.xir_inv) == a.dim());

  /* the regular argument gives square invertible coordinate maps */
  HModule xreg = regular_module(h);
  XiMaps xr = xi_maps(a, xreg);
  REQUIRE(xr.xil_inv.rows() == xr.xil_inv.cols());
  REQUIRE(xr.xir_inv.rows() == xr.xir_inv.cols());
  CHECK(rank(xr.xil_inv) == h.dim * a.dim());
  CHECK(rank(xr.xir_inv) == h.dim * a.dim());
}

TEST_CASE("the composite braiding matches the center structure") {
  FiniteGroup kl = testfx::klein();
  HopfData h = group_hopf(kl);
  ComoduleAlgebra k =
      twisted_group_comodule_algebra(h, pauli_cocycle(kl, {0, 1, 2, 3}));
  AdjointAlgebra a = full_adjoint(h, k);
  HModule xreg = regular_module(h);
  const int d = h.dim, n = a.dim(), xd = xreg.dim, pd = k.dim;

  XiMaps xm = xi_maps(a, xreg);
  HalfBraiding hb = half_braiding_sigma(regular_bimodule(k), xreg);
  REQUIRE(xm.pxk.free_columns() == hb.domain.free_columns());

  /* push each solved element of the relative-tensor target along sigma */
  Mat rho = zeros(xm.s_xp.dim(), xm.s_pxk.dim());
  for (int j = 0; j < xm.s_pxk.dim(); ++j) {
    Vec img = Vec::Constant(d * xd * pd, Cyc(0));
    for (int hbi = 0; hbi < d; ++hbi) {
      Vec out = hb.matrix * xm.s_pxk.beta(j, hbi);
      for (int c = 0; c < xd * pd; ++c) img(pidx(hbi, c, xd * pd)) = out(c);
    }
    auto coords = coordinates(xm.s_xp.basis, img);
    REQUIRE(coords.has_value());
    rho.col(j) = *coords;
  }

  auto xil = inverse(xm.xil_inv);
  REQUIRE(xil.has_value());
  Mat composite = *xil * rho * xm.xir_inv;
  Mat direct = center_halfbraiding(a.yd(), xreg);
  CHECK(mat_eq(composite, direct));
}

TEST_CASE("center transport of a trivial module returns the algebra") {
  FiniteGroup s3 = testfx::s3();
  HopfData h = group_hopf(s3);
  ComoduleAlgebra k = twisted_group_comodule_algebra(
      h, TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"})));
  YDModule vtriv{&h, 1, trivial_module(h).act, zeros(h.dim, 1)};
  for (int u = 0; u < h.dim; ++u) vtriv.coact(pidx(u, 0, 1), 0) = h.unit(u);
  REQUIRE(yd_check(vtriv).ok());

  EquivariantBimodule vk = center_transport(vtriv, k);
  EquivariantBimodule reg = regular_bimodule(k);
  CHECK(vk.dim == k.dim);
  CHECK(mat_eq(vk.lact, reg.lact));
  CHECK(mat_eq(vk.ract, reg.ract));
  CHECK(mat_eq(vk.coact, reg.coact));
}

TEST_CASE("center transport braiding at a plain comodule") {
  FiniteGroup kl = testfx::klein();
  HopfData h = group_hopf(kl);
  ComoduleAlgebra ktriv = trivial_comodule_algebra(h);
  ComoduleAlgebra kpsi =
      twisted_group_comodule_algebra(h, pauli_cocycle(kl, {0, 1, 2, 3}));
  YDModule v = adjoint_yd_on_H(h).yd;

  /* the twisted algebra viewed as a bare graded comodule */
  EquivariantBimodule p{&ktriv, kpsi.dim, identity(kpsi.dim),
                        identity(kpsi.dim), kpsi.coact};
  CHECK_NOTHROW(p.validate());

  ThetaBraiding tb = center_transport_braiding(v, ktriv, p);
  REQUIRE(tb.domain.dim() == v.dim * kpsi.dim);

  Mat expect = zeros(kpsi.dim * v.dim, v.dim * kpsi.dim);
  for (int vb = 0; vb < v.dim; ++vb)
    for (int pb = 0; pb < kpsi.dim; ++pb)
      for (const auto& [fl, c] : sparse_col(p.coact, pb)) {
        int ah = fl / kpsi.dim, p0 = fl % kpsi.dim;
        for (const auto& [b2, c3] : sparse_col(h.antipode_inv, ah))
          for (const auto& [w, c4] : sparse_col(v.act, pidx(b2, vb, v.dim)))
            expect(pidx(p0, w, v.dim), pidx(vb, pb, kpsi.dim)) += c * c3 * c4;
      }
  CHECK(mat_eq(tb.matrix, expect));
}

TEST_CASE("center transport of the adjoint algebra object") {
  FiniteGroup kl = testfx::klein();
  HopfData h = group_hopf(kl);
  ComoduleAlgebra k =
      twisted_group_comodule_algebra(h, pauli_cocycle(kl, {0, 1, 2, 3}));
  AdjointAlgebra a = full_adjoint(h, k);

  EquivariantBimodule obj = center_transport(a.yd(), k);
  CHECK(obj.dim == a.dim() * k.dim);
  CHECK_NOTHROW(obj.validate());

  ThetaBraiding at_k = center_transport_braiding(a.yd(), k, regular_bimodule(k));
  CHECK(at_k.domain.dim() == a.dim() * k.dim);
  ThetaBraiding at_self = center_transport_braiding(a.yd(), k, obj);
  CHECK(at_self.domain.dim() == obj.dim * a.dim());
}
