#include "adjalg/classfun.hpp"

#include <map>
#include <string>

namespace adjalg {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw CheckError(msg);
}

Vec flatten_rows(const Mat& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  Vec out = Vec::Constant(r * c, Cyc(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out(pidx(i, j, c)) = m(i, j);
  return out;
}

void add_rows(SparseReducer& red, std::vector<std::map<int, Cyc>>& rows) {
  for (auto& row : rows) {
    SparseReducer::SparseRow srow;
    for (auto& [p, c] : row)
      if (!c.is_zero()) srow.emplace_back(p, c);
    red.add_row(std::move(srow));
  }
}

}  // namespace

YDMorphismSpace yd_hom(const YDModule& a, const YDModule& b) {
  if (a.hopf != b.hopf)
    throw InputError("morphism space: modules live over different H");
  const HopfData& h = *a.hopf;
  const int d = h.dim, na = a.dim, nb = b.dim;
  auto flat = [&](int r, int c) { return r * na + c; };

  SparseReducer red(nb * na);
  for (int hb = 0; hb < d; ++hb)
    for (int j = 0; j < na; ++j) {
      std::vector<std::map<int, Cyc>> rows(nb);
      for (int c = 0; c < na; ++c) {
        const Cyc& ca = a.act(c, pidx(hb, j, na));
        if (ca.is_zero()) continue;
        for (int r = 0; r < nb; ++r) rows[r][flat(r, c)] += ca;
      }
      for (int m = 0; m < nb; ++m)
        for (int r = 0; r < nb; ++r) {
          const Cyc& cb = b.act(r, pidx(hb, m, nb));
          if (!cb.is_zero()) rows[r][flat(m, j)] -= cb;
        }
      add_rows(red, rows);
    }
  for (int j = 0; j < na; ++j) {
    std::vector<std::map<int, Cyc>> rows(d * nb);
    for (int m = 0; m < nb; ++m)
      for (int u = 0; u < d; ++u)
        for (int r = 0; r < nb; ++r) {
          const Cyc& cb = b.coact(pidx(u, r, nb), m);
          if (!cb.is_zero()) rows[pidx(u, r, nb)][flat(m, j)] += cb;
        }
    for (int c = 0; c < na; ++c)
      for (int u = 0; u < d; ++u) {
        const Cyc& ca = a.coact(pidx(u, c, na), j);
        if (ca.is_zero()) continue;
        for (int r = 0; r < nb; ++r) rows[pidx(u, r, nb)][flat(r, c)] -= ca;
      }
    add_rows(red, rows);
  }

  Mat sols = red.nullspace_basis();
  YDMorphismSpace out{na, nb, {}};
  for (int s = 0; s < sols.cols(); ++s) {
    Mat t = zeros(nb, na);
    for (int r = 0; r < nb; ++r)
      for (int c = 0; c < na; ++c) t(r, c) = sols(flat(r, c), s);
    out.basis.push_back(std::move(t));
  }
  return out;
}

YDMorphismSpace class_functions(const HopfData& h, const ComoduleAlgebra& k) {
  AdjointAlgebra sk = adjoint_solve(h, k);
  adjoint_yd_structure(sk);
  ComoduleAlgebra reg = comodule_algebra_from_hopf(h);
  AdjointAlgebra sh = adjoint_solve(h, reg);
  adjoint_yd_structure(sh);
  return yd_hom(sk.yd(), sh.yd());
}

CPsiSpace c_psi_space(const TwoCocycle& psi) {
  const FiniteGroup& g = psi.group();
  CPsiSpace out{psi, CosetDecomposition(g, psi.subgroup()), 0,
                psi.subgroup_size(), Mat()};
  out.ns = out.cosets.num_cosets();
  const int nf = out.nf, n = out.ns * nf;

  SparseReducer red(n);
  for (int s = 0; s < out.ns; ++s) {
    int se = out.cosets.reps()[s];
    for (int l = 0; l < nf; ++l) {
      int le = psi.subgroup()[l];
      for (int x = 0; x < g.order(); ++x) {
        auto [he, re] = out.cosets.decompose(g.mul(se, g.inv(x)));
        int hinv = g.inv(he);
        int lconj = g.conj(hinv, le);
        std::map<int, Cyc> row;
        row[pidx(s, l, nf)] += Cyc(1);
        row[pidx(out.cosets.rep_pos(re), psi.pos_of(lconj), nf)] -=
            psi.b(hinv, lconj);
        SparseReducer::SparseRow srow;
        for (auto& [p, c] : row)
          if (!c.is_zero()) srow.emplace_back(p, c);
        red.add_row(std::move(srow));
      }
    }
  }
  out.basis = red.nullspace_basis();
  return out;
}

DualCFModel cf_dual_model(const DualCaseBasis& b, const DualCaseBasis& reg) {
  if (b.hopf != reg.hopf)
    throw InputError("coset model: bases live over different H");
  const FiniteGroup& g = b.psi.group();
  if (reg.nf != 1 || reg.dv != 1 || reg.ns != g.order())
    throw InputError("coset model: the target basis must come from the trivial subgroup");

  DualCaseYD ydb = dual_case_yd(b);
  DualCaseYD ydr = dual_case_yd(reg);
  YDModule src{b.hopf, b.dim(), ydb.act, ydb.coact};
  YDModule tgt{reg.hopf, reg.dim(), ydr.act, ydr.coact};

  DualCFModel out;
  out.hom = yd_hom(src, tgt);

  int one_pos = b.psi.pos_of(g.identity());
  for (int c = 0; c < b.ns; ++c) {
    Mat m = zeros(reg.dim(), b.dim());
    for (int s = 0; s < b.ns; ++s) {
      int se = b.cosets.reps()[s];
      int j = b.index(one_pos, s);
      for (int ge = 0; ge < g.order(); ++ge) {
        auto [fe, te] = b.cosets.decompose(g.mul(se, g.inv(ge)));
        if (b.cosets.rep_pos(te) != c) continue;
        m(reg.index(0, reg.cosets.rep_pos(ge)), j) = Cyc(1);
      }
    }
    out.morphisms.push_back(std::move(m));
  }

  /* each coset map intertwines, and together they span the whole space */
  Mat stacked = zeros(reg.dim() * b.dim(), b.ns);
  for (int c = 0; c < b.ns; ++c) {
    Mat span = zeros(reg.dim() * b.dim(), out.hom.dim());
    for (int i = 0; i < out.hom.dim(); ++i)
      span.col(i) = flatten_rows(out.hom.basis[i]);
    require(coordinates(span, flatten_rows(out.morphisms[c])).has_value(),
            "coset model: a coset map fails to intertwine");
    stacked.col(c) = flatten_rows(out.morphisms[c]);
  }
  require(rank(stacked) == b.ns,
          "coset model: the coset maps are linearly dependent");
  require(out.hom.dim() == b.ns,
          "coset model: morphism space dimension differs from the coset count");
  return out;
}

EquivariantBimodule group_theoretical_adjoint(const GroupCaseBasis& b,
                                              const GroupCaseYD& yd) {
  const FiniteGroup& g = b.psi.group();
  const HopfData& h = *b.hopf;
  const ComoduleAlgebra& k = *b.alg;
  const int nf = b.nf, n = b.dim(), dim = n * nf;

  EquivariantBimodule obj{&k, dim, zeros(dim, nf * dim), zeros(dim, dim * nf),
                          zeros(h.dim * dim, dim)};
  for (int s = 0; s < b.ns; ++s) {
    int se = b.cosets.reps()[s];
    for (int f = 0; f < nf; ++f) {
      int fe = b.psi.subgroup()[f];
      int j = b.index(s, f);
      int grade = g.conj(g.inv(se), fe);
      for (int hp = 0; hp < nf; ++hp) {
        int he = b.psi.subgroup()[hp];
        int me = pidx(j, hp, nf);
        obj.coact(pidx(g.mul(grade, he), me, dim), me) = Cyc(1);

        for (int gp = 0; gp < nf; ++gp) {
          int ge = b.psi.subgroup()[gp];
          auto [de, re] = b.cosets.decompose(g.mul(se, g.inv(ge)));
          int dinv = g.inv(de);
          int fconj = g.conj(dinv, fe);
          int tgt_j = b.index(b.cosets.rep_pos(re), b.psi.pos_of(fconj));
          int gh = b.psi.pos_of(g.mul(ge, he));
          obj.lact(pidx(tgt_j, gh, nf), pidx(gp, me, dim)) =
              b.psi.b(dinv, fconj) * b.psi.at(ge, he);
          int hl = b.psi.pos_of(g.mul(he, b.psi.subgroup()[gp]));
          obj.ract(pidx(j, hl, nf), pidx(me, gp, nf)) = b.psi.at(he, ge);
        }
      }
    }
  }

  YDModule v{&h, n, yd.act, yd.coact};
  EquivariantBimodule transported = center_transport(v, k);
  require(transported.dim == obj.dim,
          "group theoretical object: transport dimension mismatch");
  for (int i = 0; i < obj.lact.rows(); ++i)
    for (int j = 0; j < obj.lact.cols(); ++j)
      require(obj.lact(i, j) == transported.lact(i, j),
              "group theoretical object: left action differs from transport");
  for (int i = 0; i < obj.ract.rows(); ++i)
    for (int j = 0; j < obj.ract.cols(); ++j)
      require(obj.ract(i, j) == transported.ract(i, j),
              "group theoretical object: right action differs from transport");
  for (int i = 0; i < obj.coact.rows(); ++i)
    for (int j = 0; j < obj.coact.cols(); ++j)
      require(obj.coact(i, j) == transported.coact(i, j),
              "group theoretical object: coaction differs from transport");
  obj.validate();
  return obj;
}

GTClassFunctions group_theoretical_cf(const HopfData& h, const TwoCocycle& psi,
                                      const ComoduleAlgebra& k) {
  AdjointAlgebra a = adjoint_solve(h, k);
  adjoint_yd_structure(a);
  YDModule v = a.yd();
  GTClassFunctions out{};
  out.dim_end = yd_hom(v, v).dim();
  out.dim_c1 =
      c_psi_space(TwoCocycle::trivial(psi.group(), psi.subgroup())).dim();
  out.dim_cpsi = c_psi_space(psi).dim();
  out.final_match = out.dim_end == out.dim_c1;
  return out;
}

}  // namespace adjalg
