#include "adjalg/closedform.hpp"

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

/* rho(f)^-1 = psi(f, f^-1)^-1 rho(f^-1) */
Mat rho_inverse(const TwoCocycle& psi, const ProjectiveRep& v, int f_pos) {
  const FiniteGroup& g = psi.group();
  int fe = psi.subgroup()[f_pos];
  int ip = psi.pos_of(g.inv(fe));
  return v.rho[ip] * psi.at_pos(f_pos, ip).inverse();
}

/* change of basis into the generic solver's coordinates, with inverse */
std::pair<Mat, Mat> base_change(const Mat& elements, const Mat& solved) {
  const int n = static_cast<int>(elements.cols());
  Mat c = zeros(n, n);
  for (int j = 0; j < n; ++j) {
    auto coords = coordinates(solved, elements.col(j));
    require(coords.has_value(),
            "closed form: a basis element escapes the solved space");
    c.col(j) = *coords;
  }
  auto inv = inverse(c);
  require(inv.has_value(), "closed form: the change of basis is singular");
  return {c, *inv};
}

}  // namespace

GroupCaseBasis group_case_basis(const HopfData& h, const TwoCocycle& psi,
                                const ComoduleAlgebra& k) {
  const FiniteGroup& g = psi.group();
  if (k.hopf != &h)
    throw InputError("closed form: algebra lives over a different H");
  if (h.dim != g.order())
    throw InputError("closed form: H dimension does not match the group");
  const int nf = psi.subgroup_size();
  if (k.dim != nf)
    throw InputError("closed form: algebra dimension does not match the subgroup");

  GroupCaseBasis b{&h, &k, psi, CosetDecomposition(g, psi.subgroup()),
                   0,  nf, Mat()};
  b.ns = b.cosets.num_cosets();
  const int d = h.dim;
  b.elements = zeros(d * nf, b.ns * nf);
  for (int s = 0; s < b.ns; ++s) {
    int se = b.cosets.reps()[s];
    for (int l = 0; l < nf; ++l) {
      int le = psi.subgroup()[l];
      int col = b.index(s, l);
      for (int gp = 0; gp < nf; ++gp) {
        int ge = psi.subgroup()[gp];
        int fe = g.conj(ge, le); /* g l g^-1 */
        int row = g.mul(ge, se);
        b.elements(pidx(row, psi.pos_of(fe), nf), col) = psi.b(ge, fe);
      }
    }
  }

  require(rank(b.elements) == b.dim(),
          "closed form: the alpha family is linearly dependent");
  AdjointAlgebra a = adjoint_solve(h, k);
  require(a.dim() == b.dim() && same_span(b.elements, a.basis),
          "closed form: the alpha family does not span the solved space");
  return b;
}

Vec group_case_apply(const GroupCaseBasis& b, int s_pos, int l_pos, int x,
                     int h_pos) {
  const FiniteGroup& g = b.psi.group();
  Vec out = Vec::Constant(b.nf, Cyc(0));
  auto [fe, te] = b.cosets.decompose(x);
  if (b.cosets.rep_pos(te) != s_pos) return out;
  int le = b.psi.subgroup()[l_pos];
  int flf = g.conj(fe, le);
  int he = b.psi.subgroup()[h_pos];
  Cyc val = b.psi.b(fe, flf) * b.psi.at(flf, he);
  out(b.psi.pos_of(g.mul(flf, he))) = val;
  return out;
}

GroupCaseYD group_case_yd(const GroupCaseBasis& b) {
  const FiniteGroup& g = b.psi.group();
  const HopfData& h = *b.hopf;
  const int d = h.dim, n = b.dim(), nf = b.nf;

  GroupCaseYD out;
  out.act = zeros(n, d * n);
  out.coact = zeros(d * n, n);
  for (int s = 0; s < b.ns; ++s) {
    int se = b.cosets.reps()[s];
    for (int l = 0; l < nf; ++l) {
      int le = b.psi.subgroup()[l];
      int j = b.index(s, l);
      int grade = g.conj(g.inv(se), le); /* s^-1 l s */
      out.coact(pidx(grade, j, n), j) = Cyc(1);
      for (int x = 0; x < d; ++x) {
        auto [he, re] = b.cosets.decompose(g.mul(se, g.inv(x)));
        int hinv = g.inv(he);
        int lconj = g.conj(hinv, le); /* h^-1 l h */
        int tgt = b.index(b.cosets.rep_pos(re), b.psi.pos_of(lconj));
        out.act(tgt, pidx(x, j, n)) = b.psi.b(hinv, lconj);
      }
    }
  }

  AdjointAlgebra a = adjoint_solve(h, *b.alg);
  adjoint_yd_structure(a);
  auto [c, cinv] = base_change(b.elements, a.basis);
  Mat act_t = cinv * a.act * kron(identity(d), c);
  Mat coact_t = kron(identity(d), cinv) * a.coact * c;
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < d * n; ++jj)
      require(out.act(i, jj) == act_t(i, jj),
              "closed form: the action formula disagrees with the solver");
  for (int i = 0; i < d * n; ++i)
    for (int jj = 0; jj < n; ++jj)
      require(out.coact(i, jj) == coact_t(i, jj),
              "closed form: the coaction formula disagrees with the solver");
  return out;
}

Mat t_f_solver(const TwoCocycle& psi, const ProjectiveRep& v, int f_pos) {
  const int dv = v.dim();
  Mat rho = v.rho[f_pos];
  Mat rinv = rho_inverse(psi, v, f_pos);

  /* rows: one equation per matrix unit U = E(j,k) and output entry */
  Mat sys = zeros(dv * dv * dv * dv, dv * dv);
  int row = 0;
  for (int j = 0; j < dv; ++j)
    for (int k = 0; k < dv; ++k)
      for (int r = 0; r < dv; ++r)
        for (int c = 0; c < dv; ++c) {
          if (r == j) sys(row, pidx(k, c, dv)) += Cyc(1);
          for (int m = 0; m < dv; ++m)
            sys(row, pidx(r, m, dv)) -= rinv(m, j) * rho(k, c);
          ++row;
        }
  Mat sols = nullspace(sys);
  if (sols.cols() != 1)
    throw CheckError(
        "closed form: the intertwiner space has dimension " +
        std::to_string(sols.cols()) + ", expected 1");
  Vec t = sols.col(0);
  Cyc lead(0);
  for (int i = 0; i < dv * dv && lead.is_zero(); ++i) lead = t(i);
  Mat out = zeros(dv, dv);
  for (int u = 0; u < dv; ++u)
    for (int w = 0; w < dv; ++w) out(u, w) = t(pidx(u, w, dv)) / lead;
  return out;
}

DualCaseBasis dual_case_basis(const HopfData& h, const TwoCocycle& psi,
                              const ProjectiveRep& v,
                              const ComoduleAlgebra& k) {
  const FiniteGroup& g = psi.group();
  if (k.hopf != &h)
    throw InputError("closed form: algebra lives over a different H");
  if (h.dim != g.order())
    throw InputError("closed form: H dimension does not match the group");
  const int nf = psi.subgroup_size(), dv = v.dim();

  DualCaseBasis b{&h,  &k, psi, v, CosetDecomposition(g, psi.subgroup()),
                  nf,  0,  dv,  {}, Mat()};
  b.ns = b.cosets.num_cosets();
  if (k.dim != dv * dv * b.ns)
    throw InputError("closed form: algebra dimension does not match (F, psi, V)");

  for (int f = 0; f < nf; ++f) b.tf.push_back(t_f_solver(psi, v, f));

  const int d = h.dim, kd = k.dim, ns = b.ns;
  b.elements = zeros(d * kd, nf * ns);
  for (int f = 0; f < nf; ++f) {
    int fe = psi.subgroup()[f];
    for (int s = 0; s < ns; ++s) {
      int se = b.cosets.reps()[s];
      int supp = g.conj(g.inv(se), fe); /* s^-1 f s */
      int col = b.index(f, s);
      for (int u = 0; u < dv; ++u)
        for (int w = 0; w < dv; ++w) {
          const Cyc& val = b.tf[f](u, w);
          if (!val.is_zero())
            b.elements(pidx(supp, pidx(pidx(u, w, dv), s, ns), kd), col) = val;
        }
    }
  }

  require(rank(b.elements) == b.dim(),
          "closed form: the alpha family is linearly dependent");
  AdjointAlgebra a = adjoint_solve(h, k);
  require(a.dim() == b.dim() && same_span(b.elements, a.basis),
          "closed form: the alpha family does not span the solved space");
  return b;
}

DualCaseYD dual_case_yd(const DualCaseBasis& b) {
  const FiniteGroup& g = b.psi.group();
  const HopfData& h = *b.hopf;
  const int d = h.dim, kd = b.alg->dim, n = b.dim();
  const int dv = b.dv, ns = b.ns;

  AdjointAlgebra a = adjoint_solve(h, *b.alg);
  adjoint_yd_structure(a);
  auto [c, cinv] = base_change(b.elements, a.basis);

  DualCaseYD out;
  out.act = zeros(n, d * n);
  for (int f = 0; f < b.nf; ++f) {
    int fe = b.psi.subgroup()[f];
    for (int s = 0; s < ns; ++s) {
      int se = b.cosets.reps()[s];
      int supp = g.conj(g.inv(se), fe);
      int j = b.index(f, s);
      out.act(j, pidx(supp, j, n)) = Cyc(1);
    }
  }
  Mat act_t = cinv * a.act * kron(identity(d), c);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < d * n; ++jj)
      require(out.act(i, jj) == act_t(i, jj),
              "closed form: the action formula disagrees with the solver");

  /* coaction: component at the functional a is the class of T_f (x) sa,
     supported on the conjugate of s^-1 f s by a^-1 */
  Mat coact_gen = a.coact * c;
  for (int f = 0; f < b.nf; ++f) {
    int fe = b.psi.subgroup()[f];
    for (int s = 0; s < ns; ++s) {
      int se = b.cosets.reps()[s];
      int supp = g.conj(g.inv(se), fe);
      int j = b.index(f, s);
      for (int ae = 0; ae < d; ++ae) {
        Mat comp = zeros(d, kd);
        int he = g.conj(g.inv(ae), supp); /* a^-1 (s^-1 f s) a */
        auto [fpe, spe] = b.cosets.decompose(g.mul(se, ae));
        int fp = b.psi.pos_of(fpe);
        Mat moved = rho_inverse(b.psi, b.rep, fp) * b.tf[f] * b.rep.rho[fp];
        int sp = b.cosets.rep_pos(spe);
        for (int u = 0; u < dv; ++u)
          for (int w = 0; w < dv; ++w)
            comp(he, pidx(pidx(u, w, dv), sp, ns)) = moved(u, w);
        Vec flat = flatten_rows(comp);
        Vec gen = Vec::Constant(d * kd, Cyc(0));
        for (int i = 0; i < n; ++i) {
          const Cyc& w = coact_gen(pidx(ae, i, n), j);
          if (!w.is_zero()) gen += w * a.basis.col(i);
        }
        for (int i = 0; i < d * kd; ++i)
          require(flat(i) == gen(i),
                  "closed form: the coaction formula disagrees with the solver");
      }
    }
  }
  out.coact = kron(identity(d), cinv) * coact_gen;
  return out;
}

}  // namespace adjalg
