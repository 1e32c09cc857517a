/**
 * @file adjalg_cli.cpp
 * @brief Command line front end for the adjalg library.
 *
 * Subcommands:
 *
 *   adjoint            solve the adjoint algebra S(H, K) and write a
 *                      report with basis, structure tensors and check
 *                      verdicts
 *   classfun           dimensions and a basis of the space of class
 *                      functions, compared against the combinatorial
 *                      model when one applies
 *   verify             run the full check battery, either on fresh
 *                      inputs, on a previously written adjoint report
 *                      (--report), or on the bundled instance set
 *                      (--bundled)
 *   normalize-cocycle  replace a two-cocycle by a normalized
 *                      cohomologous one and record the coboundary
 *   group-info         order, classes and coset data of a group file
 *
 * Input selection is shared by adjoint, classfun and verify:
 *
 *   --mode group       H = kG, K the twisted group algebra of the
 *                      cocycle's subgroup (needs --group, --cocycle)
 *   --mode dual-group  H = k^G, K the induced matrix comodule algebra
 *                      of (F, psi, V) (additionally needs --rep)
 *   --mode generic     H and K read verbatim (needs --hopf, --algebra)
 *
 * Reports embed their inputs, so a report file alone is enough to
 * re-run every check.  All output is canonical: two runs on the same
 * input produce byte-identical files.
 *
 * Exit codes: 0 every check passed, 1 a mathematical check failed,
 * 2 malformed input or usage.
 */

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjalg/adjoint.hpp"
#include "adjalg/classfun.hpp"
#include "adjalg/closedform.hpp"
#include "adjalg/cocycle.hpp"
#include "adjalg/comodalg.hpp"
#include "adjalg/cyc.hpp"
#include "adjalg/group.hpp"
#include "adjalg/hopf.hpp"
#include "adjalg/io.hpp"
#include "adjalg/linalg.hpp"

#ifndef ADJALG_FIXTURES_DIR
#define ADJALG_FIXTURES_DIR "fixtures"
#endif

using namespace adjalg;

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw CheckError(msg);
}

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw InputError("--subgroup: no labels given");
  return out;
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("report file: missing key \"") + key + "\"");
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const Json& x = need(j, key);
  if (!x.is_number_integer())
    throw InputError(std::string("report file: \"") + key +
                     "\" must be an integer");
  return x.get<int>();
}

std::string need_string(const Json& j, const char* key) {
  const Json& x = need(j, key);
  if (!x.is_string())
    throw InputError(std::string("report file: \"") + key +
                     "\" must be a string");
  return x.get<std::string>();
}

/* ----- command line options, shared across subcommands ----- */

struct Options {
  std::string group_file;
  std::string subgroup_csv;
  std::string cocycle_file;
  std::string rep_file;
  std::string hopf_file;
  std::string algebra_file;
  std::string mode = "group";
  std::string out_file;
  std::string check_level = "full";
  std::string report_file;
  std::string fixtures_dir = ADJALG_FIXTURES_DIR;
  bool bundled = false;
};

/* The JSON report goes to --out when given, else to stdout; progress
   lines switch to stderr in the latter case so the stream stays clean. */
std::ostream& human(const Options& o) {
  return o.out_file.empty() ? std::cerr : std::cout;
}

void emit_report(const Options& o, const Json& r) {
  if (o.out_file.empty())
    std::cout << dump_canonical(r);
  else
    save_json_file(o.out_file, r);
}

/* ----- session: the resolved pair (H, K) plus its provenance ----- */

struct Session {
  std::string mode;
  std::optional<FiniteGroup> g;
  std::optional<TwoCocycle> psi;
  std::optional<ProjectiveRep> rep;
  std::unique_ptr<HopfData> h;
  std::unique_ptr<ComoduleAlgebra> k;
  Json inputs;
};

std::unique_ptr<Session> session_from_parts(const std::string& mode,
                                            const Json* group_j,
                                            const Json* cocycle_j,
                                            const Json* rep_j,
                                            const Json* hopf_j,
                                            const Json* algebra_j,
                                            const std::string& subgroup_csv) {
  auto s = std::make_unique<Session>();
  s->mode = mode;
  s->inputs = Json::object();
  s->inputs["mode"] = mode;

  if (mode == "generic") {
    if (!hopf_j || !algebra_j)
      throw InputError("generic mode needs --hopf and --algebra");
    s->h = std::make_unique<HopfData>(hopf_from_json(*hopf_j));
    s->k = std::make_unique<ComoduleAlgebra>(
        comodule_algebra_from_json(*algebra_j, *s->h));
    s->inputs["hopf"] = hopf_to_json(*s->h);
    s->inputs["algebra"] = comodule_algebra_to_json(*s->k);
    return s;
  }
  if (mode != "group" && mode != "dual-group")
    throw InputError("unknown mode: " + mode);
  if (!group_j || !cocycle_j)
    throw InputError(mode + " mode needs --group and --cocycle");

  s->g.emplace(group_from_json(*group_j));
  s->psi.emplace(cocycle_from_json(*cocycle_j, *s->g));
  if (!subgroup_csv.empty()) {
    std::vector<int> want = s->g->subgroup(split_labels(subgroup_csv));
    if (want != s->psi->subgroup())
      throw InputError("--subgroup does not match the cocycle's subgroup");
  }
  CocycleReport cr = s->psi->check();
  if (!cr.is_cocycle)
    throw CheckError("cocycle file: the two-cocycle identity fails");
  if (!cr.is_normalized)
    throw CheckError(
        "cocycle file: not normalized; run normalize-cocycle first");
  s->inputs["group"] = group_to_json(*s->g);
  s->inputs["cocycle"] = cocycle_to_json(*s->psi);

  if (mode == "group") {
    s->h = std::make_unique<HopfData>(group_hopf(*s->g));
    s->k = std::make_unique<ComoduleAlgebra>(
        twisted_group_comodule_algebra(*s->h, *s->psi));
  } else {
    if (!rep_j) throw InputError("dual-group mode needs --rep");
    s->rep.emplace(rep_from_json(*rep_j, *s->g, s->psi->subgroup()));
    if (!simple_check(*s->psi, *s->rep))
      throw CheckError("representation file: the representation is not simple");
    s->inputs["representation"] = rep_to_json(*s->rep, *s->psi);
    s->h = std::make_unique<HopfData>(dual_group_hopf(*s->g));
    s->k = std::make_unique<ComoduleAlgebra>(
        dual_group_comodule_algebra(*s->h, *s->psi, *s->rep));
  }
  return s;
}

std::unique_ptr<Session> make_session(const Options& o) {
  Json gj, cj, rj, hj, aj;
  const Json *gp = nullptr, *cp = nullptr, *rp = nullptr, *hp = nullptr,
             *ap = nullptr;
  if (!o.group_file.empty()) gj = load_json_file(o.group_file), gp = &gj;
  if (!o.cocycle_file.empty()) cj = load_json_file(o.cocycle_file), cp = &cj;
  if (!o.rep_file.empty()) rj = load_json_file(o.rep_file), rp = &rj;
  if (!o.hopf_file.empty()) hj = load_json_file(o.hopf_file), hp = &hj;
  if (!o.algebra_file.empty()) aj = load_json_file(o.algebra_file), ap = &aj;
  return session_from_parts(o.mode, gp, cp, rp, hp, ap, o.subgroup_csv);
}

std::unique_ptr<Session> session_from_inputs(const Json& in) {
  std::string mode = need_string(in, "mode");
  const Json *gp = nullptr, *cp = nullptr, *rp = nullptr, *hp = nullptr,
             *ap = nullptr;
  if (in.contains("group")) gp = &in.at("group");
  if (in.contains("cocycle")) cp = &in.at("cocycle");
  if (in.contains("representation")) rp = &in.at("representation");
  if (in.contains("hopf")) hp = &in.at("hopf");
  if (in.contains("algebra")) ap = &in.at("algebra");
  return session_from_parts(mode, gp, cp, rp, hp, ap, "");
}

/* ----- the reported object: basis plus structure tensors ----- */

struct ReportView {
  int n = 0;
  Mat basis;    /* (dim H * dim K) x n */
  Mat act;      /* n x (dim H * n) */
  Mat coact;    /* (dim H * n) x n */
  Mat product;  /* n x n^2 */
  Vec unit;     /* n */
  std::vector<std::string> names;
};

/* Coordinates of each column of `to` in the column span of `from`. */
Mat coord_change(const Mat& from, const Mat& to) {
  Mat c = zeros(static_cast<int>(from.cols()), static_cast<int>(to.cols()));
  for (int j = 0; j < to.cols(); ++j) {
    std::optional<Vec> x = coordinates(from, to.col(j));
    expect(x.has_value(), "element " + std::to_string(j) +
                              " lies outside the solved space");
    c.col(j) = *x;
  }
  return c;
}

ReportView build_view(const Session& s) {
  const HopfData& h = *s.h;
  AdjointAlgebra a = adjoint_solve(h, *s.k);
  adjoint_yd_structure(a);
  adjoint_product(a);

  ReportView v;
  if (s.mode == "group") {
    GroupCaseBasis b = group_case_basis(h, *s.psi, *s.k);
    GroupCaseYD yd = group_case_yd(b);
    v.n = b.dim();
    v.basis = b.elements;
    v.act = yd.act;
    v.coact = yd.coact;
    Mat c = coord_change(a.basis, b.elements);
    std::optional<Mat> ci = inverse(c);
    expect(ci.has_value(), "change of basis is singular");
    v.product = *ci * a.product * kron(c, c);
    v.unit = *ci * a.unit;
    const FiniteGroup& g = *s.g;
    v.names.resize(v.n);
    for (int sp = 0; sp < b.ns; ++sp)
      for (int lp = 0; lp < b.nf; ++lp)
        v.names[b.index(sp, lp)] = "alpha[" + g.label(b.cosets.reps()[sp]) +
                                   "," + g.label(b.cosets.subgroup()[lp]) +
                                   "]";
  } else if (s.mode == "dual-group") {
    DualCaseBasis b = dual_case_basis(h, *s.psi, *s.rep, *s.k);
    DualCaseYD yd = dual_case_yd(b);
    v.n = b.dim();
    v.basis = b.elements;
    v.act = yd.act;
    v.coact = yd.coact;
    Mat c = coord_change(a.basis, b.elements);
    std::optional<Mat> ci = inverse(c);
    expect(ci.has_value(), "change of basis is singular");
    v.product = *ci * a.product * kron(c, c);
    v.unit = *ci * a.unit;
    const FiniteGroup& g = *s.g;
    v.names.resize(v.n);
    for (int fp = 0; fp < b.nf; ++fp)
      for (int sp = 0; sp < b.ns; ++sp)
        v.names[b.index(fp, sp)] = "alpha[(" +
                                   g.label(b.cosets.subgroup()[fp]) + "," +
                                   g.label(b.cosets.reps()[sp]) + ")]";
  } else {
    v.n = a.dim();
    v.basis = a.basis;
    v.act = a.act;
    v.coact = a.coact;
    v.product = a.product;
    v.unit = a.unit;
    for (int j = 0; j < v.n; ++j)
      v.names.push_back("alpha[" + std::to_string(j) + "]");
  }
  return v;
}

Json report_json(const std::string& command, const Session& s,
                 const ReportView& v) {
  const int hd = s.h->dim, kd = s.k->dim;
  Json r;
  r["command"] = command;
  r["mode"] = s.mode;
  r["inputs"] = s.inputs;
  r["dim"] = v.n;
  r["basis_names"] = v.names;
  Json bl = Json::array();
  for (int j = 0; j < v.n; ++j) {
    Mat m = zeros(hd, kd);
    for (int w = 0; w < hd; ++w)
      for (int p = 0; p < kd; ++p) m(w, p) = v.basis(pidx(w, p, kd), j);
    bl.push_back(matrix_to_json(m));
  }
  r["basis"] = bl;
  r["action"] = matrix_to_triples(v.act);
  r["coaction"] = matrix_to_triples(v.coact);
  r["product"] = matrix_to_triples(v.product);
  r["unit"] = vector_to_json(v.unit);
  return r;
}

ReportView view_from_report(const Json& r, int hd, int kd) {
  ReportView v;
  v.n = need_int(r, "dim");
  if (v.n < 0) throw InputError("report file: negative dimension");
  const Json& bl = need(r, "basis");
  if (!bl.is_array() || static_cast<int>(bl.size()) != v.n)
    throw InputError("report file: basis must list dim matrices");
  v.basis = zeros(hd * kd, v.n);
  for (int j = 0; j < v.n; ++j) {
    Mat m = matrix_from_json(bl[j]);
    if (m.rows() != hd || m.cols() != kd)
      throw InputError("report file: basis matrix " + std::to_string(j) +
                       " has the wrong shape");
    for (int w = 0; w < hd; ++w)
      for (int p = 0; p < kd; ++p) v.basis(pidx(w, p, kd), j) = m(w, p);
  }
  v.act = matrix_from_triples(need(r, "action"), v.n, hd * v.n);
  v.coact = matrix_from_triples(need(r, "coaction"), hd * v.n, v.n);
  v.product = matrix_from_triples(need(r, "product"), v.n, v.n * v.n);
  v.unit = vector_from_json(need(r, "unit"));
  if (static_cast<int>(v.unit.size()) != v.n)
    throw InputError("report file: unit has the wrong length");
  const Json& names = need(r, "basis_names");
  if (!names.is_array() || static_cast<int>(names.size()) != v.n)
    throw InputError("report file: basis_names must list dim strings");
  for (const Json& x : names) {
    if (!x.is_string())
      throw InputError("report file: basis_names must list dim strings");
    v.names.push_back(x.get<std::string>());
  }
  return v;
}

/* ----- the check battery ----- */

struct RowResult {
  std::string status; /* pass, fail or skipped */
  std::string note;
};

using CheckMatrix = std::vector<std::pair<std::string, RowResult>>;

bool all_pass(const CheckMatrix& m) {
  return std::none_of(m.begin(), m.end(),
                      [](const auto& r) { return r.second.status == "fail"; });
}

Json checks_to_json(const CheckMatrix& m) {
  Json c = Json::object();
  for (const auto& [name, r] : m) {
    Json e;
    e["status"] = r.status;
    if (!r.note.empty()) e["note"] = r.note;
    c[name] = e;
  }
  return c;
}

void print_rows(std::ostream& os, const CheckMatrix& m) {
  for (const auto& [name, r] : m) {
    os << "  " << name << ": " << r.status;
    if (r.status != "pass" && !r.note.empty()) os << " (" << r.note << ")";
    os << "\n";
  }
}

/* Every reported element must satisfy the defining relation
   beta(k_(-1) h) k_(0) = k beta(h), the product table must agree with
   the convolution product of the elements, and the unit row must give
   eps (x) 1. */
std::string check_elements(const Session& s, const ReportView& v) {
  const HopfData& h = *s.h;
  const ComoduleAlgebra& k = *s.k;
  const int hd = h.dim, kd = k.dim, n = v.n;

  std::vector<Mat> lh(hd), rk(kd), lk(kd);
  for (int u = 0; u < hd; ++u) {
    lh[u] = zeros(hd, hd);
    for (int hh = 0; hh < hd; ++hh)
      for (int w = 0; w < hd; ++w) lh[u](hh, w) = h.mult(w, pidx(u, hh, hd));
  }
  for (int t = 0; t < kd; ++t) {
    rk[t] = zeros(kd, kd);
    lk[t] = zeros(kd, kd);
    for (int p = 0; p < kd; ++p)
      for (int q = 0; q < kd; ++q) {
        rk[t](p, q) = k.mult(q, pidx(p, t, kd));
        lk[t](p, q) = k.mult(q, pidx(t, p, kd));
      }
  }

  for (int j = 0; j < n; ++j) {
    Mat b = zeros(hd, kd);
    for (int w = 0; w < hd; ++w)
      for (int p = 0; p < kd; ++p) b(w, p) = v.basis(pidx(w, p, kd), j);
    for (int t = 0; t < kd; ++t) {
      Mat lhs = zeros(hd, kd);
      for (const auto& [fl, c] : sparse_col(k.coact, t)) {
        int u = fl / kd, kk = fl % kd;
        lhs += (lh[u] * b * rk[kk]) * c;
      }
      Mat rhs = b * lk[t];
      expect(mat_eq(lhs, rhs), "element " + std::to_string(j) +
                                   " violates the defining relation at k = " +
                                   k.labels[t]);
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec got = v.basis * v.product.col(pidx(i, j, n));
      Vec want = Vec::Constant(hd * kd, Cyc(0));
      for (int hh = 0; hh < hd; ++hh)
        for (const auto& [pr, c] : sparse_col(h.comult, hh)) {
          int h1 = pr / hd, h2 = pr % hd;
          for (int p = 0; p < kd; ++p) {
            const Cyc& x = v.basis(pidx(h1, p, kd), i);
            if (x.is_zero()) continue;
            for (int q = 0; q < kd; ++q) {
              const Cyc& y = v.basis(pidx(h2, q, kd), j);
              if (y.is_zero()) continue;
              for (const auto& [r2, c2] : sparse_col(k.mult, pidx(p, q, kd)))
                want(pidx(hh, r2, kd)) += c * x * y * c2;
            }
          }
        }
      expect(vec_eq(got, want), "product entry (" + std::to_string(i) + "," +
                                    std::to_string(j) +
                                    ") differs from the actual product");
    }

  Vec got = v.basis * v.unit;
  Vec want = Vec::Constant(hd * kd, Cyc(0));
  for (int hh = 0; hh < hd; ++hh)
    for (int p = 0; p < kd; ++p) want(pidx(hh, p, kd)) = h.counit(0, hh) * k.unit(p);
  expect(vec_eq(got, want), "unit coefficients do not give eps (x) 1");

  return "defining relation, product table and unit verified";
}

CheckMatrix run_battery(const Session& s, const ReportView& v,
                        const std::string& level) {
  const HopfData& h = *s.h;
  const ComoduleAlgebra& k = *s.k;
  const int hd = h.dim, n = v.n;
  const bool full = level == "full";

  AdjointAlgebra a = adjoint_solve(h, k);
  adjoint_yd_structure(a);
  adjoint_product(a);

  CheckMatrix m;
  auto row = [&m](const std::string& name, bool enabled,
                  const std::string& why, auto&& body) {
    if (!enabled) {
      m.emplace_back(name, RowResult{"skipped", why});
      return;
    }
    try {
      m.emplace_back(name, RowResult{"pass", body()});
    } catch (const CheckError& e) {
      m.emplace_back(name, RowResult{"fail", e.what()});
    }
  };
  auto mode_or_level = [&](const std::string& want) {
    if (s.mode != want) return "only meaningful in " + want + " mode";
    return std::string("skipped at fast check level");
  };

  row("yd-module", true, "", [&]() -> std::string {
    YdReport yr = yd_check(YDModule{&h, n, v.act, v.coact});
    expect(yr.module_ok, "module axioms fail");
    expect(yr.comodule_ok, "comodule axioms fail");
    if (!yr.compat_ok) {
      std::string w = "action and coaction are incompatible";
      if (!yr.compat_failures.empty())
        w += " first at (" + std::to_string(yr.compat_failures[0].first) +
             "," + std::to_string(yr.compat_failures[0].second) + ")";
      throw CheckError(w);
    }
    return "module, comodule and compatibility laws hold";
  });

  row("sk-elements", true, "",
      [&]() -> std::string { return check_elements(s, v); });

  row("th11", full, "skipped at fast check level", [&]() -> std::string {
    EquivariantBimodule reg = regular_bimodule(k);
    AdjointAlgebra man;
    man.hopf = &h;
    man.alg = &k;
    man.target = reg.bimodule();
    man.target_coact = reg.coact;
    man.target_is_alg = true;
    man.basis = v.basis;
    man.act = v.act;
    man.coact = v.coact;
    check_coaction_identity(man);
    return "coaction identity verified on every basis triple";
  });

  row("basis", true, "", [&]() -> std::string {
    expect(rank(v.basis) == n, "reported family is linearly dependent");
    expect(a.dim() == n, "solved dimension " + std::to_string(a.dim()) +
                             " differs from the reported " +
                             std::to_string(n));
    expect(same_span(a.basis, v.basis),
           "reported span differs from the solved space");
    return "reported family is a basis of the solved space";
  });

  auto yetter = [&]() -> std::string {
    expect(a.dim() == n, "solved dimension " + std::to_string(a.dim()) +
                             " differs from the reported " +
                             std::to_string(n));
    Mat c = coord_change(a.basis, v.basis);
    std::optional<Mat> ci = inverse(c);
    expect(ci.has_value(), "change of basis is singular");
    expect(mat_eq(v.act, *ci * a.act * kron(identity(hd), c)),
           "action tensor differs from the solved one");
    expect(mat_eq(v.coact, kron(identity(hd), *ci) * a.coact * c),
           "coaction tensor differs from the solved one");
    return "closed-form tensors transport to the solved ones";
  };

  row("yetter-struct-group", full && s.mode == "group",
      mode_or_level("group"), yetter);

  row("1dim-s", s.mode == "dual-group",
      "only meaningful in dual-group mode", [&]() -> std::string {
        for (int f = 0; f < s.psi->subgroup_size(); ++f)
          t_f_solver(*s.psi, *s.rep, f);
        return "every intertwiner space is one-dimensional";
      });

  row("yetter-struct-dualgroup", full && s.mode == "dual-group",
      mode_or_level("dual-group"), yetter);

  row("scalars-phi", s.mode != "generic", "no scalar model in generic mode",
      [&]() -> std::string {
        if (s.mode == "group") {
          int model = c_psi_space(*s.psi).dim();
          int cf = class_functions(h, k).dim();
          expect(cf == model, "class function dimension " +
                                  std::to_string(cf) +
                                  " differs from the scalar model " +
                                  std::to_string(model));
          return "dimension " + std::to_string(cf) +
                 " matches the scalar model";
        }
        DualCaseBasis b = dual_case_basis(h, *s.psi, *s.rep, k);
        TwoCocycle triv = TwoCocycle::trivial(*s.g, {s.g->identity()});
        ProjectiveRep triv_rep{std::vector<Mat>(1, identity(1))};
        ComoduleAlgebra kreg = dual_group_comodule_algebra(h, triv, triv_rep);
        DualCaseBasis breg = dual_case_basis(h, triv, triv_rep, kreg);
        DualCFModel dm = cf_dual_model(b, breg);
        expect(dm.hom.dim() == b.ns,
               "morphism dimension " + std::to_string(dm.hom.dim()) +
                   " differs from the coset count " + std::to_string(b.ns));
        int cf = class_functions(h, k).dim();
        expect(cf == dm.hom.dim(),
               "hom into the adjoint of H gives " + std::to_string(cf) +
                   " but the regular model gives " +
                   std::to_string(dm.hom.dim()));
        return "dimension " + std::to_string(dm.hom.dim()) +
               " matches the coset count";
      });

  row("fpdim", true, "", [&]() -> std::string {
    expect(n == hd, "dimension " + std::to_string(n) +
                        " differs from dim H = " + std::to_string(hd));
    return "adjoint algebra dimension equals dim H";
  });

  return m;
}

/* ----- subcommands ----- */

int finish_checks(const Options& o, Json r, const CheckMatrix& m) {
  r["checks"] = checks_to_json(m);
  std::ostream& hs = human(o);
  print_rows(hs, m);
  bool ok = all_pass(m);
  hs << (ok ? "all checks passed" : "CHECK FAILURES") << "\n";
  emit_report(o, r);
  return ok ? 0 : 1;
}

int cmd_adjoint(const Options& o) {
  std::unique_ptr<Session> s = make_session(o);
  ReportView v = build_view(*s);
  CheckMatrix m = run_battery(*s, v, o.check_level);
  return finish_checks(o, report_json("adjoint", *s, v), m);
}

int cmd_classfun(const Options& o) {
  std::unique_ptr<Session> s = make_session(o);
  const HopfData& h = *s->h;
  const ComoduleAlgebra& k = *s->k;

  YDMorphismSpace cf = class_functions(h, k);
  std::optional<int> model;
  if (s->mode == "group") {
    model = c_psi_space(*s->psi).dim();
  } else if (s->mode == "dual-group") {
    model = dual_case_basis(h, *s->psi, *s->rep, k).ns;
  }

  Json r;
  r["command"] = "classfun";
  r["mode"] = s->mode;
  r["inputs"] = s->inputs;
  r["dim_cf"] = cf.dim();
  if (model) {
    r["dim_model"] = *model;
    r["match"] = cf.dim() == *model;
  } else {
    r["dim_model"] = nullptr;
    r["match"] = nullptr;
  }
  Json bl = Json::array();
  for (const Mat& b : cf.basis) bl.push_back(matrix_to_json(b));
  r["basis"] = bl;

  std::ostream& hs = human(o);
  hs << "class functions: " << cf.dim() << "\n";
  if (model) {
    hs << "model dimension: " << *model << "\n";
    hs << "match: " << (cf.dim() == *model ? "yes" : "no") << "\n";
  }
  if (s->mode == "group") {
    GTClassFunctions gt = group_theoretical_cf(h, *s->psi, k);
    Json g;
    g["dim_end"] = gt.dim_end;
    g["dim_c1"] = gt.dim_c1;
    g["dim_cpsi"] = gt.dim_cpsi;
    g["final_match"] = gt.final_match;
    r["group_theoretical"] = g;
    hs << "group theoretical: end=" << gt.dim_end << " c1=" << gt.dim_c1
       << " cpsi=" << gt.dim_cpsi
       << (gt.final_match ? " (all equal)" : " (dimensions differ)") << "\n";
  }
  emit_report(o, r);
  return (model && cf.dim() != *model) ? 1 : 0;
}

int cmd_verify_one(const Options& o) {
  if (!o.report_file.empty()) {
    Json rj = load_json_file(o.report_file);
    if (need_string(rj, "command") != "adjoint")
      throw InputError("verify --report expects an adjoint report");
    std::unique_ptr<Session> s = session_from_inputs(need(rj, "inputs"));
    ReportView v = view_from_report(rj, s->h->dim, s->k->dim);
    CheckMatrix m = run_battery(*s, v, o.check_level);
    Json r;
    r["command"] = "verify";
    r["mode"] = s->mode;
    r["inputs"] = s->inputs;
    r["dim"] = v.n;
    return finish_checks(o, r, m);
  }
  if (o.group_file.empty() && o.hopf_file.empty())
    throw InputError("nothing to verify: give inputs, --report or --bundled");
  std::unique_ptr<Session> s = make_session(o);
  ReportView v = build_view(*s);
  CheckMatrix m = run_battery(*s, v, o.check_level);
  Json r;
  r["command"] = "verify";
  r["mode"] = s->mode;
  r["inputs"] = s->inputs;
  r["dim"] = v.n;
  return finish_checks(o, r, m);
}

int cmd_verify_bundled(const Options& o) {
  struct Instance {
    const char* name;
    const char* mode;
    const char* grp;
    const char* coc;
    const char* rep;
  };
  static const Instance table[] = {
      {"c2-group-trivial", "group", "c2.json", "c2_trivial.json", ""},
      {"c2-group-twisted", "group", "c2.json", "c2_twisted.json", ""},
      {"c2-dual-trivial", "dual-group", "c2.json", "c2_trivial.json",
       "c2_trivial_rep.json"},
      {"c2-dual-twisted", "dual-group", "c2.json", "c2_twisted.json",
       "c2_twisted_rep.json"},
      {"c4-group-trivial", "group", "c4.json", "c4_trivial.json", ""},
      {"c4-group-twisted", "group", "c4.json", "c4_twisted.json", ""},
      {"c4-dual-trivial", "dual-group", "c4.json", "c4_trivial.json",
       "c4_trivial_rep.json"},
      {"c4-dual-twisted", "dual-group", "c4.json", "c4_twisted.json",
       "c4_twisted_rep.json"},
      {"klein-group-trivial", "group", "klein.json", "klein_trivial.json",
       ""},
      {"klein-group-twisted", "group", "klein.json", "klein_twisted.json",
       ""},
      {"klein-dual-trivial", "dual-group", "klein.json",
       "klein_trivial.json", "klein_trivial_rep.json"},
      {"klein-dual-twisted", "dual-group", "klein.json",
       "klein_twisted.json", "klein_twisted_rep.json"},
      {"s3-group-trivial", "group", "s3.json", "s3_trivial.json", ""},
      {"s3-group-twisted", "group", "s3.json", "s3_twisted.json", ""},
      {"s3-dual-trivial", "dual-group", "s3.json", "s3_trivial.json",
       "s3_trivial_rep.json"},
      {"s3-dual-twisted", "dual-group", "s3.json", "s3_twisted.json",
       "s3_twisted_rep.json"},
      {"d4-group-trivial", "group", "d4.json", "d4_trivial.json", ""},
      {"d4-group-twisted", "group", "d4.json", "d4_twisted.json", ""},
      {"d4-dual-trivial", "dual-group", "d4.json", "d4_trivial.json",
       "d4_trivial_rep.json"},
      {"d4-dual-twisted", "dual-group", "d4.json", "d4_twisted.json",
       "d4_twisted_rep.json"},
      {"q8-group-trivial", "group", "q8.json", "q8_trivial.json", ""},
      {"q8-group-twisted", "group", "q8.json", "q8_twisted.json", ""},
      {"q8-dual-trivial", "dual-group", "q8.json", "q8_trivial.json",
       "q8_trivial_rep.json"},
      {"q8-dual-twisted", "dual-group", "q8.json", "q8_twisted.json",
       "q8_twisted_rep.json"},
  };

  std::ostream& hs = human(o);
  Json insts = Json::array();
  bool ok = true;
  for (const Instance& bi : table) {
    Options oi;
    oi.mode = bi.mode;
    oi.group_file = o.fixtures_dir + "/" + bi.grp;
    oi.cocycle_file = o.fixtures_dir + "/" + bi.coc;
    if (*bi.rep) oi.rep_file = o.fixtures_dir + "/" + bi.rep;
    oi.check_level = o.check_level;
    std::unique_ptr<Session> s = make_session(oi);
    ReportView v = build_view(*s);
    CheckMatrix m = run_battery(*s, v, o.check_level);
    hs << "== " << bi.name << " ==\n";
    print_rows(hs, m);
    ok = ok && all_pass(m);
    Json e;
    e["name"] = bi.name;
    e["mode"] = bi.mode;
    e["dim"] = v.n;
    e["checks"] = checks_to_json(m);
    insts.push_back(e);
  }
  Json r;
  r["command"] = "verify";
  r["bundled"] = true;
  r["instances"] = insts;
  hs << (ok ? "all instances passed" : "INSTANCE FAILURES") << "\n";
  emit_report(o, r);
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
  if (o.bundled) return cmd_verify_bundled(o);
  return cmd_verify_one(o);
}

int cmd_normalize(const Options& o) {
  if (o.group_file.empty() || o.cocycle_file.empty())
    throw InputError("normalize-cocycle needs --group and --cocycle");
  FiniteGroup g = group_from_json(load_json_file(o.group_file));
  TwoCocycle psi = cocycle_from_json(load_json_file(o.cocycle_file), g);
  CocycleReport before = psi.check();
  if (!before.is_cocycle)
    throw CheckError("cocycle file: the two-cocycle identity fails");
  auto [npsi, mu] = psi.normalized();
  CocycleReport after = npsi.check();
  if (!after.is_cocycle || !after.is_normalized)
    throw CheckError("normalization produced an invalid cocycle");
  Json r = cocycle_to_json(npsi);
  Json cb = Json::array();
  for (const Cyc& c : mu) cb.push_back(scalar_to_json(c));
  r["coboundary"] = cb;
  human(o) << (before.is_normalized ? "already normalized"
                                    : "normalized cocycle written")
           << "\n";
  emit_report(o, r);
  return 0;
}

int cmd_group_info(const Options& o) {
  if (o.group_file.empty()) throw InputError("group-info needs --group");
  FiniteGroup g = group_from_json(load_json_file(o.group_file));
  Json r;
  r["order"] = g.order();
  r["abelian"] = g.is_abelian();
  r["labels"] = g.labels();
  Json cls = Json::array();
  for (const std::vector<int>& c : g.conjugacy_classes()) {
    Json one = Json::array();
    for (int x : c) one.push_back(g.label(x));
    cls.push_back(one);
  }
  r["classes"] = cls;
  if (!o.subgroup_csv.empty()) {
    std::vector<int> elems = g.subgroup(split_labels(o.subgroup_csv));
    CosetDecomposition cd(g, elems);
    Json sub;
    Json el = Json::array();
    for (int x : elems) el.push_back(g.label(x));
    sub["elements"] = el;
    sub["index"] = cd.num_cosets();
    Json reps = Json::array();
    for (int x : cd.reps()) reps.push_back(g.label(x));
    sub["coset_reps"] = reps;
    r["subgroup"] = sub;
  }
  emit_report(o, r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact adjoint algebras and class functions of comodule "
               "algebras over finite dimensional Hopf algebras"};
  app.require_subcommand(1);

  Options o;
  auto add_inputs = [&o](CLI::App* c) {
    c->add_option("--group", o.group_file, "group file (labels + table)");
    c->add_option("--subgroup", o.subgroup_csv,
                  "comma separated labels, checked against the cocycle");
    c->add_option("--cocycle", o.cocycle_file, "two-cocycle file");
    c->add_option("--rep", o.rep_file,
                  "projective representation file (dual-group mode)");
    c->add_option("--hopf", o.hopf_file, "Hopf algebra file (generic mode)");
    c->add_option("--algebra", o.algebra_file,
                  "comodule algebra file (generic mode)");
    c->add_option("--mode", o.mode, "group, dual-group or generic")
        ->check(CLI::IsMember({"group", "dual-group", "generic"}));
    c->add_option("--out", o.out_file, "write the JSON report here");
  };

  CLI::App* c_adj = app.add_subcommand(
      "adjoint", "solve the adjoint algebra and write a report");
  add_inputs(c_adj);
  c_adj->add_option("--check-level", o.check_level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  CLI::App* c_cf = app.add_subcommand(
      "classfun", "compute the space of class functions");
  add_inputs(c_cf);

  CLI::App* c_ver = app.add_subcommand(
      "verify", "run the check battery fresh, on a report, or bundled");
  add_inputs(c_ver);
  c_ver->add_option("--check-level", o.check_level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));
  c_ver->add_option("--report", o.report_file,
                    "re-check a previously written adjoint report");
  c_ver->add_flag("--bundled", o.bundled, "verify the bundled instances");
  c_ver->add_option("--fixtures", o.fixtures_dir,
                    "fixture directory for --bundled");

  CLI::App* c_nc = app.add_subcommand(
      "normalize-cocycle", "write a normalized cohomologous cocycle");
  c_nc->add_option("--group", o.group_file, "group file");
  c_nc->add_option("--cocycle", o.cocycle_file, "two-cocycle file");
  c_nc->add_option("--out", o.out_file, "write the result here");

  CLI::App* c_gi = app.add_subcommand(
      "group-info", "order, classes and coset data of a group file");
  c_gi->add_option("--group", o.group_file, "group file");
  c_gi->add_option("--subgroup", o.subgroup_csv,
                   "comma separated labels of a subgroup");
  c_gi->add_option("--out", o.out_file, "write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_adj)) return cmd_adjoint(o);
    if (app.got_subcommand(c_cf)) return cmd_classfun(o);
    if (app.got_subcommand(c_ver)) return cmd_verify(o);
    if (app.got_subcommand(c_nc)) return cmd_normalize(o);
    if (app.got_subcommand(c_gi)) return cmd_group_info(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
