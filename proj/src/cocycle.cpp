#include "adjalg/cocycle.hpp"

#include <algorithm>

namespace adjalg {

TwoCocycle TwoCocycle::trivial(const FiniteGroup& g, std::vector<int> subgroup_elems) {
  std::sort(subgroup_elems.begin(), subgroup_elems.end());
  int m = static_cast<int>(subgroup_elems.size());
  return TwoCocycle(g, std::move(subgroup_elems), Mat::Constant(m, m, Cyc(1)));
}

TwoCocycle::TwoCocycle(const FiniteGroup& g, std::vector<int> subgroup_elems, Mat values)
    : g_(&g), f_(std::move(subgroup_elems)), values_(std::move(values)) {
  std::sort(f_.begin(), f_.end());
  g.check_subgroup(f_);
  int m = static_cast<int>(f_.size());
  if (values_.rows() != m || values_.cols() != m)
    throw InputError("cocycle value table size does not match subgroup size");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (values_(i, j).is_zero()) throw InputError("cocycle values must be nonzero");
  pos_.assign(g.order(), -1);
  for (int i = 0; i < m; ++i) pos_[f_[i]] = i;
}

int TwoCocycle::pos_of(int x) const {
  int p = pos_[x];
  if (p < 0)
    throw CheckError("element outside the cocycle subgroup: " + g_->label(x));
  return p;
}

const Cyc& TwoCocycle::at(int a, int b) const {
  return values_(pos_of(a), pos_of(b));
}

CocycleReport TwoCocycle::check() const {
  CocycleReport rep{true, true};
  int m = subgroup_size();
  for (int i = 0; i < m && rep.is_cocycle; ++i) {
    for (int j = 0; j < m && rep.is_cocycle; ++j) {
      int ab = g_->mul(f_[i], f_[j]);
      for (int k = 0; k < m; ++k) {
        int bc = g_->mul(f_[j], f_[k]);
        if (at_pos(i, j) * at(ab, f_[k]) != at_pos(j, k) * at(f_[i], bc)) {
          rep.is_cocycle = false;
          break;
        }
      }
    }
  }
  int e = pos_of(g_->identity());
  for (int i = 0; i < m; ++i) {
    if (at_pos(i, e) != Cyc(1) || at_pos(e, i) != Cyc(1)) rep.is_normalized = false;
  }
  for (int i = 0; i < m && rep.is_normalized; ++i) {
    for (int j = 0; j < m; ++j) {
      int gi = pos_of(g_->inv(f_[j]));
      int fi = pos_of(g_->inv(f_[i]));
      if (at_pos(i, j) * at_pos(gi, fi) != Cyc(1)) {
        rep.is_normalized = false;
        break;
      }
    }
  }
  return rep;
}

Cyc TwoCocycle::b(int l, int f) const {
  int lfl = g_->conj(g_->inv(l), f);  /* l^-1 f l */
  return at(l, lfl) / at(f, l);
}

std::vector<std::pair<int, int>> TwoCocycle::conjugation_fiber(int l) const {
  std::vector<std::pair<int, int>> fiber;
  for (int g : f_) fiber.emplace_back(g, g_->conj(g, l));  /* g (g l g^-1) g... g^-1 (g l g^-1) g = l */
  return fiber;
}

std::pair<TwoCocycle, std::vector<Cyc>> TwoCocycle::normalized() const {
  if (!check().is_cocycle) throw CheckError("cannot normalize: not a 2-cocycle");
  int m = subgroup_size();
  int e = pos_of(g_->identity());

  /* step 1: constant rescale kills the unitality defect psi(1,1) */
  Cyc c = at_pos(e, e).inverse();
  Mat vals = values_;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) vals(i, j) *= c;
  std::vector<Cyc> mu(m, c);  /* d(const c) = c */

  {
    TwoCocycle rescaled(*g_, f_, vals);
    if (rescaled.check().is_normalized) return {std::move(rescaled), std::move(mu)};
  }

  /* step 2: after unitality, psi(f,g) psi(g^-1,f^-1) = t(f) t(g) / t(fg)
     with t(f) = psi(f, f^-1), so any mu with mu(f) mu(f^-1) = t(f)^-1
     and mu(1) = 1 symmetrizes.  Pair 1/t on pair representatives and
     take a deterministic square root on involutions. */
  auto t = [&](int i) { return vals(i, pos_of(g_->inv(f_[i]))); };
  std::vector<Cyc> mu2(m, Cyc(1));
  for (int i = 0; i < m; ++i) {
    int j = pos_of(g_->inv(f_[i]));
    if (i == e) continue;
    if (i < j) {
      mu2[i] = t(i).inverse();
      mu2[j] = Cyc(1);
    } else if (i == j) {
      mu2[i] = t(i).inverse().sqrt();
    }
  }
  Mat out = vals;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int ij = pos_of(g_->mul(f_[i], f_[j]));
      out(i, j) = vals(i, j) * mu2[i] * mu2[j] / mu2[ij];
      out(i, j) = out(i, j).shrunk();
    }
  }
  for (int i = 0; i < m; ++i) mu[i] = (mu[i] * mu2[i]).shrunk();
  TwoCocycle result(*g_, f_, std::move(out));
  auto rep = result.check();
  if (!rep.is_cocycle || !rep.is_normalized)
    throw CheckError("normalization failed to produce a normalized cocycle");
  return {std::move(result), std::move(mu)};
}

}  // namespace adjalg
