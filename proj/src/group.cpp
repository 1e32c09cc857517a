#include "adjalg/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adjalg {

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         std::vector<std::vector<int>> cayley)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      cayley_(std::move(cayley)) {
  if (n_ == 0) throw InputError("group must be nonempty");
  if (static_cast<int>(cayley_.size()) != n_)
    throw InputError("cayley table row count does not match label count");
  for (const auto& row : cayley_) {
    if (static_cast<int>(row.size()) != n_)
      throw InputError("cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n_) throw InputError("cayley table entry out of range");
  }
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n_)
      throw InputError("duplicate element labels");
  }
  e_ = -1;
  for (int c = 0; c < n_; ++c) {
    bool left_id = true, right_id = true;
    for (int x = 0; x < n_; ++x) {
      if (cayley_[c][x] != x) left_id = false;
      if (cayley_[x][c] != x) right_id = false;
    }
    if (left_id && right_id) { e_ = c; break; }
  }
  if (e_ < 0) throw InputError("cayley table has no identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (cayley_[a][b] == e_ && cayley_[b][a] == e_) { inv_[a] = b; break; }
    }
    if (inv_[a] < 0) throw InputError("element without inverse: " + labels_[a]);
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
          throw InputError("cayley table is not associative");
}

FiniteGroup FiniteGroup::from_permutations(
    int degree, const std::vector<std::vector<int>>& generators) {
  if (degree <= 0) throw InputError("permutation degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw InputError("generator length does not match degree");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v]) throw InputError("not a permutation");
      hit[v] = true;
    }
  }
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<int>> closure{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        std::vector<int> prod(degree);
        for (int i = 0; i < degree; ++i) prod[i] = w[g[i]];  /* w after g */
        if (closure.insert(prod).second) next.push_back(prod);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> elems(closure.begin(), closure.end());
  /* std::set already sorted the words lexicographically */
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
      table[a][b] = pos.at(prod);
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "(";
    for (int v : elems[i]) s += std::to_string(v) + ",";
    s.back() = ')';
    labels[i] = s;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

int FiniteGroup::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  throw InputError("unknown group element label: " + label);
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n_, false);
  for (int x = 0; x < n_; ++x) {
    if (seen[x]) continue;
    std::set<int> orbit;
    for (int g = 0; g < n_; ++g) orbit.insert(conj(g, x));
    classes.emplace_back(orbit.begin(), orbit.end());
    for (int y : classes.back()) seen[y] = true;
  }
  return classes;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (cayley_[a][b] != cayley_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::subgroup(const std::vector<std::string>& labels) const {
  std::vector<int> elems;
  for (const auto& l : labels) elems.push_back(index_of(l));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  check_subgroup(elems);
  return elems;
}

void FiniteGroup::check_subgroup(const std::vector<int>& elems) const {
  if (elems.empty()) throw InputError("subgroup must be nonempty");
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(e_)) throw InputError("subgroup does not contain the identity");
  for (int a : elems) {
    if (!s.count(inv(a))) throw InputError("subgroup not closed under inverse");
    for (int b : elems)
      if (!s.count(mul(a, b))) throw InputError("subgroup not closed under product");
  }
}

CosetDecomposition::CosetDecomposition(const FiniteGroup& g,
                                       std::vector<int> subgroup_elems)
    : g_(&g), f_(std::move(subgroup_elems)) {
  std::sort(f_.begin(), f_.end());
  g.check_subgroup(f_);
  int n = g.order();
  f_pos_.assign(n, -1);
  for (size_t i = 0; i < f_.size(); ++i) f_pos_[f_[i]] = static_cast<int>(i);
  s_pos_.assign(n, -1);
  fs_.assign(n, {-1, -1});
  std::vector<bool> covered(n, false);
  auto take_rep = [&](int s) {
    s_pos_[s] = static_cast<int>(s_.size());
    s_.push_back(s);
    for (int f : f_) {
      int x = g.mul(f, s);
      covered[x] = true;
      fs_[x] = {f, s};
    }
  };
  take_rep(g.identity());  /* the identity coset always gets rep 1 */
  for (int x = 0; x < n; ++x)
    if (!covered[x]) take_rep(x);
}

}  // namespace adjalg
