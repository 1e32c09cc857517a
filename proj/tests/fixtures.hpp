#pragma once

/* Shared in-memory fixture groups for the test suite.  The JSON files under
   fixtures/ mirror these tables; test_io cross-checks them. */

#include <string>
#include <vector>

#include "adjalg/group.hpp"

namespace testfx {

inline adjalg::FiniteGroup cyclic(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : (i == 1 ? "a" : "a" + std::to_string(i)));
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return adjalg::FiniteGroup(labels, t);
}

inline adjalg::FiniteGroup klein() {
  std::vector<std::string> labels{"e", "a", "b", "ab"};
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return adjalg::FiniteGroup(labels, t);
}

/* dihedral-style groups r^k s^e with s r s^-1 = r^-1 */
inline adjalg::FiniteGroup dihedral(int m) {
  int n = 2 * m;
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto idx = [m](int k, int e) { return ((k % m) + m) % m + m * e; };
  for (int k = 0; k < m; ++k) {
    std::string rk = (k == 0) ? "" : (k == 1 ? "r" : "r" + std::to_string(k));
    labels[idx(k, 0)] = rk.empty() ? "e" : rk;
    labels[idx(k, 1)] = rk + "s";
  }
  for (int k = 0; k < m; ++k)
    for (int e = 0; e < 2; ++e)
      for (int l = 0; l < m; ++l)
        for (int d = 0; d < 2; ++d)
          t[idx(k, e)][idx(l, d)] = idx(e ? k - l : k + l, (e + d) % 2);
  return adjalg::FiniteGroup(labels, t);
}

inline adjalg::FiniteGroup s3() { return dihedral(3); }
inline adjalg::FiniteGroup d4() { return dihedral(4); }

inline adjalg::FiniteGroup q8() {
  /* elements 1,-1,i,-i,j,-j,k,-k as (axis, sign): index = 2*axis + sign */
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  /* axis multiplication: axes 0=1,1=i,2=j,3=k; entry = (axis, extra sign) */
  const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  /* sg[a][b]: extra minus sign in axis(a)*axis(b); e.g. i*i=-1, i*j=k, j*i=-k */
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb)
          t[2 * a + sa][2 * b + sb] = 2 * ax[a][b] + ((sa + sb + sg[a][b]) % 2);
  return adjalg::FiniteGroup(labels, t);
}

}  // namespace testfx
