#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "adjalg/cocycle.hpp"
#include "fixtures.hpp"

using namespace adjalg;

namespace {

Cyc z(int n, long k = 1) { return Cyc::root_of_unity(n, k); }

/* psi((a^i b^j), (a^k b^l)) = (-1)^(j k) on the klein group; the classic
   nontrivial class, deliberately not normalized */
TwoCocycle klein_minus(const FiniteGroup& g) {
  auto jexp = [](int x) { return x >> 1; };  /* klein index bits: a=1, b=2 */
  auto kexp = [](int x) { return x & 1; };
  Mat vals = Mat::Constant(4, 4, Cyc(1));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (jexp(x) * kexp(y) % 2) vals(x, y) = Cyc(-1);
  return TwoCocycle(g, {0, 1, 2, 3}, vals);
}

TwoCocycle coboundary(const FiniteGroup& g, const std::vector<int>& f,
                      const std::vector<Cyc>& mu) {
  int m = static_cast<int>(f.size());
  TwoCocycle triv = TwoCocycle::trivial(g, f);
  Mat vals(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int ij = triv.pos_of(g.mul(f[i], f[j]));
      vals(i, j) = mu[i] * mu[j] / mu[ij];
    }
  return TwoCocycle(g, f, vals);
}

}  // namespace

TEST_CASE("trivial cocycle is normalized") {
  auto s3 = testfx::s3();
  auto psi = TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"}));
  auto rep = psi.check();
  CHECK(rep.is_cocycle);
  CHECK(rep.is_normalized);
}

TEST_CASE("value table validation") {
  auto klein = testfx::klein();
  Mat vals = Mat::Constant(4, 4, Cyc(1));
  vals(2, 2) = Cyc(0);
  CHECK_THROWS_AS(TwoCocycle(klein, {0, 1, 2, 3}, vals), InputError);
  CHECK_THROWS_AS(TwoCocycle(klein, {0, 1}, Mat::Constant(3, 3, Cyc(1))), InputError);
}

TEST_CASE("klein sign table is a cocycle but not normalized") {
  auto g = testfx::klein();
  auto psi = klein_minus(g);
  auto rep = psi.check();
  CHECK(rep.is_cocycle);
  CHECK_FALSE(rep.is_normalized);
}

TEST_CASE("a broken table fails the cocycle identity") {
  auto g = testfx::klein();
  auto psi = klein_minus(g);
  Mat vals = psi.values();
  vals(1, 2) = Cyc(2);
  TwoCocycle broken(g, {0, 1, 2, 3}, vals);
  CHECK_FALSE(broken.check().is_cocycle);
}

TEST_CASE("normalizing the klein sign table lands in Q(zeta_4)") {
  auto g = testfx::klein();
  auto [norm, mu] = klein_minus(g).normalized();
  auto rep = norm.check();
  CHECK(rep.is_cocycle);
  CHECK(rep.is_normalized);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(4 % norm.at_pos(i, j).order() == 0);
  /* the expected symmetrized table: anticommuting a and b */
  int a = 1, b = 2, ab = 3;
  CHECK(norm.at(a, b) == -z(4));
  CHECK(norm.at(b, a) == z(4));
  CHECK(norm.at(a, b) * norm.at(b, a) == Cyc(1));
  CHECK(norm.at(ab, ab) == Cyc(1));
  CHECK(norm.at(a, a) == Cyc(1));
  CHECK(norm.at(b, b) == Cyc(1));
  /* psi' = psi * d(mu) with the returned coboundary */
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      int ij = norm.pos_of(g.mul(i, j));
      CHECK(norm.at_pos(i, j) ==
            klein_minus(g).at_pos(i, j) * mu[i] * mu[j] / mu[ij]);
    }
  }
}

TEST_CASE("normalization handles non-unital rescales and square roots") {
  auto c2 = testfx::cyclic(2);
  /* psi identically 3: cocycle (constant), not unital */
  TwoCocycle c(c2, {0, 1}, Mat::Constant(2, 2, Cyc(3)));
  CHECK(c.check().is_cocycle);
  CHECK_FALSE(c.check().is_normalized);
  auto [n, mu] = c.normalized();
  CHECK(n.check().is_normalized);

  /* involution with t(a) = -1 forces a root of unity square root */
  Mat vals = Mat::Constant(2, 2, Cyc(1));
  vals(1, 1) = Cyc(-1);
  TwoCocycle d(c2, {0, 1}, vals);
  CHECK(d.check().is_cocycle);
  CHECK(d.check().is_normalized);  /* (-1)*(-1) = 1 */
  auto [n2, mu2] = d.normalized();
  CHECK(n2.at(1, 1) == Cyc(-1));
}

TEST_CASE("coboundaries of arbitrary scalings are cocycles") {
  auto q8 = testfx::q8();
  auto f = q8.subgroup({"1", "-1", "i", "-i"});
  std::mt19937 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Cyc> mu;
    for (size_t i = 0; i < f.size(); ++i)
      mu.push_back(z(8, static_cast<long>(rng() % 8)) * Cyc(1 + static_cast<int>(rng() % 3)));
    auto psi = coboundary(q8, f, mu);
    CHECK(psi.check().is_cocycle);
    auto [n, ret] = psi.normalized();
    CHECK(n.check().is_normalized);
  }
}

TEST_CASE("b function recurrence b(ly,f) = b(y, l^-1 f l) b(l,f)") {
  auto g = testfx::klein();
  auto [psi, mu] = klein_minus(g).normalized();
  for (int l = 0; l < 4; ++l)
    for (int y = 0; y < 4; ++y)
      for (int f = 0; f < 4; ++f) {
        int ly = g.mul(l, y);
        int lfl = g.conj(g.inv(l), f);
        CHECK(psi.b(ly, f) == psi.b(y, lfl) * psi.b(l, f));
      }
  /* b of the trivial cocycle is identically 1 */
  auto triv = TwoCocycle::trivial(g, {0, 1, 2, 3});
  for (int l = 0; l < 4; ++l)
    for (int f = 0; f < 4; ++f) CHECK(triv.b(l, f) == Cyc(1));
}

TEST_CASE("conjugation fibers partition F x F") {
  auto q8 = testfx::q8();
  auto f = q8.subgroup({"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  auto psi = TwoCocycle::trivial(q8, f);
  size_t total = 0;
  for (int l : f) {
    auto fiber = psi.conjugation_fiber(l);
    CHECK(fiber.size() == f.size());
    for (auto [g, ff] : fiber) CHECK(q8.conj(q8.inv(g), ff) == l);
    total += fiber.size();
  }
  CHECK(total == f.size() * f.size());
}
