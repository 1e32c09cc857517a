#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "adjalg/cyc.hpp"

using adjalg::Cyc;
using adjalg::Rat;

namespace {

Cyc z(int n, long k = 1) { return Cyc::root_of_unity(n, k); }

/* deterministic generator of small field elements for property checks */
Cyc random_cyc(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Rat> c(static_cast<size_t>(adjalg::euler_phi(order)));
  for (auto& x : c) {
    int num = coeff(rng);
    int den = 1 + std::abs(coeff(rng));
    x = Rat(num, den);
    x.canonicalize();
  }
  return Cyc(order, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  auto poly = [](std::initializer_list<int> v) {
    std::vector<Rat> p;
    for (int x : v) p.push_back(Rat(x));
    return p;
  };
  CHECK(adjalg::cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(adjalg::cyclotomic_poly(2) == poly({1, 1}));
  CHECK(adjalg::cyclotomic_poly(3) == poly({1, 1, 1}));
  CHECK(adjalg::cyclotomic_poly(4) == poly({1, 0, 1}));
  CHECK(adjalg::cyclotomic_poly(6) == poly({1, -1, 1}));
  CHECK(adjalg::cyclotomic_poly(8) == poly({1, 0, 0, 0, 1}));
  CHECK(adjalg::cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
  CHECK(adjalg::euler_phi(1) == 1);
  CHECK(adjalg::euler_phi(8) == 4);
  CHECK(adjalg::euler_phi(12) == 4);
  CHECK(adjalg::euler_phi(24) == 8);
}

TEST_CASE("fourth root of unity squares to -1") {
  CHECK(z(4) * z(4) == Cyc(-1));
  CHECK(z(4) * z(4) + Cyc(1) == Cyc(0));
}

TEST_CASE("reduction keeps canonical coefficient length") {
  CHECK(z(8, 4) == Cyc(-1));
  CHECK(z(8, 4).coeffs().size() == 4);
  CHECK(z(6, 3) == Cyc(-1));
  CHECK(Cyc(3, {Rat(0), Rat(0), Rat(1)}) == -Cyc(1) - z(3));  /* z3^2 = -1-z3 */
}

TEST_CASE("arithmetic in Q(zeta_3)") {
  Cyc a = Cyc(1) + z(3);
  Cyc b = Cyc(1) + z(3, 2);
  CHECK(a * b == Cyc(1));
  Cyc s;
  for (int k = 0; k < 3; ++k) s += z(3, k);
  CHECK(s == Cyc(0));
}

TEST_CASE("mixed order arithmetic lands in the lcm field") {
  CHECK(z(2) * z(3) == z(6, 5));
  CHECK(z(4) + z(6) - z(6) == z(4));
  CHECK((z(4) * z(3)).order() == 12);
}

TEST_CASE("equality across compatible orders") {
  CHECK(z(6, 3) == z(2));
  CHECK(z(4, 2) == Cyc(-1));
  CHECK(z(8, 2) == z(4));
  CHECK(z(3) != z(4));
}

TEST_CASE("inverse and division") {
  std::mt19937 rng(12345);
  for (int order : {1, 2, 3, 4, 6, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyc a = random_cyc(rng, order);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == Cyc(1));
      CHECK(a / a == Cyc(1));
    }
  }
  CHECK((Cyc(1) / z(8)) == z(8, -1));
  CHECK_THROWS_AS(Cyc(1) / Cyc(0), adjalg::CheckError);
  CHECK_THROWS_AS(Cyc(0).inverse(), adjalg::CheckError);
}

TEST_CASE("field axioms on sampled elements") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 40; ++trial) {
    Cyc a = random_cyc(rng, 4);
    Cyc b = random_cyc(rng, 6);
    Cyc c = random_cyc(rng, 8);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("embedding is a field homomorphism") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    Cyc a = random_cyc(rng, 6);
    Cyc b = random_cyc(rng, 6);
    CHECK((a + b).embedded(12) == a.embedded(12) + b.embedded(12));
    CHECK((a * b).embedded(12) == a.embedded(12) * b.embedded(12));
    CHECK(a.embedded(12) == a);
  }
}

TEST_CASE("shrunk finds the minimal order") {
  CHECK(z(8, 2).shrunk().order() == 4);
  CHECK(z(6, 3).shrunk().order() == 1);
  CHECK((z(8) + z(8, -1)).shrunk().order() == 8);
  CHECK(Cyc(Rat(7, 2)).shrunk().order() == 1);
  CHECK(z(12, 4).shrunk().order() == 3);
}

TEST_CASE("rational multiple of root detection") {
  auto form = (Cyc(Rat(3, 2)) * z(8, 5)).as_rational_multiple_of_root();
  REQUIRE(form.has_value());
  CHECK(Cyc(form->first) * z(8, form->second) == Cyc(Rat(3, 2)) * z(8, 5));
  CHECK_FALSE((Cyc(1) + z(5)).as_rational_multiple_of_root().has_value());
}

TEST_CASE("square roots are exact") {
  for (Cyc v : {Cyc(4), Cyc(2), Cyc(3), Cyc(5), Cyc(6), Cyc(Rat(9, 4)),
                Cyc(Rat(1, 2)), Cyc(-1), z(4), -z(3), Cyc(Rat(-3, 4)) * z(6)}) {
    Cyc s = v.sqrt();
    CHECK(s * s == v);
  }
  CHECK(Cyc(4).sqrt() == Cyc(2));
  CHECK(Cyc(0).sqrt() == Cyc(0));
  /* deterministic: same value, same root */
  CHECK(Cyc(2).sqrt() == Cyc(2).sqrt());
  CHECK_THROWS_AS((Cyc(1) + z(5)).sqrt(), adjalg::CheckError);
}

TEST_CASE("diagnostic rendering") {
  CHECK(Cyc(0).str() == "0");
  CHECK(Cyc(-3).str() == "-3");
  CHECK(z(4).str() == "z4");
  CHECK((Cyc(2) + Cyc(Rat(1, 2)) * z(8, 3)).str() == "2 + 1/2*z8^3");
}
