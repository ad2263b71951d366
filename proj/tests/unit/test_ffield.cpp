#include <doctest.h>

#include <random>

#include "polypres/ffield.hpp"

using namespace polypres;

TEST_CASE("GF(3) uses zeta = 2") {
  FiniteField f(3, 1);
  CHECK(f.q() == 3);
  CHECK(f.zeta() == 2);
  CHECK(f.dlog(f.one()) == 0);
  CHECK(f.dlog(f.zeta()) == 1);
}

TEST_CASE("GF(9) override satisfies zeta^2 = 1 - zeta") {
  FiniteField f(3, 2);
  CHECK(f.q() == 9);
  auto z = f.zeta();
  CHECK(f.mul(z, z) == f.sub(f.one(), z));
  // z^3 = 2z - 1 = 2z + 2.
  CHECK(f.pow(z, 3) == f.add(f.mul(f.from_int(2), z), f.from_int(2)));
  CHECK(f.frobenius(z) == f.pow(z, 3));
}

TEST_CASE("GF(4) override z^2 = z + 1") {
  FiniteField f(2, 2);
  auto z = f.zeta();
  CHECK(f.mul(z, z) == f.add(z, f.one()));
}

TEST_CASE("multiplicative order of zeta is q-1") {
  for (auto [p, m] : {std::pair{2u, 2u}, {3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u},
                      {2u, 4u}, {5u, 2u}}) {
    FiniteField f(p, m);
    unsigned n = f.q() - 1;
    CHECK(f.pow(f.zeta(), n) == f.one());
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0)
        CHECK(f.pow(f.zeta(), d) != f.one());
  }
}

TEST_CASE("field axioms and inverses") {
  FiniteField f(3, 2);
  for (auto a : f.all_elements()) {
    if (a == 0)
      continue;
    CHECK(f.mul(a, f.inv(a)) == f.one());
  }
  CHECK_THROWS(f.inv(f.zero()));
  CHECK_THROWS(f.div(f.one(), f.zero()));
}

TEST_CASE("frobenius is a field automorphism with order m") {
  FiniteField f(3, 2);
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto a = f.from_dlog(rng() % 8);
    auto b = f.from_dlog(rng() % 8);
    CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
    CHECK(f.frobenius(f.frobenius(a)) == a);
  }
}

TEST_CASE("gamma table for GF(9)") {
  FiniteField f(3, 2);
  auto g = f.gamma_table();
  // k_1..k_7 from the zeta^2 = 1 - zeta presentation.
  CHECK(g[1] == 2);
  CHECK(g[2] == 1);
  CHECK(g[3] == 6);
  CHECK(g[4] == 4);
  CHECK(g[5] == 7);
  CHECK(g[6] == 3);
  CHECK(g[7] == 5);
}

TEST_CASE("gamma table for GF(4) and GF(3)") {
  FiniteField f4(2, 2);
  auto g4 = f4.gamma_table();
  CHECK(g4[1] == 2);
  CHECK(g4[2] == 1);
  FiniteField f3(3, 1);
  auto g3 = f3.gamma_table();
  CHECK(g3[1] == 1);
}

TEST_CASE("gamma satisfies z^gamma(i) + z^i = 1 on every field") {
  for (auto [p, m] : {std::pair{3u, 1u}, {3u, 2u}, {2u, 2u}, {5u, 1u}, {7u, 1u}}) {
    FiniteField f(p, m);
    auto g = f.gamma_table();
    for (unsigned i = 1; i + 1 < f.q(); ++i) {
      CHECK(g[i] >= 1);
      CHECK(g[i] <= f.q() - 2);
      CHECK(f.add(f.from_dlog(g[i]), f.from_dlog(i)) == f.one());
    }
  }
}

TEST_CASE("dlog in GF(9): 1 - zeta has dlog 2") {
  FiniteField f(3, 2);
  CHECK(f.dlog(f.sub(f.one(), f.zeta())) == 2);
}

TEST_CASE("square classes in odd characteristic") {
  FiniteField f(3, 2);
  CHECK(f.is_square(f.one()));
  CHECK_FALSE(f.is_square(f.zeta()));
  // -1 is a square in GF(9).
  CHECK(f.is_square(f.neg(f.one())));
}

TEST_CASE("printing") {
  FiniteField f(3, 2);
  CHECK(f.to_string(f.zero()) == "0");
  CHECK(f.to_string(f.one()) == "z^0");
  CHECK(f.to_string(f.zeta()) == "z^1");
  CHECK(f.spec_string() == "gf:3^2");
}

TEST_CASE("non-prime characteristic rejected") {
  CHECK_THROWS(FiniteField(4, 1));
  CHECK_THROWS(FiniteField(1, 2));
}
