#include <doctest.h>

#include "polypres/fpres.hpp"
#include "polypres/matgrp.hpp"
#include "polypres/polygroup.hpp"

using namespace polypres;

TEST_CASE("projective line representations") {
  auto r3 = perm_rep(RepFamily::pgl2, 3);
  CHECK(r3.degree == 4);
  CHECK(r3.group.order() == 24);
  auto r2 = perm_rep(RepFamily::pgl2, 2);
  CHECK(r2.degree == 3);
  CHECK(r2.group.order() == 6);
  auto r9 = perm_rep(RepFamily::pgl2, 9);
  CHECK(r9.degree == 10);
  CHECK(r9.group.order() == 720);
  auto tp = transitivity_profile(r9.group);
  CHECK(tp.k == 3);
  CHECK(tp.sharp);
}

TEST_CASE("projective plane representation of PSL3(4)") {
  auto rep = perm_rep(RepFamily::psl3, 4);
  CHECK(rep.degree == 21);
  CHECK(rep.group.order() == 20160);
  CHECK(rep.matrix_order == 60480);
  auto tp = transitivity_profile(rep.group);
  CHECK(tp.k == 2);
}

TEST_CASE("SL3(2) and SL3(3) plane representations are faithful") {
  CHECK(perm_rep(RepFamily::sl3, 2).group.order() == 168);
  CHECK(perm_rep(RepFamily::sl3, 3).group.order() == 5616);
}

TEST_CASE("B2 affine representation has the affine group as image") {
  auto rep = perm_rep(RepFamily::b2_affine, 5);
  CHECK(rep.degree == 5);
  CHECK(rep.group.order() == 20); // AGL(1,5); kernel is the centre
  CHECK(rep.matrix_order == 80);
}

TEST_CASE("E_{1,2} commutator identity in GL2") {
  // [S, R(a)] = E_{1,2}(1-a) as matrices, for all units a.
  for (unsigned q : {3u, 4u, 5u, 7u, 9u}) {
    auto [p, m] = factor_prime_power(q);
    FiniteField f(p, m);
    Mat2 s = mat_S(f);
    for (unsigned i = 1; i + 1 < q; ++i) {
      auto a = f.from_dlog(i);
      Mat2 r = mat_R(f, a);
      Mat2 rinv = mat_R(f, f.inv(a));
      Mat2 sinv = s; // S is an involution
      Mat2 comm = mat2_mul(f, mat2_mul(f, s, r), mat2_mul(f, sinv, rinv));
      CHECK(comm == mat_E12(f, f.sub(f.one(), a)));
    }
  }
}

TEST_CASE("b2K presentations enumerate to (q-1)^2 q") {
  for (unsigned q : {3u, 4u, 5u}) {
    auto e = emit_family_presentation(PresFamily::b2K, q);
    CHECK(relators_hold(e.presentation, e.assignment));
    PermGroup target(e.assignment[0].degree(), e.assignment);
    auto rep = verify_presentation(e.presentation, target, e.assignment);
    CHECK(rep.ok());
    CHECK(*rep.concluded_order == pres_family_target_order(PresFamily::b2K, q));
  }
}

TEST_CASE("gl2q presentation for q = 3 against the regular representation") {
  auto e = emit_family_presentation(PresFamily::gl2q, 3);
  REQUIRE(e.assignment.size() == 3);
  CHECK(relators_hold(e.presentation, e.assignment));
  PermGroup target(48, e.assignment);
  CHECK(target.order() == 48);
  auto rep = verify_presentation(e.presentation, target, e.assignment);
  CHECK(rep.ok());
}

TEST_CASE("gl2q enumerations for q = 4, 5") {
  CHECK(todd_coxeter(emit_family_presentation(PresFamily::gl2q, 4).presentation, {}) == 180ull);
  CHECK(todd_coxeter(emit_family_presentation(PresFamily::gl2q, 5).presentation, {}) == 480ull);
}

TEST_CASE("gl2q-alt enumerations") {
  for (unsigned q : {3u, 4u, 5u}) {
    auto e = emit_family_presentation(PresFamily::gl2q_alt, q);
    CHECK(todd_coxeter(e.presentation, {}) ==
          pres_family_target_order(PresFamily::gl2q_alt, q));
  }
}

TEST_CASE("pgl2q presentations enumerate to q^3 - q with valid assignments") {
  for (unsigned q : {3u, 4u, 5u, 7u}) {
    auto e = emit_family_presentation(PresFamily::pgl2q, q);
    CHECK(relators_hold(e.presentation, e.assignment));
    CHECK(todd_coxeter(e.presentation, {}) == (unsigned long long)q * q * q - q);
  }
}

TEST_CASE("pgl2q-alt presentations match the same orders") {
  for (unsigned q : {3u, 4u, 5u, 7u}) {
    auto e = emit_family_presentation(PresFamily::pgl2q_alt, q);
    CHECK(relators_hold(e.presentation, e.assignment));
    CHECK(todd_coxeter(e.presentation, {}) == (unsigned long long)q * q * q - q);
  }
}

TEST_CASE("sl3q presentation enumerates to |SL3(q)| for q = 2") {
  auto e = emit_family_presentation(PresFamily::sl3q, 2);
  CHECK(relators_hold(e.presentation, e.assignment));
  CHECK(todd_coxeter(e.presentation, {}) == 168ull);
}

TEST_CASE("psl34 presentation checks against the degree-21 model") {
  auto e = emit_family_presentation(PresFamily::psl34, 4);
  CHECK(relators_hold(e.presentation, e.assignment));
}

TEST_CASE("psl3q presentation for q = 2") {
  auto e = emit_family_presentation(PresFamily::psl3q, 2);
  CHECK(relators_hold(e.presentation, e.assignment));
  CHECK(todd_coxeter(e.presentation, {}) == 168ull);
}

TEST_CASE("stabilizer double-coset polygroup is P3 for q = 2") {
  Polygroup p = sl3_stabilizer_polygroup(2);
  CHECK(check_axioms(p).pass());
  CHECK(polygroup_isomorphic(p, polygroup_p3()));
}

TEST_CASE("PGL2 point-stabilizer polygroup is P2") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto rep = perm_rep(RepFamily::pgl2, q);
    PermGroup h = rep.group.point_stabilizer(0);
    Polygroup p = double_coset_polygroup(rep.group, h);
    CHECK(polygroup_isomorphic(p, polygroup_p2()));
  }
}
