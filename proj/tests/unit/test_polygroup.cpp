#include <doctest.h>

#include "polypres/catalog.hpp"
#include "polypres/polygroup.hpp"

using namespace polypres;

TEST_CASE("named polygroups pass the axiom checker") {
  CHECK(check_axioms(polygroup_p2()).pass());
  CHECK(check_axioms(polygroup_p3()).pass());
  CHECK(check_axioms(group_as_polygroup(TableGroup::cyclic(6))).pass());
}

TEST_CASE("broken table fails reproduction with a witness") {
  Polygroup p = polygroup_p2();
  p.op[1][1] = {1}; // 0 no longer reachable from E o 1
  auto rep = check_axioms(p);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("double-coset polygroup of (Sym(3), <(1 2)>) is P2") {
  PermGroup g(3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
  PermGroup h(3, {Perm::parse_cycles("(1 2)", 3)});
  Polygroup p = double_coset_polygroup(g, h);
  CHECK(p.size() == 2);
  CHECK(check_axioms(p).pass());
  CHECK(polygroup_isomorphic(p, polygroup_p2()));
}

TEST_CASE("normal subgroup gives a group polygroup") {
  // A4 with V4 normal: quotient C3.
  PermGroup a4(4, {Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(1 2)(3 4)", 4)});
  PermGroup v4(4, {Perm::parse_cycles("(1 2)(3 4)", 4), Perm::parse_cycles("(1 3)(2 4)", 4)});
  Polygroup p = double_coset_polygroup(a4, v4);
  CHECK(p.size() == 3);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      CHECK(p.op[a][b].size() == 1);
  CHECK(polygroup_isomorphic(p, group_as_polygroup(TableGroup::cyclic(3))));
}

TEST_CASE("P2 is not the group C2") {
  CHECK_FALSE(polygroup_isomorphic(polygroup_p2(), group_as_polygroup(TableGroup::cyclic(2))));
}

TEST_CASE("double-coset polygroup over a table group matches the perm route") {
  PermGroup g(3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
  TableGroup t = TableGroup::from_perm_group(g);
  auto elems = g.elements();
  // subgroup generated by (1 2): indices of identity and (1 2).
  std::vector<unsigned> sub;
  for (unsigned i = 0; i < elems.size(); ++i)
    if (elems[i].is_identity() || elems[i] == Perm::parse_cycles("(1 2)", 3))
      sub.push_back(i);
  Polygroup p = double_coset_polygroup(t, sub);
  CHECK(check_axioms(p).pass());
  CHECK(polygroup_isomorphic(p, polygroup_p2()));
}

TEST_CASE("lambda hyperops: lattice") {
  LambdaSet s = lambda_hyperop(LambdaVariant::lattice, 3, 5);
  LambdaSet want;
  for (int v : {2, 4, 6, 8})
    want.insert(v);
  CHECK(s == want);
  CHECK_THROWS(lambda_hyperop(LambdaVariant::lattice, -1, 2));
}

TEST_CASE("lambda hyperops: rays") {
  CHECK(lambda_hyperop(LambdaVariant::pg, 4, 4) == LambdaSet::closed_ray(4));
  CHECK(lambda_hyperop(LambdaVariant::pb_gf2, 4, 4) == LambdaSet::open_ray(4));
  CHECK(lambda_hyperop(LambdaVariant::pb_bigk, 2, 7) == LambdaSet::single(2));
  // infinity is the scalar identity.
  CHECK(lambda_hyperop(LambdaVariant::pg, -1, 9) == LambdaSet::single(9));
  CHECK(lambda_hyperop(LambdaVariant::pg, -1, -1) == LambdaSet::inf());
}

TEST_CASE("0 o 0 per residue field size") {
  // card(k) >= 3: the whole set; GF(2): everything but 0.
  CHECK(lambda_hyperop(LambdaVariant::pb_bigk, 0, 0) == LambdaSet::closed_ray(0));
  CHECK(lambda_hyperop(LambdaVariant::pb_gf2, 0, 0) == LambdaSet::open_ray(0));
}

TEST_CASE("hyper powers match the closed-form cases") {
  // GF(2) residue: odd powers collapse to {a}, even powers to (a, inf].
  CHECK(hyper_power(LambdaVariant::pb_gf2, 2, 3) == LambdaSet::single(2));
  CHECK(hyper_power(LambdaVariant::pb_gf2, 2, 2) == LambdaSet::open_ray(2));
  CHECK(hyper_power(LambdaVariant::pb_gf2, 2, 4) == LambdaSet::open_ray(2));
  CHECK(hyper_power(LambdaVariant::pb_bigk, 0, 2) == LambdaSet::closed_ray(0));
  CHECK(hyper_power(LambdaVariant::pb_bigk, 3, 5) == LambdaSet::closed_ray(3));
}

TEST_CASE("associativity of the pb/pg variants on a window") {
  std::vector<int> window;
  for (int v = 0; v <= 12; ++v)
    window.push_back(v);
  window.push_back(-1);
  for (LambdaVariant v :
       {LambdaVariant::pb_bigk, LambdaVariant::pb_gf2, LambdaVariant::pg}) {
    for (int a : window)
      for (int b : window)
        for (int c : window) {
          LambdaSet ab = lambda_hyperop(v, a, b);
          LambdaSet bc = lambda_hyperop(v, b, c);
          LambdaSet lhs = lambda_hyperop(v, LambdaSet::single(a), bc);
          LambdaSet rhs = lambda_hyperop(v, ab, LambdaSet::single(c));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("lattice polygroup property suite") {
  const int bound = 50;
  // Commutativity, reproduction witness, monotonicity, parity morphism.
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      LambdaSet ab = lambda_hyperop(LambdaVariant::lattice, a, b);
      CHECK(ab == lambda_hyperop(LambdaVariant::lattice, b, a));
      // scalar identity 0.
      if (b == 0)
        CHECK(ab == LambdaSet::single(a));
      // reproduction witness: b lies in (a+b) o a.
      CHECK(lambda_hyperop(LambdaVariant::lattice, a + b, a).contains(b));
      // all members share the parity of a+b.
      for (int v : ab.finite)
        CHECK((v & 1) == ((a + b) & 1));
    }
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b)
      for (int c = 0; c <= 10; ++c) {
        LambdaSet small = lambda_hyperop(LambdaVariant::lattice, a, b);
        LambdaSet big = lambda_hyperop(LambdaVariant::lattice, a + c, b + c);
        for (int v : small.finite)
          CHECK(big.contains(v));
      }
  // Associativity on a modest window.
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b)
      for (int c = 0; c <= 12; ++c) {
        LambdaSet lhs = lambda_hyperop(LambdaVariant::lattice, LambdaSet::single(a),
                                       lambda_hyperop(LambdaVariant::lattice, b, c));
        LambdaSet rhs = lambda_hyperop(LambdaVariant::lattice,
                                       lambda_hyperop(LambdaVariant::lattice, a, b),
                                       LambdaSet::single(c));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("group catalog of orders up to 16 is complete and distinct") {
  const unsigned expected[] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  for (unsigned n = 1; n <= 16; ++n) {
    auto groups = groups_of_order(n);
    CHECK(groups.size() == expected[n]);
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        CHECK_FALSE(is_isomorphic(groups[i], groups[j]));
  }
}

TEST_CASE("subgroup enumeration covers the lattice of Sym(3) and D8") {
  PermGroup s3(3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
  CHECK(all_subgroups(TableGroup::from_perm_group(s3)).size() == 6);
  PermGroup d8(4, {Perm::parse_cycles("(1 2 3 4)", 4), Perm::parse_cycles("(1 3)", 4)});
  CHECK(all_subgroups(TableGroup::from_perm_group(d8)).size() == 10);
}
