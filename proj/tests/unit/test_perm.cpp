#include <doctest.h>

#include <random>
#include <set>

#include "polypres/perm.hpp"
#include "polypres/table_group.hpp"

using namespace polypres;

namespace {

PermGroup sym(unsigned n) {
  if (n < 2)
    return PermGroup(n < 1 ? 1 : n, {});
  std::vector<Perm> gens{Perm::parse_cycles("(1 2)", n)};
  if (n > 2) {
    std::string cyc = "(";
    for (unsigned i = 1; i <= n; ++i)
      cyc += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(Perm::parse_cycles(cyc, n));
  }
  return PermGroup(n, gens);
}

} // namespace

TEST_CASE("compose follows the left-action convention") {
  Perm p = Perm::parse_cycles("(1 2)", 3);
  Perm q = Perm::parse_cycles("(2 3)", 3);
  CHECK((p * Perm(3)) == p);
  // p(q(x)): 2 -> q -> 3? no: q sends 3->2, p sends 2->1, so 3 -> 1.
  Perm pq = p * q;
  CHECK(pq[2] == 0);
  CHECK(pq[0] == 1);
  CHECK(pq[1] == 2);
  CHECK(pq == Perm::parse_cycles("(1 2 3)", 3));
  CHECK((p * p).is_identity());
}

TEST_CASE("compose is associative on random triples") {
  std::mt19937 rng(0);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned n = 2 + rng() % 9;
    std::vector<unsigned> a(n), b(n), c(n);
    for (auto *v : {&a, &b, &c}) {
      for (unsigned i = 0; i < n; ++i)
        (*v)[i] = i;
      std::shuffle(v->begin(), v->end(), rng);
    }
    Perm pa{a}, pb{b}, pc{c};
    CHECK(((pa * pb) * pc) == (pa * (pb * pc)));
  }
}

TEST_CASE("cycle parse and print round-trip") {
  CHECK(Perm::parse_cycles("(1 2)(3 4)", 4).images() == std::vector<unsigned>{1, 0, 3, 2});
  CHECK(Perm::parse_cycles("()", 5).is_identity());
  CHECK(Perm::parse_cycles("(1 2 3)", 3).images() == std::vector<unsigned>{1, 2, 0});
  CHECK_THROWS(Perm::parse_cycles("(1 1)", 3));
  CHECK_THROWS(Perm::parse_cycles("(1 9)", 3));
  CHECK_THROWS(Perm::parse_cycles("(1 2", 3));

  std::mt19937 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 1 + rng() % 12;
    std::vector<unsigned> v(n);
    for (unsigned i = 0; i < n; ++i)
      v[i] = i;
    std::shuffle(v.begin(), v.end(), rng);
    Perm p{v};
    CHECK(Perm::parse_cycles(p.to_cycles(), n) == p);
  }
}

TEST_CASE("chain orders for standard groups") {
  CHECK(sym(4).order() == 24);
  CHECK(sym(5).order() == 120);
  CHECK(sym(6).order() == 720);
  PermGroup c4(4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  CHECK(c4.order() == 4);
  PermGroup trivial(3, {});
  CHECK(trivial.order() == 1);
}

TEST_CASE("chain order equals brute-force closure size") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    unsigned n = 4 + rng() % 5;
    std::vector<Perm> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<unsigned> v(n);
      for (unsigned i = 0; i < n; ++i)
        v[i] = i;
      std::shuffle(v.begin(), v.end(), rng);
      gens.push_back(Perm{v});
    }
    PermGroup grp(n, gens);
    CHECK(grp.order() == closure(n, gens).size());
  }
}

TEST_CASE("membership closed under generator products") {
  PermGroup g = sym(5);
  std::mt19937 rng(3);
  Perm x(5);
  for (int i = 0; i < 30; ++i) {
    x = x * g.generators()[rng() % g.generators().size()];
    CHECK(g.contains(x));
  }
  CHECK_FALSE(sym(4).contains(Perm::parse_cycles("(1 2)", 5))); // degree mismatch
  CHECK_FALSE(sym(4).point_stabilizer(0).contains(Perm::parse_cycles("(1 2)", 4)));
}

TEST_CASE("orbit-stabilizer identity") {
  for (const PermGroup &g : {sym(4), sym(5)}) {
    for (unsigned pt = 0; pt < g.degree(); ++pt) {
      auto stab = g.point_stabilizer(pt);
      CHECK(stab.order() * g.orbit(pt).size() == g.order());
    }
  }
  PermGroup trivial(4, {});
  CHECK(trivial.point_stabilizer(2).order() == 1);
  CHECK(trivial.orbit(2) == std::vector<unsigned>{2});
}

TEST_CASE("stabilizer of a point in Sym(4) has order 6") {
  auto stab = sym(4).point_stabilizer(0);
  CHECK(stab.order() == 6);
  CHECK(sym(4).orbit(0).size() == 4);
}

TEST_CASE("double cosets of Sym(3) over <(1 2)>") {
  PermGroup g = sym(3);
  PermGroup h(3, {Perm::parse_cycles("(1 2)", 3)});
  auto dc = double_cosets(g, h, h);
  CHECK(dc.reps.size() == 2);
  CHECK(dc.reps[0].is_identity());
  // Sizes 2 and 4.
  std::vector<unsigned> sizes(2, 0);
  for (unsigned m : dc.membership)
    sizes[m]++;
  CHECK(sizes == std::vector<unsigned>{2, 4});
}

TEST_CASE("single double coset when H = G") {
  PermGroup g = sym(3);
  auto dc = double_cosets(g, g, g);
  CHECK(dc.reps.size() == 1);
  CHECK(dc.reps[0].is_identity());
}

TEST_CASE("two double cosets for a 2-transitive point stabilizer") {
  PermGroup g = sym(4);
  PermGroup h = g.point_stabilizer(0);
  auto dc = double_cosets(g, h, h);
  CHECK(dc.reps.size() == 2);
}

TEST_CASE("double cosets partition the group") {
  PermGroup g = sym(4);
  PermGroup h(4, {Perm::parse_cycles("(1 2)(3 4)", 4)});
  auto dc = double_cosets(g, h, h);
  std::set<unsigned> seen(dc.membership.begin(), dc.membership.end());
  CHECK(seen.size() == dc.reps.size());
  for (unsigned m : dc.membership)
    CHECK(m < dc.reps.size());
}

TEST_CASE("transitivity profiles") {
  auto tp = transitivity_profile(sym(5));
  CHECK(tp.k == 5);
  CHECK(tp.sharp);
  PermGroup c4(4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  auto tp2 = transitivity_profile(c4);
  CHECK(tp2.k == 1);
  CHECK(tp2.sharp); // regular action
  PermGroup d8(4, {Perm::parse_cycles("(1 2 3 4)", 4), Perm::parse_cycles("(1 3)", 4)});
  auto tp3 = transitivity_profile(d8);
  CHECK(tp3.k == 1);
  CHECK_FALSE(tp3.sharp);
}

TEST_CASE("element enumeration matches order and is sorted") {
  PermGroup g = sym(4);
  auto elems = g.elements();
  CHECK(elems.size() == 24);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(elems[0].is_identity());
}

TEST_CASE("word chain factorization reproduces elements") {
  PermGroup g = sym(5);
  WordChain wc(g);
  std::mt19937 rng(11);
  auto elems = g.elements();
  for (int trial = 0; trial < 25; ++trial) {
    const Perm &p = elems[rng() % elems.size()];
    auto w = wc.factor(p);
    CHECK(WordChain::evaluate(g.generators(), w, 5) == p);
  }
}

TEST_CASE("isomorphism testing on small groups") {
  TableGroup c4 = TableGroup::cyclic(4);
  auto self = table_isomorphism(c4, c4);
  REQUIRE(self.has_value());
  for (unsigned i = 0; i < 4; ++i)
    CHECK((*self)[i] == i);

  PermGroup d8(4, {Perm::parse_cycles("(1 2 3 4)", 4), Perm::parse_cycles("(1 3)", 4)});
  PermGroup q8(8, {Perm::parse_cycles("(1 2 3 4)(5 6 7 8)", 8),
                   Perm::parse_cycles("(1 5 3 7)(2 8 4 6)", 8)});
  CHECK(q8.order() == 8);
  CHECK_FALSE(is_isomorphic(d8, q8));
  // Order spectra differ: D8 has five involutions, Q8 one.
  auto sd = TableGroup::from_perm_group(d8).order_spectrum();
  auto sq = TableGroup::from_perm_group(q8).order_spectrum();
  CHECK(std::count(sd.begin(), sd.end(), 2u) == 5);
  CHECK(std::count(sq.begin(), sq.end(), 2u) == 1);
}

TEST_CASE("regular representation matches table group") {
  TableGroup c6 = TableGroup::cyclic(6);
  PermGroup reg = c6.regular_representation();
  CHECK(reg.order() == 6);
  CHECK(is_isomorphic(TableGroup::from_perm_group(reg), c6));
}
