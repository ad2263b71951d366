#include <doctest.h>

#include <random>

#include "polypres/fpres.hpp"
#include "polypres/perm.hpp"
#include "polypres/table_group.hpp"

using namespace polypres;

namespace {

Presentation cyclic_pres(unsigned n) {
  Presentation p;
  p.generators = {"a"};
  p.add_relator(Word::gen(0).power(n));
  return p;
}

Presentation sym3_pres() {
  Presentation p;
  p.generators = {"a", "b"};
  Word a = Word::gen(0), b = Word::gen(1);
  p.add_relator(a.power(2));
  p.add_relator(b.power(3));
  p.add_relator((a * b).power(2));
  return p;
}

// Multiplication-table presentation of a TableGroup: one generator per
// nontrivial element, relators g_i g_j = g_k.
Presentation regular_pres(const TableGroup &t) {
  Presentation p;
  for (unsigned i = 1; i < t.size(); ++i)
    p.generators.push_back("t" + std::to_string(i));
  auto word_of = [&](unsigned e) {
    return e == 0 ? Word() : Word::gen(static_cast<int>(e - 1));
  };
  for (unsigned i = 1; i < t.size(); ++i)
    for (unsigned j = 1; j < t.size(); ++j)
      p.add_relation(word_of(i) * word_of(j), word_of(t.mul(i, j)));
  return p;
}

} // namespace

TEST_CASE("free reduction") {
  Word a = Word::gen(0), b = Word::gen(1);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
  Word ab3 = (a * b).power(3);
  CHECK(ab3.length() == 6);
  CHECK(ab3.letters() == std::vector<int>{0, 1, 0, 1, 0, 1});
  CHECK(Word::commutator(a, b).length() == 4);
}

TEST_CASE("free reduction is confluent on random words") {
  std::mt19937 rng(2);
  auto random_word = [&](int len) {
    Word w;
    for (int i = 0; i < len; ++i) {
      int g = static_cast<int>(rng() % 3);
      w.append(rng() % 2 ? g : ~g);
    }
    return w;
  };
  for (int t = 0; t < 100; ++t) {
    Word w = random_word(12), v = random_word(12);
    // reduce(reduce(w)*reduce(v)) == reduce(w*v): both sides are already
    // maintained reduced, so concatenation must agree.
    CHECK((w * v) == Word(std::vector<int>([&] {
            std::vector<int> raw = w.letters();
            raw.insert(raw.end(), v.letters().begin(), v.letters().end());
            return raw;
          }())));
  }
}

TEST_CASE("word serialization round trips through the grammar") {
  Presentation p;
  p.generators = {"a", "b", "x1"};
  Word w = Word::gen(0) * Word::gen(1).power(-2) * Word::gen(2).power(3);
  std::string s = p.word_to_string(w);
  CHECK(s == "a*b^-2*x1^3");
  CHECK(p.parse_word(s) == w);
  CHECK(p.parse_word("(a*b)^2") == Word::gen(0) * Word::gen(1) * Word::gen(0) * Word::gen(1));
  CHECK(p.parse_word("a^0").empty());
  CHECK_THROWS(p.parse_word("c"));
  CHECK_THROWS(p.parse_word("a**b"));
}

TEST_CASE("presentation text format round trip") {
  Presentation p = sym3_pres();
  p.tags[0] = RelatorTag::type_i;
  std::string text = p.to_text();
  Presentation q = Presentation::from_text(text);
  CHECK(q.generators == p.generators);
  CHECK(q.relators.size() == p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    CHECK(q.relators[i] == p.relators[i]);
    CHECK(q.tags[i] == p.tags[i]);
  }
}

TEST_CASE("todd_coxeter on cyclic groups") {
  CHECK(todd_coxeter(cyclic_pres(5), {}) == 5ull);
  CHECK(todd_coxeter(cyclic_pres(1), {}) == 1ull);
  // Subgroup <a^2> in C_6 has index 2.
  Presentation c6 = cyclic_pres(6);
  CHECK(todd_coxeter(c6, {Word::gen(0).power(2)}) == 2ull);
}

TEST_CASE("todd_coxeter on Sym(3) and overflow behavior") {
  CHECK(todd_coxeter(sym3_pres(), {}) == 6ull);
  // Free group of rank 1: overflow expected.
  Presentation fg;
  fg.generators = {"a"};
  CHECK(todd_coxeter(fg, {}, 100) == std::nullopt);
}

TEST_CASE("todd_coxeter matches brute-force order on random small groups") {
  std::mt19937 rng(9);
  int done = 0;
  while (done < 20) {
    unsigned n = 4 + rng() % 4;
    std::vector<Perm> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<unsigned> v(n);
      for (unsigned i = 0; i < n; ++i)
        v[i] = i;
      std::shuffle(v.begin(), v.end(), rng);
      gens.push_back(Perm{v});
    }
    PermGroup grp(n, gens);
    if (grp.order() > 60 || grp.order() < 2)
      continue;
    auto brute = closure(n, gens).size();
    TableGroup t = TableGroup::from_perm_group(grp);
    CHECK(todd_coxeter(regular_pres(t), {}) == brute);
    ++done;
  }
}

TEST_CASE("relator_check against permutation assignments") {
  Presentation p;
  p.generators = {"a"};
  p.add_relator(Word::gen(0).power(2));
  CHECK(relators_hold(p, {Perm::parse_cycles("(1 2)", 2)}));
  Presentation p3;
  p3.generators = {"a"};
  p3.add_relator(Word::gen(0).power(3));
  auto checks = relator_check(p3, {Perm::parse_cycles("(1 2)", 2)});
  CHECK_FALSE(checks[0]);
}

TEST_CASE("verify_presentation full enumeration") {
  PermGroup c4(4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  auto rep = verify_presentation(cyclic_pres(4), c4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  CHECK(rep.ok());
  CHECK(*rep.concluded_order == 4);
  CHECK(rep.surjective);
}

TEST_CASE("verify_presentation subgroup-index strategy") {
  // Sym(3) over the subgroup <a> (order 2): index 3.
  PermGroup s3(3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
  auto rep = verify_presentation(sym3_pres(), s3,
                                 {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)},
                                 VerifyStrategy::subgroup_index, {Word::gen(0)}, 2);
  CHECK(rep.ok());
  CHECK(rep.index == 3);
}

TEST_CASE("mutation: deleting any relator breaks verification") {
  PermGroup c4(4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  Presentation p = cyclic_pres(4);
  for (std::size_t drop = 0; drop < p.relators.size(); ++drop) {
    Presentation q;
    q.generators = p.generators;
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (i != drop)
        q.add_relator(p.relators[i]);
    auto rep = verify_presentation(q, c4, {Perm::parse_cycles("(1 2 3 4)", 4)},
                                   VerifyStrategy::full_enumeration, {}, 1, 2000);
    CHECK_FALSE(rep.ok());
  }
  PermGroup s3(3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
  Presentation sp = sym3_pres();
  for (std::size_t drop = 0; drop < sp.relators.size(); ++drop) {
    Presentation q;
    q.generators = sp.generators;
    for (std::size_t i = 0; i < sp.relators.size(); ++i)
      if (i != drop)
        q.add_relator(sp.relators[i]);
    auto rep = verify_presentation(
        q, s3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)},
        VerifyStrategy::full_enumeration, {}, 1, 2000);
    CHECK_FALSE(rep.ok());
  }
}
