#include <doctest.h>

#include "polypres/actpres.hpp"
#include "polypres/catalog.hpp"
#include "polypres/fpres.hpp"

using namespace polypres;

namespace {

PermGroup sym(unsigned n) {
  std::vector<Perm> gens{Perm::parse_cycles("(1 2)", n)};
  if (n > 2) {
    std::string c = "(";
    for (unsigned i = 1; i <= n; ++i)
      c += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(Perm::parse_cycles(c, n));
  }
  return PermGroup(n, gens);
}

} // namespace

TEST_CASE("build_section invariants on small pairs") {
  auto cat = small_group_catalog();
  int pairs = 0;
  for (const auto &[name, g] : cat) {
    if (g.order() > 48)
      continue;
    TableGroup tg = TableGroup::from_perm_group(g, 64);
    auto elems = g.elements();
    auto subs = all_subgroups(tg);
    for (const auto &sub : subs) {
      if (pairs > 200)
        break;
      std::vector<Perm> members;
      for (unsigned idx : sub)
        members.push_back(elems[idx]);
      PermGroup h = subgroup_from_elements(g, members);
      SectionData s = build_section(g, h);
      ++pairs;
      unsigned n = s.coset_count();
      CHECK(s.sigma[0].is_identity());
      for (unsigned f = 0; f < n; ++f) {
        // sigma lands in the right coset.
        CHECK(s.cosets.coset_of(s.sigma[f]) == f);
        if (s.bar[f] != f) {
          CHECK(s.sigma[s.bar[f]] == s.sigma[f].inverse());
        } else {
          CHECK(s.h_contains(s.sigma[f] * s.sigma[f]));
          // iota_f fixes theta_f, and iota_f^2 is conjugation by theta_f.
          Perm theta = s.theta[f];
          CHECK(s.iota(f, theta) == theta);
          for (const Perm &x : s.h_f[f])
            CHECK(s.iota(f, s.iota(f, x)) == x.conjugate_by(theta));
        }
        // P_f transversal: identity first, reps hit all cosets of H_f once.
        CHECK(s.p_f[f][0].is_identity());
        CHECK(s.p_f[f].size() * s.h_f[f].size() == s.h_elements.size());
        // Q sets contain the identity.
        for (unsigned f2 = 0; f2 < n; ++f2)
          CHECK(s.q_ff[f][f2][0].is_identity());
      }
    }
  }
  CHECK(pairs > 30);
}

TEST_CASE("normal form reconstructs elements") {
  PermGroup g = sym(4);
  PermGroup h = g.point_stabilizer(0);
  SectionData s = build_section(g, h);
  CHECK(normal_form(Perm(4), s).coset == 0);
  for (const Perm &x : g.elements()) {
    NormalForm nf = normal_form(x, s);
    CHECK(nf.rho * s.sigma[nf.coset] * nf.lambda == x);
    CHECK(s.h_contains(nf.lambda));
  }
  // sigma(f) has normal form (1, f, 1).
  for (unsigned f = 0; f < s.coset_count(); ++f) {
    NormalForm nf = normal_form(s.sigma[f], s);
    CHECK(nf.coset == f);
    CHECK(nf.rho.is_identity());
    CHECK(nf.lambda.is_identity());
  }
}

TEST_CASE("Sym(3) with a non-normal C2: one self-paired nontrivial coset") {
  PermGroup g = sym(3);
  PermGroup h(3, {Perm::parse_cycles("(1 2)", 3)});
  SectionData s = build_section(g, h);
  CHECK(s.coset_count() == 2);
  CHECK(s.bar[1] == 1);
  CHECK(s.h_contains(s.sigma[1] * s.sigma[1]));
}

TEST_CASE("theorem presentation: C4 regular action") {
  PermGroup c4(4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  auto e = emit_theorem_presentation(c4, 0);
  CHECK(relators_hold(e.presentation, e.assignment));
  CHECK(todd_coxeter(e.presentation, {}) == 4ull);
}

TEST_CASE("theorem presentation: Sym(4) on 4 points") {
  auto e = emit_theorem_presentation(sym(4), 0);
  CHECK(relators_hold(e.presentation, e.assignment));
  CHECK(todd_coxeter(e.presentation, {}) == 24ull);
}

TEST_CASE("theorem presentation equals unreduced variant in presented order") {
  for (unsigned pick = 0; pick < 3; ++pick) {
    PermGroup g = pick == 0 ? sym(3) : (pick == 1 ? sym(4) : PermGroup(4, {Perm::parse_cycles("(1 2 3 4)", 4)}));
    auto reduced = emit_theorem_presentation(g, 0, nullptr, true);
    auto full = emit_theorem_presentation(g, 0, nullptr, false);
    CHECK(relators_hold(full.presentation, full.assignment));
    auto o1 = todd_coxeter(reduced.presentation, {});
    auto o2 = todd_coxeter(full.presentation, {});
    REQUIRE(o1.has_value());
    CHECK(o1 == o2);
  }
}

TEST_CASE("2-transitive corollary: Sym(3)") {
  auto e = emit_2transitive_presentation(sym(3), 0, 1);
  CHECK(relators_hold(e.presentation, e.assignment));
  CHECK(todd_coxeter(e.presentation, {}) == 6ull);
}

TEST_CASE("2-transitive corollary: degree-2 action has only x^2 = theta") {
  PermGroup c2(2, {Perm::parse_cycles("(1 2)", 2)});
  auto e = emit_2transitive_presentation(c2, 0, 1);
  CHECK(todd_coxeter(e.presentation, {}) == 2ull);
  // One generator "x", relator family (3) empty.
  CHECK(e.presentation.generators == std::vector<std::string>{"x"});
  REQUIRE(e.presentation.relators.size() == 1);
  CHECK(e.presentation.relators[0] == Word::gen(0).power(2));
}

TEST_CASE("2-transitive corollary: Sym(5) and Alt(4) sized cases") {
  auto e5 = emit_2transitive_presentation(sym(5), 0, 1);
  CHECK(relators_hold(e5.presentation, e5.assignment));
  CHECK(todd_coxeter(e5.presentation, {}) == 120ull);
  PermGroup a4(4, {Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(1 2)(3 4)", 4)});
  auto ea = emit_2transitive_presentation(a4, 0, 1);
  CHECK(relators_hold(ea.presentation, ea.assignment));
  CHECK(todd_coxeter(ea.presentation, {}) == 12ull);
}

TEST_CASE("greedy generators span the list") {
  PermGroup g = sym(4);
  auto elems = g.elements();
  auto gens = greedy_generators(elems);
  CHECK(PermGroup(4, gens).order() == 24);
  CHECK(gens.size() <= 3);
}
