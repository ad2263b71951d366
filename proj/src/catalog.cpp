#include "polypres/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polypres {

namespace {

Perm cycle(const std::string &c, unsigned n) { return Perm::parse_cycles(c, n); }

PermGroup cyclic_perm(unsigned n) {
  if (n == 1)
    return PermGroup(1, {});
  std::string c = "(";
  for (unsigned i = 1; i <= n; ++i)
    c += std::to_string(i) + (i < n ? " " : ")");
  return PermGroup(n, {cycle(c, n)});
}

PermGroup sym_perm(unsigned n) {
  std::vector<Perm> gens{cycle("(1 2)", n)};
  if (n > 2) {
    std::string c = "(";
    for (unsigned i = 1; i <= n; ++i)
      c += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(cycle(c, n));
  }
  return PermGroup(n, gens);
}

PermGroup dihedral_perm(unsigned n) { // order 2n on n points
  std::string rot = "(";
  for (unsigned i = 1; i <= n; ++i)
    rot += std::to_string(i) + (i < n ? " " : ")");
  std::vector<unsigned> refl(n);
  for (unsigned i = 0; i < n; ++i)
    refl[i] = (n - i) % n;
  return PermGroup(n, {cycle(rot, n), Perm(refl)});
}

// GL2(3) and SL2(3) acting on the eight nonzero vectors of GF(3)^2,
// point index = 3x + y - 1 for the column vector (x, y).
Perm mat_action_gf3(int a, int b, int c, int d) {
  auto mod3 = [](int v) { return ((v % 3) + 3) % 3; };
  std::vector<unsigned> im(8);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0)
        continue;
      int nx = mod3(a * x + b * y), ny = mod3(c * x + d * y);
      im[static_cast<unsigned>(3 * x + y - 1)] = static_cast<unsigned>(3 * nx + ny - 1);
    }
  return Perm(im);
}

} // namespace

std::vector<NamedPermGroup> small_group_catalog() {
  std::vector<NamedPermGroup> cat;
  for (unsigned n = 1; n <= 12; ++n)
    cat.push_back({"C" + std::to_string(n), cyclic_perm(n)});
  cat.push_back({"C2xC2", PermGroup(4, {cycle("(1 2)", 4), cycle("(3 4)", 4)})});
  cat.push_back({"C2xC2xC2", PermGroup(6, {cycle("(1 2)", 6), cycle("(3 4)", 6), cycle("(5 6)", 6)})});
  cat.push_back({"C4xC2", PermGroup(6, {cycle("(1 2 3 4)", 6), cycle("(5 6)", 6)})});
  cat.push_back({"Sym3", sym_perm(3)});
  cat.push_back({"Sym4", sym_perm(4)});
  cat.push_back({"Alt4", PermGroup(4, {cycle("(1 2 3)", 4), cycle("(1 2)(3 4)", 4)})});
  cat.push_back({"D8", dihedral_perm(4)});
  cat.push_back({"D10", dihedral_perm(5)});
  cat.push_back({"D12", dihedral_perm(6)});
  cat.push_back({"Q8", PermGroup(8, {cycle("(1 2 3 4)(5 6 7 8)", 8),
                                     cycle("(1 5 3 7)(2 8 4 6)", 8)})});
  cat.push_back({"Dic3", PermGroup(12, {cycle("(1 2 3 4 5 6)(7 8 9 10 11 12)", 12),
                                        cycle("(1 7 4 10)(2 12 5 9)(3 11 6 8)", 12)})});
  cat.push_back({"SL2_3", PermGroup(8, {mat_action_gf3(1, 1, 0, 1), mat_action_gf3(0, -1, 1, 0)})});
  cat.push_back({"GL2_3", PermGroup(8, {mat_action_gf3(2, 0, 0, 1), mat_action_gf3(-1, 1, 0, 1),
                                        mat_action_gf3(0, -1, -1, 0)})});
  for (auto &[name, g] : cat) {
    if (g.order() > 48)
      throw std::logic_error("catalog group exceeds order 48: " + name);
  }
  return cat;
}

std::vector<std::vector<unsigned>> all_subgroups(const TableGroup &t) {
  unsigned n = t.size();
  if (n > 64)
    throw std::invalid_argument("subgroup enumeration bounded at order 64");
  using Mask = std::uint64_t;
  auto close = [&](Mask seed) -> Mask {
    std::vector<unsigned> work;
    Mask have = seed | 1ull; // identity
    for (unsigned i = 0; i < n; ++i)
      if (have >> i & 1)
        work.push_back(i);
    for (std::size_t h = 0; h < work.size(); ++h) {
      for (std::size_t k = 0; k <= h; ++k) {
        for (unsigned prod : {t.mul(work[h], work[k]), t.mul(work[k], work[h])}) {
          if (!(have >> prod & 1)) {
            have |= 1ull << prod;
            work.push_back(prod);
          }
        }
      }
      unsigned iv = t.inv(work[h]);
      if (!(have >> iv & 1)) {
        have |= 1ull << iv;
        work.push_back(iv);
      }
    }
    return have;
  };

  std::set<Mask> subgroups;
  subgroups.insert(1ull);
  // Cyclic subgroups first, then close under pairwise joins.
  std::vector<Mask> cyclics;
  for (unsigned a = 1; a < n; ++a)
    cyclics.push_back(close(1ull << a));
  for (Mask m : cyclics)
    subgroups.insert(m);
  for (;;) {
    std::vector<Mask> current(subgroups.begin(), subgroups.end());
    bool grew = false;
    for (Mask a : current)
      for (Mask b : cyclics) {
        if ((a | b) == a)
          continue;
        Mask j = close(a | b);
        if (subgroups.insert(j).second)
          grew = true;
      }
    if (!grew)
      break;
  }
  std::vector<std::vector<unsigned>> out;
  for (Mask m : subgroups) {
    std::vector<unsigned> elems;
    for (unsigned i = 0; i < n; ++i)
      if (m >> i & 1)
        elems.push_back(i);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  return out;
}

PermGroup subgroup_from_elements(const PermGroup &g, const std::vector<Perm> &elements) {
  std::vector<Perm> gens;
  for (const Perm &p : elements)
    if (!p.is_identity())
      gens.push_back(p);
  return PermGroup(g.degree(), gens);
}

namespace {

Presentation pres(const std::vector<std::string> &gens,
                  const std::vector<std::string> &relators) {
  Presentation p;
  p.generators = gens;
  for (const auto &r : relators)
    p.add_relator(p.parse_word(r));
  return p;
}

} // namespace

TableGroup table_from_presentation(const Presentation &p, const std::string &name,
                                   std::size_t max_cosets) {
  auto action = coset_action(p, {}, max_cosets);
  if (!action)
    throw std::runtime_error("presentation did not enumerate: " + name);
  unsigned degree = action->empty() ? 1 : (*action)[0].degree();
  PermGroup g(degree, *action);
  TableGroup t = TableGroup::from_perm_group(g, 65535);
  t.set_name(name);
  return t;
}

std::vector<TableGroup> groups_of_order(unsigned n) {
  struct Entry {
    unsigned order;
    const char *name;
    std::vector<std::string> gens;
    std::vector<std::string> rels;
  };
  static const std::vector<Entry> entries = {
      {1, "C1", {"a"}, {"a"}},
      {2, "C2", {"a"}, {"a^2"}},
      {3, "C3", {"a"}, {"a^3"}},
      {4, "C4", {"a"}, {"a^4"}},
      {4, "C2xC2", {"a", "b"}, {"a^2", "b^2", "a*b*a^-1*b^-1"}},
      {5, "C5", {"a"}, {"a^5"}},
      {6, "C6", {"a"}, {"a^6"}},
      {6, "Sym3", {"a", "b"}, {"a^2", "b^3", "(a*b)^2"}},
      {7, "C7", {"a"}, {"a^7"}},
      {8, "C8", {"a"}, {"a^8"}},
      {8, "C4xC2", {"a", "b"}, {"a^4", "b^2", "a*b*a^-1*b^-1"}},
      {8, "C2xC2xC2",
       {"a", "b", "c"},
       {"a^2", "b^2", "c^2", "a*b*a^-1*b^-1", "a*c*a^-1*c^-1", "b*c*b^-1*c^-1"}},
      {8, "D8", {"a", "b"}, {"a^4", "b^2", "(a*b)^2"}},
      {8, "Q8", {"a", "b"}, {"a^4", "a^2*b^-2", "b*a*b^-1*a"}},
      {9, "C9", {"a"}, {"a^9"}},
      {9, "C3xC3", {"a", "b"}, {"a^3", "b^3", "a*b*a^-1*b^-1"}},
      {10, "C10", {"a"}, {"a^10"}},
      {10, "D10", {"a", "b"}, {"a^5", "b^2", "(a*b)^2"}},
      {11, "C11", {"a"}, {"a^11"}},
      {12, "C12", {"a"}, {"a^12"}},
      {12, "C6xC2", {"a", "b"}, {"a^6", "b^2", "a*b*a^-1*b^-1"}},
      {12, "D12", {"a", "b"}, {"a^6", "b^2", "(a*b)^2"}},
      {12, "Alt4", {"a", "b"}, {"a^3", "b^2", "(a*b)^3"}},
      {12, "Dic3", {"a", "b"}, {"a^6", "a^3*b^-2", "b*a*b^-1*a"}},
      {13, "C13", {"a"}, {"a^13"}},
      {14, "C14", {"a"}, {"a^14"}},
      {14, "D14", {"a", "b"}, {"a^7", "b^2", "(a*b)^2"}},
      {15, "C15", {"a"}, {"a^15"}},
      {16, "C16", {"a"}, {"a^16"}},
      {16, "C4xC4", {"a", "b"}, {"a^4", "b^4", "a*b*a^-1*b^-1"}},
      {16, "C2xC2sC4", // (C2 x C2) : C4, the C4 swapping the factors
       {"a", "b", "c"},
       {"a^4", "b^2", "c^2", "b*c*b^-1*c^-1", "a*b*a^-1*c^-1", "a*c*a^-1*b^-1"}},
      {16, "C4sC4", {"a", "b"}, {"a^4", "b^4", "b*a*b^-1*a"}},
      {16, "C8xC2", {"a", "b"}, {"a^8", "b^2", "a*b*a^-1*b^-1"}},
      {16, "M16", {"a", "b"}, {"a^8", "b^2", "b*a*b^-1*a^-5"}},
      {16, "D16", {"a", "b"}, {"a^8", "b^2", "(a*b)^2"}},
      {16, "SD16", {"a", "b"}, {"a^8", "b^2", "b*a*b^-1*a^-3"}},
      {16, "Q16", {"a", "b"}, {"a^8", "a^4*b^-2", "b*a*b^-1*a"}},
      {16, "C4xC2xC2",
       {"a", "b", "c"},
       {"a^4", "b^2", "c^2", "a*b*a^-1*b^-1", "a*c*a^-1*c^-1", "b*c*b^-1*c^-1"}},
      {16, "D8xC2",
       {"a", "b", "c"},
       {"a^4", "b^2", "(a*b)^2", "c^2", "a*c*a^-1*c^-1", "b*c*b^-1*c^-1"}},
      {16, "Q8xC2",
       {"a", "b", "c"},
       {"a^4", "a^2*b^-2", "b*a*b^-1*a", "c^2", "a*c*a^-1*c^-1", "b*c*b^-1*c^-1"}},
      {16, "D8oC4", // central product: D8 and C4 glued over the centre
       {"a", "b", "c"},
       {"a^4", "b^2", "(a*b)^2", "c^4", "c^2*a^-2", "a*c*a^-1*c^-1", "b*c*b^-1*c^-1"}},
      {16, "C2^4",
       {"a", "b", "c", "d"},
       {"a^2", "b^2", "c^2", "d^2", "a*b*a^-1*b^-1", "a*c*a^-1*c^-1", "a*d*a^-1*d^-1",
        "b*c*b^-1*c^-1", "b*d*b^-1*d^-1", "c*d*c^-1*d^-1"}},
  };
  if (n < 1 || n > 16)
    throw std::invalid_argument("group catalog covers orders 1..16");
  std::vector<TableGroup> out;
  for (const auto &e : entries) {
    if (e.order != n)
      continue;
    TableGroup t = table_from_presentation(pres(e.gens, e.rels), e.name, 4096);
    if (t.size() != e.order)
      throw std::logic_error(std::string("catalog presentation has wrong order: ") + e.name);
    out.push_back(std::move(t));
  }
  return out;
}

} // namespace polypres
