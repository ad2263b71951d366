#ifndef POLYPRES_CATALOG_HPP
#define POLYPRES_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polypres/fpres.hpp"
#include "polypres/perm.hpp"
#include "polypres/table_group.hpp"

namespace polypres {

struct NamedPermGroup {
  std::string name;
  PermGroup group;
};

// Small-group test corpus (orders <= 48): cyclic groups, dihedrals,
// symmetric/alternating groups, Q8, SL2(3), GL2(3), and a few products.
std::vector<NamedPermGroup> small_group_catalog();

// All subgroups of g (|G| <= 64), each as a sorted list of element indices
// into table; includes the trivial subgroup and g itself.
std::vector<std::vector<unsigned>> all_subgroups(const TableGroup &table);

// PermGroup generated by the given elements of g's element list.
PermGroup subgroup_from_elements(const PermGroup &g, const std::vector<Perm> &elements);

// Complete isomorphism-class catalog for orders 1..16, defined by
// presentations and realized via coset enumeration.
std::vector<TableGroup> groups_of_order(unsigned n);

// TableGroup realized from a presentation of a finite group (regular action).
TableGroup table_from_presentation(const Presentation &p, const std::string &name,
                                   std::size_t max_cosets = 1000000);

} // namespace polypres

#endif
