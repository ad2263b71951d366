#ifndef POLYPRES_TABLE_GROUP_HPP
#define POLYPRES_TABLE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polypres/perm.hpp"

namespace polypres {

// Finite group as an explicit multiplication table. Element 0 is the
// identity. Bounded at 65535 elements (indices are uint16).
class TableGroup {
public:
  TableGroup() = default;
  // table[i*n+j] = index of element i * j; validated on construction.
  TableGroup(unsigned n, std::vector<std::uint16_t> table, std::string name = "");

  unsigned size() const { return n_; }
  const std::string &name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  unsigned mul(unsigned a, unsigned b) const { return table_[a * n_ + b]; }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned identity() const { return 0; }
  unsigned element_order(unsigned a) const;

  unsigned power(unsigned a, long e) const;
  unsigned conj(unsigned a, unsigned b) const; // b^-1 a b
  unsigned comm(unsigned a, unsigned b) const; // a b a^-1 b^-1

  // Multiset of element orders, sorted.
  std::vector<unsigned> order_spectrum() const;

  bool is_abelian() const;

  // From a permutation group with |G| <= limit; element 0 is the identity,
  // elements sorted lexicographically.
  static TableGroup from_perm_group(const PermGroup &g, unsigned long long limit = 512);
  static TableGroup from_elements(const std::vector<Perm> &sorted_elements);
  static TableGroup cyclic(unsigned n);

  // Left-regular permutation representation (degree = |G|).
  PermGroup regular_representation() const;

  // Small generating set found greedily (deterministic).
  std::vector<unsigned> small_generating_set() const;

private:
  unsigned n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  std::string name_;
};

// Generator-image backtracking with order-spectrum pre-filter. Returns an
// element bijection g1 -> g2 that is multiplicative, or nullopt.
// Requires both orders <= 512.
std::optional<std::vector<unsigned>> table_isomorphism(const TableGroup &g1,
                                                       const TableGroup &g2);

bool is_isomorphic(const TableGroup &g1, const TableGroup &g2);
bool is_isomorphic(const PermGroup &g1, const PermGroup &g2);

} // namespace polypres

#endif
