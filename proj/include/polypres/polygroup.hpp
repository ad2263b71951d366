#ifndef POLYPRES_POLYGROUP_HPP
#define POLYPRES_POLYGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polypres/perm.hpp"
#include "polypres/table_group.hpp"

namespace polypres {

// Finite table-backed polygroup: hyperoperation with scalar identity and a
// compatible bar involution.
struct Polygroup {
  std::vector<std::string> labels;       // one per element
  unsigned identity = 0;
  std::vector<unsigned> bar;             // involution
  std::vector<std::vector<std::vector<unsigned>>> op; // op[a][b] = sorted set

  unsigned size() const { return static_cast<unsigned>(labels.size()); }
  const std::vector<unsigned> &product(unsigned a, unsigned b) const { return op[a][b]; }
  std::string table_text() const; // "a∘b = {...}" lines, ASCII rendering
};

struct AxiomFailure {
  std::string axiom;
  std::vector<unsigned> witness;
};

struct AxiomReport {
  bool associative = true;
  bool reproduction = true;
  bool scalar_identity = true;
  bool bar_involution = true;   // bar(e)=e, bar(bar(a))=a, bar(a o b)=bar(b) o bar(a)
  bool division = true;         // b/a = b o bar(a), a\b = bar(a) o b
  bool transposition = true;
  std::vector<AxiomFailure> failures;
  bool pass() const {
    return associative && reproduction && scalar_identity && bar_involution &&
           division && transposition;
  }
};

AxiomReport check_axioms(const Polygroup &p);

// The double-coset polygroup H\G/H: C(g1) o C(g2) = { C(g1 h g2) : h in H },
// identity H, bar C(g) = C(g^-1).
Polygroup double_coset_polygroup(const PermGroup &g, const PermGroup &h);
Polygroup double_coset_polygroup(const TableGroup &g, const std::vector<unsigned> &subgroup);

// Named small polygroups.
Polygroup polygroup_p2();
Polygroup polygroup_p3();
Polygroup group_as_polygroup(const TableGroup &g);

// Bijection preserving the hyperoperation, or nullopt. Bounded at 64.
std::optional<std::vector<unsigned>> polygroup_isomorphism(const Polygroup &p1,
                                                           const Polygroup &p2);
bool polygroup_isomorphic(const Polygroup &p1, const Polygroup &p2);

// ---- Function-backed polygroups on the extended monoid of nonnegative
// values with infinity. Sets are a finite part plus an optional ray to
// infinity (closed or open at the left end); infinity is tracked exactly.

struct LambdaSet {
  std::vector<int> finite;  // sorted, distinct, values >= 0
  bool ray = false;         // covers { v : v > from or v >= from } plus infinity
  int ray_from = 0;
  bool ray_closed = true;   // true: [from, inf]; false: (from, inf]
  bool infinity = false;    // infinity alone (implied when ray is set)

  static LambdaSet single(int v);
  static LambdaSet inf();
  static LambdaSet closed_ray(int from);  // [from, inf]
  static LambdaSet open_ray(int from);    // (from, inf]

  bool contains(int v) const;
  bool contains_infinity() const { return infinity || ray; }
  void insert(int v);
  void merge(const LambdaSet &other);
  void normalize();
  bool operator==(const LambdaSet &other) const;
  std::string to_string() const;

  // Restriction to {0..bound} plus infinity, as explicit values (-1 encodes
  // infinity); used by windowed axiom checks.
  std::vector<int> window(int bound) const;
};

enum class LambdaVariant {
  pb_bigk,  // residue field of size >= 3: a o a = [a, inf]
  pb_gf2,   // residue field GF(2): a o a = (a, inf]
  pg,       // the second hyperoperation: a o a = [a, inf]
  lattice,  // a o b = { a + b - 2c : 0 <= c <= min(a, b) }
};

// Hyperoperation on single values; -1 encodes infinity for the pb/pg
// variants (the lattice variant rejects it).
LambdaSet lambda_hyperop(LambdaVariant v, int a, int b);

// Product of sets: union of elementwise products (exact, symbolic rays).
LambdaSet lambda_hyperop(LambdaVariant v, const LambdaSet &a, const LambdaSet &b);

// alpha^n = alpha o ... o alpha (n factors, n >= 1).
LambdaSet hyper_power(LambdaVariant v, int a, unsigned n);

} // namespace polypres

#endif
