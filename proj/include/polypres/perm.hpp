#ifndef POLYPRES_PERM_HPP
#define POLYPRES_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polypres {

// Permutation of {0, ..., n-1}, stored as the image array: images[i] is the
// image of point i. Left-action convention throughout: (p * q)(x) = p(q(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned n);                      // identity
  explicit Perm(std::vector<unsigned> images);    // checked bijection

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned x) const { return images_[x]; }
  const std::vector<unsigned> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm &rhs) const;          // (*this)(rhs(x))
  Perm conjugate_by(const Perm &t) const;         // t^-1 * (*this) * t
  Perm power(long e) const;

  unsigned order() const;

  bool operator==(const Perm &rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Perm &rhs) const { return images_ != rhs.images_; }
  bool operator<(const Perm &rhs) const { return images_ < rhs.images_; }

  // Cycle notation, 1-based points: "(1 2)(3 4)"; identity prints as "()".
  std::string to_cycles() const;
  static Perm parse_cycles(const std::string &text, unsigned n);

  // Extends to a larger degree, fixing the new points.
  Perm extended(unsigned n) const;

private:
  std::vector<unsigned> images_;
};

struct ChainLevel {
  unsigned base = 0;
  std::vector<unsigned> orbit;                 // in BFS discovery order
  std::vector<std::optional<Perm>> transversal; // indexed by point; t(base) = point
  std::vector<Perm> gens;                      // generators of this level's group
};

// Stabilizer chain (deterministic Schreier-Sims, base = smallest moved
// points first).
struct Chain {
  std::vector<ChainLevel> levels;
  unsigned long long order() const;
  bool contains(const Perm &p) const;
};

class PermGroup {
public:
  PermGroup() = default;
  PermGroup(unsigned degree, std::vector<Perm> generators);

  unsigned degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }

  unsigned long long order() const;
  bool contains(const Perm &p) const;
  bool is_subgroup_of(const PermGroup &g) const;

  std::vector<unsigned> orbit(unsigned point) const;
  // Orbit of `point` together with transversal elements t_x (t_x(point) = x),
  // in BFS discovery order.
  void orbit_transversal(unsigned point, std::vector<unsigned> &orbit,
                         std::vector<Perm> &transversal) const;

  PermGroup point_stabilizer(unsigned point) const;

  // All elements via the chain; throws if order exceeds `limit`.
  std::vector<Perm> elements(unsigned long long limit = 200000) const;

  const Chain &chain() const;

  // First base point of the chain is forced to `point` (used by stabilizers).
  static Chain build_chain(unsigned degree, const std::vector<Perm> &gens,
                           std::optional<unsigned> first_base = std::nullopt);

private:
  unsigned degree_ = 0;
  std::vector<Perm> gens_;
  mutable std::optional<Chain> chain_;
};

struct DoubleCosetDecomposition {
  std::vector<Perm> reps;                  // identity coset first
  std::vector<unsigned> membership;        // element index -> coset index
  std::vector<Perm> elements;              // group elements, sorted
  unsigned coset_of(const Perm &p) const;  // lookup via sorted `elements`
};

// Decomposition of G into (H,K)-double cosets; requires |G| <= 200000 and
// that H, K are membership-verified subgroups of G. Cosets are ordered by
// their lexicographically smallest element, so the identity coset is first,
// and each rep is that smallest element.
DoubleCosetDecomposition double_cosets(const PermGroup &g, const PermGroup &h,
                                       const PermGroup &k);

struct TransitivityProfile {
  unsigned k = 0;   // largest t such that the action on t-tuples is transitive
  bool sharp = false;
};

TransitivityProfile transitivity_profile(const PermGroup &g);

// Transversal words over the group's generators (and their inverses),
// supporting factorization of elements as words in the original generators.
// Letters: i >= 0 means generator i, negative values ~i mean its inverse.
class WordChain {
public:
  explicit WordChain(const PermGroup &g);

  // Word w with evaluate(w) == p, letters indexing g.generators().
  // Throws if p is not a member.
  std::vector<int> factor(const Perm &p) const;

  static Perm evaluate(const std::vector<Perm> &gens,
                       const std::vector<int> &word, unsigned degree);

private:
  struct Level {
    unsigned base;
    std::vector<std::optional<Perm>> transversal;
    std::vector<std::vector<int>> words;
    std::vector<Perm> gens;
    std::vector<std::vector<int>> gen_words;
  };
  unsigned degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Brute-force closure of a generating set; throws if it exceeds `limit`.
// Oracle counterpart of the stabilizer chain (spec'd for |G| <= 5000).
std::vector<Perm> closure(unsigned degree, const std::vector<Perm> &gens,
                          std::size_t limit = 200000);

} // namespace polypres

#endif
