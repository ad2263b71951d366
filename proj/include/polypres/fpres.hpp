#ifndef POLYPRES_FPRES_HPP
#define POLYPRES_FPRES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polypres/perm.hpp"
#include "polypres/table_group.hpp"

namespace polypres {

// Freely reduced word over an abstract generator alphabet. Letters: value
// i >= 0 is generator i, ~i is its inverse.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> letters) { for (int l : letters) append(l); }

  static Word gen(int i) { return Word(std::vector<int>{i}); }

  const std::vector<int> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  void append(int letter);
  Word operator*(const Word &rhs) const;
  Word inverse() const;
  Word power(long e) const;
  Word conjugate_by(const Word &t) const;      // t^-1 * w * t
  static Word commutator(const Word &x, const Word &y); // x y x^-1 y^-1

  bool operator==(const Word &rhs) const { return letters_ == rhs.letters_; }
  bool operator<(const Word &rhs) const { return letters_ < rhs.letters_; }

private:
  std::vector<int> letters_;
};

enum class RelatorTag { none, type_i, type_ii, base, extra };

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<RelatorTag> tags; // parallel to relators (tag per relator)

  int gen_index(const std::string &name) const; // -1 if absent
  void add_relator(Word w, RelatorTag tag = RelatorTag::none);
  // L = R stored as relator L * R^-1.
  void add_relation(const Word &lhs, const Word &rhs, RelatorTag tag = RelatorTag::none);

  std::string word_to_string(const Word &w) const;
  Word parse_word(const std::string &text) const;

  // Text format: "gens:" line, then "rel:" lines, "#" comments.
  std::string to_text() const;
  static Presentation from_text(const std::string &text);
};

// Coset enumeration (HLT relator tracing with coincidence handling).
// Returns the index of the subgroup generated by `subgroup_gens`, or nullopt
// if live cosets would exceed max_cosets.
std::optional<unsigned long long> todd_coxeter(const Presentation &p,
                                               const std::vector<Word> &subgroup_gens,
                                               std::size_t max_cosets = 1000000);

// Permutation action of each generator on the live cosets (renumbered in
// discovery order); the degree is the subgroup index.
std::optional<std::vector<Perm>> coset_action(const Presentation &p,
                                              const std::vector<Word> &subgroup_gens,
                                              std::size_t max_cosets = 1000000);

// Per-relator evaluation under an assignment of permutations to generators.
std::vector<bool> relator_check(const Presentation &p, const std::vector<Perm> &assignment);
bool relators_hold(const Presentation &p, const std::vector<Perm> &assignment);

// Same over a multiplication-table group (assignment maps generator index to
// an element index).
std::vector<bool> relator_check(const Presentation &p, const TableGroup &g,
                                const std::vector<unsigned> &assignment);

enum class VerifyStrategy { full_enumeration, subgroup_index };

struct VerificationReport {
  std::vector<bool> relator_check;
  bool surjective = false;
  bool overflow = false;
  std::string enumeration; // description of what was enumerated
  unsigned long long index = 0;
  std::optional<unsigned long long> concluded_order;
  bool ok() const { return concluded_order.has_value(); }
};

// Two-sided verification: the assignment must satisfy all relators (so the
// presented group surjects onto <images>), images must generate `target`,
// and the enumeration must bound the presented group's order by |target|.
// With subgroup_index, `subgroup_gens` are words whose images generate a
// subgroup of certified order `subgroup_order`.
VerificationReport verify_presentation(const Presentation &p, const PermGroup &target,
                                       const std::vector<Perm> &assignment,
                                       VerifyStrategy strategy = VerifyStrategy::full_enumeration,
                                       const std::vector<Word> &subgroup_gens = {},
                                       unsigned long long subgroup_order = 1,
                                       std::size_t max_cosets = 1000000);

Perm evaluate_word(const Word &w, const std::vector<Perm> &assignment, unsigned degree);

} // namespace polypres

#endif
