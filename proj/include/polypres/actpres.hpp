#ifndef POLYPRES_ACTPRES_HPP
#define POLYPRES_ACTPRES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polypres/fpres.hpp"
#include "polypres/perm.hpp"

namespace polypres {

// A presented subgroup with its generator images and a rewriting oracle
// expressing arbitrary elements as words in the named generators.
struct HContext {
  std::vector<std::string> names;
  std::vector<Perm> images;
  Presentation relators; // generators field mirrors `names`

  Word rewrite(const Perm &h) const;
  void ensure_chain() const;

private:
  mutable std::shared_ptr<WordChain> chain_;
  mutable std::shared_ptr<PermGroup> group_;
};

// The choice bundle for a pair (G, H): double cosets, section sigma,
// theta for self-paired cosets, subgroups H_f with the partial isomorphisms
// iota_f, transversals P_f, double-coset representative sets Q_{f,f'},
// orientation, and the total order on E - {e} (the coset index order).
struct SectionData {
  PermGroup group;
  PermGroup stabilizer;
  DoubleCosetDecomposition cosets;
  std::vector<Perm> h_elements; // sorted
  std::vector<unsigned> bar;
  std::vector<Perm> sigma;
  std::vector<Perm> theta;       // identity unless self-paired
  std::vector<std::vector<Perm>> h_f;          // sorted element lists
  std::vector<std::vector<Perm>> p_f;          // minimal coset reps, identity first
  std::vector<std::vector<std::vector<Perm>>> q_ff; // reps of H_f \ H / H_f'
  std::vector<bool> oriented;

  unsigned coset_count() const { return static_cast<unsigned>(cosets.reps.size()); }
  bool h_contains(const Perm &p) const;
  Perm iota(unsigned f, const Perm &h) const; // sigma(f)^-1 h sigma(f)
};

struct NormalForm {
  Perm rho;
  unsigned coset;
  Perm lambda;
};

// Variant knob for the self-paired sigma choice; the alternate picks the
// second admissible twist, giving a genuinely different section for
// morphism-checker tests.
struct SectionOptions {
  bool alternate_sigma = false;
};

SectionData build_section(const PermGroup &g, const PermGroup &h,
                          const SectionOptions &opts = {});

NormalForm normal_form(const Perm &g, const SectionData &s);

struct EmittedPresentation {
  Presentation presentation;
  std::vector<Perm> assignment; // parallel to presentation.generators
};

// Presentation of H by multiplication-table relators (generators: every
// nontrivial element).
HContext regular_context(const PermGroup &h, const std::string &prefix = "t");

// Recursive context: descend the point-stabilizer tower while the action is
// 2-transitive, then fall back to the regular presentation.
HContext recursive_context(const PermGroup &h, const std::vector<unsigned> &domain,
                           unsigned depth);

// Theorem-style presentation for a transitive action with H = G_{omega0}.
// The H presentation comes from `hctx` when given, else from the recursive
// strategy.
EmittedPresentation emit_theorem_presentation(const PermGroup &g, unsigned omega0,
                                              const HContext *hctx = nullptr,
                                              bool reduce_type2 = true);

// Same relation families, driven by an explicit SectionData and H context.
EmittedPresentation emit_theorem_from_section(const SectionData &s, const HContext &hctx,
                                              bool reduce_type2 = true);

// 2-transitive corollary: H plus one new generator.
EmittedPresentation emit_2transitive_presentation(const PermGroup &g, unsigned omega0,
                                                  unsigned omega1,
                                                  const HContext *hctx = nullptr);

// Deterministic generating subsequence of a sorted element list.
std::vector<Perm> greedy_generators(const std::vector<Perm> &sorted_elements);

} // namespace polypres

#endif
