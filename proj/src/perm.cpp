#include "polypres/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polypres {

Perm::Perm(unsigned n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image array is not a bijection");
    seen[x] = true;
  }
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<unsigned> im(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    im[i] = images_[rhs.images_[i]];
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::conjugate_by(const Perm &t) const { return t.inverse() * *this * t; }

Perm Perm::power(long e) const {
  Perm base = e >= 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
  Perm acc(degree());
  while (k) {
    if (k & 1)
      acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

unsigned Perm::order() const {
  unsigned long long ord = 1;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0, j = i;
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, static_cast<unsigned long long>(len));
  }
  return static_cast<unsigned>(ord);
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    unsigned j = i;
    bool first = true;
    do {
      if (!first)
        os << ' ';
      os << (j + 1);
      seen[j] = true;
      j = images_[j];
      first = false;
    } while (j != i);
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

Perm Perm::parse_cycles(const std::string &text, unsigned n) {
  std::vector<unsigned> im(n);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<bool> used(n, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("malformed cycle notation: expected '('");
    ++i;
    any_cycle = true;
    std::vector<unsigned> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed cycle notation: expected point");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > n)
        throw std::invalid_argument("cycle point out of range");
      unsigned pt = static_cast<unsigned>(v - 1);
      if (used[pt])
        throw std::invalid_argument("repeated point in cycles");
      used[pt] = true;
      cyc.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i, skip_ws();
    }
    if (i >= text.size())
      throw std::invalid_argument("malformed cycle notation: missing ')'");
    ++i; // ')'
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
      im[cyc[k]] = cyc[k + 1];
    if (cyc.size() >= 2)
      im[cyc.back()] = cyc.front();
    skip_ws();
  }
  if (!any_cycle)
    throw std::invalid_argument("empty cycle expression");
  return Perm(std::move(im));
}

Perm Perm::extended(unsigned n) const {
  if (n < degree())
    throw std::invalid_argument("cannot shrink permutation degree");
  std::vector<unsigned> im(n);
  std::iota(im.begin(), im.end(), 0u);
  for (unsigned i = 0; i < degree(); ++i)
    im[i] = images_[i];
  Perm p;
  p.images_ = std::move(im);
  return p;
}

unsigned long long Chain::order() const {
  unsigned long long o = 1;
  for (const auto &lvl : levels)
    o *= lvl.orbit.size();
  return o;
}

bool Chain::contains(const Perm &p) const {
  Perm g = p;
  for (const auto &lvl : levels) {
    unsigned img = g[lvl.base];
    if (img >= lvl.transversal.size() || !lvl.transversal[img])
      return false;
    g = lvl.transversal[img]->inverse() * g;
  }
  return g.is_identity();
}

namespace {

// Extends the orbit/transversal with the level's current generator set.
// Existing transversal entries are never rewritten, so sifting paths stay
// stable while the chain is being completed.
void extend_orbit(ChainLevel &lvl, unsigned degree) {
  if (lvl.transversal.empty()) {
    lvl.transversal.assign(degree, std::nullopt);
    lvl.transversal[lvl.base] = Perm(degree);
    lvl.orbit.push_back(lvl.base);
  }
  for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
    unsigned x = lvl.orbit[head];
    for (const Perm &g : lvl.gens) {
      unsigned y = g[x];
      if (!lvl.transversal[y]) {
        lvl.transversal[y] = g * *lvl.transversal[x];
        lvl.orbit.push_back(y);
      }
    }
  }
}

} // namespace

Chain PermGroup::build_chain(unsigned degree, const std::vector<Perm> &gens,
                             std::optional<unsigned> first_base) {
  Chain chain;
  std::vector<Perm> nontrivial;
  for (const Perm &g : gens)
    if (!g.is_identity())
      nontrivial.push_back(g);
  if (nontrivial.empty()) {
    if (first_base && degree > 0) {
      ChainLevel lvl;
      lvl.base = *first_base;
      chain.levels.push_back(std::move(lvl));
      extend_orbit(chain.levels[0], degree);
    }
    return chain;
  }

  auto smallest_moved = [&](const Perm &p) -> unsigned {
    for (unsigned x = 0; x < degree; ++x)
      if (p[x] != x)
        return x;
    throw std::logic_error("identity has no moved point");
  };

  // Classical nested strong generating sets: a generator fixing the bases
  // of levels 0..m-1 belongs to the generating set of every such level m.
  auto add_strong = [&](const Perm &r, std::size_t start) {
    std::size_t m = start;
    for (;;) {
      if (m == chain.levels.size()) {
        ChainLevel nl;
        nl.base = (m == 0 && first_base) ? *first_base : smallest_moved(r);
        chain.levels.push_back(std::move(nl));
      }
      chain.levels[m].gens.push_back(r);
      extend_orbit(chain.levels[m], degree);
      if (r[chain.levels[m].base] != chain.levels[m].base)
        break;
      ++m;
    }
  };

  {
    // Deterministic first base: forced, or smallest moved point overall.
    unsigned b0 = first_base ? *first_base : degree;
    if (!first_base)
      for (const Perm &g : nontrivial)
        b0 = std::min(b0, smallest_moved(g));
    ChainLevel lvl;
    lvl.base = b0;
    chain.levels.push_back(std::move(lvl));
    extend_orbit(chain.levels[0], degree);
  }
  for (const Perm &g : nontrivial)
    add_strong(g, 0);

  // Process levels top-down. Strong generators discovered at level i are
  // inserted only at levels >= i+1, so earlier levels stay verified.
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    for (std::size_t oi = 0; oi < chain.levels[i].orbit.size(); ++oi) {
      unsigned x = chain.levels[i].orbit[oi];
      const Perm tx = *chain.levels[i].transversal[x];
      for (std::size_t gi = 0; gi < chain.levels[i].gens.size(); ++gi) {
        for (;;) {
          const Perm g = chain.levels[i].gens[gi];
          unsigned y = g[x];
          Perm residue = chain.levels[i].transversal[y]->inverse() * g * tx;
          for (std::size_t j = i + 1;
               !residue.is_identity() && j < chain.levels.size(); ++j) {
            unsigned img = residue[chain.levels[j].base];
            if (!chain.levels[j].transversal[img])
              break;
            residue = chain.levels[j].transversal[img]->inverse() * residue;
          }
          if (residue.is_identity())
            break;
          add_strong(residue, i + 1);
        }
      }
    }
  }
  return chain;
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm &g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

const Chain &PermGroup::chain() const {
  if (!chain_)
    chain_ = build_chain(degree_, gens_);
  return *chain_;
}

unsigned long long PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    return false;
  return chain().contains(p);
}

bool PermGroup::is_subgroup_of(const PermGroup &g) const {
  for (const Perm &x : gens_)
    if (!g.contains(x))
      return false;
  return true;
}

std::vector<unsigned> PermGroup::orbit(unsigned point) const {
  std::vector<unsigned> orb;
  std::vector<Perm> tr;
  orbit_transversal(point, orb, tr);
  return orb;
}

void PermGroup::orbit_transversal(unsigned point, std::vector<unsigned> &orbit,
                                  std::vector<Perm> &transversal) const {
  orbit.clear();
  transversal.clear();
  std::vector<int> where(degree_, -1);
  orbit.push_back(point);
  transversal.push_back(Perm(degree_));
  where[point] = 0;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    unsigned x = orbit[head];
    for (const Perm &g : gens_) {
      unsigned y = g[x];
      if (where[y] < 0) {
        where[y] = static_cast<int>(orbit.size());
        orbit.push_back(y);
        transversal.push_back(g * transversal[head]);
      }
    }
  }
}

PermGroup PermGroup::point_stabilizer(unsigned point) const {
  if (point >= degree_)
    throw std::invalid_argument("stabilizer point out of range");
  Chain c = build_chain(degree_, gens_, point);
  std::vector<Perm> sgens;
  if (!c.levels.empty()) {
    for (std::size_t i = 1; i < c.levels.size(); ++i)
      for (const Perm &g : c.levels[i].gens)
        sgens.push_back(g);
  }
  std::sort(sgens.begin(), sgens.end());
  sgens.erase(std::unique(sgens.begin(), sgens.end()), sgens.end());
  std::vector<Perm> cleaned;
  for (auto &g : sgens)
    if (!g.is_identity())
      cleaned.push_back(g);
  return PermGroup(degree_, cleaned);
}

std::vector<Perm> PermGroup::elements(unsigned long long limit) const {
  const Chain &c = chain();
  if (c.order() > limit)
    throw std::runtime_error("group too large to enumerate");
  std::vector<Perm> elems{Perm(degree_)};
  for (auto it = c.levels.rbegin(); it != c.levels.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(elems.size() * it->orbit.size());
    for (unsigned x : it->orbit) {
      const Perm &t = *it->transversal[x];
      for (const Perm &e : elems)
        next.push_back(t * e);
    }
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

DoubleCosetDecomposition double_cosets(const PermGroup &g, const PermGroup &h,
                                       const PermGroup &k) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g))
    throw std::invalid_argument("double_cosets: subgroup check failed");
  DoubleCosetDecomposition dc;
  dc.elements = g.elements();
  const auto &elems = dc.elements;
  auto index_of = [&](const Perm &p) -> unsigned {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || !(*it == p))
      throw std::runtime_error("element outside group in double_cosets");
    return static_cast<unsigned>(it - elems.begin());
  };
  std::vector<Perm> helems = h.elements();
  std::vector<Perm> kelems = k.elements();
  dc.membership.assign(elems.size(), static_cast<unsigned>(-1));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (dc.membership[i] != static_cast<unsigned>(-1))
      continue;
    unsigned idx = static_cast<unsigned>(dc.reps.size());
    dc.reps.push_back(elems[i]); // scan order is sorted, so this is minimal
    for (const Perm &a : helems) {
      Perm ag = a * elems[i];
      for (const Perm &b : kelems)
        dc.membership[index_of(ag * b)] = idx;
    }
  }
  return dc;
}

unsigned DoubleCosetDecomposition::coset_of(const Perm &p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p))
    throw std::runtime_error("element not in decomposed group");
  return membership[static_cast<unsigned>(it - elements.begin())];
}

TransitivityProfile transitivity_profile(const PermGroup &g) {
  TransitivityProfile tp;
  unsigned n = g.degree();
  if (n == 0)
    return tp;
  PermGroup cur = g;
  std::vector<bool> fixed(n, false);
  unsigned remaining = n;
  unsigned long long falling = 1;
  while (remaining > 0) {
    unsigned pt = 0;
    while (pt < n && fixed[pt])
      ++pt;
    std::vector<unsigned> orb = cur.orbit(pt);
    unsigned count = 0;
    for (unsigned x : orb)
      if (!fixed[x])
        ++count;
    if (count != remaining)
      break;
    tp.k += 1;
    falling *= remaining;
    fixed[pt] = true;
    remaining -= 1;
    if (remaining == 0)
      break;
    cur = cur.point_stabilizer(pt);
  }
  tp.sharp = tp.k > 0 && g.order() == falling;
  return tp;
}

namespace {

std::vector<int> invert_word(const std::vector<int> &w) {
  std::vector<int> inv;
  inv.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    inv.push_back(~*it);
  return inv;
}

} // namespace

WordChain::WordChain(const PermGroup &g) : degree_(g.degree()), gens_(g.generators()) {
  auto smallest_moved = [&](const Perm &p) -> unsigned {
    for (unsigned x = 0; x < degree_; ++x)
      if (p[x] != x)
        return x;
    throw std::logic_error("identity in word chain");
  };
  auto extend = [&](Level &lvl) {
    if (lvl.transversal.empty()) {
      lvl.transversal.assign(degree_, std::nullopt);
      lvl.words.assign(degree_, {});
      lvl.transversal[lvl.base] = Perm(degree_);
    }
    std::vector<unsigned> orbit;
    for (unsigned x = 0; x < degree_; ++x)
      if (lvl.transversal[x])
        orbit.push_back(x);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      unsigned x = orbit[head];
      for (std::size_t gi = 0; gi < lvl.gens.size(); ++gi) {
        unsigned y = lvl.gens[gi][x];
        if (!lvl.transversal[y]) {
          lvl.transversal[y] = lvl.gens[gi] * *lvl.transversal[x];
          std::vector<int> w = lvl.gen_words[gi];
          w.insert(w.end(), lvl.words[x].begin(), lvl.words[x].end());
          lvl.words[y] = std::move(w);
          orbit.push_back(y);
        }
      }
    }
  };

  auto add_strong = [&](const Perm &r, const std::vector<int> &w, std::size_t start) {
    std::size_t m = start;
    for (;;) {
      if (m == levels_.size()) {
        Level nl;
        nl.base = smallest_moved(r);
        levels_.push_back(std::move(nl));
        extend(levels_[m]);
      }
      levels_[m].gens.push_back(r);
      levels_[m].gen_words.push_back(w);
      extend(levels_[m]);
      if (r[levels_[m].base] != levels_[m].base)
        break;
      ++m;
    }
  };

  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!gens_[i].is_identity())
      add_strong(gens_[i], {static_cast<int>(i)}, 0);
  if (levels_.empty())
    return;

  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (unsigned x = 0; x < degree_; ++x) {
      if (!levels_[i].transversal[x])
        continue;
      for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        for (;;) {
          const Perm g = levels_[i].gens[gi];
          unsigned y = g[x];
          Perm residue = levels_[i].transversal[y]->inverse() * g * *levels_[i].transversal[x];
          if (residue.is_identity())
            break;
          std::vector<int> word = invert_word(levels_[i].words[y]);
          word.insert(word.end(), levels_[i].gen_words[gi].begin(),
                      levels_[i].gen_words[gi].end());
          word.insert(word.end(), levels_[i].words[x].begin(), levels_[i].words[x].end());
          std::size_t j = i + 1;
          for (; !residue.is_identity() && j < levels_.size(); ++j) {
            unsigned img = residue[levels_[j].base];
            if (!levels_[j].transversal[img])
              break;
            std::vector<int> inv = invert_word(levels_[j].words[img]);
            residue = levels_[j].transversal[img]->inverse() * residue;
            inv.insert(inv.end(), word.begin(), word.end());
            word = std::move(inv);
          }
          if (residue.is_identity())
            break;
          add_strong(residue, word, i + 1);
        }
      }
    }
  }
}

std::vector<int> WordChain::factor(const Perm &p) const {
  Perm residue = p;
  std::vector<int> word;
  for (const auto &lvl : levels_) {
    unsigned img = residue[lvl.base];
    if (!lvl.transversal[img])
      throw std::runtime_error("element not in group (word factorization)");
    word.insert(word.end(), lvl.words[img].begin(), lvl.words[img].end());
    residue = lvl.transversal[img]->inverse() * residue;
  }
  if (!residue.is_identity())
    throw std::runtime_error("element not in group (word factorization)");
  return word;
}

Perm WordChain::evaluate(const std::vector<Perm> &gens,
                         const std::vector<int> &word, unsigned degree) {
  Perm acc(degree);
  for (int letter : word) {
    if (letter >= 0)
      acc = acc * gens[static_cast<std::size_t>(letter)];
    else
      acc = acc * gens[static_cast<std::size_t>(~letter)].inverse();
  }
  return acc;
}

std::vector<Perm> closure(unsigned degree, const std::vector<Perm> &gens,
                          std::size_t limit) {
  std::set<Perm> seen;
  std::deque<Perm> queue;
  seen.insert(Perm(degree));
  queue.push_back(Perm(degree));
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const Perm &g : gens) {
      Perm q = p * g;
      if (seen.insert(q).second) {
        if (seen.size() > limit)
          throw std::runtime_error("closure exceeds limit");
        queue.push_back(std::move(q));
      }
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

} // namespace polypres
