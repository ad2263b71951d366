#include "polypres/fpres.hpp"

#include <deque>
#include <stdexcept>

namespace polypres {

namespace {

// HLT-style coset enumeration. Table columns: generator i forward at 2i,
// its inverse at 2i+1. Coincidences merge towards the smaller index, so
// coset 0 (the subgroup) is always a live representative.
struct CosetTable {
  unsigned ncols;
  std::size_t max_cosets;
  std::vector<std::int32_t> table;
  std::vector<std::int32_t> parent;
  std::size_t live = 0;
  std::deque<std::pair<std::int32_t, std::int32_t>> pending;

  CosetTable(unsigned ncols_, std::size_t max_cosets_)
      : ncols(ncols_), max_cosets(max_cosets_) {
    new_coset();
  }

  std::int32_t count() const { return static_cast<std::int32_t>(parent.size()); }

  std::int32_t new_coset() {
    if (parent.size() >= max_cosets)
      return -1;
    parent.push_back(count());
    table.resize(table.size() + ncols, -1);
    ++live;
    return count() - 1;
  }

  std::int32_t find(std::int32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  std::int32_t &at(std::int32_t c, unsigned x) {
    return table[static_cast<std::size_t>(c) * ncols + x];
  }

  static unsigned inv_col(unsigned x) { return x ^ 1u; }

  // Records c^x = d; conflicting existing entries are queued as
  // coincidences.
  void deduce(std::int32_t c, unsigned x, std::int32_t d) {
    c = find(c);
    d = find(d);
    std::int32_t cur = at(c, x);
    if (cur >= 0) {
      if (find(cur) != d)
        coincide(cur, d);
      return;
    }
    at(c, x) = d;
    std::int32_t back = at(d, inv_col(x));
    if (back >= 0) {
      if (find(back) != c)
        coincide(back, c);
    } else {
      at(d, inv_col(x)) = c;
    }
  }

  void coincide(std::int32_t a, std::int32_t b) {
    pending.emplace_back(a, b);
    process_pending();
  }

  void process_pending() {
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      a = find(a);
      b = find(b);
      if (a == b)
        continue;
      if (a > b)
        std::swap(a, b);
      parent[b] = a;
      --live;
      for (unsigned x = 0; x < ncols; ++x) {
        std::int32_t nu = at(b, x);
        if (nu < 0)
          continue;
        at(b, x) = -1;
        nu = find(nu);
        std::int32_t cur = at(a, x);
        if (cur >= 0) {
          if (find(cur) != nu)
            pending.emplace_back(cur, nu);
        } else {
          at(a, x) = nu;
        }
        std::int32_t back = at(nu, inv_col(x));
        if (back >= 0) {
          if (find(back) != a)
            pending.emplace_back(back, a);
          at(nu, inv_col(x)) = a;
        } else {
          at(nu, inv_col(x)) = a;
        }
      }
    }
  }

  // Trace `word` from alpha back to alpha. With fill, gaps longer than one
  // are closed by defining new cosets. Returns false on table overflow.
  bool scan_and_fill(std::int32_t alpha, const std::vector<unsigned> &word, bool fill) {
    if (word.empty())
      return true;
    std::int32_t f = find(alpha);
    std::int32_t b = f;
    int i = 0;
    int r = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= r && at(f, word[i]) >= 0) {
        f = find(at(f, word[i]));
        ++i;
      }
      if (i > r) {
        if (f != b)
          coincide(f, b);
        return true;
      }
      while (r >= i && at(b, inv_col(word[r])) >= 0) {
        b = find(at(b, inv_col(word[r])));
        --r;
      }
      if (r < i) {
        coincide(f, b);
        return true;
      }
      if (r == i) {
        deduce(f, word[i], b);
        return true;
      }
      if (!fill)
        return true;
      std::int32_t nc = new_coset();
      if (nc < 0)
        return false;
      at(f, word[i]) = nc;
      at(nc, inv_col(word[i])) = f;
      f = nc;
      ++i;
    }
  }

  // Forward-only closure check; queues a coincidence when the trace closes
  // on the wrong coset. Returns false when anything changed or is missing.
  bool scan_check(std::int32_t alpha, const std::vector<unsigned> &word) {
    std::int32_t f = find(alpha);
    for (unsigned x : word) {
      std::int32_t next = at(f, x);
      if (next < 0)
        return false;
      f = find(next);
    }
    if (f != find(alpha)) {
      coincide(f, find(alpha));
      return false;
    }
    return true;
  }
};

std::vector<unsigned> to_columns(const Word &w) {
  std::vector<unsigned> cols;
  cols.reserve(w.length());
  for (int l : w.letters()) {
    if (l >= 0)
      cols.push_back(2u * static_cast<unsigned>(l));
    else
      cols.push_back(2u * static_cast<unsigned>(~l) + 1u);
  }
  return cols;
}

} // namespace

namespace {

std::optional<CosetTable> run_enumeration(const Presentation &p,
                                          const std::vector<Word> &subgroup_gens,
                                          std::size_t max_cosets) {
  if (max_cosets < 1)
    throw std::invalid_argument("max_cosets must be at least 1");
  unsigned ngens = static_cast<unsigned>(p.generators.size());
  CosetTable ct(2 * std::max(ngens, 1u), max_cosets);

  std::vector<std::vector<unsigned>> rels;
  for (const Word &r : p.relators)
    if (!r.empty())
      rels.push_back(to_columns(r));
  std::vector<std::vector<unsigned>> subs;
  for (const Word &s : subgroup_gens)
    if (!s.empty())
      subs.push_back(to_columns(s));

  for (const auto &s : subs)
    if (!ct.scan_and_fill(0, s, true))
      return std::nullopt;

  for (std::int32_t alpha = 0; alpha < ct.count(); ++alpha) {
    if (ct.find(alpha) != alpha)
      continue;
    for (const auto &r : rels) {
      if (!ct.scan_and_fill(alpha, r, true))
        return std::nullopt;
      if (ct.find(alpha) != alpha)
        break;
    }
    if (ct.find(alpha) != alpha)
      continue;
    for (unsigned x = 0; x < 2 * ngens; ++x) {
      if (ct.find(alpha) != alpha)
        break;
      if (ct.at(alpha, x) < 0) {
        std::int32_t nc = ct.new_coset();
        if (nc < 0)
          return std::nullopt;
        ct.at(alpha, x) = nc;
        ct.at(nc, CosetTable::inv_col(x)) = alpha;
      }
    }
  }

  // Verification sweeps: a finished table must be complete, close every
  // relator at every live coset, and close every subgroup generator at
  // coset 0. Coincidences discovered here re-run the sweep.
  for (;;) {
    bool clean = true;
    for (const auto &s : subs)
      if (!ct.scan_check(0, s))
        clean = false;
    for (std::int32_t alpha = 0; alpha < ct.count(); ++alpha) {
      if (ct.find(alpha) != alpha)
        continue;
      for (unsigned x = 0; x < 2 * ngens; ++x)
        if (ct.at(alpha, x) < 0) {
          std::int32_t nc = ct.new_coset();
          if (nc < 0)
            return std::nullopt;
          ct.at(alpha, x) = nc;
          ct.at(nc, CosetTable::inv_col(x)) = alpha;
          clean = false;
        }
      for (const auto &r : rels)
        if (!ct.scan_check(alpha, r))
          clean = false;
    }
    if (clean)
      break;
  }

  return ct;
}

} // namespace

std::optional<unsigned long long> todd_coxeter(const Presentation &p,
                                               const std::vector<Word> &subgroup_gens,
                                               std::size_t max_cosets) {
  if (p.generators.empty())
    return 1;
  auto ct = run_enumeration(p, subgroup_gens, max_cosets);
  if (!ct)
    return std::nullopt;
  return static_cast<unsigned long long>(ct->live);
}

std::optional<std::vector<Perm>> coset_action(const Presentation &p,
                                              const std::vector<Word> &subgroup_gens,
                                              std::size_t max_cosets) {
  unsigned ngens = static_cast<unsigned>(p.generators.size());
  if (ngens == 0)
    return std::vector<Perm>{};
  auto cto = run_enumeration(p, subgroup_gens, max_cosets);
  if (!cto)
    return std::nullopt;
  CosetTable &ct = *cto;
  std::vector<std::int32_t> renumber(ct.parent.size(), -1);
  std::int32_t next = 0;
  for (std::int32_t c = 0; c < ct.count(); ++c)
    if (ct.find(c) == c)
      renumber[c] = next++;
  unsigned degree = static_cast<unsigned>(next);
  std::vector<Perm> out;
  out.reserve(ngens);
  for (unsigned g = 0; g < ngens; ++g) {
    std::vector<unsigned> im(degree);
    for (std::int32_t c = 0; c < ct.count(); ++c) {
      if (ct.find(c) != c)
        continue;
      std::int32_t d = ct.at(c, 2 * g);
      im[static_cast<unsigned>(renumber[c])] = static_cast<unsigned>(renumber[ct.find(d)]);
    }
    out.push_back(Perm(std::move(im)));
  }
  return out;
}

} // namespace polypres
