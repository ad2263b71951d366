#include "polypres/table_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polypres {

TableGroup::TableGroup(unsigned n, std::vector<std::uint16_t> table, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("multiplication table has wrong size");
  for (unsigned a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("element 0 is not an identity");
  inv_.assign(n_, 0);
  for (unsigned a = 0; a < n_; ++a) {
    bool found = false;
    for (unsigned b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("element without inverse");
  }
  // Associativity spot checks on all triples for small n, sampled otherwise.
  if (n_ <= 64) {
    for (unsigned a = 0; a < n_; ++a)
      for (unsigned b = 0; b < n_; ++b)
        for (unsigned c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("multiplication table not associative");
  } else {
    for (unsigned a = 0; a < n_; a += 7)
      for (unsigned b = 1; b < n_; b += 11)
        for (unsigned c = 2; c < n_; c += 13)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("multiplication table not associative");
  }
}

unsigned TableGroup::element_order(unsigned a) const {
  unsigned ord = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

unsigned TableGroup::power(unsigned a, long e) const {
  unsigned base = e >= 0 ? a : inv(a);
  unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
  unsigned acc = 0;
  while (k) {
    if (k & 1)
      acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

unsigned TableGroup::conj(unsigned a, unsigned b) const {
  return mul(mul(inv(b), a), b);
}

unsigned TableGroup::comm(unsigned a, unsigned b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

std::vector<unsigned> TableGroup::order_spectrum() const {
  std::vector<unsigned> s(n_);
  for (unsigned a = 0; a < n_; ++a)
    s[a] = element_order(a);
  std::sort(s.begin(), s.end());
  return s;
}

bool TableGroup::is_abelian() const {
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

TableGroup TableGroup::from_elements(const std::vector<Perm> &sorted_elements) {
  unsigned n = static_cast<unsigned>(sorted_elements.size());
  if (n == 0 || n > 65535)
    throw std::invalid_argument("element list size out of range");
  // Identity must come first; sorted order puts it there since the identity
  // image array is lexicographically minimal.
  std::vector<Perm> elems = sorted_elements;
  if (!elems[0].is_identity())
    throw std::invalid_argument("identity missing or elements not sorted");
  auto index_of = [&](const Perm &p) -> unsigned {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || !(*it == p))
      throw std::invalid_argument("element set not closed under products");
    return static_cast<unsigned>(it - elems.begin());
  };
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::uint16_t>(index_of(elems[a] * elems[b]));
  return TableGroup(n, std::move(table));
}

TableGroup TableGroup::from_perm_group(const PermGroup &g, unsigned long long limit) {
  return from_elements(g.elements(limit));
}

TableGroup TableGroup::cyclic(unsigned n) {
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  TableGroup t(n, std::move(table));
  t.set_name("C" + std::to_string(n));
  return t;
}

PermGroup TableGroup::regular_representation() const {
  std::vector<Perm> gens;
  for (unsigned s : small_generating_set()) {
    std::vector<unsigned> im(n_);
    for (unsigned a = 0; a < n_; ++a)
      im[a] = mul(s, a);
    gens.push_back(Perm(std::move(im)));
  }
  return PermGroup(n_, gens);
}

std::vector<unsigned> TableGroup::small_generating_set() const {
  std::vector<unsigned> gens;
  std::vector<bool> in_span(n_, false);
  in_span[0] = true;
  unsigned span_size = 1;
  while (span_size < n_) {
    unsigned next = 0;
    while (in_span[next])
      ++next;
    gens.push_back(next);
    // Close the span under multiplication by the new generator set.
    std::vector<unsigned> frontier;
    for (unsigned a = 0; a < n_; ++a)
      if (in_span[a])
        frontier.push_back(a);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (unsigned s : gens) {
        unsigned y = mul(frontier[head], s);
        if (!in_span[y]) {
          in_span[y] = true;
          ++span_size;
          frontier.push_back(y);
        }
        y = mul(s, frontier[head]);
        if (!in_span[y]) {
          in_span[y] = true;
          ++span_size;
          frontier.push_back(y);
        }
      }
    }
  }
  return gens;
}

namespace {

bool extend_isomorphism(const TableGroup &g1, const TableGroup &g2,
                        const std::vector<unsigned> &gens,
                        std::vector<unsigned> &image, std::size_t k,
                        std::vector<unsigned> &map) {
  if (k == gens.size()) {
    // Close the partial map over products of generators and verify it is a
    // multiplicative bijection defined everywhere.
    std::fill(map.begin(), map.end(), static_cast<unsigned>(-1));
    map[0] = 0;
    std::vector<unsigned> frontier{0};
    std::vector<bool> hit2(g2.size(), false);
    hit2[0] = true;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      unsigned a = frontier[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        unsigned b = g1.mul(a, gens[i]);
        unsigned fb = g2.mul(map[a], image[i]);
        if (map[b] == static_cast<unsigned>(-1)) {
          if (hit2[fb])
            return false;
          map[b] = fb;
          hit2[fb] = true;
          frontier.push_back(b);
        } else if (map[b] != fb) {
          return false;
        }
      }
    }
    if (frontier.size() != g1.size())
      return false;
    // The generator-closure above already forces multiplicativity; the
    // quadratic re-check is kept for small orders as a belt-and-braces.
    if (g1.size() <= 64)
      for (unsigned a = 0; a < g1.size(); ++a)
        for (unsigned b = 0; b < g1.size(); ++b)
          if (map[g1.mul(a, b)] != g2.mul(map[a], map[b]))
            return false;
    return true;
  }
  unsigned want = g1.element_order(gens[k]);
  for (unsigned c = 0; c < g2.size(); ++c) {
    if (g2.element_order(c) != want)
      continue;
    image[k] = c;
    if (extend_isomorphism(g1, g2, gens, image, k + 1, map))
      return true;
  }
  return false;
}

} // namespace

std::optional<std::vector<unsigned>> table_isomorphism(const TableGroup &g1,
                                                       const TableGroup &g2) {
  if (g1.size() > 512 || g2.size() > 512)
    throw std::invalid_argument("isomorphism test bounded at order 512");
  if (g1.size() != g2.size())
    return std::nullopt;
  if (g1.order_spectrum() != g2.order_spectrum())
    return std::nullopt;
  std::vector<unsigned> gens = g1.small_generating_set();
  std::vector<unsigned> image(gens.size());
  std::vector<unsigned> map(g1.size());
  if (extend_isomorphism(g1, g2, gens, image, 0, map))
    return map;
  return std::nullopt;
}

bool is_isomorphic(const TableGroup &g1, const TableGroup &g2) {
  return table_isomorphism(g1, g2).has_value();
}

bool is_isomorphic(const PermGroup &g1, const PermGroup &g2) {
  if (g1.order() != g2.order())
    return false;
  return is_isomorphic(TableGroup::from_perm_group(g1),
                       TableGroup::from_perm_group(g2));
}

} // namespace polypres
