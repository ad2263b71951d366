#include "polypres/polygroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polypres {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(unsigned n) { return Mask((n + 63) / 64, 0); }

void mask_set(Mask &m, unsigned i) { m[i / 64] |= (1ull << (i % 64)); }

bool mask_test(const Mask &m, unsigned i) { return (m[i / 64] >> (i % 64)) & 1; }

void mask_or(Mask &dst, const Mask &src) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] |= src[i];
}

bool mask_intersects(const Mask &a, const Mask &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i])
      return true;
  return false;
}

std::vector<Mask> product_masks(const Polygroup &p) {
  unsigned n = p.size();
  std::vector<Mask> pm(static_cast<std::size_t>(n) * n, make_mask(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c : p.op[a][b])
        mask_set(pm[a * n + b], c);
  return pm;
}

} // namespace

std::string Polygroup::table_text() const {
  std::ostringstream os;
  for (unsigned a = 0; a < size(); ++a)
    for (unsigned b = 0; b < size(); ++b) {
      os << labels[a] << " o " << labels[b] << " = {";
      for (std::size_t i = 0; i < op[a][b].size(); ++i)
        os << (i ? "," : "") << labels[op[a][b][i]];
      os << "}\n";
    }
  return os.str();
}

AxiomReport check_axioms(const Polygroup &p) {
  AxiomReport rep;
  unsigned n = p.size();
  if (n == 0 || n > 4096)
    throw std::invalid_argument("polygroup size out of supported range");
  for (auto &row : p.op)
    for (auto &cell : row)
      if (cell.empty())
        throw std::invalid_argument("hyperoperation has an empty value");

  auto pm = product_masks(p);
  auto prod = [&](unsigned a, unsigned b) -> const Mask & { return pm[a * n + b]; };

  // Associativity: union over b o c of a o u equals union over a o b of v o c.
  for (unsigned a = 0; a < n && rep.associative; ++a)
    for (unsigned b = 0; b < n && rep.associative; ++b)
      for (unsigned c = 0; c < n; ++c) {
        Mask lhs = make_mask(n), rhs = make_mask(n);
        for (unsigned u : p.op[b][c])
          mask_or(lhs, prod(a, u));
        for (unsigned v : p.op[a][b])
          mask_or(rhs, prod(v, c));
        if (lhs != rhs) {
          rep.associative = false;
          rep.failures.push_back({"associativity", {a, b, c}});
          break;
        }
      }

  // Reproduction: E o a = E = a o E.
  for (unsigned a = 0; a < n; ++a) {
    Mask left = make_mask(n), right = make_mask(n);
    for (unsigned u = 0; u < n; ++u) {
      mask_or(left, prod(u, a));
      mask_or(right, prod(a, u));
    }
    bool full = true;
    for (unsigned x = 0; x < n; ++x)
      if (!mask_test(left, x) || !mask_test(right, x))
        full = false;
    if (!full) {
      rep.reproduction = false;
      rep.failures.push_back({"reproduction", {a}});
      break;
    }
  }

  // Scalar identity.
  unsigned e = p.identity;
  for (unsigned a = 0; a < n; ++a) {
    if (p.op[a][e] != std::vector<unsigned>{a} || p.op[e][a] != std::vector<unsigned>{a}) {
      rep.scalar_identity = false;
      rep.failures.push_back({"scalar identity", {a}});
      break;
    }
  }

  // Bar involution: bar(e) = e, bar(bar(a)) = a, bar(a o b) = bar(b) o bar(a),
  // and e lies in a o bar(a) and bar(a) o a.
  if (p.bar[e] != e) {
    rep.bar_involution = false;
    rep.failures.push_back({"bar fixes identity", {e}});
  }
  for (unsigned a = 0; a < n && rep.bar_involution; ++a) {
    if (p.bar[p.bar[a]] != a) {
      rep.bar_involution = false;
      rep.failures.push_back({"bar involution", {a}});
      break;
    }
    if (!mask_test(prod(a, p.bar[a]), e) || !mask_test(prod(p.bar[a], a), e)) {
      rep.bar_involution = false;
      rep.failures.push_back({"identity in a o bar(a)", {a}});
      break;
    }
    for (unsigned b = 0; b < n; ++b) {
      Mask lhs = make_mask(n);
      for (unsigned x : p.op[a][b])
        mask_set(lhs, p.bar[x]);
      if (lhs != prod(p.bar[b], p.bar[a])) {
        rep.bar_involution = false;
        rep.failures.push_back({"bar antihomomorphism", {a, b}});
        break;
      }
    }
  }

  // Division: b / a = b o bar(a) and a \ b = bar(a) o b.
  for (unsigned a = 0; a < n && rep.division; ++a)
    for (unsigned b = 0; b < n; ++b) {
      Mask quot = make_mask(n), lquot = make_mask(n);
      for (unsigned x = 0; x < n; ++x) {
        if (mask_test(prod(x, a), b))
          mask_set(quot, x); // x with b in x o a
        if (mask_test(prod(a, x), b))
          mask_set(lquot, x); // x with b in a o x
      }
      if (quot != prod(b, p.bar[a]) || lquot != prod(p.bar[a], b)) {
        rep.division = false;
        rep.failures.push_back({"division via bar", {a, b}});
        break;
      }
    }

  // Transposition: (b \ a) meets (c / d) implies (a o d) meets (b o c).
  if (n <= 64) {
    for (unsigned a = 0; a < n && rep.transposition; ++a)
      for (unsigned b = 0; b < n && rep.transposition; ++b)
        for (unsigned c = 0; c < n && rep.transposition; ++c)
          for (unsigned d = 0; d < n; ++d) {
            if (!mask_intersects(prod(p.bar[b], a), prod(c, p.bar[d])))
              continue;
            if (!mask_intersects(prod(a, d), prod(b, c))) {
              rep.transposition = false;
              rep.failures.push_back({"transposition", {a, b, c, d}});
              break;
            }
          }
  }

  return rep;
}

Polygroup double_coset_polygroup(const PermGroup &g, const PermGroup &h) {
  auto dc = double_cosets(g, h, h);
  auto helems = h.elements();
  Polygroup p;
  unsigned n = static_cast<unsigned>(dc.reps.size());
  p.labels.reserve(n);
  for (const Perm &r : dc.reps)
    p.labels.push_back(r.to_cycles());
  p.identity = 0;
  p.bar.resize(n);
  for (unsigned i = 0; i < n; ++i)
    p.bar[i] = dc.coset_of(dc.reps[i].inverse());
  p.op.assign(n, std::vector<std::vector<unsigned>>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      std::set<unsigned> out;
      for (const Perm &hel : helems)
        out.insert(dc.coset_of(dc.reps[a] * hel * dc.reps[b]));
      p.op[a][b].assign(out.begin(), out.end());
    }
  return p;
}

Polygroup double_coset_polygroup(const TableGroup &g, const std::vector<unsigned> &subgroup) {
  unsigned n = g.size();
  std::vector<bool> in_sub(n, false);
  for (unsigned s : subgroup)
    in_sub[s] = true;
  if (!in_sub[g.identity()])
    throw std::invalid_argument("subgroup must contain the identity");
  for (unsigned a : subgroup)
    for (unsigned b : subgroup)
      if (!in_sub[g.mul(a, b)])
        throw std::invalid_argument("subgroup not closed");

  std::vector<int> coset(n, -1);
  std::vector<unsigned> reps;
  for (unsigned x = 0; x < n; ++x) {
    if (coset[x] >= 0)
      continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (unsigned a : subgroup)
      for (unsigned b : subgroup)
        coset[g.mul(g.mul(a, x), b)] = idx;
  }
  unsigned m = static_cast<unsigned>(reps.size());
  Polygroup p;
  p.labels.reserve(m);
  for (unsigned r : reps)
    p.labels.push_back("C" + std::to_string(r));
  p.identity = 0;
  p.bar.resize(m);
  for (unsigned i = 0; i < m; ++i)
    p.bar[i] = static_cast<unsigned>(coset[g.inv(reps[i])]);
  p.op.assign(m, std::vector<std::vector<unsigned>>(m));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) {
      std::set<unsigned> out;
      for (unsigned hel : subgroup)
        out.insert(static_cast<unsigned>(coset[g.mul(g.mul(reps[a], hel), reps[b])]));
      p.op[a][b].assign(out.begin(), out.end());
    }
  return p;
}

Polygroup polygroup_p2() {
  Polygroup p;
  p.labels = {"0", "1"};
  p.identity = 0;
  p.bar = {0, 1};
  p.op.assign(2, std::vector<std::vector<unsigned>>(2));
  p.op[0][0] = {0};
  p.op[0][1] = {1};
  p.op[1][0] = {1};
  p.op[1][1] = {0, 1};
  return p;
}

Polygroup polygroup_p3() {
  Polygroup p;
  p.labels = {"0", "1", "2"};
  p.identity = 0;
  p.bar = {0, 1, 2};
  p.op.assign(3, std::vector<std::vector<unsigned>>(3));
  p.op[0][0] = {0};
  p.op[0][1] = {1};
  p.op[0][2] = {2};
  p.op[1][0] = {1};
  p.op[2][0] = {2};
  p.op[1][1] = {0, 1};
  p.op[2][2] = {0, 1, 2};
  p.op[1][2] = {2};
  p.op[2][1] = {2};
  return p;
}

Polygroup group_as_polygroup(const TableGroup &g) {
  Polygroup p;
  unsigned n = g.size();
  p.labels.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    p.labels.push_back("g" + std::to_string(i));
  p.identity = 0;
  p.bar.resize(n);
  for (unsigned i = 0; i < n; ++i)
    p.bar[i] = g.inv(i);
  p.op.assign(n, std::vector<std::vector<unsigned>>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      p.op[a][b] = {g.mul(a, b)};
  return p;
}

namespace {

// Invariant fingerprint of an element for isomorphism pruning.
std::vector<unsigned> element_profile(const Polygroup &p, unsigned a) {
  std::vector<unsigned> prof;
  prof.push_back(a == p.identity ? 1 : 0);
  prof.push_back(p.bar[a] == a ? 1 : 0);
  prof.push_back(static_cast<unsigned>(p.op[a][a].size()));
  std::vector<unsigned> sizes;
  for (unsigned b = 0; b < p.size(); ++b) {
    sizes.push_back(static_cast<unsigned>(p.op[a][b].size()));
    sizes.push_back(static_cast<unsigned>(p.op[b][a].size()));
  }
  std::sort(sizes.begin(), sizes.end());
  prof.insert(prof.end(), sizes.begin(), sizes.end());
  return prof;
}

bool iso_backtrack(const Polygroup &p1, const Polygroup &p2, std::vector<unsigned> &map,
                   std::vector<bool> &used, unsigned a,
                   const std::vector<std::vector<unsigned>> &candidates) {
  unsigned n = p1.size();
  if (a == n) {
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y) {
        std::vector<unsigned> img;
        for (unsigned z : p1.op[x][y])
          img.push_back(map[z]);
        std::sort(img.begin(), img.end());
        if (img != p2.op[map[x]][map[y]])
          return false;
      }
    return true;
  }
  for (unsigned c : candidates[a]) {
    if (used[c])
      continue;
    map[a] = c;
    used[c] = true;
    bool ok = true;
    // Partial consistency against already assigned elements.
    for (unsigned b = 0; b <= a && ok; ++b) {
      for (auto [x, y] : {std::pair{a, b}, {b, a}}) {
        const auto &src = p1.op[x][y];
        const auto &dst = p2.op[map[x]][map[y]];
        if (src.size() != dst.size()) {
          ok = false;
          break;
        }
        for (unsigned z : src)
          if (z <= a && !std::binary_search(dst.begin(), dst.end(), map[z])) {
            ok = false;
            break;
          }
      }
    }
    if (ok && iso_backtrack(p1, p2, map, used, a + 1, candidates))
      return true;
    used[c] = false;
  }
  return false;
}

} // namespace

std::optional<std::vector<unsigned>> polygroup_isomorphism(const Polygroup &p1,
                                                           const Polygroup &p2) {
  if (p1.size() > 64 || p2.size() > 64)
    throw std::invalid_argument("polygroup isomorphism bounded at size 64");
  if (p1.size() != p2.size())
    return std::nullopt;
  unsigned n = p1.size();
  std::vector<std::vector<unsigned>> candidates(n);
  for (unsigned a = 0; a < n; ++a) {
    auto prof = element_profile(p1, a);
    for (unsigned c = 0; c < n; ++c)
      if (element_profile(p2, c) == prof)
        candidates[a].push_back(c);
    if (candidates[a].empty())
      return std::nullopt;
  }
  std::vector<unsigned> map(n);
  std::vector<bool> used(n, false);
  if (iso_backtrack(p1, p2, map, used, 0, candidates))
    return map;
  return std::nullopt;
}

bool polygroup_isomorphic(const Polygroup &p1, const Polygroup &p2) {
  return polygroup_isomorphism(p1, p2).has_value();
}

// ---- symbolic sets over the nonnegative integers with infinity ----

LambdaSet LambdaSet::single(int v) {
  LambdaSet s;
  if (v < 0)
    s.infinity = true;
  else
    s.finite.push_back(v);
  return s;
}

LambdaSet LambdaSet::inf() {
  LambdaSet s;
  s.infinity = true;
  return s;
}

LambdaSet LambdaSet::closed_ray(int from) {
  LambdaSet s;
  s.ray = true;
  s.ray_from = from;
  s.ray_closed = true;
  s.infinity = true;
  return s;
}

LambdaSet LambdaSet::open_ray(int from) {
  LambdaSet s;
  s.ray = true;
  s.ray_from = from;
  s.ray_closed = false;
  s.infinity = true;
  return s;
}

bool LambdaSet::contains(int v) const {
  if (v < 0)
    return contains_infinity();
  if (ray && (ray_closed ? v >= ray_from : v > ray_from))
    return true;
  return std::binary_search(finite.begin(), finite.end(), v);
}

void LambdaSet::insert(int v) {
  if (v < 0) {
    infinity = true;
    return;
  }
  if (contains(v))
    return;
  finite.insert(std::lower_bound(finite.begin(), finite.end(), v), v);
}

void LambdaSet::merge(const LambdaSet &other) {
  if (other.infinity || other.ray)
    infinity = true;
  if (other.ray) {
    if (!ray) {
      ray = true;
      ray_from = other.ray_from;
      ray_closed = other.ray_closed;
    } else {
      // Keep the wider ray.
      int a_first = ray_closed ? ray_from : ray_from + 1;
      int b_first = other.ray_closed ? other.ray_from : other.ray_from + 1;
      if (b_first < a_first) {
        ray_from = other.ray_from;
        ray_closed = other.ray_closed;
      }
    }
  }
  for (int v : other.finite)
    insert(v);
  normalize();
}

void LambdaSet::normalize() {
  if (ray) {
    infinity = true;
    // Absorb finite points into the ray; also extend the ray downward when
    // finite points sit directly at its boundary.
    for (;;) {
      int first = ray_closed ? ray_from : ray_from + 1;
      std::vector<int> keep;
      bool extended = false;
      for (int v : finite) {
        if (v >= first)
          continue; // swallowed
        if (v == first - 1) {
          ray_from = v;
          ray_closed = true;
          extended = true;
        } else {
          keep.push_back(v);
        }
      }
      finite = keep;
      if (!extended)
        break;
    }
  }
}

bool LambdaSet::operator==(const LambdaSet &other) const {
  LambdaSet a = *this, b = other;
  a.normalize();
  b.normalize();
  if (a.contains_infinity() != b.contains_infinity())
    return false;
  if (a.ray != b.ray)
    return false;
  if (a.ray) {
    int af = a.ray_closed ? a.ray_from : a.ray_from + 1;
    int bf = b.ray_closed ? b.ray_from : b.ray_from + 1;
    if (af != bf)
      return false;
  }
  return a.finite == b.finite;
}

std::string LambdaSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : finite) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  if (ray) {
    os << (first ? "" : ",") << (ray_closed ? "[" : "(") << ray_from << ",inf]";
    first = false;
  } else if (infinity) {
    os << (first ? "" : ",") << "inf";
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<int> LambdaSet::window(int bound) const {
  std::vector<int> out;
  for (int v = 0; v <= bound; ++v)
    if (contains(v))
      out.push_back(v);
  if (contains_infinity())
    out.push_back(-1);
  return out;
}

namespace {

LambdaSet diag_ray(LambdaVariant v, int a) {
  switch (v) {
  case LambdaVariant::pb_bigk:
  case LambdaVariant::pg:
    return LambdaSet::closed_ray(a);
  case LambdaVariant::pb_gf2:
    return LambdaSet::open_ray(a);
  default:
    throw std::logic_error("diag_ray on lattice variant");
  }
}

} // namespace

LambdaSet lambda_hyperop(LambdaVariant v, int a, int b) {
  if (v == LambdaVariant::lattice) {
    if (a < 0 || b < 0)
      throw std::invalid_argument("lattice variant excludes infinity");
    LambdaSet out;
    int lo = std::min(a, b);
    for (int c = 0; c <= lo; ++c)
      out.insert(a + b - 2 * c);
    return out;
  }
  // Infinity is the scalar identity.
  if (a < 0 && b < 0)
    return LambdaSet::inf();
  if (a < 0)
    return LambdaSet::single(b);
  if (b < 0)
    return LambdaSet::single(a);
  if (a != b)
    return LambdaSet::single(std::min(a, b));
  return diag_ray(v, a);
}

LambdaSet lambda_hyperop(LambdaVariant v, const LambdaSet &a, const LambdaSet &b) {
  if (v == LambdaVariant::lattice) {
    LambdaSet out;
    if (a.ray || b.ray || a.infinity || b.infinity)
      throw std::invalid_argument("lattice variant excludes infinity");
    for (int x : a.finite)
      for (int y : b.finite)
        out.merge(lambda_hyperop(v, x, y));
    return out;
  }
  LambdaSet out;
  // finite x finite
  for (int x : a.finite)
    for (int y : b.finite)
      out.merge(lambda_hyperop(v, x, y));
  // infinity times anything: identity
  if (a.contains_infinity()) {
    LambdaSet copy = b;
    out.merge(copy);
  }
  if (b.contains_infinity()) {
    LambdaSet copy = a;
    out.merge(copy);
  }
  // finite x ray and ray x finite
  auto fin_with_ray = [&](const std::vector<int> &fin, const LambdaSet &r) {
    if (!r.ray)
      return;
    int first = r.ray_closed ? r.ray_from : r.ray_from + 1;
    for (int x : fin) {
      // Ray elements below x each give themselves.
      for (int e = first; e < x; ++e)
        out.insert(e);
      // Ray elements above x (always present) give x.
      out.insert(x);
      if (r.contains(x))
        out.merge(diag_ray(v, x));
    }
  };
  fin_with_ray(a.finite, b);
  fin_with_ray(b.finite, a);
  // ray x ray: the union of the rays
  if (a.ray && b.ray) {
    out.merge(LambdaSet(a));
    out.merge(LambdaSet(b));
  }
  out.normalize();
  return out;
}

LambdaSet hyper_power(LambdaVariant v, int a, unsigned n) {
  if (n < 1)
    throw std::invalid_argument("hyper_power needs n >= 1");
  LambdaSet acc = LambdaSet::single(a);
  for (unsigned i = 1; i < n; ++i)
    acc = lambda_hyperop(v, acc, LambdaSet::single(a));
  return acc;
}

} // namespace polypres
