#include "polypres/matgrp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polypres {

Mat2 mat2_mul(const FiniteField &f, const Mat2 &a, const Mat2 &b) {
  auto dot = [&](std::uint32_t x1, std::uint32_t y1, std::uint32_t x2, std::uint32_t y2) {
    return f.add(f.mul(x1, x2), f.mul(y1, y2));
  };
  return {dot(a[0], a[1], b[0], b[2]), dot(a[0], a[1], b[1], b[3]),
          dot(a[2], a[3], b[0], b[2]), dot(a[2], a[3], b[1], b[3])};
}

Mat3 mat3_mul(const FiniteField &f, const Mat3 &a, const Mat3 &b) {
  Mat3 c{};
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      std::uint32_t acc = 0;
      for (unsigned k = 0; k < 3; ++k)
        acc = f.add(acc, f.mul(a[3 * i + k], b[3 * k + j]));
      c[3 * i + j] = acc;
    }
  return c;
}

std::uint32_t mat2_det(const FiniteField &f, const Mat2 &a) {
  return f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]));
}

Mat2 mat_R(const FiniteField &f, std::uint32_t a) { return {a, 0, 0, f.one()}; }
Mat2 mat_Z(const FiniteField &f, std::uint32_t a) { return {a, 0, 0, a}; }
Mat2 mat_S(const FiniteField &f) { return {f.neg(f.one()), f.one(), 0, f.one()}; }
Mat2 mat_J(const FiniteField &f) { return {0, f.neg(f.one()), f.neg(f.one()), 0}; }
Mat2 mat_E12(const FiniteField &f, std::uint32_t a) { return {f.one(), a, 0, f.one()}; }

Mat3 mat3_Rhat(const FiniteField &f, std::uint32_t a) {
  return {a, 0, 0, 0, f.one(), 0, 0, 0, f.inv(a)};
}
Mat3 mat3_Shat(const FiniteField &f) {
  auto m1 = f.neg(f.one());
  return {m1, f.one(), 0, 0, f.one(), 0, 0, 0, m1};
}
Mat3 mat3_Jhat(const FiniteField &f) {
  auto m1 = f.neg(f.one());
  return {0, m1, 0, m1, 0, 0, 0, 0, m1};
}
Mat3 mat3_T(const FiniteField &f) {
  auto m1 = f.neg(f.one());
  return {0, 0, m1, 0, m1, 0, m1, 0, 0};
}

unsigned ProjLine::index_of(std::uint32_t v) const {
  if (v == 0)
    return 0;
  return 1 + field->dlog(v);
}

std::uint32_t ProjLine::value_of(unsigned idx) const {
  if (idx == 0)
    return 0;
  return field->from_dlog(idx - 1);
}

Perm ProjLine::action(const Mat2 &m) const {
  const FiniteField &f = *field;
  unsigned n = size();
  std::vector<unsigned> im(n);
  for (unsigned idx = 0; idx < n; ++idx) {
    std::uint32_t num, den;
    if (idx == infinity_index()) {
      num = m[0];
      den = m[2];
    } else {
      std::uint32_t z = value_of(idx);
      num = f.add(f.mul(m[0], z), m[1]);
      den = f.add(f.mul(m[2], z), m[3]);
    }
    im[idx] = den == 0 ? infinity_index() : index_of(f.div(num, den));
  }
  return Perm(im);
}

ProjPlane::ProjPlane(const FiniteField &f) : field(&f) {
  auto vals = f.all_elements();
  for (auto y : vals)
    for (auto z : vals)
      points.push_back({f.one(), y, z});
  for (auto z : vals)
    points.push_back({0, f.one(), z});
  points.push_back({0, 0, f.one()});
}

unsigned ProjPlane::index_of(std::array<std::uint32_t, 3> v) const {
  const FiniteField &f = *field;
  unsigned lead = 0;
  while (lead < 3 && v[lead] == 0)
    ++lead;
  if (lead == 3)
    throw std::invalid_argument("zero vector is not projective");
  std::uint32_t c = f.inv(v[lead]);
  for (auto &x : v)
    x = f.mul(x, c);
  for (unsigned i = 0; i < points.size(); ++i)
    if (points[i] == v)
      return i;
  throw std::logic_error("projective point not found");
}

Perm ProjPlane::action(const Mat3 &m) const {
  const FiniteField &f = *field;
  std::vector<unsigned> im(points.size());
  for (unsigned i = 0; i < points.size(); ++i) {
    const auto &p = points[i];
    std::array<std::uint32_t, 3> w{};
    for (unsigned r = 0; r < 3; ++r) {
      std::uint32_t acc = 0;
      for (unsigned k = 0; k < 3; ++k)
        acc = f.add(acc, f.mul(m[3 * r + k], p[k]));
      w[r] = acc;
    }
    im[i] = index_of(w);
  }
  return Perm(im);
}

std::pair<unsigned, unsigned> factor_prime_power(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0)
      continue;
    unsigned m = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++m;
    }
    if (v != 1)
      throw std::invalid_argument("q is not a prime power");
    return {p, m};
  }
  throw std::invalid_argument("q is not a prime power");
}

namespace {

// Left-regular permutation image over an explicit matrix list.
struct RegularRep2 {
  const FiniteField *f;
  std::vector<Mat2> elems; // sorted by packed key

  static std::uint64_t key(const Mat2 &m) {
    return ((std::uint64_t)m[0] << 48) | ((std::uint64_t)m[1] << 32) |
           ((std::uint64_t)m[2] << 16) | (std::uint64_t)m[3];
  }

  unsigned index_of(const Mat2 &m) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), m,
                               [](const Mat2 &a, const Mat2 &b) { return key(a) < key(b); });
    if (it == elems.end() || key(*it) != key(m))
      throw std::logic_error("matrix outside group");
    return static_cast<unsigned>(it - elems.begin());
  }

  Perm left(const Mat2 &m) const {
    std::vector<unsigned> im(elems.size());
    for (unsigned i = 0; i < elems.size(); ++i)
      im[i] = index_of(mat2_mul(*f, m, elems[i]));
    return Perm(im);
  }
};

RegularRep2 b2_matrices(const FiniteField &f) {
  RegularRep2 reg;
  reg.f = &f;
  auto vals = f.all_elements();
  for (auto a : vals)
    for (auto b : vals)
      for (auto d : vals)
        if (a != 0 && d != 0)
          reg.elems.push_back({a, b, 0, d});
  std::sort(reg.elems.begin(), reg.elems.end(),
            [](const Mat2 &x, const Mat2 &y) { return RegularRep2::key(x) < RegularRep2::key(y); });
  return reg;
}

RegularRep2 gl2_matrices(const FiniteField &f) {
  RegularRep2 reg;
  reg.f = &f;
  auto vals = f.all_elements();
  for (auto a : vals)
    for (auto b : vals)
      for (auto c : vals)
        for (auto d : vals) {
          Mat2 m{a, b, c, d};
          if (mat2_det(f, m) != 0)
            reg.elems.push_back(m);
        }
  std::sort(reg.elems.begin(), reg.elems.end(),
            [](const Mat2 &x, const Mat2 &y) { return RegularRep2::key(x) < RegularRep2::key(y); });
  return reg;
}

} // namespace

PermRep perm_rep(RepFamily family, unsigned q) {
  auto [p, m] = factor_prime_power(q);
  static std::map<std::pair<unsigned, unsigned>, FiniteField> cache;
  auto it = cache.find({p, m});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(p, m), FiniteField(p, m)).first;
  const FiniteField &f = it->second;
  PermRep rep;
  switch (family) {
  case RepFamily::gl2:
  case RepFamily::pgl2: {
    ProjLine line{&f};
    rep.degree = line.size();
    rep.named["r"] = line.action(mat_R(f, f.zeta()));
    rep.named["s"] = line.action(mat_S(f));
    rep.named["j"] = line.action(mat_J(f));
    rep.named["e"] = line.action(mat_E12(f, f.one()));
    rep.group = PermGroup(rep.degree, {rep.named["r"], rep.named["s"], rep.named["j"]});
    unsigned long long qq = q;
    rep.matrix_order = family == RepFamily::gl2 ? (qq * qq - 1) * (qq * qq - qq)
                                                : qq * qq * qq - qq;
    break;
  }
  case RepFamily::b2_affine: {
    rep.degree = q;
    auto act = [&](const Mat2 &mm) {
      std::vector<unsigned> im(q);
      for (unsigned idx = 0; idx < q; ++idx) {
        std::uint32_t z = idx == 0 ? 0 : f.from_dlog(idx - 1);
        std::uint32_t w = f.div(f.add(f.mul(mm[0], z), mm[1]), mm[3]);
        im[idx] = w == 0 ? 0 : 1 + f.dlog(w);
      }
      return Perm(im);
    };
    rep.named["r"] = act(mat_R(f, f.zeta()));
    rep.named["s"] = act(mat_S(f));
    rep.named["z"] = act(mat_Z(f, f.zeta()));
    rep.group = PermGroup(q, {rep.named["r"], rep.named["s"]});
    rep.matrix_order = (unsigned long long)(q - 1) * (q - 1) * q;
    break;
  }
  case RepFamily::sl3:
  case RepFamily::psl3: {
    ProjPlane plane(f);
    rep.degree = plane.size();
    rep.named["r"] = plane.action(mat3_Rhat(f, f.zeta()));
    rep.named["s"] = plane.action(mat3_Shat(f));
    rep.named["j"] = plane.action(mat3_Jhat(f));
    rep.named["t"] = plane.action(mat3_T(f));
    rep.group = PermGroup(rep.degree,
                          {rep.named["r"], rep.named["s"], rep.named["j"], rep.named["t"]});
    unsigned long long qq = q;
    unsigned long long sl3 = qq * qq * qq * (qq * qq * qq - 1) * (qq * qq - 1);
    rep.matrix_order = family == RepFamily::sl3 ? sl3 : sl3 / std::gcd(3u, q - 1);
    break;
  }
  }
  return rep;
}

PresFamily pres_family_from_string(const std::string &s) {
  if (s == "b2K" || s == "b2k")
    return PresFamily::b2K;
  if (s == "gl2q")
    return PresFamily::gl2q;
  if (s == "gl2q-alt")
    return PresFamily::gl2q_alt;
  if (s == "pgl2q")
    return PresFamily::pgl2q;
  if (s == "pgl2q-alt")
    return PresFamily::pgl2q_alt;
  if (s == "sl3q")
    return PresFamily::sl3q;
  if (s == "psl3q")
    return PresFamily::psl3q;
  if (s == "psl34")
    return PresFamily::psl34;
  throw std::invalid_argument("unknown presentation family: " + s);
}

unsigned long long pres_family_target_order(PresFamily family, unsigned q) {
  unsigned long long qq = q;
  switch (family) {
  case PresFamily::b2K:
    return (qq - 1) * (qq - 1) * qq;
  case PresFamily::gl2q:
  case PresFamily::gl2q_alt:
    return (qq * qq - 1) * (qq * qq - qq);
  case PresFamily::pgl2q:
  case PresFamily::pgl2q_alt:
    return qq * qq * qq - qq;
  case PresFamily::sl3q:
    return qq * qq * qq * (qq * qq * qq - 1) * (qq * qq - 1);
  case PresFamily::psl3q:
    return qq * qq * qq * (qq * qq * qq - 1) * (qq * qq - 1) / std::gcd(3u, q - 1);
  case PresFamily::psl34:
    return 20160;
  }
  throw std::logic_error("unreachable");
}

namespace {

// Word helpers over a generator-name lookup.
struct WordBuilder {
  Presentation *pres;
  Word gen(const std::string &name) const {
    int i = pres->gen_index(name);
    if (i < 0)
      throw std::logic_error("unknown generator in emitter: " + name);
    return Word::gen(i);
  }
};

EmittedPresentation emit_b2K(const FiniteField &f) {
  unsigned q = f.q();
  EmittedPresentation out;
  Presentation &pr = out.presentation;
  for (unsigned i = 1; i + 1 < q; ++i)
    pr.generators.push_back("r" + std::to_string(i));
  for (unsigned i = 1; i + 1 < q; ++i)
    pr.generators.push_back("z" + std::to_string(i));
  pr.generators.push_back("s");
  WordBuilder wb{&pr};
  auto rw = [&](unsigned i) { // R(z^i), exponent taken mod q-1
    i %= (q - 1);
    return i == 0 ? Word() : wb.gen("r" + std::to_string(i));
  };
  auto zw = [&](unsigned i) {
    i %= (q - 1);
    return i == 0 ? Word() : wb.gen("z" + std::to_string(i));
  };
  Word s = wb.gen("s");
  for (unsigned i = 1; i + 1 < q; ++i)
    for (unsigned j = 1; j + 1 < q; ++j) {
      pr.add_relation(rw(i) * rw(j), rw(i + j));
      pr.add_relation(zw(i) * zw(j), zw(i + j));
      pr.add_relator(Word::commutator(rw(i), zw(j)));
    }
  for (unsigned i = 1; i + 1 < q; ++i)
    pr.add_relator(Word::commutator(s, zw(i)));
  pr.add_relator(s.power(2));
  for (unsigned i = 1; i + 1 < q; ++i) {
    std::uint32_t a = f.from_dlog(i);
    std::uint32_t oneminus = f.sub(f.one(), a);
    std::uint32_t ratio = f.div(a, f.sub(a, f.one()));
    pr.add_relation(s * rw(i) * s, rw(f.dlog(oneminus)) * s * rw(f.dlog(ratio)));
  }
  // Assignment: the left-regular representation of B2(q).
  RegularRep2 reg = b2_matrices(f);
  for (unsigned i = 1; i + 1 < q; ++i)
    out.assignment.push_back(reg.left(mat_R(f, f.from_dlog(i))));
  for (unsigned i = 1; i + 1 < q; ++i)
    out.assignment.push_back(reg.left(mat_Z(f, f.from_dlog(i))));
  out.assignment.push_back(reg.left(mat_S(f)));
  return out;
}

// Shared gamma-family relators for the gl2q/pgl2q presentations.
void add_gamma_family(Presentation &pr, const FiniteField &f, const Word &r, const Word &s) {
  unsigned q = f.q();
  auto gamma = f.gamma_table();
  for (unsigned i = 1; i + 1 < q; ++i) {
    long gi = static_cast<long>(gamma[i]);
    long gqi = static_cast<long>(gamma[q - i - 1]);
    pr.add_relation(s * r.power(i) * s, r.power(gi) * s * r.power(-gqi));
  }
}

EmittedPresentation emit_gl2q(const FiniteField &f) {
  unsigned q = f.q();
  EmittedPresentation out;
  Presentation &pr = out.presentation;
  pr.generators = {"r", "s", "j"};
  Word r = Word::gen(0), s = Word::gen(1), j = Word::gen(2);
  Word z = (j * r).power(2);
  pr.add_relator(r.power(q - 1));
  pr.add_relator(s.power(2));
  pr.add_relator(j.power(2));
  pr.add_relator((j * s).power(3));
  pr.add_relator(z.power(q - 1));
  pr.add_relator(Word::commutator(r, z));
  pr.add_relator(Word::commutator(s, z));
  add_gamma_family(pr, f, r, s);
  if (q == 3) {
    RegularRep2 reg = gl2_matrices(f);
    out.assignment = {reg.left(mat_R(f, f.zeta())), reg.left(mat_S(f)), reg.left(mat_J(f))};
  }
  return out;
}

EmittedPresentation emit_gl2q_alt(const FiniteField &f) {
  unsigned q = f.q(), p = f.p(), deg = f.m();
  EmittedPresentation out;
  Presentation &pr = out.presentation;
  pr.generators = {"r", "e", "j"};
  Word r = Word::gen(0), e = Word::gen(1), j = Word::gen(2);
  Word s = p == 2 ? e : e * r.power((q - 1) / 2);
  Word z = (j * r).power(2);
  pr.add_relator(r.power(q - 1));
  pr.add_relator(e.power(p));
  pr.add_relator(j.power(2));
  pr.add_relator((j * s).power(3));
  pr.add_relator(z.power(q - 1));
  pr.add_relator(Word::commutator(r, z));
  pr.add_relator(Word::commutator(e, z));
  auto ei = [&](unsigned i) { return r.power(i) * e * r.power(-(long)i); };
  for (unsigned i = 1; i < deg; ++i)
    pr.add_relator(Word::commutator(e, ei(i)));
  // e_f = product of e_i^{a_i} with P(X) = X^f - sum a_i X^i the minimal
  // polynomial of zeta.
  Word prod;
  for (unsigned i = 0; i < deg; ++i) {
    unsigned ai = (p - f.modulus()[i] % p) % p;
    prod = prod * ei(i).power(ai);
  }
  pr.add_relation(ei(deg), prod);
  if (q == 3) {
    RegularRep2 reg = gl2_matrices(f);
    out.assignment = {reg.left(mat_R(f, f.zeta())), reg.left(mat_E12(f, f.one())),
                      reg.left(mat_J(f))};
  }
  return out;
}

EmittedPresentation emit_pgl2q(const FiniteField &f, bool alt) {
  unsigned q = f.q(), p = f.p(), deg = f.m();
  EmittedPresentation out;
  Presentation &pr = out.presentation;
  PermRep rep = perm_rep(RepFamily::pgl2, q);
  if (!alt) {
    pr.generators = {"r", "s", "j"};
    Word r = Word::gen(0), s = Word::gen(1), j = Word::gen(2);
    pr.add_relator(r.power(q - 1));
    pr.add_relator(s.power(2));
    pr.add_relator(j.power(2));
    pr.add_relator((j * s).power(3));
    pr.add_relator((j * r).power(2));
    add_gamma_family(pr, f, r, s);
    out.assignment = {rep.named["r"], rep.named["s"], rep.named["j"]};
  } else {
    pr.generators = {"r", "e", "j"};
    Word r = Word::gen(0), e = Word::gen(1), j = Word::gen(2);
    Word s = p == 2 ? e : e * r.power((q - 1) / 2);
    pr.add_relator(r.power(q - 1));
    pr.add_relator(e.power(p));
    pr.add_relator(j.power(2));
    pr.add_relator((j * r).power(2));
    pr.add_relator((j * s).power(3));
    auto ei = [&](unsigned i) { return r.power(i) * e * r.power(-(long)i); };
    for (unsigned i = 1; i + 1 < q; ++i)
      pr.add_relator(Word::commutator(e, ei(i)));
    Word prod;
    for (unsigned i = 0; i < deg; ++i) {
      unsigned ai = (p - f.modulus()[i] % p) % p;
      prod = prod * ei(i).power(ai);
    }
    pr.add_relation(ei(deg), prod);
    out.assignment = {rep.named["r"], rep.named["e"], rep.named["j"]};
  }
  return out;
}

// Cube-class representatives: {1} when 3 does not divide q-1, else
// {1, zeta, zeta^2} (as dlog exponents).
std::vector<unsigned> cube_class_exponents(unsigned q) {
  if ((q - 1) % 3 != 0)
    return {0};
  return {0, 1, 2};
}

EmittedPresentation emit_sl3q(const FiniteField &f) {
  unsigned q = f.q();
  EmittedPresentation out;
  Presentation &pr = out.presentation;
  pr.generators = {"r", "s", "j", "t"};
  Word r = Word::gen(0), s = Word::gen(1), j = Word::gen(2), t = Word::gen(3);
  Word z = (j * r).power(2);
  Word w = t * s * t;
  bool even = q % 2 == 0;
  auto e12 = [&](unsigned dl) { // E_{1,2}(z^dl)
    long jj = static_cast<long>(dl % (q - 1));
    if (even)
      return r.power(jj) * s * r.power(-jj);
    return r.power(jj) * s * r.power(-jj - (long)((q - 1) / 2));
  };
  // (I)
  pr.add_relator(r.power(q - 1));
  pr.add_relator(z.power(q - 1));
  pr.add_relator(s.power(2));
  pr.add_relator(j.power(2));
  pr.add_relator(t.power(2));
  pr.add_relator((j * s).power(3));
  pr.add_relator((t * j).power(3));
  pr.add_relator((t * r).power(2));
  // (II)
  pr.add_relator(Word::commutator(r, z));
  pr.add_relator(Word::commutator(s, z));
  pr.add_relation(Word::commutator(z, t), r.power(3));
  auto gamma = f.gamma_table();
  for (unsigned i = 1; i + 1 < q; ++i)
    pr.add_relation(Word::commutator(s, r.power(i)), e12(gamma[i]));
  // (III): (w E_{1,2}(a))^2 = 1 for cube-class representatives a.
  for (unsigned i : cube_class_exponents(q))
    pr.add_relator((w * e12(i)).power(2));
  // (IV): w j r^i w = rho_i w lambda_i for a = zeta^i in the class set.
  for (unsigned i : cube_class_exponents(q)) {
    std::uint32_t a = f.from_dlog(i);
    unsigned neg_a = f.dlog(f.neg(a));
    unsigned neg_inv_sq = f.dlog(f.neg(f.inv(f.mul(a, a))));
    Word rho = e12(neg_a) * j * r.power(i);
    Word lambda = e12(neg_inv_sq) * j * e12(2 * i % (q - 1)) * r.power(4 * (long)i) *
                  z.power(-2 * (long)i);
    pr.add_relation(w * j * r.power(i) * w, rho * w * lambda);
  }
  // Assignment against the projective-plane model (faithful for these q).
  if (std::gcd(3u, q - 1) == 1) {
    PermRep rep = perm_rep(RepFamily::sl3, q);
    out.assignment = {rep.named["r"], rep.named["s"], rep.named["j"], rep.named["t"]};
  }
  return out;
}

EmittedPresentation emit_psl3q(const FiniteField &f) {
  unsigned q = f.q();
  EmittedPresentation out;
  Presentation &pr = out.presentation;
  for (unsigned i = 1; i + 1 < q; ++i)
    pr.generators.push_back("r" + std::to_string(i));
  pr.generators.push_back("s");
  pr.generators.push_back("j");
  pr.generators.push_back("t");
  WordBuilder wb{&pr};
  Word s = wb.gen("s"), j = wb.gen("j"), t = wb.gen("t");
  Word w = t * s * t;
  auto rw = [&](std::uint32_t a) { // R^(a), empty for a = 1
    unsigned i = f.dlog(a);
    return i == 0 ? Word() : wb.gen("r" + std::to_string(i));
  };
  auto zw = [&](std::uint32_t a) { return (j * rw(a)).power(2); };
  auto e12 = [&](std::uint32_t a) { return rw(a) * s * rw(f.neg(a)).inverse(); };
  std::vector<std::uint32_t> units; // K^x minus 1
  for (unsigned i = 1; i + 1 < q; ++i)
    units.push_back(f.from_dlog(i));
  // (i)
  pr.add_relator(s.power(2));
  pr.add_relator(j.power(2));
  pr.add_relator(t.power(2));
  // (ii)-(vi)
  for (auto a : units) {
    for (auto b : units) {
      pr.add_relation(rw(a) * rw(b), rw(f.mul(a, b)));
      pr.add_relation(zw(a) * zw(b), zw(f.mul(a, b)));
      pr.add_relator(Word::commutator(rw(a), zw(b)));
    }
    pr.add_relator(Word::commutator(s, zw(a)));
    pr.add_relation(Word::commutator(s, rw(a)), e12(f.sub(f.one(), a)));
  }
  // (vii)-(ix)
  pr.add_relator((j * s).power(3));
  pr.add_relator((t * j).power(3));
  for (auto a : units) {
    pr.add_relator((t * rw(a)).power(2));
    pr.add_relation(Word::commutator(zw(a), t), rw(a).power(3));
  }
  // (x)-(xi)
  for (unsigned i : cube_class_exponents(q)) {
    std::uint32_t a = f.from_dlog(i);
    pr.add_relator((w * e12(a)).power(2));
    Word rho = e12(f.neg(a)) * j * rw(a);
    Word lambda = e12(f.neg(f.inv(f.mul(a, a)))) * j * e12(f.mul(a, a)) * rw(a).power(4) *
                  zw(a).power(-2);
    pr.add_relation(w * j * rw(a) * w, rho * w * lambda);
  }
  // PSL extra relation when a primitive cube root of unity exists.
  if ((q - 1) % 3 == 0)
    pr.add_relator((j * rw(f.from_dlog((q - 1) / 3))).power(2), RelatorTag::extra);
  // Assignment onto the projective plane action (the PSL quotient).
  PermRep rep = perm_rep(RepFamily::psl3, q);
  ProjPlane plane(f);
  for (unsigned i = 1; i + 1 < q; ++i)
    out.assignment.push_back(plane.action(mat3_Rhat(f, f.from_dlog(i))));
  out.assignment.push_back(rep.named["s"]);
  out.assignment.push_back(rep.named["j"]);
  out.assignment.push_back(rep.named["t"]);
  return out;
}

EmittedPresentation emit_psl34(const FiniteField &f) {
  if (f.q() != 4)
    throw std::invalid_argument("psl34 is defined for q = 4");
  EmittedPresentation out;
  Presentation &pr = out.presentation;
  pr.generators = {"s", "j", "t", "r"};
  Word s = Word::gen(0), j = Word::gen(1), t = Word::gen(2), r = Word::gen(3);
  for (const Word &rel :
       {s.power(2), j.power(2), t.power(2), r.power(3), (j * r).power(2), (t * r).power(2),
        (s * r).power(3), (j * s).power(3), (t * j).power(3),
        (t * s * t * j * s).power(3)})
    pr.add_relator(rel);
  Word tst = t * s * t;
  Word rsr1jr = r * s * r.inverse() * j * r;
  pr.add_relation(tst * j * r * tst,
                  rsr1jr * tst * r * s * r.inverse() * j * r.inverse() * s * r.inverse());
  PermRep rep = perm_rep(RepFamily::psl3, 4);
  out.assignment = {rep.named["s"], rep.named["j"], rep.named["t"], rep.named["r"]};
  return out;
}

} // namespace

EmittedPresentation emit_family_presentation(PresFamily family, unsigned q) {
  auto [p, m] = factor_prime_power(q);
  FiniteField f(p, m);
  switch (family) {
  case PresFamily::b2K:
    return emit_b2K(f);
  case PresFamily::gl2q:
    return emit_gl2q(f);
  case PresFamily::gl2q_alt:
    return emit_gl2q_alt(f);
  case PresFamily::pgl2q:
    return emit_pgl2q(f, false);
  case PresFamily::pgl2q_alt:
    return emit_pgl2q(f, true);
  case PresFamily::sl3q:
    return emit_sl3q(f);
  case PresFamily::psl3q:
    return emit_psl3q(f);
  case PresFamily::psl34:
    return emit_psl34(f);
  }
  throw std::logic_error("unreachable");
}

Polygroup sl3_stabilizer_polygroup(unsigned q) {
  if (q != 2 && q != 3 && q != 4)
    throw std::invalid_argument("sl3_stabilizer_polygroup supports q in {2,3,4}");
  auto [p, m] = factor_prime_power(q);
  FiniteField f(p, m);
  ProjPlane plane(f);
  PermRep rep = perm_rep(RepFamily::psl3, q);
  unsigned pt0 = plane.index_of({0, 0, f.one()});
  unsigned pt1 = plane.index_of({f.one(), 0, 0});
  PermGroup g0 = rep.group.point_stabilizer(pt0);
  PermGroup g00 = g0.point_stabilizer(pt1);
  return double_coset_polygroup(g0, g00);
}

} // namespace polypres
