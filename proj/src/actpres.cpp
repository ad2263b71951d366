#include "polypres/actpres.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polypres/table_group.hpp"

namespace polypres {

void HContext::ensure_chain() const {
  if (!chain_) {
    unsigned degree = images.empty() ? 1 : images[0].degree();
    group_ = std::make_shared<PermGroup>(degree, images);
    chain_ = std::make_shared<WordChain>(*group_);
  }
}

Word HContext::rewrite(const Perm &h) const {
  if (h.is_identity())
    return Word();
  ensure_chain();
  return Word(chain_->factor(h));
}

bool SectionData::h_contains(const Perm &p) const {
  return std::binary_search(h_elements.begin(), h_elements.end(), p);
}

Perm SectionData::iota(unsigned f, const Perm &h) const {
  return sigma[f].inverse() * h * sigma[f];
}

std::vector<Perm> greedy_generators(const std::vector<Perm> &sorted_elements) {
  std::vector<Perm> gens;
  if (sorted_elements.empty())
    return gens;
  unsigned degree = sorted_elements[0].degree();
  std::set<Perm> span;
  span.insert(Perm(degree));
  for (const Perm &e : sorted_elements) {
    if (span.count(e))
      continue;
    gens.push_back(e);
    // Re-close the span.
    std::vector<Perm> work(span.begin(), span.end());
    for (std::size_t h = 0; h < work.size(); ++h)
      for (const Perm &g : gens) {
        Perm a = work[h] * g;
        if (span.insert(a).second)
          work.push_back(a);
        Perm b = g * work[h];
        if (span.insert(b).second)
          work.push_back(b);
      }
    if (span.size() == sorted_elements.size())
      break;
  }
  return gens;
}

SectionData build_section(const PermGroup &g, const PermGroup &h,
                          const SectionOptions &opts) {
  SectionData s;
  s.group = g;
  s.stabilizer = h;
  s.cosets = double_cosets(g, h, h);
  s.h_elements = h.elements();
  unsigned n = s.coset_count();
  if (n > 4096)
    throw std::runtime_error("double coset space too large");

  s.bar.resize(n);
  for (unsigned f = 0; f < n; ++f)
    s.bar[f] = s.cosets.coset_of(s.cosets.reps[f].inverse());

  // Orientation: f is oriented when its index (minimal-element order) does
  // not exceed that of bar(f).
  s.oriented.resize(n);
  for (unsigned f = 0; f < n; ++f)
    s.oriented[f] = f <= s.bar[f];

  // Section: sigma(e) = 1; sigma(fbar) = sigma(f)^-1 for paired cosets; for
  // self-paired cosets, twist the minimal representative g by h1 with
  // g^-1 = h1 g h2, making sigma(f) = g h1 an admissible choice with
  // sigma(f)^2 = h2^-1 h1 in H.
  s.sigma.assign(n, Perm(g.degree()));
  s.theta.assign(n, Perm(g.degree()));
  for (unsigned f = 1; f < n; ++f) {
    if (s.bar[f] == f) {
      const Perm &rep = s.cosets.reps[f];
      Perm rep_inv = rep.inverse();
      std::vector<Perm> twists;
      for (const Perm &h1 : s.h_elements) {
        Perm h2 = rep_inv * h1.inverse() * rep_inv;
        if (s.h_contains(h2)) {
          twists.push_back(h1);
          if (twists.size() > 1)
            break;
        }
      }
      if (twists.empty())
        throw std::logic_error("self-paired coset without admissible twist");
      const Perm &h1 = (opts.alternate_sigma && twists.size() > 1) ? twists[1] : twists[0];
      s.sigma[f] = rep * h1;
      s.theta[f] = s.sigma[f] * s.sigma[f];
    } else if (s.oriented[f]) {
      s.sigma[f] = s.cosets.reps[f];
      s.sigma[s.bar[f]] = s.sigma[f].inverse();
    }
  }

  // H_f = H meets sigma(f) H sigma(f)^-1.
  s.h_f.resize(n);
  for (unsigned f = 0; f < n; ++f) {
    for (const Perm &x : s.h_elements)
      if (s.h_contains(s.sigma[f].inverse() * x * s.sigma[f]))
        s.h_f[f].push_back(x);
  }

  // P_f: minimal representatives of the cosets p H_f, identity first.
  s.p_f.resize(n);
  for (unsigned f = 0; f < n; ++f) {
    std::set<Perm> covered;
    for (const Perm &p : s.h_elements) {
      if (covered.count(p))
        continue;
      s.p_f[f].push_back(p);
      for (const Perm &k : s.h_f[f])
        covered.insert(p * k);
    }
  }

  // Q_{f,f'}: minimal double-coset representatives, with Q_{f',f} the
  // inverse set of Q_{f,f'} when f != f'.
  s.q_ff.assign(n, std::vector<std::vector<Perm>>(n));
  for (unsigned f = 0; f < n; ++f)
    for (unsigned f2 = f; f2 < n; ++f2) {
      std::set<Perm> covered;
      std::vector<Perm> reps;
      for (const Perm &p : s.h_elements) {
        if (covered.count(p))
          continue;
        reps.push_back(p);
        for (const Perm &a : s.h_f[f])
          for (const Perm &b : s.h_f[f2])
            covered.insert(a * p * b);
      }
      s.q_ff[f][f2] = reps;
      if (f2 != f) {
        std::vector<Perm> inv;
        inv.reserve(reps.size());
        for (const Perm &r : reps)
          inv.push_back(r.inverse());
        s.q_ff[f2][f] = std::move(inv);
      }
    }

  return s;
}

NormalForm normal_form(const Perm &g, const SectionData &s) {
  NormalForm nf;
  nf.coset = s.cosets.coset_of(g);
  const Perm sig_inv = s.sigma[nf.coset].inverse();
  for (const Perm &p : s.p_f[nf.coset]) {
    Perm lambda = sig_inv * p.inverse() * g;
    if (s.h_contains(lambda)) {
      nf.rho = p;
      nf.lambda = lambda;
      return nf;
    }
  }
  throw std::logic_error("normal form not found");
}

HContext regular_context(const PermGroup &h, const std::string &prefix) {
  HContext ctx;
  auto elems = h.elements();
  TableGroup t = TableGroup::from_elements(elems);
  auto word_of = [&](unsigned e) {
    return e == 0 ? Word() : Word::gen(static_cast<int>(e - 1));
  };
  for (unsigned i = 1; i < t.size(); ++i) {
    ctx.names.push_back(prefix + std::to_string(i));
    ctx.images.push_back(elems[i]);
  }
  ctx.relators.generators = ctx.names;
  for (unsigned i = 1; i < t.size(); ++i)
    for (unsigned j = 1; j < t.size(); ++j)
      ctx.relators.add_relation(word_of(i) * word_of(j), word_of(t.mul(i, j)),
                                RelatorTag::base);
  return ctx;
}

namespace {

bool transitive_on(const PermGroup &g, const std::vector<unsigned> &domain) {
  if (domain.empty())
    return true;
  auto orb = g.orbit(domain[0]);
  std::set<unsigned> os(orb.begin(), orb.end());
  for (unsigned x : domain)
    if (!os.count(x))
      return false;
  return true;
}

} // namespace

HContext recursive_context(const PermGroup &h, const std::vector<unsigned> &domain,
                           unsigned depth) {
  if (h.order() == 1) {
    HContext ctx;
    ctx.relators.generators = {};
    return ctx;
  }
  // Descend while the action on the remaining domain stays 2-transitive.
  if (domain.size() >= 2 && transitive_on(h, domain)) {
    unsigned omega0 = domain[0];
    PermGroup stab = h.point_stabilizer(omega0);
    std::vector<unsigned> rest(domain.begin() + 1, domain.end());
    if (transitive_on(stab, rest)) {
      unsigned omega1 = rest[0];
      HContext inner = recursive_context(stab, rest, depth + 1);
      auto emitted = [&] {
        EmittedPresentation e;
        // The corollary emitter below names the new generator "y<depth>".
        e = emit_2transitive_presentation(h, omega0, omega1, &inner);
        return e;
      }();
      // Rename the extra generator (emitted last) to a depth-tagged name.
      HContext ctx;
      ctx.names = emitted.presentation.generators;
      ctx.names.back() = "y" + std::to_string(depth);
      ctx.images = emitted.assignment;
      ctx.relators = emitted.presentation;
      ctx.relators.generators = ctx.names;
      return ctx;
    }
  }
  return regular_context(h, "t");
}

EmittedPresentation emit_theorem_from_section(const SectionData &s, const HContext &hctx,
                                              bool reduce_type2) {
  EmittedPresentation out;
  unsigned n = s.coset_count();
  unsigned degree = s.group.degree();

  // Generators: H generators first, then x_f for oriented nontrivial cosets.
  out.presentation.generators = hctx.names;
  out.assignment = hctx.images;
  std::vector<int> xgen(n, -1); // oriented coset -> generator index
  unsigned xcount = 0;
  for (unsigned f = 1; f < n; ++f)
    if (s.oriented[f]) {
      xgen[f] = static_cast<int>(out.presentation.generators.size());
      out.presentation.generators.push_back("x" + std::to_string(++xcount));
      out.assignment.push_back(s.sigma[f]);
    }
  auto xword = [&](unsigned f) -> Word {
    if (f == 0)
      return Word();
    if (s.oriented[f])
      return Word::gen(xgen[f]);
    return Word::gen(xgen[s.bar[f]]).inverse();
  };

  // H relators carry over.
  for (std::size_t i = 0; i < hctx.relators.relators.size(); ++i)
    out.presentation.add_relator(hctx.relators.relators[i], RelatorTag::base);

  // Type I: h x_f = x_f iota_f(h) for generators h of H_f.
  for (unsigned f = 1; f < n; ++f) {
    if (!s.oriented[f])
      continue;
    for (const Perm &h : greedy_generators(s.h_f[f])) {
      Word lhs = hctx.rewrite(h) * xword(f);
      Word rhs = xword(f) * hctx.rewrite(s.iota(f, h));
      out.presentation.add_relation(lhs, rhs, RelatorTag::type_i);
    }
  }

  // Type II: x_f h x_f' = rho_g x_{C(g)} lambda_g for h in Q_{fbar, f'};
  // with the reduction of the type II family, only pairs with fbar <= f'.
  for (unsigned f = 1; f < n; ++f)
    for (unsigned f2 = 1; f2 < n; ++f2) {
      if (reduce_type2 && s.bar[f] > f2)
        continue;
      for (const Perm &h : s.q_ff[s.bar[f]][f2]) {
        Perm g = s.sigma[f] * h * s.sigma[f2];
        NormalForm nf = normal_form(g, s);
        Word lhs = xword(f) * hctx.rewrite(h) * xword(f2);
        Word rhs = hctx.rewrite(nf.rho) * xword(nf.coset) * hctx.rewrite(nf.lambda);
        out.presentation.add_relation(lhs, rhs, RelatorTag::type_ii);
      }
    }

  // Degree sanity: assignments all live in Sym(degree).
  for (const Perm &p : out.assignment)
    if (p.degree() != degree)
      throw std::logic_error("assignment degree mismatch");
  return out;
}

EmittedPresentation emit_theorem_presentation(const PermGroup &g, unsigned omega0,
                                              const HContext *hctx, bool reduce_type2) {
  if (g.orbit(omega0).size() != g.degree())
    throw std::invalid_argument("action is not transitive");
  PermGroup h = g.point_stabilizer(omega0);
  SectionData s = build_section(g, h);
  if (hctx)
    return emit_theorem_from_section(s, *hctx, reduce_type2);
  std::vector<unsigned> domain;
  for (unsigned x = 0; x < g.degree(); ++x)
    if (x != omega0)
      domain.push_back(x);
  HContext ctx = recursive_context(h, domain, 2);
  return emit_theorem_from_section(s, ctx, reduce_type2);
}

EmittedPresentation emit_2transitive_presentation(const PermGroup &g, unsigned omega0,
                                                  unsigned omega1, const HContext *hctx_in) {
  unsigned degree = g.degree();
  if (omega0 == omega1 || omega0 >= degree || omega1 >= degree)
    throw std::invalid_argument("need two distinct points");
  // The active domain is the orbit of omega0; every point outside it must
  // be fixed (the stabilizer-tower recursion passes such groups).
  std::vector<unsigned> domain = g.orbit(omega0);
  std::sort(domain.begin(), domain.end());
  {
    std::set<unsigned> ds(domain.begin(), domain.end());
    if (!ds.count(omega1))
      throw std::invalid_argument("omega1 outside the orbit of omega0");
    for (unsigned x = 0; x < degree; ++x)
      if (!ds.count(x))
        for (const Perm &gen : g.generators())
          if (gen[x] != x)
            throw std::invalid_argument("action moves points outside the orbit");
  }
  PermGroup h = g.point_stabilizer(omega0);
  std::vector<unsigned> rest;
  for (unsigned x : domain)
    if (x != omega0)
      rest.push_back(x);
  if (!transitive_on(h, rest))
    throw std::invalid_argument("action is not 2-transitive");

  HContext local;
  const HContext *hctx = hctx_in;
  if (!hctx) {
    local = recursive_context(h, rest, 2);
    hctx = &local;
  }

  PermGroup h1 = h.point_stabilizer(omega1);

  // tau: preferred involution swapping omega0 and omega1 (minimal), else the
  // minimal swapping element found via transversals.
  std::vector<unsigned> orb;
  std::vector<Perm> tr;
  g.orbit_transversal(omega0, orb, tr);
  Perm u(degree);
  for (std::size_t i = 0; i < orb.size(); ++i)
    if (orb[i] == omega1)
      u = tr[i];
  std::vector<unsigned> horb;
  std::vector<Perm> htr;
  h.orbit_transversal(omega1, horb, htr);
  auto h_transversal_to = [&](unsigned point) -> Perm {
    for (std::size_t i = 0; i < horb.size(); ++i)
      if (horb[i] == point)
        return htr[i];
    throw std::logic_error("point outside stabilizer orbit");
  };
  Perm p0 = h_transversal_to(u.inverse()[omega0]);
  Perm tau = u * p0; // swaps omega0, omega1
  if (h1.order() <= 5000) {
    std::optional<Perm> best;
    for (const Perm &x : h1.elements()) {
      Perm cand = tau * x;
      if ((cand * cand).is_identity() && (!best || cand < *best))
        best = cand;
    }
    if (best)
      tau = *best;
    else {
      for (const Perm &x : h1.elements()) {
        Perm cand = tau * x;
        if (!best || cand < *best)
          best = cand;
      }
      tau = *best;
    }
  }
  if (tau[omega0] != omega1 || tau[omega1] != omega0)
    throw std::logic_error("tau does not swap the base points");

  Perm theta = tau * tau;

  EmittedPresentation out;
  out.presentation.generators = hctx->names;
  out.assignment = hctx->images;
  int xg = static_cast<int>(out.presentation.generators.size());
  out.presentation.generators.push_back("x");
  out.assignment.push_back(tau);
  Word x = Word::gen(xg);

  for (std::size_t i = 0; i < hctx->relators.relators.size(); ++i)
    out.presentation.add_relator(hctx->relators.relators[i], RelatorTag::base);

  // (1) h_i x = x iota(h_i) for generators of H_1.
  for (const Perm &hi : h1.generators()) {
    Word lhs = hctx->rewrite(hi) * x;
    Word rhs = x * hctx->rewrite(hi.conjugate_by(tau));
    out.presentation.add_relation(lhs, rhs, RelatorTag::type_i);
  }

  // (2) x^2 = theta.
  out.presentation.add_relation(x * x, hctx->rewrite(theta), RelatorTag::type_ii);

  // (3) x q x = rho' x lambda', one q per nontrivial H_1-orbit on the
  // remaining points.
  std::set<unsigned> seen{omega0, omega1};
  for (unsigned pt : domain) {
    if (seen.count(pt))
      continue;
    auto orbq = h1.orbit(pt);
    unsigned m = pt;
    for (unsigned z : orbq) {
      if (z != omega0 && z != omega1)
        seen.insert(z);
      m = std::min(m, z);
    }
    Perm q = h_transversal_to(m);
    Perm rho = h_transversal_to(tau[q[omega1]]);
    Perm lambda = (rho.inverse() * tau * q).conjugate_by(tau);
    if (!h.contains(lambda))
      throw std::logic_error("lambda' not in the stabilizer");
    Word lhs = x * hctx->rewrite(q) * x;
    Word rhs = hctx->rewrite(rho) * x * hctx->rewrite(lambda);
    out.presentation.add_relation(lhs, rhs, RelatorTag::type_ii);
  }

  return out;
}

} // namespace polypres
