#include "polypres/fpres.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace polypres {

void Word::append(int letter) {
  if (!letters_.empty() && letters_.back() == ~letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

Word Word::operator*(const Word &rhs) const {
  Word out = *this;
  for (int l : rhs.letters_)
    out.append(l);
  return out;
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(~*it);
  return out;
}

Word Word::power(long e) const {
  Word base = e >= 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
  Word acc;
  for (unsigned long i = 0; i < k; ++i)
    acc = acc * base;
  return acc;
}

Word Word::conjugate_by(const Word &t) const { return t.inverse() * *this * t; }

Word Word::commutator(const Word &x, const Word &y) {
  return x * y * x.inverse() * y.inverse();
}

int Presentation::gen_index(const std::string &name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name)
      return static_cast<int>(i);
  return -1;
}

void Presentation::add_relator(Word w, RelatorTag tag) {
  if (w.empty())
    return; // trivially satisfied
  relators.push_back(std::move(w));
  tags.push_back(tag);
}

void Presentation::add_relation(const Word &lhs, const Word &rhs, RelatorTag tag) {
  add_relator(lhs * rhs.inverse(), tag);
}

std::string Presentation::word_to_string(const Word &w) const {
  if (w.empty())
    return "";
  std::ostringstream os;
  // Run-length collapse consecutive powers of the same generator.
  const auto &ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    int g = ls[i] >= 0 ? ls[i] : ~ls[i];
    long e = 0;
    std::size_t j = i;
    while (j < ls.size() && (ls[j] == ls[i]))
      ++j, e += 1;
    if (ls[i] < 0)
      e = -e;
    if (!first)
      os << "*";
    os << generators[static_cast<std::size_t>(g)];
    if (e != 1)
      os << "^" << e;
    first = false;
    i = j;
  }
  return os.str();
}

namespace {

struct WordParser {
  const Presentation &pres;
  const std::string &text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected integer exponent");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  }

  Word parse_term() {
    skip_ws();
    Word base;
    if (i < text.size() && text[i] == '(') {
      ++i;
      base = parse_word();
      skip_ws();
      if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("missing ')' in word");
      ++i;
    } else {
      if (i >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[i]))))
        throw std::invalid_argument("expected generator name");
      std::size_t start = i;
      ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name = text.substr(start, i - start);
      int gi = pres.gen_index(name);
      if (gi < 0)
        throw std::invalid_argument("unknown generator: " + name);
      base = Word::gen(gi);
    }
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      long e = parse_int();
      base = base.power(e);
    }
    return base;
  }

  Word parse_word() {
    Word w = parse_term();
    skip_ws();
    while (i < text.size() && text[i] == '*') {
      ++i;
      w = w * parse_term();
      skip_ws();
    }
    return w;
  }
};

} // namespace

Word Presentation::parse_word(const std::string &text) const {
  WordParser p{*this, text};
  Word w = p.parse_word();
  p.skip_ws();
  if (p.i != text.size())
    throw std::invalid_argument("trailing characters in word: " + text);
  return w;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "gens:";
  for (const auto &g : generators)
    os << " " << g;
  os << "\n";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    switch (tags[i]) {
    case RelatorTag::type_i:
      os << "# typeI\n";
      break;
    case RelatorTag::type_ii:
      os << "# typeII\n";
      break;
    case RelatorTag::base:
      os << "# base\n";
      break;
    case RelatorTag::extra:
      os << "# extra\n";
      break;
    case RelatorTag::none:
      break;
    }
    os << "rel: " << word_to_string(relators[i]) << "\n";
  }
  return os.str();
}

Presentation Presentation::from_text(const std::string &text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  RelatorTag pending = RelatorTag::none;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    std::string body = line.substr(first);
    if (body[0] == '#') {
      std::string c = body.substr(1);
      auto pos = c.find_first_not_of(" \t");
      c = pos == std::string::npos ? "" : c.substr(pos);
      if (c == "typeI")
        pending = RelatorTag::type_i;
      else if (c == "typeII")
        pending = RelatorTag::type_ii;
      else if (c == "base")
        pending = RelatorTag::base;
      else if (c == "extra")
        pending = RelatorTag::extra;
      continue;
    }
    if (body.rfind("gens:", 0) == 0) {
      std::istringstream gs(body.substr(5));
      std::string name;
      while (gs >> name)
        p.generators.push_back(name);
      continue;
    }
    if (body.rfind("rel:", 0) == 0) {
      p.add_relator(p.parse_word(body.substr(4)), pending);
      pending = RelatorTag::none;
      continue;
    }
    throw std::invalid_argument("unrecognized line in presentation: " + body);
  }
  return p;
}

Perm evaluate_word(const Word &w, const std::vector<Perm> &assignment, unsigned degree) {
  Perm acc(degree);
  for (int l : w.letters()) {
    if (l >= 0)
      acc = acc * assignment[static_cast<std::size_t>(l)];
    else
      acc = acc * assignment[static_cast<std::size_t>(~l)].inverse();
  }
  return acc;
}

std::vector<bool> relator_check(const Presentation &p, const std::vector<Perm> &assignment) {
  if (assignment.size() != p.generators.size())
    throw std::invalid_argument("assignment size mismatch");
  unsigned degree = assignment.empty() ? 1 : assignment[0].degree();
  std::vector<bool> out;
  out.reserve(p.relators.size());
  for (const Word &r : p.relators)
    out.push_back(evaluate_word(r, assignment, degree).is_identity());
  return out;
}

bool relators_hold(const Presentation &p, const std::vector<Perm> &assignment) {
  auto v = relator_check(p, assignment);
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

std::vector<bool> relator_check(const Presentation &p, const TableGroup &g,
                                const std::vector<unsigned> &assignment) {
  if (assignment.size() != p.generators.size())
    throw std::invalid_argument("assignment size mismatch");
  std::vector<bool> out;
  for (const Word &r : p.relators) {
    unsigned acc = g.identity();
    for (int l : r.letters()) {
      if (l >= 0)
        acc = g.mul(acc, assignment[static_cast<std::size_t>(l)]);
      else
        acc = g.mul(acc, g.inv(assignment[static_cast<std::size_t>(~l)]));
    }
    out.push_back(acc == g.identity());
  }
  return out;
}

VerificationReport verify_presentation(const Presentation &p, const PermGroup &target,
                                       const std::vector<Perm> &assignment,
                                       VerifyStrategy strategy,
                                       const std::vector<Word> &subgroup_gens,
                                       unsigned long long subgroup_order,
                                       std::size_t max_cosets) {
  VerificationReport rep;
  rep.relator_check = relator_check(p, assignment);
  bool relators_ok =
      std::all_of(rep.relator_check.begin(), rep.relator_check.end(), [](bool b) { return b; });
  PermGroup image(target.degree(), assignment);
  rep.surjective = image.order() == target.order() && image.is_subgroup_of(target);
  std::optional<unsigned long long> index;
  if (strategy == VerifyStrategy::full_enumeration) {
    rep.enumeration = "trivial subgroup";
    index = todd_coxeter(p, {}, max_cosets);
    if (index)
      rep.index = *index;
    else
      rep.overflow = true;
    if (relators_ok && rep.surjective && index && *index == target.order())
      rep.concluded_order = target.order();
  } else {
    rep.enumeration = "subgroup of certified order " + std::to_string(subgroup_order);
    index = todd_coxeter(p, subgroup_gens, max_cosets);
    if (index)
      rep.index = *index;
    else
      rep.overflow = true;
    if (relators_ok && rep.surjective && index && *index * subgroup_order == target.order())
      rep.concluded_order = target.order();
  }
  return rep;
}

} // namespace polypres
