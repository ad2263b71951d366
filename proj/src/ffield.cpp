#include "polypres/ffield.hpp"

#include <sstream>
#include <stdexcept>

namespace polypres {

bool is_prime(unsigned n) {
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

std::vector<unsigned> unpack(std::uint32_t v, unsigned p, unsigned m) {
  std::vector<unsigned> c(m);
  for (unsigned i = 0; i < m; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

std::uint32_t pack(const std::vector<unsigned> &c, unsigned p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    v = v * p + c[i];
  return v;
}

// Polynomial product of packed elements reduced by the monic modulus.
std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, unsigned p,
                           unsigned m, const std::vector<unsigned> &modulus) {
  std::vector<unsigned> ca = unpack(a, p, m), cb = unpack(b, p, m);
  std::vector<unsigned> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  // Reduce by x^m = -(modulus lower part).
  for (unsigned d = 2 * m - 1; d >= m; --d) {
    unsigned c = prod[d];
    if (c == 0)
      continue;
    prod[d] = 0;
    for (unsigned i = 0; i < m; ++i)
      prod[d - m + i] = (prod[d - m + i] + c * (p - modulus[i] % p)) % p;
  }
  prod.resize(m);
  return pack(prod, p);
}

bool is_irreducible(const std::vector<unsigned> &modulus, unsigned p, unsigned m) {
  // No roots test handles m <= 3 fully only for m <= 3; use brute-force
  // divisibility by all monic polynomials of degree <= m/2.
  // Polynomials packed base p, degree d monic: iterate lower coefficients.
  auto eval_div = [&](const std::vector<unsigned> &div) {
    // Synthetic division of modulus (degree m, monic) by div (degree d, monic).
    std::vector<unsigned> rem(modulus.begin(), modulus.end());
    rem.push_back(1); // monic leading coefficient of the modulus
    unsigned d = static_cast<unsigned>(div.size()); // degree of divisor
    for (unsigned k = m; k >= d; --k) {
      unsigned c = rem[k];
      if (c) {
        rem[k] = 0;
        for (unsigned i = 0; i < d; ++i)
          rem[k - d + i] = (rem[k - d + i] + c * (p - div[i])) % p;
      }
      if (k == d)
        break;
    }
    for (unsigned i = 0; i < d; ++i)
      if (rem[i])
        return false;
    return true;
  };
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::uint32_t count = 1;
    for (unsigned i = 0; i < d; ++i)
      count *= p;
    for (std::uint32_t v = 0; v < count; ++v) {
      std::vector<unsigned> div = unpack(v, p, d);
      if (eval_div(div))
        return false;
    }
  }
  return true;
}

} // namespace

FiniteField::FiniteField(unsigned p, unsigned m) : p_(p), m_(m) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic must be prime");
  if (m < 1)
    throw std::invalid_argument("field degree must be positive");
  unsigned long long q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > (1ull << 32))
      throw std::invalid_argument("field too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (q_ > (1u << 16))
    throw std::invalid_argument("table-backed fields bounded at 2^16");

  if (p == 3 && m == 2) {
    modulus_ = {2, 1}; // x^2 + x + 2, so z^2 = 1 - z
  } else if (p == 2 && m == 2) {
    modulus_ = {1, 1}; // x^2 + x + 1
  } else {
    // Scan monic polynomials by lexicographic coefficient order; take the
    // first irreducible one whose root is primitive.
    std::uint32_t count = 1;
    for (unsigned i = 0; i < m; ++i)
      count *= p;
    bool found = false;
    for (std::uint32_t v = 0; v < count && !found; ++v) {
      std::vector<unsigned> cand = unpack(v, p_, m_);
      if (cand[0] == 0)
        continue; // x divides it
      if (!is_irreducible(cand, p_, m_))
        continue;
      modulus_ = cand;
      build_tables();
      if (!powers_.empty()) {
        found = true;
        break;
      }
    }
    if (!found)
      throw std::runtime_error("no primitive modulus found");
    return;
  }
  build_tables();
  if (powers_.empty())
    throw std::runtime_error("override modulus is not primitive");
}

void FiniteField::build_tables() {
  // Powers of z; abandons (leaves tables empty) if z is not primitive.
  powers_.clear();
  dlog_.assign(q_, -1);
  std::uint32_t z = (m_ == 1) ? (p_ - modulus_[0] % p_) % p_ : p_;
  std::uint32_t x = 1;
  for (unsigned i = 0; i + 1 < q_; ++i) {
    if (dlog_[x] != -1) {
      powers_.clear();
      return; // period shorter than q-1: not primitive
    }
    dlog_[x] = static_cast<int>(i);
    powers_.push_back(x);
    x = mul_raw(x, z);
  }
  if (x != 1)
    powers_.clear();
}

std::uint32_t FiniteField::mul_raw(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1)
    return (a * b) % p_;
  return poly_mul_mod(a, b, p_, m_, modulus_);
}

std::uint32_t FiniteField::zeta() const { return powers_[1 % (q_ - 1)]; }

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1)
    return (a + b) % p_;
  std::vector<unsigned> ca = unpack(a, p_, m_), cb = unpack(b, p_, m_);
  for (unsigned i = 0; i < m_; ++i)
    ca[i] = (ca[i] + cb[i]) % p_;
  return pack(ca, p_);
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (m_ == 1)
    return (p_ - a) % p_;
  std::vector<unsigned> c = unpack(a, p_, m_);
  for (unsigned i = 0; i < m_; ++i)
    c[i] = (p_ - c[i]) % p_;
  return pack(c, p_);
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0)
    return 0;
  unsigned i = dlog(a), j = dlog(b);
  return powers_[(i + j) % (q_ - 1)];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0)
    throw std::domain_error("division by zero in finite field");
  unsigned i = dlog(a);
  return powers_[(q_ - 1 - i) % (q_ - 1)];
}

std::uint32_t FiniteField::div(std::uint32_t a, std::uint32_t b) const {
  return mul(a, inv(b));
}

std::uint32_t FiniteField::pow(std::uint32_t a, long e) const {
  if (a == 0) {
    if (e <= 0)
      throw std::domain_error("0 to a nonpositive power");
    return 0;
  }
  long n = static_cast<long>(q_ - 1);
  long i = (static_cast<long>(dlog(a)) * (e % n)) % n;
  if (i < 0)
    i += n;
  return powers_[static_cast<std::size_t>(i)];
}

std::uint32_t FiniteField::frobenius(std::uint32_t a, unsigned k) const {
  long e = 1;
  for (unsigned i = 0; i < k; ++i)
    e *= p_;
  if (a == 0)
    return 0;
  return pow(a, e);
}

unsigned FiniteField::dlog(std::uint32_t a) const {
  if (a == 0)
    throw std::domain_error("dlog of zero");
  int i = dlog_[a];
  if (i < 0)
    throw std::logic_error("dlog table incomplete");
  return static_cast<unsigned>(i);
}

std::uint32_t FiniteField::from_dlog(unsigned i) const {
  return powers_[i % (q_ - 1)];
}

std::uint32_t FiniteField::reduce_int(unsigned long v) const {
  return static_cast<std::uint32_t>(v % p_);
}

bool FiniteField::is_square(std::uint32_t a) const {
  if (a == 0)
    throw std::domain_error("square class of zero is undefined");
  if (p_ == 2)
    return true;
  return dlog(a) % 2 == 0;
}

std::vector<unsigned> FiniteField::gamma_table() const {
  if (q_ < 3)
    throw std::domain_error("gamma table needs q >= 3");
  std::vector<unsigned> g(q_ - 1, 0); // index i used for 1 <= i <= q-2
  for (unsigned i = 1; i + 1 < q_; ++i) {
    std::uint32_t v = sub(one(), from_dlog(i));
    g[i] = dlog(v);
  }
  return g;
}

std::string FiniteField::to_string(std::uint32_t a) const {
  if (a == 0)
    return "0";
  std::ostringstream os;
  os << "z^" << dlog(a);
  return os.str();
}

std::string FiniteField::spec_string() const {
  std::ostringstream os;
  os << "gf:" << p_ << "^" << m_;
  return os.str();
}

std::vector<std::uint32_t> FiniteField::all_elements() const {
  // 0 first, then powers of z in exponent order.
  std::vector<std::uint32_t> out;
  out.push_back(0);
  for (unsigned i = 0; i + 1 < q_; ++i)
    out.push_back(powers_[i]);
  return out;
}

} // namespace polypres
