#ifndef POLYPRES_FFIELD_HPP
#define POLYPRES_FFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polypres {

// GF(p^m) with a primitive modulus: the residue class z of the indeterminate
// generates the multiplicative group. Elements are packed coefficient
// vectors, value = sum c_i * p^i with c_i the coefficient of z^i.
class FiniteField {
public:
  FiniteField(unsigned p, unsigned m);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<unsigned> &modulus() const { return modulus_; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }
  std::uint32_t zeta() const; // the primitive element z

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, long e) const;
  std::uint32_t frobenius(std::uint32_t a, unsigned k = 1) const; // a^(p^k)

  // i with z^i = a, 0 <= i < q-1.
  unsigned dlog(std::uint32_t a) const;
  std::uint32_t from_dlog(unsigned i) const; // z^(i mod q-1)
  std::uint32_t from_int(unsigned long v) const { return reduce_int(v); }

  bool is_square(std::uint32_t a) const; // nonzero squares only; a != 0

  // gamma(i) in {1..q-2} with z^gamma(i) = 1 - z^i, for 1 <= i <= q-2.
  std::vector<unsigned> gamma_table() const;

  std::string to_string(std::uint32_t a) const; // "0" or "z^i"
  std::string spec_string() const;              // "gf:p^m"

  std::vector<std::uint32_t> all_elements() const;

private:
  unsigned p_, m_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_; // monic, coefficient of x^i at index i
  std::vector<std::uint32_t> powers_;
  std::vector<int> dlog_;

  std::uint32_t reduce_int(unsigned long v) const;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
  void build_tables();
};

bool is_prime(unsigned n);

} // namespace polypres

#endif
