#ifndef POLYPRES_MATGRP_HPP
#define POLYPRES_MATGRP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polypres/actpres.hpp"
#include "polypres/ffield.hpp"
#include "polypres/fpres.hpp"
#include "polypres/perm.hpp"
#include "polypres/polygroup.hpp"

namespace polypres {

using Mat2 = std::array<std::uint32_t, 4>; // row-major 2x2
using Mat3 = std::array<std::uint32_t, 9>; // row-major 3x3

Mat2 mat2_mul(const FiniteField &f, const Mat2 &a, const Mat2 &b);
Mat3 mat3_mul(const FiniteField &f, const Mat3 &a, const Mat3 &b);
std::uint32_t mat2_det(const FiniteField &f, const Mat2 &a);

// Named generator matrices from the GL2/SL3 sections.
Mat2 mat_R(const FiniteField &f, std::uint32_t a); // diag(a, 1)
Mat2 mat_Z(const FiniteField &f, std::uint32_t a); // a I
Mat2 mat_S(const FiniteField &f);                  // [[-1,1],[0,1]]
Mat2 mat_J(const FiniteField &f);                  // [[0,-1],[-1,0]]
Mat2 mat_E12(const FiniteField &f, std::uint32_t a);

Mat3 mat3_Rhat(const FiniteField &f, std::uint32_t a); // diag(a,1,a^-1)
Mat3 mat3_Shat(const FiniteField &f);
Mat3 mat3_Jhat(const FiniteField &f);
Mat3 mat3_T(const FiniteField &f);

// Projective lines/planes with normalized points (leftmost nonzero = 1).
// P1 ordering: field elements in dlog order (0 first, then z^0, z^1, ...),
// infinity last. P2 ordering: [1,y,z] by (y,z) in field order, then [0,1,z],
// then [0,0,1].
struct ProjLine {
  const FiniteField *field;
  unsigned size() const { return field->q() + 1; }
  unsigned infinity_index() const { return field->q(); }
  unsigned index_of(std::uint32_t v) const;  // finite values
  std::uint32_t value_of(unsigned idx) const;
  Perm action(const Mat2 &m) const; // fractional-linear action
};

struct ProjPlane {
  const FiniteField *field;
  std::vector<std::array<std::uint32_t, 3>> points;
  explicit ProjPlane(const FiniteField &f);
  unsigned size() const { return static_cast<unsigned>(points.size()); }
  unsigned index_of(std::array<std::uint32_t, 3> v) const; // normalizes
  Perm action(const Mat3 &m) const;
};

enum class RepFamily { gl2, pgl2, b2_affine, sl3, psl3 };

struct PermRep {
  PermGroup group;
  std::map<std::string, Perm> named; // generator images
  unsigned degree = 0;
  unsigned long long matrix_order = 0; // |matrix group| (kernel included)
};

PermRep perm_rep(RepFamily family, unsigned q);

enum class PresFamily { b2K, gl2q, gl2q_alt, pgl2q, pgl2q_alt, sl3q, psl3q, psl34 };

PresFamily pres_family_from_string(const std::string &s);
unsigned long long pres_family_target_order(PresFamily family, unsigned q);

// Emits the literal relator set of the corresponding corollary. The
// assignment maps the generators onto the natural permutation model: the
// regular representation for b2K/gl2q (the projective action has kernel),
// and the projective models for the rest. For gl2q with q > 3 the
// assignment is empty (enumeration-only verification).
EmittedPresentation emit_family_presentation(PresFamily family, unsigned q);

// Double-coset polygroup of (G_0, G_{0,0'}) inside the projective image of
// SL3(q); isomorphic to P3.
Polygroup sl3_stabilizer_polygroup(unsigned q);

// Splits q into (p, m) with p prime; throws unless q is a prime power.
std::pair<unsigned, unsigned> factor_prime_power(unsigned q);

} // namespace polypres

#endif
