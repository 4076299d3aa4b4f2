#pragma once

// Arithmetic in GF(p^n) using a polynomial basis over GF(p).
//
// A field is described by an immutable FieldSpec shared between all of its
// elements. Elements store n residues mod p in ascending degree order. The
// modulus is the lexicographically smallest monic irreducible polynomial of
// degree n, comparing coefficients from the constant term upwards.
//
// Cost warning: make_field checks irreducibility by trial division with every
// monic polynomial of degree <= n/2, i.e. O(p^(n/2)) divisions per candidate.
// That is instant for the fields used by the matrix groups (q <= 81) but gets
// slow for large p with n >= 6.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace noncomm {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  std::uint64_t p = 0;
  unsigned n = 0;
  /// n + 1 coefficients, ascending degree, leading coefficient 1.
  std::vector<std::uint64_t> modulus;
  std::uint64_t q = 0;

  /// "GF(p^n)"
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

bool is_prime(std::uint64_t n);

/// Returns the prime p and exponent n with q = p^n, or {0, 0} when q is not a
/// prime power.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned n = 0;
};
PrimePower prime_power_decompose(std::uint64_t q);

/// Irreducibility over GF(p) of a monic polynomial (ascending coefficients):
/// root test for degree <= 3, then trial division by every monic polynomial of
/// degree <= deg/2.
bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p);

/// Builds GF(p^n), 1 <= n <= 8. Throws FieldError("not prime") or
/// FieldError("degree unsupported").
FieldPtr make_field(std::uint64_t p, unsigned n);

class FieldElem {
 public:
  FieldElem(FieldPtr field, std::vector<std::uint64_t> coeffs);

  static FieldElem zero(const FieldPtr& field);
  static FieldElem one(const FieldPtr& field);
  /// Element whose coefficients are the base-p digits of code (c0 lowest).
  static FieldElem from_code(const FieldPtr& field, std::uint64_t code);

  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::span<const std::uint64_t> coeffs() const { return coeffs_; }
  std::uint64_t code() const;
  bool is_zero() const;
  bool is_one() const;

  /// Prime field elements print as integers, extension elements as
  /// polynomials in x with the highest degree first, e.g. "x^2+2x+1".
  std::string str() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  FieldPtr field_;
  std::vector<std::uint64_t> coeffs_;
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem mul(const FieldElem& a, const FieldElem& b);
/// Extended Euclid on polynomials. Throws FieldError("zero has no inverse").
FieldElem inv(const FieldElem& a);
FieldElem pow(const FieldElem& a, std::uint64_t k);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return sub(a, b); }
inline FieldElem operator-(const FieldElem& a) { return neg(a); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return mul(a, b); }

/// Every element of the field in code order.
std::vector<FieldElem> all_elements(const FieldPtr& field);

/// Lookup tables indexed by element code. Used by the matrix groups where
/// field operations sit in the innermost loops. Requires q <= 1024.
struct FieldTables {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> add;  // q*q
  std::vector<std::uint32_t> mul;  // q*q
  std::vector<std::uint32_t> neg;  // q
  std::vector<std::uint32_t> inv;  // q, inv[0] unused

  static FieldTables build(const FieldPtr& field);

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * q + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * q + b]; }
  std::uint32_t minus(std::uint32_t a, std::uint32_t b) const { return add[a * q + neg[b]]; }
};

}  // namespace noncomm
