#ifndef INVLIM_FIELD_HPP
#define INVLIM_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "invlim/bigint.hpp"
#include "invlim/error.hpp"

namespace invlim {

enum class FieldKind { Prime, Extension, Rational };

/// Coefficient field descriptor: F_p, F_{p^d} = F_p[t]/(m(t)) with d <= 4,
/// or the rationals. Immutable; cheap to copy (shared payload).
class Field {
 public:
  /// F_p. Primality is checked by trial division; p must fit in 31 bits so
  /// products of residues stay inside int64.
  static Field prime(long long p);

  /// F_p[t]/(m(t)) for a monic irreducible m of degree 2..4, given by its
  /// coefficient list c[0..d] in ascending powers of t. Irreducibility is
  /// checked by exhaustive search over monic factors of degree <= d/2.
  static Field extension(long long p, std::vector<long long> modulus);

  static Field rationals();

  FieldKind kind() const { return data_->kind; }
  /// Characteristic: p for finite kinds, 0 for the rationals.
  long long characteristic() const { return data_->kind == FieldKind::Rational ? 0 : data_->p; }
  bool is_finite() const { return data_->kind != FieldKind::Rational; }
  /// Extension degree d (1 for prime fields).
  int degree() const;
  /// Number of elements q = p^d. Finite fields only.
  long long order() const;
  /// Modulus coefficients c[0..d], ascending. Extension fields only.
  const std::vector<long long>& modulus() const;

  /// Canonical descriptor text: "p=7", "p=2;mod=t^2+t+1", "rational".
  std::string descriptor() const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Data {
    FieldKind kind;
    long long p;
    std::vector<long long> modulus;
  };
  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// One exact field element in canonical form: residue in [0,p) for prime
/// fields, coefficient list (each in [0,p)) for extensions, reduced fraction
/// for rationals. Equality is representational equality.
class Scalar {
 public:
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  /// Image of an integer under the canonical map Z -> field.
  static Scalar from_integer(const Field& f, const BigInt& v);
  /// num/den reduced inside the field; fails if den maps to zero.
  static Scalar from_fraction(const Field& f, const BigInt& num, const BigInt& den);
  /// Extension element from ascending t-coefficients (any length; reduced).
  static Scalar from_coeffs(const Field& f, std::vector<long long> coeffs);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Rationals only: value < 0 (finite-field residues are canonical, never
  /// negative). Used by printers to pull the sign out of a coefficient.
  bool is_negative() const;
  /// The element with the sign stripped (rationals); identity otherwise.
  Scalar magnitude() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar div(const Scalar& o) const;
  Scalar pow(long long e) const;

  /// a -> a^p. Positive characteristic only.
  Scalar frobenius() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical index in [0, q) for finite fields: the residue itself, or
  /// sum c_i p^i for extension elements. Defines the enumeration order.
  long long index() const;
  static Scalar from_index(const Field& f, long long idx);

  /// Compact canonical text: "2", "3/2", "-1/3", "t^2+t+1".
  std::string str() const;

 private:
  explicit Scalar(Field f) : field_(std::move(f)) {}
  void canonicalize();

  Field field_;
  long long r_ = 0;               // prime residue
  std::vector<long long> ext_;    // extension coefficients, size d
  BigRat rat_;                    // rational value
};

/// Reinterprets s in `target`: identity on the same field, constant embedding
/// F_p -> F_{p^d}. Anything else is a field mismatch.
Scalar embed_into(const Scalar& s, const Field& target);

}  // namespace invlim

#endif
