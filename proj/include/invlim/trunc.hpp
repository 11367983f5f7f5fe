#ifndef INVLIM_TRUNC_HPP
#define INVLIM_TRUNC_HPP

#include <memory>
#include <string>
#include <vector>

#include "invlim/bigint.hpp"
#include "invlim/poly.hpp"

namespace invlim {

enum class TruncKind { Frobenius, MAdic };

/// Description of one truncated quotient ring at a base point a:
///   Frobenius kind (char p): k[x]/<(x_i - a_i)^p>^(p^(s-1)) at level s,
///   MAdic kind (any field):  k[x]/m_a^N at order N.
/// Elements are stored in the shifted coordinates y_i = x_i - a_i, so both
/// ideals become monomial ideals and membership is a quota test on exponents.
class TruncSpec {
 public:
  static TruncSpec frobenius(const Field& f, int nvars, int s, std::vector<Scalar> basepoint);
  static TruncSpec madic(const Field& f, int nvars, int order, std::vector<Scalar> basepoint);

  TruncKind kind() const { return data_->kind; }
  const Field& field() const { return data_->field; }
  int nvars() const { return data_->n; }
  /// The truncation parameter: s for Frobenius, N for MAdic.
  int level() const { return data_->level; }
  const std::vector<Scalar>& basepoint() const { return data_->a; }

  /// Membership of the monomial y^e in the truncation ideal:
  /// Frobenius: sum_i floor(e_i/p) >= p^(s-1); MAdic: sum_i e_i >= N.
  bool in_ideal(const Monomial& m) const;

  /// k-dimension of the quotient, by closed form (cross-checked against
  /// enumeration in the tests): p^n * C(p^(s-1)-1+n, n), resp. C(N-1+n, n).
  BigInt dimension() const;

  /// Least N with mbar^N = 0: p^s + (n-1)(p-1) for Frobenius, N for MAdic.
  long long nilpotency_index() const;

  /// All monomials outside the ideal, in graded-lex order. Guarded: the
  /// basis must fit in 10^6 entries.
  std::vector<Monomial> quotient_basis() const;

  /// True when `coarser` names a quotient of this ring: same kind, field,
  /// variable count and base point, with a lower-or-equal level.
  bool has_coarsening(const TruncSpec& coarser) const;

  bool operator==(const TruncSpec& o) const;
  bool operator!=(const TruncSpec& o) const { return !(*this == o); }

  /// Descriptor text: "frob:p=2,s=2,n=1,a=0" / "madic:N=4,n=2,a=0,0".
  std::string str() const;

 private:
  struct Data {
    TruncKind kind;
    Field field;
    int n;
    int level;
    std::vector<Scalar> a;
  };
  explicit TruncSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static TruncSpec make(TruncKind kind, const Field& f, int nvars, int level,
                        std::vector<Scalar> basepoint);
  std::shared_ptr<const Data> data_;
};

/// Residue class in a truncated ring, held by its unique normal form: the
/// representative polynomial in y with every ideal monomial deleted.
class TruncElem {
 public:
  /// Normal-forms rep_y (a polynomial read in the y coordinates) on entry.
  TruncElem(TruncSpec spec, const Polynomial& rep_y);
  static TruncElem zero(const TruncSpec& s);
  static TruncElem one(const TruncSpec& s);
  static TruncElem from_scalar(const TruncSpec& s, const Scalar& c);
  /// Class of the shifted generator y_{i+1}.
  static TruncElem generator(const TruncSpec& s, int i);

  const TruncSpec& spec() const { return spec_; }
  const Polynomial& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  Scalar constant_term() const { return rep_.constant_term(); }

  TruncElem operator+(const TruncElem& o) const;
  TruncElem operator-(const TruncElem& o) const;
  TruncElem operator*(const TruncElem& o) const;
  TruncElem operator-() const;
  TruncElem scaled(const Scalar& c) const;
  TruncElem pow(long long e) const;
  bool operator==(const TruncElem& o) const;
  bool operator!=(const TruncElem& o) const { return !(*this == o); }

  /// Units are exactly the classes with nonzero constant term (the rest of
  /// the element is nilpotent).
  bool is_unit() const { return !constant_term().is_zero(); }

  /// Exact inverse of a unit u = c + m: c^-1 * sum_{k<N} (-c^-1 m)^k with N
  /// the nilpotency index, so u * inverse(u) = 1 on the nose.
  TruncElem inverse() const;

  /// Text of the normal form in the y variables.
  std::string str() const { return rep_.str("y"); }

 private:
  TruncSpec spec_;
  Polynomial rep_;
};

/// Connecting projection onto a coarser truncation of the same tower:
/// re-normal-forms the representative. Identity on the element's own spec.
TruncElem project(const TruncElem& u, const TruncSpec& coarser);

}  // namespace invlim

#endif
