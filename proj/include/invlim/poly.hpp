#ifndef INVLIM_POLY_HPP
#define INVLIM_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "invlim/field.hpp"

namespace invlim {

/// Exponent vector of one monomial in n variables.
struct Monomial {
  std::vector<int> e;

  int degree() const {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Term order used everywhere: ascending total degree, and within one degree
/// the lexicographically larger exponent vector comes first. Iterating a
/// term map therefore yields constants, then x1, x2, ..., then x1^2, x1*x2,
/// x2^2, ... which is also the printing order.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
  }
};

/// Sparse multivariate polynomial over a fixed field with variables
/// x1..xn. Only nonzero coefficients are stored; all operations keep the
/// representation canonical.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexLess>;

  Polynomial(Field f, int nvars);  // zero
  static Polynomial zero(const Field& f, int nvars) { return Polynomial(f, nvars); }
  static Polynomial constant(const Field& f, int nvars, const Scalar& c);
  /// x_{i+1} for 0-based i.
  static Polynomial variable(const Field& f, int nvars, int i);
  static Polynomial term(const Field& f, int nvars, const Scalar& c, Monomial m);

  const Field& field() const { return field_; }
  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; 0 for the zero polynomial (no sentinel values).
  int degree() const;
  Scalar coeff(const Monomial& m) const;
  Scalar constant_term() const;
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(long long e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// d/dx_{i+1}. Exponent multiples reduce in the field, so characteristic-p
  /// collapse (d/dx of x^p) happens on its own.
  Polynomial partial(int i) const;

  /// Value at a point, one scalar per variable.
  Scalar eval(const std::vector<Scalar>& point) const;

  /// Simultaneous substitution x_i -> images[i-1]. Images must live over the
  /// same field; their variable count becomes the result's.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Spaced canonical text in ascending term order, e.g. "x1 - x2^2",
  /// "2*x1*x2 + x2^3", "(t+1)*x1 + t*x2", "0". `var` names the variables
  /// ("x" or "y").
  std::string str(const std::string& var = "x") const;

 private:
  Field field_;
  int n_;
  TermMap terms_;
};

/// Coefficient-wise lift along an embedding of fields (same field, or
/// prime -> extension of equal characteristic).
Polynomial embed_into(const Polynomial& f, const Field& target);

enum class ShiftDir { ToY, ToX };

/// Rewrites f in coordinates shifted by the base point a: ToY substitutes
/// x_i = y_i + a_i (so the result reads as a polynomial in y_i = x_i - a_i),
/// ToX undoes it. The two directions are mutually inverse.
Polynomial shift_coords(const Polynomial& f, const std::vector<Scalar>& a, ShiftDir dir);

/// Polynomial self-map of affine n-space: x_i -> images[i-1]. Also read as
/// the substitution endomorphism f -> f(images) of the polynomial ring.
class PolyEndo {
 public:
  PolyEndo(Field f, std::vector<Polynomial> images);
  static PolyEndo identity(const Field& f, int nvars);

  const Field& field() const { return field_; }
  int nvars() const { return n_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(int i) const { return images_.at(static_cast<size_t>(i)); }

  /// Substitution action on a polynomial: f -> f(images).
  Polynomial apply(const Polynomial& f) const { return f.substitute(images_); }

  /// The induced point map: c -> (images[0](c), ..., images[n-1](c)).
  std::vector<Scalar> eval_point(const std::vector<Scalar>& c) const;

  /// Max total degree over the images (0 if every image is zero).
  int degree() const;

  bool operator==(const PolyEndo& o) const;
  bool operator!=(const PolyEndo& o) const { return !(*this == o); }

  /// One-line text "x1 -> ..., x2 -> ...".
  std::string str(const std::string& var = "x") const;

 private:
  Field field_;
  int n_;
  std::vector<Polynomial> images_;
};

/// Pipeline composition: apply `first`, then `second`. Concretely
/// compose(f,g).images[i] = f.images[i] with g substituted in, so on points
/// the composite sends c to f(g(c)) evaluated formula-wise — equivalently
/// apply(compose(f,g), q) = apply(g, apply(f, q)) on ring elements.
PolyEndo compose(const PolyEndo& first, const PolyEndo& second);

/// Jacobian matrix J[i][j] = d(images[i])/dx_{j+1}.
std::vector<std::vector<Polynomial>> jacobian(const PolyEndo& f);

PolyEndo embed_into(const PolyEndo& f, const Field& target);

}  // namespace invlim

#endif
