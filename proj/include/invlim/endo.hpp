#ifndef INVLIM_ENDO_HPP
#define INVLIM_ENDO_HPP

#include <string>
#include <vector>

#include "invlim/trunc.hpp"

namespace invlim {

/// Ring endomorphism of one truncated ring, given by the images of the
/// shifted generators y_i. Every image must have zero constant term: that is
/// both what makes substitution well defined on the quotient and the
/// maximal-ideal-preservation half of the automorphism criterion, and it is
/// forced for any ring endomorphism of the quotient anyway.
class TruncEndo {
 public:
  TruncEndo(TruncSpec spec, std::vector<TruncElem> images);
  static TruncEndo identity(const TruncSpec& s);

  const TruncSpec& spec() const { return spec_; }
  int nvars() const { return spec_.nvars(); }
  const std::vector<TruncElem>& images() const { return images_; }
  const TruncElem& image(int i) const { return images_.at(static_cast<size_t>(i)); }

  /// Substitution action u(y) -> u(images), normal-formed.
  TruncElem apply(const TruncElem& u) const;

  bool operator==(const TruncEndo& o) const;
  bool operator!=(const TruncEndo& o) const { return !(*this == o); }

  /// One-line text "y1 -> ..., y2 -> ...".
  std::string str() const;

 private:
  TruncSpec spec_;
  std::vector<TruncElem> images_;
};

/// Pipeline composition, same convention as for polynomial self-maps:
/// compose(f,g).image(i) = f.image(i) with g's images substituted, so
/// apply(compose(f,g), u) = apply(g, apply(f, u)).
TruncEndo compose(const TruncEndo& first, const TruncEndo& second);

/// J[i][j] = d(image of y_i)/dy_{j+1} of the canonical representatives,
/// normal-formed back into the ring.
std::vector<std::vector<TruncElem>> endo_jacobian(const TruncEndo& f);

/// Determinant of the Jacobian, computed division-free inside the ring.
TruncElem endo_det(const TruncEndo& f);

/// The degree-1 coefficient matrix c[i][j] = coefficient of y_{j+1} in the
/// image of y_i.
std::vector<std::vector<Scalar>> linear_part(const TruncEndo& f);

/// Both halves of the automorphism criterion. The two tests are congruent
/// modulo the nilpotent maximal ideal, so they always agree; the check
/// computes both anyway and cross-validates.
struct AutomorphismVerdict {
  bool is_automorphism;
  std::vector<std::vector<Scalar>> linear;
  Scalar linear_det;
  TruncElem jacobian_det;
};

AutomorphismVerdict check_automorphism(const TruncEndo& f);

/// Gauss-Jordan inverse of a square matrix over the coefficient field.
/// Requires a nonzero determinant (std::logic_error otherwise).
std::vector<std::vector<Scalar>> matrix_inverse(std::vector<std::vector<Scalar>> m,
                                                const Field& k);

/// Exact two-sided inverse of an automorphism by successive corrections:
/// start from the inverse of the linear part, then repeatedly cancel the
/// lowest-order error of compose(f, candidate). Each round at least doubles
/// the error order (minus one), so nilpotency terminates the loop within
/// ceil(log2(nilpotency index)) + 1 rounds; `rounds`, when given, receives
/// the count actually used.
///
/// `seed`, when given, replaces the linear start — useful when a good
/// candidate is already known (e.g. the inverse from a coarser truncation).
/// A seed whose linear part is not the required inverse is ignored, so the
/// termination argument is unaffected.
TruncEndo endo_invert(const TruncEndo& f, int* rounds = nullptr,
                      const TruncEndo* seed = nullptr);

}  // namespace invlim

#endif
