#ifndef INVLIM_LIMIT_HPP
#define INVLIM_LIMIT_HPP

#include <variant>
#include <vector>

#include "invlim/endo.hpp"

namespace invlim {

/// Restriction of a polynomial self-map to one truncated ring at the spec's
/// base point a: the shifted generator y_i is sent to the class of
/// f(x_i) - a_i rewritten in y. Requires the point map to fix a (otherwise
/// the images would pick up constant terms and the quotient map would not
/// exist).
TruncEndo project_endo(const PolyEndo& f, const TruncSpec& spec);

/// det J(f) together with the hypothesis check "is a nonzero constant".
struct JacobianCheck {
  bool is_constant_unit;
  Polynomial value;
};
JacobianCheck jacobian_constant_check(const PolyEndo& f);

/// A finite prefix of the inverse system: the restrictions of one base map
/// to levels 1..S of a single truncation tower. Plain data so tests can
/// corrupt a level and watch check_coherence notice.
struct CoherentFamily {
  PolyEndo base;
  std::vector<Scalar> basepoint;
  std::vector<TruncSpec> specs;    // level parameter 1..S, one kind
  std::vector<TruncEndo> levels;   // levels[i] acts on specs[i]
};

/// Builds the family at levels 1..S and verifies connecting-map
/// compatibility; a failed verification here means broken arithmetic, and
/// raises IncoherentFamily.
CoherentFamily build_family(const PolyEndo& f, const std::vector<Scalar>& basepoint, int S,
                            TruncKind kind);

/// Independent re-check: every coarser level is the image of every finer one
/// under the connecting projection, and each level matches the direct
/// restriction of the base map.
bool check_coherence(const CoherentFamily& fam);

/// Conjugates f by translations so the result fixes the origin: picks an
/// image point c with f(c) = a (over a finite field by exhaustive search; over
/// the rationals only c = a is tried) and returns psi(x) = f(x + c) - a with
/// that c. f factors back as T_a-free composition: f = translate(c) after psi
/// after translate(-a) on points.
struct Normalized {
  PolyEndo psi;
  std::vector<Scalar> c;
};
Normalized translate_normalize(const PolyEndo& f, const std::vector<Scalar>& a);

/// Outcome of inverse-limit lifting. Stabilized carries an exactly verified
/// two-sided polynomial inverse and the first level of the repeating pair of
/// candidates. NotStabilized is a report (never a non-automorphy proof): the
/// deepest level reached, the candidate found there, and the degree of the
/// candidate at every level tried.
struct Stabilized {
  PolyEndo inverse;
  int level;
};
struct NotStabilized {
  int max_level;
  PolyEndo last_candidate;
  std::vector<int> candidate_degrees;
};
using InversionOutcome = std::variant<Stabilized, NotStabilized>;

/// deg(f)^n, the default cutoff for candidate degrees (with deg(f) read as
/// at least 1).
long long default_degree_bound(const PolyEndo& f);

/// Inverse-limit lifting: walk the truncation ladder (level s in positive
/// characteristic, m-adic order 2^s over the rationals), invert each
/// restriction, and read the inverse's images as a polynomial candidate. When
/// two consecutive candidates coincide, attempt the exact round trip in the
/// polynomial ring; only a verified identity yields Stabilized. Stops at
/// max_level or when a candidate's degree exceeds degree_bound.
///
/// Preconditions checked here: det J(f) is a nonzero constant
/// (JacobianNotConstantUnit) and f fixes the base point (BasePointNotFixed);
/// callers wanting a moving base point normalize first (translate_normalize).
InversionOutcome lift_invert(const PolyEndo& f, const std::vector<Scalar>& basepoint,
                             int max_level, long long degree_bound);

}  // namespace invlim

#endif
