#ifndef INVLIM_TESTS_SUPPORT_HPP
#define INVLIM_TESTS_SUPPORT_HPP

// Shared helpers for the test binaries: deterministic random generators for
// scalars, polynomials and endomorphisms, plus a cofactor-expansion
// determinant used as an independent oracle for the division-free one.

#include <cstdint>
#include <random>
#include <vector>

#include "invlim/endo.hpp"
#include "invlim/limit.hpp"
#include "invlim/parse.hpp"
#include "invlim/points.hpp"
#include "invlim/ringtable.hpp"

namespace testsup {

using namespace invlim;

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline long long pick(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Scalar random_scalar(Rng& rng, const Field& k, bool nonzero = false) {
  for (;;) {
    Scalar s = k.is_finite() ? Scalar::from_index(k, pick(rng, 0, k.order() - 1))
                             : Scalar::from_fraction(k, pick(rng, -4, 4), pick(rng, 1, 4));
    if (!nonzero || !s.is_zero()) return s;
  }
}

inline std::vector<Scalar> random_point(Rng& rng, const Field& k, int n) {
  std::vector<Scalar> c;
  for (int i = 0; i < n; ++i) c.push_back(random_scalar(rng, k));
  return c;
}

inline Monomial random_monomial(Rng& rng, int nvars, int maxdeg) {
  Monomial m;
  m.e.assign(static_cast<size_t>(nvars), 0);
  int deg = static_cast<int>(pick(rng, 0, maxdeg));
  for (int d = 0; d < deg; ++d) m.e[static_cast<size_t>(pick(rng, 0, nvars - 1))] += 1;
  return m;
}

inline Polynomial random_poly(Rng& rng, const Field& k, int nvars, int maxdeg, int terms) {
  Polynomial f = Polynomial::zero(k, nvars);
  for (int t = 0; t < terms; ++t)
    f = f + Polynomial::term(k, nvars, random_scalar(rng, k), random_monomial(rng, nvars, maxdeg));
  return f;
}

// Determinant by recursive cofactor expansion along the first row. Used only
// as an oracle: exponential, but fine for the matrix sizes in tests.
template <class T>
T laplace_det(const std::vector<std::vector<T>>& a, const T& zero) {
  size_t n = a.size();
  if (n == 1) return a[0][0];
  T det = zero;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    T cof = a[0][j] * laplace_det(minor, zero);
    det = (j % 2 == 0) ? det + cof : det - cof;
  }
  return det;
}

// --- random endomorphisms of truncated rings -------------------------------

// Random truncated endo: arbitrary images with zero constant term,
// rep degree <= maxdeg.
inline TruncEndo random_trunc_endo(Rng& rng, const TruncSpec& spec, int maxdeg, int terms) {
  std::vector<TruncElem> images;
  for (int i = 0; i < spec.nvars(); ++i) {
    Polynomial rep = random_poly(rng, spec.field(), spec.nvars(), maxdeg, terms);
    rep = rep - Polynomial::constant(spec.field(), spec.nvars(), rep.constant_term());
    images.push_back(TruncElem(spec, rep));
  }
  return TruncEndo(spec, images);
}

inline std::vector<std::vector<Scalar>> random_invertible_matrix(Rng& rng, const Field& k,
                                                                 int n) {
  for (;;) {
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(n));
    for (auto& row : m)
      for (int j = 0; j < n; ++j) row.push_back(random_scalar(rng, k));
    if (!laplace_det(m, Scalar::zero(k)).is_zero()) return m;
  }
}

// Random truncated automorphism: invertible linear part plus arbitrary
// higher-degree tail (degree 2..maxdeg) on each image.
inline TruncEndo random_trunc_auto(Rng& rng, const TruncSpec& spec, int maxdeg, int terms) {
  const Field& k = spec.field();
  int n = spec.nvars();
  auto lin = random_invertible_matrix(rng, k, n);
  std::vector<TruncElem> images;
  for (int i = 0; i < n; ++i) {
    Polynomial rep = Polynomial::zero(k, n);
    for (int j = 0; j < n; ++j)
      rep = rep + Polynomial::variable(k, n, j).scaled(lin[static_cast<size_t>(i)]
                                                          [static_cast<size_t>(j)]);
    for (int t = 0; t < terms; ++t) {
      Monomial m = random_monomial(rng, n, maxdeg);
      if (m.degree() >= 2) rep = rep + Polynomial::term(k, n, random_scalar(rng, k), m);
    }
    images.push_back(TruncElem(spec, rep));
  }
  return TruncEndo(spec, images);
}

// --- tame polynomial automorphisms and their closed-form inverses ----------

struct TamePair {
  PolyEndo map;
  PolyEndo inverse;
};

// One elementary (triangular) automorphism x_i += f(other variables) with its
// inverse x_i -= f, or an invertible linear map with its matrix inverse.
inline TamePair random_tame_factor(Rng& rng, const Field& k, int n, int maxdeg) {
  if (pick(rng, 0, 2) == 0) {
    auto m = random_invertible_matrix(rng, k, n);
    auto mi = matrix_inverse(m, k);
    std::vector<Polynomial> fw, bw;
    for (int i = 0; i < n; ++i) {
      Polynomial a = Polynomial::zero(k, n), b = Polynomial::zero(k, n);
      for (int j = 0; j < n; ++j) {
        a = a + Polynomial::variable(k, n, j).scaled(m[static_cast<size_t>(i)]
                                                        [static_cast<size_t>(j)]);
        b = b + Polynomial::variable(k, n, j).scaled(mi[static_cast<size_t>(i)]
                                                         [static_cast<size_t>(j)]);
      }
      fw.push_back(a);
      bw.push_back(b);
    }
    return TamePair{PolyEndo(k, fw), PolyEndo(k, bw)};
  }
  int i = static_cast<int>(pick(rng, 0, n - 1));
  Polynomial f = Polynomial::zero(k, n);
  if (n >= 2) {
    // Guarantee a full-degree tail so compositions actually pick up degree.
    int j = static_cast<int>(pick(rng, 0, n - 2));
    if (j >= i) ++j;
    Monomial top;
    top.e.assign(static_cast<size_t>(n), 0);
    top.e[static_cast<size_t>(j)] = maxdeg;
    f = f + Polynomial::term(k, n, random_scalar(rng, k, true), top);
  }
  for (int t = 0; t < 3; ++t) {
    Monomial m = random_monomial(rng, n, maxdeg);
    if (m.e[static_cast<size_t>(i)] == 0 && m.degree() >= 1)
      f = f + Polynomial::term(k, n, random_scalar(rng, k), m);
  }
  std::vector<Polynomial> fw, bw;
  for (int j = 0; j < n; ++j) {
    Polynomial xj = Polynomial::variable(k, n, j);
    fw.push_back(j == i ? xj + f : xj);
    bw.push_back(j == i ? xj - f : xj);
  }
  return TamePair{PolyEndo(k, fw), PolyEndo(k, bw)};
}

// Composition of `factors` tame factors; inverse is the reversed composition
// of the factor inverses.
inline TamePair random_tame_auto(Rng& rng, const Field& k, int n, int factors, int maxdeg) {
  TamePair acc = random_tame_factor(rng, k, n, maxdeg);
  for (int t = 1; t < factors; ++t) {
    TamePair next = random_tame_factor(rng, k, n, maxdeg);
    acc.map = compose(acc.map, next.map);
    acc.inverse = compose(next.inverse, acc.inverse);
  }
  return acc;
}

// Random polynomial self-map fixing the origin (zero constant terms).
inline PolyEndo random_origin_endo(Rng& rng, const Field& k, int n, int maxdeg, int terms) {
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    Polynomial f = random_poly(rng, k, n, maxdeg, terms);
    images.push_back(f - Polynomial::constant(k, n, f.constant_term()));
  }
  return PolyEndo(k, images);
}

}  // namespace testsup

#endif
