#ifndef INVLIM_DET_HPP
#define INVLIM_DET_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace invlim {

/// Division-free determinant over any commutative ring (Berkowitz method).
/// Works entry-by-entry with +, * and subtraction from zero only, so it is
/// usable for field scalars, polynomials and truncated ring elements alike.
/// `zero` and `one` supply the ring constants (elements carry their context,
/// so there is no default constructor to lean on).
///
/// The iteration builds the characteristic polynomial coefficients of growing
/// leading principal blocks via Toeplitz products; the determinant is the
/// constant coefficient up to sign.
template <class T>
T berkowitz_det(const std::vector<std::vector<T>>& A, const T& zero, const T& one) {
  const size_t n = A.size();
  std::vector<T> V;
  V.push_back(one);
  V.push_back(zero - A[0][0]);
  for (size_t r = 1; r < n; ++r) {
    // q holds the first column of the Toeplitz factor for the (r+1)-block:
    // 1, -A[r][r], then -(row r) . M^k . (col r) for k = 0..r-1, where M is
    // the leading r x r block.
    std::vector<T> q;
    q.push_back(one);
    q.push_back(zero - A[r][r]);
    std::vector<T> w;
    w.reserve(r);
    for (size_t i = 0; i < r; ++i) w.push_back(A[i][r]);
    for (size_t k = 2; k <= r + 1; ++k) {
      T dot = zero;
      for (size_t i = 0; i < r; ++i) dot = dot + A[r][i] * w[i];
      q.push_back(zero - std::move(dot));
      if (k <= r) {
        std::vector<T> nw;
        nw.reserve(r);
        for (size_t i = 0; i < r; ++i) {
          T acc = zero;
          for (size_t j = 0; j < r; ++j) acc = acc + A[i][j] * w[j];
          nw.push_back(std::move(acc));
        }
        w = std::move(nw);
      }
    }
    std::vector<T> next;
    next.reserve(r + 2);
    for (size_t i = 0; i <= r + 1; ++i) {
      T acc = zero;
      for (size_t j = 0; j < V.size() && j <= i; ++j) {
        size_t k = i - j;
        if (k >= q.size()) continue;
        acc = acc + q[k] * V[j];
      }
      next.push_back(std::move(acc));
    }
    V = std::move(next);
  }
  // V is the characteristic polynomial of A (leading coefficient first), so
  // det(A) = (-1)^n * V[n].
  T det = std::move(V[n]);
  if (n % 2 == 1) det = zero - std::move(det);
  return det;
}

}  // namespace invlim

#endif
