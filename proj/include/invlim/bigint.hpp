#ifndef INVLIM_BIGINT_HPP
#define INVLIM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace invlim {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// reduced with a positive denominator by the backend.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace invlim

#endif
