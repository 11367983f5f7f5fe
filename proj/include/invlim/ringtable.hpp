#ifndef INVLIM_RINGTABLE_HPP
#define INVLIM_RINGTABLE_HPP

#include <vector>

#include "invlim/endo.hpp"
#include "invlim/exec.hpp"

namespace invlim {

/// Bijection between a finite truncated ring and the index range [0, q^dim):
/// an element corresponds to its coefficient digits over the monomial basis,
/// little-endian in graded-lex basis order. Lets the brute-force oracles and
/// kernels address ring elements by integers.
class RingIndexer {
 public:
  explicit RingIndexer(TruncSpec spec);

  const TruncSpec& spec() const { return spec_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  long long size() const { return size_; }

  TruncElem element(long long idx) const;
  long long index(const TruncElem& u) const;

 private:
  TruncSpec spec_;
  std::vector<Monomial> basis_;
  long long q_;
  long long size_;
};

/// Value table of the substitution map u -> f(u) on the whole finite ring:
/// table[i] = index of f(element(i)). Parallel mode is an OpenMP loop over
/// the index range, writing disjoint slots — identical output to Serial.
std::vector<long long> induced_function_table(const TruncEndo& f, Exec exec = Exec::Serial);

/// True when the induced function is a bijection of the ring. This is the
/// brute-force ground truth the automorphism criterion is tested against.
bool induced_bijective(const TruncEndo& f, Exec exec = Exec::Serial);

}  // namespace invlim

#endif
