#include "invlim/ringtable.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invlim {

namespace {
constexpr long long kRingCap = 1'000'000;
}

RingIndexer::RingIndexer(TruncSpec spec) : spec_(std::move(spec)), q_(0), size_(1) {
  if (!spec_.field().is_finite())
    fail(Errc::UnsupportedField, "ring enumeration needs a finite coefficient field");
  basis_ = spec_.quotient_basis();
  q_ = spec_.field().order();
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (size_ > kRingCap / q_ + 1) fail(Errc::DomainTooLarge, "q^dim exceeds the enumeration cap");
    size_ *= q_;
  }
  if (size_ > kRingCap) fail(Errc::DomainTooLarge, "q^dim exceeds the enumeration cap");
}

TruncElem RingIndexer::element(long long idx) const {
  if (idx < 0 || idx >= size_) fail(Errc::IndexOutOfRange, "ring element index out of range");
  Polynomial rep(spec_.field(), spec_.nvars());
  for (const auto& m : basis_) {
    long long digit = idx % q_;
    idx /= q_;
    if (digit != 0) rep.add_term(m, Scalar::from_index(spec_.field(), digit));
  }
  return TruncElem(spec_, rep);
}

long long RingIndexer::index(const TruncElem& u) const {
  if (u.spec() != spec_) fail(Errc::SpecMismatch, "element lives in a different ring");
  long long idx = 0;
  for (size_t i = basis_.size(); i-- > 0;) idx = idx * q_ + u.rep().coeff(basis_[i]).index();
  return idx;
}

std::vector<long long> induced_function_table(const TruncEndo& f, Exec exec) {
  RingIndexer ix(f.spec());
  long long size = ix.size();
  std::vector<long long> table(static_cast<size_t>(size), 0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < size; ++i)
      table[static_cast<size_t>(i)] = ix.index(f.apply(ix.element(i)));
  } else {
    for (long long i = 0; i < size; ++i)
      table[static_cast<size_t>(i)] = ix.index(f.apply(ix.element(i)));
  }
  return table;
}

bool induced_bijective(const TruncEndo& f, Exec exec) {
  auto table = induced_function_table(f, exec);
  std::vector<char> hit(table.size(), 0);
  for (long long v : table) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  return true;
}

}  // namespace invlim
