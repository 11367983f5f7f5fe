#include "invlim/points.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invlim {

namespace {
constexpr long long kDomainCap = 1'000'000;
}

long long domain_size(const Field& k, int nvars) {
  if (!k.is_finite()) fail(Errc::UnsupportedField, "point enumeration needs a finite field");
  long long q = k.order(), size = 1;
  for (int i = 0; i < nvars; ++i) {
    if (size > kDomainCap / q + 1) fail(Errc::DomainTooLarge, "q^n exceeds the enumeration cap");
    size *= q;
  }
  if (size > kDomainCap) fail(Errc::DomainTooLarge, "q^n exceeds the enumeration cap");
  return size;
}

long long point_index(const std::vector<Scalar>& c) {
  long long q = c.front().field().order(), idx = 0;
  for (size_t i = c.size(); i-- > 0;) idx = idx * q + c[i].index();
  return idx;
}

std::vector<Scalar> point_of_index(const Field& k, int nvars, long long idx) {
  long long q = k.order();
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(nvars));
  for (int i = 0; i < nvars; ++i) {
    c.push_back(Scalar::from_index(k, idx % q));
    idx /= q;
  }
  return c;
}

std::vector<Scalar> point_map_eval(const PolyEndo& f, const std::vector<Scalar>& c) {
  if (c.empty() || static_cast<int>(c.size()) != f.nvars())
    fail(Errc::ArityMismatch, "point length does not match the map");
  const Field& k = c.front().field();
  for (const auto& s : c)
    if (s.field() != k) fail(Errc::FieldMismatch, "point coordinates from different fields");
  return embed_into(f, k).eval_point(c);
}

std::vector<long long> point_map_table(const PolyEndo& f, const Field& k, Exec exec) {
  long long size = domain_size(k, f.nvars());
  PolyEndo g = embed_into(f, k);
  std::vector<long long> table(static_cast<size_t>(size), 0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < size; ++i)
      table[static_cast<size_t>(i)] = point_index(g.eval_point(point_of_index(k, g.nvars(), i)));
  } else {
    for (long long i = 0; i < size; ++i)
      table[static_cast<size_t>(i)] = point_index(g.eval_point(point_of_index(k, g.nvars(), i)));
  }
  return table;
}

PointMapReport enumerate_report(const PolyEndo& f, const Field& k,
                                const std::optional<std::vector<Scalar>>& fiber_over,
                                Exec exec) {
  auto table = point_map_table(f, k, exec);
  long long size = static_cast<long long>(table.size());

  std::vector<char> hit(table.size(), 0);
  long long image = 0;
  for (long long v : table) {
    if (!hit[static_cast<size_t>(v)]) {
      hit[static_cast<size_t>(v)] = 1;
      ++image;
    }
  }

  PointMapReport r{k.descriptor(), size,  image, image == size, image == size,
                   {},             std::nullopt, {}};
  for (long long i = 0; i < size; ++i)
    if (table[static_cast<size_t>(i)] == i) r.fixed_points.push_back(point_of_index(k, f.nvars(), i));

  if (fiber_over) {
    std::vector<Scalar> a;
    a.reserve(fiber_over->size());
    for (const auto& s : *fiber_over) a.push_back(embed_into(s, k));
    if (static_cast<int>(a.size()) != f.nvars())
      fail(Errc::ArityMismatch, "fiber point length does not match the map");
    long long target = point_index(a);
    for (long long i = 0; i < size; ++i)
      if (table[static_cast<size_t>(i)] == target) r.fiber.push_back(point_of_index(k, f.nvars(), i));
    r.fiber_over = std::move(a);
  }
  return r;
}

std::vector<std::vector<Scalar>> maximal_ideal_image(const PolyEndo& f,
                                                     const std::vector<Scalar>& a, const Field& k,
                                                     Exec exec) {
  auto report = enumerate_report(f, k, a, exec);
  return report.fiber;
}

}  // namespace invlim
