#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "support.hpp"

using namespace invlim;
using testsup::make_rng;
using testsup::random_origin_endo;
using testsup::random_point;
using testsup::random_poly;

namespace {

std::vector<std::vector<Scalar>> all_points(const Field& k, int n) {
  std::vector<std::vector<Scalar>> out;
  for (long long i = 0; i < domain_size(k, n); ++i) out.push_back(point_of_index(k, n, i));
  return out;
}

}  // namespace

TEST_CASE("point evaluation matches hand values") {
  Field f3 = Field::prime(3);
  Polynomial x1 = Polynomial::variable(f3, 2, 0);
  Polynomial x2 = Polynomial::variable(f3, 2, 1);
  PolyEndo f(f3, {x1 + x2.pow(2), x2});
  auto s = [&](long long v) { return Scalar::from_integer(f3, v); };
  CHECK(point_map_eval(f, {s(1), s(1)}) == std::vector<Scalar>{s(2), s(1)});
  CHECK(point_map_eval(f, {s(0), s(2)}) == std::vector<Scalar>{s(1), s(2)});
  CHECK_THROWS_AS(point_map_eval(f, {s(1)}), Error);
}

TEST_CASE("point indexing is a bijection") {
  Field f4 = Field::extension(2, {1, 1, 1});
  int n = 2;
  std::vector<bool> seen(static_cast<size_t>(domain_size(f4, n)), false);
  for (long long i = 0; i < domain_size(f4, n); ++i) {
    auto c = point_of_index(f4, n, i);
    CHECK(point_index(c) == i);
    CHECK(!seen[static_cast<size_t>(i)]);
    seen[static_cast<size_t>(i)] = true;
  }
}

TEST_CASE("value tables of simple maps") {
  Field f5 = Field::prime(5);
  CHECK(point_map_table(PolyEndo::identity(f5, 1), f5) ==
        std::vector<long long>{0, 1, 2, 3, 4});
  Polynomial x = Polynomial::variable(f5, 1, 0);
  PolyEndo shift(f5, {x + Polynomial::constant(f5, 1, Scalar::one(f5))});
  CHECK(point_map_table(shift, f5) == std::vector<long long>{1, 2, 3, 4, 0});
}

TEST_CASE("parallel tables are identical to serial ones") {
  auto rng = make_rng(601);
  Field f5 = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    PolyEndo f = random_origin_endo(rng, f5, 2, 3, 4);
    CHECK(point_map_table(f, f5, Exec::Serial) == point_map_table(f, f5, Exec::Parallel));
  }
  Field f2 = Field::prime(2);
  TruncSpec spec = TruncSpec::frobenius(f2, 2, 2, {});  // 2^12 = 4096 elements
  for (int t = 0; t < 3; ++t) {
    TruncEndo g = testsup::random_trunc_endo(rng, spec, 3, 4);
    CHECK(induced_function_table(g, Exec::Serial) == induced_function_table(g, Exec::Parallel));
  }
}

TEST_CASE("census of the squaring map") {
  // Squaring is bijective on F_2 and on F_4 (it is the frobenius), fixing
  // exactly the prime subfield.
  Field f2 = Field::prime(2);
  Polynomial x = Polynomial::variable(f2, 1, 0);
  PolyEndo sq(f2, {x.pow(2)});

  PointMapReport r2 = enumerate_report(sq, f2);
  CHECK(r2.domain_size == 2);
  CHECK(r2.image_size == 2);
  CHECK(r2.injective);
  CHECK(r2.surjective);
  CHECK(r2.fixed_points.size() == 2);
  CHECK(!r2.fiber_over.has_value());

  Field f4 = Field::extension(2, {1, 1, 1});
  PointMapReport r4 = enumerate_report(sq, f4);
  CHECK(r4.field_descriptor == "p=2;mod=t^2+t+1");
  CHECK(r4.domain_size == 4);
  CHECK(r4.image_size == 4);
  CHECK(r4.injective);
  CHECK(r4.surjective);
  CHECK(r4.fixed_points.size() == 2);  // 0 and 1 only
}

TEST_CASE("census of the additive polynomial x + x^p over F_{p^2}") {
  // x + x^p is the trace onto F_p: p-to-one, image of size p, kernel of
  // size p over the quadratic extension — injectivity genuinely fails.
  struct Case {
    Field ext;
    long long p;
  };
  for (const Case& c : {Case{Field::extension(2, {1, 1, 1}), 2},
                        Case{Field::extension(3, {1, 0, 1}), 3}}) {
    Polynomial x = Polynomial::variable(c.ext, 1, 0);
    PolyEndo f(c.ext, {x + x.pow(c.p)});
    std::vector<Scalar> zero = {Scalar::zero(c.ext)};
    PointMapReport r = enumerate_report(f, c.ext, zero);
    CHECK(r.domain_size == c.p * c.p);
    CHECK(r.image_size == c.p);
    CHECK(!r.injective);
    CHECK(!r.surjective);
    REQUIRE(r.fiber_over.has_value());
    CHECK(static_cast<long long>(r.fiber.size()) == c.p);  // the kernel
    for (const auto& pt : r.fiber) CHECK(point_map_eval(f, pt) == zero);

    // On the prime field itself Fermat collapses the formula to x -> 2x.
    Field fp = Field::prime(c.p);
    Polynomial xp = Polynomial::variable(fp, 1, 0);
    PolyEndo formula(fp, {xp + xp.pow(c.p)});
    PolyEndo doubling(fp, {xp.scaled(Scalar::from_integer(fp, 2))});
    CHECK(point_map_table(formula, fp) == point_map_table(doubling, fp));
  }
}

TEST_CASE("fibers agree with a direct scan and partition the domain") {
  auto rng = make_rng(602);
  for (Field k : {Field::prime(2), Field::prime(3)}) {
    for (int t = 0; t < 30; ++t) {
      PolyEndo f = random_origin_endo(rng, k, 2, 3, 4);
      auto a = random_point(rng, k, 2);
      auto fiber = maximal_ideal_image(f, a, k);

      // Direct check: generator g_i = x_i - a_i of m_a vanishes under the
      // pullback exactly on the fiber points.
      std::vector<std::vector<Scalar>> direct;
      for (const auto& b : all_points(k, 2))
        if (point_map_eval(f, b) == a) direct.push_back(b);
      CHECK(fiber == direct);

      // Fiber sizes over all targets sum to q^n.
      long long total = 0;
      for (const auto& target : all_points(k, 2))
        total += static_cast<long long>(maximal_ideal_image(f, target, k).size());
      CHECK(total == domain_size(k, 2));
    }
  }
}

TEST_CASE("fixed points match a direct scan") {
  auto rng = make_rng(603);
  Field f3 = Field::prime(3);
  for (int t = 0; t < 20; ++t) {
    PolyEndo f = random_origin_endo(rng, f3, 2, 3, 4);
    PointMapReport r = enumerate_report(f, f3);
    std::vector<std::vector<Scalar>> direct;
    for (const auto& b : all_points(f3, 2))
      if (point_map_eval(f, b) == b) direct.push_back(b);
    CHECK(r.fixed_points == direct);
    CHECK(r.injective == r.surjective);  // finite set: injective iff surjective
  }
}

TEST_CASE("maps over a subfield can be enumerated over an extension") {
  Field f2 = Field::prime(2);
  Field f4 = Field::extension(2, {1, 1, 1});
  Polynomial x = Polynomial::variable(f2, 1, 0);
  PolyEndo f(f2, {x + x.pow(2)});
  PointMapReport r = enumerate_report(f, f4);
  CHECK(r.domain_size == 4);
  CHECK(r.image_size == 2);
  // Fiber coordinates land in the extension field.
  auto fiber = maximal_ideal_image(f, {Scalar::zero(f2)}, f4);
  CHECK(fiber.size() == 2);
  for (const auto& pt : fiber) CHECK(pt[0].field() == f4);
}

TEST_CASE("enumeration guards") {
  try {
    domain_size(Field::prime(1009), 2);  // 1009^2 > 10^6
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DomainTooLarge);
  }
  try {
    domain_size(Field::rationals(), 1);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedField);
  }
  CHECK(domain_size(Field::prime(997), 2) == 994009);  // inside the cap
}

TEST_CASE("induced ring tables detect bijectivity correctly") {
  Field f2 = Field::prime(2);
  TruncSpec spec = TruncSpec::frobenius(f2, 1, 2, {});
  Polynomial y = Polynomial::variable(f2, 1, 0);
  RingIndexer ix(spec);
  CHECK(ix.size() == 16);  // 2^4
  for (long long i = 0; i < ix.size(); ++i) CHECK(ix.index(ix.element(i)) == i);

  TruncEndo id = TruncEndo::identity(spec);
  auto table = induced_function_table(id);
  for (long long i = 0; i < ix.size(); ++i) CHECK(table[static_cast<size_t>(i)] == i);
  CHECK(induced_bijective(id));
  CHECK(induced_bijective(TruncEndo(spec, {TruncElem(spec, y + y.pow(2))})));
  CHECK(!induced_bijective(TruncEndo(spec, {TruncElem(spec, y.pow(2))})));
}
