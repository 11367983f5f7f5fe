#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "invlim/det.hpp"
#include "support.hpp"

using namespace invlim;
using testsup::laplace_det;
using testsup::make_rng;
using testsup::random_poly;
using testsup::random_trunc_auto;
using testsup::random_trunc_endo;

namespace {

// Every element of the ring with zero constant term (the admissible
// generator images), via the element indexer.
std::vector<TruncElem> admissible_images(const TruncSpec& spec) {
  RingIndexer ix(spec);
  std::vector<TruncElem> out;
  for (long long i = 0; i < ix.size(); ++i) {
    TruncElem e = ix.element(i);
    if (e.rep().constant_term().is_zero()) out.push_back(e);
  }
  return out;
}

int rounds_budget(const TruncSpec& spec) {
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(spec.nilpotency_index())))) + 1;
}

}  // namespace

TEST_CASE("restriction of a polynomial map to a truncated ring") {
  Field f2 = Field::prime(2);
  Polynomial x1 = Polynomial::variable(f2, 2, 0);
  Polynomial x2 = Polynomial::variable(f2, 2, 1);
  PolyEndo sigma(f2, {x1 + x2.pow(2), x2});

  TruncSpec s1 = TruncSpec::frobenius(f2, 2, 1, {});
  TruncEndo r1 = project_endo(sigma, s1);
  CHECK(r1.str() == "y1 -> y1, y2 -> y2");  // y2^2 dies at level 1

  TruncSpec s2 = TruncSpec::frobenius(f2, 2, 2, {});
  TruncEndo r2 = project_endo(sigma, s2);
  CHECK(r2.str() == "y1 -> y1 + y2^2, y2 -> y2");
}

TEST_CASE("maps that move the base point cannot restrict") {
  Field f2 = Field::prime(2);
  Polynomial x1 = Polynomial::variable(f2, 1, 0);
  Polynomial one = Polynomial::constant(f2, 1, Scalar::one(f2));
  PolyEndo shift(f2, {x1 + one});
  try {
    project_endo(shift, TruncSpec::frobenius(f2, 1, 1, {}));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BasePointNotFixed);
  }
  // The same map does fix the base point over F_2 at a = 1? No: 1+1 = 0.
  // But x1^2 fixes both 0 and 1; restrict it at a = 1.
  PolyEndo square(f2, {x1.pow(2)});
  TruncSpec at1 = TruncSpec::frobenius(f2, 1, 2, {Scalar::one(f2)});
  TruncEndo r = project_endo(square, at1);
  // (y+1)^2 - 1 = y^2 + 2y = y^2 in characteristic 2.
  CHECK(r.image(0).rep().str("y") == "y1^2");
}

TEST_CASE("images with nonzero constant term are rejected") {
  Field f2 = Field::prime(2);
  TruncSpec spec = TruncSpec::frobenius(f2, 1, 1, {});
  try {
    TruncEndo(spec, {TruncElem::one(spec)});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConstantTermNonzero);
  }
}

TEST_CASE("substitution action is a ring homomorphism") {
  auto rng = make_rng(401);
  TruncSpec spec = TruncSpec::frobenius(Field::prime(3), 2, 2, {});
  Field k = spec.field();
  for (int t = 0; t < 100; ++t) {
    TruncEndo f = random_trunc_endo(rng, spec, 3, 4);
    TruncElem u(spec, random_poly(rng, k, 2, 4, 4));
    TruncElem v(spec, random_poly(rng, k, 2, 4, 4));
    CHECK(f.apply(u + v) == f.apply(u) + f.apply(v));
    CHECK(f.apply(u * v) == f.apply(u) * f.apply(v));
    CHECK(f.apply(TruncElem::one(spec)) == TruncElem::one(spec));
  }
}

TEST_CASE("composition convention and identity laws") {
  auto rng = make_rng(402);
  TruncSpec spec = TruncSpec::frobenius(Field::prime(2), 2, 2, {});
  TruncEndo id = TruncEndo::identity(spec);
  for (int t = 0; t < 50; ++t) {
    TruncEndo f = random_trunc_endo(rng, spec, 3, 4);
    TruncEndo g = random_trunc_endo(rng, spec, 3, 4);
    TruncElem u(spec, random_poly(rng, spec.field(), 2, 4, 4));
    CHECK(compose(f, g).apply(u) == g.apply(f.apply(u)));
    CHECK(compose(f, id) == f);
    CHECK(compose(id, f) == f);
  }
  for (int t = 0; t < 20; ++t) {
    TruncEndo f = random_trunc_endo(rng, spec, 2, 3);
    TruncEndo g = random_trunc_endo(rng, spec, 2, 3);
    TruncEndo h = random_trunc_endo(rng, spec, 2, 3);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("linear part and truncated jacobian of a concrete map") {
  Field f3 = Field::prime(3);
  TruncSpec spec = TruncSpec::frobenius(f3, 2, 1, {});
  Polynomial y1 = Polynomial::variable(f3, 2, 0);
  Polynomial y2 = Polynomial::variable(f3, 2, 1);
  // y1 -> 2 y1 + y2 + y1 y2, y2 -> y2
  TruncEndo f(spec, {TruncElem(spec, y1.scaled(Scalar::from_integer(f3, 2)) + y2 + y1 * y2),
                     TruncElem(spec, y2)});
  auto lin = linear_part(f);
  CHECK(lin[0][0] == Scalar::from_integer(f3, 2));
  CHECK(lin[0][1] == Scalar::one(f3));
  CHECK(lin[1][0].is_zero());
  CHECK(lin[1][1].is_one());

  auto j = endo_jacobian(f);
  CHECK(j[0][0].rep().str("y") == "2 + y2");
  CHECK(j[0][1].rep().str("y") == "1 + y1");
  CHECK(j[1][0].is_zero());
  CHECK(j[1][1] == TruncElem::one(spec));

  // det J = (2+y2)*1 - (1+y1)*0 = 2 + y2, a unit. Linear det = 2.
  AutomorphismVerdict v = check_automorphism(f);
  CHECK(v.is_automorphism);
  CHECK(v.linear_det == Scalar::from_integer(f3, 2));
  CHECK(v.jacobian_det.rep().str("y") == "2 + y2");
}

TEST_CASE("division-free determinant over the quotient ring matches cofactors") {
  auto rng = make_rng(403);
  TruncSpec spec = TruncSpec::frobenius(Field::prime(3), 2, 1, {});
  TruncElem z = TruncElem::zero(spec), e = TruncElem::one(spec);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::vector<TruncElem>> m(3);
    for (auto& row : m)
      for (int j = 0; j < 3; ++j)
        row.push_back(TruncElem(spec, random_poly(rng, spec.field(), 2, 3, 4)));
    CHECK(berkowitz_det(m, z, e) == laplace_det(m, z));
  }
}

TEST_CASE("automorphism criterion equals brute-force bijectivity, exhaustively") {
  Field f2 = Field::prime(2);
  int total = 0;
  // n=1 s=1: 2 endos; n=1 s=2: 8; n=2 s=1: 64.
  for (TruncSpec spec : {TruncSpec::frobenius(f2, 1, 1, {}), TruncSpec::frobenius(f2, 1, 2, {})}) {
    for (const auto& img : admissible_images(spec)) {
      TruncEndo f(spec, {img});
      CHECK(check_automorphism(f).is_automorphism == induced_bijective(f));
      ++total;
    }
  }
  TruncSpec s21 = TruncSpec::frobenius(f2, 2, 1, {});
  auto imgs = admissible_images(s21);
  for (const auto& i0 : imgs) {
    for (const auto& i1 : imgs) {
      TruncEndo f(s21, {i0, i1});
      CHECK(check_automorphism(f).is_automorphism == induced_bijective(f));
      ++total;
    }
  }
  CHECK(total == 74);
}

TEST_CASE("verdict internals are mutually consistent") {
  auto rng = make_rng(404);
  TruncSpec spec = TruncSpec::frobenius(Field::prime(3), 2, 2, {});
  for (int t = 0; t < 60; ++t) {
    TruncEndo f = random_trunc_endo(rng, spec, 3, 4);
    AutomorphismVerdict v = check_automorphism(f);
    CHECK(v.linear == linear_part(f));
    CHECK(v.linear_det == laplace_det(v.linear, Scalar::zero(spec.field())));
    CHECK(v.jacobian_det == endo_det(f));
    CHECK(v.is_automorphism == !v.linear_det.is_zero());
    CHECK(v.is_automorphism == v.jacobian_det.is_unit());
  }
}

TEST_CASE("constructive inversion: verified two-sided inverses, bounded rounds") {
  auto rng = make_rng(405);
  std::vector<TruncSpec> specs = {
      TruncSpec::frobenius(Field::prime(2), 2, 1, {}),
      TruncSpec::frobenius(Field::prime(2), 1, 2, {}),
      TruncSpec::frobenius(Field::prime(3), 2, 1, {}),
      TruncSpec::frobenius(Field::prime(3), 1, 2, {}),
      TruncSpec::madic(Field::rationals(), 2, 4, {}),
  };
  for (const auto& spec : specs) {
    TruncEndo id = TruncEndo::identity(spec);
    for (int t = 0; t < 20; ++t) {
      TruncEndo f = random_trunc_auto(rng, spec, 3, 3);
      int rounds = -1;
      TruncEndo g = endo_invert(f, &rounds);
      CHECK(compose(f, g) == id);
      CHECK(compose(g, f) == id);
      CHECK(rounds >= 0);
      CHECK(rounds <= rounds_budget(spec));
    }
    int rounds = -1;
    CHECK(endo_invert(id, &rounds) == id);
    CHECK(rounds == 0);
  }
}

TEST_CASE("inverting a non-automorphism reports the hypothesis failure") {
  Field f2 = Field::prime(2);
  TruncSpec spec = TruncSpec::frobenius(f2, 1, 2, {});
  Polynomial y = Polynomial::variable(f2, 1, 0);
  TruncEndo f(spec, {TruncElem(spec, y.pow(2))});
  try {
    endo_invert(f);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAnAutomorphism);
    CHECK(is_hypothesis_failure(e.code()));
  }
}

TEST_CASE("automorphisms form a group") {
  auto rng = make_rng(406);
  TruncSpec spec = TruncSpec::frobenius(Field::prime(2), 2, 2, {});
  for (int t = 0; t < 50; ++t) {
    TruncEndo f = random_trunc_auto(rng, spec, 3, 3);
    TruncEndo g = random_trunc_auto(rng, spec, 3, 3);
    CHECK(check_automorphism(compose(f, g)).is_automorphism);
    CHECK(check_automorphism(endo_invert(f)).is_automorphism);
  }
}
