#include "invlim/limit.hpp"

#include "invlim/det.hpp"
#include "invlim/points.hpp"

namespace invlim {

TruncEndo project_endo(const PolyEndo& f, const TruncSpec& spec) {
  if (f.field() != spec.field())
    fail(Errc::FieldMismatch, "map and ring have different coefficient fields");
  if (f.nvars() != spec.nvars())
    fail(Errc::ArityMismatch, "map and ring have different variable counts");
  const auto& a = spec.basepoint();
  for (int i = 0; i < f.nvars(); ++i)
    if (f.image(i).eval(a) != a[static_cast<size_t>(i)])
      fail(Errc::BasePointNotFixed,
           "the point map does not fix the base point (coordinate " + std::to_string(i + 1) + ")");
  std::vector<TruncElem> images;
  images.reserve(static_cast<size_t>(f.nvars()));
  for (int i = 0; i < f.nvars(); ++i) {
    Polynomial shifted = shift_coords(f.image(i), a, ShiftDir::ToY) -
                         Polynomial::constant(f.field(), f.nvars(), a[static_cast<size_t>(i)]);
    images.emplace_back(spec, shifted);
  }
  return TruncEndo(spec, std::move(images));
}

JacobianCheck jacobian_constant_check(const PolyEndo& f) {
  Polynomial det = berkowitz_det(jacobian(f), Polynomial::zero(f.field(), f.nvars()),
                                 Polynomial::constant(f.field(), f.nvars(), Scalar::one(f.field())));
  bool ok = det.is_constant() && !det.is_zero();
  return JacobianCheck{ok, std::move(det)};
}

namespace {

TruncSpec level_spec(TruncKind kind, const Field& k, int nvars, int level,
                     const std::vector<Scalar>& a) {
  return kind == TruncKind::Frobenius ? TruncSpec::frobenius(k, nvars, level, a)
                                      : TruncSpec::madic(k, nvars, level, a);
}

}  // namespace

CoherentFamily build_family(const PolyEndo& f, const std::vector<Scalar>& basepoint, int S,
                            TruncKind kind) {
  if (S < 1) fail(Errc::IndexOutOfRange, "need at least one level");
  std::vector<Scalar> a = basepoint;
  if (a.empty()) a.assign(static_cast<size_t>(f.nvars()), Scalar::zero(f.field()));
  CoherentFamily fam{f, a, {}, {}};
  for (int s = 1; s <= S; ++s) {
    fam.specs.push_back(level_spec(kind, f.field(), f.nvars(), s, a));
    fam.levels.push_back(project_endo(f, fam.specs.back()));
  }
  if (!check_coherence(fam))
    fail(Errc::IncoherentFamily, "freshly built family fails its own coherence check");
  return fam;
}

bool check_coherence(const CoherentFamily& fam) {
  if (fam.specs.size() != fam.levels.size() || fam.specs.empty()) return false;
  for (size_t i = 0; i < fam.specs.size(); ++i) {
    if (fam.levels[i].spec() != fam.specs[i]) return false;
    // Each level must be the direct restriction of the base map.
    if (fam.levels[i] != project_endo(fam.base, fam.specs[i])) return false;
  }
  // Connecting projections must carry finer levels onto coarser ones.
  for (size_t t = 0; t < fam.specs.size(); ++t) {
    for (size_t s = 0; s < t; ++s) {
      for (int i = 0; i < fam.base.nvars(); ++i)
        if (project(fam.levels[t].image(i), fam.specs[s]) != fam.levels[s].image(i)) return false;
    }
  }
  return true;
}

Normalized translate_normalize(const PolyEndo& f, const std::vector<Scalar>& a) {
  if (static_cast<int>(a.size()) != f.nvars())
    fail(Errc::ArityMismatch, "base point length does not match the map");
  for (const auto& s : a)
    if (s.field() != f.field()) fail(Errc::FieldMismatch, "base point outside the map's field");

  std::vector<Scalar> c;
  if (f.eval_point(a) == a) {
    c = a;
  } else if (f.field().is_finite()) {
    auto fiber = maximal_ideal_image(f, a, f.field());
    if (fiber.empty())
      fail(Errc::NoRationalImagePoint,
           "no point of this field maps onto the base point");
    c = fiber.front();  // canonical choice: least enumeration index
  } else {
    fail(Errc::NoRationalImagePoint,
         "over the rationals only c = a is tried, and the map moves a");
  }

  std::vector<Polynomial> images;
  images.reserve(static_cast<size_t>(f.nvars()));
  for (int i = 0; i < f.nvars(); ++i)
    images.push_back(shift_coords(f.image(i), c, ShiftDir::ToY) -
                     Polynomial::constant(f.field(), f.nvars(), a[static_cast<size_t>(i)]));
  return Normalized{PolyEndo(f.field(), std::move(images)), std::move(c)};
}

long long default_degree_bound(const PolyEndo& f) {
  long long deg = std::max(1, f.degree());
  long long bound = 1;
  for (int i = 0; i < f.nvars(); ++i) {
    bound *= deg;
    if (bound > 1'000'000'000'000LL) return 1'000'000'000'000LL;
  }
  return bound;
}

InversionOutcome lift_invert(const PolyEndo& f, const std::vector<Scalar>& basepoint,
                             int max_level, long long degree_bound) {
  std::vector<Scalar> a = basepoint;
  if (a.empty()) a.assign(static_cast<size_t>(f.nvars()), Scalar::zero(f.field()));

  JacobianCheck jc = jacobian_constant_check(f);
  if (!jc.is_constant_unit)
    fail(Errc::JacobianNotConstantUnit, "det J = " + jc.value.str() + " is not a nonzero constant");
  if (f.eval_point(a) != a)
    fail(Errc::BasePointNotFixed, "the map moves the base point; normalize first");
  if (max_level < 1 || max_level > 30) fail(Errc::IndexOutOfRange, "level cap out of range");

  bool char_p = f.field().characteristic() > 0;
  PolyEndo id = PolyEndo::identity(f.field(), f.nvars());
  std::vector<int> degrees;
  std::optional<PolyEndo> prev;

  for (int s = 1; s <= max_level; ++s) {
    TruncSpec spec = char_p ? TruncSpec::frobenius(f.field(), f.nvars(), s, a)
                            : TruncSpec::madic(f.field(), f.nvars(), 1 << s, a);
    // Warm-start from the coarser level: the previous candidate is already
    // correct below the old truncation order, so the corrections only have
    // to deal with the newly visible part.
    std::optional<TruncEndo> warm;
    if (prev) warm = project_endo(*prev, spec);
    TruncEndo tau = endo_invert(project_endo(f, spec), nullptr, warm ? &*warm : nullptr);

    // Read the truncated inverse as a polynomial map in the x coordinates.
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i)
      images.push_back(shift_coords(tau.image(i).rep(), a, ShiftDir::ToX) +
                       Polynomial::constant(f.field(), f.nvars(), a[static_cast<size_t>(i)]));
    PolyEndo cand(f.field(), std::move(images));
    degrees.push_back(cand.degree());

    if (prev && cand == *prev) {
      // Two consecutive levels agree; only an exact round trip makes that a
      // result.
      if (compose(f, cand) == id && compose(cand, f) == id)
        return Stabilized{cand, s - 1};
    }
    if (cand.degree() > degree_bound) return NotStabilized{s, std::move(cand), std::move(degrees)};
    prev = std::move(cand);
  }
  return NotStabilized{max_level, std::move(*prev), std::move(degrees)};
}

}  // namespace invlim
