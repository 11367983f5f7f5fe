#include "invlim/trunc.hpp"

#include <algorithm>

namespace invlim {
namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

constexpr long long kBasisCap = 1'000'000;

}  // namespace

// ----------------------------------------------------------- TruncSpec ----

TruncSpec TruncSpec::make(TruncKind kind, const Field& f, int nvars, int level,
                          std::vector<Scalar> basepoint) {
  if (nvars < 1) fail(Errc::IndexOutOfRange, "need at least one variable");
  if (level < 1) fail(Errc::IndexOutOfRange, "truncation level must be >= 1");
  if (basepoint.empty())
    basepoint.assign(static_cast<size_t>(nvars), Scalar::zero(f));
  if (static_cast<int>(basepoint.size()) != nvars)
    fail(Errc::ArityMismatch, "base point length does not match variable count");
  for (const auto& c : basepoint)
    if (c.field() != f)
      fail(Errc::FieldMismatch, "base point coordinate outside the coefficient field");
  auto d = std::make_shared<Data>(Data{kind, f, nvars, level, std::move(basepoint)});
  return TruncSpec(std::move(d));
}

TruncSpec TruncSpec::frobenius(const Field& f, int nvars, int s, std::vector<Scalar> basepoint) {
  if (!f.is_finite() && f.characteristic() == 0)
    fail(Errc::CharacteristicZero, "this truncation kind needs positive characteristic");
  // p^s must stay comfortably inside int64 (membership quotas, nilpotency).
  if (s >= 1 && (s > 62 || ipow(f.characteristic(), s) > (1LL << 31)))
    fail(Errc::UnsupportedField, "p^s too large for this truncation level");
  return make(TruncKind::Frobenius, f, nvars, s, std::move(basepoint));
}

TruncSpec TruncSpec::madic(const Field& f, int nvars, int order, std::vector<Scalar> basepoint) {
  return make(TruncKind::MAdic, f, nvars, order, std::move(basepoint));
}

bool TruncSpec::in_ideal(const Monomial& m) const {
  if (static_cast<int>(m.e.size()) != data_->n)
    fail(Errc::ArityMismatch, "monomial length does not match variable count");
  if (data_->kind == TruncKind::MAdic) return m.degree() >= data_->level;
  long long p = data_->field.characteristic();
  long long quota = 0;
  for (int e : m.e) quota += e / p;
  return quota >= ipow(p, data_->level - 1);
}

BigInt TruncSpec::dimension() const {
  long long n = data_->n;
  if (data_->kind == TruncKind::MAdic) return binomial(data_->level - 1 + n, n);
  long long p = data_->field.characteristic();
  BigInt pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  return pn * binomial(ipow(p, data_->level - 1) - 1 + n, n);
}

long long TruncSpec::nilpotency_index() const {
  if (data_->kind == TruncKind::MAdic) return data_->level;
  long long p = data_->field.characteristic();
  return ipow(p, data_->level) + (data_->n - 1) * (p - 1);
}

std::vector<Monomial> TruncSpec::quotient_basis() const {
  if (dimension() > kBasisCap)
    fail(Errc::DomainTooLarge, "quotient basis exceeds " + std::to_string(kBasisCap) + " monomials");
  bool frob = data_->kind == TruncKind::Frobenius;
  long long p = frob ? data_->field.characteristic() : 0;
  long long threshold = frob ? ipow(p, data_->level - 1) : data_->level;
  int cap = static_cast<int>(frob ? ipow(p, data_->level) - 1 : data_->level - 1);

  std::vector<Monomial> out;
  Monomial cur{std::vector<int>(static_cast<size_t>(data_->n), 0)};
  // Depth-first over exponent vectors, pruning as soon as the quota (or the
  // total degree) already reaches the ideal threshold.
  auto walk = [&](auto&& self, int i, long long used) -> void {
    if (i == data_->n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= cap; ++e) {
      long long next = used + (frob ? e / p : e);
      if (next >= threshold) break;
      cur.e[static_cast<size_t>(i)] = e;
      self(self, i + 1, next);
    }
    cur.e[static_cast<size_t>(i)] = 0;
  };
  walk(walk, 0, 0);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

bool TruncSpec::has_coarsening(const TruncSpec& coarser) const {
  return data_->kind == coarser.data_->kind && data_->field == coarser.data_->field &&
         data_->n == coarser.data_->n && data_->a == coarser.data_->a &&
         coarser.data_->level <= data_->level;
}

bool TruncSpec::operator==(const TruncSpec& o) const {
  return has_coarsening(o) && data_->level == o.data_->level;
}

std::string TruncSpec::str() const {
  std::string out;
  if (data_->kind == TruncKind::Frobenius) {
    out = "frob:" + data_->field.descriptor() + ",s=" + std::to_string(data_->level);
  } else {
    out = "madic:N=" + std::to_string(data_->level);
  }
  out += ",n=" + std::to_string(data_->n) + ",a=";
  for (size_t i = 0; i < data_->a.size(); ++i) {
    if (i) out += ',';
    out += data_->a[i].str();
  }
  return out;
}

// ----------------------------------------------------------- TruncElem ----

TruncElem::TruncElem(TruncSpec spec, const Polynomial& rep_y)
    : spec_(std::move(spec)), rep_(rep_y.field(), rep_y.nvars()) {
  if (rep_y.field() != spec_.field())
    fail(Errc::FieldMismatch, "representative field differs from the ring's");
  if (rep_y.nvars() != spec_.nvars())
    fail(Errc::ArityMismatch, "representative variable count differs from the ring's");
  for (const auto& [m, c] : rep_y.terms())
    if (!spec_.in_ideal(m)) rep_.add_term(m, c);
}

TruncElem TruncElem::zero(const TruncSpec& s) {
  return TruncElem(s, Polynomial::zero(s.field(), s.nvars()));
}

TruncElem TruncElem::one(const TruncSpec& s) { return from_scalar(s, Scalar::one(s.field())); }

TruncElem TruncElem::from_scalar(const TruncSpec& s, const Scalar& c) {
  return TruncElem(s, Polynomial::constant(s.field(), s.nvars(), c));
}

TruncElem TruncElem::generator(const TruncSpec& s, int i) {
  return TruncElem(s, Polynomial::variable(s.field(), s.nvars(), i));
}

namespace {
void require_same_spec(const TruncSpec& a, const TruncSpec& b) {
  if (a != b) fail(Errc::SpecMismatch, a.str() + " vs " + b.str());
}
}  // namespace

TruncElem TruncElem::operator+(const TruncElem& o) const {
  require_same_spec(spec_, o.spec_);
  return TruncElem(spec_, rep_ + o.rep_);
}

TruncElem TruncElem::operator-(const TruncElem& o) const {
  require_same_spec(spec_, o.spec_);
  return TruncElem(spec_, rep_ - o.rep_);
}

TruncElem TruncElem::operator*(const TruncElem& o) const {
  require_same_spec(spec_, o.spec_);
  return TruncElem(spec_, rep_ * o.rep_);
}

TruncElem TruncElem::operator-() const { return TruncElem(spec_, -rep_); }

TruncElem TruncElem::scaled(const Scalar& c) const { return TruncElem(spec_, rep_.scaled(c)); }

TruncElem TruncElem::pow(long long e) const {
  if (e < 0) fail(Errc::IndexOutOfRange, "negative power of a ring element");
  TruncElem acc = one(spec_);
  TruncElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool TruncElem::operator==(const TruncElem& o) const {
  return spec_ == o.spec_ && rep_ == o.rep_;
}

TruncElem TruncElem::inverse() const {
  Scalar c = constant_term();
  if (c.is_zero()) fail(Errc::NotAUnit, "constant term vanishes: " + str());
  Scalar cinv = c.inverse();
  // u = c + m with m nilpotent; geometric series in t = -c^-1 m.
  TruncElem t = (from_scalar(spec_, c) - *this).scaled(cinv);
  TruncElem acc = one(spec_);
  TruncElem power = one(spec_);
  long long nil = spec_.nilpotency_index();
  for (long long k = 1; k < nil; ++k) {
    power = power * t;
    if (power.is_zero()) break;
    acc = acc + power;
  }
  return acc.scaled(cinv);
}

TruncElem project(const TruncElem& u, const TruncSpec& coarser) {
  if (!u.spec().has_coarsening(coarser))
    fail(Errc::IncomparableSpecs, u.spec().str() + " does not project onto " + coarser.str());
  if (u.spec() == coarser) return u;
  return TruncElem(coarser, u.rep());
}

}  // namespace invlim
