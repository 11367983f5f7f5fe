#include "invlim/field.hpp"

#include <climits>
#include <utility>

namespace invlim {
namespace {

long long imod(long long a, long long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long inv_mod(long long a, long long p) {
  a = imod(a, p);
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero residue");
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return imod(t, p);
}

// --- F_p[t] on ascending coefficient vectors, residues kept in [0,p). ---

void strip(std::vector<long long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<long long> pmul(const std::vector<long long>& a, const std::vector<long long>& b,
                            long long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

std::vector<long long> psub(std::vector<long long> a, const std::vector<long long>& b,
                            long long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = imod(a[i] - b[i], p);
  strip(a);
  return a;
}

std::pair<std::vector<long long>, std::vector<long long>> pdivmod(std::vector<long long> a,
                                                                  std::vector<long long> b,
                                                                  long long p) {
  strip(a);
  strip(b);
  std::vector<long long> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  long long li = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    long long c = a.back() * li % p;
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t j = 0; j < b.size(); ++j) a[off + j] = imod(a[off + j] - c * b[j], p);
    strip(a);
  }
  return {std::move(q), std::move(a)};
}

std::vector<long long> pmod(std::vector<long long> a, std::vector<long long> b, long long p) {
  return pdivmod(std::move(a), std::move(b), p).second;
}

// Bezout coefficient u with u*a == 1 (mod m); m irreducible, a nonzero mod m.
std::vector<long long> pinv(const std::vector<long long>& a, const std::vector<long long>& m,
                            long long p) {
  std::vector<long long> r0 = m, r1 = pmod(a, m, p);
  if (r1.empty()) fail(Errc::DivisionByZero, "inverse of zero field element");
  std::vector<long long> t0, t1 = {1};
  while (!r1.empty()) {
    auto [q, rem] = pdivmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    auto t2 = psub(std::move(t0), pmul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // gcd sits in r0; with m irreducible it is a nonzero constant.
  long long scale = inv_mod(r0.at(0), p);
  for (auto& c : t0) c = c * scale % p;
  return pmod(std::move(t0), m, p);
}

bool has_monic_factor(const std::vector<long long>& m, long long p) {
  int d = static_cast<int>(m.size()) - 1;
  for (int k = 1; k <= d / 2; ++k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<long long> g(static_cast<size_t>(k) + 1, 0);
      g[static_cast<size_t>(k)] = 1;
      long long rest = idx;
      for (int i = 0; i < k; ++i) {
        g[static_cast<size_t>(i)] = rest % p;
        rest /= p;
      }
      if (pmod(m, g, p).empty()) return true;
    }
  }
  return false;
}

// Compact text in descending powers of t: "t^2+t+1", "2t+1", "0".
std::string tpoly_text(const std::vector<long long>& c) {
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    long long v = c[static_cast<size_t>(i)];
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(v);
      continue;
    }
    if (v != 1) out += std::to_string(v);
    out += 't';
    if (i >= 2) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// --------------------------------------------------------------- Field ----

Field Field::prime(long long p) {
  if (p > (1LL << 31)) fail(Errc::UnsupportedField, "characteristic too large (need p < 2^31)");
  if (!is_prime(p)) fail(Errc::NonPrimeModulus, "p=" + std::to_string(p) + " is not prime");
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::Prime;
  d->p = p;
  return Field(std::move(d));
}

Field Field::extension(long long p, std::vector<long long> modulus) {
  if (p > (1LL << 31)) fail(Errc::UnsupportedField, "characteristic too large (need p < 2^31)");
  if (!is_prime(p)) fail(Errc::NonPrimeModulus, "p=" + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c = imod(c, p);
  strip(modulus);
  int deg = static_cast<int>(modulus.size()) - 1;
  if (deg < 2 || deg > 4 || modulus.back() != 1)
    fail(Errc::UnsupportedField, "modulus must be monic in t of degree 2..4");
  // Cost of the exhaustive factor search: sum of p^k over k <= deg/2.
  long long budget = 0, pk = 1;
  for (int k = 1; k <= deg / 2; ++k) {
    pk *= p;
    budget += pk;
    if (budget > 2'000'000)
      fail(Errc::UnsupportedField, "irreducibility check too large for this p and degree");
  }
  if (has_monic_factor(modulus, p))
    fail(Errc::ReducibleModulus, tpoly_text(modulus) + " is reducible over F_" + std::to_string(p));
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::Extension;
  d->p = p;
  d->modulus = std::move(modulus);
  return Field(std::move(d));
}

Field Field::rationals() {
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::Rational;
  d->p = 0;
  return Field(std::move(d));
}

int Field::degree() const {
  if (data_->kind == FieldKind::Extension) return static_cast<int>(data_->modulus.size()) - 1;
  return 1;
}

long long Field::order() const {
  if (!is_finite()) fail(Errc::UnsupportedField, "the rationals are not a finite field");
  long long q = 1;
  for (int i = 0; i < degree(); ++i) {
    if (q > LLONG_MAX / data_->p) fail(Errc::UnsupportedField, "field order overflows");
    q *= data_->p;
  }
  return q;
}

const std::vector<long long>& Field::modulus() const {
  if (data_->kind != FieldKind::Extension)
    fail(Errc::UnsupportedField, "only extension fields carry a modulus");
  return data_->modulus;
}

std::string Field::descriptor() const {
  switch (data_->kind) {
    case FieldKind::Prime:
      return "p=" + std::to_string(data_->p);
    case FieldKind::Extension:
      return "p=" + std::to_string(data_->p) + ";mod=" + tpoly_text(data_->modulus);
    case FieldKind::Rational:
      return "rational";
  }
  return {};
}

bool Field::operator==(const Field& o) const {
  if (data_ == o.data_) return true;
  return data_->kind == o.data_->kind && data_->p == o.data_->p &&
         data_->modulus == o.data_->modulus;
}

// -------------------------------------------------------------- Scalar ----

void Scalar::canonicalize() {
  switch (field_.kind()) {
    case FieldKind::Prime:
      r_ = imod(r_, field_.characteristic());
      break;
    case FieldKind::Extension: {
      long long p = field_.characteristic();
      for (auto& c : ext_) c = imod(c, p);
      strip(ext_);
      if (static_cast<int>(ext_.size()) > field_.degree()) ext_ = pmod(ext_, field_.modulus(), p);
      ext_.resize(static_cast<size_t>(field_.degree()), 0);
      break;
    }
    case FieldKind::Rational:
      break;  // cpp_rational keeps itself reduced
  }
}

Scalar Scalar::zero(const Field& f) {
  Scalar s(f);
  s.canonicalize();
  return s;
}

Scalar Scalar::one(const Field& f) { return from_integer(f, 1); }

Scalar Scalar::from_integer(const Field& f, const BigInt& v) {
  Scalar s(f);
  if (f.is_finite()) {
    BigInt m = v % f.characteristic();
    long long r = imod(m.convert_to<long long>(), f.characteristic());
    if (f.kind() == FieldKind::Prime)
      s.r_ = r;
    else
      s.ext_ = {r};
  } else {
    s.rat_ = BigRat(v);
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::from_fraction(const Field& f, const BigInt& num, const BigInt& den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  if (!f.is_finite()) {
    Scalar s(f);
    // The backend insists on a positive denominator; move the sign up front.
    s.rat_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
    return s;
  }
  return from_integer(f, num).div(from_integer(f, den));
}

Scalar Scalar::from_coeffs(const Field& f, std::vector<long long> coeffs) {
  if (f.kind() != FieldKind::Extension)
    fail(Errc::UnsupportedField, "t-coefficients only make sense in an extension field");
  Scalar s(f);
  s.ext_ = std::move(coeffs);
  s.canonicalize();
  return s;
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Prime: return r_ == 0;
    case FieldKind::Extension: {
      for (long long c : ext_)
        if (c != 0) return false;
      return true;
    }
    case FieldKind::Rational: return rat_ == 0;
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

bool Scalar::is_negative() const {
  return field_.kind() == FieldKind::Rational && rat_ < 0;
}

Scalar Scalar::magnitude() const {
  if (!is_negative()) return *this;
  return -*this;
}

namespace {
void require_same(const Field& a, const Field& b) {
  if (a != b) fail(Errc::FieldMismatch, a.descriptor() + " vs " + b.descriptor());
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(field_, o.field_);
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Prime: s.r_ = r_ + o.r_; break;
    case FieldKind::Extension: {
      s.ext_ = ext_;
      for (size_t i = 0; i < o.ext_.size(); ++i) s.ext_[i] += o.ext_[i];
      break;
    }
    case FieldKind::Rational: s.rat_ = rat_ + o.rat_; break;
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(field_, o.field_);
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Prime: s.r_ = r_ * o.r_ % field_.characteristic(); break;
    case FieldKind::Extension: s.ext_ = pmul(ext_, o.ext_, field_.characteristic()); break;
    case FieldKind::Rational: s.rat_ = rat_ * o.rat_; break;
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Prime: s.r_ = -r_; break;
    case FieldKind::Extension: {
      s.ext_ = ext_;
      for (auto& c : s.ext_) c = -c;
      break;
    }
    case FieldKind::Rational: s.rat_ = -rat_; break;
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Prime: s.r_ = inv_mod(r_, field_.characteristic()); break;
    case FieldKind::Extension:
      s.ext_ = pinv(ext_, field_.modulus(), field_.characteristic());
      break;
    case FieldKind::Rational: s.rat_ = 1 / rat_; break;
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::div(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::frobenius() const {
  if (!field_.is_finite())
    fail(Errc::CharacteristicZero, "frobenius needs positive characteristic");
  if (field_.kind() == FieldKind::Prime) return *this;  // a^p = a in F_p
  return pow(field_.characteristic());
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  switch (field_.kind()) {
    case FieldKind::Prime: return r_ == o.r_;
    case FieldKind::Extension: return ext_ == o.ext_;
    case FieldKind::Rational: return rat_ == o.rat_;
  }
  return false;
}

long long Scalar::index() const {
  switch (field_.kind()) {
    case FieldKind::Prime:
      return r_;
    case FieldKind::Extension: {
      long long p = field_.characteristic(), idx = 0;
      for (size_t i = ext_.size(); i-- > 0;) idx = idx * p + ext_[i];
      return idx;
    }
    case FieldKind::Rational:
      fail(Errc::UnsupportedField, "no canonical element index over the rationals");
  }
  return 0;
}

Scalar Scalar::from_index(const Field& f, long long idx) {
  if (!f.is_finite()) fail(Errc::UnsupportedField, "no canonical element index over the rationals");
  if (idx < 0 || idx >= f.order()) fail(Errc::IndexOutOfRange, "element index out of range");
  if (f.kind() == FieldKind::Prime) return from_integer(f, idx);
  std::vector<long long> coeffs(static_cast<size_t>(f.degree()), 0);
  long long p = f.characteristic();
  for (auto& c : coeffs) {
    c = idx % p;
    idx /= p;
  }
  return from_coeffs(f, std::move(coeffs));
}

std::string Scalar::str() const {
  switch (field_.kind()) {
    case FieldKind::Prime: return std::to_string(r_);
    case FieldKind::Extension: return tpoly_text(ext_);
    case FieldKind::Rational: return rat_.str();
  }
  return {};
}

Scalar embed_into(const Scalar& s, const Field& target) {
  if (s.field() == target) return s;
  if (s.field().kind() == FieldKind::Prime && target.kind() == FieldKind::Extension &&
      s.field().characteristic() == target.characteristic())
    return Scalar::from_coeffs(target, {s.index()});
  fail(Errc::FieldMismatch,
       "cannot embed " + s.field().descriptor() + " into " + target.descriptor());
}

}  // namespace invlim
