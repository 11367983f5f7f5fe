#include "invlim/poly.hpp"

#include <algorithm>

namespace invlim {
namespace {

void require_same_field(const Field& a, const Field& b) {
  if (a != b) fail(Errc::FieldMismatch, a.descriptor() + " vs " + b.descriptor());
}

void require_same_arity(int a, int b) {
  if (a != b)
    fail(Errc::ArityMismatch,
         std::to_string(a) + " variables vs " + std::to_string(b));
}

std::string monomial_text(const Monomial& m, const std::string& var) {
  std::string out;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i + 1);
    if (m.e[i] >= 2) {
      out += '^';
      out += std::to_string(m.e[i]);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------- Polynomial ----

Polynomial::Polynomial(Field f, int nvars) : field_(std::move(f)), n_(nvars) {
  if (nvars < 1) fail(Errc::IndexOutOfRange, "need at least one variable");
}

Polynomial Polynomial::constant(const Field& f, int nvars, const Scalar& c) {
  require_same_field(f, c.field());
  Polynomial r(f, nvars);
  r.add_term(Monomial{std::vector<int>(static_cast<size_t>(nvars), 0)}, c);
  return r;
}

Polynomial Polynomial::variable(const Field& f, int nvars, int i) {
  if (i < 0 || i >= nvars) fail(Errc::IndexOutOfRange, "variable index out of range");
  Polynomial r(f, nvars);
  Monomial m{std::vector<int>(static_cast<size_t>(nvars), 0)};
  m.e[static_cast<size_t>(i)] = 1;
  r.add_term(m, Scalar::one(f));
  return r;
}

Polynomial Polynomial::term(const Field& f, int nvars, const Scalar& c, Monomial m) {
  require_same_field(f, c.field());
  if (static_cast<int>(m.e.size()) != nvars)
    fail(Errc::ArityMismatch, "exponent vector length does not match variable count");
  for (int v : m.e)
    if (v < 0) fail(Errc::IndexOutOfRange, "negative exponent");
  Polynomial r(f, nvars);
  r.add_term(m, c);
  return r;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.degree();  // the order is graded, so last = top degree
}

Scalar Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Polynomial::constant_term() const {
  return coeff(Monomial{std::vector<int>(static_cast<size_t>(n_), 0)});
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  Scalar s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_field(field_, o.field_);
  require_same_arity(n_, o.n_);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_field(field_, o.field_);
  require_same_arity(n_, o.n_);
  Polynomial r(field_, n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m{ma.e};
      for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  require_same_field(field_, c.field());
  Polynomial r(field_, n_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

Polynomial Polynomial::pow(long long e) const {
  if (e < 0) fail(Errc::IndexOutOfRange, "negative polynomial power");
  Polynomial acc = constant(field_, n_, Scalar::one(field_));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return field_ == o.field_ && n_ == o.n_ && terms_ == o.terms_;
}

Polynomial Polynomial::partial(int i) const {
  if (i < 0 || i >= n_) fail(Errc::IndexOutOfRange, "variable index out of range");
  Polynomial r(field_, n_);
  for (const auto& [m, c] : terms_) {
    int e = m.e[static_cast<size_t>(i)];
    if (e == 0) continue;
    Monomial d{m.e};
    d.e[static_cast<size_t>(i)] -= 1;
    r.add_term(d, c * Scalar::from_integer(field_, e));
  }
  return r;
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
  require_same_arity(n_, static_cast<int>(point.size()));
  for (const auto& s : point) require_same_field(field_, s.field());
  Scalar acc = Scalar::zero(field_);
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0) v = v * point[i].pow(m.e[i]);
    acc = acc + v;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  require_same_arity(n_, static_cast<int>(images.size()));
  for (const auto& g : images) require_same_field(field_, g.field());
  int out_n = images.front().nvars();
  for (const auto& g : images) require_same_arity(out_n, g.nvars());

  // Cache powers of each image up to the largest exponent that occurs.
  std::vector<int> maxe(static_cast<size_t>(n_), 0);
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < m.e.size(); ++i) maxe[i] = std::max(maxe[i], m.e[i]);
  std::vector<std::vector<Polynomial>> pows(static_cast<size_t>(n_));
  for (size_t i = 0; i < pows.size(); ++i) {
    pows[i].push_back(constant(field_, out_n, Scalar::one(field_)));
    for (int k = 1; k <= maxe[i]; ++k) pows[i].push_back(pows[i].back() * images[i]);
  }

  Polynomial r(field_, out_n);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(field_, out_n, c);
    for (size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0) t = t * pows[i][static_cast<size_t>(m.e[i])];
    r = r + t;
  }
  return r;
}

std::string Polynomial::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool neg = c.is_negative();
    Scalar mag = c.magnitude();
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = monomial_text(m, var);
    if (mono.empty()) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) {
      std::string ctext = mag.str();
      // Multi-term extension coefficients need grouping: "(t+1)*x1".
      if (ctext.find('+') != std::string::npos) ctext = "(" + ctext + ")";
      out += ctext;
      out += '*';
    }
    out += mono;
  }
  return out;
}

Polynomial shift_coords(const Polynomial& f, const std::vector<Scalar>& a, ShiftDir dir) {
  require_same_arity(f.nvars(), static_cast<int>(a.size()));
  std::vector<Polynomial> images;
  images.reserve(a.size());
  for (int i = 0; i < f.nvars(); ++i) {
    require_same_field(f.field(), a[static_cast<size_t>(i)].field());
    Polynomial v = Polynomial::variable(f.field(), f.nvars(), i);
    Polynomial c = Polynomial::constant(f.field(), f.nvars(), a[static_cast<size_t>(i)]);
    images.push_back(dir == ShiftDir::ToY ? v + c : v - c);
  }
  return f.substitute(images);
}

Polynomial embed_into(const Polynomial& f, const Field& target) {
  if (f.field() == target) return f;
  Polynomial r(target, f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, embed_into(c, target));
  return r;
}

// ------------------------------------------------------------ PolyEndo ----

PolyEndo::PolyEndo(Field f, std::vector<Polynomial> images)
    : field_(std::move(f)), n_(static_cast<int>(images.size())), images_(std::move(images)) {
  if (n_ < 1) fail(Errc::ArityMismatch, "a self-map needs at least one image");
  for (const auto& g : images_) {
    require_same_field(field_, g.field());
    require_same_arity(n_, g.nvars());
  }
}

PolyEndo PolyEndo::identity(const Field& f, int nvars) {
  std::vector<Polynomial> images;
  images.reserve(static_cast<size_t>(nvars));
  for (int i = 0; i < nvars; ++i) images.push_back(Polynomial::variable(f, nvars, i));
  return PolyEndo(f, std::move(images));
}

std::vector<Scalar> PolyEndo::eval_point(const std::vector<Scalar>& c) const {
  std::vector<Scalar> out;
  out.reserve(images_.size());
  for (const auto& g : images_) out.push_back(g.eval(c));
  return out;
}

int PolyEndo::degree() const {
  int d = 0;
  for (const auto& g : images_) d = std::max(d, g.degree());
  return d;
}

bool PolyEndo::operator==(const PolyEndo& o) const {
  return field_ == o.field_ && n_ == o.n_ && images_ == o.images_;
}

std::string PolyEndo::str(const std::string& var) const {
  std::string out;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ", ";
    out += var + std::to_string(i + 1) + " -> " + images_[i].str(var);
  }
  return out;
}

PolyEndo compose(const PolyEndo& first, const PolyEndo& second) {
  require_same_field(first.field(), second.field());
  require_same_arity(first.nvars(), second.nvars());
  std::vector<Polynomial> images;
  images.reserve(static_cast<size_t>(first.nvars()));
  for (const auto& g : first.images()) images.push_back(g.substitute(second.images()));
  return PolyEndo(first.field(), std::move(images));
}

std::vector<std::vector<Polynomial>> jacobian(const PolyEndo& f) {
  std::vector<std::vector<Polynomial>> J;
  J.reserve(static_cast<size_t>(f.nvars()));
  for (const auto& g : f.images()) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<size_t>(f.nvars()));
    for (int j = 0; j < f.nvars(); ++j) row.push_back(g.partial(j));
    J.push_back(std::move(row));
  }
  return J;
}

PolyEndo embed_into(const PolyEndo& f, const Field& target) {
  std::vector<Polynomial> images;
  images.reserve(f.images().size());
  for (const auto& g : f.images()) images.push_back(embed_into(g, target));
  return PolyEndo(target, std::move(images));
}

}  // namespace invlim
