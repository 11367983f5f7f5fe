#include "invlim/endo.hpp"

#include <stdexcept>

#include "invlim/det.hpp"

namespace invlim {

TruncEndo::TruncEndo(TruncSpec spec, std::vector<TruncElem> images)
    : spec_(std::move(spec)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != spec_.nvars())
    fail(Errc::ArityMismatch, "need exactly one image per generator");
  for (const auto& u : images_) {
    if (u.spec() != spec_) fail(Errc::SpecMismatch, "image lives in a different ring");
    if (!u.constant_term().is_zero())
      fail(Errc::ConstantTermNonzero,
           "image " + u.str() + " has nonzero constant term, so it does not define "
           "an endomorphism of the quotient");
  }
}

TruncEndo TruncEndo::identity(const TruncSpec& s) {
  std::vector<TruncElem> images;
  images.reserve(static_cast<size_t>(s.nvars()));
  for (int i = 0; i < s.nvars(); ++i) images.push_back(TruncElem::generator(s, i));
  return TruncEndo(s, std::move(images));
}

TruncElem TruncEndo::apply(const TruncElem& u) const {
  if (u.spec() != spec_) fail(Errc::SpecMismatch, "element lives in a different ring");
  // Substitute inside the quotient: every partial product gets reduced right
  // away, so intermediates never grow past the truncation order. Substituting
  // at the polynomial level instead would build dense high-degree products
  // (with ballooning coefficients over the rationals) only to discard them.
  const Polynomial& rep = u.rep();
  std::vector<int> maxe(static_cast<size_t>(spec_.nvars()), 0);
  for (const auto& [m, c] : rep.terms())
    for (size_t i = 0; i < m.e.size(); ++i) maxe[i] = std::max(maxe[i], m.e[i]);

  std::vector<std::vector<TruncElem>> pows(maxe.size());
  for (size_t i = 0; i < pows.size(); ++i) {
    pows[i].push_back(TruncElem::one(spec_));
    for (int e = 1; e <= maxe[i]; ++e) pows[i].push_back(pows[i].back() * images_[i]);
  }

  TruncElem acc = TruncElem::zero(spec_);
  for (const auto& [m, c] : rep.terms()) {
    TruncElem t = TruncElem::from_scalar(spec_, c);
    for (size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0) t = t * pows[i][static_cast<size_t>(m.e[i])];
    acc = acc + t;
  }
  return acc;
}

bool TruncEndo::operator==(const TruncEndo& o) const {
  return spec_ == o.spec_ && images_ == o.images_;
}

std::string TruncEndo::str() const {
  std::string out;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ", ";
    out += "y" + std::to_string(i + 1) + " -> " + images_[i].str();
  }
  return out;
}

TruncEndo compose(const TruncEndo& first, const TruncEndo& second) {
  if (first.spec() != second.spec())
    fail(Errc::SpecMismatch, "cannot compose maps of different rings");
  std::vector<TruncElem> images;
  images.reserve(static_cast<size_t>(first.nvars()));
  for (const auto& g : first.images()) images.push_back(second.apply(g));
  return TruncEndo(first.spec(), std::move(images));
}

std::vector<std::vector<TruncElem>> endo_jacobian(const TruncEndo& f) {
  std::vector<std::vector<TruncElem>> J;
  J.reserve(static_cast<size_t>(f.nvars()));
  for (const auto& g : f.images()) {
    std::vector<TruncElem> row;
    row.reserve(static_cast<size_t>(f.nvars()));
    for (int j = 0; j < f.nvars(); ++j) row.emplace_back(f.spec(), g.rep().partial(j));
    J.push_back(std::move(row));
  }
  return J;
}

TruncElem endo_det(const TruncEndo& f) {
  return berkowitz_det(endo_jacobian(f), TruncElem::zero(f.spec()), TruncElem::one(f.spec()));
}

std::vector<std::vector<Scalar>> linear_part(const TruncEndo& f) {
  int n = f.nvars();
  std::vector<std::vector<Scalar>> c;
  c.reserve(static_cast<size_t>(n));
  for (const auto& g : f.images()) {
    std::vector<Scalar> row;
    row.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      Monomial m{std::vector<int>(static_cast<size_t>(n), 0)};
      m.e[static_cast<size_t>(j)] = 1;
      row.push_back(g.rep().coeff(m));
    }
    c.push_back(std::move(row));
  }
  return c;
}

AutomorphismVerdict check_automorphism(const TruncEndo& f) {
  const Field& k = f.spec().field();
  auto c = linear_part(f);
  Scalar ldet = berkowitz_det(c, Scalar::zero(k), Scalar::one(k));
  TruncElem jdet = endo_det(f);
  bool by_linear = !ldet.is_zero();
  bool by_jacobian = jdet.is_unit();
  // The determinants are congruent modulo the nilpotent ideal, so the two
  // answers cannot differ; if they ever do, the ring arithmetic is broken.
  if (by_linear != by_jacobian)
    throw std::logic_error("automorphism criteria disagree: det(c)=" + ldet.str() +
                           " vs det(J)=" + jdet.str());
  return AutomorphismVerdict{by_linear, std::move(c), std::move(ldet), std::move(jdet)};
}

// Gauss-Jordan inverse over the coefficient field; the caller has already
// established that the determinant is nonzero.
std::vector<std::vector<Scalar>> matrix_inverse(std::vector<std::vector<Scalar>> m,
                                                const Field& k) {
  size_t n = m.size();
  std::vector<std::vector<Scalar>> inv;
  inv.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Scalar> row(n, Scalar::zero(k));
    row[i] = Scalar::one(k);
    inv.push_back(std::move(row));
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular matrix reached the inversion path");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Scalar scale = m[col][col].inverse();
    for (size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] * scale;
      inv[col][j] = inv[col][j] * scale;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - factor * m[col][j];
        inv[r][j] = inv[r][j] - factor * inv[col][j];
      }
    }
  }
  return inv;
}

TruncEndo endo_invert(const TruncEndo& f, int* rounds, const TruncEndo* seed) {
  AutomorphismVerdict v = check_automorphism(f);
  if (!v.is_automorphism)
    fail(Errc::NotAnAutomorphism, "linear part is singular: " + f.str());

  const TruncSpec& spec = f.spec();
  const Field& k = spec.field();
  int n = spec.nvars();

  // Default start: the linear map with the inverse matrix.
  auto b = matrix_inverse(v.linear, k);
  std::vector<TruncElem> start;
  start.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Polynomial rep(k, n);
    for (int j = 0; j < n; ++j) {
      Monomial m{std::vector<int>(static_cast<size_t>(n), 0)};
      m.e[static_cast<size_t>(j)] = 1;
      rep.add_term(m, b[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    start.emplace_back(spec, rep);
  }
  TruncEndo tau(spec, std::move(start));

  // A caller-supplied seed is only an accelerator: take it when its linear
  // part is the one the correction argument needs, otherwise keep the
  // default.
  if (seed && seed->spec() == spec && linear_part(*seed) == b) tau = *seed;
  TruncEndo id = TruncEndo::identity(spec);

  // Cancel the lowest-order error of compose(f, tau) until it is gone. Each
  // round raises the error order from d to at least 2d-1, and orders beyond
  // the nilpotency index mean the error is zero, so this cannot spin.
  int used = 0;
  long long nil = spec.nilpotency_index();
  int limit = 2;
  while ((1LL << (limit - 2)) + 1 < nil) ++limit;  // = ceil(log2(nil)) + 1 slack
  for (;; ++used) {
    TruncEndo rho = compose(f, tau);
    if (rho == id) break;
    if (used > limit + 2) throw std::logic_error("correction loop failed to terminate");
    std::vector<TruncElem> kappa;
    kappa.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      TruncElem err = rho.image(i) - TruncElem::generator(spec, i);
      kappa.push_back(TruncElem::generator(spec, i) - err);
    }
    tau = compose(tau, TruncEndo(spec, std::move(kappa)));
  }
  if (rounds) *rounds = used;
  return tau;
}

}  // namespace invlim
