#include "wright/polyasym.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wright {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  out += b;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rat& c, const Poly& a) {
  std::vector<Rat> out(a.coeffs_.begin(), a.coeffs_.end());
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

Rat poly_eval(const Poly& p, const Rat& n) {
  Rat acc;
  auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Poly poly_shift(const Poly& p, long c) {
  if (c == 0 || p.is_zero()) return p;
  // Horner in the shifted variable: p(n-c) = (...(a_d (n-c) + a_{d-1})(n-c) + ...).
  const Poly linear{Rat(-c), Rat(1)};
  Poly acc;
  auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * linear + Poly::constant(*it);
  return acc;
}

PolyExpansion::PolyExpansion(Rat base, std::vector<Poly> terms) : base_(std::move(base)), terms_(std::move(terms)) {
  if (base_ <= 1) throw std::invalid_argument("expansion base must exceed 1");
  if (terms_.empty()) throw std::invalid_argument("expansion needs at least one term");
}

PolyExpansion PolyExpansion::one(const Rat& base, std::size_t order) {
  std::vector<Poly> terms(order);
  terms.at(0) = Poly::constant(1);
  return PolyExpansion(base, std::move(terms));
}

PolyExpansion PolyExpansion::truncated(std::size_t order) const {
  if (order == 0 || order > terms_.size()) throw std::invalid_argument("bad truncation order");
  return PolyExpansion(base_, std::vector<Poly>(terms_.begin(), terms_.begin() + order));
}

Rat PolyExpansion::evaluate(long n) const {
  const Rat y = pow(base_, -n);
  Rat acc;
  Rat ys = 1;
  for (const auto& p : terms_) {
    acc += poly_eval(p, Rat(n)) * ys;
    ys *= y;
  }
  return acc;
}

namespace {

void require_same_base(const PolyExpansion& a, const PolyExpansion& b) {
  if (a.base() != b.base())
    throw std::invalid_argument("expansion base mismatch: " + to_string(a.base()) + " vs " + to_string(b.base()));
}

}  // namespace

PolyExpansion expansion_add(const PolyExpansion& a, const PolyExpansion& b) {
  require_same_base(a, b);
  const std::size_t r = std::min(a.order(), b.order());
  std::vector<Poly> out(r);
  for (std::size_t s = 0; s < r; ++s) out[s] = a.term(s) + b.term(s);
  return PolyExpansion(a.base(), std::move(out));
}

PolyExpansion expansion_scale(const Rat& c, const PolyExpansion& e) {
  std::vector<Poly> out;
  out.reserve(e.order());
  for (const auto& p : e.terms()) out.push_back(c * p);
  return PolyExpansion(e.base(), std::move(out));
}

PolyExpansion expansion_mul(const PolyExpansion& a, const PolyExpansion& b) {
  require_same_base(a, b);
  const std::size_t r = std::min(a.order(), b.order());
  std::vector<Poly> out(r);
  for (std::size_t u = 0; u < r; ++u) {
    if (a.term(u).is_zero()) continue;
    for (std::size_t v = 0; u + v < r; ++v) {
      if (!b.term(v).is_zero()) out[u + v] += a.term(u) * b.term(v);
    }
  }
  return PolyExpansion(a.base(), std::move(out));
}

PolyExpansion expansion_shift_substitute(const PolyExpansion& e, long c) {
  std::vector<Poly> out;
  out.reserve(e.order());
  for (std::size_t s = 0; s < e.order(); ++s) {
    out.push_back(pow(e.base(), c * static_cast<long>(s)) * poly_shift(e.term(s), c));
  }
  return PolyExpansion(e.base(), std::move(out));
}

PolyExpansion expansion_geometric_inverse(const PolyExpansion& e) {
  if (e.term(0) != Poly::constant(1)) throw std::domain_error("geometric inverse needs leading term 1");
  const std::size_t r = e.order();
  // d = 1 - e has no s = 0 term, so d^r vanishes below index r.
  std::vector<Poly> d_terms(r);
  for (std::size_t s = 1; s < r; ++s) d_terms[s] = Rat(-1) * e.term(s);
  const PolyExpansion d(e.base(), std::move(d_terms));
  PolyExpansion sum = PolyExpansion::one(e.base(), r);
  PolyExpansion power = sum;
  for (std::size_t k = 1; k < r; ++k) {
    power = expansion_mul(power, d);
    sum = expansion_add(sum, power);
  }
  return sum;
}

}  // namespace wright
