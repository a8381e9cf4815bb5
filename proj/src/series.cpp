#include "wright/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wright {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return monomial(Rat(1), 0, order); }

TruncatedSeries TruncatedSeries::monomial(const Rat& c, std::size_t power, std::size_t order) {
  TruncatedSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries out(a.order());
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = -a[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] != 0) out.coeffs_[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a) {
  TruncatedSeries out(a.order());
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = c * a[i];
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries inverse(const TruncatedSeries& s) {
  if (s[0] == 0) throw std::domain_error("not invertible: zero constant term");
  const std::size_t n = s.order();
  std::vector<Rat> inv(n + 1);
  const Rat c0 = 1 / Rat(s[0]);
  inv[0] = c0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (s[j] != 0) acc += s[j] * inv[k - j];
    }
    inv[k] = -acc * c0;
  }
  return TruncatedSeries(std::move(inv));
}

TruncatedSeries log(const TruncatedSeries& s) {
  if (s[0] != 1) throw std::domain_error("log needs constant term 1");
  const std::size_t n = s.order();
  std::vector<Rat> out(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat acc = Rat(k) * s[k];
    for (std::size_t j = 1; j < k; ++j) {
      if (out[j] != 0 && s[k - j] != 0) acc -= Rat(j) * out[j] * s[k - j];
    }
    out[k] = acc / k;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries exp(const TruncatedSeries& s) {
  if (s[0] != 0) throw std::domain_error("exp needs zero constant term");
  const std::size_t n = s.order();
  std::vector<Rat> out(n + 1);
  out[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (s[j] != 0) acc += Rat(j) * s[j] * out[k - j];
    }
    out[k] = acc / k;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries int_pow(const TruncatedSeries& s, const BigInt& e) {
  if (e < 0) throw std::domain_error("int_pow needs a non-negative exponent");
  TruncatedSeries result = TruncatedSeries::one(s.order());
  TruncatedSeries base = s;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

TruncatedSeries int_pow(const TruncatedSeries& s, unsigned long e) { return int_pow(s, BigInt(e)); }

TruncatedSeries euler_product(std::span<const BigInt> t, std::span<const Rat> a, std::size_t order) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("euler_product needs a_0 = 1");
  if (a.size() <= order || (order > 0 && t.size() <= order))
    throw std::invalid_argument("euler_product: sequences shorter than the requested order");
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (std::size_t m = 1; m <= order; ++m) {
    if (t[m] == 0) continue;
    // The m-th factor is a series in y = x^m; exponentiate it at order N/m.
    const std::size_t reduced = order / m;
    TruncatedSeries factor(std::vector<Rat>(a.begin(), a.begin() + reduced + 1));
    TruncatedSeries powered = t[m] > 0 ? int_pow(factor, t[m]) : inverse(int_pow(factor, BigInt(-t[m])));
    std::vector<Rat> spread(order + 1);
    for (std::size_t k = 0; k <= reduced; ++k) spread[k * m] = powered[k];
    acc = acc * TruncatedSeries(std::move(spread));
  }
  return acc;
}

}  // namespace wright
