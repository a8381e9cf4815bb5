#include "wright/asymptotics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>

#include "wright/triples.hpp"

namespace wright {

namespace {

Rat signed_binomial(unsigned M, unsigned m) {
  Rat c(binomial(BigInt(M), m));
  return m % 2 == 1 ? Rat(-c) : c;
}

}  // namespace

XiVector compute_xi(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                    TotalsReading reading) {
  if (M == 0) throw std::invalid_argument("moment order M must be positive");
  if (R == 0) throw std::invalid_argument("R must be positive");
  const std::size_t N = R - 1;
  const auto G = model.counts(N);
  const auto primes = model.primes(N);
  const auto beta = derive_beta(G);

  std::vector<std::vector<Rat>> totals(M + 1);
  totals[0] = G;
  for (unsigned m = 1; m <= M; ++m) {
    totals[m] = fn_totals(fn_power(F, m), primes, N);
    if (reading == TotalsReading::Normalized) {
      const Rat scale = pow(F.f1plus(), static_cast<long>(m));
      for (auto& x : totals[m]) x /= scale;
    }
  }

  XiVector out{M, std::vector<Rat>(R)};
  for (std::size_t s = 0; s <= N; ++s) {
    Rat acc;
    for (unsigned m = 0; m <= M; ++m) {
      Rat conv;
      for (std::size_t r = 0; r <= s; ++r) conv += beta[r] * totals[m][s - r];
      acc += signed_binomial(M, m) * conv;
    }
    out.xi[s] = M % 2 == 1 ? Rat(-acc) : acc;
  }
  return out;
}

const Poly& NuTable::at(std::size_t s, std::size_t t) const {
  auto it = entries_.find({s, t});
  if (it == entries_.end())
    throw std::out_of_range("nu(" + std::to_string(s) + "," + std::to_string(t) + ") is outside the table");
  return it->second;
}

void NuTable::set(std::size_t s, std::size_t t, Poly p) {
  if (t < 1 || t > s || s >= R_) throw std::out_of_range("nu index outside 1 <= t <= s < R");
  entries_[{s, t}] = std::move(p);
}

NuTable compute_nu_direct(const PolyExpansion& psi, std::size_t R) {
  if (psi.order() < R) throw std::invalid_argument("psi expansion shorter than R");
  const Rat& q = psi.base();
  NuTable table(q, R);
  // shifted[j][i] = psi_i(n - j)
  std::vector<std::vector<Poly>> shifted(R);
  for (std::size_t j = 0; j < R; ++j) {
    for (std::size_t i = 0; i < R; ++i) shifted[j].push_back(poly_shift(psi.term(i), static_cast<long>(j)));
  }
  for (std::size_t t = 1; t < R; ++t) {
    for (std::size_t s = t; s < R; ++s) {
      Poly total;
      std::vector<std::size_t> parts;
      auto rec = [&](auto&& self, std::size_t remaining, std::size_t slots) -> void {
        if (slots == 0) {
          if (remaining != 0) return;
          Poly product = Poly::constant(1);
          long weight = 0;
          for (std::size_t j = 0; j < parts.size(); ++j) {
            product = product * shifted[j][parts[j]];
            weight += static_cast<long>(j * parts[j]);
          }
          total += pow(q, weight) * product;
          return;
        }
        for (std::size_t i = 1; i + (slots - 1) <= remaining; ++i) {
          parts.push_back(i);
          self(self, remaining - i, slots - 1);
          parts.pop_back();
        }
      };
      rec(rec, s, t);
      table.set(s, t, std::move(total));
    }
  }
  return table;
}

NuTable compute_nu_iterated(const PolyExpansion& psi, std::size_t R) {
  if (psi.order() < R) throw std::invalid_argument("psi expansion shorter than R");
  const PolyExpansion ratio = psi.truncated(R);
  NuTable table(psi.base(), R);
  PolyExpansion product = PolyExpansion::one(psi.base(), R);
  for (std::size_t t = 1; t < R; ++t) {
    product = expansion_mul(product, expansion_shift_substitute(ratio, static_cast<long>(t - 1)));
    for (std::size_t s = t; s < R; ++s) table.set(s, t, product.term(s));
  }
  return table;
}

NuTable compute_nu(const PolyExpansion& psi, std::size_t R) {
  auto direct = compute_nu_direct(psi, R);
  auto iterated = compute_nu_iterated(psi, R);
  if (!(direct == iterated)) throw std::logic_error("nu: composition sum and iterated product disagree");
  return direct;
}

Rat TauExpansion::evaluate(long n) const {
  return PolyExpansion(base, tau).evaluate(n);
}

TauExpansion compute_tau(const XiVector& xi, const NuTable& nu, int d1, int d2) {
  const std::size_t R = xi.xi.size();
  if (nu.order() != R) throw std::invalid_argument("xi and nu tables have different orders");
  TauExpansion out{nu.base(), std::vector<Poly>(R), d1, d2};
  for (std::size_t s = 1; s < R; ++s) {
    Poly tau;
    for (std::size_t t = 1; t <= s; ++t) {
      if (xi.xi[t] != 0) tau += xi.xi[t] * nu.at(s, t);
    }
    if (tau.degree() > d1 * static_cast<int>(s) - d2)
      throw std::logic_error("tau_" + std::to_string(s) + " exceeds its degree bound");
    out.tau[s] = std::move(tau);
  }
  return out;
}

namespace {

void require_polynomial_regime(const SemigroupModel& model) {
  const auto& info = model.info();
  if (info.growth_exponent != 1 || !model.has_ratio_expansion()) {
    throw std::domain_error("polynomial-coefficient expansion needs log G_n with growth exponent a = 1; " +
                            info.name + " has a = " + std::to_string(info.growth_exponent) +
                            " (use the pointwise lambda form instead)");
  }
}

}  // namespace

MomentExpansion expand_moment(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                              TotalsReading reading) {
  require_polynomial_regime(model);
  auto psi = model.ratio_expansion(R);
  auto nu = compute_nu(psi, R);
  auto xi = compute_xi(F, model, M, R, reading);
  auto tau = compute_tau(xi, nu, model.info().d1, model.info().d2);
  return {std::move(psi), std::move(nu), std::move(xi), std::move(tau)};
}

LambdaValue lambda_pointwise(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t s,
                             std::size_t n) {
  if (s < 1 || n < s) throw std::invalid_argument("lambda needs n >= s >= 1");
  const auto xi = compute_xi(F, model, M, s + 1).xi[s];
  const Rat quotient = make_rat(model.count(n - s), model.count(n));
  const auto& base = model.info().base;
  const BigInt exponent = BigInt(s) * pow(BigInt(n), model.info().growth_exponent);

  LambdaValue out;
  if (xi == 0) {
    out.exact = Rat(0);
    out.approx = 0;
    return out;
  }
  if (exponent % base.root == 0) {
    BigInt e = exponent / base.root;
    if (!e.fits_slong_p()) throw std::overflow_error("lambda exponent too large");
    out.exact = xi * pow(base.radicand, e.get_si()) * quotient;
    out.approx = to_bigfloat(*out.exact);
  } else {
    const BigFloat scaled = boost::multiprecision::pow(to_bigfloat(base.radicand),
                                                       to_bigfloat(exponent) / BigFloat(base.root));
    out.approx = to_bigfloat(xi) * scaled * to_bigfloat(quotient);
  }
  return out;
}

ResidualReport verify_expansion(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                                std::size_t n_lo, std::size_t n_hi, bool parallel) {
  if (n_lo > n_hi) throw std::invalid_argument("empty n range");
  if (n_lo < R) throw std::invalid_argument("n range must start at or above R");
  const auto expansion = expand_moment(F, model, M, R);
  const auto moments = moment_table(F, model, M, n_hi, parallel);
  const Rat& q = expansion.tau.base;
  const long n_power = model.info().d1 * static_cast<long>(R) - model.info().d2;

  ResidualReport report;
  report.M = M;
  report.R = R;
  RatioTable ratios;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const long ln = static_cast<long>(n);
    ResidualRow row;
    row.n = n;
    row.moment = moments.mu[n];
    row.residual = row.moment - expansion.tau.evaluate(ln);
    row.ratio = row.residual * pow(q, static_cast<long>(R) * ln) / pow(Rat(ln), n_power);
    ratios.push_back({n, row.ratio});
    report.rows.push_back(std::move(row));
  }
  report.verdict = judge_bounded(ratios, BoundCriterion::Stable);
  return report;
}

RatioTable central_sum_residuals(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                                 std::size_t N) {
  const auto xi = compute_xi(F, model, M, R).xi;
  const auto G = model.counts(N);
  const auto moments = moment_table(F, model, M, N);
  RatioTable table;
  for (std::size_t n = R; n <= N; ++n) {
    Rat approx;
    for (std::size_t s = 0; s < R; ++s) approx += xi[s] * G[n - s];
    table.push_back({n, Rat((moments.mu[n] * G[n] - approx) / G[n - R])});
  }
  return table;
}

}  // namespace wright
