#include "wright/rational.hpp"

#include <stdexcept>

namespace wright {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal(text)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return BigInt(strip_plus(text), 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+'))
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  BigInt d = parse_bigint(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rat(parse_bigint(num), d);
}

BigInt pow(const BigInt& z, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
  return out;
}

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero to a negative power");
    auto m = static_cast<unsigned long>(-e);
    return make_rat(pow(BigInt(r.get_den()), m), pow(BigInt(r.get_num()), m));
  }
  auto m = static_cast<unsigned long>(e);
  Rat out(pow(BigInt(r.get_num()), m), pow(BigInt(r.get_den()), m));
  return out;  // already reduced: powers of coprime integers stay coprime
}

BigInt binomial(const BigInt& n, unsigned long k) {
  if (n < 0) throw std::domain_error("binomial of a negative integer");
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::vector<Rat> to_rats(const std::vector<BigInt>& zs) {
  return {zs.begin(), zs.end()};
}

}  // namespace wright
