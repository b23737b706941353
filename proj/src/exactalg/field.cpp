#include "nilcomm/exactalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>

namespace nilcomm {

Residue::Residue(std::int64_t value, std::uint32_t prime) : prime_(prime) {
  if (prime == 0) throw std::invalid_argument("residue needs a nonzero modulus");
  std::int64_t r = value % static_cast<std::int64_t>(prime);
  if (r < 0) r += prime;
  value_ = static_cast<std::uint32_t>(r);
}

std::uint32_t Residue::common_modulus(const Residue& o) const {
  if (prime_ == 0) return o.prime_;
  if (o.prime_ != 0 && o.prime_ != prime_) throw std::logic_error("residues modulo different primes");
  return prime_;
}

Residue Residue::operator+(const Residue& o) const {
  Residue r;
  r.prime_ = common_modulus(o);
  std::uint64_t s = std::uint64_t(value_) + o.value_;
  if (r.prime_ != 0 && s >= r.prime_) s -= r.prime_;
  r.value_ = static_cast<std::uint32_t>(s);
  return r;
}

Residue Residue::operator-(const Residue& o) const { return *this + (-o); }

Residue Residue::operator-() const {
  Residue r = *this;
  if (value_ != 0) r.value_ = prime_ - value_;
  return r;
}

Residue Residue::operator*(const Residue& o) const {
  Residue r;
  r.prime_ = common_modulus(o);
  if (value_ == 0 || o.value_ == 0) return r;
  r.value_ = static_cast<std::uint32_t>((std::uint64_t(value_) * o.value_) % r.prime_);
  return r;
}

Residue Residue::inverse() const {
  if (value_ == 0) throw std::domain_error("division by zero in prime field");
  // Extended Euclid on (value, p).
  std::int64_t a = value_, b = prime_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::pair{b, a - q * b};
    std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
  }
  return Residue(x0, prime_);
}

Residue Residue::operator/(const Residue& o) const {
  Residue inv = o.inverse();
  return *this * inv;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (p > (1u << 31)) throw std::invalid_argument("prime too large for residue arithmetic");
  return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  std::transform(text.begin(), text.end(), std::back_inserter(t), [](unsigned char c) { return std::tolower(c); });
  if (t == "q") return rationals();
  if (t.rfind("fp:", 0) == 0) {
    const std::string digits = t.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("bad field '" + text + "'");
    unsigned long long p = std::stoull(digits);
    if (p > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("prime too large: " + digits);
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("bad field '" + text + "' (expected q or fp:<prime>)");
}

std::string FieldSpec::json_name() const {
  return kind == Kind::rationals ? "Q" : "Fp:" + std::to_string(prime);
}

std::string FieldSpec::cli_name() const {
  return kind == Kind::rationals ? "q" : "fp:" + std::to_string(prime);
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

Rational Field<Rational>::from_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

Rational Field<Rational>::parse(const std::string& text) const {
  Rational q;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::domain_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Field<Residue>::Field(std::uint32_t prime) : prime_(FieldSpec::prime_field(prime).prime) {}

Residue Field<Residue>::parse(const std::string& text) const {
  // Accept integers and fractions a/b; both are reduced modulo p.
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    mpz_class z;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || z.set_str(t, 10) != 0) throw std::invalid_argument("bad residue '" + text + "'");
    mpz_class r = z % prime_;
    if (r < 0) r += prime_;
    return Residue(static_cast<std::int64_t>(r.get_si()), prime_);
  };
  if (slash == std::string::npos) return parse_int(text);
  return parse_int(text.substr(0, slash)) / parse_int(text.substr(slash + 1));
}

}  // namespace nilcomm
