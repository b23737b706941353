#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nilcomm {

using Rational = mpq_class;

// Element of Z/pZ. A default-constructed residue is zero with no modulus attached;
// it adopts the modulus of whatever it is combined with.
class Residue {
 public:
  Residue() = default;
  Residue(std::int64_t value, std::uint32_t prime);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return prime_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator/(const Residue& o) const;
  Residue operator-() const;
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }
  Residue& operator/=(const Residue& o) { return *this = *this / o; }
  bool operator==(const Residue& o) const { return value_ == o.value_; }

  Residue inverse() const;

 private:
  std::uint32_t common_modulus(const Residue& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t prime_ = 0;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Residue& r) { return r.value() == 0; }

// Runtime description of the coefficient field, as given on the command line
// ("q" or "fp:<prime>") or in JSON ("Q" or "Fp:<prime>").
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t prime = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);
  // Accepts both the command-line and the JSON spelling.
  static FieldSpec parse(const std::string& text);

  std::string json_name() const;
  std::string cli_name() const;
  std::uint64_t characteristic() const { return kind == Kind::rationals ? 0 : prime; }
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]. Written out rather than using
// std::uniform_int_distribution so that seeded runs agree across standard libraries.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

template <class K>
class Field;

template <>
class Field<Rational> {
 public:
  Field() = default;
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint64_t characteristic() const { return 0; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Rational from_ratio(std::int64_t num, std::int64_t den) const;
  // Small integers in [-bound, bound]; entries stay short under elimination.
  Rational random(Rng& rng, std::int64_t bound = 9) const { return from_int(uniform_int(rng, -bound, bound)); }
  Rational parse(const std::string& text) const;
  std::string format(const Rational& q) const { return q.get_str(); }
  bool operator==(const Field&) const { return true; }
};

template <>
class Field<Residue> {
 public:
  explicit Field(std::uint32_t prime);
  FieldSpec spec() const { return FieldSpec::prime_field(prime_); }
  std::uint64_t characteristic() const { return prime_; }
  std::uint32_t prime() const { return prime_; }
  Residue zero() const { return Residue(0, prime_); }
  Residue one() const { return Residue(1, prime_); }
  Residue from_int(std::int64_t v) const { return Residue(v, prime_); }
  Residue from_ratio(std::int64_t num, std::int64_t den) const { return from_int(num) / from_int(den); }
  // Uniform over the whole field; the bound is ignored.
  Residue random(Rng& rng, std::int64_t = 0) const { return from_int(uniform_int(rng, 0, prime_ - 1)); }
  Residue parse(const std::string& text) const;
  std::string format(const Residue& r) const { return std::to_string(r.value()); }
  bool operator==(const Field& o) const { return prime_ == o.prime_; }

 private:
  std::uint32_t prime_;
};

using RationalField = Field<Rational>;
using PrimeField = Field<Residue>;

// Calls f with the Field object described by spec; both calls must return the same type.
template <class F>
decltype(auto) visit_field(const FieldSpec& spec, F&& f) {
  if (spec.kind == FieldSpec::Kind::rationals) return f(RationalField{});
  return f(PrimeField(spec.prime));
}

}  // namespace nilcomm
