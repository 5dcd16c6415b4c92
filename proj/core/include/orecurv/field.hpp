#ifndef ORECURV_FIELD_HPP
#define ORECURV_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "orecurv/error.hpp"

namespace orecurv {

bool is_prime_u64(std::uint64_t n);

// Characteristic of the coefficient field: a prime p, or 0 for Q.
struct FieldSpec {
  std::uint64_t characteristic = 0;

  static FieldSpec make(std::uint64_t characteristic);
  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldSpec&) const = default;
};

class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p);
  explicit PrimeField(FieldSpec spec) : PrimeField(spec.characteristic) {}

  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec{p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_ > INT64_MAX ? 1 : p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r);
  }
  value_type from_mpz(const mpz_class& v) const;
  // Reduces a rational number; throws DivisionByZero if p divides the denominator.
  value_type from_mpq(const mpq_class& v) const;

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const;

  std::string to_string(value_type a) const { return std::to_string(a); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  RationalField() = default;
  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec{0}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }
  value_type from_mpq(const mpq_class& v) const { return v; }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const;
  value_type pow(const value_type& a, std::uint64_t e) const;

  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool operator==(const RationalField&) const { return true; }
};

}  // namespace orecurv

#endif
