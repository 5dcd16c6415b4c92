#include "orecurv/field.hpp"

namespace orecurv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NeedsPositiveCharacteristic: return "NeedsPositiveCharacteristic";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::OrderZero: return "OrderZero";
    case ErrorCode::ZeroTrailing: return "ZeroTrailing";
    case ErrorCode::DegenerateReduction: return "DegenerateReduction";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorCode::PrecisionContract: return "PrecisionContract";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::make(std::uint64_t characteristic) {
  if (characteristic != 0 && !is_prime_u64(characteristic))
    throw Error(ErrorCode::NotPrime, std::to_string(characteristic) + " is not prime");
  return FieldSpec{characteristic};
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime_u64(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
}

PrimeField::value_type PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return static_cast<value_type>(r.get_ui());
}

PrimeField::value_type PrimeField::from_mpq(const mpq_class& v) const {
  value_type den = from_mpz(v.get_den());
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo " + std::to_string(p_));
  return div(from_mpz(v.get_num()), den);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
  // extended Euclid on signed 128-bit to stay exact for p < 2^63
  __int128 t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const { return powmod(a, e, p_); }

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q");
  return 1 / a;
}

RationalField::value_type RationalField::div(const value_type& a, const value_type& b) const {
  if (sgn(b) == 0) throw Error(ErrorCode::DivisionByZero, "division by 0 in Q");
  return a / b;
}

RationalField::value_type RationalField::pow(const value_type& a, std::uint64_t e) const {
  mpq_class r(1);
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e);
  return r;
}

}  // namespace orecurv
