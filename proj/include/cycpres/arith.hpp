#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cycpres {

using Int = mpz_class;
using Rat = mpq_class;

// this gmpxx has no long long constructor; route through long (64-bit here)
static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// gcd convention used throughout: (a,b) = gcd(|a|,|b|), so (0,n) = n and (0,0) = 0.
inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long gcd3_ll(long long a, long long b, long long c) {
  return std::gcd(std::gcd(a, b), c);
}

// least nonnegative residue, n >= 1
inline long long mod_ll(long long a, long long n) {
  if (n <= 0) throw std::invalid_argument("mod_ll: modulus must be positive");
  long long r = a % n;
  return r < 0 ? r + n : r;
}

inline Int int_pow(const Int& base, long long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Int int_pow(long long base, long long e) { return int_pow(to_int(base), e); }

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// least nonnegative residue, m >= 1
inline Int mod_int(const Int& a, const Int& m) {
  if (m <= 0) throw std::invalid_argument("mod_int: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int powmod_int(const Int& base, const Int& e, const Int& m) {
  if (e < 0) throw std::invalid_argument("powmod_int: negative exponent");
  if (m <= 0) throw std::invalid_argument("powmod_int: modulus must be positive");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// least nonnegative inverse of a mod m (m >= 1); nullopt when (a,m) != 1
inline std::optional<Int> modinv_int(const Int& a, const Int& m) {
  if (m <= 0) throw std::invalid_argument("modinv_int: modulus must be positive");
  if (m == 1) return Int(0);
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

inline long long to_ll(const Int& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("to_ll: value does not fit in long long");
  return a.get_si();
}

inline int sign_int(const Int& a) { return sgn(a); }

}  // namespace cycpres
