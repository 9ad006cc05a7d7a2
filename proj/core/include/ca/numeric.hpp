#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace ca {

// Exact arithmetic throughout: counts as Int, residuals as Rational.
using Int = mpz_class;
using Rational = mpq_class;

inline Int int_pow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

// Exact quotient; throws std::logic_error if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

}  // namespace ca
