/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/numeric.hpp"

#include <cassert>
#include <cstdio>
#include <stdexcept>

namespace sgnet {

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt pow3(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

BigRat make_rat(BigInt num, BigInt den) {
  BigRat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

BigInt bigint_from_u128(unsigned __int128 v) {
  BigInt hi(static_cast<unsigned long>(v >> 64));
  hi <<= 64;
  return hi + BigInt(static_cast<unsigned long>(v));
}

BigInt div_round_half_even(const BigInt& n, const BigInt& d) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const int c = cmp(r * 2, d);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

namespace {

BigInt pow10(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// Compares num/den against 10^e.
int cmp_pow10(const BigInt& num, const BigInt& den, long e) {
  if (e >= 0) return cmp(num, den * pow10(e));
  return cmp(num * pow10(-e), den);
}

}  // namespace

std::string decimal_round_half_even(const BigRat& q, int sig) {
  if (sig < 1) throw std::invalid_argument("sig must be >= 1");
  if (sgn(q) < 0) throw std::invalid_argument("negative value");
  const BigInt num = q.get_num();
  const BigInt den = q.get_den();
  if (sgn(num) == 0) return "0";

  // Smallest e with num/den < 10^e; the value then has e digits before the
  // point (e <= 0 means leading zeros after the point).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  while (cmp_pow10(num, den, e) >= 0) ++e;
  while (cmp_pow10(num, den, e - 1) < 0) --e;

  // sig-digit mantissa m with value ~ m * 10^(e - sig).
  const long shift = sig - e;
  BigInt m = (shift >= 0) ? div_round_half_even(num * pow10(shift), den)
                          : div_round_half_even(num, den * pow10(-shift));
  std::string digits = m.get_str();
  if (static_cast<long>(digits.size()) > sig) {
    // Rounding carried into a new leading digit (e.g. 0.999... -> 1.00...).
    ++e;
    digits.pop_back();  // trailing digit is 0 after such a carry
  }
  assert(static_cast<long>(digits.size()) == sig);

  if (e >= sig) return digits + std::string(static_cast<std::size_t>(e - sig), '0');
  if (e >= 1) return digits.substr(0, e) + "." + digits.substr(e);
  return "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
}

std::string decimal_truncate(const BigRat& q, int places) {
  if (places < 1) throw std::invalid_argument("places must be >= 1");
  if (sgn(q) < 0) throw std::invalid_argument("negative value");
  const BigInt scale = pow10(places);
  const BigInt v = (q.get_num() * scale) / q.get_den();
  const BigInt ip = v / scale;
  std::string frac = BigInt(v % scale).get_str();
  return ip.get_str() + "." +
         std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace sgnet
