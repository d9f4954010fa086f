/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sgnet {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt pow2(unsigned long e);
BigInt pow3(unsigned long e);

// Canonicalized rational num/den.
BigRat make_rat(BigInt num, BigInt den);

BigInt bigint_from_u128(unsigned __int128 v);

// Floor(n/d) with ties-to-even on the true quotient; n, d > 0.
BigInt div_round_half_even(const BigInt& n, const BigInt& d);

// q >= 0 rendered to `sig` significant digits, round-half-even, plain
// positional notation ("0.222222222222", "1.00000000000").
std::string decimal_round_half_even(const BigRat& q, int sig);

// q >= 0 truncated (not rounded) to `places` digits after the point, the
// style used for the alpha ratio table ("0.2207").
std::string decimal_truncate(const BigRat& q, int places);

// Deterministic %.12g rendering for Monte Carlo estimates.
std::string format_double(double v);

}  // namespace sgnet
