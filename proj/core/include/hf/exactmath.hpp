#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hf/errors.hpp"

namespace hf {

// All arithmetic in this library is exact.  Int/Rat are GMP arbitrary-precision
// types; Rat values are kept canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

// num/den as a canonical rational.  den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& x);

// floor(x) as an integer (round toward minus infinity).
Int floor_rat(const Rat& x);

// floor(a/b) and ceil(a/b) for b > 0, exact at every sign of a.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// Checked narrowing for values that are small by construction (tau values,
// vertex counts, ...).  `what` names the quantity in the error message.
long long to_i64(const Int& v, const char* what);

// Widening the other way.  gmpxx has no long long constructor on LP64, so
// this is the one sanctioned crossing from machine integers to Int.
inline Int from_i64(long long v) { return Int(static_cast<long>(v)); }

// gcd(a, b) >= 0, with gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

// The inverse of a modulo m >= 2, normalized to [1, m-1].
// Throws NotInvertible when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

// Sawtooth ((x)): 0 at integers, x - floor(x) - 1/2 otherwise.
Rat sawtooth(const Rat& x);

// Dedekind sum s(h, k) = sum_{i=1}^{k-1} ((i/k)) ((hi/k)) for k >= 1, any h
// (h is reduced mod k; the summand only depends on the residue).  This is the
// definition itself, evaluated over the common denominator 4k^2; it serves as
// the slow reference for the Euclidean route below.
Rat dedekind_sum(const Int& h, const Int& k);

// Remainder chain r_0 = k, r_1 = h, r_{j+1} = r_{j-1} mod r_j, stopping at the
// first remainder equal to 1.  Requires 0 < h < k and gcd(h, k) = 1.
std::vector<Int> euclid_chain(const Int& h, const Int& k);

// Same value as dedekind_sum, computed along the remainder chain:
//   s(h,k) = 1/12 * sum_{j=1}^{n+1} (-1)^{j+1} (1 + r_j^2 + r_{j-1}^2)/(r_j r_{j-1})
//            - (1 + (-1)^n)/8
// with r_{n+1} = 1.  O(log k) instead of O(k).  Requires 0 < h < k coprime.
Rat dedekind_sum_euclid(const Int& h, const Int& k);

// Continued-fraction expansion a/b = k_1 - 1/(k_2 - 1/(...)) with all k_j >= 2,
// computed by repeated ceiling division.  Requires a > b >= 1 and gcd(a,b) = 1.
std::vector<Int> hj_expansion(const Int& a, const Int& b);

// Evaluate k_1 - 1/(k_2 - 1/(...)) exactly.  Entries must be >= 2 (this keeps
// every partial tail > 1, so no division by zero); the list must be nonempty.
Rat eval_hj(const std::vector<Int>& ks);

}  // namespace hf
