#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plbord {

// Exact rational scalar used by every geometric predicate.
using Rat = mpq_class;

std::string rat_to_string(const Rat& q);

// Accepts "p", "p/q" and plain decimal strings ("0.25", "-3.5e-2" is not
// supported; exponents never appear in our formats).
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& q);

// Nearest integer with half-up tie break (round(1/2) = 1, round(-1/2) = 0).
mpz_class round_half_up(const Rat& q);

// floor(sqrt(z)) for z >= 0.
mpz_class isqrt_floor(const mpz_class& z);

// Smallest rational of the form m/2^bits that is >= sqrt(q); q >= 0.
Rat sqrt_upper_bound(const Rat& q, unsigned bits = 16);
// Largest rational of the form m/2^bits that is <= sqrt(q); q >= 0.
Rat sqrt_lower_bound(const Rat& q, unsigned bits = 16);

// Exact comparison of sqrt(a) against r for a >= 0: returns -1, 0, +1 as
// sqrt(a) <=> r.
int compare_sqrt(const Rat& a, const Rat& r);

// Exact truth of sqrt(a) <= sqrt(b) + c, for a,b >= 0 and arbitrary c.
bool sqrt_leq_sqrt_plus(const Rat& a, const Rat& b, const Rat& c);

std::size_t hash_rat(const Rat& q);

std::size_t hash_combine(std::size_t seed, std::size_t v);

}  // namespace plbord
