#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sflab {

// All number-theoretic logic runs on arbitrary-precision integers and exact
// rationals; doubles only ever hold complex amplitudes and geometry.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int pow_int(const Int& base, unsigned exp);

// Canonical representative in [0, m).
Int mod_canonical(const Int& value, const Int& m);

// Inverse of a mod m via extended Euclid.  Throws std::invalid_argument if
// gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

// Deterministic trial division; inputs here are desk-scale primes.
bool is_prime(const Int& p);

Rat rat(const Int& num, const Int& den);

Int rat_ceil(const Rat& q);
Int rat_floor(const Rat& q);

}  // namespace sflab
