#include "sflab/numeric.hpp"

#include <stdexcept>

namespace sflab {

Int pow_int(const Int& base, unsigned exp) {
  Int result = 1;
  Int b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Int mod_canonical(const Int& value, const Int& m) {
  Int r = value % m;
  if (r < 0) r += m;
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  // Extended Euclid on (a mod m, m).
  Int old_r = mod_canonical(a, m);
  Int r = m;
  Int old_s = 1;
  Int s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: element is not a unit");
  return mod_canonical(old_s, m);
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Rat rat(const Int& num, const Int& den) { return Rat(num, den); }

Int rat_floor(const Rat& q) {
  Int n = numerator(q);
  Int d = denominator(q);  // canonical: d > 0
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

}  // namespace sflab
