#include "sflab/padic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace sflab {

PrimeModulus::PrimeModulus(Int prime, int precision)
    : p_(std::move(prime)), precision_(precision) {
  if (!is_prime(p_)) throw std::invalid_argument("PrimeModulus: p must be prime");
  if (precision_ < 1) throw std::invalid_argument("PrimeModulus: precision must be >= 1");
  modulus_ = pow_int(p_, static_cast<unsigned>(precision_));
}

ValExp ValExp::exact(Rat nu) {
  if (nu < 0) throw std::invalid_argument("ValExp: valuations are non-negative here");
  return ValExp(true, std::move(nu));
}

ValExp ValExp::at_least(int precision) {
  if (precision < 0) throw std::invalid_argument("ValExp: negative truncation precision");
  return ValExp(false, Rat(precision));
}

const Rat& ValExp::exact_value() const {
  if (!exact_) throw PrecisionError("ValExp: valuation truncated at working precision");
  return value_;
}

bool ValExp::ge(const Rat& threshold) const {
  if (exact_) return value_ >= threshold;
  if (value_ >= threshold) return true;  // v >= M >= threshold
  throw PrecisionError("ValExp: comparison needs information beyond the truncation");
}

std::strong_ordering compare(const ValExp& a, const ValExp& b) {
  if (a.is_exact() && b.is_exact()) {
    const Rat& x = a.exact_value();
    const Rat& y = b.exact_value();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  if (a.is_exact()) {
    if (a.exact_value() < b.floor_value()) return std::strong_ordering::less;
    throw PrecisionError("ValExp: order undecidable against a truncated valuation");
  }
  if (b.is_exact()) {
    if (b.exact_value() < a.floor_value()) return std::strong_ordering::greater;
    throw PrecisionError("ValExp: order undecidable against a truncated valuation");
  }
  throw PrecisionError("ValExp: order of two truncated valuations is undecidable");
}

ValExp min_val(const ValExp& a, const ValExp& b) {
  if (a.is_exact() && b.is_exact())
    return a.exact_value() <= b.exact_value() ? a : b;
  if (a.is_exact())
    return a.exact_value() <= b.floor_value() ? a : b;
  if (b.is_exact())
    return b.exact_value() <= a.floor_value() ? b : a;
  return a.floor_value() <= b.floor_value() ? a : b;
}

ValExp max_val(const ValExp& a, const ValExp& b) {
  if (a.is_exact() && b.is_exact())
    return a.exact_value() >= b.exact_value() ? a : b;
  if (a.is_exact()) {
    if (a.exact_value() <= b.floor_value()) return b;
    throw PrecisionError("ValExp: max against a coarser truncation is undecidable");
  }
  if (b.is_exact()) {
    if (b.exact_value() <= a.floor_value()) return a;
    throw PrecisionError("ValExp: max against a coarser truncation is undecidable");
  }
  return a.floor_value() >= b.floor_value() ? a : b;
}

Residue::Residue(PrimeModulus mod, const Int& value)
    : mod_(std::move(mod)), rep_(mod_canonical(value, mod_.modulus())) {}

namespace {
void require_shared_modulus(const Residue& x, const Residue& y) {
  if (!(x.modulus() == y.modulus()))
    throw std::invalid_argument("Residue: operands have mismatched moduli");
}
}  // namespace

Residue Residue::operator+(const Residue& other) const {
  require_shared_modulus(*this, other);
  return Residue(mod_, rep_ + other.rep_);
}

Residue Residue::operator-(const Residue& other) const {
  require_shared_modulus(*this, other);
  return Residue(mod_, rep_ - other.rep_);
}

Residue Residue::operator*(const Residue& other) const {
  require_shared_modulus(*this, other);
  return Residue(mod_, rep_ * other.rep_);
}

Residue Residue::operator-() const { return Residue(mod_, -rep_); }

Residue Residue::pow(unsigned exponent) const {
  Int result = 1;
  Int base = rep_;
  unsigned e = exponent;
  const Int& m = mod_.modulus();
  while (e > 0) {
    if (e & 1u) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1u;
  }
  return Residue(mod_, result);
}

Residue Residue::reduced(int precision) const {
  if (precision < 1 || precision > mod_.precision())
    throw std::invalid_argument("Residue: invalid target precision");
  PrimeModulus coarse(mod_.prime(), precision);
  return Residue(coarse, rep_);
}

ValExp val(const Residue& x) {
  if (x.rep() == 0) return ValExp::at_least(x.modulus().precision());
  Int r = x.rep();
  const Int& p = x.modulus().prime();
  int k = 0;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  return ValExp::exact(Rat(k));
}

ValExp abs_diff(const Residue& x, const Residue& y) {
  require_shared_modulus(x, y);
  return val(x - y);
}

std::complex<double> char_e(const Int& p, const Int& num, int denom_exp) {
  if (denom_exp < 0) throw std::invalid_argument("char_e: negative denominator exponent");
  if (denom_exp == 0) return {1.0, 0.0};
  const Int pk = pow_int(p, static_cast<unsigned>(denom_exp));
  const Int frac_num = mod_canonical(num, pk);
  const long double frac = Rat(frac_num, pk).convert_to<long double>();
  const long double angle = 2.0L * std::numbers::pi_v<long double> * frac;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

bool UltraBall::contains(const Residue& z) const {
  const ValExp d = abs_diff(z, center);
  if (radius_exp.is_exact()) return d.ge(radius_exp.exact_value());
  // Radius below the working precision: only the center is decidably inside.
  if (d.is_truncated()) {
    if (Rat(center.modulus().precision()) >= radius_exp.floor_value()) return true;
    throw PrecisionError("UltraBall: membership undecidable at this precision");
  }
  if (d.exact_value() < radius_exp.floor_value()) return false;
  throw PrecisionError("UltraBall: membership undecidable at this precision");
}

BallRelation ball_relation(const UltraBall& a, const UltraBall& b) {
  if (!(a.center.modulus() == b.center.modulus()))
    throw std::invalid_argument("ball_relation: mismatched moduli");
  const int precision = a.center.modulus().precision();
  if (a.radius_exp.is_truncated() || b.radius_exp.is_truncated())
    throw PrecisionError("ball_relation: radius below the working precision");
  // Base-field points only see integer valuations, so radii act through
  // their integer ceilings.
  const Int ra = rat_ceil(a.radius_exp.exact_value());
  const Int rb = rat_ceil(b.radius_exp.exact_value());
  if (ra > precision || rb > precision)
    throw PrecisionError("ball_relation: radius below the working precision");
  const ValExp d = abs_diff(a.center, b.center);
  if (ra == rb) return d.ge(Rat(ra)) ? BallRelation::Equal : BallRelation::Disjoint;
  if (ra > rb)  // a is the smaller ball
    return d.ge(Rat(rb)) ? BallRelation::FirstInsideSecond : BallRelation::Disjoint;
  return d.ge(Rat(ra)) ? BallRelation::SecondInsideFirst : BallRelation::Disjoint;
}

}  // namespace sflab
