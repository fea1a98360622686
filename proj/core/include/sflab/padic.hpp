#pragma once

#include <compare>
#include <complex>

#include "sflab/errors.hpp"
#include "sflab/numeric.hpp"

namespace sflab {

// Working modulus p^M: elements of Z_p are known to precision M.
class PrimeModulus {
 public:
  PrimeModulus(Int prime, int precision);

  const Int& prime() const { return p_; }
  int precision() const { return precision_; }
  const Int& modulus() const { return modulus_; }

  bool operator==(const PrimeModulus& other) const {
    return p_ == other.p_ && precision_ == other.precision_;
  }

 private:
  Int p_;
  int precision_;
  Int modulus_;
};

// Valuation of an element known to finite precision.  Exact(nu) asserts
// |x| = p^(-nu); AtLeast(M) only asserts |x| <= p^(-M).  Comparisons that
// would need information beyond the truncation throw PrecisionError; min/max
// are total and return the strongest representable statement.
class ValExp {
 public:
  static ValExp exact(Rat nu);
  static ValExp at_least(int precision);

  bool is_exact() const { return exact_; }
  bool is_truncated() const { return !exact_; }

  const Rat& exact_value() const;
  // The known lower bound on the valuation (nu itself when exact).
  const Rat& floor_value() const { return value_; }

  // Decides "true valuation >= threshold".  Always decidable when the
  // threshold does not exceed the truncation precision.
  bool ge(const Rat& threshold) const;

  // Representation equality, not value equality.
  bool operator==(const ValExp& other) const {
    return exact_ == other.exact_ && value_ == other.value_;
  }

 private:
  ValExp(bool exact, Rat value) : exact_(exact), value_(std::move(value)) {}
  bool exact_;
  Rat value_;
};

std::strong_ordering compare(const ValExp& a, const ValExp& b);
ValExp min_val(const ValExp& a, const ValExp& b);
ValExp max_val(const ValExp& a, const ValExp& b);

// An element of Z/p^M in canonical form.
class Residue {
 public:
  Residue(PrimeModulus mod, const Int& value);

  const PrimeModulus& modulus() const { return mod_; }
  const Int& rep() const { return rep_; }

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator*(const Residue& other) const;
  Residue operator-() const;
  Residue pow(unsigned exponent) const;

  bool operator==(const Residue& other) const {
    return mod_ == other.mod_ && rep_ == other.rep_;
  }

  // The same element at coarser precision.
  Residue reduced(int precision) const;

 private:
  PrimeModulus mod_;
  Int rep_;
};

// v_p of the canonical representative; AtLeast(M) for the zero residue.
ValExp val(const Residue& x);

// v_p(x - y); requires a shared modulus.
ValExp abs_diff(const Residue& x, const Residue& y);

// The standard additive character evaluated at num / p^k: trivial on Z_p,
// non-principal on (1/p)Z_p.
std::complex<double> char_e(const Int& p, const Int& num, int denom_exp);

// Ball {z : v(z - center) >= radius_exp}.
struct UltraBall {
  Residue center;
  ValExp radius_exp;

  bool contains(const Residue& z) const;
};

enum class BallRelation { Disjoint, FirstInsideSecond, SecondInsideFirst, Equal };

// Ultrametric dichotomy: two balls are nested, equal or disjoint; partial
// overlap cannot occur.  Radii below the working precision are undecidable.
BallRelation ball_relation(const UltraBall& a, const UltraBall& b);

}  // namespace sflab
