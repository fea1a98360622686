#pragma once

#include <span>
#include <vector>

#include "sflab/padic.hpp"

namespace sflab {

// An ordered point of (Z/p^M)^n.  Requires 1 <= n < p so that 1..n are units
// mod p^M, which the Girard-Newton inversion depends on.
class SymTuple {
 public:
  SymTuple(PrimeModulus mod, std::vector<Int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const PrimeModulus& modulus() const { return mod_; }
  const Int& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<Int>& entries() const { return entries_; }
  Residue at(int i) const { return Residue(mod_, entries_[static_cast<size_t>(i)]); }

 private:
  PrimeModulus mod_;
  std::vector<Int> entries_;
};

// p_j(x) = sum_l x_l^j for j = 1..n.
std::vector<Residue> power_sums(const SymTuple& x);

// e_j(x) for j = 1..n, by incremental expansion of prod (X + x_l).
std::vector<Residue> elementary_symmetric(const SymTuple& x);

// Girard-Newton:  j*e_j = sum_{i=1}^{j} (-1)^(i-1) e_{j-i} p_i, solved
// ascending in j.  Throws HypothesisError unless p > n.
std::vector<Residue> newton_power_to_elementary(std::span<const Residue> powers);

// Coefficients of prod (X - x_l), constant term first, leading term 1.
std::vector<Residue> monic_from_roots(const SymTuple& x);

}  // namespace sflab
