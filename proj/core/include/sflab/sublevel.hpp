#pragma once

#include <cstdint>
#include <vector>

#include "sflab/padic.hpp"

namespace sflab {

// A nonempty subset of root indices {0..n-1}.
class Cluster {
 public:
  Cluster(uint32_t bits, int universe);
  static Cluster full(int universe);
  static Cluster single(int index, int universe);

  int size() const;
  int universe() const { return universe_; }
  bool contains(int index) const { return (bits_ >> index) & 1u; }
  uint32_t bits() const { return bits_; }
  std::vector<int> members() const;

  bool operator==(const Cluster& other) const {
    return bits_ == other.bits_ && universe_ == other.universe_;
  }

  // Deterministic tie-break order: smaller cluster first, then
  // lexicographic on the ascending member list.
  static bool tie_break_less(const Cluster& a, const Cluster& b);

 private:
  uint32_t bits_;
  int universe_;
};

// An n-tuple of roots at precision M with the pairwise valuation matrix
// cached.
class RootTuple {
 public:
  RootTuple(PrimeModulus mod, std::vector<Int> roots);

  int size() const { return static_cast<int>(roots_.size()); }
  const PrimeModulus& modulus() const { return mod_; }
  Residue root(int i) const { return Residue(mod_, roots_[static_cast<size_t>(i)]); }
  const Int& root_rep(int i) const { return roots_[static_cast<size_t>(i)]; }
  const ValExp& dist(int i, int j) const {
    return dist_[static_cast<size_t>(i) * roots_.size() + static_cast<size_t>(j)];
  }

  // prod_i (z - root_i) mod p^M.
  Residue eval_poly(const Residue& z) const;

 private:
  PrimeModulus mod_;
  std::vector<Int> roots_;
  std::vector<ValExp> dist_;
};

// A sublevel-set radius p^(-exponent) together with the cluster achieving it.
struct RadiusExp {
  Rat exponent;
  Cluster achieving;
};

// The Phong-Stein-Sturm radius at level eps = p^(-level_exp), in exponent
// form: the largest (E - sum_{i not in C} v(xi_j - xi_i)) / |C| over clusters
// C containing j.  Clusters whose complement holds a root indistinguishable
// from xi_j at the working precision are skipped: their candidate radius is
// +infinity and never attains the minimum.
RadiusExp pss_radius(const RootTuple& roots, int j, int level_exp);

// Same maximum restricted to valuation-closed clusters (balls around xi_j
// intersected with the root set); agrees with pss_radius by construction of
// the minimiser, and serves as an independent enumeration strategy.
RadiusExp pss_radius_valclosed(const RootTuple& roots, int j, int level_exp);

// True iff |P_xi(z)| <= p^(-level_exp), decided exactly.
bool sublevel_membership(const RootTuple& roots, const Residue& z, int level_exp);

struct PssEqualityReport {
  bool equal = false;
  uint64_t sublevel_count = 0;
  uint64_t union_count = 0;
  std::vector<Int> sublevel_only;  // capped witnesses
  std::vector<Int> union_only;
  std::vector<Rat> radius_exponents;
};

// Exhaustively compares {z mod p^E : P_xi(z) = 0 mod p^E} with the union of
// root balls of (integer-ceiled) PSS radii.
PssEqualityReport verify_pss_equality(const RootTuple& roots, int level_exp);

// C_j = B(xi_j, r_j) intersected with the root set.
Cluster self_ref_cluster(const RootTuple& roots, int j, int level_exp);

// Checks the closed-form identity r_j = (eps / prod_{i not in C_j} |...|)^(1/|C_j|)
// in exact rational arithmetic for every j.
bool verify_self_ref(const RootTuple& roots, int level_exp);

}  // namespace sflab
