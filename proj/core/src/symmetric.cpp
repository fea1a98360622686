#include "sflab/symmetric.hpp"

#include <stdexcept>
#include <utility>

namespace sflab {

SymTuple::SymTuple(PrimeModulus mod, std::vector<Int> entries)
    : mod_(std::move(mod)), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("SymTuple: empty tuple");
  if (Int(entries_.size()) >= mod_.prime())
    throw std::invalid_argument("SymTuple: requires n < p");
  for (Int& e : entries_) e = mod_canonical(e, mod_.modulus());
}

std::vector<Residue> power_sums(const SymTuple& x) {
  const int n = x.size();
  const Int& m = x.modulus().modulus();
  std::vector<Int> sums(static_cast<size_t>(n), Int(0));
  for (int l = 0; l < n; ++l) {
    Int acc = 1;
    for (int j = 0; j < n; ++j) {
      acc = (acc * x[l]) % m;
      sums[static_cast<size_t>(j)] = (sums[static_cast<size_t>(j)] + acc) % m;
    }
  }
  std::vector<Residue> out;
  out.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) out.emplace_back(x.modulus(), sums[static_cast<size_t>(j)]);
  return out;
}

std::vector<Residue> elementary_symmetric(const SymTuple& x) {
  const int n = x.size();
  const Int& m = x.modulus().modulus();
  // e[j] after processing l entries holds e_j of the prefix.
  std::vector<Int> e(static_cast<size_t>(n) + 1, Int(0));
  e[0] = 1;
  for (int l = 0; l < n; ++l) {
    for (int j = std::min(l + 1, n); j >= 1; --j) {
      e[static_cast<size_t>(j)] =
          (e[static_cast<size_t>(j)] + x[l] * e[static_cast<size_t>(j) - 1]) % m;
    }
  }
  std::vector<Residue> out;
  out.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) out.emplace_back(x.modulus(), e[static_cast<size_t>(j)]);
  return out;
}

std::vector<Residue> newton_power_to_elementary(std::span<const Residue> powers) {
  if (powers.empty()) throw std::invalid_argument("newton_power_to_elementary: empty input");
  const PrimeModulus& mod = powers.front().modulus();
  const int n = static_cast<int>(powers.size());
  if (Int(n) >= mod.prime())
    throw HypothesisError("newton_power_to_elementary: needs p > n so 1..n are units");
  const Int& m = mod.modulus();

  std::vector<Int> e(static_cast<size_t>(n) + 1, Int(0));
  e[0] = 1;
  for (int j = 1; j <= n; ++j) {
    Int acc = 0;
    for (int i = 1; i <= j; ++i) {
      Int term = (e[static_cast<size_t>(j - i)] * powers[static_cast<size_t>(i - 1)].rep()) % m;
      if (i % 2 == 0) term = m - term;
      acc = (acc + term) % m;
    }
    e[static_cast<size_t>(j)] = (acc * mod_inverse(Int(j), m)) % m;
  }
  std::vector<Residue> out;
  out.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) out.emplace_back(mod, e[static_cast<size_t>(j)]);
  return out;
}

std::vector<Residue> monic_from_roots(const SymTuple& x) {
  const int n = x.size();
  const Int& m = x.modulus().modulus();
  // coeff[j] = coefficient of X^j; expand prod (X - x_l) incrementally.
  std::vector<Int> coeff(static_cast<size_t>(n) + 1, Int(0));
  coeff[0] = 1;
  for (int l = 0; l < n; ++l) {
    for (int j = l + 1; j >= 1; --j) {
      Int shifted = coeff[static_cast<size_t>(j) - 1];
      Int scaled = (coeff[static_cast<size_t>(j)] * x[l]) % m;
      coeff[static_cast<size_t>(j)] = mod_canonical(shifted - scaled, m);
    }
    coeff[0] = mod_canonical(coeff[0] * (m - x[l] % m), m);
  }
  std::vector<Residue> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) out.emplace_back(x.modulus(), coeff[static_cast<size_t>(j)]);
  return out;
}

}  // namespace sflab
