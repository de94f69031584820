#pragma once

#include <initializer_list>
#include <vector>

#include "dtknot/errors.hpp"

namespace dtknot {

/// Ordered tuple (l_1, ..., l_p) of non-negative integers together with its
/// total k and partial sums s_i = l_1 + ... + l_i.  The empty composition
/// (p = 0) exists only for total 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  int num_parts() const { return static_cast<int>(parts_.size()); }
  int total() const { return sums_.empty() ? 0 : sums_.back(); }
  /// l_{i+1} for 0-based i.
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  /// s_{i+1} = l_1 + ... + l_{i+1} for 0-based i.
  int partial_sum(int i) const { return sums_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  std::vector<int> sums_;
};

/// All compositions of k into exactly p non-negative parts, in lexicographic
/// order: (0,...,0,k) first, (k,0,...,0) last.  There are C(k+p-1, p-1).
std::vector<Composition> compositions(int k, int p);

/// The twist exponent of a composition of k:
///   sum 2 s_i (s_i - 2k + 1)  +  sum l_i (l_i + 3) / 2  +  2 sum s_i l_{i+1},
/// where the first and last sums run over i = 1..p-1.
/// Throws SumMismatchError unless the parts add up to k.
long long phi(const Composition& l, int k);

}  // namespace dtknot
