#ifndef TWISTOR_INDEX_ALGEBRA_HPP
#define TWISTOR_INDEX_ALGEBRA_HPP

#include <vector>

#include "twistor/gauss_rat.hpp"

namespace twistor {

/// Reduced multi-index: strictly increasing entries plus a sign.
///
/// Normal form of basis subscripts under the two rewrite relations:
/// doubled adjacent entries cancel at cost -1, distinct adjacent
/// entries anticommute.
struct SignedIndex {
  std::vector<int> index;  // strictly increasing
  int sign = 1;            // +1 or -1

  bool operator==(const SignedIndex& o) const = default;
};

/// Normalizes an arbitrary generator sequence.  Total function: any
/// sequence has a unique reduced form.
SignedIndex reduce(const std::vector<int>& seq);

/// Reduction of the concatenation ab, signs multiplied.
SignedIndex compose(const SignedIndex& a, const SignedIndex& b);

/// All C(n,k) strictly increasing subsequences of (1..n), lexicographic,
/// sign +1.  Throws if k is out of range.
std::vector<SignedIndex> subsequences(int n, int k);

/// 1 if true, 0 otherwise.
inline int indicator(bool p) { return p ? 1 : 0; }

/// True iff v occurs in the (reduced) index.
bool contains(const std::vector<int>& index, int v);

/// Concatenates prefix entries in front of idx and reduces.
SignedIndex reduce_prepend(std::initializer_list<int> prefix, const std::vector<int>& idx);

}  // namespace twistor

#endif
