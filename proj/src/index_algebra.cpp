#include "twistor/index_algebra.hpp"

#include <algorithm>

namespace twistor {

SignedIndex reduce(const std::vector<int>& seq) {
  SignedIndex out;
  out.sign = 1;
  std::vector<int>& v = out.index;
  v.reserve(seq.size());
  // Signed insertion sort; equal neighbours cancel immediately at cost -1.
  for (int x : seq) {
    size_t pos = v.size();
    while (pos > 0 && v[pos - 1] > x) {
      --pos;
      out.sign = -out.sign;
    }
    if (pos > 0 && v[pos - 1] == x) {
      v.erase(v.begin() + static_cast<long>(pos) - 1);
      out.sign = -out.sign;
    } else {
      v.insert(v.begin() + static_cast<long>(pos), x);
    }
  }
  return out;
}

SignedIndex compose(const SignedIndex& a, const SignedIndex& b) {
  std::vector<int> cat = a.index;
  cat.insert(cat.end(), b.index.begin(), b.index.end());
  SignedIndex r = reduce(cat);
  r.sign *= a.sign * b.sign;
  return r;
}

std::vector<SignedIndex> subsequences(int n, int k) {
  if (k < 0 || k > n) throw Error("subsequences: k out of range");
  std::vector<SignedIndex> out;
  std::vector<int> cur;
  // Lexicographic enumeration by recursion on the first entry.
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(SignedIndex{cur, 1});
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

bool contains(const std::vector<int>& index, int v) {
  return std::binary_search(index.begin(), index.end(), v);
}

SignedIndex reduce_prepend(std::initializer_list<int> prefix, const std::vector<int>& idx) {
  std::vector<int> cat(prefix);
  cat.insert(cat.end(), idx.begin(), idx.end());
  return reduce(cat);
}

}  // namespace twistor
