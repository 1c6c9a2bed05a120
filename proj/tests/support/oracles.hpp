#pragma once

// Reference implementations written without the monadic library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// Distinct permutations by inserting the head at every position of every
/// permutation of the tail.
inline std::set<std::vector<int>> insertion_perms(const std::vector<int>& s) {
  if (s.empty()) return {{}};
  const std::vector<int> tail(s.begin() + 1, s.end());
  std::set<std::vector<int>> out;
  for (const auto& p : insertion_perms(tail)) {
    for (std::size_t k = 0; k <= p.size(); ++k) {
      auto q = p;
      q.insert(q.begin() + static_cast<std::ptrdiff_t>(k), s.front());
      out.insert(q);
    }
  }
  return out;
}

/// Splits by bitmask: bit k set sends s[k] to the left part.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> mask_splits(const std::vector<int>& s) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
    std::pair<std::vector<int>, std::vector<int>> lr;
    for (std::size_t k = 0; k < s.size(); ++k) ((mask >> k) & 1 ? lr.first : lr.second).push_back(s[k]);
    out.insert(lr);
  }
  return out;
}

/// Insertion sort.
inline std::vector<int> sorted(std::vector<int> xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    for (std::size_t j = i; j > 0 && xs[j - 1] > xs[j]; --j) std::swap(xs[j - 1], xs[j]);
  }
  return xs;
}

inline std::uint64_t product(const std::vector<std::uint64_t>& s) {
  std::uint64_t p = 1;
  for (auto x : s) p *= x;
  return p;
}

/// Every list of length at most max_len over {0..alphabet-1}, by counting.
inline std::vector<std::vector<int>> lists_upto(std::size_t max_len, int alphabet) {
  std::vector<std::vector<int>> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<int> digits(len, 0);
    while (true) {
      out.push_back(digits);
      std::size_t k = 0;
      while (k < len && ++digits[k] == alphabet) digits[k++] = 0;
      if (k == len) break;
    }
  }
  return out;
}

/// Random list generator for property tests.
inline std::vector<int> random_list(std::mt19937_64& rng, std::size_t max_len, int alphabet) {
  std::vector<int> out(rng() % (max_len + 1));
  for (auto& x : out) x = static_cast<int>(rng() % static_cast<std::uint64_t>(alphabet));
  return out;
}

}  // namespace oracle
