// Test-only brute force, deliberately independent of the library: subsequences
// by bitmask, permutations by std::next_permutation.
#ifndef WILF_TESTS_BRUTE_HPP
#define WILF_TESTS_BRUTE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace brute {

using Word = std::vector<int>;

inline Word ranks(const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    int r = 1;
    for (int x : w)
      r += x < w[i];
    out[i] = r;
  }
  return out;
}

// Places (1-based) of the first occurrence in bitmask order, empty if none.
inline std::vector<int> occurrence(const Word& host, const Word& pattern) {
  std::size_t n = host.size(), m = pattern.size();
  if (m > n)
    return {};
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m)
      continue;
    Word sub;
    std::vector<int> places;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        sub.push_back(host[i]);
        places.push_back(static_cast<int>(i) + 1);
      }
    if (ranks(sub) == pattern)
      return places;
  }
  return {};
}

inline bool contains(const Word& host, const Word& pattern) {
  if (pattern.empty())
    return true;
  return !occurrence(host, pattern).empty();
}

inline bool avoids(const Word& host, const std::vector<Word>& patterns) {
  for (const auto& q : patterns)
    if (contains(host, q))
      return false;
  return true;
}

inline std::vector<Word> all_perms(int n) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do
    out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<Word> avoiders(int n, const std::vector<Word>& patterns) {
  std::vector<Word> out;
  for (auto& w : all_perms(n))
    if (avoids(w, patterns))
      out.push_back(w);
  return out;
}

// |A_sigma(n; P; t)|
inline long class_size(int n, const std::vector<Word>& patterns, const Word& sigma, const Word& t) {
  long c = 0;
  for (auto& w : avoiders(n, patterns)) {
    bool ok = true;
    for (std::size_t p = 0; p < sigma.size() && ok; ++p)
      ok = w[p] == t[static_cast<std::size_t>(sigma[p] - 1)];
    c += ok;
  }
  return c;
}

inline Word random_perm(std::mt19937& rng, int k) {
  Word w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

// Random pattern set: 1..max_size patterns of length 3 or 4.
inline std::vector<Word> random_pattern_set(std::mt19937& rng, int max_size) {
  std::uniform_int_distribution<int> size(1, max_size), len(3, 4);
  std::vector<Word> out;
  int s = size(rng);
  while (static_cast<int>(out.size()) < s) {
    Word q = random_perm(rng, len(rng));
    if (std::find(out.begin(), out.end(), q) == out.end())
      out.push_back(q);
  }
  return out;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// C_n via the product formula C_{n+1} = C_n * 2(2n+1)/(n+2), exact in 128 bits
// for the sizes used in tests.
inline unsigned __int128 catalan(int n) {
  unsigned __int128 c = 1;
  for (int i = 0; i < n; ++i)
    c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace brute

#endif
