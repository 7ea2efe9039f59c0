#ifndef WILF_GAPS_HPP
#define WILF_GAPS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wilf {

// Strictly increasing prefix values i_1 < ... < i_k inside [1, n].
using ValueTuple = std::vector<int>;

// Throws InvalidInput unless t is strictly increasing within [1, n].
void check_tuple(std::span<const int> t, int n);

// Forced adjacencies of a prefix class of length k. Gap j (0 <= j <= k) is
// the open interval (i_j, i_{j+1}) with sentinels i_0 = 0, i_{k+1} = n + 1;
// j in the set means that interval is empty for every member.
class GapSet {
public:
  static constexpr int max_prefix = 62;

  GapSet() = default;
  explicit GapSet(int k) : k_(check_k(k)) {}
  GapSet(int k, std::span<const int> forced);

  int k() const { return k_; }
  bool contains(int j) const { return j >= 0 && j <= k_ && ((mask_ >> j) & 1u); }
  void insert(int j);
  bool empty() const { return mask_ == 0; }
  std::vector<int> elements() const;

  // True iff every forced gap of the tuple (for permutations of size n) is empty.
  bool obeyed_by(std::span<const int> t, int n) const;

  bool operator==(const GapSet&) const = default;

private:
  static int check_k(int k);

  int k_ = 0;
  std::uint64_t mask_ = 0;
};

std::string to_string(const GapSet& g);

} // namespace wilf

#endif
