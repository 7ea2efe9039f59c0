#ifndef WILF_COUNTER_HPP
#define WILF_COUNTER_HPP

#include "wilf/bigcount.hpp"
#include "wilf/gaps.hpp"
#include "wilf/scheme.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace wilf {

// Evaluates a scheme as a memoized recursion over (class, n, tuple):
// expanded classes sum over where the next entry falls, reduced classes drop
// to n - 1, zero classes and tuples breaking a forced gap count 0.
//
// Classes outside the scheme (targets of a reduction whose own prefix is
// reduced) are resolved through their longest prefix in the scheme; deleting
// a value restricts to sub-classes, so the reduction still applies.
class Counter {
public:
  // Throws IntegrityError if the scheme does not validate.
  explicit Counter(Scheme scheme, bool memoize = true);

  const Scheme& scheme() const { return scheme_; }

  BigCount count_class(const Perm& sigma, int n, const ValueTuple& t);
  BigCount count(int n);
  // Terms n = 1..length, bottom-up in n. Only the two newest layers stay
  // memoized.
  std::vector<BigCount> sequence(int length);

  // Memo entries currently held for size n.
  std::size_t memo_keys(int n) const;

private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept;
  };
  using Layer = std::unordered_map<std::vector<int>, BigCount, KeyHash>;

  int class_id(const Perm& sigma);
  BigCount evaluate(const Perm& sigma, int n, const ValueTuple& t);
  BigCount evaluate_outside(const Perm& sigma, int n, const ValueTuple& t);
  BigCount recurse(const Perm& sigma, int n, const ValueTuple& t);
  void evict_below(int n);

  Scheme scheme_;
  bool memoize_;
  std::unordered_map<Perm, int> ids_;
  std::vector<Layer> layers_;
};

BigCount count_class(const Scheme& s, const Perm& sigma, int n, const ValueTuple& t);
BigCount count(const Scheme& s, int n);
std::vector<BigCount> sequence(const Scheme& s, int length);

} // namespace wilf

#endif
