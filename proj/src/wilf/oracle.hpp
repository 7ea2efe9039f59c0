#ifndef WILF_ORACLE_HPP
#define WILF_ORACLE_HPP

#include "wilf/bigcount.hpp"
#include "wilf/gaps.hpp"
#include "wilf/perm.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace wilf {

// Brute-force ground truth. Everything here is exponential in n and meant
// for n up to about 10.

// Members of A(n; P) in lexicographic order.
std::vector<Perm> enumerate_avoiders(int n, const PatternSet& patterns);
// |A(n; P)| without materializing the list. Splits work over first entries
// (capped by WILF_THREADS).
BigCount count_avoiders(int n, const PatternSet& patterns);
// Avoiders whose first |sigma| entries are t[sigma_1 - 1], ..., t[sigma_k - 1].
std::vector<Perm> prefix_class_members(int n, const PatternSet& patterns, const Perm& sigma,
                                       const ValueTuple& t);

// Default horizon for empirical checks.
inline constexpr int default_horizon = 8;

// Caches all avoiders up to a horizon N and answers class-level questions by
// scanning them: which gaps are never open, and whether deleting a rank is a
// cardinality-preserving map for every n <= N.
class EmpiricalOracle {
public:
  EmpiricalOracle(PatternSet patterns, int horizon);

  const PatternSet& patterns() const { return patterns_; }
  int horizon() const { return horizon_; }

  // Tuple -> |A_sigma(n; P; tuple)| for the tuples with a nonempty class.
  std::map<ValueTuple, std::uint64_t> class_sizes(const Perm& sigma, int n) const;

  GapSet gap_set(const Perm& sigma) const;
  bool deletable(const Perm& sigma, const GapSet& gaps, int rank) const;

private:
  PatternSet patterns_;
  int horizon_;
  std::vector<std::vector<Perm>> avoiders_;
};

GapSet empirical_gap_set(const Perm& sigma, const PatternSet& patterns, int horizon);
bool empirical_deletable(const Perm& sigma, const PatternSet& patterns, const GapSet& gaps, int rank,
                         int horizon);

// Tuple with i_r dropped and later values decremented.
ValueTuple drop_rank(const ValueTuple& t, int rank);

} // namespace wilf

#endif
