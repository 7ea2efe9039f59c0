#include "wilf/oracle.hpp"

#include "wilf/errors.hpp"
#include "wilf/threads.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace wilf {

namespace {

// Depth-first prefix extension over values 1..n. A prefix that already
// contains a pattern cannot be completed, so its branch is cut.
class AvoiderWalk {
public:
  AvoiderWalk(int n, const PatternSet& patterns) : n_(n), patterns_(patterns), used_(static_cast<std::size_t>(n) + 1) {
    word_.reserve(static_cast<std::size_t>(n));
  }

  // Try to append v; false if v is taken or completes a forbidden occurrence.
  bool push(int v) {
    if (used_[static_cast<std::size_t>(v)])
      return false;
    word_.push_back(v);
    for (const Perm& q : patterns_) {
      if (ends_with_occurrence(word_, q)) {
        word_.pop_back();
        return false;
      }
    }
    used_[static_cast<std::size_t>(v)] = 1;
    return true;
  }

  void pop() {
    used_[static_cast<std::size_t>(word_.back())] = 0;
    word_.pop_back();
  }

  template <class Visit>
  void walk(Visit&& visit) {
    if (static_cast<int>(word_.size()) == n_) {
      visit(word_);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (push(v)) {
        walk(visit);
        pop();
      }
    }
  }

  int n() const { return n_; }

private:
  int n_;
  const PatternSet& patterns_;
  std::vector<char> used_;
  std::vector<int> word_;
};

} // namespace

std::vector<Perm> enumerate_avoiders(int n, const PatternSet& patterns) {
  if (n < 0)
    throw InvalidInput("n must be nonnegative");
  std::vector<Perm> out;
  AvoiderWalk w(n, patterns);
  w.walk([&](const std::vector<int>& word) { out.emplace_back(word); });
  return out;
}

BigCount count_avoiders(int n, const PatternSet& patterns) {
  if (n < 0)
    throw InvalidInput("n must be nonnegative");
  if (n == 0)
    return 1;
  std::vector<std::uint64_t> per_first(static_cast<std::size_t>(n) + 1, 0);
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int first = next++; first <= n; first = next++) {
      AvoiderWalk w(n, patterns);
      if (!w.push(first))
        continue;
      std::uint64_t c = 0;
      w.walk([&](const std::vector<int>&) { ++c; });
      per_first[static_cast<std::size_t>(first)] = c;
    }
  };
  int threads = std::min(thread_cap(), n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back(worker);
  }
  BigCount total = 0;
  for (std::uint64_t c : per_first)
    total += c;
  return total;
}

std::vector<Perm> prefix_class_members(int n, const PatternSet& patterns, const Perm& sigma, const ValueTuple& t) {
  if (static_cast<int>(t.size()) != sigma.size())
    throw InvalidInput("tuple length must equal prefix length");
  check_tuple(t, n);
  std::vector<Perm> out;
  AvoiderWalk w(n, patterns);
  for (int place = 1; place <= sigma.size(); ++place)
    if (!w.push(t[static_cast<std::size_t>(sigma.at(place) - 1)]))
      return out;
  w.walk([&](const std::vector<int>& word) { out.emplace_back(word); });
  return out;
}

ValueTuple drop_rank(const ValueTuple& t, int rank) {
  ValueTuple out;
  out.reserve(t.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (static_cast<int>(a) + 1 == rank)
      continue;
    out.push_back(static_cast<int>(a) + 1 > rank ? t[a] - 1 : t[a]);
  }
  return out;
}

EmpiricalOracle::EmpiricalOracle(PatternSet patterns, int horizon)
    : patterns_(std::move(patterns)), horizon_(horizon) {
  if (horizon < 0)
    throw InvalidInput("horizon must be nonnegative");
  for (int n = 0; n <= horizon; ++n)
    avoiders_.push_back(enumerate_avoiders(n, patterns_));
}

std::map<ValueTuple, std::uint64_t> EmpiricalOracle::class_sizes(const Perm& sigma, int n) const {
  std::map<ValueTuple, std::uint64_t> out;
  int k = sigma.size();
  if (n < k || n > horizon_)
    return out;
  ValueTuple t(static_cast<std::size_t>(k));
  for (const Perm& pi : avoiders_[static_cast<std::size_t>(n)]) {
    bool same_shape = true;
    for (int a = 1; a <= k && same_shape; ++a)
      for (int b = a + 1; b <= k && same_shape; ++b)
        same_shape = (pi.at(a) < pi.at(b)) == (sigma.at(a) < sigma.at(b));
    if (!same_shape)
      continue;
    for (int a = 1; a <= k; ++a)
      t[static_cast<std::size_t>(sigma.at(a) - 1)] = pi.at(a);
    ++out[t];
  }
  return out;
}

GapSet EmpiricalOracle::gap_set(const Perm& sigma) const {
  int k = sigma.size();
  std::vector<char> seen_open(static_cast<std::size_t>(k) + 1, 0);
  for (int n = k; n <= horizon_; ++n) {
    for (const auto& [t, count] : class_sizes(sigma, n)) {
      for (int j = 0; j <= k; ++j) {
        int lo = j == 0 ? 0 : t[static_cast<std::size_t>(j - 1)];
        int hi = j == k ? n + 1 : t[static_cast<std::size_t>(j)];
        if (hi > lo + 1)
          seen_open[static_cast<std::size_t>(j)] = 1;
      }
    }
  }
  GapSet g(k);
  for (int j = 0; j <= k; ++j)
    if (!seen_open[static_cast<std::size_t>(j)])
      g.insert(j);
  return g;
}

namespace {

// All strictly increasing k-tuples in [1, n], lexicographic.
template <class Visit>
void for_each_tuple(int k, int n, Visit&& visit) {
  ValueTuple t(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int idx, int lo) -> void {
    if (idx == k) {
      visit(t);
      return;
    }
    for (int v = lo; v <= n - (k - idx - 1); ++v) {
      t[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

} // namespace

bool EmpiricalOracle::deletable(const Perm& sigma, const GapSet& gaps, int rank) const {
  int k = sigma.size();
  if (rank < 1 || rank > k)
    throw InvalidInput("rank outside 1.." + std::to_string(k));
  Perm smaller = delete_rank(sigma, rank);
  for (int n = std::max(k, 1); n <= horizon_; ++n) {
    auto big = class_sizes(sigma, n);
    auto small = class_sizes(smaller, n - 1);
    bool ok = true;
    for_each_tuple(k, n, [&](const ValueTuple& t) {
      if (!ok || !gaps.obeyed_by(t, n))
        return;
      auto b = big.find(t);
      auto s = small.find(drop_rank(t, rank));
      std::uint64_t bc = b == big.end() ? 0 : b->second;
      std::uint64_t sc = s == small.end() ? 0 : s->second;
      ok = bc == sc;
    });
    if (!ok)
      return false;
  }
  return true;
}

GapSet empirical_gap_set(const Perm& sigma, const PatternSet& patterns, int horizon) {
  if (horizon < sigma.size())
    throw InvalidInput("horizon must be at least the prefix length");
  return EmpiricalOracle(patterns, horizon).gap_set(sigma);
}

bool empirical_deletable(const Perm& sigma, const PatternSet& patterns, const GapSet& gaps, int rank, int horizon) {
  return EmpiricalOracle(patterns, horizon).deletable(sigma, gaps, rank);
}

} // namespace wilf
