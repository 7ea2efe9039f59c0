#include "wilf/counter.hpp"

#include "wilf/errors.hpp"
#include "wilf/oracle.hpp"

namespace wilf {

std::size_t Counter::KeyHash::operator()(const std::vector<int>& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : key)
    h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
  return h;
}

Counter::Counter(Scheme scheme, bool memoize) : scheme_(std::move(scheme)), memoize_(memoize) {
  auto problems = validate(scheme_);
  if (!problems.empty())
    throw IntegrityError("scheme does not validate: " + problems.front());
}

int Counter::class_id(const Perm& sigma) {
  auto [it, fresh] = ids_.try_emplace(sigma, static_cast<int>(ids_.size()));
  return it->second;
}

std::size_t Counter::memo_keys(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= layers_.size())
    return 0;
  return layers_[static_cast<std::size_t>(n)].size();
}

BigCount Counter::count_class(const Perm& sigma, int n, const ValueTuple& t) {
  if (n < 0)
    throw InvalidInput("n must be nonnegative");
  if (static_cast<int>(t.size()) != sigma.size())
    throw InvalidInput("tuple length must equal prefix length");
  check_tuple(t, n);
  return recurse(sigma, n, t);
}

BigCount Counter::recurse(const Perm& sigma, int n, const ValueTuple& t) {
  if (!memoize_)
    return evaluate(sigma, n, t);
  std::vector<int> key;
  key.reserve(t.size() + 1);
  key.push_back(class_id(sigma));
  key.insert(key.end(), t.begin(), t.end());
  if (static_cast<std::size_t>(n) >= layers_.size())
    layers_.resize(static_cast<std::size_t>(n) + 1);
  auto& layer = layers_[static_cast<std::size_t>(n)];
  if (auto it = layer.find(key); it != layer.end())
    return it->second;
  BigCount value = evaluate(sigma, n, t);
  // evaluate() may have grown layers_, so look the layer up again.
  layers_[static_cast<std::size_t>(n)].emplace(std::move(key), value);
  return value;
}

BigCount Counter::evaluate(const Perm& sigma, int n, const ValueTuple& t) {
  int k = sigma.size();
  if (scheme_.zero.contains(sigma))
    return 0;
  auto ex = scheme_.expa.find(sigma);
  auto re = scheme_.redu.find(sigma);
  if (ex != scheme_.expa.end() && !ex->second.gaps.obeyed_by(t, n))
    return 0;
  if (re != scheme_.redu.end() && !re->second.gaps.obeyed_by(t, n))
    return 0;
  if (k == n)
    return avoids_all(sigma, scheme_.patterns) ? 1 : 0;

  if (ex != scheme_.expa.end()) {
    const auto& children = ex->second.refinements;
    BigCount total = 0;
    ValueTuple child(t.size() + 1);
    for (int j = 1; j <= k + 1; ++j) {
      int lo = j == 1 ? 0 : t[static_cast<std::size_t>(j - 2)];
      int hi = j == k + 1 ? n + 1 : t[static_cast<std::size_t>(j - 1)];
      if (hi - lo < 2)
        continue;
      std::copy(t.begin(), t.begin() + (j - 1), child.begin());
      std::copy(t.begin() + (j - 1), t.end(), child.begin() + j);
      for (int r = lo + 1; r < hi; ++r) {
        child[static_cast<std::size_t>(j - 1)] = r;
        total += recurse(children[static_cast<std::size_t>(j - 1)], n, child);
      }
    }
    return total;
  }
  if (re != scheme_.redu.end()) {
    int r = re->second.delete_rank;
    return recurse(delete_rank(sigma, r), n - 1, drop_rank(t, r));
  }
  return evaluate_outside(sigma, n, t);
}

BigCount Counter::evaluate_outside(const Perm& sigma, int n, const ValueTuple& t) {
  int k = sigma.size();
  for (int m = 1; m <= k; ++m) {
    Perm head = reduce(sigma.entries().first(static_cast<std::size_t>(m)));
    if (scheme_.expa.contains(head))
      continue;
    if (scheme_.zero.contains(head))
      return 0;
    auto re = scheme_.redu.find(head);
    if (re == scheme_.redu.end())
      throw IntegrityError("class " + to_string(sigma) + " is not covered by the scheme (prefix " + to_string(head) +
                           " missing)");
    ValueTuple sub;
    for (int p = 1; p <= m; ++p)
      sub.push_back(t[static_cast<std::size_t>(sigma.at(p) - 1)]);
    std::sort(sub.begin(), sub.end());
    if (!re->second.gaps.obeyed_by(sub, n))
      return 0;
    int rank = sigma.at(head.place_of(re->second.delete_rank));
    return recurse(delete_rank(sigma, rank), n - 1, drop_rank(t, rank));
  }
  throw IntegrityError("class " + to_string(sigma) + " is expanded past the scheme");
}

BigCount Counter::count(int n) { return count_class(Perm(), n, {}); }

void Counter::evict_below(int n) {
  for (int m = 0; m < n && static_cast<std::size_t>(m) < layers_.size(); ++m)
    Layer().swap(layers_[static_cast<std::size_t>(m)]);
}

std::vector<BigCount> Counter::sequence(int length) {
  if (length < 1)
    throw InvalidInput("sequence length must be at least 1");
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int n = 1; n <= length; ++n) {
    out.push_back(count(n));
    evict_below(n - 1);
  }
  return out;
}

BigCount count_class(const Scheme& s, const Perm& sigma, int n, const ValueTuple& t) {
  return Counter(s).count_class(sigma, n, t);
}

BigCount count(const Scheme& s, int n) { return Counter(s).count(n); }

std::vector<BigCount> sequence(const Scheme& s, int length) { return Counter(s).sequence(length); }

} // namespace wilf
