#include "wilf/gaps.hpp"

#include "wilf/errors.hpp"

namespace wilf {

void check_tuple(std::span<const int> t, int n) {
  int prev = 0;
  for (int v : t) {
    if (v <= prev || v > n)
      throw InvalidInput("value tuple must be strictly increasing within [1," + std::to_string(n) + "]");
    prev = v;
  }
}

int GapSet::check_k(int k) {
  if (k < 0 || k > max_prefix)
    throw InvalidInput("prefix length " + std::to_string(k) + " unsupported");
  return k;
}

GapSet::GapSet(int k, std::span<const int> forced) : k_(check_k(k)) {
  for (int j : forced)
    insert(j);
}

void GapSet::insert(int j) {
  if (j < 0 || j > k_)
    throw InvalidInput("gap " + std::to_string(j) + " outside 0.." + std::to_string(k_));
  mask_ |= std::uint64_t{1} << j;
}

std::vector<int> GapSet::elements() const {
  std::vector<int> out;
  for (int j = 0; j <= k_; ++j)
    if (contains(j))
      out.push_back(j);
  return out;
}

bool GapSet::obeyed_by(std::span<const int> t, int n) const {
  for (int j = 0; j <= k_; ++j) {
    if (!contains(j))
      continue;
    int lo = j == 0 ? 0 : t[static_cast<std::size_t>(j - 1)];
    int hi = j == k_ ? n + 1 : t[static_cast<std::size_t>(j)];
    if (hi != lo + 1)
      return false;
  }
  return true;
}

std::string to_string(const GapSet& g) {
  std::string out = "{";
  bool first = true;
  for (int j : g.elements()) {
    if (!first)
      out += ',';
    first = false;
    out += std::to_string(j);
  }
  return out + "}";
}

} // namespace wilf
