#include "wilf/perm.hpp"

#include "wilf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace wilf {

Perm::Perm(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<char> seen(entries_.size() + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw InvalidInput("not a permutation of 1.." + std::to_string(size()));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

int Perm::place_of(int value) const {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end())
    throw InvalidInput("value " + std::to_string(value) + " not in permutation");
  return static_cast<int>(it - entries_.begin()) + 1;
}

Perm reduce(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]])
      throw InvalidInput("reduce: duplicate entry " + std::to_string(word[order[r]]));
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Perm(std::move(out));
}

namespace {

// Backtracking matcher: slots are filled right to left; every newly placed
// slot is checked against the already placed ones so dead branches die early.
struct Matcher {
  std::span<const int> word;
  std::span<const int> q;
  std::vector<int> pos;

  bool consistent(std::size_t slot) const {
    for (std::size_t o = slot + 1; o < q.size(); ++o) {
      bool want = q[slot] < q[o];
      bool have = word[static_cast<std::size_t>(pos[slot])] < word[static_cast<std::size_t>(pos[o])];
      if (want != have)
        return false;
    }
    return true;
  }

  // Place slot at some position < limit.
  bool fill(std::ptrdiff_t slot, int limit) {
    if (slot < 0)
      return true;
    auto s = static_cast<std::size_t>(slot);
    for (int p = limit - 1; p >= slot; --p) {
      pos[s] = p;
      if (consistent(s) && fill(slot - 1, p))
        return true;
    }
    return false;
  }
};

} // namespace

bool contains(const Perm& host, const Perm& pattern) {
  if (pattern.size() > host.size())
    return false;
  if (pattern.empty())
    return true;
  Matcher m{host.entries(), pattern.entries(), std::vector<int>(pattern.vec().size())};
  return m.fill(pattern.size() - 1, host.size());
}

bool ends_with_occurrence(std::span<const int> word, const Perm& pattern) {
  int m = pattern.size();
  int n = static_cast<int>(word.size());
  if (m == 0 || m > n)
    return false;
  Matcher mt{word, pattern.entries(), std::vector<int>(static_cast<std::size_t>(m))};
  mt.pos[static_cast<std::size_t>(m - 1)] = n - 1;
  return mt.fill(m - 2, n - 1);
}

PatternSet::PatternSet(std::vector<Perm> patterns) : patterns_(std::move(patterns)) {
  for (const Perm& p : patterns_)
    if (p.empty())
      throw InvalidInput("patterns must have length at least 1");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

int PatternSet::max_length() const {
  int m = 0;
  for (const Perm& p : patterns_)
    m = std::max(m, p.size());
  return m;
}

bool avoids_all(const Perm& host, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Perm& q) { return contains(host, q); });
}

bool avoids_all(std::span<const int> word, const PatternSet& patterns) {
  if (word.empty())
    return true;
  return avoids_all(reduce(word), patterns);
}

std::vector<Perm> refinements(const Perm& sigma) {
  std::vector<Perm> out;
  int k = sigma.size();
  out.reserve(static_cast<std::size_t>(k + 1));
  for (int j = 1; j <= k + 1; ++j) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(k + 1));
    for (int x : sigma.entries())
      v.push_back(x >= j ? x + 1 : x);
    v.push_back(j);
    out.emplace_back(std::move(v));
  }
  return out;
}

Perm delete_rank(const Perm& sigma, int rank) {
  if (rank < 1 || rank > sigma.size())
    throw InvalidInput("delete_rank: rank " + std::to_string(rank) + " outside 1.." +
                       std::to_string(sigma.size()));
  std::vector<int> v;
  v.reserve(sigma.vec().size());
  for (int x : sigma.entries())
    if (x != rank)
      v.push_back(x > rank ? x - 1 : x);
  return Perm(std::move(v));
}

Perm delete_last(const Perm& sigma) {
  if (sigma.empty())
    throw InvalidInput("delete_last: empty permutation");
  return reduce(sigma.entries().first(sigma.vec().size() - 1));
}

Perm reverse(const Perm& p) {
  std::vector<int> v(p.vec().rbegin(), p.vec().rend());
  return Perm(std::move(v));
}

Perm complement(const Perm& p) {
  std::vector<int> v(p.vec());
  for (int& x : v)
    x = p.size() + 1 - x;
  return Perm(std::move(v));
}

Perm inverse(const Perm& p) {
  std::vector<int> v(p.vec().size());
  for (int place = 1; place <= p.size(); ++place)
    v[static_cast<std::size_t>(p.at(place) - 1)] = place;
  return Perm(std::move(v));
}

std::string_view symmetry_name(Symmetry g) {
  switch (g) {
  case Symmetry::identity: return "identity";
  case Symmetry::reverse: return "reverse";
  case Symmetry::complement: return "complement";
  case Symmetry::reverse_complement: return "reverse-complement";
  case Symmetry::inverse: return "inverse";
  case Symmetry::reverse_inverse: return "reverse-inverse";
  case Symmetry::complement_inverse: return "complement-inverse";
  case Symmetry::reverse_complement_inverse: return "reverse-complement-inverse";
  }
  return "?";
}

// Composite names read right to left: inverse is applied first.
Perm apply(Symmetry g, const Perm& p) {
  switch (g) {
  case Symmetry::identity: return p;
  case Symmetry::reverse: return reverse(p);
  case Symmetry::complement: return complement(p);
  case Symmetry::reverse_complement: return reverse(complement(p));
  case Symmetry::inverse: return inverse(p);
  case Symmetry::reverse_inverse: return reverse(inverse(p));
  case Symmetry::complement_inverse: return complement(inverse(p));
  case Symmetry::reverse_complement_inverse: return reverse(complement(inverse(p)));
  }
  return p;
}

PatternSet apply(Symmetry g, const PatternSet& patterns) {
  std::vector<Perm> out;
  out.reserve(patterns.size());
  for (const Perm& q : patterns)
    out.push_back(apply(g, q));
  return PatternSet(std::move(out));
}

std::vector<SymmetryImage> symmetry_closure(const PatternSet& patterns) {
  std::vector<SymmetryImage> out;
  for (Symmetry g : all_symmetries) {
    PatternSet image = apply(g, patterns);
    bool fresh = std::none_of(out.begin(), out.end(),
                              [&](const SymmetryImage& s) { return s.patterns == image; });
    if (fresh)
      out.push_back({g, std::move(image)});
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> v;
  body = trim(body);
  if (body.empty())
    return v;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view tok = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
    if (tok.empty() || tok.size() > 9 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad integer '" + std::string(tok) + "'");
    v.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return v;
}

Perm make_perm(std::vector<int> v, std::string_view text) {
  try {
    return Perm(std::move(v));
  } catch (const InvalidInput&) {
    throw ParseError("'" + std::string(text) + "' is not a permutation");
  }
}

} // namespace

Perm parse_perm(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty())
    return Perm();
  if (s.front() == '[') {
    if (s.back() != ']')
      throw ParseError("unterminated bracket in '" + std::string(text) + "'");
    return make_perm(parse_int_list(s.substr(1, s.size() - 2)), text);
  }
  if (s.size() > 9)
    throw ParseError("digit form is limited to length 9; use [a,b,...] for '" + std::string(text) + "'");
  std::vector<int> v;
  for (char c : s) {
    if (c < '1' || c > '9')
      throw ParseError("bad character '" + std::string(1, c) + "' in permutation '" + std::string(text) + "'");
    v.push_back(c - '0');
  }
  return make_perm(std::move(v), text);
}

PatternSet parse_pattern_set(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    std::string_view inner = trim(s.substr(1, s.size() - 2));
    if (inner.empty())
      return PatternSet();
    if (inner.front() == '[')
      s = inner;
  }
  std::vector<Perm> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
      ++i;
    if (i >= s.size())
      break;
    std::size_t j = i;
    if (s[i] == '[') {
      j = s.find(']', i);
      if (j == std::string_view::npos)
        throw ParseError("unterminated bracket in '" + std::string(text) + "'");
      ++j;
    } else {
      while (j < s.size() && s[j] != ',')
        ++j;
    }
    Perm p = parse_perm(s.substr(i, j - i));
    if (p.empty())
      throw ParseError("empty pattern in '" + std::string(text) + "'");
    out.push_back(std::move(p));
    i = j;
  }
  return PatternSet(std::move(out));
}

std::string to_string(const Perm& p) {
  std::string out;
  if (p.size() <= 9 && !p.empty()) {
    for (int x : p.entries())
      out.push_back(static_cast<char>('0' + x));
    return out;
  }
  out = "[";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1)
      out += ',';
    out += std::to_string(p.at(i));
  }
  return out + "]";
}

std::string to_string(const PatternSet& patterns) {
  std::string out = "{";
  bool first = true;
  for (const Perm& q : patterns) {
    if (!first)
      out += ',';
    first = false;
    out += to_string(q);
  }
  return out + "}";
}

} // namespace wilf

std::size_t std::hash<wilf::Perm>::operator()(const wilf::Perm& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : p.entries())
    h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
  return h;
}
