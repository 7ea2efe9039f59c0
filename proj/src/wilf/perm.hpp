#ifndef WILF_PERM_HPP
#define WILF_PERM_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wilf {

// A permutation of {1..k} in one-line notation. The empty permutation is a
// valid value. Used for full permutations, forbidden patterns and prefix
// classes alike.
class Perm {
public:
  Perm() = default;
  // Throws InvalidInput unless entries are a rearrangement of 1..k.
  explicit Perm(std::vector<int> entries);
  Perm(std::initializer_list<int> entries) : Perm(std::vector<int>(entries)) {}

  static Perm identity(int k);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  // 1-based place.
  int at(int place) const { return entries_[static_cast<std::size_t>(place - 1)]; }
  // 1-based place holding the given value.
  int place_of(int value) const;

  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vec() const { return entries_; }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

private:
  std::vector<int> entries_;
};

// Replace the entries of a word of distinct integers by their ranks.
Perm reduce(std::span<const int> word);

bool contains(const Perm& host, const Perm& pattern);
// True iff the word has an occurrence of the pattern whose last element is
// the word's last entry. The word need not be reduced.
bool ends_with_occurrence(std::span<const int> word, const Perm& pattern);

// Finite set of patterns, deduplicated and sorted.
class PatternSet {
public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Perm> patterns);

  const std::vector<Perm>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }
  int max_length() const;
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  auto operator<=>(const PatternSet&) const = default;
  bool operator==(const PatternSet&) const = default;

private:
  std::vector<Perm> patterns_;
};

bool avoids_all(const Perm& host, const PatternSet& patterns);
bool avoids_all(std::span<const int> word, const PatternSet& patterns);

// The k+1 one-entry extensions of sigma; element j-1 ends in j.
std::vector<Perm> refinements(const Perm& sigma);
// Remove the entry of value rank and reduce.
Perm delete_rank(const Perm& sigma, int rank);
// reduce(sigma without its last entry)
Perm delete_last(const Perm& sigma);

Perm reverse(const Perm& p);
Perm complement(const Perm& p);
Perm inverse(const Perm& p);

// Elements of the dihedral group acting on permutation diagrams, in the
// canonical order used by symmetry search.
enum class Symmetry {
  identity,
  reverse,
  complement,
  reverse_complement,
  inverse,
  reverse_inverse,
  complement_inverse,
  reverse_complement_inverse,
};

inline constexpr Symmetry all_symmetries[] = {
    Symmetry::identity,           Symmetry::reverse,
    Symmetry::complement,         Symmetry::reverse_complement,
    Symmetry::inverse,            Symmetry::reverse_inverse,
    Symmetry::complement_inverse, Symmetry::reverse_complement_inverse,
};

std::string_view symmetry_name(Symmetry g);
Perm apply(Symmetry g, const Perm& p);
PatternSet apply(Symmetry g, const PatternSet& patterns);

struct SymmetryImage {
  Symmetry symmetry;
  PatternSet patterns;
};

// Distinct images of the set, each labelled by the first group element (in
// canonical order) producing it. The first entry is always the set itself.
std::vector<SymmetryImage> symmetry_closure(const PatternSet& patterns);

// "2413" (lengths up to 9), "[2,4,1,3]" or "" / "[]" for the empty permutation.
Perm parse_perm(std::string_view text);
// "123,132", "[[1,2,3],[1,3,2]]", "[1,2,3],[1,3,2]" or "" for the empty set.
PatternSet parse_pattern_set(std::string_view text);
// Digit form when every entry is a single digit, bracket form otherwise.
std::string to_string(const Perm& p);
std::string to_string(const PatternSet& patterns);

} // namespace wilf

template <>
struct std::hash<wilf::Perm> {
  std::size_t operator()(const wilf::Perm& p) const noexcept;
};

#endif
