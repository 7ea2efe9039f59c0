#ifndef WILF_SCHEME_HPP
#define WILF_SCHEME_HPP

#include "wilf/gaps.hpp"
#include "wilf/perm.hpp"
#include "wilf/reasoner.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wilf {

enum class SchemeMode { certified, empirical };

std::string_view mode_name(SchemeMode m);

// A class reduced by deleting one prefix value.
struct ReduEntry {
  int delete_rank = 0;
  GapSet gaps;
  bool operator==(const ReduEntry&) const = default;
};

// A class split by where the next entry falls. refinements[j-1] ends in j.
struct ExpaEntry {
  GapSet gaps;
  std::vector<Perm> refinements;
  bool operator==(const ExpaEntry&) const = default;
};

// Prefix scheme: expanded classes, reduced classes and classes whose prefix
// already contains a forbidden pattern.
struct Scheme {
  PatternSet patterns;
  SchemeMode mode = SchemeMode::certified;
  std::map<Perm, ExpaEntry> expa;
  std::map<Perm, ReduEntry> redu;
  std::set<Perm> zero;

  // Longest prefix among the members.
  int depth() const;
  bool operator==(const Scheme&) const = default;
};

// Structural violations; empty means well-formed. Correctness of the
// recorded ranks and gaps is not re-derived.
std::vector<std::string> validate(const Scheme& s);

// Breadth-first discovery from the empty prefix using the rigorous
// certifier. nullopt when a class of length max_depth would need expanding.
std::optional<Scheme> search(const PatternSet& patterns, int max_depth, ProofLog* log = nullptr);

// Same skeleton with the brute-force certifier up to the given horizon.
std::optional<Scheme> empirical_search(const PatternSet& patterns, int max_depth, int horizon);

struct SymmetricScheme {
  Scheme scheme; // for the image of the input under `symmetry`
  Symmetry symmetry;
};

// Tries the distinct symmetry images in canonical order.
std::optional<SymmetricScheme> search_with_symmetries(const PatternSet& patterns, int max_depth,
                                                      ProofLog* log = nullptr);
std::optional<SymmetricScheme> empirical_search_with_symmetries(const PatternSet& patterns, int max_depth,
                                                                int horizon);

// JSON document, one object plus a trailing newline.
std::string serialize(const Scheme& s);
// Throws ParseError on malformed JSON or shape, IntegrityError when the
// document does not validate.
Scheme deserialize(std::string_view document);

std::string proof_log_json(const ProofLog& log);

} // namespace wilf

#endif
