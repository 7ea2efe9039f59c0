#ifndef WILF_REASONER_HPP
#define WILF_REASONER_HPP

#include "wilf/gaps.hpp"
#include "wilf/perm.hpp"

#include <optional>
#include <vector>

namespace wilf {

// Where a pattern slot lands relative to a prefix class of length k: one of
// the prefix places 1..k, or a symbolic suffix entry u_1..u_s. Every prefix
// place precedes every suffix symbol, and symbols are position-ordered by
// index.
struct Descriptor {
  enum class Kind { prefix, suffix };
  Kind kind = Kind::prefix;
  int index = 0;

  static Descriptor place(int t) { return {Kind::prefix, t}; }
  static Descriptor symbol(int u) { return {Kind::suffix, u}; }
  bool is_prefix() const { return kind == Kind::prefix; }
  bool operator==(const Descriptor&) const = default;
};

// A hypothetical occurrence of a pattern: slot x of the pattern (0-based
// vector index) is mapped to slots[x].
struct Event {
  Perm pattern;
  std::vector<Descriptor> slots;

  int symbol_count() const;
  bool uses_place(int t) const;
  bool operator==(const Event&) const = default;
};

// Throws InvalidInput unless the embedding is injective, position-increasing
// and its symbols are u_1..u_s in order.
void check_event(const Perm& sigma, const Event& ev);

// What an event forces on its suffix symbols. Bounds are in prefix ranks:
// u > i_{lower[u]} and u < i_{upper[u]}, with i_0 = 0 and i_{k+1} = n + 1.
class OrderFacts {
public:
  OrderFacts(int k, std::vector<int> lower, std::vector<int> upper, std::vector<std::vector<char>> less);

  int k() const { return k_; }
  int symbols() const { return static_cast<int>(lower_.size()); }
  // 1-based symbol index.
  int lower(int u) const { return lower_[static_cast<std::size_t>(u - 1)]; }
  int upper(int u) const { return upper_[static_cast<std::size_t>(u - 1)]; }

  bool symbol_below_rank(int u, int rank) const { return upper(u) <= rank; }
  bool symbol_above_rank(int u, int rank) const { return lower(u) >= rank; }
  bool symbol_less(int u, int v) const { return less_[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] != 0; }

private:
  int k_;
  std::vector<int> lower_;
  std::vector<int> upper_;
  std::vector<std::vector<char>> less_;
};

// nullopt means the event is vacuous: no permutation obeying the gap set can
// realize it (prefix values disagree with the pattern, or some symbol has no
// open gap left to live in).
std::optional<OrderFacts> order_facts(const Perm& sigma, const GapSet& gaps, const Event& ev);

// Every order relation the witness pattern needs between its images follows
// from the facts and the order of the prefix values.
bool implied(const Perm& sigma, const OrderFacts& facts, const Event& witness);

// An occurrence of some pattern avoiding place `excluded` (0 for none) over
// the remaining prefix places and the event's symbols, all of whose
// relations are implied.
std::optional<Event> find_bailout(const Perm& sigma, const GapSet& gaps, const Event& ev, int excluded,
                                  const PatternSet& patterns);

// Proof transcripts. Each certification appends what it examined.
struct GapProof {
  Perm sigma;
  int gap = 0;
  bool forced = false;
  std::optional<Event> witness;
};

struct EventVerdict {
  enum class Kind { vacuous, bailed_out, unresolved };
  Event event;
  Kind kind = Kind::unresolved;
  std::optional<Event> bailout;
};

struct RankProof {
  Perm sigma;
  GapSet gaps;
  int rank = 0;
  bool certified = false;
  std::vector<EventVerdict> events;
};

struct ProofLog {
  std::vector<GapProof> gaps;
  std::vector<RankProof> ranks;
};

// Single-witness forcing test for gap j: a value in (i_j, i_{j+1}) would sit
// after the prefix and complete a forbidden pattern.
bool certify_gap(const Perm& sigma, const PatternSet& patterns, int gap, const GapSet& known,
                 ProofLog* log = nullptr);

// Fixed point of certify_gap over j = 0..k.
GapSet compute_gap_set(const Perm& sigma, const PatternSet& patterns, ProofLog* log = nullptr);

// Every event through the entry of value `rank` is vacuous or bailed out by
// an occurrence that does not use it.
bool certify_deletable(const Perm& sigma, const PatternSet& patterns, const GapSet& gaps, int rank,
                       ProofLog* log = nullptr);

// Smallest certified rank.
std::optional<int> find_deletable_rank(const Perm& sigma, const PatternSet& patterns, const GapSet& gaps,
                                       ProofLog* log = nullptr);

} // namespace wilf

#endif
