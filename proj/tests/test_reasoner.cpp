#include "brute.hpp"

#include "wilf/errors.hpp"
#include "wilf/oracle.hpp"
#include "wilf/reasoner.hpp"

#include <doctest.h>

using namespace wilf;

namespace {

Perm P(const char* s) { return parse_perm(s); }
PatternSet S(const char* s) { return parse_pattern_set(s); }
GapSet G(int k, std::vector<int> forced = {}) { return GapSet(k, forced); }

Descriptor p(int t) { return Descriptor::place(t); }
Descriptor u(int i) { return Descriptor::symbol(i); }

const PatternSet three = S("1234,1324,1243");

// Does some permutation of size n with prefix shape sigma and a tuple obeying
// gaps realize the event? Brute force over all permutations.
bool realizable(const Perm& sigma, const GapSet& gaps, const Event& ev, int n) {
  int k = sigma.size();
  for (auto& w : brute::all_perms(n)) {
    brute::Word head(w.begin(), w.begin() + k);
    if (brute::ranks(head) != sigma.vec())
      continue;
    ValueTuple t = head;
    std::sort(t.begin(), t.end());
    if (!gaps.obeyed_by(t, n))
      continue;
    int s = ev.symbol_count();
    // Choose suffix positions for the symbols.
    for (std::uint32_t mask = 0; mask < (1u << (n - k)); ++mask) {
      if (__builtin_popcount(mask) != s)
        continue;
      brute::Word sub;
      std::vector<int> sym_pos;
      for (int i = 0; i < n - k; ++i)
        if (mask >> i & 1u)
          sym_pos.push_back(k + i);
      for (const auto& d : ev.slots)
        sub.push_back(d.is_prefix() ? w[static_cast<std::size_t>(d.index - 1)]
                                    : w[static_cast<std::size_t>(sym_pos[static_cast<std::size_t>(d.index - 1)])]);
      if (brute::ranks(sub) == ev.pattern.vec())
        return true;
    }
  }
  return false;
}

// Places increase and precede symbols; symbols increase and come from the event.
bool witness_well_formed(const Perm& sigma, const Event& ev, const Event& w) {
  if (static_cast<int>(w.slots.size()) != w.pattern.size())
    return false;
  int last_place = 0, last_symbol = 0;
  for (const auto& d : w.slots) {
    if (d.is_prefix()) {
      if (last_symbol || d.index <= last_place || d.index > sigma.size())
        return false;
      last_place = d.index;
    } else {
      if (d.index <= last_symbol || d.index > ev.symbol_count())
        return false;
      last_symbol = d.index;
    }
  }
  return true;
}

} // namespace

TEST_CASE("order_facts") {
  SUBCASE("delinquent 1234 through i2 of 2413") {
    Event ev{P("1234"), {p(1), u(1), u(2), u(3)}};
    auto f = order_facts(P("2413"), G(4, {4}), ev);
    REQUIRE(f.has_value());
    for (int s = 1; s <= 3; ++s)
      CHECK(f->lower(s) >= 2);
    CHECK(f->symbol_less(1, 2));
    CHECK(f->symbol_less(2, 3));
  }
  SUBCASE("symbol confined to a closed gap") {
    Event ev{P("132"), {p(1), p(2), u(1)}};
    CHECK_FALSE(order_facts(P("12"), G(2, {1}), ev).has_value());
    CHECK(order_facts(P("12"), G(2), ev).has_value());
    // Oracle agrees: 12 with i2 = i1 + 1 never has a later value between them.
    for (int n = 3; n <= 6; ++n)
      CHECK_FALSE(realizable(P("12"), G(2, {1}), ev, n));
    CHECK(realizable(P("12"), G(2), ev, 3));
  }
  SUBCASE("prefix values disagree with the pattern") {
    Event ev{P("132"), {p(1), p(2), u(1)}};
    CHECK_FALSE(order_facts(P("21"), G(2), ev).has_value());
  }
  SUBCASE("malformed events") {
    CHECK_THROWS_AS(order_facts(P("21"), G(2), Event{P("132"), {p(2), p(1), u(1)}}), InvalidInput);
    CHECK_THROWS_AS(order_facts(P("21"), G(2), Event{P("132"), {p(1), u(1), p(2)}}), InvalidInput);
    CHECK_THROWS_AS(order_facts(P("21"), G(2), Event{P("132"), {p(1), u(2), u(3)}}), InvalidInput);
    CHECK_THROWS_AS(order_facts(P("21"), G(2), Event{P("132"), {p(1), u(1)}}), InvalidInput);
    CHECK_THROWS_AS(order_facts(P("21"), G(2), Event{P("132"), {p(3), u(1), u(2)}}), InvalidInput);
  }
}

TEST_CASE("find_bailout") {
  SUBCASE("i1 bails out i2 in 2413") {
    Event ev{P("1234"), {p(1), u(1), u(2), u(3)}};
    auto w = find_bailout(P("2413"), G(4, {4}), ev, 1, three);
    REQUIRE(w.has_value());
    CHECK(*w == Event{P("1234"), {p(3), u(1), u(2), u(3)}});
  }
  SUBCASE("kal vakhomer for 21 and 123") {
    Event ev{P("123"), {p(1), u(1), u(2)}};
    auto w = find_bailout(P("21"), G(2), ev, 1, S("123"));
    REQUIRE(w.has_value());
    CHECK(*w == Event{P("123"), {p(2), u(1), u(2)}});
  }
  SUBCASE("nothing to fall back on") {
    Event ev{P("123"), {p(1), u(1), u(2)}};
    CHECK_FALSE(find_bailout(P("1"), G(1), ev, 1, S("123")).has_value());
  }
}

TEST_CASE("certify_gap") {
  CHECK(certify_gap(P("12"), S("123"), 2, G(2)));
  CHECK_FALSE(certify_gap(P("12"), S("123"), 1, G(2)));
  CHECK(brute::class_size(3, {{1, 2, 3}}, {1, 2}, {1, 3}) == 1); // 132 keeps gap 1 open
  CHECK(certify_gap(P("2413"), three, 4, G(4)));
  CHECK_THROWS_AS(certify_gap(P("12"), S("123"), 2, G(2, {2})), InvalidInput);
  CHECK_THROWS_AS(certify_gap(P("12"), S("123"), 3, G(2)), InvalidInput);
}

TEST_CASE("compute_gap_set") {
  CHECK(compute_gap_set(P("12"), S("123")) == G(2, {2}));
  CHECK(compute_gap_set(P("12"), S("132")) == G(2, {1}));
  CHECK(empirical_gap_set(P("12"), S("132"), 8) == G(2, {1}));
  CHECK(compute_gap_set(P("1"), PatternSet()) == G(1));
  CHECK(compute_gap_set(P("1"), S("12")) == G(1, {1}));
  CHECK(compute_gap_set(Perm(), S("1")) == G(0, {0}));
  CHECK(compute_gap_set(P("2413"), three) == G(4, {4}));
}

TEST_CASE("certify_deletable") {
  SUBCASE("2413 rank 2: every event through i2 is covered") {
    ProofLog log;
    CHECK(certify_deletable(P("2413"), three, G(4, {4}), 2, &log));
    REQUIRE(log.ranks.size() == 1);
    const auto& events = log.ranks.front().events;
    const std::vector<Event> paper_events{
        {P("1234"), {p(1), u(1), u(2), u(3)}}, {P("1234"), {p(1), p(4), u(1), u(2)}},
        {P("1324"), {p(1), u(1), u(2), u(3)}}, {P("1324"), {p(1), p(4), u(1), u(2)}},
        {P("1243"), {p(1), u(1), u(2), u(3)}}, {P("1243"), {p(1), p(4), u(1), u(2)}},
    };
    for (const Event& want : paper_events) {
      auto it = std::find_if(events.begin(), events.end(), [&](const EventVerdict& v) { return v.event == want; });
      REQUIRE(it != events.end());
      CHECK(it->kind == EventVerdict::Kind::bailed_out);
      REQUIRE(it->bailout.has_value());
      CHECK(it->bailout->uses_place(3));
      CHECK_FALSE(it->bailout->uses_place(1));
    }
    for (const auto& v : events)
      CHECK(v.kind != EventVerdict::Kind::unresolved);
  }
  CHECK(certify_deletable(P("21"), S("123"), G(2), 2));
  CHECK_FALSE(certify_deletable(P("1"), S("123"), G(1), 1));
  CHECK_THROWS_AS(certify_deletable(P("1"), S("123"), G(1), 2), InvalidInput);
}

TEST_CASE("find_deletable_rank") {
  CHECK(find_deletable_rank(P("12"), S("123"), G(2, {2})) == 2);
  CHECK(find_deletable_rank(P("21"), S("132"), G(2)) == 2);
  CHECK(empirical_deletable(P("21"), S("132"), G(2), 2, 8));
  CHECK_FALSE(find_deletable_rank(P("1"), S("123"), G(1)).has_value());
  CHECK_FALSE(find_deletable_rank(Perm(), S("123"), G(0)).has_value());
}

TEST_CASE("property: certifications are sound against the oracle") {
  std::mt19937 rng(424242);
  std::vector<Perm> sigmas;
  for (int k = 0; k <= 4; ++k)
    for (auto& w : brute::all_perms(k))
      sigmas.emplace_back(w);

  int certified_ranks = 0, certified_gaps = 0;
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<Perm> pats;
    for (auto& w : brute::random_pattern_set(rng, 3))
      pats.emplace_back(w);
    PatternSet set(pats);
    EmpiricalOracle oracle(set, 8);
    for (const Perm& sigma : sigmas) {
      if (!avoids_all(sigma, set))
        continue;
      ProofLog log;
      GapSet gaps = compute_gap_set(sigma, set, &log);
      CHECK(compute_gap_set(sigma, set) == gaps);
      GapSet truth = oracle.gap_set(sigma);
      for (int j : gaps.elements()) {
        CHECK_MESSAGE(truth.contains(j), to_string(set), " sigma=", to_string(sigma), " gap=", j);
        ++certified_gaps;
      }
      for (int r = 1; r <= sigma.size(); ++r) {
        if (!certify_deletable(sigma, set, gaps, r, &log))
          continue;
        ++certified_ranks;
        CHECK_MESSAGE(oracle.deletable(sigma, gaps, r), to_string(set), " sigma=", to_string(sigma), " rank=", r);
      }
      // Witnesses are well-formed and implied.
      for (const auto& rp : log.ranks) {
        int t = sigma.place_of(rp.rank);
        for (const auto& v : rp.events) {
          if (v.kind != EventVerdict::Kind::bailed_out)
            continue;
          REQUIRE(v.bailout.has_value());
          CHECK(witness_well_formed(sigma, v.event, *v.bailout));
          CHECK_FALSE(v.bailout->uses_place(t));
          auto facts = order_facts(sigma, gaps, v.event);
          REQUIRE(facts.has_value());
          CHECK(implied(sigma, *facts, *v.bailout));
        }
      }
    }
  }
  CHECK(certified_ranks > 0);
  CHECK(certified_gaps > 0);
}

TEST_CASE("property: vacuous events are unrealizable") {
  std::mt19937 rng(99);
  int checked = 0;
  for (int iter = 0; iter < 40 && checked < 30; ++iter) {
    std::vector<Perm> pats;
    for (auto& w : brute::random_pattern_set(rng, 2))
      pats.emplace_back(w);
    PatternSet set(pats);
    for (const char* sg : {"12", "21", "132", "231"}) {
      Perm sigma = P(sg);
      if (!avoids_all(sigma, set))
        continue;
      GapSet gaps = compute_gap_set(sigma, set);
      if (gaps.empty())
        continue;
      ProofLog log;
      for (int r = 1; r <= sigma.size(); ++r)
        certify_deletable(sigma, set, gaps, r, &log);
      for (const auto& rp : log.ranks)
        for (const auto& v : rp.events) {
          if (v.kind != EventVerdict::Kind::vacuous || checked >= 30)
            continue;
          ++checked;
          for (int n = sigma.size(); n <= 8; ++n)
            CHECK_FALSE(realizable(sigma, gaps, v.event, n));
        }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("determinism") {
  ProofLog a, b;
  CHECK(find_deletable_rank(P("2413"), three, G(4, {4}), &a) == find_deletable_rank(P("2413"), three, G(4, {4}), &b));
  REQUIRE(a.ranks.size() == b.ranks.size());
  for (std::size_t i = 0; i < a.ranks.size(); ++i) {
    REQUIRE(a.ranks[i].events.size() == b.ranks[i].events.size());
    for (std::size_t e = 0; e < a.ranks[i].events.size(); ++e)
      CHECK(a.ranks[i].events[e].bailout == b.ranks[i].events[e].bailout);
  }
}
