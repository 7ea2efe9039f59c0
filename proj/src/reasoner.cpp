#include "wilf/reasoner.hpp"

#include "wilf/errors.hpp"

#include <algorithm>

namespace wilf {

int Event::symbol_count() const {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(), [](const Descriptor& d) { return !d.is_prefix(); }));
}

bool Event::uses_place(int t) const {
  return std::find(slots.begin(), slots.end(), Descriptor::place(t)) != slots.end();
}

void check_event(const Perm& sigma, const Event& ev) {
  if (static_cast<int>(ev.slots.size()) != ev.pattern.size())
    throw InvalidInput("event maps " + std::to_string(ev.slots.size()) + " slots for a pattern of length " +
                       std::to_string(ev.pattern.size()));
  int last_place = 0;
  int last_symbol = 0;
  for (const Descriptor& d : ev.slots) {
    if (d.is_prefix()) {
      if (last_symbol != 0 || d.index <= last_place || d.index > sigma.size())
        throw InvalidInput("event prefix places must increase within 1.." + std::to_string(sigma.size()) +
                           " and precede every suffix symbol");
      last_place = d.index;
    } else {
      if (d.index != last_symbol + 1)
        throw InvalidInput("event suffix symbols must be u1..us in order");
      last_symbol = d.index;
    }
  }
}

OrderFacts::OrderFacts(int k, std::vector<int> lower, std::vector<int> upper, std::vector<std::vector<char>> less)
    : k_(k), lower_(std::move(lower)), upper_(std::move(upper)), less_(std::move(less)) {}

std::optional<OrderFacts> order_facts(const Perm& sigma, const GapSet& gaps, const Event& ev) {
  check_event(sigma, ev);
  int k = sigma.size();
  if (gaps.k() != k)
    throw InvalidInput("gap set is for prefix length " + std::to_string(gaps.k()));
  const auto& q = ev.pattern;
  std::size_t m = ev.slots.size();

  for (std::size_t x = 0; x < m; ++x) {
    if (!ev.slots[x].is_prefix())
      continue;
    for (std::size_t y = x + 1; y < m && ev.slots[y].is_prefix(); ++y) {
      bool want = q.vec()[x] < q.vec()[y];
      bool have = sigma.at(ev.slots[x].index) < sigma.at(ev.slots[y].index);
      if (want != have)
        return std::nullopt;
    }
  }

  int s = ev.symbol_count();
  std::vector<int> lower(static_cast<std::size_t>(s), 0);
  std::vector<int> upper(static_cast<std::size_t>(s), k + 1);
  std::vector<std::size_t> slot_of(static_cast<std::size_t>(s));
  for (std::size_t y = 0; y < m; ++y) {
    if (ev.slots[y].is_prefix())
      continue;
    auto u = static_cast<std::size_t>(ev.slots[y].index - 1);
    slot_of[u] = y;
    for (std::size_t x = 0; x < m; ++x) {
      if (!ev.slots[x].is_prefix())
        continue;
      int rank = sigma.at(ev.slots[x].index);
      if (q.vec()[x] < q.vec()[y])
        lower[u] = std::max(lower[u], rank);
      else
        upper[u] = std::min(upper[u], rank);
    }
    if (lower[u] >= upper[u])
      return std::nullopt;
    bool open = false;
    for (int j = lower[u]; j < upper[u] && !open; ++j)
      open = !gaps.contains(j);
    if (!open)
      return std::nullopt;
  }

  auto us = static_cast<std::size_t>(s);
  std::vector<std::vector<char>> less(us, std::vector<char>(us, 0));
  for (std::size_t a = 0; a < us; ++a)
    for (std::size_t b = 0; b < us; ++b)
      if (a != b)
        less[a][b] = q.vec()[slot_of[a]] < q.vec()[slot_of[b]] || upper[a] <= lower[b];
  for (std::size_t c = 0; c < us; ++c)
    for (std::size_t a = 0; a < us; ++a)
      for (std::size_t b = 0; b < us; ++b)
        if (less[a][c] && less[c][b])
          less[a][b] = 1;
  for (std::size_t a = 0; a < us; ++a)
    if (less[a][a])
      return std::nullopt;
  return OrderFacts(k, std::move(lower), std::move(upper), std::move(less));
}

namespace {

// Strict order between two images, when the facts decide it.
bool implies_less(const Perm& sigma, const OrderFacts& f, const Descriptor& a, const Descriptor& b) {
  if (a.is_prefix() && b.is_prefix())
    return sigma.at(a.index) < sigma.at(b.index);
  if (a.is_prefix())
    return f.symbol_above_rank(b.index, sigma.at(a.index));
  if (b.is_prefix())
    return f.symbol_below_rank(a.index, sigma.at(b.index));
  return f.symbol_less(a.index, b.index);
}

bool slot_fits(const Perm& sigma, const OrderFacts& f, const Perm& q, const std::vector<Descriptor>& slots,
               std::size_t x) {
  for (std::size_t y = 0; y < x; ++y) {
    bool ok = q.vec()[y] < q.vec()[x] ? implies_less(sigma, f, slots[y], slots[x])
                                      : implies_less(sigma, f, slots[x], slots[y]);
    if (!ok)
      return false;
  }
  return true;
}

bool extend(const Perm& sigma, const OrderFacts& f, int excluded, const Perm& q, std::vector<Descriptor>& slots,
            std::size_t x, int last_place, int last_symbol) {
  if (x == slots.size())
    return true;
  std::size_t remaining = slots.size() - x;
  if (last_symbol == 0) {
    for (int t = last_place + 1; t <= sigma.size(); ++t) {
      if (t == excluded)
        continue;
      slots[x] = Descriptor::place(t);
      if (slot_fits(sigma, f, q, slots, x) && extend(sigma, f, excluded, q, slots, x + 1, t, 0))
        return true;
    }
  }
  for (int u = last_symbol + 1; u <= f.symbols(); ++u) {
    if (static_cast<std::size_t>(f.symbols() - u + 1) < remaining)
      break;
    slots[x] = Descriptor::symbol(u);
    if (slot_fits(sigma, f, q, slots, x) && extend(sigma, f, excluded, q, slots, x + 1, last_place, u))
      return true;
  }
  return false;
}

std::optional<Event> search_embedding(const Perm& sigma, const OrderFacts& f, int excluded,
                                      const PatternSet& patterns) {
  for (const Perm& q : patterns) {
    std::vector<Descriptor> slots(q.vec().size());
    if (extend(sigma, f, excluded, q, slots, 0, 0, 0))
      return Event{q, std::move(slots)};
  }
  return std::nullopt;
}

// Increasing choices of `count` places from [lo, hi].
template <class Visit>
void for_each_places(int count, int lo, int hi, std::vector<int>& chosen, Visit&& visit) {
  if (count == 0) {
    visit();
    return;
  }
  for (int t = lo; t <= hi - count + 1; ++t) {
    chosen.push_back(t);
    for_each_places(count - 1, t + 1, hi, chosen, visit);
    chosen.pop_back();
  }
}

} // namespace

bool implied(const Perm& sigma, const OrderFacts& facts, const Event& witness) {
  for (std::size_t x = 0; x < witness.slots.size(); ++x)
    if (!slot_fits(sigma, facts, witness.pattern, witness.slots, x))
      return false;
  return true;
}

std::optional<Event> find_bailout(const Perm& sigma, const GapSet& gaps, const Event& ev, int excluded,
                                  const PatternSet& patterns) {
  auto facts = order_facts(sigma, gaps, ev);
  if (!facts)
    throw InvalidInput("find_bailout: event is vacuous");
  return search_embedding(sigma, *facts, excluded, patterns);
}

bool certify_gap(const Perm& sigma, const PatternSet& patterns, int gap, const GapSet& known, ProofLog* log) {
  int k = sigma.size();
  if (gap < 0 || gap > k)
    throw InvalidInput("gap " + std::to_string(gap) + " outside 0.." + std::to_string(k));
  if (known.contains(gap))
    throw InvalidInput("gap " + std::to_string(gap) + " already certified");
  OrderFacts facts(k, std::vector<int>{gap}, std::vector<int>{gap + 1},
                   std::vector<std::vector<char>>(1, std::vector<char>(1, 0)));
  auto witness = search_embedding(sigma, facts, 0, patterns);
  if (log)
    log->gaps.push_back({sigma, gap, witness.has_value(), witness});
  return witness.has_value();
}

GapSet compute_gap_set(const Perm& sigma, const PatternSet& patterns, ProofLog* log) {
  GapSet gaps(sigma.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j <= sigma.size(); ++j) {
      if (!gaps.contains(j) && certify_gap(sigma, patterns, j, gaps, log)) {
        gaps.insert(j);
        changed = true;
      }
    }
  }
  return gaps;
}

bool certify_deletable(const Perm& sigma, const PatternSet& patterns, const GapSet& gaps, int rank, ProofLog* log) {
  int k = sigma.size();
  if (rank < 1 || rank > k)
    throw InvalidInput("rank " + std::to_string(rank) + " outside 1.." + std::to_string(k));
  int t = sigma.place_of(rank);
  RankProof proof{sigma, gaps, rank, true, {}};

  // Events: slot x of q sits at place t, slots before it at earlier places,
  // `after` further slots at later places, the rest on suffix symbols.
  for (const Perm& q : patterns) {
    int m = q.size();
    for (int x = 1; x <= m && proof.certified; ++x) {
      if (x - 1 > t - 1)
        break;
      for (int after = 0; after <= std::min(m - x, k - t) && proof.certified; ++after) {
        std::vector<int> before_places;
        for_each_places(x - 1, 1, t - 1, before_places, [&] {
          std::vector<int> after_places;
          for_each_places(after, t + 1, k, after_places, [&] {
            if (!proof.certified)
              return;
            Event ev{q, {}};
            for (int p : before_places)
              ev.slots.push_back(Descriptor::place(p));
            ev.slots.push_back(Descriptor::place(t));
            for (int p : after_places)
              ev.slots.push_back(Descriptor::place(p));
            for (int u = 1; static_cast<int>(ev.slots.size()) < m; ++u)
              ev.slots.push_back(Descriptor::symbol(u));
            auto facts = order_facts(sigma, gaps, ev);
            if (!facts) {
              if (ev.symbol_count() > 0)
                proof.events.push_back({std::move(ev), EventVerdict::Kind::vacuous, std::nullopt});
              return;
            }
            auto bail = search_embedding(sigma, *facts, t, patterns);
            if (bail) {
              proof.events.push_back({std::move(ev), EventVerdict::Kind::bailed_out, std::move(bail)});
            } else {
              proof.events.push_back({std::move(ev), EventVerdict::Kind::unresolved, std::nullopt});
              proof.certified = false;
            }
          });
        });
      }
    }
  }
  bool ok = proof.certified;
  if (log)
    log->ranks.push_back(std::move(proof));
  return ok;
}

std::optional<int> find_deletable_rank(const Perm& sigma, const PatternSet& patterns, const GapSet& gaps,
                                       ProofLog* log) {
  for (int r = 1; r <= sigma.size(); ++r)
    if (certify_deletable(sigma, patterns, gaps, r, log))
      return r;
  return std::nullopt;
}

} // namespace wilf
