#include "wilf/scheme.hpp"

#include "wilf/errors.hpp"
#include "wilf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace wilf {

std::string_view mode_name(SchemeMode m) { return m == SchemeMode::certified ? "certified" : "empirical"; }

int Scheme::depth() const {
  int d = 0;
  for (const auto& [sigma, e] : expa)
    d = std::max(d, sigma.size());
  for (const auto& [sigma, e] : redu)
    d = std::max(d, sigma.size());
  for (const Perm& sigma : zero)
    d = std::max(d, sigma.size());
  return d;
}

std::vector<std::string> validate(const Scheme& s) {
  std::vector<std::string> out;
  auto name = [](const Perm& p) { return p.empty() ? std::string("empty permutation") : to_string(p); };

  if (!s.expa.contains(Perm()))
    out.push_back("empty permutation absent from expa");
  for (const auto& [sigma, e] : s.expa) {
    if (s.redu.contains(sigma))
      out.push_back(name(sigma) + " is in both expa and redu");
    if (s.zero.contains(sigma))
      out.push_back(name(sigma) + " is in both expa and zero");
  }
  for (const auto& [sigma, e] : s.redu)
    if (s.zero.contains(sigma))
      out.push_back(name(sigma) + " is in both redu and zero");

  for (const auto& [sigma, e] : s.expa) {
    if (e.gaps.k() != sigma.size())
      out.push_back(name(sigma) + ": gap set has the wrong prefix length");
    if (e.refinements != refinements(sigma))
      out.push_back(name(sigma) + ": refinements must be the " + std::to_string(sigma.size() + 1) +
                    " one-entry extensions ordered by final entry");
    for (const Perm& child : e.refinements)
      if (!s.expa.contains(child) && !s.redu.contains(child) && !s.zero.contains(child))
        out.push_back(name(sigma) + ": refinement " + name(child) + " belongs to no part of the scheme");
    if (!avoids_all(sigma, s.patterns))
      out.push_back(name(sigma) + " is expanded but contains a forbidden pattern");
  }
  for (const auto& [sigma, e] : s.redu) {
    if (e.delete_rank < 1 || e.delete_rank > sigma.size())
      out.push_back(name(sigma) + ": delete_rank " + std::to_string(e.delete_rank) + " outside 1.." +
                    std::to_string(sigma.size()));
    if (e.gaps.k() != sigma.size())
      out.push_back(name(sigma) + ": gap set has the wrong prefix length");
    if (!avoids_all(sigma, s.patterns))
      out.push_back(name(sigma) + " is reduced but contains a forbidden pattern");
  }
  for (const Perm& sigma : s.zero)
    if (avoids_all(sigma, s.patterns))
      out.push_back(name(sigma) + " is marked zero but avoids every pattern");
  return out;
}

namespace {

struct Certifier {
  std::function<GapSet(const Perm&)> gap_set;
  std::function<std::optional<int>(const Perm&, const GapSet&)> deletable_rank;
};

std::optional<Scheme> bfs(const PatternSet& patterns, int max_depth, SchemeMode mode, const Certifier& cert) {
  if (max_depth < 1)
    throw InvalidInput("max_depth must be at least 1");
  Scheme s;
  s.patterns = patterns;
  s.mode = mode;
  std::deque<Perm> frontier{Perm()};
  while (!frontier.empty()) {
    Perm sigma = std::move(frontier.front());
    frontier.pop_front();
    if (!avoids_all(sigma, patterns)) {
      s.zero.insert(sigma);
      continue;
    }
    GapSet gaps = cert.gap_set(sigma);
    if (auto rank = cert.deletable_rank(sigma, gaps)) {
      s.redu.emplace(sigma, ReduEntry{*rank, gaps});
      continue;
    }
    if (sigma.size() >= max_depth)
      return std::nullopt;
    auto children = refinements(sigma);
    frontier.insert(frontier.end(), children.begin(), children.end());
    s.expa.emplace(std::move(sigma), ExpaEntry{gaps, std::move(children)});
  }
  return s;
}

} // namespace

std::optional<Scheme> search(const PatternSet& patterns, int max_depth, ProofLog* log) {
  Certifier cert{
      [&](const Perm& sigma) { return compute_gap_set(sigma, patterns, log); },
      [&](const Perm& sigma, const GapSet& gaps) { return find_deletable_rank(sigma, patterns, gaps, log); },
  };
  return bfs(patterns, max_depth, SchemeMode::certified, cert);
}

std::optional<Scheme> empirical_search(const PatternSet& patterns, int max_depth, int horizon) {
  if (max_depth < 1)
    throw InvalidInput("max_depth must be at least 1");
  EmpiricalOracle oracle(patterns, horizon);
  Certifier cert{
      [&](const Perm& sigma) { return oracle.gap_set(sigma); },
      [&](const Perm& sigma, const GapSet& gaps) -> std::optional<int> {
        for (int r = 1; r <= sigma.size(); ++r)
          if (oracle.deletable(sigma, gaps, r))
            return r;
        return std::nullopt;
      },
  };
  return bfs(patterns, max_depth, SchemeMode::empirical, cert);
}

std::optional<SymmetricScheme> search_with_symmetries(const PatternSet& patterns, int max_depth, ProofLog* log) {
  for (auto& image : symmetry_closure(patterns))
    if (auto s = search(image.patterns, max_depth, log))
      return SymmetricScheme{std::move(*s), image.symmetry};
  return std::nullopt;
}

std::optional<SymmetricScheme> empirical_search_with_symmetries(const PatternSet& patterns, int max_depth,
                                                                int horizon) {
  for (auto& image : symmetry_closure(patterns))
    if (auto s = empirical_search(image.patterns, max_depth, horizon))
      return SymmetricScheme{std::move(*s), image.symmetry};
  return std::nullopt;
}

} // namespace wilf
