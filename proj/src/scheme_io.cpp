#include "wilf/errors.hpp"
#include "wilf/scheme.hpp"

#include <json.hpp>

namespace wilf {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int schema_version = 1;

ordered_json perm_json(const Perm& p) { return ordered_json(p.vec()); }

ordered_json gaps_json(const GapSet& g) { return ordered_json(g.elements()); }

ordered_json event_json(const Event& ev) {
  ordered_json slots = ordered_json::array();
  for (const Descriptor& d : ev.slots)
    slots.push_back((d.is_prefix() ? "p" : "u") + std::to_string(d.index));
  return {{"pattern", perm_json(ev.pattern)}, {"slots", std::move(slots)}};
}

std::string_view verdict_name(EventVerdict::Kind k) {
  switch (k) {
  case EventVerdict::Kind::vacuous: return "vacuous";
  case EventVerdict::Kind::bailed_out: return "bailed-out";
  case EventVerdict::Kind::unresolved: return "unresolved";
  }
  return "?";
}

Perm read_perm(const ordered_json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an integer array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw ParseError(std::string(what) + " must be an integer array");
    v.push_back(x.get<int>());
  }
  try {
    return Perm(std::move(v));
  } catch (const InvalidInput& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

GapSet read_gaps(const ordered_json& j, const Perm& sigma) {
  if (!j.is_array())
    throw ParseError("gaps must be an integer array");
  GapSet g(sigma.size());
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw ParseError("gaps must be an integer array");
    int v = x.get<int>();
    if (v < 0 || v > sigma.size())
      throw IntegrityError("validation failed: gap " + std::to_string(v) + " of " + to_string(sigma) +
                           " outside 0.." + std::to_string(sigma.size()));
    g.insert(v);
  }
  return g;
}

const ordered_json& field(const ordered_json& obj, const char* key) {
  if (!obj.is_object())
    throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const ordered_json& array_field(const ordered_json& obj, const char* key) {
  const auto& j = field(obj, key);
  if (!j.is_array())
    throw ParseError(std::string("field '") + key + "' must be an array");
  return j;
}

} // namespace

std::string serialize(const Scheme& s) {
  ordered_json doc;
  doc["schema_version"] = schema_version;
  ordered_json patterns = ordered_json::array();
  for (const Perm& q : s.patterns)
    patterns.push_back(perm_json(q));
  doc["patterns"] = std::move(patterns);
  doc["mode"] = mode_name(s.mode);
  ordered_json expa = ordered_json::array();
  for (const auto& [sigma, e] : s.expa) {
    ordered_json refs = ordered_json::array();
    for (const Perm& r : e.refinements)
      refs.push_back(perm_json(r));
    expa.push_back({{"sigma", perm_json(sigma)}, {"gaps", gaps_json(e.gaps)}, {"refinements", std::move(refs)}});
  }
  doc["expa"] = std::move(expa);
  ordered_json redu = ordered_json::array();
  for (const auto& [sigma, e] : s.redu)
    redu.push_back({{"sigma", perm_json(sigma)}, {"delete_rank", e.delete_rank}, {"gaps", gaps_json(e.gaps)}});
  doc["redu"] = std::move(redu);
  ordered_json zero = ordered_json::array();
  for (const Perm& sigma : s.zero)
    zero.push_back(perm_json(sigma));
  doc["zero"] = std::move(zero);
  return doc.dump() + "\n";
}

Scheme deserialize(std::string_view document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scheme document: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("scheme document must be a JSON object");
  if (auto it = doc.find("schema_version"); it != doc.end() && *it != schema_version)
    throw ParseError("unsupported schema_version " + it->dump());

  Scheme s;
  std::vector<Perm> patterns;
  const auto& pj = array_field(doc, "patterns");
  for (const auto& q : pj)
    patterns.push_back(read_perm(q, "pattern"));
  try {
    s.patterns = PatternSet(std::move(patterns));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }

  const auto& mode = field(doc, "mode");
  if (mode == "certified")
    s.mode = SchemeMode::certified;
  else if (mode == "empirical")
    s.mode = SchemeMode::empirical;
  else
    throw ParseError("mode must be \"certified\" or \"empirical\"");

  std::vector<std::string> dupes;
  for (const auto& e : array_field(doc, "expa")) {
    Perm sigma = read_perm(field(e, "sigma"), "sigma");
    ExpaEntry entry{read_gaps(field(e, "gaps"), sigma), {}};
    for (const auto& r : array_field(e, "refinements"))
      entry.refinements.push_back(read_perm(r, "refinement"));
    if (!s.expa.emplace(sigma, std::move(entry)).second)
      dupes.push_back(to_string(sigma));
  }
  for (const auto& e : array_field(doc, "redu")) {
    Perm sigma = read_perm(field(e, "sigma"), "sigma");
    const auto& rank = field(e, "delete_rank");
    if (!rank.is_number_integer())
      throw ParseError("delete_rank must be an integer");
    if (!s.redu.emplace(sigma, ReduEntry{rank.get<int>(), read_gaps(field(e, "gaps"), sigma)}).second)
      dupes.push_back(to_string(sigma));
  }
  for (const auto& z : array_field(doc, "zero"))
    if (!s.zero.insert(read_perm(z, "zero class")).second)
      dupes.push_back(to_string(read_perm(z, "zero class")));

  auto problems = validate(s);
  for (const auto& d : dupes)
    problems.push_back("duplicate entry for " + d);
  if (!problems.empty()) {
    std::string msg = "validation failed:";
    for (const auto& p : problems)
      msg += "\n  " + p;
    throw IntegrityError(msg);
  }
  return s;
}

std::string proof_log_json(const ProofLog& log) {
  ordered_json doc;
  doc["schema_version"] = schema_version;
  ordered_json gaps = ordered_json::array();
  for (const GapProof& g : log.gaps) {
    ordered_json e = {{"sigma", perm_json(g.sigma)}, {"gap", g.gap}, {"forced", g.forced}};
    if (g.witness)
      e["witness"] = event_json(*g.witness);
    gaps.push_back(std::move(e));
  }
  doc["gap_certifications"] = std::move(gaps);
  ordered_json ranks = ordered_json::array();
  for (const RankProof& r : log.ranks) {
    ordered_json events = ordered_json::array();
    for (const EventVerdict& v : r.events) {
      ordered_json e = {{"event", event_json(v.event)}, {"verdict", verdict_name(v.kind)}};
      if (v.bailout)
        e["bailout"] = event_json(*v.bailout);
      events.push_back(std::move(e));
    }
    ranks.push_back({{"sigma", perm_json(r.sigma)},
                     {"gaps", gaps_json(r.gaps)},
                     {"rank", r.rank},
                     {"certified", r.certified},
                     {"events", std::move(events)}});
  }
  doc["deletability"] = std::move(ranks);
  return doc.dump(2) + "\n";
}

} // namespace wilf
