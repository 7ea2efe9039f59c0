#include "wilf/wilf.h"

#include "wilf/counter.hpp"
#include "wilf/errors.hpp"
#include "wilf/guesser.hpp"
#include "wilf/oracle.hpp"
#include "wilf/scheme.hpp"

#include <json.hpp>

#include <cctype>
#include <cstring>
#include <memory>
#include <string>

struct wilf_scheme {
  wilf::Scheme scheme;
  wilf::Symmetry symmetry = wilf::Symmetry::identity;
  std::unique_ptr<wilf::Counter> counter;

  wilf::Counter& evaluator() {
    if (!counter)
      counter = std::make_unique<wilf::Counter>(scheme);
    return *counter;
  }
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wilf_status fail(wilf_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
wilf_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const wilf::InvalidInput& e) {
    return fail(WILF_INVALID_INPUT, e.what());
  } catch (const wilf::ParseError& e) {
    return fail(WILF_PARSE_ERROR, e.what());
  } catch (const wilf::IntegrityError& e) {
    return fail(WILF_INTEGRITY_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WILF_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(WILF_INTERNAL_ERROR, e.what());
  }
}

wilf::PatternSet patterns_arg(const char* text) { return wilf::parse_pattern_set(text ? text : ""); }

wilf::ValueTuple tuple_arg(const int* values, size_t len) {
  if (len > 0 && values == nullptr)
    throw wilf::InvalidInput("values is NULL");
  return wilf::ValueTuple(values, values + len);
}

} // namespace

extern "C" {

void wilf_search_options_init(wilf_search_options* options) {
  if (!options)
    return;
  options->max_depth = 4;
  options->mode = WILF_MODE_CERTIFIED;
  options->horizon = wilf::default_horizon;
  options->symmetries = 0;
  options->explain = 0;
}

const char* wilf_last_error(void) { return last_error.c_str(); }

const char* wilf_status_name(wilf_status status) {
  switch (status) {
  case WILF_OK: return "ok";
  case WILF_NOT_FOUND: return "not-found";
  case WILF_INVALID_INPUT: return "invalid-input";
  case WILF_PARSE_ERROR: return "parse-error";
  case WILF_INTEGRITY_ERROR: return "integrity-error";
  case WILF_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

void wilf_string_free(char* s) { std::free(s); }

wilf_status wilf_scheme_find(const char* patterns, const wilf_search_options* options, wilf_scheme** out,
                             char** proof_log) {
  return guarded([&] {
    if (!out)
      throw wilf::InvalidInput("out is NULL");
    *out = nullptr;
    if (proof_log)
      *proof_log = nullptr;
    wilf_search_options opts;
    wilf_search_options_init(&opts);
    if (options)
      opts = *options;
    if (opts.mode != WILF_MODE_CERTIFIED && opts.mode != WILF_MODE_EMPIRICAL)
      throw wilf::InvalidInput("unknown mode");
    if (opts.explain && opts.mode == WILF_MODE_EMPIRICAL)
      throw wilf::InvalidInput("proof logs exist only for certified search");
    wilf::PatternSet set = patterns_arg(patterns);

    std::optional<wilf::SymmetricScheme> found;
    wilf::ProofLog log;
    wilf::ProofLog* logp = opts.explain ? &log : nullptr;
    if (opts.mode == WILF_MODE_EMPIRICAL) {
      if (opts.symmetries)
        found = wilf::empirical_search_with_symmetries(set, opts.max_depth, opts.horizon);
      else if (auto s = wilf::empirical_search(set, opts.max_depth, opts.horizon))
        found = wilf::SymmetricScheme{std::move(*s), wilf::Symmetry::identity};
    } else {
      if (opts.symmetries)
        found = wilf::search_with_symmetries(set, opts.max_depth, logp);
      else if (auto s = wilf::search(set, opts.max_depth, logp))
        found = wilf::SymmetricScheme{std::move(*s), wilf::Symmetry::identity};
    }
    if (logp && proof_log)
      *proof_log = dup(wilf::proof_log_json(log));
    if (!found)
      return fail(WILF_NOT_FOUND, "no scheme of depth <= " + std::to_string(opts.max_depth) + " for " +
                                      wilf::to_string(set));
    *out = new wilf_scheme{std::move(found->scheme), found->symmetry, nullptr};
    return WILF_OK;
  });
}

wilf_status wilf_scheme_load(const char* document, wilf_scheme** out) {
  return guarded([&] {
    if (!out || !document)
      throw wilf::InvalidInput("NULL argument");
    *out = nullptr;
    *out = new wilf_scheme{wilf::deserialize(document), wilf::Symmetry::identity, nullptr};
    return WILF_OK;
  });
}

void wilf_scheme_free(wilf_scheme* scheme) { delete scheme; }

wilf_status wilf_scheme_document(const wilf_scheme* scheme, char** out) {
  return guarded([&] {
    if (!scheme || !out)
      throw wilf::InvalidInput("NULL argument");
    *out = dup(wilf::serialize(scheme->scheme));
    return WILF_OK;
  });
}

const char* wilf_scheme_symmetry(const wilf_scheme* scheme) {
  if (!scheme)
    return "";
  return wilf::symmetry_name(scheme->symmetry).data();
}

int wilf_scheme_depth(const wilf_scheme* scheme) { return scheme ? scheme->scheme.depth() : -1; }

wilf_status wilf_scheme_verify(const wilf_scheme* scheme, int check_n, int* agrees, char** report) {
  return guarded([&] {
    if (!scheme || !report || !agrees)
      throw wilf::InvalidInput("NULL argument");
    if (check_n < 0)
      throw wilf::InvalidInput("check_n must be nonnegative");
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    auto problems = wilf::validate(scheme->scheme);
    doc["violations"] = problems;
    bool ok = problems.empty();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (ok) {
      wilf::Counter counter(scheme->scheme);
      for (int n = 1; n <= check_n; ++n) {
        auto mine = counter.count(n);
        auto truth = wilf::count_avoiders(n, scheme->scheme.patterns);
        rows.push_back({{"n", n}, {"scheme", mine.str()}, {"oracle", truth.str()}});
        ok = ok && mine == truth;
      }
    }
    doc["check_n"] = check_n;
    doc["terms"] = std::move(rows);
    doc["agrees"] = ok;
    *agrees = ok ? 1 : 0;
    *report = dup(doc.dump() + "\n");
    return WILF_OK;
  });
}

wilf_status wilf_count(wilf_scheme* scheme, int n, char** out) {
  return guarded([&] {
    if (!scheme || !out)
      throw wilf::InvalidInput("NULL argument");
    *out = dup(scheme->evaluator().count(n).str());
    return WILF_OK;
  });
}

wilf_status wilf_count_class(wilf_scheme* scheme, const char* sigma, int n, const int* values, size_t len,
                             char** out) {
  return guarded([&] {
    if (!scheme || !out)
      throw wilf::InvalidInput("NULL argument");
    wilf::Perm s = wilf::parse_perm(sigma ? sigma : "");
    *out = dup(scheme->evaluator().count_class(s, n, tuple_arg(values, len)).str());
    return WILF_OK;
  });
}

wilf_status wilf_sequence(wilf_scheme* scheme, int length, char** out) {
  return guarded([&] {
    if (!scheme || !out)
      throw wilf::InvalidInput("NULL argument");
    std::string text;
    for (const auto& term : scheme->evaluator().sequence(length))
      text += term.str() + "\n";
    *out = dup(text);
    return WILF_OK;
  });
}

wilf_status wilf_guess(const char* terms, int max_order, int max_degree, int guard, char** out) {
  return guarded([&] {
    if (!terms || !out)
      throw wilf::InvalidInput("NULL argument");
    *out = nullptr;
    std::vector<wilf::BigCount> seq;
    std::string tok;
    auto flush = [&] {
      if (tok.empty())
        return;
      if (tok == "-")
        throw wilf::ParseError("stray '-' in terms");
      seq.emplace_back(tok);
      tok.clear();
    };
    for (const char* p = terms; *p; ++p) {
      char c = *p;
      if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && tok.empty())) {
        tok.push_back(c);
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']') {
        flush();
      } else {
        throw wilf::ParseError(std::string("unexpected character '") + c + "' in terms");
      }
    }
    flush();
    auto rec = wilf::guess_recurrence(seq, max_order, max_degree, guard);
    if (!rec)
      return fail(WILF_NOT_FOUND, "no recurrence of order <= " + std::to_string(max_order) + " and degree <= " +
                                      std::to_string(max_degree) + " fits all " + std::to_string(seq.size()) +
                                      " terms");
    *out = dup(rec->json());
    return WILF_OK;
  });
}

wilf_status wilf_oracle_count(const char* patterns, int n, char** out) {
  return guarded([&] {
    if (!out)
      throw wilf::InvalidInput("NULL argument");
    *out = dup(wilf::count_avoiders(n, patterns_arg(patterns)).str());
    return WILF_OK;
  });
}

wilf_status wilf_oracle_members(const char* patterns, int n, const char* sigma, const int* values, size_t len,
                                char** out) {
  return guarded([&] {
    if (!out)
      throw wilf::InvalidInput("NULL argument");
    wilf::PatternSet set = patterns_arg(patterns);
    wilf::Perm s = wilf::parse_perm(sigma ? sigma : "");
    auto members = wilf::prefix_class_members(n, set, s, tuple_arg(values, len));
    std::string text;
    for (const auto& p : members)
      text += wilf::to_string(p) + "\n";
    *out = dup(text);
    return WILF_OK;
  });
}

} // extern "C"
