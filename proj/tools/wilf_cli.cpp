// wilf: discover enumeration schemes for pattern-avoiding permutations and
// count with them. Exit codes: 0 success, 1 negative result, 2 usage/input.

#include "wilf/wilf.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

using json = nlohmann::ordered_json;

struct Owned {
  char* p = nullptr;
  ~Owned() { wilf_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct SchemeDeleter {
  void operator()(wilf_scheme* s) const { wilf_scheme_free(s); }
};
using SchemePtr = std::unique_ptr<wilf_scheme, SchemeDeleter>;

// Carries an exit code out of a command.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "wilf: " << message << "\n";
  throw Exit{code};
}

void check(wilf_status st) {
  if (st == WILF_OK)
    return;
  die(st == WILF_NOT_FOUND ? exit_negative : exit_usage,
      std::string(wilf_status_name(st)) + ": " + wilf_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    die(exit_usage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    die(exit_usage, "cannot write " + path);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty())
      out.push_back(line);
  return out;
}

// JSON array of decimal integers as bare number literals (exact at any size).
std::string number_array(const std::vector<std::string>& terms) {
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += (i ? "," : "") + terms[i];
  return out + "]";
}

struct SearchFlags {
  std::string patterns;
  int max_depth = 4;
  std::string mode = "certified";
  int horizon = 8;
  bool symmetries = false;

  void add(CLI::App* cmd, bool patterns_required) {
    auto* p = cmd->add_option("-p,--patterns", patterns, "Pattern set, e.g. \"123,132\" or \"[[1,2,3]]\"");
    if (patterns_required)
      p->required();
    cmd->add_option("--max-depth", max_depth, "Longest prefix class the search may expand to")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--mode", mode, "certified or empirical")
        ->check(CLI::IsMember({"certified", "empirical"}))
        ->capture_default_str();
    cmd->add_option("--horizon", horizon, "Empirical test length")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_flag("--symmetries", symmetries, "Also try the symmetry images of the set");
  }

  wilf_search_options options(bool explain) const {
    wilf_search_options o;
    wilf_search_options_init(&o);
    o.max_depth = max_depth;
    o.mode = mode == "empirical" ? WILF_MODE_EMPIRICAL : WILF_MODE_CERTIFIED;
    o.horizon = horizon;
    o.symmetries = symmetries ? 1 : 0;
    o.explain = explain ? 1 : 0;
    return o;
  }
};

// Machine-readable record of an unsuccessful search.
std::string no_scheme_record(const SearchFlags& f) {
  json j;
  j["schema_version"] = 1;
  j["result"] = 0;
  j["status"] = "no-scheme";
  j["patterns"] = f.patterns;
  j["max_depth"] = f.max_depth;
  j["mode"] = f.mode;
  j["symmetries"] = f.symmetries;
  j["message"] = wilf_last_error();
  return j.dump() + "\n";
}

// Runs the search; on NOT_FOUND prints the failure record and exits 1.
SchemePtr find_or_report(const SearchFlags& f, bool explain = false) {
  wilf_search_options o = f.options(explain);
  wilf_scheme* raw = nullptr;
  Owned log;
  wilf_status st = wilf_scheme_find(f.patterns.c_str(), &o, &raw, explain ? &log.p : nullptr);
  SchemePtr s(raw);
  if (explain && log.p)
    std::cerr << log.str();
  if (st == WILF_NOT_FOUND) {
    std::cout << no_scheme_record(f);
    throw Exit{exit_negative};
  }
  check(st);
  if (f.symmetries)
    std::cerr << "symmetry: " << wilf_scheme_symmetry(s.get()) << "\n";
  return s;
}

SchemePtr load_scheme(const std::string& path) {
  std::string doc = read_file(path);
  wilf_scheme* raw = nullptr;
  check(wilf_scheme_load(doc.c_str(), &raw));
  return SchemePtr(raw);
}

// Scheme from --scheme FILE or discovered from -p.
struct SchemeSource {
  std::string file;
  SearchFlags search;

  void add(CLI::App* cmd) {
    auto* f = cmd->add_option("--scheme", file, "Scheme document");
    search.add(cmd, false);
    auto* p = cmd->get_option("--patterns");
    f->excludes(p);
    p->excludes(f);
  }

  bool given() const { return !file.empty() || !search.patterns.empty(); }

  SchemePtr get() const {
    if (!file.empty())
      return load_scheme(file);
    return find_or_report(search);
  }
};

std::vector<std::string> scheme_terms(wilf_scheme* s, int length) {
  Owned out;
  check(wilf_sequence(s, length, &out.p));
  return split_lines(out.str());
}

std::vector<std::string> oracle_terms(const std::string& patterns, int length) {
  std::vector<std::string> out;
  for (int n = 1; n <= length; ++n) {
    Owned c;
    check(wilf_oracle_count(patterns.c_str(), n, &c.p));
    out.push_back(c.str());
  }
  return out;
}

void print_terms(const std::vector<std::string>& terms, const std::string& format) {
  if (format == "json") {
    std::cout << "{\"schema_version\":1,\"terms\":" << number_array(terms) << "}\n";
    return;
  }
  for (const auto& t : terms)
    std::cout << t << "\n";
}

CLI::Option* add_format(CLI::App* cmd, std::string& format) {
  return cmd->add_option("--format", format, "lines or json")
      ->check(CLI::IsMember({"lines", "json"}))
      ->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Enumeration schemes for pattern-avoiding permutations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // scheme find / verify
  auto* scheme_cmd = app.add_subcommand("scheme", "Discover or check schemes");
  scheme_cmd->require_subcommand(1);

  SearchFlags find_flags;
  bool explain = false;
  std::string find_out;
  auto* find_cmd = scheme_cmd->add_subcommand("find", "Search for a scheme");
  find_flags.add(find_cmd, true);
  find_cmd->add_flag("--explain", explain, "Write the proof log (JSON) to stderr");
  find_cmd->add_option("-o,--output", find_out, "Write the document here instead of stdout");

  std::string verify_file;
  int check_n = 8;
  auto* verify_cmd = scheme_cmd->add_subcommand("verify", "Validate a document and cross-check it against brute force");
  verify_cmd->add_option("--scheme", verify_file, "Scheme document")->required();
  verify_cmd->add_option("--check-n", check_n, "Largest n compared with brute force")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  // count
  SchemeSource count_src;
  int count_n = 0;
  std::string count_sigma;
  std::vector<int> count_values;
  std::string count_format = "lines";
  auto* count_cmd = app.add_subcommand("count", "Number of avoiders of length n");
  count_src.add(count_cmd);
  count_cmd->add_option("-n", count_n, "Length")->required()->check(CLI::NonNegativeNumber);
  auto* sigma_opt = count_cmd->add_option("--sigma", count_sigma, "Count one prefix class instead");
  count_cmd->add_option("--values", count_values, "Prefix values i1<...<ik")->delimiter(',')->needs(sigma_opt);
  add_format(count_cmd, count_format);

  // sequence
  SchemeSource seq_src;
  int seq_len = 10;
  std::string seq_format = "lines";
  auto* seq_cmd = app.add_subcommand("sequence", "Terms n = 1..L");
  seq_src.add(seq_cmd);
  seq_cmd->add_option("-L", seq_len, "Number of terms")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_format(seq_cmd, seq_format);

  // guess
  SchemeSource guess_src;
  std::string guess_terms;
  int guess_len = 30, max_order = 2, max_degree = 2, guard = 5;
  std::string guess_format = "lines";
  auto* guess_cmd = app.add_subcommand("guess", "Conjecture a recurrence with polynomial coefficients");
  guess_src.add(guess_cmd);
  auto* terms_opt = guess_cmd->add_option("--terms", guess_terms, "File of terms a(1), a(2), ...");
  terms_opt->excludes(guess_cmd->get_option("--scheme"))->excludes(guess_cmd->get_option("--patterns"));
  guess_cmd->add_option("-L", guess_len, "Terms to compute from the scheme")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  guess_cmd->add_option("--max-order", max_order)->check(CLI::NonNegativeNumber)->capture_default_str();
  guess_cmd->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber)->capture_default_str();
  guess_cmd->add_option("--guard", guard, "Held-out terms")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_format(guess_cmd, guess_format);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle_cmd->require_subcommand(1);
  std::string oc_patterns;
  int oc_n = 0;
  std::string oc_format = "lines";
  auto* oc_cmd = oracle_cmd->add_subcommand("count", "Count avoiders by brute force");
  oc_cmd->add_option("-p,--patterns", oc_patterns, "Pattern set")->required();
  oc_cmd->add_option("-n", oc_n, "Length")->required()->check(CLI::NonNegativeNumber);
  add_format(oc_cmd, oc_format);

  std::string om_patterns, om_sigma;
  int om_n = 0;
  std::vector<int> om_values;
  auto* om_cmd = oracle_cmd->add_subcommand("members", "List avoiders, optionally within one prefix class");
  om_cmd->add_option("-p,--patterns", om_patterns, "Pattern set")->required();
  om_cmd->add_option("-n", om_n, "Length")->required()->check(CLI::NonNegativeNumber);
  auto* om_sigma_opt = om_cmd->add_option("--sigma", om_sigma, "Prefix shape");
  om_cmd->add_option("--values", om_values, "Prefix values i1<...<ik")->delimiter(',')->needs(om_sigma_opt);

  // compare
  std::string cmp_a, cmp_b;
  int cmp_len = 10, cmp_depth = 4;
  std::string cmp_format = "lines";
  auto* cmp_cmd = app.add_subcommand("compare", "Compare the sequences of two pattern sets");
  cmp_cmd->add_option("-a", cmp_a, "First pattern set")->required();
  cmp_cmd->add_option("-b", cmp_b, "Second pattern set")->required();
  cmp_cmd->add_option("-L", cmp_len, "Number of terms")->check(CLI::PositiveNumber)->capture_default_str();
  cmp_cmd->add_option("--max-depth", cmp_depth, "Scheme search depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(cmp_cmd, cmp_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (*find_cmd) {
    if (explain && find_flags.mode == "empirical")
      die(exit_usage, "--explain needs --mode certified");
    SchemePtr s = find_or_report(find_flags, explain);
    Owned doc;
    check(wilf_scheme_document(s.get(), &doc.p));
    write_output(doc.str(), find_out);
    return exit_ok;
  }

  if (*verify_cmd) {
    SchemePtr s = load_scheme(verify_file);
    int agrees = 0;
    Owned report;
    check(wilf_scheme_verify(s.get(), check_n, &agrees, &report.p));
    std::cout << report.str();
    return agrees ? exit_ok : exit_negative;
  }

  auto require_source = [](const SchemeSource& src) {
    if (!src.given())
      die(exit_usage, "give --scheme FILE or -p PATTERNS");
  };

  if (*count_cmd) {
    require_source(count_src);
    SchemePtr s = count_src.get();
    Owned c;
    if (count_cmd->count("--sigma"))
      check(wilf_count_class(s.get(), count_sigma.c_str(), count_n, count_values.data(), count_values.size(), &c.p));
    else
      check(wilf_count(s.get(), count_n, &c.p));
    if (count_format == "json")
      std::cout << "{\"schema_version\":1,\"n\":" << count_n << ",\"count\":" << c.str() << "}\n";
    else
      std::cout << c.str() << "\n";
    return exit_ok;
  }

  if (*seq_cmd) {
    require_source(seq_src);
    SchemePtr s = seq_src.get();
    print_terms(scheme_terms(s.get(), seq_len), seq_format);
    return exit_ok;
  }

  if (*guess_cmd) {
    std::string terms;
    if (!guess_terms.empty()) {
      terms = read_file(guess_terms);
    } else {
      require_source(guess_src);
      SchemePtr s = guess_src.get();
      for (const auto& t : scheme_terms(s.get(), guess_len))
        terms += t + "\n";
    }
    Owned out;
    wilf_status st = wilf_guess(terms.c_str(), max_order, max_degree, guard, &out.p);
    if (st == WILF_NOT_FOUND) {
      json j;
      j["schema_version"] = 1;
      j["status"] = "no-recurrence";
      j["max_order"] = max_order;
      j["max_degree"] = max_degree;
      j["guard"] = guard;
      j["message"] = wilf_last_error();
      std::cout << (guess_format == "json" ? j.dump() : std::string("no recurrence found: ") + wilf_last_error())
                << "\n";
      return exit_negative;
    }
    check(st);
    if (guess_format == "json")
      std::cout << out.str();
    else
      std::cout << "CONJECTURE: " << json::parse(out.str()).at("recurrence").get<std::string>() << "\n";
    return exit_ok;
  }

  if (*oc_cmd) {
    Owned c;
    check(wilf_oracle_count(oc_patterns.c_str(), oc_n, &c.p));
    if (oc_format == "json")
      std::cout << "{\"schema_version\":1,\"n\":" << oc_n << ",\"count\":" << c.str() << "}\n";
    else
      std::cout << c.str() << "\n";
    return exit_ok;
  }

  if (*om_cmd) {
    Owned m;
    const char* sigma = om_cmd->count("--sigma") ? om_sigma.c_str() : nullptr;
    check(wilf_oracle_members(om_patterns.c_str(), om_n, sigma, om_values.data(), om_values.size(), &m.p));
    std::cout << m.str();
    return exit_ok;
  }

  if (*cmp_cmd) {
    struct Side {
      std::string source;
      std::vector<std::string> terms;
    };
    auto side = [&](const std::string& patterns) {
      wilf_search_options o;
      wilf_search_options_init(&o);
      o.max_depth = cmp_depth;
      o.symmetries = 1;
      wilf_scheme* raw = nullptr;
      wilf_status st = wilf_scheme_find(patterns.c_str(), &o, &raw, nullptr);
      SchemePtr s(raw);
      if (st == WILF_NOT_FOUND)
        return Side{"oracle", oracle_terms(patterns, cmp_len)};
      check(st);
      return Side{"scheme", scheme_terms(s.get(), cmp_len)};
    };
    Side a = side(cmp_a), b = side(cmp_b);
    bool agree = a.terms == b.terms;
    std::string verdict = agree ? "sequences agree (n ≤ " + std::to_string(cmp_len) + ")"
                                : "sequences differ (n ≤ " + std::to_string(cmp_len) + ")";
    if (cmp_format == "json") {
      std::cout << "{\"schema_version\":1,\"a\":{\"patterns\":" << json(cmp_a).dump() << ",\"source\":\""
                << a.source << "\",\"terms\":" << number_array(a.terms) << "},\"b\":{\"patterns\":"
                << json(cmp_b).dump() << ",\"source\":\"" << b.source << "\",\"terms\":" << number_array(b.terms)
                << "},\"agree\":" << (agree ? "true" : "false")
                << ",\"label\":\"empirical Wilf-equivalence evidence\"}\n";
    } else {
      auto row = [](const std::string& name, const Side& s) {
        std::cout << name << " (" << s.source << "):";
        for (const auto& t : s.terms)
          std::cout << " " << t;
        std::cout << "\n";
      };
      row("a " + cmp_a, a);
      row("b " + cmp_b, b);
      std::cout << verdict << "\n";
      std::cout << "empirical Wilf-equivalence evidence, not a proof\n";
    }
    return agree ? exit_ok : exit_negative;
  }
  return exit_usage;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "wilf: " << e.what() << "\n";
    return exit_usage;
  }
}
