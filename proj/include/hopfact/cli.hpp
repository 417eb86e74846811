#ifndef HOPFACT_CLI_HPP_
#define HOPFACT_CLI_HPP_

// Command implementations behind the hopfact executable.  Each returns its
// exit code and output instead of printing, so tests can drive them directly.
//
// Exit codes: 0 success, 1 property or suite failure, 2 input error,
// 3 budget exceeded.

#include <algorithm>  // for all_of
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "act.hpp"
#include "congruence.hpp"
#include "deciders.hpp"
#include "endomorphisms.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "monoid.hpp"
#include "report.hpp"
#include "text_format.hpp"

namespace hopfact::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_input = 2,
  exit_budget = 3,
};

struct CommandResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

inline int exit_code_for(Error const& e) noexcept {
  return error_class(e.kind()) == ErrorClass::budget ? exit_budget
                                                     : exit_input;
}

/// Runs `body`, mapping library errors to exit codes.
template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (Error const& e) {
    return {exit_code_for(e), "", std::string("error: ") + e.what() + "\n"};
  }
}

/// Built-in monoids for `classify --regular`: trivial, M2 (identity plus an
/// idempotent) and Z<m> (integers mod m under multiplication).
inline std::optional<Monoid> builtin_monoid(std::string const& name) {
  if (name == "trivial") {
    return Monoid();
  }
  if (name == "M2") {
    return Monoid::from_valid_table(2, {0, 1, 1, 1});
  }
  if (name.size() >= 2 && name[0] == 'Z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos &&
      name.size() <= 5) {
    std::size_t const m = std::stoul(name.substr(1));
    if (m >= 1) {
      return zmod_mult_monoid(m);
    }
  }
  return std::nullopt;
}

inline Act const& find_act(LoadedDocument const& doc, std::string const& name) {
  auto it = doc.acts.find(name);
  if (it == doc.acts.end()) {
    throw Error(ErrorKind::invalid_argument, "no act named '" + name + "'");
  }
  return it->second;
}

inline CommandResult validate(std::string const& text) {
  return guarded([&] {
    auto const doc = parse_input(text);
    load(doc);
    std::ostringstream out;
    for (auto const& m : doc.monoids) {
      out << "monoid " << m.name << " (size " << m.size << "): ok\n";
    }
    for (auto const& a : doc.acts) {
      out << "act " << a.name << " over " << a.monoid << " (size " << a.size
          << "): ok\n";
    }
    return CommandResult{exit_ok, out.str(), ""};
  });
}

inline CommandResult classify_act(std::string const& input,
                                  std::string const& name, Act const& act,
                                  bool json) {
  auto const endos = endomorphisms(act);
  auto const report = to_json(name, classify(act), endos);
  if (json) {
    return {exit_ok, dump(report_document(input, {report}, {})), ""};
  }
  return {exit_ok, render_classification(report), ""};
}

inline CommandResult classify(std::string const& text,
                              std::string const& act_name, bool json) {
  return guarded([&] {
    auto const doc = load(parse_input(text));
    return classify_act(text, act_name, find_act(doc, act_name), json);
  });
}

/// Classifies the regular act of a built-in monoid, or of a monoid defined
/// in `text` when given.
inline CommandResult classify_regular(std::optional<std::string> const& text,
                                      std::string const& monoid_name,
                                      bool json) {
  return guarded([&] {
    std::optional<Monoid> m;
    if (text) {
      auto const doc = load(parse_input(*text));
      if (auto it = doc.monoids.find(monoid_name); it != doc.monoids.end()) {
        m = it->second;
      }
    }
    if (!m) {
      m = builtin_monoid(monoid_name);
    }
    if (!m) {
      throw Error(ErrorKind::unknown_monoid_reference,
                  "unknown monoid '" + monoid_name + "'");
    }
    std::string const input = text ? *text : "regular " + monoid_name;
    return classify_act(input, "regular " + monoid_name, regular_act(*m),
                        json);
  });
}

inline std::string format_map(std::vector<Index> const& map) {
  std::string out = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    out += (i ? " " : "") + std::to_string(map[i]);
  }
  return out + "]";
}

inline CommandResult endos(std::string const& text,
                           std::string const& act_name) {
  return guarded([&] {
    auto const doc = load(parse_input(text));
    auto const end = end_monoid(find_act(doc, act_name));
    std::ostringstream out;
    out << "|End| = " << end.size() << ", commutative: "
        << (end.is_commutative() ? "yes" : "no") << "\n";
    for (Index i = 0; i < end.size(); ++i) {
      auto const& f = end.element(i);
      out << i << "  " << format_map(f.map()) << "  k=" << k_chain_index(f).index
          << " i=" << i_chain_index(f).index
          << (f.is_injective() ? "  automorphism" : "") << "\n";
    }
    return CommandResult{exit_ok, out.str(), ""};
  });
}

inline CommandResult congruences(std::string const& text,
                                 std::string const& act_name) {
  return guarded([&] {
    auto const doc = load(parse_input(text));
    auto const all = enumerate_congruences(find_act(doc, act_name));
    std::ostringstream out;
    out << all.size() << " congruences\n";
    for (auto const& c : all) {
      out << detail::format_classes(c.partition()) << "\n";
    }
    return CommandResult{exit_ok, out.str(), ""};
  });
}

/// Canonical text of the suite flags; its digest identifies the run.
inline std::string suite_input(CorpusSpec const& spec) {
  std::string out = "suite max_monoid=" + std::to_string(spec.max_monoid_size) +
                    " max_act=" + std::to_string(spec.max_act_size) +
                    " theorems=";
  auto const ids = selected_theorems(spec);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out += (i ? "," : "") + std::string(theorem_info(ids[i]).name);
  }
  if (spec.seed) {
    out += " seed=" + std::to_string(*spec.seed) +
           " samples=" + std::to_string(spec.samples);
  }
  return out;
}

inline CommandResult suite(CorpusSpec const& spec, bool json) {
  return guarded([&] {
    auto const verdicts = run_suite(spec);
    bool const all_passed =
        std::all_of(verdicts.begin(), verdicts.end(),
                    [](Verdict const& v) { return v.passed(); });
    std::string out =
        json ? dump(report_document(suite_input(spec), {}, verdicts))
             : render_verdicts(verdicts);
    return CommandResult{all_passed ? exit_ok : exit_failure, std::move(out),
                         ""};
  });
}

struct Family36Row {
  std::size_t depth = 0;
  std::size_t monoid_size = 0;
  std::size_t r_index = 0;
};

inline std::vector<Family36Row> family36_rows(std::size_t p,
                                              std::size_t max_depth) {
  std::vector<Family36Row> rows;
  for (std::size_t n = 1; n <= max_depth; ++n) {
    auto const t = truncated_example36(p, n);
    auto const index = r_chain_index(t.monoid, t.x);
    rows.push_back({n, t.monoid.size(), index.value_or(0)});
  }
  return rows;
}

inline CommandResult family36(std::size_t p, std::size_t max_depth) {
  return guarded([&] {
    if (max_depth == 0) {
      throw Error(ErrorKind::invalid_argument, "--max-n must be at least 1");
    }
    std::ostringstream out;
    out << "N  |S_N|  r-index(x)\n";
    for (auto const& row : family36_rows(p, max_depth)) {
      out << row.depth << "  " << row.monoid_size << "  " << row.r_index
          << "\n";
    }
    return CommandResult{exit_ok, out.str(), ""};
  });
}

}  // namespace hopfact::cli

#endif  // HOPFACT_CLI_HPP_
