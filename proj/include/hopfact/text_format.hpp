#ifndef HOPFACT_TEXT_FORMAT_HPP_
#define HOPFACT_TEXT_FORMAT_HPP_

// Line-oriented input format for monoids and acts.
//
//   # comment
//   monoid M2 2
//   0 1
//   1 1
//   act A2 over M2 2
//   0 1
//   1 1
//
// A monoid row s lists s*t for t = 0..n-1 and row 0 must be the identity.
// An act row a lists a*s for s = 0..|S|-1.

#include <charconv>  // for from_chars
#include <cstddef>   // for size_t
#include <map>       // for map
#include <set>       // for set
#include <string>    // for string
#include <string_view>
#include <utility>   // for move
#include <vector>    // for vector

#include "act.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace hopfact {

struct MonoidBlock {
  std::string name;
  std::size_t size = 0;
  std::vector<std::vector<Index>> rows;

  friend bool operator==(MonoidBlock const&, MonoidBlock const&) = default;
};

struct ActBlock {
  std::string name;
  std::string monoid;
  std::size_t size = 0;
  std::vector<std::vector<Index>> rows;

  friend bool operator==(ActBlock const&, ActBlock const&) = default;
};

struct InputDocument {
  std::vector<MonoidBlock> monoids;
  std::vector<ActBlock> acts;

  friend bool operator==(InputDocument const&, InputDocument const&) = default;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t const start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) {
      out.push_back({line.substr(start, i - start), start + 1});
    }
  }
  return out;
}

inline std::size_t parse_count(Token const& t, std::size_t line) {
  std::size_t value = 0;
  auto const* first = t.text.data();
  auto const* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw SyntaxError(line, t.column,
                      "expected a non-negative integer, got '" +
                          std::string(t.text) + "'");
  }
  return value;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    bool const ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
    if (!ok) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline InputDocument parse_input(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  InputDocument doc;
  std::set<std::string> names;
  std::map<std::string, std::size_t> monoid_sizes;
  std::size_t i = 0;

  auto read_rows = [&](std::size_t count, std::size_t arity,
                       std::size_t header_line) {
    std::vector<std::vector<Index>> rows;
    while (rows.size() < count) {
      if (i >= lines.size()) {
        throw SyntaxError(lines.size(), 1,
                          "expected " + std::to_string(count) +
                              " table rows after line " +
                              std::to_string(header_line) + ", found " +
                              std::to_string(rows.size()));
      }
      std::size_t const line_no = i + 1;
      auto tokens = detail::tokenize(lines[i++]);
      if (tokens.empty()) {
        continue;
      }
      if (tokens.size() != arity) {
        std::size_t const column =
            tokens.size() > arity ? tokens[arity].column
                                  : tokens.back().column +
                                        tokens.back().text.size();
        throw SyntaxError(line_no, column,
                          "expected " + std::to_string(arity) +
                              " entries in row, found " +
                              std::to_string(tokens.size()));
      }
      std::vector<Index> row;
      row.reserve(arity);
      for (auto const& t : tokens) {
        row.push_back(detail::parse_count(t, line_no));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };

  auto declare = [&](detail::Token const& t, std::size_t line_no) {
    if (!detail::is_identifier(t.text)) {
      throw SyntaxError(line_no, t.column,
                        "invalid name '" + std::string(t.text) + "'");
    }
    std::string name(t.text);
    if (!names.insert(name).second) {
      throw Error(ErrorKind::duplicate_name,
                  "line " + std::to_string(line_no) + ": name '" + name +
                      "' is already defined");
    }
    return name;
  };

  while (i < lines.size()) {
    std::size_t const line_no = i + 1;
    auto tokens = detail::tokenize(lines[i++]);
    if (tokens.empty()) {
      continue;
    }
    if (tokens[0].text == "monoid") {
      if (tokens.size() != 3) {
        throw SyntaxError(line_no, tokens[0].column,
                          "expected 'monoid <name> <size>'");
      }
      MonoidBlock block;
      block.name = declare(tokens[1], line_no);
      block.size = detail::parse_count(tokens[2], line_no);
      if (block.size == 0) {
        throw SyntaxError(line_no, tokens[2].column, "size must be positive");
      }
      block.rows = read_rows(block.size, block.size, line_no);
      monoid_sizes[block.name] = block.size;
      doc.monoids.push_back(std::move(block));
    } else if (tokens[0].text == "act") {
      if (tokens.size() != 5 || tokens[2].text != "over") {
        throw SyntaxError(line_no, tokens[0].column,
                          "expected 'act <name> over <monoid> <size>'");
      }
      ActBlock block;
      block.name = declare(tokens[1], line_no);
      block.monoid = std::string(tokens[3].text);
      auto it = monoid_sizes.find(block.monoid);
      if (it == monoid_sizes.end()) {
        throw Error(ErrorKind::unknown_monoid_reference,
                    "line " + std::to_string(line_no) + ": unknown monoid '" +
                        block.monoid + "'");
      }
      block.size = detail::parse_count(tokens[4], line_no);
      if (block.size == 0) {
        throw SyntaxError(line_no, tokens[4].column, "size must be positive");
      }
      block.rows = read_rows(block.size, it->second, line_no);
      doc.acts.push_back(std::move(block));
    } else {
      throw SyntaxError(line_no, tokens[0].column,
                        "expected 'monoid' or 'act', got '" +
                            std::string(tokens[0].text) + "'");
    }
  }
  return doc;
}

/// Monoids first, then acts, each in document order.  Acts may only
/// reference monoids, so this order always reparses.
inline std::string serialize(InputDocument const& doc) {
  std::string out;
  auto rows = [&](std::vector<std::vector<Index>> const& table) {
    for (auto const& row : table) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += (j ? " " : "") + std::to_string(row[j]);
      }
      out += "\n";
    }
  };
  for (auto const& m : doc.monoids) {
    out += "monoid " + m.name + " " + std::to_string(m.size) + "\n";
    rows(m.rows);
  }
  for (auto const& a : doc.acts) {
    out += "act " + a.name + " over " + a.monoid + " " +
           std::to_string(a.size) + "\n";
    rows(a.rows);
  }
  return out;
}

inline MonoidBlock monoid_block(std::string name, Monoid const& m) {
  MonoidBlock block{std::move(name), m.size(), {}};
  for (Index s = 0; s < m.size(); ++s) {
    auto r = m.row(s);
    block.rows.emplace_back(r.begin(), r.end());
  }
  return block;
}

inline ActBlock act_block(std::string name, std::string monoid, Act const& a) {
  ActBlock block{std::move(name), std::move(monoid), a.size(), {}};
  for (Index x = 0; x < a.size(); ++x) {
    auto r = a.row(x);
    block.rows.emplace_back(r.begin(), r.end());
  }
  return block;
}

/// A document whose tables have passed validation.
struct LoadedDocument {
  std::map<std::string, Monoid> monoids;
  std::map<std::string, Act> acts;
  std::vector<std::string> act_order;  // document order
};

inline LoadedDocument load(InputDocument const& doc) {
  LoadedDocument out;
  for (auto const& block : doc.monoids) {
    try {
      auto v = validate_monoid(block.size, block.rows);
      if (v.relabel[0] != 0) {
        throw Error(ErrorKind::no_identity,
                    "element 0 is not the identity (element " +
                        std::to_string(v.relabel[0]) + " is)");
      }
      out.monoids.emplace(block.name, std::move(v.monoid));
    } catch (Error const& e) {
      throw Error(e.kind(), "monoid '" + block.name + "': " + e.what());
    }
  }
  for (auto const& block : doc.acts) {
    try {
      auto a = validate_act(out.monoids.at(block.monoid), block.size,
                            block.rows);
      out.acts.emplace(block.name, std::move(a));
      out.act_order.push_back(block.name);
    } catch (Error const& e) {
      throw Error(e.kind(), "act '" + block.name + "': " + e.what());
    }
  }
  return out;
}

}  // namespace hopfact

#endif  // HOPFACT_TEXT_FORMAT_HPP_
