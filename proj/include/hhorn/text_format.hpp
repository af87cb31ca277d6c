#pragma once

// Plain-text formats shared by the CLI and the fixtures.
//
// Hypergraph: one edge per line, variable names separated by whitespace, the
// token {} for the empty edge.  CNF: one clause per line as `b1 b2 -> h`, or
// `-> h` for an empty body.  In both, lines starting with # are comments and
// an optional first line `vars: a b c` fixes the ground set and its order;
// without it the ground set is every mentioned name in order of appearance.

#include <cctype>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hhorn/error.hpp"
#include "hhorn/horn_cnf.hpp"
#include "hhorn/hypergraph.hpp"
#include "hhorn/var_set.hpp"

namespace hhorn::text {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

/// Non-comment, non-blank lines, plus the names from a leading vars: line.
struct Document {
  std::optional<std::vector<std::string>> vars;
  std::vector<Line> lines;
};

inline Document read_document(std::istream& in) {
  Document doc;
  std::string raw;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("vars:", 0) == 0) {
      if (!first) throw ParseError("line " + std::to_string(number) + ": vars: must come first");
      doc.vars = split_ws(line.substr(5));
    } else {
      doc.lines.push_back({number, std::string(line)});
    }
    first = false;
  }
  return doc;
}

/// Collects names in order of first appearance when no vars: line is given.
class GroundBuilder {
 public:
  explicit GroundBuilder(const std::optional<std::vector<std::string>>& fixed) {
    if (fixed) ground_ = GroundSet(*fixed);
  }

  void mention(const std::string& name, std::size_t line) {
    if (ground_) {
      if (!ground_->has(name)) {
        throw ParseError("line " + std::to_string(line) + ": variable '" + name +
                         "' is not declared in vars:");
      }
      return;
    }
    for (const auto& n : names_) {
      if (n == name) return;
    }
    names_.push_back(name);
  }

  GroundSet build() const { return ground_ ? *ground_ : GroundSet(names_); }

 private:
  std::optional<GroundSet> ground_;
  std::vector<std::string> names_;
};

inline void check_name(const std::string& tok, std::size_t line) {
  if (tok == "{}" || tok == "->" || tok.find(',') != std::string::npos ||
      tok.find("->") != std::string::npos) {
    throw ParseError("line " + std::to_string(line) + ": bad variable name '" + tok + "'");
  }
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::istream& in) {
  auto doc = detail::read_document(in);
  detail::GroundBuilder builder(doc.vars);
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : doc.lines) {
    auto toks = detail::split_ws(line.text);
    if (toks.size() == 1 && toks[0] == "{}") {
      rows.emplace_back();
      continue;
    }
    for (const auto& t : toks) {
      detail::check_name(t, line.number);
      builder.mention(t, line.number);
    }
    rows.push_back(std::move(toks));
  }
  GroundSet ground = builder.build();
  std::vector<VarSet> edges;
  edges.reserve(rows.size());
  for (const auto& r : rows) edges.push_back(ground.set_of(r));
  return Hypergraph(std::move(ground), std::move(edges));
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

inline HornCnf parse_cnf(std::istream& in) {
  auto doc = detail::read_document(in);
  detail::GroundBuilder builder(doc.vars);
  struct Row {
    std::vector<std::string> body;
    std::string head;
    std::size_t line;
  };
  std::vector<Row> rows;
  for (const auto& line : doc.lines) {
    const auto arrow = line.text.find("->");
    if (arrow == std::string::npos || line.text.find("->", arrow + 2) != std::string::npos) {
      throw ParseError("line " + std::to_string(line.number) + ": expected `body -> head`");
    }
    auto body = detail::split_ws(std::string_view(line.text).substr(0, arrow));
    auto head = detail::split_ws(std::string_view(line.text).substr(arrow + 2));
    if (head.size() != 1) {
      throw ParseError("line " + std::to_string(line.number) + ": clause needs exactly one head");
    }
    for (const auto& t : body) detail::check_name(t, line.number);
    detail::check_name(head[0], line.number);
    for (const auto& t : body) builder.mention(t, line.number);
    builder.mention(head[0], line.number);
    rows.push_back({std::move(body), head[0], line.number});
  }
  GroundSet ground = builder.build();
  std::vector<DefiniteClause> clauses;
  for (const auto& r : rows) {
    DefiniteClause c{ground.set_of(r.body), ground.index_of(r.head)};
    if (c.body.contains(c.head)) {
      throw ParseError("line " + std::to_string(r.line) + ": head '" + r.head +
                       "' also occurs in the body");
    }
    clauses.push_back(c);
  }
  return HornCnf(std::move(ground), clauses);
}

inline HornCnf parse_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cnf(in);
}

/// Comma-separated names, as given on the command line.  Blank means empty.
inline VarSet parse_set(const GroundSet& ground, std::string_view text) {
  VarSet s;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto item = detail::trim(rest.substr(0, comma));
    if (!item.empty()) {
      s.insert(ground.index_of(item));
    } else if (comma != std::string_view::npos || !detail::trim(text).empty()) {
      throw ParseError("empty item in set '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return s;
}

/// Members in ground order separated by spaces; {} when empty.
inline std::string format_set(const GroundSet& ground, const VarSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (Var v : s) {
    if (!out.empty()) out += ' ';
    out += ground.name(v);
  }
  return out;
}

inline std::vector<std::string> set_names(const GroundSet& ground, const VarSet& s) {
  std::vector<std::string> out;
  for (Var v : s) out.push_back(ground.name(v));
  return out;
}

inline std::string format_vars(const GroundSet& ground) {
  std::string out = "vars:";
  for (const auto& n : ground.names()) out += " " + n;
  return out;
}

inline std::string format_hypergraph(const Hypergraph& h) {
  std::string out = format_vars(h.ground()) + "\n";
  for (const auto& e : h) out += format_set(h.ground(), e) + "\n";
  return out;
}

inline std::string format_clause(const GroundSet& ground, const DefiniteClause& c) {
  std::string out;
  for (Var v : c.body) out += ground.name(v) + " ";
  return out + "-> " + ground.name(c.head);
}

inline std::string format_cnf(const HornCnf& phi) {
  std::string out = format_vars(phi.ground()) + "\n";
  for (const auto& c : phi.clauses()) out += format_clause(phi.ground(), c) + "\n";
  return out;
}

}  // namespace hhorn::text
