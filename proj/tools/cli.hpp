#pragma once

// Command-line front end.  Exit status: 0 affirmative/success, 1 negative
// verdict, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhorn/hhorn.hpp"

namespace hhorn::cli {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_usage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline HornCnf load_cnf(const std::string& path, bool from_hypergraph) {
  const auto text = read_file(path);
  if (from_hypergraph) return circular_cnf(text::parse_hypergraph(text));
  return text::parse_cnf(text);
}

inline Hypergraph load_hypergraph(const std::string& path) {
  return text::parse_hypergraph(read_file(path));
}

inline std::vector<std::string> json_names(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw MalformedWitness(std::string("witness needs an array field '") + field + "'");
  }
  std::vector<std::string> out;
  for (const auto& item : j[field]) {
    if (item.is_string()) {
      out.push_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      out.push_back(std::to_string(item.get<long long>()));
    } else {
      throw MalformedWitness(std::string("entries of '") + field + "' must be names");
    }
  }
  return out;
}

/// Parses {"kind":"pair","i":[..],"iprime":[..]} or {"kind":"gap","s":[..]}.
inline SelfDualWitness parse_witness(const GroundSet& ground, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedWitness(std::string("witness is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw MalformedWitness("witness needs a string field 'kind'");
  }
  auto to_set = [&](const char* field) {
    VarSet s;
    for (const auto& name : json_names(j, field)) {
      if (!ground.has(name)) throw MalformedWitness("unknown variable '" + name + "' in witness");
      s.insert(ground.index_of(name));
    }
    return s;
  };
  const auto kind = j["kind"].get<std::string>();
  if (kind == "pair") return PairWitness{to_set("i"), to_set("iprime")};
  if (kind == "gap") return GapWitness{to_set("s")};
  throw MalformedWitness("unknown witness kind '" + kind + "'");
}

/// Writes sets and families either as text lines or as JSON arrays.
class Printer {
 public:
  Printer(std::ostream& out, bool json) : out_(out), json_(json) {}

  bool json() const { return json_; }

  void set(const GroundSet& g, const VarSet& s) {
    if (json_) {
      out_ << nlohmann::json(text::set_names(g, s)).dump() << "\n";
    } else {
      out_ << text::format_set(g, s) << "\n";
    }
  }

  void family(const Hypergraph& h) {
    if (json_) {
      out_ << family_json(h).dump() << "\n";
    } else {
      out_ << text::format_hypergraph(h);
    }
  }

  static nlohmann::json family_json(const Hypergraph& h) {
    auto arr = nlohmann::json::array();
    for (const auto& e : h) arr.push_back(text::set_names(h.ground(), e));
    return arr;
  }

  void verdict(bool yes) {
    if (json_) {
      out_ << nlohmann::json{{"result", yes}}.dump() << "\n";
    } else {
      out_ << (yes ? "yes" : "no") << "\n";
    }
  }

  void object(const nlohmann::json& j) { out_ << j.dump() << "\n"; }

  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool json_;
};

struct Options {
  std::string format = "text";
  std::string input;
  std::string lhs;
  std::string rhs;
  std::string set;
  std::string body;
  std::string head;
  std::string witness;
  std::string emit_witness;
  std::string check;
  bool from_hypergraph = false;
  bool stats = false;
  std::optional<std::uint64_t> limit;
};

inline int run_recognize(const Options& o, Printer& p) {
  const auto psi = load_cnf(o.input, o.from_hypergraph);
  const auto r = recognize(psi);
  const auto& g = psi.ground();
  if (r.hypergraph_horn()) {
    if (!o.emit_witness.empty()) write_file(o.emit_witness, text::format_hypergraph(*r.witness));
    if (p.json()) {
      p.object({{"hypergraph_horn", true}, {"witness", Printer::family_json(*r.witness)}});
    } else {
      p.raw() << "# hypergraph Horn: yes\n" << text::format_hypergraph(*r.witness);
    }
    return exit_yes;
  }
  if (p.json()) {
    p.object({{"hypergraph_horn", false}, {"certificate", text::set_names(g, *r.certificate)}});
  } else {
    p.raw() << "# hypergraph Horn: no\n"
            << "# false set with no implicate set one element outside it:\n"
            << text::format_set(g, *r.certificate) << "\n";
  }
  return exit_no;
}

inline int run_realize_keys(const Options& o, Printer& p, std::ostream& err) {
  const auto keys = load_hypergraph(o.input);
  const auto r = realize_keys(keys);
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  const auto& g = keys.ground();
  if (r.realizable()) {
    if (!o.emit_witness.empty()) write_file(o.emit_witness, text::format_hypergraph(*r.witness));
    if (p.json()) {
      p.object({{"realizable", true}, {"witness", Printer::family_json(*r.witness)}});
    } else {
      p.raw() << "# realizable: yes\n" << text::format_hypergraph(*r.witness);
    }
    return exit_yes;
  }
  if (p.json()) {
    p.object({{"realizable", false}, {"stalled", text::set_names(g, *r.stalled)}});
  } else {
    p.raw() << "# realizable: no\n# closure stalled at:\n" << text::format_set(g, *r.stalled) << "\n";
  }
  return exit_no;
}

inline int run_enumerate(const Options& o, Printer& p, std::ostream& err) {
  const auto psi = load_cnf(o.input, o.from_hypergraph);
  EnumerationCursor cursor(psi);
  const auto& g = psi.ground();
  std::uint64_t printed = 0;
  auto& out = p.raw();
  if (p.json()) out << "[" << std::flush;
  while (!o.limit || printed < *o.limit) {
    auto s = cursor.next();
    if (!s) break;
    if (p.json()) {
      out << (printed == 0 ? "\n" : ",\n") << nlohmann::json(text::set_names(g, *s)).dump();
    } else {
      out << text::format_set(g, *s) << "\n";
    }
    out << std::flush;
    ++printed;
  }
  if (p.json()) out << (printed == 0 ? "]\n" : "\n]\n") << std::flush;
  if (o.stats) {
    err << "emitted " << cursor.emitted_count() << ", extension calls "
        << cursor.oracle_call_count() << ", max calls between emissions "
        << cursor.max_calls_between_emissions() << "\n";
  }
  return exit_yes;
}

inline int run_oracle(const Options& o, Printer& p) {
  const auto psi = load_cnf(o.input, o.from_hypergraph);
  const auto table = oracle::table_of(psi);
  if (o.check == "characterizations") {
    const auto r = oracle::check_theorem41(table);
    const char* names[] = {"circular-representation", "majorant-fixpoint", "double-dual-fixpoint",
                           "implicate-hit",           "generator-hit",     "exchange"};
    const auto claims = r.claims();
    if (p.json()) {
      nlohmann::json j = nlohmann::json::object();
      for (std::size_t i = 0; i < claims.size(); ++i) j[names[i]] = claims[i];
      j["agree"] = r.all_agree();
      p.object(j);
    } else {
      for (std::size_t i = 0; i < claims.size(); ++i) {
        p.raw() << names[i] << ": " << (claims[i] ? "yes" : "no") << "\n";
      }
      p.raw() << "agree: " << (r.all_agree() ? "yes" : "no") << "\n";
    }
    return r.all_agree() && claims[0] ? exit_yes : exit_no;
  }
  if (o.check == "hypergraph-horn") {
    const bool yes = oracle::is_hypergraph_horn(table);
    p.verdict(yes);
    return yes ? exit_yes : exit_no;
  }
  if (o.check == "implicate-sets") {
    p.family(oracle::implicate_sets_of(table));
  } else if (o.check == "generator") {
    p.family(oracle::standard_generator_of(oracle::implicate_sets_of(table)));
  } else if (o.check == "keys") {
    p.family(oracle::minimal_keys_of(table));
  } else if (o.check == "max-true-sets") {
    p.family(oracle::max_nontrivial_true_sets_of(table));
  } else if (o.check == "true-sets") {
    p.family(table.true_sets());
  } else if (o.check == "idual") {
    p.family(oracle::idual(table).true_sets());
  } else if (o.check == "majorant") {
    p.family(oracle::horn_majorant(table).true_sets());
  } else {
    throw UsageError("unknown oracle check '" + o.check + "'");
  }
  return exit_yes;
}

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hypergraph Horn functions: closures, cores, recognition, key realization"};
  app.name("hhorn");
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto cnf_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Horn CNF file")->required();
    sub->add_flag("--from-hypergraph", o.from_hypergraph,
                  "Read a hypergraph and use its circular CNF");
  };

  auto* closure_cmd = app.add_subcommand("closure", "Forward-chaining closure of a set");
  cnf_input(closure_cmd);
  closure_cmd->add_option("--set", o.set, "Comma-separated variables")->required();

  auto* core_cmd = app.add_subcommand("core", "Largest implicate set inside a set");
  cnf_input(core_cmd);
  core_cmd->add_option("--set", o.set, "Comma-separated variables")->required();

  auto* implicate_cmd =
      app.add_subcommand("implicate", "Test a clause (--body/--head) or an implicate set (--set)");
  cnf_input(implicate_cmd);
  auto* body_opt = implicate_cmd->add_option("--body", o.body, "Clause body");
  auto* head_opt = implicate_cmd->add_option("--head", o.head, "Clause head");
  auto* iset_opt = implicate_cmd->add_option("--set", o.set, "Candidate implicate set");
  head_opt->excludes(iset_opt);
  body_opt->excludes(iset_opt);

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide hypergraph Hornness");
  cnf_input(recognize_cmd);
  recognize_cmd->add_option("--emit-witness", o.emit_witness, "Write the witness hypergraph here");

  auto* keys_cmd = app.add_subcommand("realize-keys", "Realize a key family");
  keys_cmd->add_option("--input", o.input, "Key hypergraph file")->required();
  keys_cmd->add_option("--emit-witness", o.emit_witness, "Write the witness hypergraph here");

  auto* enum_cmd = app.add_subcommand("enum-implicate-sets", "Stream all implicate sets");
  cnf_input(enum_cmd);
  enum_cmd->add_option("--limit", o.limit, "Stop after this many sets");
  enum_cmd->add_flag("--stats", o.stats, "Report search counters on stderr");

  auto* geq_cmd = app.add_subcommand("idual-geq", "Decide lhs >= rhs^i");
  geq_cmd->add_option("--lhs", o.lhs, "Horn CNF file")->required();
  geq_cmd->add_option("--rhs", o.rhs, "Horn CNF file")->required();
  geq_cmd->add_flag("--from-hypergraph", o.from_hypergraph, "Both files are hypergraphs");

  auto* verify_cmd = app.add_subcommand("self-idual-verify", "Check a non-self-duality witness");
  cnf_input(verify_cmd);
  verify_cmd->add_option("--witness", o.witness, "Witness JSON file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Drop redundant edges of a hypergraph");
  reduce_cmd->add_option("--input", o.input, "Hypergraph file")->required();

  auto* axiom_cmd = app.add_subcommand("circuit-axiom", "Check the circuit exchange axiom");
  axiom_cmd->add_option("--input", o.input, "Hypergraph file")->required();

  auto* trans_cmd = app.add_subcommand("transversals", "Minimal transversals of a hypergraph");
  trans_cmd->add_option("--input", o.input, "Hypergraph file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force checks over the truth table");
  oracle_cmd
      ->add_option("check", o.check,
                   "characterizations | hypergraph-horn | implicate-sets | generator | keys | "
                   "max-true-sets | true-sets | idual | majorant")
      ->required();
  cnf_input(oracle_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_yes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_yes;
  } catch (const CLI::ParseError& e) {
    err << "hhorn: " << e.what() << "\n";
    return exit_usage;
  }

  Printer p(out, o.format == "json");
  try {
    if (closure_cmd->parsed() || core_cmd->parsed()) {
      const auto psi = load_cnf(o.input, o.from_hypergraph);
      const VarSet s = text::parse_set(psi.ground(), o.set);
      p.set(psi.ground(), closure_cmd->parsed() ? closure(psi, s) : core(psi, s));
      return exit_yes;
    }
    if (implicate_cmd->parsed()) {
      const auto psi = load_cnf(o.input, o.from_hypergraph);
      bool yes = false;
      if (iset_opt->count() > 0) {
        yes = is_implicate_set(psi, text::parse_set(psi.ground(), o.set));
      } else {
        if (head_opt->count() == 0) throw UsageError("implicate needs --head or --set");
        const VarSet body = text::parse_set(psi.ground(), o.body);
        const Var head = psi.ground().index_of(o.head);
        if (body.contains(head)) throw UsageError("head occurs in the body");
        yes = is_implicate(psi, body, head);
      }
      p.verdict(yes);
      return yes ? exit_yes : exit_no;
    }
    if (recognize_cmd->parsed()) return run_recognize(o, p);
    if (keys_cmd->parsed()) return run_realize_keys(o, p, err);
    if (enum_cmd->parsed()) return run_enumerate(o, p, err);
    if (geq_cmd->parsed()) {
      const auto psi = load_cnf(o.lhs, o.from_hypergraph);
      const auto gamma = load_cnf(o.rhs, o.from_hypergraph);
      if (!(psi.ground() == gamma.ground())) throw UsageError("lhs and rhs use different vars");
      const auto r = check_geq_idual(psi, gamma);
      if (r.holds()) {
        p.verdict(true);
        return exit_yes;
      }
      if (p.json()) {
        p.object({{"result", false},
                  {"counterexample", text::set_names(psi.ground(), *r.counterexample)}});
      } else {
        p.raw() << "no\n# false set of lhs that rhs^i accepts:\n"
                << text::format_set(psi.ground(), *r.counterexample) << "\n";
      }
      return exit_no;
    }
    if (verify_cmd->parsed()) {
      const auto psi = load_cnf(o.input, o.from_hypergraph);
      const auto w = parse_witness(psi.ground(), read_file(o.witness));
      const bool yes = verify_self_dual_witness(psi, w);
      p.verdict(yes);
      return yes ? exit_yes : exit_no;
    }
    if (reduce_cmd->parsed()) {
      p.family(reduce_representation(load_hypergraph(o.input)));
      return exit_yes;
    }
    if (axiom_cmd->parsed()) {
      const auto h = load_hypergraph(o.input);
      const auto r = check_circuit_axiom(h);
      if (r.holds()) {
        p.verdict(true);
        return exit_yes;
      }
      const auto& v = *r.violation;
      const auto& g = h.ground();
      if (p.json()) {
        p.object({{"result", false},
                  {"c1", text::set_names(g, v.first)},
                  {"c2", text::set_names(g, v.second)},
                  {"u", g.name(v.shared)}});
      } else {
        p.raw() << "no\n# C1: " << text::format_set(g, v.first)
                << "\n# C2: " << text::format_set(g, v.second) << "\n# u: " << g.name(v.shared)
                << "\n";
      }
      return exit_no;
    }
    if (trans_cmd->parsed()) {
      p.family(minimal_transversals(load_hypergraph(o.input)));
      return exit_yes;
    }
    if (oracle_cmd->parsed()) return run_oracle(o, p);
  } catch (const Error& e) {
    err << "hhorn: " << e.what() << "\n";
    return exit_usage;
  }
  err << "hhorn: no subcommand\n";
  return exit_usage;
}

}  // namespace hhorn::cli
