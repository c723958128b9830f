#pragma once

// The defsem command line, as a function so it can be driven in-process.
//
// Exit status: 0 success, 1 false verdict (equiv, summarize) or campaign
// violations, 2 usage, input or size-guard errors.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "defsem/af_io.hpp"
#include "defsem/campaign.hpp"
#include "defsem/contraction.hpp"
#include "defsem/oracle.hpp"
#include "defsem/reasons.hpp"
#include "defsem/serialize.hpp"

namespace defsem {

namespace cli_detail {

struct Options {
  bool json = false;
  std::string format;  // apx, edges or empty for by-extension
  std::string side = "defense";
  std::string sem;
  std::string kind;
  std::string args;
  bool strict_ii = false;
  bool strict_rr = false;
  bool gap = false;
  bool no_timing = false;
  std::vector<std::string> remove;
  std::vector<std::string> files;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AfFormat format_for(const std::string& path, const std::string& flag) {
  if (flag == "apx") return AfFormat::apx;
  if (flag == "edges") return AfFormat::edge_list;
  if (!flag.empty()) throw PreconditionError("unknown format '" + flag + "'");
  return format_for_path(path);
}

inline ArgumentationFramework load(const std::string& path, const Options& o) {
  try {
    return parse_af(read_file(path), format_for(path, o.format));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

inline Semantics semantics(const Options& o, Semantics fallback) {
  if (o.sem.empty()) return fallback;
  auto s = parse_semantics(o.sem);
  if (!s) throw PreconditionError("unknown semantics '" + o.sem + "'");
  return *s;
}

inline ArgumentSet argument_list(const ArgumentationFramework& f, const std::string& text) {
  ArgumentSet out;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    Argument a(tok);
    f.index(a);
    out.insert(a);
  }
  return out;
}

inline std::string text(const ArgumentSet& s) { return detail::set_text(s); }
inline std::string text(const Defenses& d) { return detail::set_text(d); }

inline void dump(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline ReasonOptions reason_options(const Options& o) {
  ReasonOptions r;
  r.literal_root_formula = o.strict_rr;
  r.defense.strict_bottom = o.strict_ii;
  return r;
}

inline int cmd_defenses(const Options& o, std::ostream& out) {
  auto f = load(o.files.at(0), o);
  auto s = compute_defenses(f);
  if (o.json) {
    dump(out, Json{{"framework", to_json(f)}, {"count", s.size()}, {"defenses", to_json(s.defenses())}});
  } else {
    for (const Defense& d : s.defenses()) out << d.to_string() << "\n";
  }
  return 0;
}

inline int cmd_extensions(const Options& o, std::ostream& out) {
  auto f = load(o.files.at(0), o);
  Semantics sem = semantics(o, Semantics::complete);
  if (o.side == "argument") {
    auto exts = enumerate_argument_extensions(f, sem);
    if (o.json) {
      Json list = Json::array();
      for (const auto& e : exts) list.push_back(to_json(e.members));
      dump(out, Json{{"side", "argument"},
                     {"semantics", std::string(argument_semantics_name(sem))},
                     {"count", exts.size()},
                     {"extensions", list}});
    } else {
      for (const auto& e : exts) out << text(e.members) << "\n";
    }
  } else if (o.side == "defense") {
    DefenseOptions opt{o.strict_ii};
    auto exts = enumerate_defense_extensions(compute_defenses(f), sem, opt);
    if (o.json) {
      Json list = Json::array();
      for (const auto& e : exts)
        list.push_back({{"defenses", to_json(e.members)}, {"defendees", to_json(defendees(e.members))}});
      dump(out, Json{{"side", "defense"},
                     {"semantics", std::string(defense_semantics_name(sem))},
                     {"count", exts.size()},
                     {"extensions", list}});
    } else {
      for (const auto& e : exts) out << text(e.members) << "\n";
    }
  } else {
    throw PreconditionError("--side must be argument or defense");
  }
  return 0;
}

inline int cmd_contract(const Options& o, std::ostream& out) {
  auto f = load(o.files.at(0), o);
  auto s = compute_defenses(f);
  ContractionResult r;
  if (o.remove.empty()) {
    r = auto_contract(s);
  } else {
    Defenses c;
    for (const auto& t : o.remove) c.insert(parse_defense(t));
    r = contract(s, c);
  }
  Defenses gap;
  if (o.gap) {
    Defenses ok = oracle::satisfiable_defenses(r.remaining, DefenseOptions{o.strict_ii});
    for (const Defense& d : r.remaining.defenses())
      if (!ok.contains(d)) gap.insert(d);
  }
  if (o.json) {
    Json j = to_json(r);
    if (o.gap) j["unsatisfiable_remaining"] = to_json(gap);
    dump(out, j);
    return 0;
  }
  out << "removed " << r.removed.size() << " of " << s.size() << "\n";
  for (const Defense& d : r.removed) {
    out << "  " << d.to_string();
    if (auto it = r.rule_trace.find(d); it != r.rule_trace.end()) {
      std::string tags;
      for (UnsatRule u : it->second) tags += (tags.empty() ? "" : ",") + std::string(unsat_rule_name(u));
      out << "  " << tags;
    }
    out << "\n";
  }
  out << "remaining " << text(r.remaining.defenses()) << "\n";
  if (o.remove.empty()) {
    out << "rule                     count\n";
    for (UnsatRule u : kAllUnsatRules) {
      std::size_t n = 0;
      for (const auto& [d, tags] : r.rule_trace) n += tags.contains(u);
      out << std::left << std::setw(25) << unsat_rule_name(u) << n << "\n";
    }
  }
  if (o.gap) out << "unsatisfiable remaining " << text(gap) << "\n";
  return 0;
}

inline void print_verdict(std::ostream& out, const std::string& label, const Verdict& v) {
  out << std::left << std::setw(16) << label << (v.holds ? "true" : "false");
  if (!v.holds) out << "  " << v.witness;
  out << "\n";
}

inline int cmd_equiv(const Options& o, std::ostream& out) {
  auto f = load(o.files.at(0), o);
  auto g = load(o.files.at(1), o);
  std::string kind = o.kind.empty() ? "all" : o.kind;
  EquivalenceQuery q;
  q.options = reason_options(o);
  std::vector<Semantics> sems;
  if (o.sem.empty()) sems.push_back(Semantics::complete);
  else sems.push_back(semantics(o, Semantics::complete));
  bool any = kind == "all";
  if (kind == "standard" || any) q.standard = sems;
  if (kind == "strong" || any) q.strong_co = true;
  if (kind == "defense" || any) q.defense = sems;
  if (kind == "root" || any) {
    q.root = sems.front();
    if (!o.args.empty()) {
      ArgumentSet b;
      std::string tok;
      std::stringstream ss(o.args);
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) b.insert(Argument(tok));
      q.root_arguments = b;
    } else if (any) {
      bool shared = std::any_of(f.arguments().begin(), f.arguments().end(),
                                [&](const Argument& a) { return g.contains(a); });
      if (!shared) q.root.reset();
    }
  }
  if (!any && kind != "standard" && kind != "strong" && kind != "defense" && kind != "root")
    throw PreconditionError("--kind must be standard, strong, defense, root or all");
  auto r = compare_frameworks(f, g, q);
  if (o.json) {
    dump(out, to_json(r));
  } else {
    for (const auto& [s, v] : r.standard)
      print_verdict(out, "standard " + std::string(argument_semantics_name(s)), v);
    if (r.strong_co) print_verdict(out, "strong co", *r.strong_co);
    for (const auto& [s, v] : r.defense)
      print_verdict(out, "defense " + std::string(defense_semantics_name(s)), v);
    if (r.root)
      print_verdict(out, "root " + std::string(defense_semantics_name(r.root_semantics)) + " " +
                             text(r.root_arguments),
                    *r.root);
  }
  return r.all_hold() ? 0 : 1;
}

inline int cmd_reasons(const Options& o, std::ostream& out) {
  auto f = load(o.files.at(0), o);
  Semantics sem = semantics(o, Semantics::complete);
  std::string kind = o.kind.empty() ? "root" : o.kind;
  if (kind != "root" && kind != "direct") throw PreconditionError("--kind must be direct or root");
  ReasonOptions opt = reason_options(o);
  auto exts = enumerate_defense_extensions(compute_defenses(f), sem, opt.defense);
  ArgumentSet which = o.args.empty() ? f.argument_set() : argument_list(f, o.args);
  std::vector<ReasonSet> sets;
  for (const Argument& a : which)
    sets.push_back(kind == "root" ? root_reasons(f, exts, a, opt) : direct_reasons(f, exts, a));
  if (o.json) {
    Json ex = Json::array();
    for (const auto& e : exts) ex.push_back(to_json(e.members));
    Json reasons = Json::object();
    for (const auto& r : sets) {
      Json per = Json::array();
      for (const auto& entry : r.per_extension)
        per.push_back({{"extension", entry.extension}, {"reason", to_json(entry.reason)}});
      reasons[r.argument.name()] = per;
    }
    dump(out, Json{{"kind", kind},
                   {"semantics", std::string(defense_semantics_name(sem))},
                   {"extensions", ex},
                   {"reasons", reasons}});
  } else {
    for (std::size_t i = 0; i < exts.size(); ++i) out << "D" << i << " " << text(exts[i].members) << "\n";
    for (const auto& r : sets) {
      out << r.argument.name() << " {";
      for (std::size_t i = 0; i < r.per_extension.size(); ++i)
        out << (i ? ", " : "") << reason_to_string(r.per_extension[i].reason);
      out << "}\n";
    }
  }
  return 0;
}

inline int cmd_summarize(const Options& o, std::ostream& out) {
  auto f = load(o.files.at(0), o);
  auto h = load(o.files.at(1), o);
  Semantics sem = semantics(o, Semantics::complete);
  ReasonOptions opt = reason_options(o);
  bool verdict = is_summarization(f, h, sem, opt);
  ArgumentSet ours = f.argument_set(), theirs = h.argument_set();
  bool subset = !ours.empty() && ours.size() < theirs.size() &&
                std::includes(theirs.begin(), theirs.end(), ours.begin(), ours.end());
  std::optional<Verdict> root;
  if (subset) {
    EquivalenceQuery q;
    q.root = sem;
    q.root_arguments = ours;
    q.options = opt;
    root = compare_frameworks(f, h, q).root;
  }
  if (o.json) {
    dump(out, Json{{"verdict", verdict},
                   {"semantics", std::string(defense_semantics_name(sem))},
                   {"arguments", to_json(ours)},
                   {"strict_subset", subset},
                   {"root", root ? to_json(*root) : Json(nullptr)}});
  } else {
    out << "summarization " << (verdict ? "true" : "false") << "\n";
    out << "strict subset " << (subset ? "true" : "false") << "\n";
    if (root) print_verdict(out, "root " + std::string(defense_semantics_name(sem)), *root);
  }
  return verdict ? 0 : 1;
}

inline int cmd_campaign(const Options& o, std::ostream& out) {
  auto spec = campaign_spec_from_json(Json::parse(read_file(o.files.at(0))));
  auto r = run_theorem_campaign(spec);
  if (o.json) {
    dump(out, to_json(r));
  } else {
    out << "scope " << r.scope << " seed " << r.seed << " instances " << r.instances_checked << "\n";
    out << std::left << std::setw(30) << "property" << std::right << std::setw(9) << "checked"
        << std::setw(9) << "skipped" << std::setw(6) << "fail" << "\n";
    for (const auto& [id, t] : r.properties) {
      std::size_t bad = 0;
      for (const auto& v : r.violations) bad += v.property == id;
      out << std::left << std::setw(30) << id << std::right << std::setw(9) << t.checked
          << std::setw(9) << t.skipped << std::setw(6) << bad;
      if (property_info(id).pairwise) out << "  premise held " << t.premises;
      out << "\n";
    }
    for (const auto& v : r.violations)
      out << "violation " << v.property << " instance " << v.instance << ": " << v.witness << "\n";
    for (const auto& [k, ms] : r.timing_ms) out << "time " << k << " " << ms << " ms\n";
    out << (r.ok() ? "ok" : "FAILED") << "\n";
  }
  return r.ok() ? 0 : 1;
}

inline int cmd_bench(const Options& o, std::ostream& out) {
  const std::string& path = o.files.at(0);
  Json spec = Json::parse(read_file(path));
  std::size_t reps = spec.value("repetitions", kMinBenchmarkRepetitions);
  std::vector<std::pair<std::string, BenchmarkRow>> rows;
  if (spec.contains("specs"))
    for (const auto& s : spec.at("specs")) {
      auto g = generator_spec_from_json(s);
      auto r = benchmark_contraction({g}, reps).rows.at(0);
      rows.emplace_back("n=" + std::to_string(g.argument_count) + " seed=" + std::to_string(g.seed), r);
    }
  if (spec.contains("frameworks")) {
    auto base = std::filesystem::path(path).parent_path();
    for (const auto& p : spec.at("frameworks")) {
      auto file = (base / p.get<std::string>()).string();
      rows.emplace_back(p.get<std::string>(), benchmark_framework(load(file, o), reps));
    }
  }
  const bool timing = !o.no_timing;
  if (o.json) {
    Json list = Json::array();
    for (const auto& [label, r] : rows) {
      Json j = to_json(r, timing);
      j["instance"] = label;
      list.push_back(j);
    }
    dump(out, Json{{"repetitions", std::max(reps, kMinBenchmarkRepetitions)}, {"rows", list}});
  } else {
    for (const auto& [label, r] : rows) {
      out << label << "  defenses " << r.defenses << "  removed " << r.removed << "  fraction "
          << r.removed_fraction;
      if (timing) out << "  full " << r.full_ms << " ms  contracted " << r.contracted_ms << " ms  speedup " << r.speedup;
      out << "\n";
    }
  }
  return 0;
}

inline int cmd_export_dot(const Options& o, std::ostream& out) {
  auto f = load(o.files.at(0), o);
  if (o.json) dump(out, Json{{"dot", to_dot(f)}});
  else out << to_dot(f);
  return 0;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli_detail::Options;
  Options o;
  CLI::App app{"defense semantics for abstract argumentation frameworks", "defsem"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, std::size_t files, const std::string& what) {
    sub->add_option("files", o.files, what)->required()->expected(static_cast<int>(files));
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--format", o.format, "input format: apx or edges (default: by extension)");
  };
  auto semantics_flags = [&](CLI::App* sub) {
    sub->add_option("--sem", o.sem, "co, pr, gr or st (either case)");
    sub->add_flag("--strict-ii", o.strict_ii, "literal reading of admissibility condition (ii)");
  };

  auto* defenses = app.add_subcommand("defenses", "list Defs(F)");
  common(defenses, 1, "framework file");
  auto* extensions = app.add_subcommand("extensions", "enumerate extensions");
  common(extensions, 1, "framework file");
  semantics_flags(extensions);
  extensions->add_option("--side", o.side, "argument or defense (default defense)");
  auto* contract_cmd = app.add_subcommand("contract", "contract unsatisfiable defenses");
  common(contract_cmd, 1, "framework file");
  contract_cmd->add_option("--remove", o.remove, "remove the given (x,y,z) defenses instead of auto contraction");
  contract_cmd->add_flag("--gap", o.gap, "also list remaining defenses that are unsatisfiable");
  contract_cmd->add_flag("--strict-ii", o.strict_ii, "literal reading of admissibility condition (ii)");
  auto* equiv = app.add_subcommand("equiv", "compare two frameworks");
  common(equiv, 2, "two framework files");
  semantics_flags(equiv);
  equiv->add_option("--kind", o.kind, "standard, strong, defense, root or all (default all)");
  equiv->add_option("--args", o.args, "comma separated arguments for root equivalence");
  equiv->add_flag("--strict-rr", o.strict_rr, "root reasons by the bare closure formula");
  auto* reasons = app.add_subcommand("reasons", "direct or root reasons");
  common(reasons, 1, "framework file");
  semantics_flags(reasons);
  reasons->add_option("--kind", o.kind, "direct or root (default root)");
  reasons->add_option("--args", o.args, "comma separated arguments (default all)");
  reasons->add_flag("--strict-rr", o.strict_rr, "root reasons by the bare closure formula");
  auto* summarize = app.add_subcommand("summarize", "is the first framework a summarization of the second");
  common(summarize, 2, "summary and original framework files");
  semantics_flags(summarize);
  summarize->add_flag("--strict-rr", o.strict_rr, "root reasons by the bare closure formula");
  auto* campaign = app.add_subcommand("campaign", "run a property campaign from a JSON spec");
  common(campaign, 1, "campaign spec file");
  auto* bench = app.add_subcommand("bench", "time CO enumeration with and without contraction");
  common(bench, 1, "benchmark spec file");
  bench->add_flag("--no-timing", o.no_timing, "omit wall-clock fields");
  auto* dot = app.add_subcommand("export-dot", "write the framework as DOT");
  common(dot, 1, "framework file");

  std::vector<std::string> argv_store{"defsem"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (defenses->parsed()) return cli_detail::cmd_defenses(o, out);
    if (extensions->parsed()) return cli_detail::cmd_extensions(o, out);
    if (contract_cmd->parsed()) return cli_detail::cmd_contract(o, out);
    if (equiv->parsed()) return cli_detail::cmd_equiv(o, out);
    if (reasons->parsed()) return cli_detail::cmd_reasons(o, out);
    if (summarize->parsed()) return cli_detail::cmd_summarize(o, out);
    if (campaign->parsed()) return cli_detail::cmd_campaign(o, out);
    if (bench->parsed()) return cli_detail::cmd_bench(o, out);
    if (dot->parsed()) return cli_detail::cmd_export_dot(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace defsem
