#pragma once

// JSON forms of library values (nlohmann::ordered_json, so key order is
// insertion order and output is stable).

#include <json.hpp>

#include "defsem/campaign.hpp"
#include "defsem/contraction.hpp"
#include "defsem/defense.hpp"
#include "defsem/reasons.hpp"

namespace defsem {

using Json = nlohmann::ordered_json;

inline Json to_json(const ArgumentSet& s) {
  Json out = Json::array();
  for (const Argument& a : s) out.push_back(a.name());
  return out;
}

inline Json to_json(const ArgumentationFramework& f) {
  Json atts = Json::array();
  for (const Attack& a : f.attacks()) atts.push_back({a.from.name(), a.to.name()});
  return Json{{"arguments", to_json(f.argument_set())}, {"attacks", atts}};
}

inline Json to_json(const Defense& d) {
  return Json{{"defender", d.defender().to_string()},
              {"attacker", d.attacker() ? Json(d.attacker()->name()) : Json(nullptr)},
              {"defendee", d.defendee().name()}};
}

inline Json to_json(const Defenses& ds) {
  Json out = Json::array();
  for (const Defense& d : ds) out.push_back(to_json(d));
  return out;
}

inline Json to_json(const Reason& r) {
  Json out = Json::array();
  for (const DefenderRef& m : r) out.push_back(m.to_string());
  return out;
}

inline Json to_json(const Verdict& v) {
  return Json{{"holds", v.holds}, {"witness", v.holds ? Json(nullptr) : Json(v.witness)}};
}

inline Json to_json(const ContractionResult& r) {
  Json removed = Json::array();
  for (const Defense& d : r.removed) {
    Json rules = Json::array();
    if (auto it = r.rule_trace.find(d); it != r.rule_trace.end())
      for (UnsatRule u : it->second) rules.push_back(std::string(unsat_rule_name(u)));
    removed.push_back({{"defense", to_json(d)}, {"rules", rules}});
  }
  std::map<std::string, std::size_t> per_rule;
  for (UnsatRule u : kAllUnsatRules) per_rule[std::string(unsat_rule_name(u))] = 0;
  for (const auto& [d, tags] : r.rule_trace)
    for (UnsatRule u : tags) ++per_rule[std::string(unsat_rule_name(u))];
  Json rules = Json::object();
  for (UnsatRule u : kAllUnsatRules)
    rules[std::string(unsat_rule_name(u))] = per_rule[std::string(unsat_rule_name(u))];
  return Json{{"removed", removed},
              {"remaining", to_json(r.remaining.defenses())},
              {"counts",
               {{"original", r.removed.size() + r.remaining.size()},
                {"removed", r.removed.size()},
                {"remaining", r.remaining.size()}}},
              {"rule_counts", rules}};
}

inline Json to_json(const EquivalenceReport& r) {
  Json out = Json::object();
  out["verdict"] = r.all_hold();
  Json standard = Json::object();
  for (const auto& [s, v] : r.standard) standard[std::string(argument_semantics_name(s))] = to_json(v);
  out["standard"] = standard;
  out["strong_co"] = r.strong_co ? to_json(*r.strong_co) : Json(nullptr);
  Json defense = Json::object();
  for (const auto& [s, v] : r.defense) defense[std::string(defense_semantics_name(s))] = to_json(v);
  out["defense"] = defense;
  if (r.root) {
    Json root = to_json(*r.root);
    root["semantics"] = std::string(defense_semantics_name(r.root_semantics));
    root["arguments"] = to_json(r.root_arguments);
    out["root"] = root;
  } else {
    out["root"] = nullptr;
  }
  return out;
}

inline Json to_json(const GeneratorSpec& s) {
  return Json{{"argument_count", s.argument_count},
              {"attack_density", s.attack_density},
              {"self_attack_rate", s.self_attack_rate},
              {"seed", s.seed}};
}

inline GeneratorSpec generator_spec_from_json(const Json& j) {
  GeneratorSpec s;
  s.argument_count = j.at("argument_count").get<std::size_t>();
  s.attack_density = j.value("attack_density", 0.0);
  s.self_attack_rate = j.value("self_attack_rate", 0.0);
  s.seed = j.value("seed", std::uint64_t{0});
  if (s.argument_count == 0) throw PreconditionError("argument_count must be at least 1");
  for (double p : {s.attack_density, s.self_attack_rate})
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("probabilities must lie in [0,1]");
  return s;
}

inline CampaignSpec campaign_spec_from_json(const Json& j) {
  CampaignSpec s;
  s.scope = parse_scope(j.at("scope").get<std::string>());
  if (j.contains("properties")) s.properties = j.at("properties").get<std::vector<std::string>>();
  s.seed = j.value("seed", std::uint64_t{1});
  s.instances = j.value("instances", std::size_t{0});
  s.timing = j.value("timing", false);
  return s;
}

inline Json to_json(const CampaignReport& r) {
  Json props = Json::object();
  for (const auto& [id, t] : r.properties) {
    props[id] = {{"checked", t.checked}, {"skipped", t.skipped}};
    if (property_info(id).pairwise) props[id]["premises_held"] = t.premises;
  }
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"instance", v.instance},
                          {"property", v.property},
                          {"framework", v.framework},
                          {"witness", v.witness}});
  Json out{{"scope", r.scope},
           {"seed", r.seed},
           {"instances_checked", r.instances_checked},
           {"properties", props},
           {"violations", violations},
           {"contraction_stats", {{"mean_removed_fraction", r.mean_removed_fraction}}}};
  if (!r.timing_ms.empty()) {
    Json t = Json::object();
    for (const auto& [k, ms] : r.timing_ms) t[k] = ms;
    out["timing_ms"] = t;
  }
  out["ok"] = r.ok();
  return out;
}

inline Json to_json(const BenchmarkRow& r, bool timing) {
  Json out{{"defenses", r.defenses}, {"removed", r.removed}, {"removed_fraction", r.removed_fraction}};
  if (timing) {
    out["full_ms"] = r.full_ms;
    out["contracted_ms"] = r.contracted_ms;
    out["speedup"] = r.speedup;
  }
  return out;
}

}  // namespace defsem
