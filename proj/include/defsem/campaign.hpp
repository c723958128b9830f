#pragma once

// Property campaigns over generated frameworks, and the contraction
// benchmark.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "defsem/af.hpp"
#include "defsem/af_io.hpp"
#include "defsem/contraction.hpp"
#include "defsem/defense.hpp"
#include "defsem/generate.hpp"
#include "defsem/oracle.hpp"
#include "defsem/reasons.hpp"

namespace defsem {

enum class CampaignScope { exhaustive_n3, exhaustive_n4, random_n8, exhaustive_pairs_n3, random_pairs_n6 };

inline constexpr CampaignScope kAllScopes[] = {
    CampaignScope::exhaustive_n3, CampaignScope::exhaustive_n4, CampaignScope::random_n8,
    CampaignScope::exhaustive_pairs_n3, CampaignScope::random_pairs_n6};

inline std::string_view scope_name(CampaignScope s) {
  switch (s) {
    case CampaignScope::exhaustive_n3: return "exhaustive-n3";
    case CampaignScope::exhaustive_n4: return "exhaustive-n4";
    case CampaignScope::random_n8: return "random-n8";
    case CampaignScope::exhaustive_pairs_n3: return "exhaustive-pairs-n3";
    case CampaignScope::random_pairs_n6: return "random-pairs-n6";
  }
  return "?";
}

inline CampaignScope parse_scope(std::string_view text) {
  for (CampaignScope s : kAllScopes)
    if (scope_name(s) == text) return s;
  throw PreconditionError("unknown campaign scope '" + std::string(text) + "'");
}

inline bool is_pair_scope(CampaignScope s) {
  return s == CampaignScope::exhaustive_pairs_n3 || s == CampaignScope::random_pairs_n6;
}

struct PropertyInfo {
  std::string_view id;
  bool pairwise;
  std::string_view statement;
};

inline constexpr PropertyInfo kProperties[] = {
    {"defendees-complete", false, "defendees of every CO defense extension form a co extension"},
    {"lift-complete", false, "def(E) is a CO defense extension for every co extension E"},
    {"closure", false, "complete defense extensions are closed under shared defenders"},
    {"justifiability", false, "every argument defender in a complete extension is itself defended"},
    {"pr-gr-within-co", false, "PR and GR (and pr, gr, st) are nonempty antichains inside CO (co)"},
    {"co-oracle", false, "Defs(F) and CO match brute force when |Defs(F)| <= 14"},
    {"dung-oracle", false, "co matches brute force over all argument subsets"},
    {"dung-kernel-invariance", false, "co(F) = co(ck(F))"},
    {"kernel-invariance-defense", false, "CO(Defs(F)) = CO(Defs(ck(F)))"},
    {"contraction-soundness", false, "every syntactically flagged defense is unsatisfiable"},
    {"contraction-preservation", false, "auto contraction preserves CO, PR and GR"},
    {"contraction-keeps-complete", false, "no contracted defense occurs in a complete extension"},
    {"contraction-idempotence", false, "contracting the remainder removes nothing"},
    {"reasons-cardinality", false, "direct and root reasons have one entry per extension"},
    {"defense-eq-implies-standard", true, "CO defense equivalence implies co equivalence"},
    {"strong-implies-defense", true, "equal c-kernels imply CO defense equivalence"},
    {"strong-implies-standard", true, "equal c-kernels imply co equivalence"},
    {"root-eq-implies-standard", true, "CO root equivalence on all arguments implies co equivalence"},
};

inline const PropertyInfo& property_info(std::string_view id) {
  for (const auto& p : kProperties)
    if (p.id == id) return p;
  throw PreconditionError("unknown property id '" + std::string(id) + "'");
}

inline std::vector<std::string> default_properties(CampaignScope scope) {
  std::vector<std::string> out;
  for (const auto& p : kProperties)
    if (p.pairwise == is_pair_scope(scope)) out.emplace_back(p.id);
  return out;
}

struct CampaignSpec {
  CampaignScope scope = CampaignScope::exhaustive_n3;
  std::vector<std::string> properties;  // empty: every property of the scope's kind
  std::uint64_t seed = 1;
  std::size_t instances = 0;  // random scopes; 0 picks 1000 (single) or 500 (pairs)
  bool timing = false;
};

struct Violation {
  std::size_t instance;
  std::string property;
  std::string framework;  // apx; pairs give both separated by "---\n"
  std::string witness;
};

struct PropertyTally {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // instance outside the property's size guard
  std::size_t premises = 0;  // pair properties: pairs where the premise held
};

struct CampaignReport {
  std::string scope;
  std::uint64_t seed = 0;
  std::size_t instances_checked = 0;
  std::map<std::string, PropertyTally> properties;
  std::vector<Violation> violations;
  std::map<std::string, double> timing_ms;
  double mean_removed_fraction = 0.0;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string ext_text(const ArgumentSet& s) { return set_text(s); }

// Lazily computed facts about one framework.
class Facts {
 public:
  explicit Facts(ArgumentationFramework f) : f_(std::move(f)), s_(f_) {}

  const ArgumentationFramework& af() const { return f_; }
  const DefenseSet& defs() const { return s_; }

  const std::vector<ArgumentExtension>& co() const {
    if (!co_) co_ = enumerate_argument_extensions(f_, Semantics::complete);
    return *co_;
  }

  const std::vector<Defenses>& ext(Semantics sem) const {
    auto it = ext_.find(sem);
    if (it == ext_.end()) {
      std::vector<Defenses> v;
      for (auto& e : enumerate_defense_extensions(s_, sem)) v.push_back(std::move(e.members));
      it = ext_.emplace(sem, std::move(v)).first;
    }
    return it->second;
  }

  const ContractionResult& contraction() const {
    if (!contraction_) contraction_ = auto_contract(s_);
    return *contraction_;
  }

 private:
  ArgumentationFramework f_;
  DefenseSet s_;
  mutable std::optional<std::vector<ArgumentExtension>> co_;
  mutable std::map<Semantics, std::vector<Defenses>> ext_;
  mutable std::optional<ContractionResult> contraction_;
};

// Returns an empty string when the property holds, a witness otherwise, or
// nullopt when the instance is outside the property's guard.
using Check = std::function<std::optional<std::string>(const Facts&)>;

inline std::vector<Defenses> members_of(const std::vector<DefenseExtension>& v) {
  std::vector<Defenses> out;
  for (const auto& e : v) out.push_back(e.members);
  return out;
}

inline bool antichain(const std::vector<Defenses>& v) {
  for (const auto& a : v)
    for (const auto& b : v)
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
  return true;
}

inline std::map<std::string, Check, std::less<>> single_checks() {
  std::map<std::string, Check, std::less<>> c;
  c["defendees-complete"] = [](const Facts& x) -> std::optional<std::string> {
    for (const auto& d : x.ext(Semantics::complete)) {
      ArgumentExtension e{defendees(d)};
      if (!std::binary_search(x.co().begin(), x.co().end(), e))
        return "defendees " + ext_text(e.members) + " of " + set_text(d) + " not in co";
    }
    return "";
  };
  c["lift-complete"] = [](const Facts& x) -> std::optional<std::string> {
    const auto& co = x.ext(Semantics::complete);
    for (const auto& e : x.co()) {
      Defenses d = defense_extension_of_argument_extension(x.defs(), e);
      if (!std::binary_search(co.begin(), co.end(), d))
        return "def(" + ext_text(e.members) + ") = " + set_text(d) + " not in CO";
    }
    return "";
  };
  c["closure"] = [](const Facts& x) -> std::optional<std::string> {
    for (const auto& d : x.ext(Semantics::complete)) {
      ArgumentSet zs = defendees(d);
      for (const Defense& cand : x.defs().defenses()) {
        if (!cand.defender().is_argument()) continue;
        const Argument& a = cand.defendee();
        const Argument& b = cand.defender().argument();
        if (!zs.contains(a) || !zs.contains(b) || d.contains(cand)) continue;
        // a and b are both defendees; the clause needs some b-defense whose
        // attacker differs from cand's attacker.
        for (const Defense& bd : d)
          if (bd.defendee() == b && bd.attacker() != cand.attacker())
            return set_text(d) + " misses " + cand.to_string();
      }
    }
    return "";
  };
  c["justifiability"] = [](const Facts& x) -> std::optional<std::string> {
    for (const auto& d : x.ext(Semantics::complete)) {
      ArgumentSet zs = defendees(d);
      for (const Defense& m : d)
        if (m.defender().is_argument() && !zs.contains(m.defender().argument()))
          return set_text(d) + " leaves defender of " + m.to_string() + " undefended";
    }
    return "";
  };
  c["pr-gr-within-co"] = [](const Facts& x) -> std::optional<std::string> {
    const auto& co = x.ext(Semantics::complete);
    for (Semantics s : {Semantics::preferred, Semantics::grounded}) {
      const auto& v = x.ext(s);
      if (v.empty() && !co.empty())
        return std::string(defense_semantics_name(s)) + " is empty";
      for (const auto& d : v)
        if (!std::binary_search(co.begin(), co.end(), d))
          return std::string(defense_semantics_name(s)) + " member " + set_text(d) + " not in CO";
      if (!antichain(v)) return std::string(defense_semantics_name(s)) + " is not an antichain";
    }
    const auto& dco = x.co();
    for (Semantics s : {Semantics::preferred, Semantics::grounded, Semantics::stable}) {
      auto v = enumerate_argument_extensions(x.af(), s);
      if (s != Semantics::stable && v.empty())
        return std::string(argument_semantics_name(s)) + " is empty";
      for (const auto& e : v)
        if (!std::binary_search(dco.begin(), dco.end(), e))
          return std::string(argument_semantics_name(s)) + " member " + ext_text(e.members) +
                 " not in co";
    }
    return "";
  };
  c["co-oracle"] = [](const Facts& x) -> std::optional<std::string> {
    if (oracle::defenses(x.af()) != x.defs().defenses()) return "Defs(F) differs from oracle";
    if (x.defs().size() > oracle::kMaxDefenseSubsets) return std::nullopt;
    auto want = oracle::complete_defense_sets(x.defs());
    const auto& got = x.ext(Semantics::complete);
    if (want == got) return "";
    auto text = [](const Defenses& d) { return set_text(d); };
    return compare_families(got, want, text).witness + " (first: enumerator, second: oracle)";
  };
  c["dung-oracle"] = [](const Facts& x) -> std::optional<std::string> {
    auto text = [](const ArgumentExtension& e) { return ext_text(e.members); };
    auto v = compare_families(x.co(), oracle::dung_complete(x.af()), text);
    return v.holds ? "" : v.witness + " (first: enumerator, second: oracle)";
  };
  c["dung-kernel-invariance"] = [](const Facts& x) -> std::optional<std::string> {
    auto text = [](const ArgumentExtension& e) { return ext_text(e.members); };
    auto k = enumerate_argument_extensions(c_kernel(x.af()), Semantics::complete);
    auto v = compare_families(x.co(), k, text);
    return v.holds ? "" : v.witness + " (first: F, second: kernel)";
  };
  c["kernel-invariance-defense"] = [](const Facts& x) -> std::optional<std::string> {
    auto k = members_of(enumerate_defense_extensions(compute_defenses(c_kernel(x.af())),
                                                     Semantics::complete));
    auto text = [](const Defenses& d) { return set_text(d); };
    auto v = compare_families(x.ext(Semantics::complete), k, text);
    return v.holds ? "" : v.witness + " (first: F, second: kernel)";
  };
  c["contraction-soundness"] = [](const Facts& x) -> std::optional<std::string> {
    Defenses ok = oracle::satisfiable_defenses(x.defs());
    for (const auto& [d, tags] : x.contraction().rule_trace)
      if (ok.contains(d)) {
        std::string t;
        for (UnsatRule r : tags) t += (t.empty() ? "" : ",") + std::string(unsat_rule_name(r));
        return d.to_string() + " flagged [" + t + "] but lies in an admissible set";
      }
    return "";
  };
  c["contraction-preservation"] = [](const Facts& x) -> std::optional<std::string> {
    for (Semantics s : {Semantics::complete, Semantics::preferred, Semantics::grounded}) {
      auto after = members_of(enumerate_defense_extensions(x.contraction().remaining, s));
      auto text = [](const Defenses& d) { return set_text(d); };
      auto v = compare_families(x.ext(s), after, text);
      if (!v.holds)
        return std::string(defense_semantics_name(s)) + ": " + v.witness +
               " (first: Defs(F), second: contracted)";
    }
    return "";
  };
  c["contraction-keeps-complete"] = [](const Facts& x) -> std::optional<std::string> {
    for (const auto& d : x.ext(Semantics::complete))
      for (const Defense& m : d)
        if (x.contraction().removed.contains(m)) return m.to_string() + " removed but in " + set_text(d);
    return "";
  };
  c["contraction-idempotence"] = [](const Facts& x) -> std::optional<std::string> {
    auto again = auto_contract(x.contraction().remaining);
    if (again.removed.empty()) return "";
    return "second pass removes " + set_text(again.removed);
  };
  c["reasons-cardinality"] = [](const Facts& x) -> std::optional<std::string> {
    for (Semantics s : kAllSemantics) {
      std::vector<DefenseExtension> exts;
      for (const auto& d : x.ext(s)) exts.push_back({d, s});
      for (const Argument& a : x.af().arguments()) {
        auto dr = direct_reasons(x.af(), exts, a);
        auto rr = root_reasons(x.af(), exts, a);
        if (dr.per_extension.size() != exts.size() || rr.per_extension.size() != exts.size())
          return a.name() + ": reason count differs from |" +
                 std::string(defense_semantics_name(s)) + "|";
        bool init = is_initial(x.af(), a);
        for (const auto* r : {&dr, &rr})
          for (const auto& entry : r->per_extension)
            if (entry.reason.contains(DefenderRef::top()) != init)
              return a.name() + ": TOP placement wrong in " + reason_to_string(entry.reason);
      }
    }
    return "";
  };
  return c;
}

// Per-framework keys for the pair implications. For A implies B, every two
// frameworks with equal A-keys must have equal B-keys.
struct PairKeys {
  std::vector<ArgumentExtension> co;
  std::vector<Defenses> defense_co;
  AttackSet kernel;
  ReasonProfile roots;
};

inline PairKeys pair_keys(const Facts& x) {
  return PairKeys{x.co(), x.ext(Semantics::complete), c_kernel(x.af()).attacks(),
                  root_profile(x.af(), x.af().argument_set(), Semantics::complete, {})};
}

struct Implication {
  std::string_view id;
  std::function<bool(const PairKeys&, const PairKeys&)> premise;
  std::function<bool(const PairKeys&, const PairKeys&)> conclusion;
};

inline std::vector<Implication> implications() {
  auto co = [](const PairKeys& a, const PairKeys& b) { return a.co == b.co; };
  auto def = [](const PairKeys& a, const PairKeys& b) { return a.defense_co == b.defense_co; };
  auto ker = [](const PairKeys& a, const PairKeys& b) { return a.kernel == b.kernel; };
  auto root = [](const PairKeys& a, const PairKeys& b) { return a.roots == b.roots; };
  return {{"defense-eq-implies-standard", def, co},
          {"strong-implies-defense", ker, def},
          {"strong-implies-standard", ker, co},
          {"root-eq-implies-standard", root, co}};
}

inline std::string pair_apx(const ArgumentationFramework& f, const ArgumentationFramework& g) {
  return to_apx(f) + "---\n" + to_apx(g);
}

// Random instance parameters for the random scopes.
inline GeneratorSpec random_spec(std::mt19937_64& rng, std::size_t max_n) {
  GeneratorSpec s;
  s.argument_count = 1 + static_cast<std::size_t>(rng() % max_n);
  s.attack_density = 0.1 + 0.4 * unit_draw(rng);
  s.self_attack_rate = 0.3 * unit_draw(rng);
  s.seed = rng();
  return s;
}

// G from F: flip one or two random attack pairs, or with probability 1/4
// flip an attack between two self-attackers (kernel preserving) when one
// exists.
inline ArgumentationFramework mutate(const ArgumentationFramework& f, std::mt19937_64& rng) {
  const std::size_t n = f.size();
  AttackSet atts = f.attacks();
  auto flip = [&](std::size_t i, std::size_t j) {
    Attack a{f.argument(i), f.argument(j)};
    if (!atts.erase(a)) atts.insert(a);
  };
  std::vector<std::pair<std::size_t, std::size_t>> selfish;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && f.self_attacking(i) && f.self_attacking(j)) selfish.emplace_back(i, j);
  if (!selfish.empty() && rng() % 4 == 0) {
    auto [i, j] = selfish[rng() % selfish.size()];
    flip(i, j);
  } else {
    std::size_t k = 1 + rng() % 2;
    for (std::size_t t = 0; t < k; ++t) flip(rng() % n, rng() % n);
  }
  return ArgumentationFramework(f.argument_set(), std::move(atts));
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline CampaignReport run_theorem_campaign(const CampaignSpec& spec) {
  const bool pairs = is_pair_scope(spec.scope);
  std::vector<std::string> props = spec.properties.empty() ? default_properties(spec.scope)
                                                           : spec.properties;
  std::sort(props.begin(), props.end());
  props.erase(std::unique(props.begin(), props.end()), props.end());
  for (const auto& p : props)
    if (property_info(p).pairwise != pairs)
      throw PreconditionError("property '" + p + "' does not apply to scope '" +
                              std::string(scope_name(spec.scope)) + "'");

  CampaignReport report;
  report.scope = std::string(scope_name(spec.scope));
  report.seed = spec.seed;
  for (const auto& p : props) report.properties[p] = {};
  detail::Stopwatch total;
  std::mt19937_64 rng(spec.seed);
  const std::size_t random_count = spec.instances ? spec.instances : (pairs ? 500 : 1000);

  if (!pairs) {
    auto checks = detail::single_checks();
    double removed_sum = 0.0;
    std::size_t removed_n = 0;
    auto visit = [&](std::size_t id, ArgumentationFramework f) {
      detail::Facts x(std::move(f));
      for (const auto& p : props) {
        auto r = checks.at(p)(x);
        auto& tally = report.properties[p];
        if (!r) {
          ++tally.skipped;
          continue;
        }
        ++tally.checked;
        if (!r->empty()) report.violations.push_back({id, p, to_apx(x.af()), *r});
      }
      if (x.defs().size()) {
        removed_sum += static_cast<double>(x.contraction().removed.size()) / x.defs().size();
        ++removed_n;
      }
      ++report.instances_checked;
    };
    if (spec.scope == CampaignScope::random_n8) {
      for (std::size_t i = 0; i < random_count; ++i)
        visit(i, generate_af(detail::random_spec(rng, 8)));
    } else {
      std::size_t max_n = spec.scope == CampaignScope::exhaustive_n3 ? 3 : 4;
      std::size_t id = 0;
      for (std::size_t n = 1; n <= max_n; ++n)
        for (auto f : enumerate_all_afs(n)) visit(id++, std::move(f));
    }
    report.mean_removed_fraction = removed_n ? removed_sum / removed_n : 0.0;
  } else {
    auto all = detail::implications();
    std::vector<detail::Implication> used;
    for (const auto& imp : all)
      if (std::find(props.begin(), props.end(), imp.id) != props.end()) used.push_back(imp);

    if (spec.scope == CampaignScope::exhaustive_pairs_n3) {
      // Every unordered pair is covered by comparing each framework with
      // every earlier one that shares its premise key.
      std::vector<std::pair<ArgumentationFramework, detail::PairKeys>> seen;
      for (auto f : enumerate_all_afs(3)) {
        detail::Facts x(f);
        auto keys = detail::pair_keys(x);
        for (const auto& imp : used) {
          bool reported = false;
          auto& tally = report.properties[std::string(imp.id)];
          for (const auto& [g, gk] : seen) {
            if (!imp.premise(keys, gk)) continue;
            ++tally.premises;
            if (reported || imp.conclusion(keys, gk)) continue;
            report.violations.push_back({seen.size(), std::string(imp.id), detail::pair_apx(g, f),
                                         "premise holds, conclusion fails"});
            reported = true;
          }
        }
        seen.emplace_back(std::move(f), std::move(keys));
      }
      const std::size_t n = seen.size();
      for (const auto& imp : used) report.properties[std::string(imp.id)].checked = n * (n - 1) / 2;
      report.instances_checked = n * (n - 1) / 2;
    } else {
      for (std::size_t i = 0; i < random_count; ++i) {
        auto f = generate_af(detail::random_spec(rng, 6));
        auto g = detail::mutate(f, rng);
        auto fk = detail::pair_keys(detail::Facts(f));
        auto gk = detail::pair_keys(detail::Facts(g));
        for (const auto& imp : used) {
          auto& tally = report.properties[std::string(imp.id)];
          ++tally.checked;
          if (!imp.premise(fk, gk)) continue;
          ++tally.premises;
          if (!imp.conclusion(fk, gk))
            report.violations.push_back({i, std::string(imp.id), detail::pair_apx(f, g),
                                         "premise holds, conclusion fails"});
        }
        ++report.instances_checked;
      }
    }
  }
  if (spec.timing) report.timing_ms["total"] = total.ms();
  return report;
}

struct BenchmarkRow {
  GeneratorSpec spec;
  std::size_t defenses = 0;
  std::size_t removed = 0;
  double removed_fraction = 0.0;
  double full_ms = 0.0;        // median CO enumeration time on Defs(F)
  double contracted_ms = 0.0;  // median on the contracted set
  double speedup = 0.0;        // full_ms / contracted_ms
};

struct BenchmarkReport {
  std::size_t repetitions = 0;
  std::vector<BenchmarkRow> rows;
  double mean_removed_fraction = 0.0;
  double median_speedup = 0.0;
};

inline constexpr std::size_t kMinBenchmarkRepetitions = 5;

namespace detail {

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

inline BenchmarkRow bench_one(const ArgumentationFramework& f, std::size_t reps) {
  BenchmarkRow row;
  DefenseSet s(f);
  auto c = auto_contract(s);
  row.defenses = s.size();
  row.removed = c.removed.size();
  row.removed_fraction = s.size() ? static_cast<double>(row.removed) / s.size() : 0.0;
  std::vector<double> full, contracted;
  for (std::size_t r = 0; r < reps; ++r) {
    Stopwatch a;
    auto x = enumerate_defense_extensions(s, Semantics::complete);
    full.push_back(a.ms());
    Stopwatch b;
    auto y = enumerate_defense_extensions(c.remaining, Semantics::complete);
    contracted.push_back(b.ms());
  }
  row.full_ms = median(full);
  row.contracted_ms = median(contracted);
  row.speedup = row.contracted_ms > 0 ? row.full_ms / row.contracted_ms : 1.0;
  return row;
}

}  // namespace detail

inline BenchmarkReport benchmark_contraction(const std::vector<GeneratorSpec>& specs,
                                             std::size_t repetitions = kMinBenchmarkRepetitions) {
  BenchmarkReport report;
  report.repetitions = std::max(repetitions, kMinBenchmarkRepetitions);
  std::vector<double> speedups;
  double sum = 0.0;
  for (const auto& spec : specs) {
    auto row = detail::bench_one(generate_af(spec), report.repetitions);
    row.spec = spec;
    sum += row.removed_fraction;
    speedups.push_back(row.speedup);
    report.rows.push_back(row);
  }
  if (!specs.empty()) report.mean_removed_fraction = sum / specs.size();
  report.median_speedup = detail::median(speedups);
  return report;
}

// Same measurement for a given framework.
inline BenchmarkRow benchmark_framework(const ArgumentationFramework& f,
                                        std::size_t repetitions = kMinBenchmarkRepetitions) {
  return detail::bench_one(f, std::max(repetitions, kMinBenchmarkRepetitions));
}

}  // namespace defsem
