// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "defsem/cli.hpp"
#include "support.hpp"

using namespace defsem;
using namespace defsem::test;

namespace {

constexpr double kGoldenSeconds = 1.0;       // per golden item
constexpr double kExhaustiveSeconds = 300.0;  // exhaustive n <= 3, all properties
constexpr std::size_t kRandomFrameworks = 1000;
constexpr std::size_t kRandomPairs = 500;
constexpr std::uint64_t kSeed = 1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Item {
  std::string name;
  bool ok;
  std::string detail;
};

void criterion(int n, const std::string& title, const std::vector<Item>& items, bool& all) {
  bool ok = true;
  for (const auto& i : items) ok = ok && i.ok;
  all = all && ok;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << "\n";
  for (const auto& i : items)
    std::cout << "      " << (i.ok ? "ok  " : "FAIL") << "  " << i.name
              << (i.detail.empty() ? "" : "  (" + i.detail + ")") << "\n";
}

std::string text(const std::vector<Defenses>& v) {
  std::string out = "{";
  for (const auto& d : v) out += (out.size() > 1 ? ", " : "") + detail::set_text(d);
  return out + "}";
}

std::vector<Defenses> co_of(const ArgumentationFramework& f, Semantics s = Semantics::complete) {
  return members(enumerate_defense_extensions(compute_defenses(f), s));
}

// Runs body, failing the item when it returns false or exceeds the time
// bound.
Item timed(const std::string& name, const std::function<bool(std::string&)>& body) {
  auto t = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("threw: ") + e.what();
  }
  double s = seconds_since(t);
  if (s >= kGoldenSeconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("took ") + std::to_string(s) + " s";
  }
  return {name, ok, detail};
}

std::vector<Item> golden_items() {
  std::vector<Item> items;
  items.push_back(timed("F2 defenses and contraction to {(b,c,d)}", [](std::string& d) {
    auto s = compute_defenses(golden("f2"));
    auto r = auto_contract(s);
    d = "remaining " + detail::set_text(r.remaining.defenses());
    return s.defenses() == defs({"(a,a,a)", "(a,a,b)", "(a,b,c)", "(b,c,d)"}) &&
           r.removed == defs({"(a,a,a)", "(a,a,b)", "(a,b,c)"}) &&
           r.remaining.defenses() == defs({"(b,c,d)"});
  }));
  items.push_back(timed("F7 defenses and its extension under CO, PR, GR, ST", [](std::string& d) {
    auto f = golden("f7");
    auto s = compute_defenses(f);
    bool ok = s.defenses() == defs({"(TOP,-,a)", "(BOT,a,b)", "(a,b,c)", "(BOT,g,c)", "(b,c,d)",
                                    "(g,c,d)", "(c,d,e)", "(d,e,f)", "(TOP,-,g)"});
    std::vector<Defenses> want{defs({"(TOP,-,a)", "(TOP,-,g)", "(g,c,d)", "(d,e,f)"})};
    for (Semantics sem : kAllSemantics) {
      auto got = co_of(f, sem);
      if (got != want) {
        ok = false;
        d += std::string(defense_semantics_name(sem)) + " gives " + text(got) + " ";
      }
    }
    return ok;
  }));
  items.push_back(timed("F8 has two complete extensions D1 subset of D2", [](std::string& d) {
    auto d1 = defs({"(TOP,-,a)", "(TOP,-,d)", "(a,b,c)", "(d,e,f)"});
    auto d2 = defs({"(TOP,-,a)", "(TOP,-,d)", "(a,b,c)", "(d,b,c)", "(d,e,f)"});
    auto got = co_of(golden("f8"));
    d = "CO(Defs(F8)) = " + text(got);
    return got == std::vector<Defenses>{d1, d2};
  }));
  items.push_back(timed("F9 unique complete extension holds (e,f,g) and (c,d,g)", [](std::string& d) {
    auto got = co_of(golden("f9"));
    d = "CO = " + text(got);
    return got == std::vector<Defenses>{
                      defs({"(TOP,-,a)", "(a,b,c)", "(TOP,-,e)", "(e,f,g)", "(c,d,g)"})};
  }));
  items.push_back(timed("F10 correspondence def(E1) = {}, def(E2) = {(b,a,b)}", [](std::string& d) {
    auto f = golden("f10");
    auto s = compute_defenses(f);
    auto co = members(enumerate_argument_extensions(f, Semantics::complete));
    bool ok = co == std::vector<ArgumentSet>{{}, args({"b"})};
    ok = ok && defense_extension_of_argument_extension(s, {{}}).empty();
    ok = ok && defense_extension_of_argument_extension(s, {args({"b"})}) == defs({"(b,a,b)"});
    auto got = co_of(f);
    d = "CO = " + text(got);
    return ok && got == std::vector<Defenses>{{}, defs({"(b,a,b)"})};
  }));
  items.push_back(timed("F12 and F12' contractions", [](std::string& d) {
    auto r = auto_contract(compute_defenses(golden("f12")));
    auto rp = auto_contract(compute_defenses(golden("f12p")));
    d = "F12 " + detail::set_text(r.remaining.defenses()) + ", F12' " +
        detail::set_text(rp.remaining.defenses());
    return r.remaining.defenses() == defs({"(TOP,-,d)", "(d,a,b)"}) &&
           r.removed == defs({"(BOT,d,a)", "(b,c,a)", "(c,a,b)", "(a,b,c)"}) &&
           rp.remaining.defenses() == defs({"(TOP,-,d)", "(d,a,b)", "(b,c,b)", "(c,b,c)"});
  }));
  items.push_back(timed("F13/F14 defense equivalent, not strongly equivalent", [](std::string&) {
    auto f = golden("f13"), g = golden("f14");
    return defense_equivalent(f, g, Semantics::complete) && !strong_equivalent_co(f, g);
  }));
  items.push_back(timed("F5/F6 standard equivalent, not defense equivalent", [](std::string&) {
    auto f = golden("f5"), g = golden("f6");
    return standard_equivalent(f, g, Semantics::complete) &&
           !defense_equivalent(f, g, Semantics::complete);
  }));
  items.push_back(timed("F3/F4 rr(a) = {{},{a},{}}, rr(b) = {{},{},{b}}, root equivalent on {a,b}",
                        [](std::string& d) {
    bool ok = true;
    for (const char* n : {"f3", "f4"}) {
      auto f = golden(n);
      auto ra = reasons_of(root_reasons(f, Semantics::complete, Argument("a")));
      auto rb = reasons_of(root_reasons(f, Semantics::complete, Argument("b")));
      if (ra != std::vector<Reason>{{}, reason({"a"}), {}} ||
          rb != std::vector<Reason>{{}, {}, reason({"b"})}) {
        ok = false;
        d += std::string(n) + " differs ";
      }
    }
    return ok && root_equivalent(golden("f3"), golden("f4"), args({"a", "b"}), Semantics::complete);
  }));
  items.push_back(timed("F15 direct reason {b,g} and root reason {b,e} for d", [](std::string& d) {
    auto f = golden("f15");
    auto d1 = defs({"(b,a,b)", "(b,c,d)", "(g,c,d)", "(e,f,g)", "(TOP,-,e)"});
    auto co = co_of(f);
    if (!std::binary_search(co.begin(), co.end(), d1)) {
      d = "D1 not in CO = " + text(co);
      return false;
    }
    auto dr = direct_reason(f, d1, Argument("d"));
    auto rr = root_reason(f, d1, Argument("d"));
    d = "dr " + reason_to_string(dr) + ", rr " + reason_to_string(rr);
    return dr == reason({"b", "g"}) && rr == reason({"b", "e"});
  }));
  items.push_back(timed("F17 summarizes F16 with rr(e3) = {{e1,e2}}", [](std::string&) {
    auto f16 = golden("f16"), f17 = golden("f17");
    std::vector<Reason> want{reason({"e1", "e2"})};
    return is_summarization(f17, f16, Semantics::complete) &&
           reasons_of(root_reasons(f16, Semantics::complete, Argument("e3"))) == want &&
           reasons_of(root_reasons(f17, Semantics::complete, Argument("e3"))) == want;
  }));
  return items;
}

struct Campaigns {
  CampaignReport exhaustive, random, pairs_exhaustive, pairs_random;
  double exhaustive_seconds = 0.0;
};

Campaigns run_campaigns() {
  Campaigns c;
  CampaignSpec spec;
  spec.seed = kSeed;
  spec.scope = CampaignScope::exhaustive_n3;
  auto t = Clock::now();
  c.exhaustive = run_theorem_campaign(spec);
  c.exhaustive_seconds = seconds_since(t);
  spec.scope = CampaignScope::random_n8;
  spec.instances = kRandomFrameworks;
  c.random = run_theorem_campaign(spec);
  spec.scope = CampaignScope::exhaustive_pairs_n3;
  spec.instances = 0;
  c.pairs_exhaustive = run_theorem_campaign(spec);
  spec.scope = CampaignScope::random_pairs_n6;
  spec.instances = kRandomPairs;
  c.pairs_random = run_theorem_campaign(spec);
  return c;
}

Item property_item(const CampaignReport& r, const std::string& property, std::size_t min_checked,
                   bool guarded = false) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& v : r.violations)
    if (v.property == property) {
      if (!bad) first = v.witness;
      ++bad;
    }
  const auto& tally = r.properties.at(property);
  std::ostringstream detail;
  detail << tally.checked << " checked";
  if (tally.skipped) detail << ", " << tally.skipped << " outside guard";
  if (property_info(property).pairwise) detail << ", premise held " << tally.premises;
  detail << ", " << bad << " violations";
  if (bad) detail << "; first: " << first;
  std::size_t covered = guarded ? tally.checked + tally.skipped : tally.checked;
  bool ok = bad == 0 && tally.checked > 0 && covered >= min_checked;
  return {property + " on " + r.scope, ok, detail.str()};
}

std::vector<Item> suite(const Campaigns& c, const std::vector<std::string>& props,
                        bool guarded = false) {
  std::vector<Item> items;
  for (const auto& p : props) {
    items.push_back(property_item(c.exhaustive, p, 2 + 16 + 512, guarded));
    items.push_back(property_item(c.random, p, kRandomFrameworks, guarded));
  }
  return items;
}

std::vector<std::string> golden_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(std::string(DEFSEM_DATA_DIR) + "/golden"))
    out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Item> determinism_items() {
  std::vector<std::vector<std::string>> runs;
  auto files = golden_files();
  for (const auto& f : files) {
    for (bool json : {false, true}) {
      std::vector<std::string> flags;
      if (json) flags.push_back("--json");
      auto add = [&](std::vector<std::string> a) {
        a.insert(a.end(), flags.begin(), flags.end());
        runs.push_back(std::move(a));
      };
      add({"defenses", f});
      for (Semantics s : kAllSemantics) {
        add({"extensions", "--side=defense", "--sem=" + std::string(defense_semantics_name(s)), f});
        add({"extensions", "--side=argument", "--sem=" + std::string(argument_semantics_name(s)), f});
      }
      add({"contract", f});
      add({"contract", "--gap", f});
      add({"reasons", "--kind=direct", f});
      add({"reasons", "--kind=root", f});
      add({"export-dot", f});
      for (const auto& g : files) {
        add({"equiv", f, g});
        add({"summarize", f, g});
      }
    }
  }
  const std::string specs = std::string(DEFSEM_DATA_DIR) + "/specs/";
  for (const char* s : {"campaign-smoke.json", "campaign-pairs-n6.json"}) {
    runs.push_back({"campaign", specs + s});
    runs.push_back({"campaign", "--json", specs + s});
  }
  runs.push_back({"bench", "--no-timing", "--json", specs + "bench-golden.json"});
  runs.push_back({"bench", "--no-timing", specs + "bench-random.json"});

  std::size_t same = 0;
  std::string first_diff;
  for (const auto& a : runs) {
    std::ostringstream o1, e1, o2, e2;
    int c1 = run_cli(a, o1, e1);
    int c2 = run_cli(a, o2, e2);
    if (c1 == c2 && o1.str() == o2.str() && e1.str() == e2.str()) {
      ++same;
    } else if (first_diff.empty()) {
      for (const auto& x : a) first_diff += x + " ";
    }
  }
  std::string detail = std::to_string(same) + "/" + std::to_string(runs.size()) + " invocations identical";
  if (!first_diff.empty()) detail += "; first difference: " + first_diff;
  return {{"every command, twice, on every golden input", same == runs.size(), detail}};
}

}  // namespace

int main() {
  std::cout << std::boolalpha;
  bool all = true;

  criterion(1, "golden examples (exact set equality, each under 1 s)", golden_items(), all);

  auto c = run_campaigns();
  auto two = suite(c, {"defendees-complete", "lift-complete"});
  two.push_back({"exhaustive n <= 3 under 300 s", c.exhaustive_seconds < kExhaustiveSeconds,
                 std::to_string(c.exhaustive_seconds) + " s for every single-framework property"});
  criterion(2, "correspondence between co and CO", two, all);
  criterion(3, "closure and justifiability", suite(c, {"closure", "justifiability"}), all);
  criterion(4, "contraction preserves CO/PR/GR and flags only unsatisfiable defenses",
            suite(c, {"contraction-preservation", "contraction-soundness"}), all);

  std::vector<Item> five;
  for (const char* p : {"defense-eq-implies-standard", "strong-implies-defense", "root-eq-implies-standard"}) {
    five.push_back(property_item(c.pairs_exhaustive, p, 512 * 511 / 2));
    five.push_back(property_item(c.pairs_random, p, kRandomPairs));
  }
  for (const auto& i : suite(c, {"kernel-invariance-defense"})) five.push_back(i);
  criterion(5, "equivalence implications", five, all);

  criterion(6, "CO enumeration matches the subset oracle where |Defs| <= 14",
            suite(c, {"co-oracle"}, true), all);
  criterion(7, "CLI output is byte-identical across runs", determinism_items(), all);

  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? 0 : 1;
}
