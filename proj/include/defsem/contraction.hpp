#pragma once

// Unsatisfiable defenses and contraction of defense sets.

#include <cstdint>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "defsem/defense.hpp"

namespace defsem {

// Syntactic patterns that make a defense unsatisfiable.
enum class UnsatRule {
  bottom_defender,          // z^BOT_y
  self_attacking_attacker,  // z^y_y: the attacker defends against itself
  self_attacking_defender,  // u^y_v where y attacks itself
  defendee_is_attacker,     // z^x_z
  three_cycle,              // y^z_x with z^u_y also a defense
};

inline constexpr UnsatRule kAllUnsatRules[] = {
    UnsatRule::bottom_defender, UnsatRule::self_attacking_attacker,
    UnsatRule::self_attacking_defender, UnsatRule::defendee_is_attacker,
    UnsatRule::three_cycle};

inline std::string_view unsat_rule_name(UnsatRule r) {
  switch (r) {
    case UnsatRule::bottom_defender: return "bottom-defender";
    case UnsatRule::self_attacking_attacker: return "self-attacking-attacker";
    case UnsatRule::self_attacking_defender: return "self-attacking-defender";
    case UnsatRule::defendee_is_attacker: return "defendee-is-attacker";
    case UnsatRule::three_cycle: return "three-cycle";
  }
  return "?";
}

using UnsatTags = std::set<UnsatRule>;

struct ContractionResult {
  Defenses removed;
  DefenseSet remaining;
  std::map<Defense, UnsatTags> rule_trace;
};

// Patterns are matched against Defs(source), never against a contracted
// subset, so removing defenses cannot enable or disable a match.
inline UnsatTags syntactic_unsat_tags(const DefenseSet& s, const Defense& d) {
  if (!s.contains(d))
    throw PreconditionError("defense " + d.to_string() + " is not in the defense set");
  UnsatTags tags;
  const auto& f = s.source();
  if (d.defender().is_bottom()) tags.insert(UnsatRule::bottom_defender);
  if (!d.defender().is_argument()) return tags;

  const Argument& x = d.defender().argument();
  const Argument& y = *d.attacker();
  const Argument& z = d.defendee();
  if (x == y) tags.insert(UnsatRule::self_attacking_attacker);
  if (y == z) tags.insert(UnsatRule::defendee_is_attacker);
  // Some w^x_x exists iff x attacks itself (w = x qualifies).
  if (f.attacks(x, x)) tags.insert(UnsatRule::self_attacking_defender);
  // Three-cycle premise: some defense of the defender x against the
  // defendee z, i.e. x^u_z in Defs(F).
  if (x != y && y != z && x != z && f.attacks(z, x)) {
    for (const Defense& other : s.universe()) {
      if (other.defendee() == x && other.attacker() == z &&
          other.defender().is_argument()) {
        tags.insert(UnsatRule::three_cycle);
        break;
      }
    }
  }
  return tags;
}

inline constexpr std::size_t kDefaultUnsatBound = 20;

// True iff no admissible subset of S contains d. Exhaustive over the
// 2^(|S|-1) subsets that contain d.
inline bool semantic_unsat(const DefenseSet& s, const Defense& d,
                           std::size_t bound = kDefaultUnsatBound,
                           const DefenseOptions& opt = {}) {
  if (!s.contains(d))
    throw PreconditionError("defense " + d.to_string() + " is not in the defense set");
  if (s.size() > bound) throw InstanceTooLarge("semantic unsatisfiability check", s.size(), bound);
  detail::DefenseIndex ix(s);
  std::vector<std::size_t> others;
  const std::size_t target = ix.id(d);
  for (std::size_t id = 0; id < ix.size(); ++id)
    if (ix.in_s(id) && id != target) others.push_back(id);
  std::vector<char> m(ix.size(), 0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << others.size()); ++bits) {
    for (std::size_t k = 0; k < others.size(); ++k) m[others[k]] = (bits >> k) & 1;
    m[target] = 1;
    if (detail::admissible(ix, m, opt)) return false;
  }
  return true;
}

inline ContractionResult contract(const DefenseSet& s, const Defenses& c) {
  Defenses remaining;
  for (const Defense& d : c)
    if (!s.contains(d))
      throw PreconditionError("defense " + d.to_string() + " is not in the defense set");
  for (const Defense& d : s.defenses())
    if (!c.contains(d)) remaining.insert(d);
  return ContractionResult{c, s.restricted_to(std::move(remaining)), {}};
}

// Removes every defense matched by a syntactic rule, to a fixpoint.
inline ContractionResult auto_contract(const DefenseSet& s) {
  ContractionResult result{{}, s, {}};
  for (;;) {
    Defenses round;
    for (const Defense& d : result.remaining.defenses()) {
      UnsatTags tags = syntactic_unsat_tags(result.remaining, d);
      if (tags.empty()) continue;
      round.insert(d);
      result.rule_trace[d] = std::move(tags);
    }
    if (round.empty()) break;
    result.removed.insert(round.begin(), round.end());
    result.remaining = contract(result.remaining, round).remaining;
  }
  return result;
}

}  // namespace defsem
