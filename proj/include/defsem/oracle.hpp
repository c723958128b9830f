#pragma once

// Brute-force reference implementations. They share no code with the
// enumerators they check beyond the framework and defense value types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "defsem/af.hpp"
#include "defsem/defense.hpp"
#include "defsem/errors.hpp"

namespace defsem::oracle {

inline constexpr std::size_t kMaxDungArguments = 20;
inline constexpr std::size_t kMaxDefenseSubsets = 14;

// All complete argument extensions, by testing every subset of AR.
inline std::vector<ArgumentExtension> dung_complete(const ArgumentationFramework& f) {
  const std::size_t n = f.size();
  if (n > kMaxDungArguments) throw InstanceTooLarge("dung oracle", n, kMaxDungArguments);
  std::vector<std::uint32_t> attackers(n, 0);
  for (const Attack& att : f.attacks())
    attackers[f.index(att.to)] |= std::uint32_t{1} << f.index(att.from);

  std::vector<ArgumentExtension> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool ok = true;
    std::uint32_t attacked_by_s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (attackers[i] & s) attacked_by_s |= std::uint32_t{1} << i;
    if (attacked_by_s & s) continue;
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool defended = (attackers[i] & ~attacked_by_s) == 0;
      bool member = (s >> i) & 1;
      if (defended != member) ok = false;
    }
    if (!ok) continue;
    ArgumentExtension e;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1) e.members.insert(f.argument(i));
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Defs(F) straight from the attack relation.
inline Defenses defenses(const ArgumentationFramework& f) {
  Defenses out;
  for (const Argument& z : f.arguments()) {
    ArgumentSet zs = attackers(f, z);
    if (zs.empty()) out.insert(Defense::top(z));
    for (const Argument& y : zs) {
      ArgumentSet ys = attackers(f, y);
      if (ys.empty()) out.insert(Defense::bottom(y, z));
      for (const Argument& x : ys) out.insert(Defense(x, y, z));
    }
  }
  return out;
}

// Admissible / complete predicates written directly from the definitions,
// over a flat list of defenses addressed by bit position.
class DefensePredicates {
 public:
  DefensePredicates(const DefenseSet& s, DefenseOptions opt = {})
      : f_(s.source()), opt_(opt), list_(s.defenses().begin(), s.defenses().end()) {
    for (const Defense& d : oracle::defenses(f_)) {
      if (d.defender().is_bottom()) bottom_defendees_.insert(d.defendee());
      if (d.defender().is_argument()) nonbottom_pairs_.insert({d.defendee(), *d.attacker()});
    }
  }

  const std::vector<Defense>& list() const { return list_; }

  Defenses select(std::uint64_t bits) const {
    Defenses out;
    for (std::size_t i = 0; i < list_.size(); ++i)
      if ((bits >> i) & 1) out.insert(list_[i]);
    return out;
  }

  bool admissible(const Defenses& d) const {
    const ArgumentSet zs = defendees(d);
    const ArgumentSet ys = attackers_of(d);
    for (const Argument& z : zs)
      if (ys.contains(z)) return false;
    for (const Defense& x : d)
      if (x.defender().is_bottom()) return false;
    if (!opt_.strict_bottom)
      for (const Argument& z : zs)
        if (bottom_defendees_.contains(z)) return false;
    for (const Defense& x : d)
      if (x.defender().is_argument() && !zs.contains(x.defender().argument())) return false;
    for (const Argument& z : zs)
      for (const Argument& y : attackers(f_, z)) {
        if (!nonbottom_pairs_.contains({z, y})) continue;
        bool covered = std::any_of(d.begin(), d.end(), [&](const Defense& x) {
          return x.defendee() == z && x.attacker() == y && x.defender().is_argument();
        });
        if (!covered) return false;
      }
    return true;
  }

  bool complete(const Defenses& d) const {
    if (!admissible(d)) return false;
    const ArgumentSet zs = defendees(d);
    for (const Defense& x : list_) {
      if (x.defender().is_top()) {
        if (!d.contains(x)) return false;
        continue;
      }
      if (!x.defender().is_argument() || !zs.contains(x.defender().argument())) continue;
      bool siblings = true;
      for (const Argument& y : attackers(f_, x.defendee())) {
        if (y == *x.attacker()) continue;
        bool has = std::any_of(list_.begin(), list_.end(), [&](const Defense& w) {
          return w.defendee() == x.defendee() && w.attacker() == y &&
                 w.defender().is_argument() && zs.contains(w.defender().argument());
        });
        if (!has) siblings = false;
      }
      if (siblings && !d.contains(x)) return false;
    }
    return true;
  }

 private:
  const ArgumentationFramework& f_;
  DefenseOptions opt_;
  std::vector<Defense> list_;
  ArgumentSet bottom_defendees_;
  std::set<std::pair<Argument, Argument>> nonbottom_pairs_;
};

// CO by filtering all 2^|S| subsets.
inline std::vector<Defenses> complete_defense_sets(const DefenseSet& s,
                                                   const DefenseOptions& opt = {}) {
  if (s.size() > kMaxDefenseSubsets)
    throw InstanceTooLarge("defense subset oracle", s.size(), kMaxDefenseSubsets);
  DefensePredicates p(s, opt);
  std::vector<Defenses> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.size()); ++bits) {
    Defenses d = p.select(bits);
    if (p.complete(d)) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Defenses of S lying in some admissible subset of S. For a defendee set E
// the largest candidate is every defense of S with defendee and defender in
// E; any admissible set with defendees E is contained in it and it is then
// admissible itself, so searching over E is exact.
inline Defenses satisfiable_defenses(const DefenseSet& s, const DefenseOptions& opt = {}) {
  const auto& f = s.source();
  const std::size_t n = f.size();
  if (n > kMaxDungArguments) throw InstanceTooLarge("defendee set search", n, kMaxDungArguments);
  DefensePredicates p(s, opt);
  Defenses out;
  for (std::uint32_t e = 1; e < (std::uint32_t{1} << n); ++e) {
    auto in = [&](const Argument& a) { return (e >> f.index(a)) & 1; };
    Defenses d;
    for (const Defense& x : s.defenses()) {
      if (!in(x.defendee()) || x.defender().is_bottom()) continue;
      if (x.defender().is_argument() && !in(x.defender().argument())) continue;
      d.insert(x);
    }
    if (defendees(d).size() != static_cast<std::size_t>(std::popcount(e))) continue;
    if (p.admissible(d)) out.insert(d.begin(), d.end());
  }
  return out;
}

}  // namespace defsem::oracle
