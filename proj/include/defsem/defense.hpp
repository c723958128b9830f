#pragma once

// Defense triples and defense semantics.
//
// A defense z^x_y records that x attacks y and y attacks z. Two marks stand in
// for the defender: TOP for an unattacked defendee (no attacker either) and
// BOT for a defendee attacked by an unattacked argument y.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "defsem/af.hpp"
#include "defsem/errors.hpp"
#include "defsem/semantics.hpp"

namespace defsem {

class DefenderRef {
 public:
  enum class Kind { top, bottom, argument };

  static DefenderRef top() { return DefenderRef(Kind::top, std::nullopt); }
  static DefenderRef bottom() { return DefenderRef(Kind::bottom, std::nullopt); }
  static DefenderRef of(Argument a) { return DefenderRef(Kind::argument, std::move(a)); }

  Kind kind() const noexcept { return kind_; }
  bool is_top() const noexcept { return kind_ == Kind::top; }
  bool is_bottom() const noexcept { return kind_ == Kind::bottom; }
  bool is_argument() const noexcept { return kind_ == Kind::argument; }

  const Argument& argument() const {
    if (!arg_) throw PreconditionError("defender mark has no argument");
    return *arg_;
  }

  // TOP, BOT or the argument name.
  std::string to_string() const {
    switch (kind_) {
      case Kind::top: return "TOP";
      case Kind::bottom: return "BOT";
      case Kind::argument: return arg_->name();
    }
    return "?";
  }

  friend auto operator<=>(const DefenderRef&, const DefenderRef&) = default;
  friend bool operator==(const DefenderRef&, const DefenderRef&) = default;

 private:
  DefenderRef(Kind kind, std::optional<Argument> arg) : kind_(kind), arg_(std::move(arg)) {}

  Kind kind_;
  std::optional<Argument> arg_;
};

class Defense {
 public:
  // (TOP, z): z has no attacker.
  static Defense top(Argument defendee) {
    return Defense(DefenderRef::top(), std::nullopt, std::move(defendee));
  }
  // (BOT, y, z): z is attacked by the unattacked argument y.
  static Defense bottom(Argument attacker, Argument defendee) {
    return Defense(DefenderRef::bottom(), std::move(attacker), std::move(defendee));
  }

  Defense(Argument defender, Argument attacker, Argument defendee)
      : Defense(DefenderRef::of(std::move(defender)), std::move(attacker),
                std::move(defendee)) {}

  const DefenderRef& defender() const noexcept { return defender_; }
  const std::optional<Argument>& attacker() const noexcept { return attacker_; }
  const Argument& defendee() const noexcept { return defendee_; }

  // "(x,y,z)" with TOP/BOT defenders and "-" for the missing attacker.
  std::string to_string() const {
    return "(" + defender_.to_string() + "," + (attacker_ ? attacker_->name() : "-") +
           "," + defendee_.name() + ")";
  }

  // Canonical order: defendee, then attacker (absent first), then defender.
  friend std::strong_ordering operator<=>(const Defense& a, const Defense& b) {
    if (auto c = a.defendee_ <=> b.defendee_; c != 0) return c;
    if (auto c = a.attacker_ <=> b.attacker_; c != 0) return c;
    return a.defender_ <=> b.defender_;
  }
  friend bool operator==(const Defense&, const Defense&) = default;

 private:
  Defense(DefenderRef defender, std::optional<Argument> attacker, Argument defendee)
      : defender_(std::move(defender)),
        attacker_(std::move(attacker)),
        defendee_(std::move(defendee)) {
    if (defender_.is_top() == attacker_.has_value())
      throw PreconditionError("a TOP defense has no attacker; every other defense has one");
  }

  DefenderRef defender_;
  std::optional<Argument> attacker_;
  Argument defendee_;
};

using Defenses = std::set<Defense>;

// Parses the "(x,y,z)" text form.
inline Defense parse_defense(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.size() < 7 || s.front() != '(' || s.back() != ')')
    throw PreconditionError("malformed defense '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ',') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != 3) throw PreconditionError("malformed defense '" + std::string(text) + "'");
  const auto& [x, y, z] = std::tie(parts[0], parts[1], parts[2]);
  if (x == "TOP") {
    if (y != "-") throw PreconditionError("TOP defense must use '-' as attacker");
    return Defense::top(Argument(z));
  }
  if (x == "BOT") return Defense::bottom(Argument(y), Argument(z));
  return Defense(Argument(x), Argument(y), Argument(z));
}

struct DefenseOptions {
  // Default: no defendee may be attacked by an unattacked argument.
  // Strict: only forbids BOT as a defender inside the set.
  bool strict_bottom = false;
};

// Defs(F) for the full set, or a subset of it (e.g. after contraction).
// Admissibility constraints always refer to the full set of the source;
// membership clauses refer to this subset.
class DefenseSet {
 public:
  DefenseSet() = default;

  explicit DefenseSet(ArgumentationFramework source)
      : source_(std::move(source)), universe_(compute(source_)), defenses_(universe_) {}

  DefenseSet(ArgumentationFramework source, Defenses subset)
      : source_(std::move(source)), universe_(compute(source_)), defenses_(std::move(subset)) {
    for (const Defense& d : defenses_)
      if (!universe_.contains(d))
        throw PreconditionError("defense " + d.to_string() + " is not a defense of the source framework");
  }

  const ArgumentationFramework& source() const noexcept { return source_; }
  const Defenses& defenses() const noexcept { return defenses_; }
  const Defenses& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return defenses_.size(); }
  bool contains(const Defense& d) const { return defenses_.contains(d); }

  DefenseSet restricted_to(Defenses subset) const {
    DefenseSet out = *this;
    for (const Defense& d : subset)
      if (!universe_.contains(d))
        throw PreconditionError("defense " + d.to_string() + " is not a defense of the source framework");
    out.defenses_ = std::move(subset);
    return out;
  }

  static Defenses compute(const ArgumentationFramework& f) {
    Defenses out;
    for (std::size_t z = 0; z < f.size(); ++z) {
      const Argument& zz = f.argument(z);
      if (f.is_initial(z)) out.insert(Defense::top(zz));
      for (std::size_t y : f.attackers_of(z)) {
        if (f.is_initial(y)) out.insert(Defense::bottom(f.argument(y), zz));
        for (std::size_t x : f.attackers_of(y))
          out.insert(Defense(f.argument(x), f.argument(y), zz));
      }
    }
    return out;
  }

 private:
  ArgumentationFramework source_;
  Defenses universe_;
  Defenses defenses_;
};

inline DefenseSet compute_defenses(const ArgumentationFramework& f) { return DefenseSet(f); }

struct DefenseExtension {
  Defenses members;
  Semantics semantics = Semantics::complete;

  friend auto operator<=>(const DefenseExtension&, const DefenseExtension&) = default;
  friend bool operator==(const DefenseExtension&, const DefenseExtension&) = default;
};

inline ArgumentSet defendees(const Defenses& d) {
  ArgumentSet out;
  for (const Defense& x : d) out.insert(x.defendee());
  return out;
}

inline std::set<DefenderRef> defenders(const Defenses& d) {
  std::set<DefenderRef> out;
  for (const Defense& x : d) out.insert(x.defender());
  return out;
}

inline ArgumentSet attackers_of(const Defenses& d) {
  ArgumentSet out;
  for (const Defense& x : d)
    if (x.attacker()) out.insert(*x.attacker());
  return out;
}

namespace detail {

inline constexpr int kTop = -1;
inline constexpr int kBottom = -2;
inline constexpr int kNone = -1;

// Integer view of a DefenseSet. Ids index the universe (the full Defs(F)).
class DefenseIndex {
 public:
  struct Item {
    int defender;  // argument index, kTop or kBottom
    int attacker;  // argument index or kNone
    int defendee;
  };

  explicit DefenseIndex(const DefenseSet& s)
      : f_(s.source()), n_(f_.size()), by_pair_(n_ * n_), top_(n_, npos) {
    for (const Defense& d : s.universe()) {
      Item it{};
      it.defendee = static_cast<int>(f_.index(d.defendee()));
      it.attacker = d.attacker() ? static_cast<int>(f_.index(*d.attacker())) : kNone;
      switch (d.defender().kind()) {
        case DefenderRef::Kind::top: it.defender = kTop; break;
        case DefenderRef::Kind::bottom: it.defender = kBottom; break;
        case DefenderRef::Kind::argument:
          it.defender = static_cast<int>(f_.index(d.defender().argument()));
          break;
      }
      std::size_t id = items_.size();
      items_.push_back(it);
      defenses_.push_back(d);
      in_s_.push_back(s.contains(d) ? 1 : 0);
      ids_.emplace(d, id);
      if (it.defender == kTop) top_[it.defendee] = id;
      if (it.defender >= 0) by_pair_[it.defendee * n_ + it.attacker].push_back(id);
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const ArgumentationFramework& framework() const { return f_; }
  std::size_t arguments() const { return n_; }
  std::size_t size() const { return items_.size(); }
  const Item& item(std::size_t id) const { return items_[id]; }
  const Defense& defense(std::size_t id) const { return defenses_[id]; }
  bool in_s(std::size_t id) const { return in_s_[id] != 0; }
  std::size_t top(std::size_t z) const { return top_[z]; }

  // Argument-defender defenses of z against y, in the universe.
  const std::vector<std::size_t>& pair(std::size_t z, std::size_t y) const {
    return by_pair_[z * n_ + y];
  }

  std::size_t id(const Defense& d) const {
    auto it = ids_.find(d);
    return it == ids_.end() ? npos : it->second;
  }

  // Membership vector over ids; throws if some member is not in S.
  std::vector<char> mask(const Defenses& d) const {
    std::vector<char> m(size(), 0);
    for (const Defense& x : d) {
      std::size_t i = id(x);
      if (i == npos || !in_s(i))
        throw PreconditionError("defense " + x.to_string() + " is not in the defense set");
      m[i] = 1;
    }
    return m;
  }

  Defenses to_set(const std::vector<char>& m) const {
    Defenses out;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) out.insert(defenses_[i]);
    return out;
  }

 private:
  const ArgumentationFramework& f_;
  std::size_t n_;
  std::vector<Item> items_;
  std::vector<Defense> defenses_;
  std::vector<char> in_s_;
  std::map<Defense, std::size_t> ids_;
  std::vector<std::vector<std::size_t>> by_pair_;
  std::vector<std::size_t> top_;
};

struct Projection {
  std::vector<char> defendee;
  std::vector<char> attacker;
};

inline Projection project(const DefenseIndex& ix, const std::vector<char>& d) {
  Projection p{std::vector<char>(ix.arguments(), 0), std::vector<char>(ix.arguments(), 0)};
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i]) continue;
    const auto& it = ix.item(i);
    p.defendee[it.defendee] = 1;
    if (it.attacker != kNone) p.attacker[it.attacker] = 1;
  }
  return p;
}

inline bool admissible(const DefenseIndex& ix, const std::vector<char>& d,
                       const DefenseOptions& opt) {
  const auto& f = ix.framework();
  const Projection p = project(ix, d);
  for (std::size_t a = 0; a < ix.arguments(); ++a)
    if (p.defendee[a] && p.attacker[a]) return false;  // (i)
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i]) continue;
    const auto& it = ix.item(i);
    if (it.defender == kBottom) return false;  // (ii), both readings
    if (it.defender >= 0 && !p.defendee[it.defender]) return false;  // (iii)
  }
  for (std::size_t z = 0; z < ix.arguments(); ++z) {
    if (!p.defendee[z]) continue;
    for (std::size_t y : f.attackers_of(z)) {
      if (f.is_initial(y)) {
        if (!opt.strict_bottom) return false;  // (ii), default reading
        continue;
      }
      // (iv): y has a non-BOT defense of z, so D must defend z against y.
      bool covered = false;
      for (std::size_t id : ix.pair(z, y))
        if (d[id]) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  }
  return true;
}

// Defenses the completeness clause forces into d: z^x_y in S whose defender
// is a defendee, while every other attacker of z can be countered by a
// defendee through some defense in S.
inline std::vector<std::size_t> forced(const DefenseIndex& ix, const std::vector<char>& defendee) {
  const auto& f = ix.framework();
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < ix.size(); ++id) {
    if (!ix.in_s(id)) continue;
    const auto& it = ix.item(id);
    if (it.defender < 0 || !defendee[it.defender]) continue;
    bool siblings = true;
    for (std::size_t y : f.attackers_of(it.defendee)) {
      if (static_cast<int>(y) == it.attacker) continue;
      bool has = false;
      for (std::size_t other : ix.pair(it.defendee, y))
        if (ix.in_s(other) && defendee[ix.item(other).defender]) {
          has = true;
          break;
        }
      if (!has) {
        siblings = false;
        break;
      }
    }
    if (siblings) out.push_back(id);
  }
  return out;
}

inline bool complete(const DefenseIndex& ix, const std::vector<char>& d,
                     const DefenseOptions& opt) {
  if (!admissible(ix, d, opt)) return false;
  for (std::size_t z = 0; z < ix.arguments(); ++z) {
    std::size_t t = ix.top(z);
    if (t != DefenseIndex::npos && ix.in_s(t) && !d[t]) return false;
  }
  const Projection p = project(ix, d);
  for (std::size_t id : forced(ix, p.defendee))
    if (!d[id]) return false;
  return true;
}

inline bool stable(const DefenseIndex& ix, const std::vector<char>& d,
                   const DefenseOptions& opt) {
  if (!admissible(ix, d, opt)) return false;
  const Projection p = project(ix, d);
  for (std::size_t a = 0; a < ix.arguments(); ++a)
    if (!p.defendee[a] && !p.attacker[a]) return false;
  return true;
}

inline constexpr std::uint64_t kMaxChoiceCombinations = std::uint64_t{1} << 22;

// Enumerates candidate defendee sets E, then every defense set D with
// defendees(D) = E that the semantics could accept, and filters by the
// predicate. Complete sets have at most one candidate per E under the
// default reading of (ii).
inline std::vector<Defenses> search(const DefenseIndex& ix, bool want_complete,
                                    const DefenseOptions& opt) {
  const auto& f = ix.framework();
  const std::size_t n = ix.arguments();

  auto options_in = [&](std::size_t z, std::size_t y, const std::vector<char>* e) {
    std::vector<std::size_t> out;
    for (std::size_t id : ix.pair(z, y))
      if (ix.in_s(id) && (!e || (*e)[ix.item(id).defender])) out.push_back(id);
    return out;
  };

  std::vector<char> viable(n, 0), must(n, 0);
  for (std::size_t z = 0; z < n; ++z) {
    std::size_t t = ix.top(z);
    if (f.is_initial(z)) {
      viable[z] = t != DefenseIndex::npos && ix.in_s(t);
      must[z] = want_complete && viable[z];
      continue;
    }
    bool ok = true, any = false;
    for (std::size_t y : f.attackers_of(z)) {
      if (f.is_initial(y)) {
        if (!opt.strict_bottom) ok = false;
        continue;
      }
      if (options_in(z, y, nullptr).empty()) ok = false;
      any = true;
    }
    viable[z] = ok && any;
  }

  // Attacks that must be defended against put their source in attacker(D),
  // so source and target cannot both be defendees.
  auto clash = [&](std::size_t a, std::size_t b) {
    return f.attacks(a, b) && !f.is_initial(a);
  };

  std::vector<Defenses> found;
  std::vector<char> e(n, 0);

  auto leaf = [&]() {
    std::vector<std::vector<std::vector<std::size_t>>> groups;  // one per (z, y)
    std::vector<char> base(ix.size(), 0);
    for (std::size_t z = 0; z < n; ++z) {
      if (!e[z]) continue;
      if (f.is_initial(z)) {
        base[ix.top(z)] = 1;
        continue;
      }
      std::vector<std::vector<std::size_t>> per_attacker;
      for (std::size_t y : f.attackers_of(z)) {
        if (f.is_initial(y)) continue;
        auto opts = options_in(z, y, &e);
        if (opts.empty()) return;
        per_attacker.push_back(std::move(opts));
      }
      bool all_coverable = per_attacker.size() == f.attackers_of(z).size();
      for (auto& opts : per_attacker) {
        if (want_complete && all_coverable) {
          for (std::size_t id : opts) base[id] = 1;
        } else if (opts.size() == 1) {
          base[opts[0]] = 1;
        } else {
          groups.push_back({});
          auto& g = groups.back();
          for (std::uint64_t m = 1; m < (std::uint64_t{1} << opts.size()); ++m) {
            std::vector<std::size_t> pick;
            for (std::size_t k = 0; k < opts.size(); ++k)
              if (m >> k & 1) pick.push_back(opts[k]);
            g.push_back(std::move(pick));
          }
        }
      }
    }
    std::uint64_t combos = 1;
    for (const auto& g : groups) {
      combos *= g.size();
      if (combos > kMaxChoiceCombinations)
        throw InstanceTooLarge("defense choice combinations", combos, kMaxChoiceCombinations);
    }
    std::vector<std::size_t> pos(groups.size(), 0);
    for (;;) {
      std::vector<char> d = base;
      for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t id : groups[g][pos[g]]) d[id] = 1;
      bool ok = want_complete ? complete(ix, d, opt) : stable(ix, d, opt);
      if (ok) found.push_back(ix.to_set(d));
      std::size_t g = 0;
      while (g < groups.size() && ++pos[g] == groups[g].size()) pos[g++] = 0;
      if (g == groups.size()) break;
    }
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      leaf();
      return;
    }
    if (!must[i]) self(self, i + 1);
    if (!viable[i] || clash(i, i)) return;
    for (std::size_t j = 0; j < i; ++j)
      if (e[j] && (clash(i, j) || clash(j, i))) return;
    e[i] = 1;
    self(self, i + 1);
    e[i] = 0;
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace detail

inline bool is_admissible_defenses(const DefenseSet& s, const Defenses& d,
                                   const DefenseOptions& opt = {}) {
  detail::DefenseIndex ix(s);
  return detail::admissible(ix, ix.mask(d), opt);
}

inline bool is_complete_defenses(const DefenseSet& s, const Defenses& d,
                                 const DefenseOptions& opt = {}) {
  detail::DefenseIndex ix(s);
  return detail::complete(ix, ix.mask(d), opt);
}

inline bool is_stable_defenses(const DefenseSet& s, const Defenses& d,
                               const DefenseOptions& opt = {}) {
  detail::DefenseIndex ix(s);
  return detail::stable(ix, ix.mask(d), opt);
}

// Least superset of d closed under the completeness clause.
inline Defenses close_defenses(const DefenseSet& s, const Defenses& d) {
  detail::DefenseIndex ix(s);
  std::vector<char> m = ix.mask(d);
  for (std::size_t z = 0; z < ix.arguments(); ++z)
    if (auto t = ix.top(z); t != detail::DefenseIndex::npos && ix.in_s(t)) m[t] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t id : detail::forced(ix, detail::project(ix, m).defendee))
      if (!m[id]) {
        m[id] = 1;
        changed = true;
      }
  }
  return ix.to_set(m);
}

inline std::vector<DefenseExtension> enumerate_defense_extensions(
    const DefenseSet& s, Semantics sem, const DefenseOptions& opt = {}) {
  detail::DefenseIndex ix(s);
  std::vector<Defenses> sets = detail::search(ix, sem != Semantics::stable, opt);
  auto id = [](const Defenses& x) -> const Defenses& { return x; };
  if (sem == Semantics::preferred) sets = detail::extremal(sets, true, id);
  if (sem == Semantics::grounded) sets = detail::extremal(sets, false, id);
  std::vector<DefenseExtension> out;
  out.reserve(sets.size());
  for (auto& m : sets) out.push_back(DefenseExtension{std::move(m), sem});
  return out;
}

// def(E): the defenses of S whose defender and defendee are both in E, plus
// the TOP defenses of members of E.
inline Defenses defense_extension_of_argument_extension(const DefenseSet& s,
                                                        const ArgumentExtension& e) {
  if (!is_complete_extension(s.source(), e.members))
    throw PreconditionError("argument extension is not complete");
  Defenses out;
  for (const Defense& d : s.defenses()) {
    if (!e.members.contains(d.defendee())) continue;
    if (d.defender().is_top() ||
        (d.defender().is_argument() && e.members.contains(d.defender().argument())))
      out.insert(d);
  }
  return out;
}

inline ArgumentExtension argument_extension_of_defense_extension(
    const DefenseSet& s, const Defenses& d, const DefenseOptions& opt = {}) {
  if (!is_complete_defenses(s, d, opt))
    throw PreconditionError("defense extension is not complete");
  return ArgumentExtension{defendees(d)};
}

}  // namespace defsem
