#pragma once

// Abstract argumentation frameworks and classical (Dung) semantics.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string_view>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "defsem/errors.hpp"
#include "defsem/semantics.hpp"

namespace defsem {

inline bool is_valid_argument_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// An argument symbol. Names are case-sensitive tokens over [A-Za-z0-9_].
class Argument {
 public:
  explicit Argument(std::string name) : name_(std::move(name)) {
    if (!is_valid_argument_name(name_))
      throw PreconditionError("invalid argument name '" + name_ + "'");
  }

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const Argument&, const Argument&) = default;
  friend bool operator==(const Argument&, const Argument&) = default;

 private:
  std::string name_;
};

struct Attack {
  Argument from;
  Argument to;

  friend auto operator<=>(const Attack&, const Attack&) = default;
  friend bool operator==(const Attack&, const Attack&) = default;
};

using ArgumentSet = std::set<Argument>;
using AttackSet = std::set<Attack>;

struct ArgumentExtension {
  ArgumentSet members;

  friend auto operator<=>(const ArgumentExtension&,
                          const ArgumentExtension&) = default;
  friend bool operator==(const ArgumentExtension&,
                         const ArgumentExtension&) = default;
};

// Immutable after construction. Arguments are kept in name order and
// addressed internally by their rank in that order.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  ArgumentationFramework(ArgumentSet arguments, AttackSet attacks)
      : arguments_(arguments.begin(), arguments.end()),
        attacks_(std::move(attacks)) {
    const std::size_t n = arguments_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(arguments_[i].name(), i);
    matrix_.assign(n * n, 0);
    attackers_.assign(n, {});
    attacked_.assign(n, {});
    for (const Attack& att : attacks_) {
      auto from = index_.find(att.from.name());
      auto to = index_.find(att.to.name());
      if (from == index_.end()) throw UnknownArgument(att.from.name());
      if (to == index_.end()) throw UnknownArgument(att.to.name());
      matrix_[from->second * n + to->second] = 1;
      attackers_[to->second].push_back(from->second);
      attacked_[from->second].push_back(to->second);
    }
    for (auto& v : attackers_) std::sort(v.begin(), v.end());
    for (auto& v : attacked_) std::sort(v.begin(), v.end());
  }

  std::size_t size() const noexcept { return arguments_.size(); }
  bool empty() const noexcept { return arguments_.empty(); }

  const std::vector<Argument>& arguments() const noexcept { return arguments_; }
  const AttackSet& attacks() const noexcept { return attacks_; }

  ArgumentSet argument_set() const {
    return ArgumentSet(arguments_.begin(), arguments_.end());
  }

  bool contains(const Argument& a) const { return index_.contains(a.name()); }

  std::size_t index(const Argument& a) const {
    auto it = index_.find(a.name());
    if (it == index_.end()) throw UnknownArgument(a.name());
    return it->second;
  }

  const Argument& argument(std::size_t i) const { return arguments_.at(i); }

  bool attacks(std::size_t from, std::size_t to) const {
    return matrix_[from * size() + to] != 0;
  }
  bool attacks(const Argument& from, const Argument& to) const {
    return attacks(index(from), index(to));
  }

  // Indices of the arguments attacking / attacked by argument i, ascending.
  const std::vector<std::size_t>& attackers_of(std::size_t i) const {
    return attackers_.at(i);
  }
  const std::vector<std::size_t>& attacked_by(std::size_t i) const {
    return attacked_.at(i);
  }

  bool is_initial(std::size_t i) const { return attackers_of(i).empty(); }
  bool self_attacking(std::size_t i) const { return attacks(i, i); }

  friend bool operator==(const ArgumentationFramework& a,
                         const ArgumentationFramework& b) {
    return a.arguments_ == b.arguments_ && a.attacks_ == b.attacks_;
  }

 private:
  std::vector<Argument> arguments_;
  AttackSet attacks_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<char> matrix_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> attacked_;
};

using AF = ArgumentationFramework;

// Convenience builder for tests and generators.
inline ArgumentationFramework make_af(
    std::initializer_list<std::string> names,
    std::initializer_list<std::pair<std::string, std::string>> attacks) {
  ArgumentSet args;
  for (const auto& n : names) args.emplace(n);
  AttackSet atts;
  for (const auto& [f, t] : attacks) atts.insert(Attack{Argument(f), Argument(t)});
  return ArgumentationFramework(std::move(args), std::move(atts));
}

namespace detail {

inline std::vector<char> membership(const ArgumentationFramework& f,
                                    const ArgumentSet& s) {
  std::vector<char> in(f.size(), 0);
  for (const Argument& a : s) in[f.index(a)] = 1;
  return in;
}

inline ArgumentSet to_set(const ArgumentationFramework& f,
                          const std::vector<char>& in) {
  ArgumentSet out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.insert(f.argument(i));
  return out;
}

inline bool conflict_free(const ArgumentationFramework& f,
                          const std::vector<char>& in) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!in[i]) continue;
    for (std::size_t j : f.attacked_by(i))
      if (in[j]) return false;
  }
  return true;
}

inline bool defended(const ArgumentationFramework& f, const std::vector<char>& in,
                     std::size_t a) {
  for (std::size_t b : f.attackers_of(a)) {
    bool countered = false;
    for (std::size_t c : f.attackers_of(b))
      if (in[c]) {
        countered = true;
        break;
      }
    if (!countered) return false;
  }
  return true;
}

inline bool complete(const ArgumentationFramework& f,
                     const std::vector<char>& in) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (in[i] != static_cast<char>(defended(f, in, i))) return false;
  return true;
}

inline bool stable(const ArgumentationFramework& f, const std::vector<char>& in) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (in[i]) continue;
    bool hit = false;
    for (std::size_t b : f.attackers_of(i))
      if (in[b]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// Keeps the inclusion-maximal (or minimal) members of a sorted family.
template <class T, class Members>
std::vector<T> extremal(const std::vector<T>& family, bool maximal, Members members) {
  std::vector<T> out;
  for (const T& x : family) {
    const auto& mx = members(x);
    bool dominated = false;
    for (const T& y : family) {
      const auto& my = members(y);
      if (mx == my) continue;
      bool strict = maximal ? std::includes(my.begin(), my.end(), mx.begin(), mx.end())
                            : std::includes(mx.begin(), mx.end(), my.begin(), my.end());
      if (strict) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

}  // namespace detail

inline ArgumentSet attackers(const ArgumentationFramework& f, const Argument& a) {
  ArgumentSet out;
  for (std::size_t b : f.attackers_of(f.index(a))) out.insert(f.argument(b));
  return out;
}

inline bool is_initial(const ArgumentationFramework& f, const Argument& a) {
  return f.is_initial(f.index(a));
}

inline bool is_conflict_free(const ArgumentationFramework& f, const ArgumentSet& s) {
  return detail::conflict_free(f, detail::membership(f, s));
}

// Every attacker of a is attacked by some member of s.
inline bool defends(const ArgumentationFramework& f, const ArgumentSet& s,
                    const Argument& a) {
  return detail::defended(f, detail::membership(f, s), f.index(a));
}

inline bool is_admissible(const ArgumentationFramework& f, const ArgumentSet& s) {
  auto in = detail::membership(f, s);
  if (!detail::conflict_free(f, in)) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (in[i] && !detail::defended(f, in, i)) return false;
  return true;
}

inline bool is_complete_extension(const ArgumentationFramework& f,
                                  const ArgumentSet& s) {
  auto in = detail::membership(f, s);
  return detail::conflict_free(f, in) && detail::complete(f, in);
}

inline bool is_stable_extension(const ArgumentationFramework& f,
                                const ArgumentSet& s) {
  auto in = detail::membership(f, s);
  return detail::conflict_free(f, in) && detail::stable(f, in);
}

// Exhaustive candidate search with conflict pruning. Extensions come back
// sorted, so equal families compare equal as vectors.
inline std::vector<ArgumentExtension> enumerate_argument_extensions(
    const ArgumentationFramework& f, Semantics sem) {
  const std::size_t n = f.size();
  std::vector<char> in(n, 0);
  std::vector<ArgumentExtension> found;
  const bool want_stable = sem == Semantics::stable;

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      bool ok = want_stable ? detail::stable(f, in) : detail::complete(f, in);
      if (ok) found.push_back(ArgumentExtension{detail::to_set(f, in)});
      return;
    }
    self(self, i + 1);
    if (f.self_attacking(i)) return;
    for (std::size_t j : f.attackers_of(i))
      if (in[j]) return;
    for (std::size_t j : f.attacked_by(i))
      if (in[j]) return;
    in[i] = 1;
    self(self, i + 1);
    in[i] = 0;
  };
  search(search, 0);
  std::sort(found.begin(), found.end());

  auto members = [](const ArgumentExtension& e) -> const ArgumentSet& { return e.members; };
  switch (sem) {
    case Semantics::preferred: return detail::extremal(found, true, members);
    case Semantics::grounded: return detail::extremal(found, false, members);
    default: return found;
  }
}

// Drops every attack between two distinct self-attacking arguments.
inline ArgumentationFramework c_kernel(const ArgumentationFramework& f) {
  AttackSet kept;
  for (const Attack& att : f.attacks()) {
    bool both_self = att.from != att.to && f.attacks(att.from, att.from) &&
                     f.attacks(att.to, att.to);
    if (!both_self) kept.insert(att);
  }
  return ArgumentationFramework(f.argument_set(), std::move(kept));
}

inline ArgumentationFramework union_af(const ArgumentationFramework& f,
                                       const ArgumentationFramework& g) {
  ArgumentSet args = f.argument_set();
  for (const Argument& a : g.arguments()) args.insert(a);
  AttackSet atts = f.attacks();
  atts.insert(g.attacks().begin(), g.attacks().end());
  return ArgumentationFramework(std::move(args), std::move(atts));
}

inline bool standard_equivalent(const ArgumentationFramework& f,
                                const ArgumentationFramework& g, Semantics sem) {
  return enumerate_argument_extensions(f, sem) == enumerate_argument_extensions(g, sem);
}

// Decided by syntactic identity of the c-kernels.
inline bool strong_equivalent_co(const ArgumentationFramework& f,
                                 const ArgumentationFramework& g) {
  return c_kernel(f) == c_kernel(g);
}

}  // namespace defsem
