#pragma once

// Reasons for accepting arguments, and equivalence notions between
// frameworks built on defense semantics.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "defsem/af.hpp"
#include "defsem/defense.hpp"

namespace defsem {

// A set of arguments, or {TOP} for an unattacked argument.
using Reason = std::set<DefenderRef>;

struct ReasonEntry {
  std::size_t extension;  // index into the canonical extension order
  Reason reason;

  friend bool operator==(const ReasonEntry&, const ReasonEntry&) = default;
};

struct ReasonSet {
  Argument argument;
  std::vector<ReasonEntry> per_extension;
};

struct ReasonOptions {
  // Root reasons by the bare closure formula: {a} when a reaches itself or
  // is reached from TOP, {} otherwise.
  bool literal_root_formula = false;
  DefenseOptions defense;
};

inline std::string reason_to_string(const Reason& r) {
  std::string out = "{";
  for (const auto& m : r) {
    if (out.size() > 1) out += ",";
    out += m.to_string();
  }
  return out + "}";
}

// Defenders of a within one extension; {TOP} when a is unattacked.
inline Reason direct_reason(const ArgumentationFramework& f, const Defenses& d,
                            const Argument& a) {
  if (is_initial(f, a)) return {DefenderRef::top()};
  Reason out;
  for (const Defense& x : d)
    if (x.defendee() == a && x.defender().is_argument()) out.insert(x.defender());
  return out;
}

namespace detail {

// Reachability over the defender -> defendee relation of one extension.
// Node n stands for TOP.
class DefenseGraph {
 public:
  DefenseGraph(const ArgumentationFramework& f, const Defenses& d)
      : n_(f.size()), edge_((n_ + 1) * (n_ + 1), 0) {
    for (const Defense& x : d) {
      std::size_t to = f.index(x.defendee());
      if (x.defender().is_top()) edge_[at(n_, to)] = 1;
      else if (x.defender().is_argument()) edge_[at(f.index(x.defender().argument()), to)] = 1;
    }
    reach_ = edge_;
    for (std::size_t k = 0; k <= n_; ++k)
      for (std::size_t i = 0; i <= n_; ++i) {
        if (!reach_[at(i, k)]) continue;
        for (std::size_t j = 0; j <= n_; ++j)
          if (reach_[at(k, j)]) reach_[at(i, j)] = 1;
      }
  }

  std::size_t top() const { return n_; }
  bool edge(std::size_t from, std::size_t to) const { return edge_[at(from, to)] != 0; }
  bool reaches(std::size_t from, std::size_t to) const { return reach_[at(from, to)] != 0; }

  // x lies on a cycle and nothing outside that cycle reaches it.
  bool cyclic_source(std::size_t x) const {
    if (!reaches(x, x) || reaches(top(), x)) return false;
    for (std::size_t w = 0; w < n_; ++w)
      if (reaches(w, x) && !reaches(x, w)) return false;
    return true;
  }

 private:
  std::size_t at(std::size_t i, std::size_t j) const { return i * (n_ + 1) + j; }

  std::size_t n_;
  std::vector<char> edge_;
  std::vector<char> reach_;
};

}  // namespace detail

// Roots of a's support in one extension: unattacked arguments and cyclic
// source components that reach a. A component containing a is reported as
// a itself.
inline Reason root_reason(const ArgumentationFramework& f, const Defenses& d,
                          const Argument& a, const ReasonOptions& opt = {}) {
  if (is_initial(f, a)) return {DefenderRef::top()};
  const detail::DefenseGraph g(f, d);
  const std::size_t alpha = f.index(a);
  if (opt.literal_root_formula) {
    if (g.reaches(alpha, alpha) || g.reaches(g.top(), alpha)) return {DefenderRef::of(a)};
    return {};
  }
  Reason out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!g.reaches(x, alpha)) continue;
    if (g.edge(g.top(), x)) {
      out.insert(DefenderRef::of(f.argument(x)));
    } else if (g.cyclic_source(x)) {
      bool with_alpha = g.reaches(alpha, x);
      out.insert(DefenderRef::of(with_alpha ? a : f.argument(x)));
    }
  }
  return out;
}

inline ReasonSet direct_reasons(const ArgumentationFramework& f,
                                const std::vector<DefenseExtension>& extensions,
                                const Argument& a) {
  f.index(a);
  ReasonSet out{a, {}};
  for (std::size_t i = 0; i < extensions.size(); ++i)
    out.per_extension.push_back({i, direct_reason(f, extensions[i].members, a)});
  return out;
}

inline ReasonSet direct_reasons(const ArgumentationFramework& f, Semantics sem,
                                const Argument& a, const DefenseOptions& opt = {}) {
  f.index(a);
  return direct_reasons(f, enumerate_defense_extensions(compute_defenses(f), sem, opt), a);
}

inline ReasonSet root_reasons(const ArgumentationFramework& f,
                              const std::vector<DefenseExtension>& extensions,
                              const Argument& a, const ReasonOptions& opt = {}) {
  f.index(a);
  ReasonSet out{a, {}};
  for (std::size_t i = 0; i < extensions.size(); ++i)
    out.per_extension.push_back({i, root_reason(f, extensions[i].members, a, opt)});
  return out;
}

inline ReasonSet root_reasons(const ArgumentationFramework& f, Semantics sem,
                              const Argument& a, const ReasonOptions& opt = {}) {
  f.index(a);
  return root_reasons(f, enumerate_defense_extensions(compute_defenses(f), sem, opt.defense),
                      a, opt);
}

inline bool defense_equivalent(const ArgumentationFramework& f,
                               const ArgumentationFramework& g, Semantics sem,
                               const DefenseOptions& opt = {}) {
  auto members = [&](const ArgumentationFramework& h) {
    std::vector<Defenses> out;
    for (auto& e : enumerate_defense_extensions(compute_defenses(h), sem, opt))
      out.push_back(std::move(e.members));
    return out;
  };
  return members(f) == members(g);
}

namespace detail {

using ReasonProfile = std::vector<std::vector<Reason>>;

// One row per extension: the root reasons of the members of b, in order.
// Rows are sorted, so the profile is a multiset of rows.
inline ReasonProfile root_profile(const ArgumentationFramework& f, const ArgumentSet& b,
                                  Semantics sem, const ReasonOptions& opt) {
  ReasonProfile rows;
  for (const auto& e : enumerate_defense_extensions(compute_defenses(f), sem, opt.defense)) {
    std::vector<Reason> row;
    for (const Argument& a : b) row.push_back(root_reason(f, e.members, a, opt));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline void check_root_scope(const ArgumentationFramework& f, const ArgumentationFramework& h,
                             const ArgumentSet& b) {
  if (b.empty()) throw PreconditionError("root equivalence needs a nonempty argument set");
  for (const Argument& a : b)
    if (!f.contains(a) || !h.contains(a))
      throw PreconditionError("argument '" + a.name() + "' is not shared by both frameworks");
}

}  // namespace detail

// Root reasons agree on b. The per-extension reasons of all members of b are
// compared together, extension by extension, up to reordering of extensions.
inline bool root_equivalent(const ArgumentationFramework& f, const ArgumentationFramework& h,
                            const ArgumentSet& b, Semantics sem,
                            const ReasonOptions& opt = {}) {
  detail::check_root_scope(f, h, b);
  return detail::root_profile(f, b, sem, opt) == detail::root_profile(h, b, sem, opt);
}

// f has strictly fewer arguments than h and is root equivalent to h on them.
inline bool is_summarization(const ArgumentationFramework& f, const ArgumentationFramework& h,
                             Semantics sem, const ReasonOptions& opt = {}) {
  ArgumentSet ours = f.argument_set();
  ArgumentSet theirs = h.argument_set();
  if (ours.empty() || ours.size() >= theirs.size()) return false;
  if (!std::includes(theirs.begin(), theirs.end(), ours.begin(), ours.end())) return false;
  return root_equivalent(f, h, ours, sem, opt);
}

struct Verdict {
  bool holds = false;
  std::string witness;  // empty when the verdict holds
};

struct EquivalenceQuery {
  std::vector<Semantics> standard;
  bool strong_co = false;
  std::vector<Semantics> defense;
  std::optional<Semantics> root;
  std::optional<ArgumentSet> root_arguments;  // defaults to the shared arguments
  ReasonOptions options;
};

struct EquivalenceReport {
  std::map<Semantics, Verdict> standard;
  std::optional<Verdict> strong_co;
  std::map<Semantics, Verdict> defense;
  std::optional<Verdict> root;
  Semantics root_semantics = Semantics::complete;
  ArgumentSet root_arguments;

  bool all_hold() const {
    auto ok = [](const auto& m) {
      return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second.holds; });
    };
    return ok(standard) && ok(defense) && (!strong_co || strong_co->holds) &&
           (!root || root->holds);
  }
};

namespace detail {

inline std::string set_text(const ArgumentSet& s) {
  std::string out = "{";
  for (const Argument& a : s) out += (out.size() > 1 ? "," : "") + a.name();
  return out + "}";
}

inline std::string set_text(const Defenses& s) {
  std::string out = "{";
  for (const Defense& d : s) out += (out.size() > 1 ? "," : "") + d.to_string();
  return out + "}";
}

// First element of the symmetric difference of two sorted families.
template <class T, class Text>
Verdict compare_families(const std::vector<T>& a, const std::vector<T>& b, Text text) {
  if (a == b) return {true, {}};
  for (const T& x : a)
    if (!std::binary_search(b.begin(), b.end(), x)) return {false, text(x) + " only in first"};
  for (const T& x : b)
    if (!std::binary_search(a.begin(), a.end(), x)) return {false, text(x) + " only in second"};
  return {false, "extension counts differ"};
}

inline Verdict kernel_verdict(const ArgumentationFramework& f, const ArgumentationFramework& g) {
  const auto kf = c_kernel(f), kg = c_kernel(g);
  if (kf == kg) return {true, {}};
  if (kf.arguments() != kg.arguments()) return {false, "argument sets differ"};
  for (const Attack& att : kf.attacks())
    if (!kg.attacks().contains(att))
      return {false, "kernel attack (" + att.from.name() + "," + att.to.name() + ") only in first"};
  for (const Attack& att : kg.attacks())
    if (!kf.attacks().contains(att))
      return {false, "kernel attack (" + att.from.name() + "," + att.to.name() + ") only in second"};
  return {false, "kernels differ"};
}

}  // namespace detail

inline EquivalenceReport compare_frameworks(const ArgumentationFramework& f,
                                            const ArgumentationFramework& g,
                                            const EquivalenceQuery& q) {
  EquivalenceReport r;
  for (Semantics s : q.standard) {
    auto text = [](const ArgumentExtension& e) { return detail::set_text(e.members); };
    r.standard[s] = detail::compare_families(enumerate_argument_extensions(f, s),
                                             enumerate_argument_extensions(g, s), text);
  }
  if (q.strong_co) r.strong_co = detail::kernel_verdict(f, g);
  for (Semantics s : q.defense) {
    auto members = [&](const ArgumentationFramework& h) {
      std::vector<Defenses> out;
      for (auto& e : enumerate_defense_extensions(compute_defenses(h), s, q.options.defense))
        out.push_back(std::move(e.members));
      return out;
    };
    auto text = [](const Defenses& d) { return detail::set_text(d); };
    r.defense[s] = detail::compare_families(members(f), members(g), text);
  }
  if (q.root) {
    r.root_semantics = *q.root;
    if (q.root_arguments) {
      r.root_arguments = *q.root_arguments;
    } else {
      for (const Argument& a : f.arguments())
        if (g.contains(a)) r.root_arguments.insert(a);
    }
    detail::check_root_scope(f, g, r.root_arguments);
    auto pf = detail::root_profile(f, r.root_arguments, *q.root, q.options);
    auto pg = detail::root_profile(g, r.root_arguments, *q.root, q.options);
    auto text = [&](const std::vector<Reason>& row) {
      std::string out = "reasons (";
      std::size_t i = 0;
      for (const Argument& a : r.root_arguments) {
        if (i) out += ", ";
        out += a.name() + ":" + reason_to_string(row[i]);
        ++i;
      }
      return out + ")";
    };
    r.root = detail::compare_families(pf, pg, text);
  }
  return r;
}

}  // namespace defsem
