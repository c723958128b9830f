#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "defsem/defsem.hpp"

namespace defsem::test {

inline std::string golden_path(const std::string& name) {
  return std::string(DEFSEM_DATA_DIR) + "/golden/" + name;
}

inline ArgumentationFramework golden(const std::string& stem) {
  std::ifstream in(golden_path(stem + ".apx"));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_af(ss.str(), AfFormat::apx);
}

inline Defense def(const std::string& text) { return parse_defense(text); }

inline Defenses defs(std::initializer_list<const char*> texts) {
  Defenses out;
  for (const char* t : texts) out.insert(parse_defense(t));
  return out;
}

inline ArgumentSet args(std::initializer_list<const char*> names) {
  ArgumentSet out;
  for (const char* n : names) out.emplace(n);
  return out;
}

inline std::vector<Defenses> members(const std::vector<DefenseExtension>& v) {
  std::vector<Defenses> out;
  for (const auto& e : v) out.push_back(e.members);
  return out;
}

inline std::vector<ArgumentSet> members(const std::vector<ArgumentExtension>& v) {
  std::vector<ArgumentSet> out;
  for (const auto& e : v) out.push_back(e.members);
  return out;
}

inline Reason reason(std::initializer_list<const char*> names) {
  Reason out;
  for (std::string n : names)
    out.insert(n == "TOP" ? DefenderRef::top() : DefenderRef::of(Argument(n)));
  return out;
}

inline std::vector<Reason> reasons_of(const ReasonSet& r) {
  std::vector<Reason> out;
  for (const auto& e : r.per_extension) out.push_back(e.reason);
  return out;
}

}  // namespace defsem::test
