#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace defsem {

// Shared by the argument side (co, pr, gr, st) and the defense side
// (CO, PR, GR, ST). Only the spelling differs.
enum class Semantics { complete, preferred, grounded, stable };

inline constexpr std::array<Semantics, 4> kAllSemantics = {
    Semantics::complete, Semantics::preferred, Semantics::grounded,
    Semantics::stable};

inline std::string_view argument_semantics_name(Semantics s) {
  switch (s) {
    case Semantics::complete: return "co";
    case Semantics::preferred: return "pr";
    case Semantics::grounded: return "gr";
    case Semantics::stable: return "st";
  }
  return "?";
}

inline std::string_view defense_semantics_name(Semantics s) {
  switch (s) {
    case Semantics::complete: return "CO";
    case Semantics::preferred: return "PR";
    case Semantics::grounded: return "GR";
    case Semantics::stable: return "ST";
  }
  return "?";
}

// Accepts either spelling, case-insensitively.
inline std::optional<Semantics> parse_semantics(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
  if (lower == "co") return Semantics::complete;
  if (lower == "pr") return Semantics::preferred;
  if (lower == "gr") return Semantics::grounded;
  if (lower == "st") return Semantics::stable;
  return std::nullopt;
}

}  // namespace defsem
