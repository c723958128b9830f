#pragma once

// Text formats for frameworks: apx, edge lists and DOT export.
//
//   apx        arg(a). att(a,b).   whitespace-insensitive, '%' comments
//   edge-list  "src dst" per line, a lone "name" declares an isolated argument

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "defsem/af.hpp"
#include "defsem/errors.hpp"

namespace defsem {

enum class AfFormat { apx, edge_list };

namespace detail {

class ApxScanner {
 public:
  explicit ApxScanner(std::string_view text) : text_(text) {}

  // Skips blanks and comments; returns false at end of input.
  bool skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        return true;
      }
    }
    return false;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(line_, std::string("expected '") + c + "'" + found());
    ++pos_;
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) break;
      ++pos_;
    }
    if (start == pos_) throw ParseError(line_, "expected a name" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t line() const { return line_; }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return " but reached end of input";
    return std::string(" but found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

inline ArgumentationFramework parse_apx(std::string_view text) {
  ApxScanner in(text);
  ArgumentSet args;
  AttackSet atts;
  std::vector<std::pair<Attack, std::size_t>> pending;
  while (in.skip()) {
    std::size_t line = in.line();
    std::string keyword = in.word();
    if (keyword == "arg") {
      in.expect('(');
      std::string name = in.word();
      in.expect(')');
      in.expect('.');
      if (!args.emplace(name).second)
        throw ParseError(line, "duplicate declaration of argument '" + name + "'");
    } else if (keyword == "att") {
      in.expect('(');
      std::string from = in.word();
      in.expect(',');
      std::string to = in.word();
      in.expect(')');
      in.expect('.');
      Attack att{Argument(from), Argument(to)};
      if (!atts.insert(att).second)
        throw ParseError(line, "duplicate attack (" + from + "," + to + ")");
      pending.emplace_back(att, line);
    } else {
      throw ParseError(line, "unknown statement '" + keyword + "'");
    }
  }
  for (const auto& [att, line] : pending) {
    if (!args.contains(att.from))
      throw ParseError(line, "attack references undeclared argument '" + att.from.name() + "'");
    if (!args.contains(att.to))
      throw ParseError(line, "attack references undeclared argument '" + att.to.name() + "'");
  }
  return ArgumentationFramework(std::move(args), std::move(atts));
}

inline ArgumentationFramework parse_edge_list(std::string_view text) {
  ArgumentSet args;
  AttackSet atts;
  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(lines, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 2)
      throw ParseError(line, "expected '<src> <dst>' or '<name>'");
    for (const auto& tok : tokens)
      if (!is_valid_argument_name(tok))
        throw ParseError(line, "invalid argument name '" + tok + "'");
    if (tokens.size() == 1) {
      args.emplace(tokens[0]);
      continue;
    }
    Attack att{Argument(tokens[0]), Argument(tokens[1])};
    if (!atts.insert(att).second)
      throw ParseError(line, "duplicate attack (" + tokens[0] + "," + tokens[1] + ")");
    args.insert(att.from);
    args.insert(att.to);
  }
  return ArgumentationFramework(std::move(args), std::move(atts));
}

}  // namespace detail

inline ArgumentationFramework parse_af(std::string_view text, AfFormat format) {
  return format == AfFormat::apx ? detail::parse_apx(text)
                                 : detail::parse_edge_list(text);
}

inline AfFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  return ext == ".edges" || ext == ".el" || ext == ".txt" ? AfFormat::edge_list : AfFormat::apx;
}

inline ArgumentationFramework load_af(const std::filesystem::path& path,
                                      std::optional<AfFormat> format = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_af(ss.str(), format.value_or(format_for_path(path)));
}

inline std::string to_apx(const ArgumentationFramework& f) {
  std::string out;
  for (const Argument& a : f.arguments()) out += "arg(" + a.name() + ").\n";
  for (const Attack& att : f.attacks())
    out += "att(" + att.from.name() + "," + att.to.name() + ").\n";
  return out;
}

inline std::string to_edge_list(const ArgumentationFramework& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.attackers_of(i).empty() && f.attacked_by(i).empty())
      out += f.argument(i).name() + "\n";
  for (const Attack& att : f.attacks())
    out += att.from.name() + " " + att.to.name() + "\n";
  return out;
}

inline std::string to_dot(const ArgumentationFramework& f,
                          std::string_view graph_name = "af") {
  std::string out = "digraph " + std::string(graph_name) + " {\n";
  for (const Argument& a : f.arguments()) out += "  \"" + a.name() + "\";\n";
  for (const Attack& att : f.attacks())
    out += "  \"" + att.from.name() + "\" -> \"" + att.to.name() + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace defsem
