// Copyright 2026 The groupctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text format for GCAI instances.
//
//   # comment lines may appear anywhere; "# rule: csr|lsr" tags the rule
//   n
//   <n lines of n characters over {0,1}; line a is phi(a, .)>
//   S: <space-separated 0-based indices>
//   T: <indices>
//   k <int>

#ifndef GROUPCTL_INSTANCE_IO_HPP_
#define GROUPCTL_INSTANCE_IO_HPP_

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupctl/gcai.hpp"
#include "groupctl/rules.hpp"

namespace groupctl {

class ParseError : public InputError {
 public:
  enum class Kind {
    syntax,
    missing_line,
    dimension,
    non_binary,
    index_range,
    duplicate_index,
    empty_set,
    not_subset,
    negative_budget,
    trailing_content,
  };

  ParseError(Kind kind, std::size_t line, std::size_t column,
             const std::string& detail)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + kind_name(kind) + ": " +
                   detail),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  static const char* kind_name(Kind kind) {
    switch (kind) {
      case Kind::syntax: return "syntax error";
      case Kind::missing_line: return "missing line";
      case Kind::dimension: return "dimension error";
      case Kind::non_binary: return "non-binary cell";
      case Kind::index_range: return "index out of range";
      case Kind::duplicate_index: return "duplicate index";
      case Kind::empty_set: return "empty set";
      case Kind::not_subset: return "S is not a subset of T";
      case Kind::negative_budget: return "negative budget";
      case Kind::trailing_content: return "trailing content";
    }
    return "error";
  }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

struct InstanceFile {
  GcaiInstance instance;
  std::optional<Rule> rule;
  std::vector<std::string> comments;  // text after '#', rule tag excluded

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

namespace detail {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline IndividualSet parse_index_list(const Line& line, std::string_view label,
                                      std::size_t n) {
  using K = ParseError::Kind;
  std::string_view body = trim(line.text);
  if (body.substr(0, label.size()) != label)
    throw ParseError(K::syntax, line.number, 1,
                     "expected '" + std::string(label) + "'");
  std::size_t pos = label.size();
  std::vector<Individual> seen;
  while (pos < body.size()) {
    if (body[pos] == ' ' || body[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t value = 0;
    const auto* begin = body.data() + pos;
    const auto [ptr, ec] = std::from_chars(begin, body.data() + body.size(), value);
    const std::size_t column = pos + 1;
    if (ec != std::errc() || (ptr != body.data() + body.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError(K::syntax, line.number, column, "expected an index");
    if (value >= n)
      throw ParseError(K::index_range, line.number, column,
                       "index " + std::to_string(value) + " not below n = " +
                           std::to_string(n));
    if (std::find(seen.begin(), seen.end(), value) != seen.end())
      throw ParseError(K::duplicate_index, line.number, column,
                       "index " + std::to_string(value) + " repeated");
    seen.push_back(value);
    pos = static_cast<std::size_t>(ptr - body.data());
  }
  if (seen.empty())
    throw ParseError(K::empty_set, line.number, 1,
                     std::string(label) + " lists no individuals");
  return IndividualSet(std::move(seen));
}

}  // namespace detail

inline InstanceFile parse_instance(std::string_view text) {
  using K = ParseError::Kind;
  std::vector<detail::Line> lines;
  std::optional<Rule> rule;
  std::vector<std::string> comments;
  std::size_t number = 0;
  std::size_t last_line = 0;
  while (!text.empty() || number == 0) {
    const auto cut = text.find('\n');
    std::string_view raw = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++number;
    last_line = number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (!raw.empty() && raw.front() == '#') {
      const std::string_view body = raw.substr(1);
      const std::string_view t = detail::trim(body);
      if (t.substr(0, 5) == "rule:") {
        const auto tag = detail::trim(t.substr(5));
        rule = parse_rule(tag);
        if (!rule)
          throw ParseError(K::syntax, number, 1,
                           "unknown rule '" + std::string(tag) + "'");
      } else {
        comments.emplace_back(body);
      }
      continue;
    }
    if (detail::trim(raw).empty()) {
      if (text.empty()) break;
      continue;
    }
    lines.push_back({number, raw});
  }

  std::size_t cursor = 0;
  auto next_line = [&](const char* what) -> const detail::Line& {
    if (cursor >= lines.size())
      throw ParseError(K::missing_line, last_line, 1,
                       std::string("expected ") + what);
    return lines[cursor++];
  };

  const detail::Line& header = next_line("the individual count");
  const std::string_view count_text = detail::trim(header.text);
  std::size_t n = 0;
  {
    const auto [ptr, ec] = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), n);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() || n == 0)
      throw ParseError(K::syntax, header.number, 1,
                       "expected a positive individual count");
  }

  std::vector<std::string> rows;
  for (std::size_t a = 0; a < n; ++a) {
    const detail::Line& line = next_line("a profile row");
    const std::string_view row = detail::trim(line.text);
    if (!row.empty() && (row[0] == 'S' || row[0] == 'T' || row[0] == 'k') &&
        row.size() != n)
      throw ParseError(K::dimension, line.number, 1,
                       "profile has " + std::to_string(a) + " rows, expected " +
                           std::to_string(n));
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != '0' && row[c] != '1')
        throw ParseError(K::non_binary, line.number, c + 1,
                         "row " + std::to_string(a) + " has cell '" +
                             std::string(1, row[c]) + "'");
    if (row.size() != n)
      throw ParseError(K::dimension, line.number, 1,
                       "row " + std::to_string(a) + " has " +
                           std::to_string(row.size()) + " cells, expected " +
                           std::to_string(n));
    rows.emplace_back(row);
  }

  const detail::Line& s_line = next_line("the S line");
  const IndividualSet s = detail::parse_index_list(s_line, "S:", n);
  const detail::Line& t_line = next_line("the T line");
  const IndividualSet t = detail::parse_index_list(t_line, "T:", n);
  if (!s.is_subset_of(t))
    throw ParseError(K::not_subset, s_line.number, 1,
                     "S lists " + minus(s, t).to_string() + " outside T");

  const detail::Line& k_line = next_line("the k line");
  const std::string_view kt = detail::trim(k_line.text);
  if (kt.size() < 2 || kt[0] != 'k' || (kt[1] != ' ' && kt[1] != '\t'))
    throw ParseError(K::syntax, k_line.number, 1, "expected 'k <int>'");
  const std::string_view kv = detail::trim(kt.substr(1));
  long long k = 0;
  {
    const auto [ptr, ec] = std::from_chars(kv.data(), kv.data() + kv.size(), k);
    if (ec != std::errc() || ptr != kv.data() + kv.size())
      throw ParseError(K::syntax, k_line.number, 3, "expected an integer budget");
  }
  if (k < 0)
    throw ParseError(K::negative_budget, k_line.number, 3,
                     "budget " + std::to_string(k) + " is negative");
  if (cursor < lines.size())
    throw ParseError(K::trailing_content, lines[cursor].number, 1,
                     "unexpected line after the budget");

  return InstanceFile{
      GcaiInstance(Profile::from_strings(rows), s, t,
                   static_cast<std::size_t>(k)),
      rule, std::move(comments)};
}

inline std::string serialize_instance(const InstanceFile& file) {
  std::string out;
  if (file.rule) out += "# rule: " + std::string(to_string(*file.rule)) + "\n";
  for (const auto& c : file.comments) out += "#" + c + "\n";
  const GcaiInstance& inst = file.instance;
  out += std::to_string(inst.size()) + "\n";
  for (Individual a = 0; a < inst.size(); ++a)
    out += inst.profile().row_string(a) + "\n";
  auto list = [&](const char* label, const IndividualSet& set) {
    out += label;
    for (Individual a : set) out += " " + std::to_string(a);
    out += "\n";
  };
  list("S:", inst.distinguished());
  list("T:", inst.group());
  out += "k " + std::to_string(inst.budget()) + "\n";
  return out;
}

inline std::string serialize_instance(const GcaiInstance& inst) {
  return serialize_instance(InstanceFile{inst, std::nullopt, {}});
}

}  // namespace groupctl

#endif  // GROUPCTL_INSTANCE_IO_HPP_
