#include <cctype>

#include "noether/frontend.hpp"

namespace noether {

namespace {

struct Section {
  std::string key;
  std::string body;
  SourcePos origin;  // position of the first body character
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// "key:" at the start of a line, key made of lowercase letters and '_'.
std::optional<std::size_t> header_length(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (std::islower(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
  if (i == 0 || i >= line.size() || line[i] != ':') return std::nullopt;
  return i;
}

std::string strip_comment(std::string_view line) {
  const auto k = line.find('#');
  return std::string(k == std::string_view::npos ? line : line.substr(0, k));
}

// Splits a generator list at top-level commas and at line breaks between
// complete expressions. Each piece keeps the position of its first
// non-blank character.
std::vector<std::pair<std::string, SourcePos>> split_generators(const std::string& body, SourcePos origin) {
  std::vector<std::pair<std::string, SourcePos>> out;
  std::string cur;
  SourcePos start{}, pos = origin;
  bool have_start = false;
  int depth = 0;
  auto last_char = [&]() -> char {
    for (auto it = cur.rbegin(); it != cur.rend(); ++it)
      if (!std::isspace(static_cast<unsigned char>(*it))) return *it;
    return '\0';
  };
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty()) out.emplace_back(t, start);
    cur.clear();
    have_start = false;
  };
  auto next_significant = [&](std::size_t from) -> char {
    for (std::size_t k = from; k < body.size(); ++k)
      if (!std::isspace(static_cast<unsigned char>(body[k]))) return body[k];
    return '\0';
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == ',') {
      flush();
    } else if (depth == 0 && c == '\n') {
      const char prev = last_char();
      const char next = next_significant(i + 1);
      const bool continues = std::string_view("+-*/^(").find(prev) != std::string_view::npos ||
                             (next != '\0' && std::string_view("+-*/^)").find(next) != std::string_view::npos);
      if (prev != '\0' && !continues) flush();
      else cur += c;
    } else {
      if (!have_start && !std::isspace(static_cast<unsigned char>(c))) {
        start = pos;
        have_start = true;
      }
      cur += c;
    }
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  flush();
  return out;
}

std::vector<QPoly> parse_generators(const Section& s, const VariableRing& ring) {
  std::vector<QPoly> out;
  for (const auto& [text, at] : split_generators(s.body, s.origin)) out.push_back(parse_polynomial(text, ring, at));
  return out;
}

}  // namespace

std::optional<std::string> ProblemFile::option(const std::string& key) const {
  auto it = options.find(key);
  if (it == options.end()) return std::nullopt;
  return it->second;
}

ProblemFile parse_problem(std::string_view text, const VariableRing* fallback_ring) {
  std::vector<Section> sections;
  std::size_t line_no = 0;
  std::size_t start = 0;
  std::string bare;
  SourcePos bare_origin{};
  bool bare_started = false;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    const std::string line = strip_comment(raw);
    std::size_t indent = 0;
    while (indent < line.size() && std::isspace(static_cast<unsigned char>(line[indent]))) ++indent;
    const std::string_view rest = std::string_view(line).substr(indent);
    if (auto k = header_length(rest); k && indent == 0) {
      Section s;
      s.key = std::string(rest.substr(0, *k));
      s.body = std::string(rest.substr(*k + 1));
      s.origin = {line_no, indent + *k + 2};
      for (const auto& prev : sections)
        if (prev.key == s.key) fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": duplicate key '" + s.key + "'");
      sections.push_back(std::move(s));
    } else if (!sections.empty()) {
      sections.back().body += "\n" + line;
    } else if (!trim(line).empty()) {
      if (!bare_started) {
        bare_origin = {line_no, 1};
        bare_started = true;
      }
      bare += line + "\n";
    } else if (bare_started) {
      bare += "\n";
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }

  ProblemFile pf;
  if (sections.empty()) {
    if (!fallback_ring) fail(ErrorKind::ParseError, "no 'ring:' declaration");
    pf.ring = *fallback_ring;
    pf.ideal = parse_generators({"ideal", bare, bare_origin}, pf.ring);
    return pf;
  }
  if (bare_started) fail(ErrorKind::ParseError, "line " + std::to_string(bare_origin.line) + ": text before the first key");

  const Section* ring_section = nullptr;
  for (const auto& s : sections)
    if (s.key == "ring") ring_section = &s;
  if (ring_section) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : ring_section->body + ",") {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) {
          const bool ok = (std::isalpha(static_cast<unsigned char>(cur[0])) || cur[0] == '_') &&
                          std::all_of(cur.begin(), cur.end(), [](char ch) {
                            return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                          });
          if (!ok) fail(ErrorKind::ParseError, "line " + std::to_string(ring_section->origin.line) +
                                                   ": invalid variable name '" + cur + "'");
          names.push_back(cur);
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (names.empty()) fail(ErrorKind::ParseError, "empty ring declaration");
    pf.ring = VariableRing(std::move(names));
    pf.has_ring = true;
  } else if (fallback_ring) {
    pf.ring = *fallback_ring;
  } else {
    fail(ErrorKind::ParseError, "no 'ring:' declaration");
  }

  for (const auto& s : sections) {
    if (s.key == "ring") continue;
    if (s.key == "ideal") {
      pf.ideal = parse_generators(s, pf.ring);
    } else if (s.key == "prime") {
      pf.prime = parse_generators(s, pf.ring);
    } else if (s.key == "indep") {
      const std::string v = trim(s.body);
      if (v == "auto" || v.empty()) pf.independent.reset();
      else if (v == "none") pf.independent = std::vector<std::size_t>{};
      else pf.independent = parse_variable_list(v, pf.ring);
    } else {
      pf.options[s.key] = trim(s.body);
    }
  }
  return pf;
}

}  // namespace noether
