#ifndef EPG_GROUP_SPEC_HPP
#define EPG_GROUP_SPEC_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epg/errors.hpp"

namespace epg {

/// A permutation of {0..degree-1} in one-line image notation: p[i] is the
/// image of i.
using Permutation = std::vector<std::uint32_t>;

struct GroupSpec;

namespace family {

struct Cyclic {
  unsigned n = 1;
  bool operator==(const Cyclic&) const = default;
};

struct DirectProduct {
  std::vector<GroupSpec> parts;
  bool operator==(const DirectProduct& other) const;
};

struct Dihedral {
  unsigned m = 1;
  bool operator==(const Dihedral&) const = default;
};

struct Dicyclic {
  unsigned m = 2;
  bool operator==(const Dicyclic&) const = default;
};

struct Metacyclic {
  unsigned m = 1;
  unsigned n = 1;
  unsigned k = 1;
  bool operator==(const Metacyclic&) const = default;
};

struct PermClosure {
  unsigned degree = 0;
  std::vector<Permutation> generators;
  bool operator==(const PermClosure&) const = default;
};

struct CayleyFile {
  std::string path;
  bool operator==(const CayleyFile&) const = default;
};

}  // namespace family

/// Serializable description of how to construct a group. The display name is
/// cosmetic: equality and serialization only look at the family.
struct GroupSpec {
  using Family = std::variant<family::Cyclic, family::DirectProduct, family::Dihedral,
                              family::Dicyclic, family::Metacyclic, family::PermClosure,
                              family::CayleyFile>;

  Family family;
  std::string name;

  bool operator==(const GroupSpec& other) const { return family == other.family; }

  static GroupSpec cyclic(unsigned n) { return {family::Cyclic{n}, {}}; }
  static GroupSpec product(std::vector<GroupSpec> parts) {
    return {family::DirectProduct{std::move(parts)}, {}};
  }
  static GroupSpec dihedral(unsigned m) { return {family::Dihedral{m}, {}}; }
  static GroupSpec dicyclic(unsigned m) { return {family::Dicyclic{m}, {}}; }
  static GroupSpec metacyclic(unsigned m, unsigned n, unsigned k) {
    return {family::Metacyclic{m, n, k}, {}};
  }
  static GroupSpec perm(unsigned degree, std::vector<Permutation> gens, std::string name = {}) {
    return {family::PermClosure{degree, std::move(gens)}, std::move(name)};
  }
  static GroupSpec cayley_file(std::string path) { return {family::CayleyFile{std::move(path)}, {}}; }
};

inline bool family::DirectProduct::operator==(const DirectProduct& other) const {
  return parts == other.parts;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '"')) s.remove_suffix(1);
  return s;
}

inline unsigned parse_unsigned(std::string_view s, std::string_view what) {
  s = trim(s);
  unsigned value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last)
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" +
                     std::string(s) + "'");
  return value;
}

/// Splits on commas that are not nested inside (), [] or {}.
inline std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
    if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(s.substr(start));
  return out;
}

inline std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != ',' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses one permutation on `degree` points. Accepts cycle notation
/// "(0 1 2)(3 4)", the identity "()", or one-line images "[1 2 0]".
inline Permutation parse_permutation(std::string_view text, unsigned degree) {
  text = detail::trim(text);
  Permutation perm(degree);
  for (unsigned i = 0; i < degree; ++i) perm[i] = i;
  if (text.empty()) throw ParseError("empty permutation");

  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated one-line permutation");
    const auto tokens = detail::split_tokens(text.substr(1, text.size() - 2));
    if (tokens.size() != degree)
      throw ParseError("one-line permutation has " + std::to_string(tokens.size()) +
                       " entries, expected " + std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (unsigned i = 0; i < degree; ++i) {
      const unsigned v = detail::parse_unsigned(tokens[i], "permutation image");
      if (v >= degree || seen[v]) throw ParseError("not a permutation: '" + std::string(text) + "'");
      seen[v] = true;
      perm[i] = v;
    }
    return perm;
  }

  std::vector<bool> moved(degree, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    const auto tokens = detail::split_tokens(text.substr(pos + 1, close - pos - 1));
    std::vector<unsigned> cycle;
    for (auto tok : tokens) {
      const unsigned v = detail::parse_unsigned(tok, "cycle point");
      if (v >= degree) throw ParseError("cycle point " + std::to_string(v) + " exceeds degree");
      if (moved[v]) throw ParseError("point " + std::to_string(v) + " appears twice");
      moved[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return perm;
}

/// Cycle notation, fixed points omitted; the identity prints as "()".
inline std::string format_permutation(const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = perm[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::string to_string(const GroupSpec& spec);

namespace detail {

inline std::string serialize_part(const GroupSpec& part) {
  const auto text = to_string(part);
  const bool needs_brackets = std::holds_alternative<family::DirectProduct>(part.family) ||
                              std::holds_alternative<family::PermClosure>(part.family);
  return needs_brackets ? "[" + text + "]" : text;
}

}  // namespace detail

/// Serializes to the flat grammar accepted by parse_group_spec.
inline std::string to_string(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const family::Cyclic& c) const { return "cyclic:" + std::to_string(c.n); }
    std::string operator()(const family::DirectProduct& p) const {
      std::string out = "product:";
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i > 0) out += ',';
        out += detail::serialize_part(p.parts[i]);
      }
      return out;
    }
    std::string operator()(const family::Dihedral& d) const { return "dihedral:" + std::to_string(d.m); }
    std::string operator()(const family::Dicyclic& d) const { return "dicyclic:" + std::to_string(d.m); }
    std::string operator()(const family::Metacyclic& m) const {
      return "metacyclic:" + std::to_string(m.m) + ":" + std::to_string(m.n) + ":" + std::to_string(m.k);
    }
    std::string operator()(const family::PermClosure& p) const {
      std::string out = "perm:" + std::to_string(p.degree) + ":";
      for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i > 0) out += ',';
        out += format_permutation(p.generators[i]);
      }
      return out;
    }
    std::string operator()(const family::CayleyFile& f) const { return "file:" + f.path; }
  };
  return std::visit(Visitor{}, spec.family);
}

/// Human-readable name: the explicit name if one was given, else derived.
inline std::string display_name(const GroupSpec& spec) {
  if (!spec.name.empty()) return spec.name;
  struct Visitor {
    std::string operator()(const family::Cyclic& c) const { return "Z" + std::to_string(c.n); }
    std::string operator()(const family::DirectProduct& p) const {
      if (p.parts.empty()) return "Z1";
      std::string out;
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i > 0) out += " x ";
        const bool nested = std::holds_alternative<family::DirectProduct>(p.parts[i].family);
        out += nested ? "(" + display_name(p.parts[i]) + ")" : display_name(p.parts[i]);
      }
      return out;
    }
    std::string operator()(const family::Dihedral& d) const { return "Dih" + std::to_string(2 * d.m); }
    std::string operator()(const family::Dicyclic& d) const { return "Dic" + std::to_string(4 * d.m); }
    std::string operator()(const family::Metacyclic& m) const {
      return "Z" + std::to_string(m.m) + ":Z" + std::to_string(m.n) + "[" + std::to_string(m.k) + "]";
    }
    std::string operator()(const family::PermClosure& p) const {
      return "Perm" + std::to_string(p.degree) + "<" + to_string(GroupSpec{p, {}}).substr(5) + ">";
    }
    std::string operator()(const family::CayleyFile& f) const { return "Cayley(" + f.path + ")"; }
  };
  return std::visit(Visitor{}, spec.family);
}

/// Parses `cyclic:n`, `product:<spec>,<spec>,...`, `dihedral:m`, `dicyclic:m`,
/// `metacyclic:m:n:k`, `perm:<degree>:<gen>,<gen>,...` and `file:<path>`.
/// Product parts that themselves contain commas are wrapped in [ ].
inline GroupSpec parse_group_spec(std::string_view text) {
  text = detail::trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("group spec needs '<family>:...': '" + std::string(text) + "'");
  const auto head = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);

  if (head == "cyclic") return GroupSpec::cyclic(detail::parse_unsigned(rest, "cyclic order"));
  if (head == "dihedral") return GroupSpec::dihedral(detail::parse_unsigned(rest, "dihedral m"));
  if (head == "dicyclic") return GroupSpec::dicyclic(detail::parse_unsigned(rest, "dicyclic m"));
  if (head == "metacyclic") {
    const auto fields = detail::split_top_level(rest, ':');
    if (fields.size() != 3) throw ParseError("metacyclic needs m:n:k");
    return GroupSpec::metacyclic(detail::parse_unsigned(fields[0], "metacyclic m"),
                                 detail::parse_unsigned(fields[1], "metacyclic n"),
                                 detail::parse_unsigned(fields[2], "metacyclic k"));
  }
  if (head == "product") {
    std::vector<GroupSpec> parts;
    for (auto piece : detail::split_top_level(rest, ',')) parts.push_back(parse_group_spec(piece));
    return GroupSpec::product(std::move(parts));
  }
  if (head == "perm") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw ParseError("perm needs <degree>:<generators>");
    const unsigned degree = detail::parse_unsigned(rest.substr(0, sep), "permutation degree");
    std::vector<Permutation> gens;
    const auto gen_text = detail::trim(rest.substr(sep + 1));
    if (!gen_text.empty())
      for (auto piece : detail::split_top_level(gen_text, ',')) gens.push_back(parse_permutation(piece, degree));
    return GroupSpec::perm(degree, std::move(gens));
  }
  if (head == "file") {
    if (rest.empty()) throw ParseError("file spec needs a path");
    return GroupSpec::cayley_file(std::string(rest));
  }
  throw ParseError("unknown group family '" + std::string(head) + "'");
}

}  // namespace epg

#endif  // EPG_GROUP_SPEC_HPP
