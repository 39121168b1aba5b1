// Group-spec DSL: cyclic:n, dihedral:n, symmetric:n, alternating:n,
// quaternion:8, elemabelian:p:k, product(SPEC,SPEC), perm:..., cayley:@path.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "msalg/common.hpp"
#include "msalg/groups.hpp"

namespace msalg {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::uint32_t parse_u32(const std::string& s) {
  require(!s.empty(), Err::ParseError, "expected a number");
  std::uint64_t v = 0;
  for (char c : s) {
    require(c >= '0' && c <= '9', Err::ParseError, "expected a number, got '" + s + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    require(v <= 100000000, Err::ParseError, "number too large");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

inline FiniteGroup parse_group_spec(const std::string& raw) {
  std::string s = detail::trim(raw);
  require(!s.empty(), Err::ParseError, "empty group spec");

  if (s.rfind("product(", 0) == 0) {
    require(s.back() == ')', Err::ParseError, "product spec must end with ')'");
    std::string inner = s.substr(8, s.size() - 9);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    require(split != std::string::npos, Err::ParseError, "product needs two comma-separated specs");
    FiniteGroup a = parse_group_spec(inner.substr(0, split));
    FiniteGroup b = parse_group_spec(inner.substr(split + 1));
    return direct_product(a, b);
  }
  if (s.rfind("perm:", 0) == 0) {
    return from_permutations(s.substr(5), s);
  }
  if (s.rfind("cayley:@", 0) == 0) {
    std::string path = s.substr(8);
    std::ifstream in(path);
    require(static_cast<bool>(in), Err::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_cayley_table(buf.str(), s);
  }

  // family:params
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t colon = s.find(':', pos);
    if (colon == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, colon - pos));
    pos = colon + 1;
  }
  const std::string& family = parts[0];
  std::vector<std::uint32_t> params;
  for (std::size_t i = 1; i < parts.size(); ++i) params.push_back(detail::parse_u32(parts[i]));
  if (family == "cyclic" || family == "dihedral" || family == "symmetric" || family == "alternating" ||
      family == "quaternion" || family == "elemabelian") {
    return build_builtin(family, params);
  }
  fail(Err::UnknownFamily, family);
}

}  // namespace msalg
