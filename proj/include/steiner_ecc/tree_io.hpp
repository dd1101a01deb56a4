#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "steiner_ecc/tree.hpp"

namespace steiner_ecc {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline bool parse_index(std::string_view token, Vertex& out) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace detail

/// One edge per line as two whitespace-separated nonnegative integers.
/// Lines starting with '#' and blank lines are ignored.
inline std::vector<Edge> parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    std::string a, b, extra;
    Edge e;
    if (!(fields >> a >> b) || (fields >> extra) ||
        !detail::parse_index(a, e.u) || !detail::parse_index(b, e.v)) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) +
                      ": expected two nonnegative integers, got '" +
                      std::string(body) + "'");
    }
    edges.push_back(e);
  }
  return edges;
}

inline Tree read_edge_list(std::istream& in) {
  const auto edges = parse_edge_list(in);
  return from_edge_list(edges);
}

inline Tree read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Tree& t) {
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string edge_list_string(const Tree& t) {
  std::ostringstream out;
  write_edge_list(out, t);
  return out.str();
}

/// Comma-separated nonnegative integers; blank text is an empty list.
inline std::vector<std::size_t> parse_integer_list(std::string_view text) {
  std::vector<std::size_t> code;
  const auto body = detail::trim(text);
  if (body.empty()) return code;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const auto token = detail::trim(
        body.substr(pos, comma == std::string_view::npos ? body.size() - pos
                                                         : comma - pos));
    Vertex value = 0;
    if (!detail::parse_index(token, value)) {
      throw Error(ErrorCode::ParseError,
                  "bad list entry '" + std::string(token) + "'");
    }
    code.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return code;
}

/// Prüfer code text: one comma-separated line; an empty line is the code
/// of the two-vertex tree.
inline std::vector<Vertex> parse_prufer(std::string_view text) {
  return parse_integer_list(text);
}

inline std::string format_prufer(const std::vector<Vertex>& code) {
  std::string s;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(code[i]);
  }
  return s;
}

}  // namespace steiner_ecc
