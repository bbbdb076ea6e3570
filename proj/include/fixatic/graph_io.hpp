#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fixatic/error.hpp"
#include "fixatic/graph.hpp"

namespace fixatic {

/// Largest order the short graph6 form can express.
inline constexpr int kGraph6MaxOrder = 62;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses the short graph6 form. Bits of the upper triangle are read column by
/// column ((0,1), (0,2), (1,2), (0,3), ...), six per byte, each byte offset by 63.
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", base + i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kGraph6MaxOrder) throw ParseError("graph6 long form (n > 62) is not supported", base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != bytes + 1) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - 1) + " bytes, expected " +
                         std::to_string(bytes),
                     base + std::min(text.size(), bytes + 1));
  }

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bytes > 0) {
    int last = static_cast<unsigned char>(text[bytes]) - 63;
    int pad = static_cast<int>(bytes * 6 - bits);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6 padding bits are not zero", base + bytes);
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw CapacityError("graph6 encoding supports n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

/// "n m" header, then m lines "u v". Blank lines and lines starting with '#'
/// are skipped. Duplicate edges collapse.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      auto sp = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, sp));
      line = sp == std::string_view::npos ? std::string_view{} : detail::trim(line.substr(sp));
    }
    lines.push_back(std::move(tokens));
    line_numbers.push_back(line_no);
  }

  auto integer = [&](std::string_view token, std::size_t at) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("expected an integer, got '" + std::string(token) + "'", at);
    return value;
  };

  if (lines.empty()) throw ParseError("missing 'n m' header", line_no);
  if (lines[0].size() != 2) throw ParseError("header must be 'n m'", line_numbers[0]);
  const long long n = integer(lines[0][0], line_numbers[0]);
  const long long m = integer(lines[0][1], line_numbers[0]);
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", line_numbers[0]);
  if (m < 0) throw ParseError("negative edge count", line_numbers[0]);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1),
                     line_numbers[0]);

  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t at = line_numbers[i];
    if (lines[i].size() != 2) throw ParseError("edge line must be 'u v'", at);
    long long u = integer(lines[i][0], at);
    long long v = integer(lines[i][1], at);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex index out of range", at);
    if (u == v) throw ParseError("self-loop", at);
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

inline std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// Accepts either format: a header line of two integers selects the edge
/// list, anything else is read as graph6.
inline Graph parse_graph_text(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    std::string_view line = detail::trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    bool numeric = line.find_first_not_of("0123456789 \t-") == std::string_view::npos;
    return numeric ? parse_edge_list(text) : parse_graph6(line);
  }
  throw ParseError("no graph found in input", 0);
}

}  // namespace fixatic
