#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcx/error.hpp"
#include "mcx/graph.hpp"

namespace mcx {

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six
// bits per byte, each byte offset by 63. Only n <= 258047 fits the encoding; Graph caps
// n at 64 anyway.

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.vertex_count();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.starts_with(header)) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  if (s.empty()) throw Error(Errc::ParseError, "graph6: empty string");
  for (char c : s) {
    if (c < 63 || c > 126) throw Error(Errc::ParseError, "graph6: byte outside [63, 126]");
  }
  std::size_t pos = 0;
  int n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw Error(Errc::ParseError, "graph6: unsupported size header");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need) {
    throw Error(Errc::ParseError, "graph6: expected " + std::to_string(need) + " data bytes for n = " +
                                      std::to_string(n) + ", got " + std::to_string(s.size() - pos));
  }
  std::vector<std::pair<int, int>> pairs;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) pairs.emplace_back(i, j);
    }
  }
  for (; k < need * 6; ++k) {
    const int byte = s[pos + k / 6] - 63;
    if ((byte >> (5 - static_cast<int>(k % 6))) & 1) throw Error(Errc::ParseError, "graph6: nonzero padding bits");
  }
  return Graph::from_pairs(n, pairs);
}

// Plain edge list: "n m" on the first line, then m lines "u v" (0-based).
// Blank lines and lines starting with '#' are skipped.

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace detail {

inline bool parse_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long v = 0;
    auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc()) return false;
    i = static_cast<std::size_t>(p - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') return false;
    out.push_back(v);
  }
  return true;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::vector<long> nums;
  auto fail = [&](const std::string& why) -> Error {
    return Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + why);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::string_view sv(line);
      while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
      if (sv.empty() || sv.front() == '#' || sv == "\r") continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw Error(Errc::ParseError, "missing header line \"n m\"");
  if (!detail::parse_ints(line, nums) || nums.size() != 2) throw fail("expected header \"n m\"");
  if (nums[0] < 0 || nums[1] < 0) throw fail("negative count");
  const long n = nums[0];
  const long m = nums[1];
  if (n > Graph::kMaxVertices) throw fail("vertex count exceeds 64");
  std::vector<std::pair<int, int>> pairs;
  for (long e = 0; e < m; ++e) {
    if (!next_line()) throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(e));
    if (!detail::parse_ints(line, nums) || nums.size() != 2) throw fail("expected \"u v\"");
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n) throw fail("vertex out of range [0, " + std::to_string(n) + ")");
    if (nums[0] == nums[1]) throw fail("loop edge");
    pairs.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  if (next_line()) throw fail("trailing content after " + std::to_string(m) + " edges");
  return Graph::from_pairs(static_cast<int>(n), pairs);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace mcx
