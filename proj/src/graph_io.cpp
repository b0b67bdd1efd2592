// Copyright 2026 The Grundy Toolkit Authors
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

#include "grundy/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected non-negative integer, got '" +
                         std::string(tok) + "'",
                     line);
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError("expected two integers per line", line_no);
    const auto a = parse_count(toks[0], line_no);
    const auto b = parse_count(toks[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      if (n > std::numeric_limits<Vertex>::max())
        throw ParseError("vertex count too large", line_no);
      have_header = true;
      continue;
    }
    if (edges.size() == m)
      throw ParseError("more edge lines than declared (" + std::to_string(m) +
                           ")",
                       line_no);
    if (a >= n || b >= n)
      throw ParseError("vertex id out of range for n=" + std::to_string(n),
                       line_no);
    if (a == b) throw ParseError("self-loop", line_no);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError("missing 'n m' header", line_no);
  if (edges.size() != m)
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no);
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    for (std::size_t i = 0, seen = 0; i < edges.size(); ++i)
      if (edges[i] == *dup && ++seen == 2)
        throw ParseError("duplicate edge", edge_lines[i]);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() &&
         (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6: truncated input", 1);
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid byte", 1);
    return c - 63;
  };
  std::uint64_t n = next();
  if (n == 63) {
    std::size_t digits = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      digits = 6;
    }
    n = 0;
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | next();
  }
  std::vector<Edge> edges;
  std::uint64_t chunk = 0;
  int left = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = next();
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (pos != text.size()) throw ParseError("graph6: trailing bytes", 1);
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string format_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int chunk = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  if (path.extension() == ".g6") {
    std::string line;
    std::getline(in, line);
    return parse_graph6(line);
  }
  return read_edge_list(in);
}

}  // namespace grundy
