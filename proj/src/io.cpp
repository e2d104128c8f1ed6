#include "tperfect/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tperfect {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

// Data lines of a text: trimmed, comments and blanks dropped, with 1-based
// source line numbers.
std::vector<std::pair<std::size_t, std::string_view>> data_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') out.emplace_back(line_no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError("edge list is empty");
  const auto header = tokens(lines.front().second);
  long long n = 0;
  long long m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 0 || m < 0)
    throw ParseError("line " + std::to_string(lines.front().first) + ": expected header \"n m\"");
  if (n > 1'000'000) throw ParseError("vertex count " + std::to_string(n) + " is too large");
  if (lines.size() - 1 != static_cast<std::size_t>(m))
    throw ParseError("header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                     " edge lines follow");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i].second);
    long long u = 0;
    long long v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError("line " + std::to_string(lines[i].first) + ": expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(lines[i].first) + ": edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError("line " + std::to_string(lines[i].first) + ": self-loop on " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  std::string_view s = trim(line);
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header) s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw ParseError("empty graph6 record");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character '" + std::string(1, c) + "'");

  std::size_t pos = 0;
  auto take6 = [&](int count) {
    long long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw ParseError("truncated graph6 size field");
      value = (value << 6) | (s[pos++] - 63);
    }
    return value;
  };
  long long n = 0;
  if (s[0] != 126) {
    n = take6(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take6(3);
  } else {
    pos += 2;
    n = take6(6);
  }
  if (n > 1'000'000) throw ParseError("graph6 order " + std::to_string(n) + " is too large");

  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (s.size() - pos != byte_count)
    throw ParseError("graph6 record for order " + std::to_string(n) + " needs " + std::to_string(byte_count) +
                     " data bytes, found " + std::to_string(s.size() - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  if (format == GraphFormat::Graph6) {
    const auto lines = data_lines(text);
    if (lines.size() != 1) throw ParseError("expected exactly one graph6 record, found " + std::to_string(lines.size()));
    return parse_graph6(lines.front().second);
  }
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError("no graph data");
  const auto head = tokens(lines.front().second);
  long long a = 0;
  long long b = 0;
  if (head.size() == 2 && parse_int(head[0], a) && parse_int(head[1], b)) return parse_edge_list(text);
  return parse_graph(text, GraphFormat::Graph6);
}

std::string read_text(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tperfect
