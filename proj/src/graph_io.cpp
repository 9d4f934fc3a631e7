#include "k24/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace k24 {

namespace {

constexpr int kBias = 63;

int decode_byte(std::string_view line, size_t pos) {
  if (pos >= line.size()) throw ParseError("truncated graph6 line", pos);
  unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126)
    throw ParseError("byte outside printable graph6 range 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 line", 0);

  size_t pos = 0;
  long long n = 0;
  int b0 = decode_byte(line, pos);
  if (b0 < 63) {
    n = b0;
    pos = 1;
  } else {
    // 126 introduces the long forms.
    if (pos + 1 >= line.size()) throw ParseError("truncated graph6 header", 1);
    if (static_cast<unsigned char>(line[1]) == 126) {
      // '~~' + 36 bits.
      pos = 2;
      for (int i = 0; i < 6; ++i) n = (n << 6) | decode_byte(line, pos + i);
      pos += 6;
    } else {
      // '~' + 18 bits.
      pos = 1;
      for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(line, pos + i);
      pos += 3;
    }
    if (n < 63) throw ParseError("malformed graph6 header: long form for small order", 0);
  }
  if (n > 10000) throw ParseError("graph order too large for this tool", 0);

  const long long bits = n * (n - 1) / 2;
  const size_t need = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos < need) throw ParseError("truncated bit vector", line.size());
  if (line.size() - pos > need) throw ParseError("unexpected trailing bytes", pos + need);

  Graph g(static_cast<int>(n));
  long long bit = 0;
  int u = 0, v = 1;  // column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (size_t k = 0; k < need; ++k) {
    int value = decode_byte(line, pos + k);
    for (int s = 5; s >= 0; --s, ++bit) {
      bool on = (value >> s) & 1;
      if (bit >= bits) {
        if (on) throw ParseError("nonzero padding bits", pos + k);
        continue;
      }
      if (on) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  int declared_n = -1;
  int max_index = -1;
  size_t line_start = 0;
  std::string text_s(text);
  std::istringstream in(text_s);
  std::string raw;
  while (std::getline(in, raw)) {
    size_t hash = raw.find('#');
    std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream ls(body);
    std::string first;
    if (!(ls >> first)) {
      line_start += raw.size() + 1;
      continue;
    }
    if (first == "n") {
      long long n;
      if (!(ls >> n) || n < 0)
        throw ParseError("bad vertex count directive", line_start);
      declared_n = static_cast<int>(n);
    } else {
      long long u, v;
      try {
        u = std::stoll(first);
      } catch (const std::exception&) {
        throw ParseError("expected vertex index", line_start);
      }
      if (!(ls >> v)) throw ParseError("expected second vertex index", line_start);
      if (u < 0 || v < 0) throw ParseError("negative vertex index", line_start);
      if (u == v) throw ParseError("self-loop in edge list", line_start);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens on edge line", line_start);
      pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
      max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
    }
    line_start += raw.size() + 1;
  }
  int n = std::max(declared_n, max_index + 1);
  if (declared_n >= 0 && max_index >= declared_n)
    throw ParseError("edge index exceeds declared vertex count", 0);
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

}  // namespace k24
