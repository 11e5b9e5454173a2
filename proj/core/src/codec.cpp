#include "orcol/codec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <fmt/core.h>

#include "orcol/error.hpp"

namespace orcol {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

void strip_prefix(std::string_view& s, std::string_view prefix) {
  if (s.starts_with(prefix)) s.remove_prefix(prefix.size());
}

int sextet(char ch) {
  const int value = static_cast<unsigned char>(ch) - 63;
  if (value < 0 || value > 63) {
    fail(ErrorCode::MalformedHeader, fmt::format("byte {:#04x} outside the printable range", ch));
  }
  return value;
}

// The size field N(n).
int read_order(std::string_view& s) {
  if (s.empty()) fail(ErrorCode::MalformedHeader, "missing order");
  if (s[0] != '~') {
    const int n = sextet(s[0]);
    s.remove_prefix(1);
    return n;
  }
  std::size_t width = 3;
  std::size_t skip = 1;
  if (s.size() > 1 && s[1] == '~') {
    width = 6;
    skip = 2;
  }
  if (s.size() < skip + width) fail(ErrorCode::MalformedHeader, "truncated order field");
  long long n = 0;
  for (std::size_t i = 0; i < width; ++i) n = (n << 6) | sextet(s[skip + i]);
  if (n > 1'000'000) fail(ErrorCode::MalformedHeader, fmt::format("order {} too large", n));
  s.remove_prefix(skip + width);
  return static_cast<int>(n);
}

void write_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    const long long m = n;
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((m >> shift) & 63) + 63));
  }
}

std::vector<bool> read_bits(std::string_view s, std::size_t count) {
  const std::size_t chars = (count + 5) / 6;
  if (s.size() != chars) {
    fail(ErrorCode::BadLength, fmt::format("expected {} data bytes, found {}", chars, s.size()));
  }
  std::vector<bool> bits;
  bits.reserve(chars * 6);
  for (char ch : s) {
    const int value = sextet(ch);
    for (int shift = 5; shift >= 0; --shift) bits.push_back(((value >> shift) & 1) != 0);
  }
  bits.resize(count);
  return bits;
}

void write_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      value <<= 1;
      if (i + j < bits.size() && bits[i + j]) value |= 1;
    }
    out.push_back(static_cast<char>(value + 63));
  }
}

}  // namespace

OrientedGraph parse_digraph6(std::string_view text) {
  std::string_view s = trim(text);
  strip_prefix(s, ">>digraph6<<");
  if (s.empty() || s[0] != '&') fail(ErrorCode::MalformedHeader, "digraph6 must start with '&'");
  s.remove_prefix(1);
  const int n = read_order(s);
  const auto bits = read_bits(s, static_cast<std::size_t>(n) * n);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!bits[static_cast<std::size_t>(u) * n + v]) continue;
      if (u == v) fail(ErrorCode::LoopArc, fmt::format("loop at {}", u));
      if (bits[static_cast<std::size_t>(v) * n + u]) {
        fail(ErrorCode::DigonArc, fmt::format("digon between {} and {}", u, v));
      }
      arcs.push_back({u, v});
    }
  }
  return build_oriented_graph(n, arcs);
}

std::string emit_digraph6(const OrientedGraph& g) {
  const int n = g.order();
  std::string out = "&";
  write_order(out, n);
  std::vector<bool> bits(static_cast<std::size_t>(n) * n, false);
  for (const Arc& a : g.arcs()) bits[static_cast<std::size_t>(a.tail) * n + a.head] = true;
  write_bits(out, bits);
  return out;
}

SimpleGraph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  strip_prefix(s, ">>graph6<<");
  if (!s.empty() && (s[0] == '&' || s[0] == ':' || s[0] == ';')) {
    fail(ErrorCode::MalformedHeader, "not graph6 (digraph6 or sparse6 marker)");
  }
  const int n = read_order(s);
  const std::size_t count = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const auto bits = read_bits(s, count);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[k++]) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, edges);
}

std::string emit_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  write_order(out, n);
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * n / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  }
  write_bits(out, bits);
  return out;
}

OrientedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int order = -1;
  int largest = -1;
  std::vector<Arc> arcs;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream fields{std::string(t)};
    if (t[0] == 'n') {
      std::string tag;
      if (!(fields >> tag >> order) || order < 0) {
        fail(ErrorCode::MalformedHeader, fmt::format("line {}: bad order line", line_no));
      }
      continue;
    }
    Arc a;
    std::string extra;
    if (!(fields >> a.tail >> a.head) || (fields >> extra)) {
      fail(ErrorCode::MalformedHeader, fmt::format("line {}: expected 'tail head'", line_no));
    }
    largest = std::max({largest, a.tail, a.head});
    arcs.push_back(a);
  }
  return build_oriented_graph(order >= 0 ? order : largest + 1, arcs);
}

std::string emit_edge_list(const OrientedGraph& g) {
  std::string out = fmt::format("n {}\n", g.order());
  for (const Arc& a : g.arcs()) out += fmt::format("{} {}\n", a.tail, a.head);
  return out;
}

}  // namespace orcol
