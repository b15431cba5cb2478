#include "contracta/io.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "contracta/error.hpp"

namespace contracta {
namespace {

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

bool parse_nonneg(const std::string& s, long& out) {
  if (s.empty() || s.size() > 9) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
  std::istringstream ls(line);
  std::string t1, t2, extra;
  if (!(ls >> t1 >> t2) || (ls >> extra)) return false;
  return parse_nonneg(t1, a) && parse_nonneg(t2, b);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string header = ">>graph6<<";
  if (end - begin >= header.size() && text.compare(begin, header.size(), header) == 0)
    begin += header.size();
  if (begin >= end) throw MalformedGraph6("empty graph6 input", begin);

  auto byte_at = [&](size_t i) -> int {
    if (i >= end) throw MalformedGraph6("truncated graph6 input", i);
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw MalformedGraph6("invalid graph6 character", i);
    return c - 63;
  };

  size_t pos = begin;
  long n = byte_at(pos);
  if (n < 63) {
    ++pos;
  } else {  // '~' prefix: 18-bit order
    ++pos;
    if (pos < end && text[pos] == '~')
      throw MalformedGraph6("graph6 orders above 258047 are not supported", pos);
    long v = 0;
    for (int k = 0; k < 3; ++k) v = (v << 6) | byte_at(pos + k);
    pos += 3;
    n = v;
  }
  if (n > 64) throw MalformedGraph6("graph6 order exceeds 64", begin);

  std::vector<Word> rows(static_cast<size_t>(n), 0);
  int cur = 0, have = 0;
  size_t cur_pos = pos;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        cur = byte_at(pos);
        cur_pos = pos;
        ++pos;
        have = 6;
      }
      if ((cur >> (have - 1)) & 1) {
        rows[i] |= Word{1} << j;
        rows[j] |= Word{1} << i;
      }
      --have;
    }
  }
  if (have > 0 && (cur & ((1 << have) - 1)) != 0)
    throw MalformedGraph6("nonzero padding bits", cur_pos);
  if (pos != end) throw MalformedGraph6("trailing bytes after graph6 data", pos);
  return Graph::from_adjacency(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int cur = 0, have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        have = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
  return out;
}

Graph parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    long a = 0, b = 0;
    if (!parse_two_ints(line, a, b))
      throw MalformedEdgeList("expected two nonnegative integers", lineno);
    if (!have_header) {
      have_header = true;
      n = a;
      m = b;
      if (n > 64) throw MalformedEdgeList("vertex count out of range", lineno);
      continue;
    }
    if (static_cast<long>(edges.size()) >= m)
      throw MalformedEdgeList("more edges than declared", lineno);
    if (a >= n || b >= n) throw MalformedEdgeList("vertex out of range", lineno);
    if (a == b) throw MalformedEdgeList("self-loop", lineno);
    const Edge e(static_cast<int>(a), static_cast<int>(b));
    if (!seen.insert({e.u, e.v}).second) throw MalformedEdgeList("duplicate edge", lineno);
    edges.push_back(e);
  }
  if (!have_header) throw MalformedEdgeList("missing header line", 1);
  if (static_cast<long>(edges.size()) != m)
    throw MalformedEdgeList("fewer edges than declared", lineno + 1);
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g, std::span<const std::string> labels) {
  auto name = [&](int v) -> std::string {
    if (static_cast<size_t>(v) >= labels.size()) return std::to_string(v);
    std::string quoted = "\"";
    for (char c : labels[v]) {
      if (c == '"' || c == '\\') quoted.push_back('\\');
      quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
  };
  std::ostringstream out;
  out << "graph {\n";
  for (const Edge& e : g.edges()) out << "  " << name(e.u) << " -- " << name(e.v) << ";\n";
  for (int v : g.vertices())
    if (g.degree(v) == 0) out << "  " << name(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace contracta
