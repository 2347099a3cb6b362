#include "gim/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gim/errors.hpp"

namespace gim::io {

namespace {

constexpr int kBias = 63;

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
  }
}

int sixbits(char ch, std::size_t pos) {
  const int v = static_cast<unsigned char>(ch) - kBias;
  if (v < 0 || v > 63)
    throw InvalidInput("graph6: byte " + std::to_string(pos) + " (code " +
                       std::to_string(static_cast<unsigned char>(ch)) + ") is outside 63..126");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  put_size(out, static_cast<std::uint64_t>(g.n()));
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.n(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + kBias);
        acc = bits = 0;
      }
    }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + kBias);
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("graph6: empty input");
  if (text.front() == ':' || text.front() == '&') throw InvalidInput("graph6: sparse6/digraph6 input is not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::uint64_t>(sixbits(text[0], 0));
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) != 126) {
    if (text.size() < 4) throw InvalidInput("graph6: truncated size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sixbits(text[i], i));
    if (n <= 62) throw InvalidInput("graph6: non-canonical size field");
    pos = 4;
  } else {
    if (text.size() < 8) throw InvalidInput("graph6: truncated size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sixbits(text[i], i));
    if (n <= 258047) throw InvalidInput("graph6: non-canonical size field");
    pos = 8;
  }
  if (n > 1'000'000) throw InvalidInput("graph6: graph too large (" + std::to_string(n) + " vertices)");

  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw InvalidInput("graph6: expected " + std::to_string(nbytes) + " adjacency bytes for n = " + std::to_string(n) +
                       ", found " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  const auto nv = static_cast<Vertex>(n);
  for (Vertex j = 1; j < nv; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      const int v = sixbits(text[at], at);
      if ((v >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bit % 6 != 0) {
    const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
    const int v = sixbits(text[at], at);
    if (v & ((1 << (6 - bit % 6)) - 1)) throw InvalidInput("graph6: nonzero padding bits");
  }
  return Graph(nv, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::vector<int> line_no;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    ++line;
    start = end + 1;
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    std::size_t first = l.find_first_not_of(" \t");
    if (first == std::string_view::npos || l[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::vector<long long> nums;
    std::size_t p = first;
    while (p < l.size()) {
      long long v = 0;
      auto [q, ec] = std::from_chars(l.data() + p, l.data() + l.size(), v);
      if (ec != std::errc())
        throw InvalidInput("edge list line " + std::to_string(line) + ": expected an integer");
      nums.push_back(v);
      p = static_cast<std::size_t>(q - l.data());
      if (p < l.size() && l[p] != ' ' && l[p] != '\t')
        throw InvalidInput("edge list line " + std::to_string(line) + ": unexpected character");
      p = l.find_first_not_of(" \t", p);
      if (p == std::string_view::npos) break;
    }
    if (nums.size() != 2) throw InvalidInput("edge list line " + std::to_string(line) + ": expected two integers");
    rows.push_back(nums);
    line_no.push_back(line);
    if (end == text.size()) break;
  }
  if (rows.empty()) throw InvalidInput("edge list: missing 'n m' header");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (n < 0 || m < 0) throw InvalidInput("edge list line " + std::to_string(line_no[0]) + ": negative header value");
  if (static_cast<long long>(rows.size()) - 1 != m)
    throw InvalidInput("edge list: header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(rows.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const long long u = rows[i][0], v = rows[i][1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge list line " + std::to_string(line_no[i]) + ": vertex out of range");
    if (u == v) throw InvalidInput("edge list line " + std::to_string(line_no[i]) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<Vertex>(n), edges);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

namespace {

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
  const std::string text = read_text_file(path);
  if (ends_with(path, ".g6")) {
    std::string_view t = text;
    const auto nl = t.find('\n');
    if (nl != std::string_view::npos && nl + 1 < t.size() && t.find_first_not_of("\r\n", nl) != std::string_view::npos)
      throw InvalidInput("graph6: file holds more than one graph");
    return from_graph6(t);
  }
  if (ends_with(path, ".el")) return from_edge_list(text);
  throw InvalidInput("unrecognised graph file extension for '" + path + "' (expected .g6 or .el)");
}

void write_graph_file(const std::string& path, const Graph& g) {
  if (ends_with(path, ".g6")) return write_text_file(path, to_graph6(g) + "\n");
  if (ends_with(path, ".el")) return write_text_file(path, to_edge_list(g));
  throw InvalidInput("unrecognised graph file extension for '" + path + "' (expected .g6 or .el)");
}

}  // namespace gim::io
