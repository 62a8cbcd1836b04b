#include "symbreak/graph6.hpp"

#include <sstream>
#include <vector>

namespace symbreak {
namespace {

constexpr int kOffset = 63;

int decode_byte(char c, size_t pos) {
  int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63)
    throw InputError("graph6: byte " + std::to_string(pos) + " out of printable range");
  return v;
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kOffset + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kOffset + (n & 63)));
  }
  int acc = 0, bits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(kOffset + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>(kOffset + (acc << (6 - bits))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  size_t pos = 0;
  int n = 0;
  if (text[0] == 126) {
    if (text.size() >= 2 && text[1] == 126)
      throw InputError("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw InputError("graph6: truncated long-form header");
    n = (decode_byte(text[1], 1) << 12) | (decode_byte(text[2], 2) << 6) | decode_byte(text[3], 3);
    pos = 4;
  } else {
    n = decode_byte(text[0], 0);
    pos = 1;
  }
  if (n > Graph::kMaxOrder)
    throw InputError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                     std::to_string(Graph::kMaxOrder));
  const int nbits = n * (n - 1) / 2;
  const size_t expected = static_cast<size_t>((nbits + 5) / 6);
  if (text.size() - pos != expected)
    throw InputError("graph6: expected " + std::to_string(expected) + " payload bytes, got " +
                     std::to_string(text.size() - pos));
  std::vector<Edge> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int byte = decode_byte(text[pos + static_cast<size_t>(bit / 6)], pos + static_cast<size_t>(bit / 6));
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  if (nbits % 6) {
    int last = decode_byte(text.back(), text.size() - 1);
    int pad = 6 - nbits % 6;
    if (last & ((1 << pad) - 1)) throw InputError("graph6: nonzero padding bits");
  }
  return Graph::build(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw InputError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw InputError("edge list: negative count in header");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    if (u == v)
      throw InputError("edge list: self-loop (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") is not allowed");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (in >> trailing) throw InputError("edge list: trailing content '" + trailing + "'");
  return Graph::build(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace symbreak
